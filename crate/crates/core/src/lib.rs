//! Colourings with provably smaller symmetry on finite connected graphs.
//!
//! * [`desymm::vertex_to_edge`] turns a vertex colouring of any connected graph
//!   that is not a bicentred tree into an edge colouring with no more colours
//!   whose stabiliser is contained in the original one.
//! * [`desymm::edge_to_vertex`] does the converse on trees.
//! * [`distinguishing`] computes distinguishing numbers and indices and decides
//!   membership in the family of bicentred trees where the index exceeds the
//!   number.
//!
//! Everything works on explicit automorphism enumeration and is meant for small
//! graphs (a few dozen vertices, groups capped at [`symmetry::DEFAULT_GROUP_CAP`]).

pub mod colouring;
pub mod corpus;
pub mod desymm;
pub mod distinguishing;
pub mod error;
pub mod graph;
pub mod symmetry;

pub use colouring::{ColourGroup, Colouring, EdgeColouring, VertexColouring};
pub use error::{Error, Result};
pub use graph::Graph;
