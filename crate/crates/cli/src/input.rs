use std::io::Read;

use desym_core::colouring::{
    AnyColouring, ColourGroup, ColouringDoc, EdgeColouring, VertexColouring,
};
use desym_core::graph::parse_graph;
use desym_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};

/// Reads a file, or stdin for `-`.
pub fn read_text(path: &str) -> CliResult<String> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn read_graph(path: &str) -> CliResult<Graph> {
    Ok(parse_graph(&read_text(path)?)?)
}

pub fn read_colouring(path: &str) -> CliResult<AnyColouring> {
    let doc: ColouringDoc =
        serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Json(e.to_string()))?;
    Ok(doc.into_colouring()?)
}

/// Generator for stream `stream` of `seed`, so parallel sweeps draw the same
/// values whatever the scheduling.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_values(rng: &mut ChaCha8Rng, len: usize, k: u32) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

pub fn random_vertex_colouring(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    k: u32,
) -> desym_core::Result<VertexColouring> {
    let group = ColourGroup::from_palette(k)?;
    VertexColouring::new(group, random_values(rng, g.n(), k))
}

pub fn random_edge_colouring(
    rng: &mut ChaCha8Rng,
    g: &Graph,
    k: u32,
) -> desym_core::Result<EdgeColouring> {
    let group = ColourGroup::from_palette(k)?;
    EdgeColouring::new(group, random_values(rng, g.m(), k))
}
