//! Library side of the `desym` command-line tool.

pub mod commands;
pub mod error;
pub mod input;
pub mod sweep;

/// Version of every JSON document the tool prints.
pub const SCHEMA: u32 = 1;
