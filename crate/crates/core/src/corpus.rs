//! Exhaustive lists of small trees and connected graphs up to isomorphism.
//!
//! Trees grow by attaching a leaf and are deduplicated by their centre-rooted
//! code; connected graphs grow by adding a vertex joined to a nonempty subset
//! and are deduplicated by canonical certificate. Both orders are the
//! deterministic generation order.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{free_tree_code, Graph};
use crate::symmetry::{canonical_certificate, canonical_form};

pub const MAX_TREE_ORDER: usize = 14;
pub const MAX_CONNECTED_ORDER: usize = 8;

/// Number of unlabelled trees on `n` vertices, `n = 1..=14`.
pub const TREE_COUNTS: [usize; MAX_TREE_ORDER] =
    [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

/// Number of unlabelled connected graphs on `n` vertices, `n = 1..=8`.
pub const CONNECTED_COUNTS: [usize; MAX_CONNECTED_ORDER] = [1, 1, 2, 6, 21, 112, 853, 11117];

fn check_order(n: usize, max: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Contract(format!("{what} need at least one vertex")));
    }
    if n > max {
        return Err(Error::TooLarge(format!(
            "{what} are enumerated up to {max} vertices, asked for {n}"
        )));
    }
    Ok(())
}

/// `levels[i]`: every tree on `i + 1` vertices, for `i + 1 <= max_n`.
pub fn trees_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    check_order(max_n, MAX_TREE_ORDER, "trees")?;
    let mut levels = vec![vec![Graph::empty(1)]];
    while levels.len() < max_n {
        let n = levels.len();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &levels[n - 1] {
            for v in 0..n {
                let mut edges = t.edges().to_vec();
                edges.push((v, n));
                let grown = Graph::new(n + 1, edges)?;
                if seen.insert(free_tree_code(&grown).expect("leaf addition keeps a tree")) {
                    next.push(grown);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Every tree on exactly `n` vertices.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    Ok(trees_up_to(n)?.pop().unwrap_or_default())
}

/// `levels[i]`: every connected graph on `i + 1` vertices in canonical form.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    check_order(max_n, MAX_CONNECTED_ORDER, "connected graphs")?;
    let mut levels = vec![vec![Graph::empty(1)]];
    while levels.len() < max_n {
        let n = levels.len();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for mask in 1u32..(1 << n) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n)));
                let grown = Graph::new(n + 1, edges)?;
                if seen.insert(canonical_certificate(&grown)) {
                    next.push(canonical_form(&grown));
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Every connected graph on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.pop().unwrap_or_default())
}
