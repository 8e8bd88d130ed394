//! Small named graphs used throughout tests, fixtures and examples.

use super::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("named family is a simple graph")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Star with centre `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Adjacent centres `0` and `1` carrying `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> Graph {
    let edges = std::iter::once((0, 1))
        .chain((0..a).map(|i| (0, 2 + i)))
        .chain((0..b).map(|i| (1, 2 + a + i)));
    build(2 + a + b, edges)
}

/// Hubs `0` and `1` joined by three internally disjoint paths with the given
/// edge counts (at most one of them may be 1).
pub fn theta(a: usize, b: usize, c: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    build(next, edges)
}

/// Ladder with `rungs` rungs: rails `0..r` and `r..2r`, rungs `(i, r + i)`.
pub fn ladder(rungs: usize) -> Graph {
    let r = rungs;
    let rails = (1..r).flat_map(|i| [(i - 1, i), (r + i - 1, r + i)]);
    build(2 * r, rails.chain((0..r).map(|i| (i, r + i))))
}

/// The 3-cube; vertices are bit masks, edges flip one bit.
pub fn cube() -> Graph {
    build(
        8,
        (0..8).flat_map(|v| {
            [1, 2, 4]
                .into_iter()
                .filter(move |b| v & b == 0)
                .map(move |b| (v, v | b))
        }),
    )
}

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// The 22-vertex bicentred tree with centres `0` and `1`, each carrying two
/// leaves and four pendant paths with two edges. Centre `0` has children
/// `2..8`, of which `2..6` continue to `8..12`; centre `1` mirrors this on
/// `12..18` and `18..22`.
pub fn sharp_tree_example() -> Graph {
    let mut edges = vec![(0, 1)];
    for (centre, first, second) in [(0, 2, 8), (1, 12, 18)] {
        edges.extend((0..6).map(|i| (centre, first + i)));
        edges.extend((0..4).map(|i| (first + i, second + i)));
    }
    build(22, edges)
}
