//! Bridges, the cycle-edge equivalence `e ~ f` ("every cycle through `e` also
//! passes through `f`"), forest distances and constrained cycles.

use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;
use crate::error::{contract, Result};

/// Bridge flags per edge for `g` with the `removed` edges deleted.
fn bridge_mask(g: &Graph, removed: &[bool]) -> Vec<bool> {
    let n = g.n();
    let mut is_bridge = vec![false; g.m()];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    // Frame: (vertex, edge used to enter it, next incident position).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, via, ref mut pos)) = stack.last_mut() {
            if let Some(&(w, e)) = g.incident(v).get(*pos) {
                *pos += 1;
                if e == via || removed[e] {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        is_bridge[via] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

/// Indices of the edges whose removal disconnects `g`.
pub fn bridges(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected()?;
    let mask = bridge_mask(g, &vec![false; g.m()]);
    Ok((0..g.m()).filter(|&e| mask[e]).collect())
}

/// Indices of the edges lying on at least one cycle (the complement of the bridges).
pub fn cycle_edges(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected()?;
    let mask = bridge_mask(g, &vec![false; g.m()]);
    Ok((0..g.m()).filter(|&e| !mask[e]).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// The class edges form one path.
    Path,
    /// The class edges form a whole cycle.
    Cycle,
    /// At least two vertex-disjoint paths.
    Disjoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
    pub kind: ClassKind,
}

impl EquivalenceClass {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleStructure {
    cycle_edges: Vec<usize>,
    classes: Vec<EquivalenceClass>,
    class_of: Vec<Option<usize>>,
}

impl CycleStructure {
    /// E_C, ascending.
    pub fn cycle_edges(&self) -> &[usize] {
        &self.cycle_edges
    }

    /// Classes ordered by their least edge index.
    pub fn classes(&self) -> &[EquivalenceClass] {
        &self.classes
    }

    /// Class index of edge `e`, or `None` for bridges.
    pub fn class_of(&self, e: usize) -> Option<usize> {
        self.class_of[e]
    }

    pub fn classes_of_kind(
        &self,
        kind: ClassKind,
    ) -> impl Iterator<Item = (usize, &EquivalenceClass)> {
        self.classes
            .iter()
            .enumerate()
            .filter(move |(_, c)| c.kind == kind)
    }

    /// E_P: every edge belonging to a path class, ascending.
    pub fn path_class_edges(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .classes_of_kind(ClassKind::Path)
            .flat_map(|(_, c)| c.edges.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// `(class index, edge count)` for every path class.
    pub fn path_class_lengths(&self) -> Vec<(usize, usize)> {
        self.classes_of_kind(ClassKind::Path)
            .map(|(i, c)| (i, c.len()))
            .collect()
    }
}

/// Partitions E_C into `~`-classes and classifies each.
///
/// For distinct cycle edges, `e ~ f` holds exactly when `e` is a bridge of `g - f`:
/// a cycle through `e` avoiding `f` is the same thing as `e` lying on a cycle of `g - f`.
pub fn equivalence_classes(g: &Graph) -> Result<CycleStructure> {
    g.require_connected()?;
    let m = g.m();
    let base = bridge_mask(g, &vec![false; m]);
    let cycle_edges: Vec<usize> = (0..m).filter(|&e| !base[e]).collect();
    let mut class_of = vec![None; m];
    let mut classes = Vec::new();
    let mut removed = vec![false; m];
    for &f in &cycle_edges {
        if class_of[f].is_some() {
            continue;
        }
        removed[f] = true;
        let mask = bridge_mask(g, &removed);
        removed[f] = false;
        let id = classes.len();
        let mut edges = vec![f];
        class_of[f] = Some(id);
        for &e in &cycle_edges {
            if e != f && mask[e] {
                debug_assert!(class_of[e].is_none());
                class_of[e] = Some(id);
                edges.push(e);
            }
        }
        edges.sort_unstable();
        let kind = classify(g, &edges);
        classes.push(EquivalenceClass { edges, kind });
    }
    Ok(CycleStructure {
        cycle_edges,
        classes,
        class_of,
    })
}

fn classify(g: &Graph, edges: &[usize]) -> ClassKind {
    let mut degree = vec![0usize; g.n()];
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for &e in edges {
        let (u, v) = g.edge(e);
        degree[u] += 1;
        degree[v] += 1;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let touched: Vec<usize> = (0..g.n()).filter(|&v| degree[v] > 0).collect();
    let mut roots: Vec<usize> = touched.iter().map(|&v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() > 1 {
        ClassKind::Disjoint
    } else if touched.iter().all(|&v| degree[v] == 2) {
        ClassKind::Cycle
    } else {
        ClassKind::Path
    }
}

/// Vertices of a path class in order, starting from its lower-indexed end, and
/// the edges between consecutive vertices.
pub fn path_walk(g: &Graph, edges: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut degree = std::collections::BTreeMap::new();
    for &e in edges {
        let (u, v) = g.edge(e);
        *degree.entry(u).or_insert(0) += 1;
        *degree.entry(v).or_insert(0) += 1;
    }
    let start = *degree
        .iter()
        .find(|(_, &d)| d == 1)
        .expect("a path has an end")
        .0;
    walk_from(g, edges, start, None)
}

/// Closed walk around a cycle class: starts at its least vertex and moves
/// first toward that vertex's least neighbour on the cycle.
pub fn cycle_walk(g: &Graph, edges: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let start = edges
        .iter()
        .map(|&e| g.edge(e).0)
        .min()
        .expect("nonempty class");
    let first = edges
        .iter()
        .filter_map(|&e| {
            let (u, v) = g.edge(e);
            (u == start || v == start).then(|| g.other_end(e, start))
        })
        .min()
        .expect("cycle vertex has two cycle neighbours");
    walk_from(g, edges, start, Some(first))
}

fn walk_from(
    g: &Graph,
    edges: &[usize],
    start: usize,
    first: Option<usize>,
) -> (Vec<usize>, Vec<usize>) {
    let mut remaining = edges.to_vec();
    let mut verts = vec![start];
    let mut walk = Vec::with_capacity(edges.len());
    let mut at = start;
    while !remaining.is_empty() {
        let step = remaining
            .iter()
            .enumerate()
            .filter(|&(_, &e)| {
                let (u, v) = g.edge(e);
                u == at || v == at
            })
            .map(|(pos, &e)| (g.other_end(e, at), pos))
            .filter(|&(w, _)| !walk.is_empty() || first.is_none_or(|f| f == w))
            .min();
        let Some((w, pos)) = step else { break };
        walk.push(remaining.swap_remove(pos));
        if w != start {
            verts.push(w);
        }
        at = w;
    }
    (verts, walk)
}

/// All-pairs distances in a graph with some edges deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    component: Vec<usize>,
}

impl DistanceTable {
    pub const UNREACHABLE: u32 = u32::MAX;

    /// Distance from `u` to `v`, `None` when they lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    /// Component id per vertex after the deletion.
    pub fn component(&self, v: usize) -> usize {
        self.component[v]
    }
}

/// Distances in `g` minus the `removed` edge indices.
pub fn forest_distances(g: &Graph, removed: &[usize]) -> DistanceTable {
    let n = g.n();
    let mut mask = vec![false; g.m()];
    for &e in removed {
        mask[e] = true;
    }
    let (_, component) = g.components_without(&mask);
    let mut dist = vec![DistanceTable::UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                if !mask[e] && row[w] == DistanceTable::UNREACHABLE {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { n, dist, component }
}

/// A simple cycle given as a closed vertex sequence (first vertex not repeated)
/// and the edges `vertices[i] -> vertices[i+1]`, closing back to `vertices[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A simple cycle through the edge `u0 v0` that leaves `u0` along `u0 w`.
///
/// The cycle is `u0, w, <shortest w-v0 path in g - u0>, v0, u0`; BFS scans
/// neighbours in increasing order, so ties resolve toward smaller vertices.
pub fn cycle_through_edge_with_first_step(
    g: &Graph,
    u0: usize,
    v0: usize,
    w: usize,
) -> Result<Option<Cycle>> {
    let e0 = g
        .edge_index(u0, v0)
        .ok_or_else(|| contract(format!("({u0}, {v0}) is not an edge")))?;
    let first = g
        .edge_index(u0, w)
        .filter(|_| w != v0)
        .ok_or_else(|| contract(format!("{w} is not a neighbour of {u0} other than {v0}")))?;
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[w] = w;
    let mut queue = VecDeque::from([w]);
    while let Some(x) = queue.pop_front() {
        if x == v0 {
            break;
        }
        for y in g.neighbours(x) {
            if y != u0 && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[v0] == usize::MAX {
        return Ok(None);
    }
    let mut back = vec![v0];
    while *back.last().unwrap() != w {
        let x = *back.last().unwrap();
        back.push(prev[x]);
    }
    back.reverse();
    let mut vertices = vec![u0];
    vertices.extend(back);
    let mut edges = vec![first];
    for pair in vertices[1..].windows(2) {
        edges.push(g.edge_index(pair[0], pair[1]).expect("BFS tree edge"));
    }
    edges.push(e0);
    Ok(Some(Cycle { vertices, edges }))
}
