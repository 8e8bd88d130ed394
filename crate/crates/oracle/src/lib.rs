//! Definitional, exponential-time reference computations.
//!
//! Everything here works on a plain vertex count plus edge list, with edge
//! indices meaning positions in that list, and shares no code with
//! `desym-core`. Only suitable for graphs with a handful of vertices.

use std::collections::{BTreeSet, HashMap};

fn edge_lookup(edges: &[(usize, usize)]) -> HashMap<(usize, usize), usize> {
    edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [((u, v), i), ((v, u), i)])
        .collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every permutation of `0..n` that maps edges to edges, in lexicographic order.
pub fn automorphisms(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let lookup = edge_lookup(edges);
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        if edges
            .iter()
            .all(|&(u, v)| lookup.contains_key(&(p[u], p[v])))
        {
            out.push(p.clone());
        }
        if !next_permutation(&mut p) {
            return out;
        }
    }
}

/// Edge permutation induced by a vertex automorphism.
pub fn edge_action(edges: &[(usize, usize)], perm: &[usize]) -> Vec<usize> {
    let lookup = edge_lookup(edges);
    edges
        .iter()
        .map(|&(u, v)| lookup[&(perm[u], perm[v])])
        .collect()
}

pub fn preserves_vertices(perm: &[usize], colours: &[u32]) -> bool {
    (0..perm.len()).all(|v| colours[perm[v]] == colours[v])
}

pub fn preserves_edges(edges: &[(usize, usize)], perm: &[usize], colours: &[u32]) -> bool {
    edge_action(edges, perm)
        .iter()
        .enumerate()
        .all(|(e, &f)| colours[e] == colours[f])
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    components(n, edges, &[]).iter().all(|&c| c == 0)
}

fn components(n: usize, edges: &[(usize, usize)], skip: &[usize]) -> Vec<usize> {
    let mut comp: Vec<usize> = (0..n).collect();
    // Naive relaxation until a fixed point.
    loop {
        let mut changed = false;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if skip.contains(&i) {
                continue;
            }
            let m = comp[u].min(comp[v]);
            if comp[u] != m || comp[v] != m {
                comp[u] = m;
                comp[v] = m;
                changed = true;
            }
        }
        if !changed {
            return comp;
        }
    }
}

/// Edges whose deletion increases the number of components.
pub fn bridges(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let count = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
    let base = count(&components(n, edges, &[]));
    (0..edges.len())
        .filter(|&e| count(&components(n, edges, &[e])) > base)
        .collect()
}

/// A simple cycle as its closed vertex sequence and its edge index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Every simple cycle exactly once. Vertex sequences start at their least
/// vertex and continue toward the smaller of its two cycle neighbours.
pub fn simple_cycles(n: usize, edges: &[(usize, usize)]) -> Vec<SimpleCycle> {
    let lookup = edge_lookup(edges);
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut out = Vec::new();
    for s in 0..n {
        let mut path = vec![s];
        let mut on = vec![false; n];
        on[s] = true;
        extend(s, &adj, &lookup, &mut path, &mut on, &mut out);
    }
    out
}

fn extend(
    s: usize,
    adj: &[Vec<usize>],
    lookup: &HashMap<(usize, usize), usize>,
    path: &mut Vec<usize>,
    on: &mut [bool],
    out: &mut Vec<SimpleCycle>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == s && path.len() >= 3 && path[1] < last {
            let mut es: Vec<usize> = path.windows(2).map(|p| lookup[&(p[0], p[1])]).collect();
            es.push(lookup[&(last, s)]);
            es.sort_unstable();
            out.push(SimpleCycle {
                vertices: path.clone(),
                edges: es,
            });
        }
        if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            extend(s, adj, lookup, path, on, out);
            path.pop();
            on[w] = false;
        }
    }
}

/// Classes of "every cycle through e contains f" over edges on some cycle,
/// each sorted, ordered by least member.
pub fn equivalence_classes(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let cycles = simple_cycles(n, edges);
    let on_cycle: BTreeSet<usize> = cycles
        .iter()
        .flat_map(|c| c.edges.iter().copied())
        .collect();
    let related = |e: usize, f: usize| {
        cycles
            .iter()
            .filter(|c| c.edges.contains(&e))
            .all(|c| c.edges.contains(&f))
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &e in &on_cycle {
        if classes.iter().any(|c| c.contains(&e)) {
            continue;
        }
        classes.push(
            on_cycle
                .iter()
                .copied()
                .filter(|&f| related(e, f))
                .collect(),
        );
    }
    classes
}

/// Least `k <= max_k` admitting a vertex colouring with trivial stabiliser.
pub fn distinguishing_number(n: usize, edges: &[(usize, usize)], max_k: u32) -> Option<u32> {
    let aut = automorphisms(n, edges);
    (1..=max_k).find(|&k| {
        any_colouring(n, k, |c| {
            aut.iter().skip(1).all(|p| !preserves_vertices(p, c))
        })
    })
}

/// Least `k <= max_k` admitting an edge colouring with trivial stabiliser.
pub fn distinguishing_index(n: usize, edges: &[(usize, usize)], max_k: u32) -> Option<u32> {
    let aut = automorphisms(n, edges);
    let actions: Vec<Vec<usize>> = aut.iter().skip(1).map(|p| edge_action(edges, p)).collect();
    (1..=max_k).find(|&k| {
        any_colouring(edges.len(), k, |c| {
            actions
                .iter()
                .all(|act| act.iter().enumerate().any(|(e, &f)| c[e] != c[f]))
        })
    })
}

/// Runs `pred` over all `k^len` colourings in lexicographic order.
pub fn any_colouring(len: usize, k: u32, mut pred: impl FnMut(&[u32]) -> bool) -> bool {
    let mut c = vec![0u32; len];
    loop {
        if pred(&c) {
            return true;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
        }
    }
}

/// All `k^len` colourings, lexicographic.
pub fn all_colourings(len: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    any_colouring(len, k, |c| {
        out.push(c.to_vec());
        false
    });
    out
}
