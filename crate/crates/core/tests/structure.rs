use desym_core::colouring::{
    alternating_walk_sum, canonical_edge_colouring, ColourGroup, VertexColouring,
};
use desym_core::corpus::connected_graphs_up_to;
use desym_core::graph::{
    bridges, equivalence_classes, parse_graph6, to_graph6, ClassKind, CycleStructure, Graph,
};
use desym_core::symmetry::{automorphisms, canonical_certificate};
use desym_oracle as oracle;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<Graph> {
    connected_graphs_up_to(7)
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

fn class_lists(cs: &CycleStructure) -> Vec<Vec<usize>> {
    cs.classes().iter().map(|c| c.edges.clone()).collect()
}

#[test]
fn classes_and_bridges_match_definitions() {
    for g in corpus() {
        let cs = equivalence_classes(&g).unwrap();
        assert_eq!(
            class_lists(&cs),
            oracle::equivalence_classes(g.n(), g.edges()),
            "{:?}",
            g.edges()
        );
        assert_eq!(bridges(&g).unwrap(), oracle::bridges(g.n(), g.edges()));
    }
}

#[test]
fn classes_do_not_cross() {
    for g in corpus() {
        let cs = equivalence_classes(&g).unwrap();
        for cycle in oracle::simple_cycles(g.n(), g.edges()) {
            let len = cycle.vertices.len();
            // Class of each edge in cyclic order.
            let seq: Vec<usize> = (0..len)
                .map(|i| {
                    let (a, b) = (cycle.vertices[i], cycle.vertices[(i + 1) % len]);
                    cs.class_of(g.edge_index(a, b).unwrap()).unwrap()
                })
                .collect();
            for i in 0..len {
                for j in i + 1..len {
                    for k in j + 1..len {
                        for l in k + 1..len {
                            let crossing = seq[i] == seq[k] && seq[j] == seq[l] && seq[i] != seq[j];
                            assert!(!crossing, "{:?} crosses on {:?}", g.edges(), cycle.vertices);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn non_class_cycles_contain_two_path_classes() {
    for g in corpus() {
        let cs = equivalence_classes(&g).unwrap();
        for cycle in oracle::simple_cycles(g.n(), g.edges()) {
            let is_class = cs.classes().iter().any(|c| c.edges == cycle.edges);
            if is_class {
                continue;
            }
            let inside = cs
                .classes_of_kind(ClassKind::Path)
                .filter(|(_, c)| c.edges.iter().all(|e| cycle.edges.contains(e)))
                .count();
            assert!(inside >= 2, "{:?} on {:?}", g.edges(), cycle.vertices);
        }
    }
}

#[test]
fn every_class_lies_in_a_cycle() {
    for g in corpus() {
        let cs = equivalence_classes(&g).unwrap();
        let cycles = oracle::simple_cycles(g.n(), g.edges());
        for class in cs.classes() {
            let on = cycles
                .iter()
                .filter(|c| class.edges.iter().all(|e| c.edges.contains(e)))
                .count();
            assert!(on > 0);
        }
    }
}

#[test]
fn groups_match_brute_force() {
    for g in connected_graphs_up_to(6).unwrap().into_iter().flatten() {
        let ours: Vec<Vec<usize>> = automorphisms(&g)
            .unwrap()
            .elements()
            .iter()
            .map(|p| p.image().to_vec())
            .collect();
        assert_eq!(ours, oracle::automorphisms(g.n(), g.edges()));
    }
}

/// Closed walks under the canonical colouring: alternating sums vanish on even
/// walks and give `-2 c(start)` on odd ones.
#[test]
fn closed_walk_identities() {
    let levels = connected_graphs_up_to(7).unwrap();
    for n in 4..=7 {
        let graphs: Vec<&Graph> = levels[n - 1].iter().filter(|g| !g.is_tree()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..100 {
            let g = graphs[rng.gen_range(0..graphs.len())];
            let k = rng.gen_range(2..=6);
            let group = ColourGroup::from_palette(k).unwrap();
            let c =
                VertexColouring::new(group.clone(), (0..n).map(|_| rng.gen_range(0..k)).collect())
                    .unwrap();
            let canonical = canonical_edge_colouring(g, &c).unwrap();
            let start = rng.gen_range(0..n);
            let (walk, ends) = random_closed_walk(g, start, rng.gen_range(1..12), &mut rng);
            assert_eq!(ends, start);
            let sum = alternating_walk_sum(g, &canonical, start, &walk).unwrap();
            let expected = if walk.len() % 2 == 0 {
                0
            } else {
                group.neg(group.add(c.get(start), c.get(start)))
            };
            assert_eq!(sum, expected);
        }
    }
}

/// Random steps, then the shortest way home.
fn random_closed_walk(
    g: &Graph,
    start: usize,
    steps: usize,
    rng: &mut ChaCha8Rng,
) -> (Vec<usize>, usize) {
    let mut walk = Vec::new();
    let mut at = start;
    for _ in 0..steps {
        let inc = g.incident(at);
        let (w, e) = inc[rng.gen_range(0..inc.len())];
        walk.push(e);
        at = w;
    }
    let mut prev = vec![usize::MAX; g.n()];
    prev[at] = at;
    let mut queue = std::collections::VecDeque::from([at]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.incident(x) {
            if prev[y] == usize::MAX {
                prev[y] = e;
                queue.push_back(y);
            }
        }
    }
    let mut back = Vec::new();
    let mut x = start;
    while x != at {
        let e = prev[x];
        back.push(e);
        x = g.other_end(e, x);
    }
    back.reverse();
    for e in back {
        walk.push(e);
        at = g.other_end(e, at);
    }
    (walk, at)
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=40, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, density)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in random_graph()) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn certificates_ignore_labelling(g in random_graph(), seed in any::<u64>()) {
        prop_assume!(g.n() <= 12);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(canonical_certificate(&g), canonical_certificate(&g.relabel(&perm)));
    }
}
