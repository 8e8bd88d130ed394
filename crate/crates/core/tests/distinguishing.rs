use desym_core::colouring::{ColourGroup, EdgeColouring, VertexColouring};
use desym_core::corpus::{connected_graphs_up_to, trees_up_to};
use desym_core::distinguishing::{
    build_family_T_example, count_distinguishing_edge_colourings, distinguishing_index,
    distinguishing_number, enumerate_distinguishing_edge_colourings,
    has_distinguishing_with_equal_pair, in_family_T, sharpness_conditions, trees_isomorphic,
    RootedTree,
};
use desym_core::graph::{families, tree_shape, Graph, TreeShape};
use desym_core::symmetry::is_distinguishing;
use desym_core::Error;
use desym_oracle as oracle;

#[test]
fn numbers_match_brute_force() {
    for g in connected_graphs_up_to(6).unwrap().into_iter().flatten() {
        let d = distinguishing_number(&g, g.n() as u32).unwrap();
        assert_eq!(
            Some(d.k),
            oracle::distinguishing_number(g.n(), g.edges(), g.n() as u32),
            "{:?}",
            g.edges()
        );
        let group = ColourGroup::cyclic(d.k.max(1)).unwrap();
        assert!(is_distinguishing(&g, &VertexColouring::new(group, d.witness).unwrap()).unwrap());
    }
}

#[test]
fn indices_match_brute_force() {
    for g in connected_graphs_up_to(5)
        .unwrap()
        .into_iter()
        .flatten()
        .filter(|g| g.n() >= 3)
    {
        let d = distinguishing_index(&g, g.m() as u32).unwrap();
        assert_eq!(
            Some(d.k),
            oracle::distinguishing_index(g.n(), g.edges(), g.m() as u32),
            "{:?}",
            g.edges()
        );
        let group = ColourGroup::cyclic(d.k.max(1)).unwrap();
        assert!(is_distinguishing(&g, &EdgeColouring::new(group, d.witness).unwrap()).unwrap());
    }
}

#[test]
fn index_at_most_one_more_than_number() {
    let graphs = connected_graphs_up_to(6)
        .unwrap()
        .into_iter()
        .flatten()
        .filter(|g| g.n() >= 3);
    let trees = trees_up_to(10).unwrap().into_iter().skip(6).flatten();
    for g in graphs.chain(trees) {
        let d = distinguishing_number(&g, g.n() as u32).unwrap().k;
        let d_prime = distinguishing_index(&g, g.n() as u32).unwrap().k;
        assert!(d_prime <= d + 1, "{:?}: {d} {d_prime}", g.edges());
    }
}

#[test]
fn bounds_are_reported() {
    let k4 = families::complete(4);
    assert_eq!(
        distinguishing_number(&k4, 3),
        Err(Error::BoundExceeded { bound: 3 })
    );
    assert!(distinguishing_number(&k4, 4).is_ok());
    assert!(distinguishing_index(&families::path(2), 2).is_err());
}

#[test]
fn three_conditions_agree_on_bicentred_trees() {
    for t in trees_up_to(11).unwrap().into_iter().skip(3).flatten() {
        let TreeShape::Bicentred { .. } = tree_shape(&t) else {
            continue;
        };
        let d = distinguishing_number(&t, t.n() as u32).unwrap().k;
        if d < 2 {
            continue;
        }
        let r = sharpness_conditions(&t, d).unwrap();
        assert!(r.agree(), "{:?}: {r:?}", t.edges());
        // Other palette sizes make (i) and (ii) false outright.
        let off = sharpness_conditions(&t, d + 1).unwrap();
        assert!(!off.index_exceeds && !off.centres_split);
    }
}

#[test]
fn fixtures() {
    let sharp = families::sharp_tree_example();
    assert_eq!(sharp.n(), 22);
    assert_eq!(distinguishing_number(&sharp, 22).unwrap().k, 2);
    assert_eq!(distinguishing_index(&sharp, 22).unwrap().k, 3);
    assert!(in_family_T(&sharp, 2).unwrap().member);

    let collection = [RootedTree::single_vertex(), RootedTree::path(2).unwrap()];
    let built = build_family_T_example(&collection, 2).unwrap();
    assert!(trees_isomorphic(&built, &sharp));

    let ds = families::double_star(2, 2);
    assert_eq!(distinguishing_number(&ds, 6).unwrap().k, 2);
    assert_eq!(distinguishing_index(&ds, 6).unwrap().k, 3);
    assert!(in_family_T(&ds, 2).unwrap().member);
}

#[test]
fn built_examples_are_sharp() {
    let shapes = [
        vec![RootedTree::single_vertex()],
        vec![RootedTree::path(2).unwrap()],
        vec![RootedTree::single_vertex(), RootedTree::path(3).unwrap()],
    ];
    for collection in &shapes {
        let t = build_family_T_example(collection, 2).unwrap();
        if t.n() > 24 {
            continue;
        }
        let r = sharpness_conditions(&t, 2).unwrap();
        assert!(r.index_exceeds && r.centres_split && r.in_family, "{r:?}");
    }
}

/// Once a distinguishing colouring exists, every larger palette has one.
#[test]
fn existence_is_monotone_in_k() {
    for g in connected_graphs_up_to(5).unwrap().into_iter().flatten() {
        let d = distinguishing_number(&g, g.n() as u32).unwrap().k;
        for k in d..=g.n() as u32 {
            assert!(oracle::distinguishing_number(g.n(), g.edges(), k).is_some());
        }
        for k in 1..d {
            assert!(oracle::distinguishing_number(g.n(), g.edges(), k).is_none());
        }
    }
}

/// Classes of rigid colourings counted against labelled colourings divided by
/// the order of the root-fixing group, which acts freely on them.
#[test]
fn rooted_class_counts_match_orbit_counting() {
    for t in trees_up_to(7).unwrap().into_iter().flatten() {
        for root in 0..t.n() {
            let rooted = RootedTree::new(t.clone(), root).unwrap();
            let fixing: Vec<Vec<usize>> = oracle::automorphisms(t.n(), t.edges())
                .into_iter()
                .filter(|p| p[root] == root)
                .collect();
            for k in 1..=3 {
                let labelled = oracle::all_colourings(t.m(), k)
                    .into_iter()
                    .filter(|c| {
                        fixing
                            .iter()
                            .filter(|p| oracle::preserves_edges(t.edges(), p, c))
                            .count()
                            == 1
                    })
                    .count();
                let classes = enumerate_distinguishing_edge_colourings(&rooted, k).unwrap();
                assert_eq!(classes.count * fixing.len(), labelled);
                assert_eq!(classes.representatives.len(), classes.count);
                assert_eq!(
                    count_distinguishing_edge_colourings(&rooted, k).unwrap(),
                    classes.count as u128
                );
            }
        }
    }
}

/// On unicentred trees the distinguishing edge colourings are as many as the
/// distinguishing vertex colourings giving the centre colour 0.
#[test]
fn unicentred_counts_coincide() {
    for t in trees_up_to(8).unwrap().into_iter().flatten() {
        let TreeShape::Unicentred { centre } = tree_shape(&t) else {
            continue;
        };
        let aut = oracle::automorphisms(t.n(), t.edges());
        let rigid = |ok: &dyn Fn(&[usize]) -> bool| aut.iter().filter(|p| ok(p)).count() == 1;
        for k in [2, 3] {
            let vertex = oracle::all_colourings(t.n(), k)
                .into_iter()
                .filter(|c| c[centre] == 0 && rigid(&|p| oracle::preserves_vertices(p, c)))
                .count();
            let edge = oracle::all_colourings(t.m(), k)
                .into_iter()
                .filter(|c| rigid(&|p| oracle::preserves_edges(t.edges(), p, c)))
                .count();
            assert_eq!(vertex, edge, "{:?} k={k}", t.edges());
        }
    }
}

#[test]
fn equal_pair_search() {
    // Both centres of the double star must be split by any 2-colouring.
    let ds = families::double_star(2, 2);
    assert!(!has_distinguishing_with_equal_pair(&ds, 2, 0, 1).unwrap());
    assert!(has_distinguishing_with_equal_pair(&ds, 3, 0, 1).unwrap());
    let p5: Graph = families::path(5);
    assert!(has_distinguishing_with_equal_pair(&p5, 2, 0, 2).unwrap());
}
