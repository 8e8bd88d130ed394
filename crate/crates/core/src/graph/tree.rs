use serde::Serialize;

use super::Graph;

/// Centre structure of a finite tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TreeShape {
    NotATree,
    Unicentred {
        centre: usize,
    },
    /// `centres.0 < centres.1`, joined by `central_edge`.
    Bicentred {
        centres: (usize, usize),
        central_edge: usize,
    },
}

impl TreeShape {
    pub fn is_tree(&self) -> bool {
        !matches!(self, TreeShape::NotATree)
    }

    /// The unique centre, or the lower-indexed one of a bicentred tree.
    pub fn root(&self) -> Option<usize> {
        match *self {
            TreeShape::NotATree => None,
            TreeShape::Unicentred { centre } => Some(centre),
            TreeShape::Bicentred { centres, .. } => Some(centres.0),
        }
    }
}

/// Finds the centre(s) by repeatedly stripping all current leaves.
pub fn tree_shape(g: &Graph) -> TreeShape {
    if !g.is_tree() {
        return TreeShape::NotATree;
    }
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in g.neighbours(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        layer = next;
    }
    match layer[..] {
        [c] => TreeShape::Unicentred { centre: c },
        [a, b] => TreeShape::Bicentred {
            centres: (a.min(b), a.max(b)),
            central_edge: g.edge_index(a, b).expect("two centres are adjacent"),
        },
        _ => unreachable!("leaf stripping leaves one or two centres"),
    }
}

/// Isomorphism code of the subtree reachable from `root` without crossing
/// `cut`. Children are encoded recursively and sorted, and when `labels` is
/// given each child's code is prefixed by the label of the edge leading to it,
/// so two rooted (edge-labelled) trees get equal codes exactly when some
/// root-preserving isomorphism maps one onto the other.
///
/// `g` must be a tree (or the traversal from `root` must meet no cycle).
pub fn rooted_code(g: &Graph, root: usize, cut: Option<usize>, labels: Option<&[u32]>) -> String {
    rooted_codes(g, root, cut, labels).0
}

/// Like [`rooted_code`], also reporting whether every vertex's children carry
/// pairwise distinct codes, which is the case exactly when no nontrivial
/// root-fixing automorphism preserves the labels.
pub fn rooted_code_and_rigidity(
    g: &Graph,
    root: usize,
    cut: Option<usize>,
    labels: Option<&[u32]>,
) -> (String, bool) {
    rooted_codes(g, root, cut, labels)
}

fn rooted_codes(
    g: &Graph,
    root: usize,
    cut: Option<usize>,
    labels: Option<&[u32]>,
) -> (String, bool) {
    let n = g.n();
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &(w, e) in g.incident(v) {
            if Some(e) != cut && !seen[w] {
                seen[w] = true;
                parent[w] = (v, e);
                order.push(w);
            }
        }
    }
    let mut children: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut codes: Vec<String> = vec![String::new(); n];
    let mut rigid = true;
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable();
        rigid &= kids.windows(2).all(|w| w[0] != w[1]);
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in &kids {
            code.push_str(k);
        }
        code.push(')');
        if v != root {
            let (p, e) = parent[v];
            let token = match labels {
                Some(l) => format!("{}{}", l[e], code),
                None => code.clone(),
            };
            children[p].push(token);
        }
        codes[v] = code;
    }
    (std::mem::take(&mut codes[root]), rigid)
}

/// Isomorphism code of an unrooted tree, rooted at its centre or its central edge.
pub fn free_tree_code(g: &Graph) -> Option<String> {
    match tree_shape(g) {
        TreeShape::NotATree => None,
        TreeShape::Unicentred { centre } => {
            Some(format!("U{}", rooted_code(g, centre, None, None)))
        }
        TreeShape::Bicentred {
            centres: (a, b),
            central_edge,
        } => {
            let mut halves = [
                rooted_code(g, a, Some(central_edge), None),
                rooted_code(g, b, Some(central_edge), None),
            ];
            halves.sort_unstable();
            Some(format!("B{}{}", halves[0], halves[1]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn paths_and_cycles() {
        assert_eq!(
            tree_shape(&families::path(5)),
            TreeShape::Unicentred { centre: 2 }
        );
        assert_eq!(
            tree_shape(&families::path(4)),
            TreeShape::Bicentred {
                centres: (1, 2),
                central_edge: 1
            }
        );
        assert_eq!(tree_shape(&families::cycle(3)), TreeShape::NotATree);
        assert_eq!(
            tree_shape(&Graph::empty(1)),
            TreeShape::Unicentred { centre: 0 }
        );
        assert_eq!(
            tree_shape(&families::path(2)),
            TreeShape::Bicentred {
                centres: (0, 1),
                central_edge: 0
            }
        );
        assert_eq!(tree_shape(&Graph::empty(2)), TreeShape::NotATree);
    }

    #[test]
    fn stars_and_spiders() {
        assert_eq!(
            tree_shape(&families::star(4)),
            TreeShape::Unicentred { centre: 0 }
        );
        // Spider with legs of length 1 and 3: centres lie on the long leg.
        let g = Graph::new(5, [(0, 1), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(tree_shape(&g), TreeShape::Unicentred { centre: 2 });
        let ds = families::double_star(2, 3);
        assert!(matches!(
            tree_shape(&ds),
            TreeShape::Bicentred {
                centres: (0, 1),
                ..
            }
        ));
    }

    #[test]
    fn codes_identify_rooted_trees() {
        let p3 = families::path(3);
        assert_eq!(
            rooted_code(&p3, 0, None, None),
            rooted_code(&p3, 2, None, None)
        );
        assert_ne!(
            rooted_code(&p3, 0, None, None),
            rooted_code(&p3, 1, None, None)
        );
        let star = families::star(2);
        assert_eq!(
            rooted_code(&star, 0, None, Some(&[0, 1])),
            rooted_code(&star, 0, None, Some(&[1, 0]))
        );
        assert!(rooted_code_and_rigidity(&star, 0, None, Some(&[0, 1])).1);
        assert!(!rooted_code_and_rigidity(&star, 0, None, Some(&[1, 1])).1);
        let relabelled = Graph::new(5, [(4, 3), (3, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(
            free_tree_code(&families::path(5)),
            free_tree_code(&relabelled)
        );
        assert_ne!(
            free_tree_code(&families::path(5)),
            free_tree_code(&families::star(4))
        );
        assert_eq!(free_tree_code(&families::cycle(4)), None);
    }
}
