//! Automorphism groups, stabilisers of colourings and the "less symmetric"
//! relation.
//!
//! Groups are enumerated element by element. That is only viable for small
//! graphs, so every enumeration honours a soft cap ([`DEFAULT_GROUP_CAP`])
//! and fails with [`Error::GroupTooLarge`] instead of exhausting memory.

mod search;

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::colouring::Colouring;
use crate::error::{contract, Error, Result};
use crate::graph::Graph;

pub(crate) use search::Labelled;

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A graph automorphism together with its induced action on edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
    edge_image: Vec<usize>,
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.image.serialize(s)
    }
}

impl Permutation {
    /// Checks that `image` is a bijection mapping edges of `g` onto edges.
    pub fn new(g: &Graph, image: Vec<usize>) -> Result<Self> {
        let n = g.n();
        if image.len() != n {
            return Err(contract(format!(
                "image has length {}, graph has {n} vertices",
                image.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(contract("image is not a bijection"));
            }
        }
        let edge_image = g
            .edges()
            .iter()
            .map(|&(u, v)| g.edge_index(image[u], image[v]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| contract("permutation does not map edges to edges"))?;
        Ok(Permutation { image, edge_image })
    }

    pub(crate) fn from_automorphism(g: &Graph, image: &[usize]) -> Self {
        let edge_image = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                g.edge_index(image[u], image[v])
                    .expect("automorphism maps edges to edges")
            })
            .collect();
        Permutation {
            image: image.to_vec(),
            edge_image,
        }
    }

    pub fn identity(g: &Graph) -> Self {
        Permutation {
            image: (0..g.n()).collect(),
            edge_image: (0..g.m()).collect(),
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn edge_image(&self) -> &[usize] {
        &self.edge_image
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn edge(&self, e: usize) -> usize {
        self.edge_image[e]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
            edge_image: other
                .edge_image
                .iter()
                .map(|&x| self.edge_image[x])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        let mut edge_image = vec![0; self.edge_image.len()];
        for (i, &x) in self.edge_image.iter().enumerate() {
            edge_image[x] = i;
        }
        Permutation { image, edge_image }
    }
}

/// An explicitly enumerated group of automorphisms, sorted lexicographically
/// by vertex image, so the identity comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    fn from_unsorted(mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        AutomorphismGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &AutomorphismGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }
}

fn collect(g: &Graph, search: &Labelled<'_>, cap: usize) -> Result<AutomorphismGroup> {
    let mut found = Vec::new();
    let over = search.for_each_automorphism(|image| {
        if found.len() == cap {
            return ControlFlow::Break(());
        }
        found.push(Permutation::from_automorphism(g, image));
        ControlFlow::Continue(())
    });
    match over {
        Some(()) => Err(Error::GroupTooLarge { cap }),
        None => Ok(AutomorphismGroup::from_unsorted(found)),
    }
}

/// Every automorphism of `g`, capped at [`DEFAULT_GROUP_CAP`].
pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup> {
    automorphisms_with_cap(g, DEFAULT_GROUP_CAP)
}

pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<AutomorphismGroup> {
    collect(g, &Labelled::new(g, None, None), cap)
}

/// The elements of `group` preserving `c`.
pub fn stabiliser(
    g: &Graph,
    group: &AutomorphismGroup,
    c: &dyn Colouring,
) -> Result<AutomorphismGroup> {
    c.check_domain(g)?;
    Ok(AutomorphismGroup {
        elements: group
            .elements
            .iter()
            .filter(|p| c.is_preserved_by(p))
            .cloned()
            .collect(),
    })
}

/// Stabiliser of `c` in Aut(g), found by a search restricted to `c` instead of
/// filtering the whole group.
pub fn stabiliser_in_aut(g: &Graph, c: &dyn Colouring) -> Result<AutomorphismGroup> {
    stabiliser_in_aut_with_cap(g, c, DEFAULT_GROUP_CAP)
}

pub fn stabiliser_in_aut_with_cap(
    g: &Graph,
    c: &dyn Colouring,
    cap: usize,
) -> Result<AutomorphismGroup> {
    c.check_domain(g)?;
    let (vertex, edge) = c.search_labels();
    collect(g, &Labelled::new(g, vertex, edge), cap)
}

/// Outcome of [`is_less_symmetric`]. A witness preserves the candidate but
/// not the reference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub holds: bool,
    pub witness: Option<Permutation>,
}

/// Whether stab(`candidate`) ⊆ stab(`reference`) within Aut(g). The witness,
/// if any, is the lexicographically least offending automorphism.
pub fn is_less_symmetric(
    g: &Graph,
    candidate: &dyn Colouring,
    reference: &dyn Colouring,
) -> Result<Containment> {
    reference.check_domain(g)?;
    let stab = stabiliser_in_aut(g, candidate)?;
    let witness = stab
        .elements
        .into_iter()
        .find(|p| !reference.is_preserved_by(p));
    Ok(Containment {
        holds: witness.is_none(),
        witness,
    })
}

/// True iff no non-identity automorphism preserves `c`.
pub fn is_distinguishing(g: &Graph, c: &dyn Colouring) -> Result<bool> {
    c.check_domain(g)?;
    let (vertex, edge) = c.search_labels();
    Ok(nontrivial_preserving(g, vertex, edge).is_none())
}

/// Some non-identity automorphism preserving the given vertex colours and
/// edge labels, if one exists.
pub(crate) fn nontrivial_preserving(
    g: &Graph,
    vertex: Option<&[u32]>,
    edge: Option<&[u32]>,
) -> Option<Vec<usize>> {
    Labelled::new(g, vertex, edge).for_each_automorphism(|image| {
        if image.iter().enumerate().any(|(i, &x)| i != x) {
            ControlFlow::Break(image.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// A labelling `v -> canonical_label[v]` such that isomorphic graphs relabel
/// to identical graphs.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    Labelled::new(g, None, None).canonical_labelling().0
}

/// Certificate that two graphs share exactly when they are isomorphic.
pub fn canonical_certificate(g: &Graph) -> Vec<u64> {
    let mut cert = vec![g.n() as u64];
    cert.extend(Labelled::new(g, None, None).canonical_labelling().1);
    cert
}

/// `g` relabelled canonically.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labelling(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{ColourGroup, EdgeColouring, VertexColouring};
    use crate::graph::families;

    fn vc(k: u32, values: &[u32]) -> VertexColouring {
        VertexColouring::new(ColourGroup::from_palette(k).unwrap(), values.to_vec()).unwrap()
    }

    fn ec(k: u32, values: &[u32]) -> EdgeColouring {
        EdgeColouring::new(ColourGroup::from_palette(k).unwrap(), values.to_vec()).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&families::cycle(3)).unwrap().order(), 6);
        let p3 = automorphisms(&families::path(3)).unwrap();
        assert_eq!(
            p3.elements()
                .iter()
                .map(|p| p.image().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![2, 1, 0]]
        );
        assert_eq!(automorphisms(&families::petersen()).unwrap().order(), 120);
        assert_eq!(automorphisms(&families::cube()).unwrap().order(), 48);
        assert_eq!(automorphisms(&Graph::empty(1)).unwrap().order(), 1);
        assert_eq!(automorphisms(&Graph::empty(0)).unwrap().order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            automorphisms_with_cap(&families::complete(5), 100),
            Err(Error::GroupTooLarge { cap: 100 })
        );
        assert_eq!(
            automorphisms_with_cap(&families::complete(5), 120)
                .unwrap()
                .order(),
            120
        );
    }

    #[test]
    fn stabilisers() {
        let g = families::cycle(3);
        let aut = automorphisms(&g).unwrap();
        assert_eq!(stabiliser(&g, &aut, &vc(2, &[1, 1, 1])).unwrap(), aut);
        assert!(stabiliser(&g, &aut, &vc(3, &[0, 1, 2]))
            .unwrap()
            .is_trivial());
        let s = stabiliser(&g, &aut, &vc(2, &[0, 0, 1])).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.elements()[1].image(), &[1, 0, 2]);
        assert_eq!(stabiliser_in_aut(&g, &vc(2, &[0, 0, 1])).unwrap(), s);
        assert!(matches!(
            stabiliser(&g, &aut, &vc(2, &[0, 0])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn less_symmetric_witness() {
        let c4 = families::cycle(4);
        let vertex = vc(2, &[0, 1, 0, 1]);
        let edges = ec(2, &[1, 1, 1, 1]);
        let r = is_less_symmetric(&c4, &edges, &vertex).unwrap();
        assert!(!r.holds);
        // Least offending element: 0 -> 1 with 1 -> 0 is the reflection
        // through the midpoints of 0-1 and 2-3; rotations also offend.
        let w = r.witness.unwrap();
        assert!(!vertex.is_preserved_by(&w) && edges.is_preserved_by(&w));
        assert_eq!(w.image(), &[1, 0, 3, 2]);
        assert!(
            is_less_symmetric(&c4, &vc(4, &[0, 1, 2, 3]), &edges)
                .unwrap()
                .holds
        );
        assert!(
            is_less_symmetric(&c4, &edges, &vc(1, &[0, 0, 0, 0]))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn distinguishing_checks() {
        let p4 = families::path(4);
        assert!(is_distinguishing(&p4, &ec(2, &[0, 1, 1])).unwrap());
        assert!(!is_distinguishing(&p4, &ec(2, &[1, 0, 1])).unwrap());
        assert!(is_distinguishing(&p4, &vc(4, &[0, 1, 2, 3])).unwrap());
        assert!(!is_distinguishing(&p4, &vc(1, &[0; 4])).unwrap());
    }

    #[test]
    fn canonical_forms_identify_isomorphic_graphs() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let b = Graph::new(4, [(3, 2), (2, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&families::cycle(4)));
        let p = families::petersen();
        let shuffled = p.relabel(&[3, 7, 1, 9, 0, 2, 8, 5, 4, 6]);
        assert_eq!(canonical_form(&p), canonical_form(&shuffled));
    }

    #[test]
    fn composition_and_inverse() {
        let g = families::cycle(5);
        let aut = automorphisms(&g).unwrap();
        for a in aut.elements() {
            assert!(aut.contains(&a.inverse()));
            assert!(a.compose(&a.inverse()).is_identity());
            for b in aut.elements() {
                assert!(aut.contains(&a.compose(b)));
            }
        }
        assert!(Permutation::new(&g, vec![0, 2, 1, 3, 4]).is_err());
        assert!(Permutation::new(&g, vec![0, 0, 1, 3, 4]).is_err());
    }
}
