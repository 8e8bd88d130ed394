//! Vertex colourings to edge colourings that are at most as symmetric, and the
//! converse on trees.
//!
//! An edge colouring `c''` is less symmetric than a vertex colouring `c` when
//! every automorphism preserving `c''` preserves `c`. The general construction
//! works one prime factor of the palette at a time and starts from the
//! canonical colouring `uv -> c(u) + c(v)`, then breaks the symmetries that the
//! canonical colouring cannot see by perturbing a single equivalence class of
//! cycle edges.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::colouring::{
    canonical_edge_colouring, combine, vertex_colouring_from_edges, ColourGroup, Colouring,
    ColouringDoc, EdgeColouring, VertexColouring,
};
use crate::error::{contract, Error, Result};
use crate::graph::{
    cycle_through_edge_with_first_step, cycle_walk, equivalence_classes, forest_distances,
    path_walk, tree_shape, ClassKind, CycleStructure, Graph, TreeShape,
};
use crate::symmetry::{is_less_symmetric, stabiliser_in_aut};

/// Which construction produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    TrivialK1,
    TreeUnicentred,
    CanonicalNonbipartiteOddP,
    CycleClassOddP2,
    CycleClassEvenLong,
    CycleClass4Unique,
    CycleClass4Pair,
    PathClassLong,
    UnitMonochromatic,
    UnitIncidentEqual,
    UnitIncidentGeneral,
    UnitStarPair,
    PrimeCombined,
    TreeEdgeToVertex,
}

impl Strategy {
    pub const ALL: [Strategy; 14] = [
        Strategy::TrivialK1,
        Strategy::TreeUnicentred,
        Strategy::CanonicalNonbipartiteOddP,
        Strategy::CycleClassOddP2,
        Strategy::CycleClassEvenLong,
        Strategy::CycleClass4Unique,
        Strategy::CycleClass4Pair,
        Strategy::PathClassLong,
        Strategy::UnitMonochromatic,
        Strategy::UnitIncidentEqual,
        Strategy::UnitIncidentGeneral,
        Strategy::UnitStarPair,
        Strategy::PrimeCombined,
        Strategy::TreeEdgeToVertex,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Strategy::TrivialK1 => "trivial-k1",
            Strategy::TreeUnicentred => "tree-unicentred",
            Strategy::CanonicalNonbipartiteOddP => "canonical-nonbipartite-odd-p",
            Strategy::CycleClassOddP2 => "cycle-class-odd-p2",
            Strategy::CycleClassEvenLong => "cycle-class-even-long",
            Strategy::CycleClass4Unique => "cycle-class-4-unique",
            Strategy::CycleClass4Pair => "cycle-class-4-pair",
            Strategy::PathClassLong => "path-class-long",
            Strategy::UnitMonochromatic => "unit-monochromatic",
            Strategy::UnitIncidentEqual => "unit-incident-equal",
            Strategy::UnitIncidentGeneral => "unit-incident-general",
            Strategy::UnitStarPair => "unit-star-pair",
            Strategy::PrimeCombined => "prime-combined",
            Strategy::TreeEdgeToVertex => "tree-edge-to-vertex",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Strategy {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Stabiliser orders of input and output, and whether the output's is contained
/// in the input's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub stab_before: usize,
    pub stab_after: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesymmResult<C> {
    pub colouring: C,
    pub strategy: Strategy,
    /// One strategy per prime factor when the palette was split.
    pub components: Vec<Strategy>,
    pub certificate: Option<Certificate>,
}

#[derive(Serialize)]
struct Wire<'a> {
    #[serde(flatten)]
    colouring: ColouringDoc,
    strategy: Strategy,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    components: &'a [Strategy],
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
}

impl<C> Serialize for DesymmResult<C>
where
    for<'a> &'a C: Into<ColouringDoc>,
{
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            colouring: (&self.colouring).into(),
            strategy: self.strategy,
            components: &self.components,
            certificate: self.certificate.as_ref(),
        }
        .serialize(s)
    }
}

fn certify(
    g: &Graph,
    result: &dyn Colouring,
    input: &dyn Colouring,
    strategy: Strategy,
) -> Result<Certificate> {
    let before = stabiliser_in_aut(g, input)?;
    let after = stabiliser_in_aut(g, result)?;
    let contained = after.is_subgroup_of(&before);
    if !contained {
        return Err(Error::Invariant(format!(
            "{strategy} produced a colouring with stabiliser of order {} not inside the input's of order {}",
            after.order(),
            before.order()
        )));
    }
    Ok(Certificate {
        stab_before: before.order(),
        stab_after: after.order(),
        contained,
    })
}

/// An edge colouring of `g` with at most as many colours as `c` whose
/// stabiliser is contained in that of `c`.
///
/// `g` must be connected and not a bicentred tree. With `verify` set both
/// stabilisers are enumerated and a failed containment is reported as
/// [`Error::Invariant`].
pub fn vertex_to_edge(
    g: &Graph,
    c: &VertexColouring,
    verify: bool,
) -> Result<DesymmResult<EdgeColouring>> {
    g.require_connected()?;
    c.check_domain(g)?;
    let k = c.k();
    let (colouring, strategy, components) = if k == 1 {
        (
            EdgeColouring::constant(c.group().clone(), g.m(), 0)?,
            Strategy::TrivialK1,
            Vec::new(),
        )
    } else {
        match tree_shape(g) {
            TreeShape::Bicentred { .. } => return Err(Error::BicentredTreeUnsupported),
            TreeShape::Unicentred { centre } => {
                let cz = c
                    .reinterpret(ColourGroup::cyclic(k)?)?
                    .swap_colours(c.get(centre), 0);
                let out = canonical_edge_colouring(g, &cz)?.reinterpret(c.group().clone())?;
                (out, Strategy::TreeUnicentred, Vec::new())
            }
            TreeShape::NotATree => {
                let palette = ColourGroup::from_palette(k)?;
                let cp = c.reinterpret(palette.clone())?;
                let mut parts = Vec::with_capacity(palette.rank());
                let mut tags = Vec::with_capacity(palette.rank());
                for i in 0..palette.rank() {
                    let (part, tag) = per_prime(g, &cp.project(i)?)?;
                    parts.push(part);
                    tags.push(tag);
                }
                let out = combine(&parts)?.reinterpret(c.group().clone())?;
                if tags.len() == 1 {
                    (out, tags[0], Vec::new())
                } else {
                    (out, Strategy::PrimeCombined, tags)
                }
            }
        }
    };
    let certificate = if verify {
        Some(certify(g, &colouring, c, strategy)?)
    } else {
        None
    };
    Ok(DesymmResult {
        colouring,
        strategy,
        components,
        certificate,
    })
}

/// A vertex colouring of the tree `t` with the same palette whose stabiliser
/// is contained in that of `c_edge`: the unique preimage of `c_edge` under the
/// canonical map that gives the centre (the lower one if bicentred) colour 0.
pub fn edge_to_vertex(
    t: &Graph,
    c_edge: &EdgeColouring,
    verify: bool,
) -> Result<DesymmResult<VertexColouring>> {
    let root = tree_shape(t).root().ok_or(Error::NotATree)?;
    let colouring = vertex_colouring_from_edges(t, c_edge, root, 0)?;
    let strategy = Strategy::TreeEdgeToVertex;
    let certificate = if verify {
        Some(certify(t, &colouring, c_edge, strategy)?)
    } else {
        None
    };
    Ok(DesymmResult {
        colouring,
        strategy,
        components: Vec::new(),
        certificate,
    })
}

fn prime_modulus(c: &VertexColouring) -> Result<u32> {
    match c.group().moduli() {
        [p] if (2..*p).take_while(|d| d * d <= *p).all(|d| p % d != 0) => Ok(*p),
        _ => Err(contract("expected a colouring over Z_p for a prime p")),
    }
}

fn require_cyclic_graph(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.is_tree() {
        return Err(contract("graph has no cycle"));
    }
    Ok(())
}

/// Edge colouring over `Z_p` less symmetric than `c`, for a connected `g` with
/// at least one cycle.
pub fn per_prime_desymm(g: &Graph, c: &VertexColouring) -> Result<EdgeColouring> {
    per_prime(g, c).map(|(out, _)| out)
}

/// [`per_prime_desymm`] together with the strategy used.
pub fn per_prime(g: &Graph, c: &VertexColouring) -> Result<(EdgeColouring, Strategy)> {
    require_cyclic_graph(g)?;
    c.check_domain(g)?;
    let p = prime_modulus(c)?;
    if p % 2 == 1 && !g.is_bipartite() {
        return Ok((
            canonical_edge_colouring(g, c)?,
            Strategy::CanonicalNonbipartiteOddP,
        ));
    }
    let cs = equivalence_classes(g)?;
    if let Some((_, class)) = cs.classes_of_kind(ClassKind::Cycle).next() {
        return cycle_construction(g, c, &cs, &class.edges);
    }
    if let Some((_, class)) = cs
        .classes_of_kind(ClassKind::Path)
        .find(|(_, cl)| cl.len() >= 2)
    {
        return long_path(g, c, &class.edges);
    }
    unit_path(g, c, &cs.path_class_edges())
}

fn bumped(mut out: EdgeColouring, e: usize) -> Result<EdgeColouring> {
    let group = out.group().clone();
    let mut values = out.values().to_vec();
    values[e] = group.add(values[e], 1);
    out = EdgeColouring::new(group, values)?;
    Ok(out)
}

fn with_values_on(base: &EdgeColouring, edges: &[usize], colours: &[u32]) -> Result<EdgeColouring> {
    let mut values = base.values().to_vec();
    for (&e, &x) in edges.iter().zip(colours) {
        values[e] = x;
    }
    EdgeColouring::new(base.group().clone(), values)
}

fn recoloured(c: &VertexColouring, changes: &[(usize, u32)]) -> Result<VertexColouring> {
    let mut values = c.values().to_vec();
    for &(v, x) in changes {
        values[v] = x;
    }
    VertexColouring::new(c.group().clone(), values)
}

/// Construction for a cycle equivalence class `class` (edge indices).
pub fn cycle_class_construction(
    g: &Graph,
    c: &VertexColouring,
    class: &[usize],
) -> Result<(EdgeColouring, Strategy)> {
    require_cyclic_graph(g)?;
    c.check_domain(g)?;
    prime_modulus(c)?;
    let cs = equivalence_classes(g)?;
    cycle_construction(g, c, &cs, class)
}

fn cycle_construction(
    g: &Graph,
    c: &VertexColouring,
    cs: &CycleStructure,
    class: &[usize],
) -> Result<(EdgeColouring, Strategy)> {
    let mut sorted = class.to_vec();
    sorted.sort_unstable();
    let is_cycle_class = cs
        .classes_of_kind(ClassKind::Cycle)
        .any(|(_, cl)| cl.edges == sorted);
    if !is_cycle_class {
        return Err(contract("edges do not form a cycle equivalence class"));
    }
    let p = prime_modulus(c)?;
    let canonical = canonical_edge_colouring(g, c)?;
    let (verts, walk) = cycle_walk(g, &sorted);
    let len = walk.len();
    if len % 2 == 1 {
        if p != 2 {
            return Ok((canonical, Strategy::CanonicalNonbipartiteOddP));
        }
        // Walk edge i joins verts[i] and verts[i+1]; the opposite vertex is (len+1)/2 further on.
        let sum = verts.iter().fold(0, |s, &v| (s + c.get(v)) % 2);
        let shift = if sum == 1 { 0 } else { 1 };
        let colours: Vec<u32> = (0..len)
            .map(|i| (c.get(verts[(i + len.div_ceil(2)) % len]) + shift) % 2)
            .collect();
        return Ok((
            with_values_on(&canonical, &walk, &colours)?,
            Strategy::CycleClassOddP2,
        ));
    }
    if len >= 6 {
        let mut colours = vec![0; len];
        for i in [0, 1, 3] {
            colours[i] = 1;
        }
        return Ok((
            with_values_on(&canonical, &walk, &colours)?,
            Strategy::CycleClassEvenLong,
        ));
    }
    let other = cs
        .classes_of_kind(ClassKind::Cycle)
        .find(|(_, cl)| cl.len() == 4 && cl.edges != sorted);
    if let Some((_, d)) = other {
        let (_, d_walk) = cycle_walk(g, &d.edges);
        let out = with_values_on(&canonical, &walk, &[1, 0, 0, 0])?;
        let out = with_values_on(&out, &d_walk, &[1, 1, 1, 0])?;
        return Ok((out, Strategy::CycleClass4Pair));
    }
    // The only 4-cycle class is fixed setwise by every automorphism; some
    // colouring of its four edges pins down c on it.
    let mut digits = [0u32; 4];
    loop {
        let candidate = with_values_on(&canonical, &walk, &digits)?;
        if is_less_symmetric(g, &candidate, c)?.holds {
            return Ok((candidate, Strategy::CycleClass4Unique));
        }
        let mut i = 4;
        loop {
            if i == 0 {
                return Err(Error::Invariant(
                    "no recolouring of the unique 4-cycle class is less symmetric".into(),
                ));
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Construction for a path equivalence class with at least two edges.
pub fn long_path_construction(
    g: &Graph,
    c: &VertexColouring,
    class: &[usize],
) -> Result<EdgeColouring> {
    require_cyclic_graph(g)?;
    c.check_domain(g)?;
    prime_modulus(c)?;
    let mut sorted = class.to_vec();
    sorted.sort_unstable();
    let cs = equivalence_classes(g)?;
    if sorted.len() < 2
        || !cs
            .classes_of_kind(ClassKind::Path)
            .any(|(_, cl)| cl.edges == sorted)
    {
        return Err(contract(
            "edges do not form a path equivalence class of length at least 2",
        ));
    }
    long_path(g, c, &sorted).map(|(out, _)| out)
}

fn long_path(g: &Graph, c: &VertexColouring, class: &[usize]) -> Result<(EdgeColouring, Strategy)> {
    let (verts, walk) = path_walk(g, class);
    let changes: Vec<(usize, u32)> = verts.iter().map(|&v| (v, 0)).collect();
    let tilde = recoloured(c, &changes)?;
    let out = bumped(canonical_edge_colouring(g, &tilde)?, walk[0])?;
    Ok((out, Strategy::PathClassLong))
}

/// Construction when every path class is a single edge; `e_p` lists those edges.
pub fn unit_path_construction(
    g: &Graph,
    c: &VertexColouring,
    e_p: &[usize],
) -> Result<(EdgeColouring, Strategy)> {
    require_cyclic_graph(g)?;
    c.check_domain(g)?;
    prime_modulus(c)?;
    let cs = equivalence_classes(g)?;
    let mut sorted = e_p.to_vec();
    sorted.sort_unstable();
    if cs.classes_of_kind(ClassKind::Cycle).next().is_some()
        || cs
            .classes_of_kind(ClassKind::Path)
            .any(|(_, cl)| cl.len() > 1)
        || sorted != cs.path_class_edges()
    {
        return Err(contract(
            "expected the edges of the path classes, all of length 1, and no cycle class",
        ));
    }
    unit_path(g, c, &sorted)
}

fn unit_path(g: &Graph, c: &VertexColouring, e_p: &[usize]) -> Result<(EdgeColouring, Strategy)> {
    if e_p.is_empty() {
        return Err(Error::Invariant(
            "a graph with a cycle but no cycle class has a path class".into(),
        ));
    }
    let p = prime_modulus(c)?;
    let monochromatic = |col: &VertexColouring, e: usize| {
        let (u, v) = g.edge(e);
        col.get(u) == col.get(v)
    };
    if let Some(&e) = e_p.iter().find(|&&e| monochromatic(c, e)) {
        return Ok((
            bumped(canonical_edge_colouring(g, c)?, e)?,
            Strategy::UnitMonochromatic,
        ));
    }
    let in_ep = {
        let mut mask = vec![false; g.m()];
        for &e in e_p {
            mask[e] = true;
        }
        mask
    };
    if p % 2 == 1 && has_triangle(g, &in_ep) {
        // Not reached from `per_prime`: an odd p on a non-bipartite graph is settled earlier.
        return Ok((
            canonical_edge_colouring(g, c)?,
            Strategy::CanonicalNonbipartiteOddP,
        ));
    }
    // Pairs (e, f) = (uv, vw) of incident E_P edges, e < f, scanning v upward.
    let mut pairs = Vec::new();
    for v in 0..g.n() {
        let at: Vec<usize> = g
            .incident(v)
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| in_ep[e])
            .collect();
        let mut at = at;
        at.sort_unstable();
        for (i, &e) in at.iter().enumerate() {
            for &f in &at[i + 1..] {
                pairs.push((g.other_end(e, v), v, g.other_end(f, v), e, f));
            }
        }
    }
    if let Some(&(_, v, w, e, _)) = pairs.iter().find(|&&(u, _, w, _, _)| c.get(u) == c.get(w)) {
        let tilde = recoloured(c, &[(v, c.get(w))])?;
        return Ok((
            bumped(canonical_edge_colouring(g, &tilde)?, e)?,
            Strategy::UnitIncidentEqual,
        ));
    }
    if let Some(&(u, v, w, _, f)) = pairs.first() {
        let tilde = recoloured(c, &[(u, c.get(w)), (v, c.get(w))])?;
        return Ok((
            bumped(canonical_edge_colouring(g, &tilde)?, f)?,
            Strategy::UnitIncidentGeneral,
        ));
    }
    let (e, f) = star_pair(g, e_p)?;
    let (a, b) = g.edge(e);
    let (x, y) = g.edge(f);
    let tilde = recoloured(c, &[(a, 0), (b, 0), (x, 1), (y, 1)])?;
    Ok((
        bumped(canonical_edge_colouring(g, &tilde)?, e)?,
        Strategy::UnitStarPair,
    ))
}

fn has_triangle(g: &Graph, in_ep: &[bool]) -> bool {
    (0..g.m()).filter(|&e| in_ep[e]).any(|e| {
        let (u, v) = g.edge(e);
        g.incident(u)
            .iter()
            .any(|&(w, f)| w != v && in_ep[f] && g.edge_index(v, w).is_some_and(|h| in_ep[h]))
    })
}

/// Two edges `e, f` of `e_p` such that no automorphism fixing both setwise
/// and preserving `c` off their endpoints swaps the ends of either.
///
/// Requires the edges of `e_p` to be pairwise non-incident, to be exactly the
/// path classes (all single edges) and no cycle class to exist. No finite graph
/// meets this: a leaf of the forest `g - e_p` inside a 2-edge-connected block
/// has degree 2, so its `e_p` edge would share a class with its forest edge.
/// The branch is kept so the construction stays total.
pub fn find_star_pair(g: &Graph, e_p: &[usize]) -> Result<(usize, usize)> {
    require_cyclic_graph(g)?;
    let cs = equivalence_classes(g)?;
    let mut sorted = e_p.to_vec();
    sorted.sort_unstable();
    if cs.classes_of_kind(ClassKind::Cycle).next().is_some() || sorted != cs.path_class_edges() {
        return Err(contract(
            "expected the path class edges of a graph without cycle classes",
        ));
    }
    let mut touched = vec![false; g.n()];
    for &e in &sorted {
        let (u, v) = g.edge(e);
        if std::mem::replace(&mut touched[u], true) || std::mem::replace(&mut touched[v], true) {
            return Err(contract("path class edges are not pairwise non-incident"));
        }
    }
    star_pair(g, &sorted)
}

fn star_pair(g: &Graph, e_p: &[usize]) -> Result<(usize, usize)> {
    let in_ep = |e: usize| e_p.binary_search(&e).is_ok();
    let e0 = e_p[0];
    let (u0, v0) = g.edge(e0);
    // Two cycles through e0 leaving u0 by different edges; they exist because
    // otherwise the other edge at u0 would lie on every cycle through e0.
    let mut cycles = Vec::with_capacity(2);
    for w in g.neighbours(u0).filter(|&w| w != v0) {
        if let Some(cycle) = cycle_through_edge_with_first_step(g, u0, v0, w)? {
            cycles.push(cycle);
            if cycles.len() == 2 {
                break;
            }
        }
    }
    if cycles.len() < 2 {
        return Err(Error::Invariant(format!(
            "edge {e0} is its own class but fewer than two cycles through it leave {u0} differently"
        )));
    }
    // Walking from u0 away from e0, the first E_P edge is entered from the tree
    // of g - E_P containing u0.
    let mut ends = vec![(e0, u0, v0)];
    for cycle in &cycles {
        let last = cycle.edges.len() - 1;
        let j = (0..last)
            .find(|&j| in_ep(cycle.edges[j]))
            .ok_or_else(|| Error::Invariant("a cycle meets only one path class".into()))?;
        ends.push((cycle.edges[j], cycle.vertices[j], cycle.vertices[j + 1]));
    }
    // The tree paths from u0 to u1 and u2 start with different edges, so u0 lies
    // between them; since no E_P edge has both ends in one tree of g - E_P,
    // e1 = e2 would force u1 = u2 and a cycle inside that tree.
    if ends[1].0 == ends[2].0 {
        return Err(Error::Invariant(
            "both cycles reach the same path class edge first".into(),
        ));
    }
    let d = forest_distances(g, e_p);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (ei, ui, vi) = ends[i];
        let (ej, uj, vj) = ends[j];
        if d.get(ui, uj) != d.get(vi, vj) {
            return Ok((ei, ej));
        }
    }
    Ok((ends[1].0, ends[2].0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::symmetry::{automorphisms, stabiliser};

    fn vc(k: u32, values: &[u32]) -> VertexColouring {
        VertexColouring::new(ColourGroup::from_palette(k).unwrap(), values.to_vec()).unwrap()
    }

    fn ec(k: u32, values: &[u32]) -> EdgeColouring {
        EdgeColouring::new(ColourGroup::from_palette(k).unwrap(), values.to_vec()).unwrap()
    }

    #[test]
    fn tags_are_unique() {
        let mut tags: Vec<&str> = Strategy::ALL.iter().map(|s| s.tag()).collect();
        tags.sort_unstable();
        tags.dedup();
        assert_eq!(tags.len(), Strategy::ALL.len());
    }

    #[test]
    fn unicentred_path_swaps_centre_colour() {
        let g = families::path(5);
        let c = vc(2, &[0, 1, 1, 0, 1]);
        let r = vertex_to_edge(&g, &c, true).unwrap();
        assert_eq!(r.strategy, Strategy::TreeUnicentred);
        // Centre 2 has colour 1, so colours swap to (1,0,0,1,0).
        assert_eq!(r.colouring.values(), &[1, 0, 1, 1]);
        let cert = r.certificate.unwrap();
        assert!(cert.contained);
        assert_eq!(cert.stab_before, cert.stab_after);
    }

    #[test]
    fn bicentred_is_rejected() {
        let c = vc(2, &[0, 1, 0, 1]);
        assert_eq!(
            vertex_to_edge(&families::path(4), &c, false),
            Err(Error::BicentredTreeUnsupported)
        );
    }

    #[test]
    fn single_colour() {
        let g = families::cycle(6);
        let r = vertex_to_edge(&g, &vc(1, &[0; 6]), true).unwrap();
        assert_eq!(r.strategy, Strategy::TrivialK1);
        assert_eq!(r.colouring.values(), &[0; 6]);
        assert!(r.certificate.unwrap().contained);
    }

    #[test]
    fn k4_two_colours() {
        let g = families::complete(4);
        let c = vc(2, &[0, 0, 1, 1]);
        let r = vertex_to_edge(&g, &c, true).unwrap();
        assert_eq!(r.strategy, Strategy::UnitMonochromatic);
        let aut = automorphisms(&g).unwrap();
        assert_eq!(stabiliser(&g, &aut, &c).unwrap().order(), 4);
        // Canonical is (0,1,1,1,1,0) on edges 01,02,03,12,13,23; edge 01 gets +1.
        assert_eq!(r.colouring.values(), &[1, 1, 1, 1, 1, 0]);

        let r = vertex_to_edge(&g, &vc(2, &[0, 1, 0, 1]), true).unwrap();
        assert_eq!(r.strategy, Strategy::UnitMonochromatic);
        // Edge (0,2) is the first monochromatic one.
        assert_eq!(r.colouring.values(), &[1, 1, 1, 1, 0, 1]);
    }

    #[test]
    fn odd_prime_on_odd_cycle() {
        let g = families::cycle(5);
        let c = vc(3, &[0, 1, 2, 2, 1]);
        let (out, tag) = per_prime(&g, &c).unwrap();
        assert_eq!(tag, Strategy::CanonicalNonbipartiteOddP);
        assert_eq!(out, canonical_edge_colouring(&g, &c).unwrap());
    }

    #[test]
    fn odd_cycle_class_sums_to_one() {
        // C5 with a pendant vertex 5 at 0.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        for values in [[0, 0, 0, 0, 0, 0], [1, 0, 1, 1, 0, 1], [1, 1, 1, 1, 1, 0]] {
            let c = vc(2, &values);
            let (out, tag) = per_prime(&g, &c).unwrap();
            assert_eq!(tag, Strategy::CycleClassOddP2);
            let on_cycle: u32 = (0..g.m())
                .filter(|&e| g.edge(e) != (0, 5))
                .map(|e| out.get(e))
                .sum();
            assert_eq!(on_cycle % 2, 1);
            assert!(is_less_symmetric(&g, &out, &c).unwrap().holds);
        }
    }

    #[test]
    fn long_even_cycle_sequence() {
        // C8 on 0..8 with a pendant vertex on 0.
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.push((0, 8));
        let g = Graph::new(9, edges).unwrap();
        let c = vc(2, &[0; 9]);
        let (out, tag) = per_prime(&g, &c).unwrap();
        assert_eq!(tag, Strategy::CycleClassEvenLong);
        let cs = equivalence_classes(&g).unwrap();
        let class = &cs.classes_of_kind(ClassKind::Cycle).next().unwrap().1.edges;
        let (_, walk) = cycle_walk(&g, class);
        let seq: Vec<u32> = walk.iter().map(|&e| out.get(e)).collect();
        assert_eq!(seq, [1, 1, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn two_four_cycles() {
        // Squares 0123 and 4567 joined by the path 2-8-4.
        let g = Graph::new(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (2, 8),
                (8, 4),
            ],
        )
        .unwrap();
        let c = vc(2, &[0, 1, 0, 1, 1, 0, 1, 1, 0]);
        let (out, tag) = per_prime(&g, &c).unwrap();
        assert_eq!(tag, Strategy::CycleClass4Pair);
        let first: Vec<u32> = cycle_walk(
            &g,
            &[0, 1, 2, 3].map(|i| g.edge_index(i, (i + 1) % 4).unwrap()),
        )
        .1
        .iter()
        .map(|&e| out.get(e))
        .collect();
        assert_eq!(first, [1, 0, 0, 0]);
        assert!(is_less_symmetric(&g, &out, &c).unwrap().holds);
    }

    #[test]
    fn unique_four_cycle() {
        // C4 with a pendant vertex.
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        for values in [[0, 1, 0, 1, 0], [0, 0, 1, 1, 1], [1, 0, 0, 0, 0]] {
            let c = vc(2, &values);
            let (out, tag) = per_prime(&g, &c).unwrap();
            assert_eq!(tag, Strategy::CycleClass4Unique);
            assert!(is_less_symmetric(&g, &out, &c).unwrap().holds);
        }
    }

    #[test]
    fn theta_long_path() {
        let g = families::theta(2, 2, 3);
        let c = vc(2, &vec![1; g.n()]);
        let (out, tag) = per_prime(&g, &c).unwrap();
        assert_eq!(tag, Strategy::PathClassLong);
        assert!(is_less_symmetric(&g, &out, &c).unwrap().holds);
    }

    #[test]
    fn edge_to_vertex_examples() {
        let star = families::star(3);
        let r = edge_to_vertex(&star, &ec(3, &[0, 1, 2]), true).unwrap();
        assert_eq!(r.colouring.values(), &[0, 0, 1, 2]);
        let p4 = families::path(4);
        let r = edge_to_vertex(&p4, &ec(2, &[1, 0, 1]), true).unwrap();
        assert_eq!(r.colouring.values(), &[1, 0, 0, 1]);
        assert_eq!(
            canonical_edge_colouring(&p4, &r.colouring)
                .unwrap()
                .values(),
            &[1, 0, 1]
        );
        assert_eq!(
            edge_to_vertex(&families::cycle(4), &ec(2, &[0; 4]), false),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn combined_primes() {
        let g = families::complete(4);
        let c = vc(6, &[0, 5, 3, 3]);
        let r = vertex_to_edge(&g, &c, true).unwrap();
        assert_eq!(r.strategy, Strategy::PrimeCombined);
        assert_eq!(r.components.len(), 2);
        assert!(r.colouring.values().iter().all(|&x| x < 6));
    }

    #[test]
    fn json_shape() {
        let r = vertex_to_edge(&families::cycle(6), &vc(1, &[0; 6]), true).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"k":1,"edge_colours":[0,0,0,0,0,0],"strategy":"trivial-k1","certificate":{"stab_before":12,"stab_after":12,"contained":true}}"#
        );
    }
}
