//! Distinguishing numbers and indices, distinguishing colourings of rooted
//! trees, and the family of bicentred trees whose index exceeds their number.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{contract, Error, Result};
use crate::graph::{
    free_tree_code, rooted_code, rooted_code_and_rigidity, tree_shape, Graph, TreeShape,
};
use crate::symmetry::nontrivial_preserving;

/// Largest number of colourings [`enumerate_distinguishing_edge_colourings`] will visit.
pub const ENUMERATION_GUARD: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vertex,
    Edge,
}

/// The least palette size with a distinguishing colouring and one such colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishingReport {
    pub k: u32,
    pub witness: Vec<u32>,
    pub mode: Mode,
}

/// Backtracking search for a distinguishing colouring.
///
/// Items are coloured in a fixed order. At every node the uncoloured items are
/// given private labels, so a nontrivial automorphism that preserves the partial
/// colouring also preserves every completion and the branch is dead. Colour ids
/// are introduced in increasing order, which factors out palette permutations.
struct Search<'a> {
    g: &'a Graph,
    mode: Mode,
    k: u32,
    order: Vec<usize>,
    // Items that must share a colour, as positions in `order` (earlier, later).
    tie: Option<(usize, usize)>,
    // Earlier positions whose colour each position must avoid.
    differ: Vec<Vec<usize>>,
    labels: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, mode: Mode, k: u32, tie: Option<(usize, usize)>) -> Self {
        let order = item_order(g, mode);
        let len = order.len();
        let tie = tie.map(|(a, b)| {
            let pa = order.iter().position(|&x| x == a).unwrap();
            let pb = order.iter().position(|&x| x == b).unwrap();
            (pa.min(pb), pa.max(pb))
        });
        let labels = (0..len as u32).map(|i| k + i).collect();
        let mut pos = vec![0; len];
        for (p, &item) in order.iter().enumerate() {
            pos[item] = p;
        }
        let mut differ = vec![Vec::new(); len];
        for (a, b) in swappable_pairs(g, mode) {
            let (pa, pb) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
            differ[pb].push(pa);
        }
        Search {
            g,
            mode,
            k,
            order,
            tie,
            differ,
            labels,
        }
    }

    fn dead(&self) -> bool {
        let (vertex, edge) = match self.mode {
            Mode::Vertex => (Some(&self.labels[..]), None),
            Mode::Edge => (None, Some(&self.labels[..])),
        };
        nontrivial_preserving(self.g, vertex, edge).is_some()
    }

    fn run(&mut self) -> Option<Vec<u32>> {
        if self.go(0, 0) {
            Some(self.labels.clone())
        } else {
            None
        }
    }

    fn go(&mut self, pos: usize, used: u32) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let item = self.order[pos];
        let choices: Vec<u32> = match self.tie {
            Some((first, second)) if second == pos => vec![self.labels[self.order[first]]],
            _ => (0..self.k.min(used + 1)).collect(),
        };
        let choices = choices
            .into_iter()
            .filter(|&c| {
                self.differ[pos]
                    .iter()
                    .all(|&p| self.labels[self.order[p]] != c)
            })
            .collect::<Vec<_>>();
        for colour in choices {
            self.labels[item] = colour;
            if !self.dead() && self.go(pos + 1, used.max(colour + 1)) {
                return true;
            }
        }
        self.labels[item] = self.k + item as u32;
        false
    }
}

/// Vertices in depth-first preorder from the tree centre (or vertex 0), and
/// edges by the later then the earlier preorder position of their ends.
fn item_order(g: &Graph, mode: Mode) -> Vec<usize> {
    let start = tree_shape(g).root().unwrap_or(0);
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    let mut preorder = Vec::with_capacity(n);
    for root in std::iter::once(start).chain(0..n) {
        if pos[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if pos[v] != usize::MAX {
                continue;
            }
            pos[v] = preorder.len();
            preorder.push(v);
            stack.extend(
                g.neighbours(v)
                    .filter(|&w| pos[w] == usize::MAX)
                    .collect::<Vec<_>>()
                    .into_iter()
                    .rev(),
            );
        }
    }
    match mode {
        Mode::Vertex => preorder,
        Mode::Edge => {
            let mut edges: Vec<usize> = (0..g.m()).collect();
            edges.sort_by_key(|&e| {
                let (u, v) = g.edge(e);
                (pos[u].max(pos[v]), pos[u].min(pos[v]))
            });
            edges
        }
    }
}

/// Pairs of items exchanged by a transposition automorphism that fixes
/// everything else, so any distinguishing colouring separates them: twin
/// vertices, or pendant edges at a common vertex.
fn swappable_pairs(g: &Graph, mode: Mode) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    match mode {
        Mode::Vertex => {
            let nbhd: Vec<Vec<usize>> = (0..g.n())
                .map(|v| {
                    let mut a: Vec<usize> = g.neighbours(v).collect();
                    a.sort_unstable();
                    a
                })
                .collect();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if nbhd[u].len() != nbhd[v].len() {
                        continue;
                    }
                    let strip = |a: &[usize], x: usize| {
                        a.iter().copied().filter(|&y| y != x).collect::<Vec<_>>()
                    };
                    if strip(&nbhd[u], v) == strip(&nbhd[v], u) {
                        pairs.push((u, v));
                    }
                }
            }
        }
        Mode::Edge if g.n() >= 3 => {
            for x in 0..g.n() {
                let pendant: Vec<usize> = g
                    .incident(x)
                    .iter()
                    .filter(|&&(w, _)| g.degree(w) == 1)
                    .map(|&(_, e)| e)
                    .collect();
                for (i, &e) in pendant.iter().enumerate() {
                    pairs.extend(pendant[i + 1..].iter().map(|&f| (e, f)));
                }
            }
        }
        Mode::Edge => {}
    }
    pairs
}

/// The least palette worth searching: the exact value for trees, otherwise
/// the size of the largest class of twins (or of pendant edges at one vertex),
/// since those must all be coloured differently.
fn palette_lower_bound(g: &Graph, mode: Mode) -> u32 {
    if g.is_tree() && (mode == Mode::Vertex || g.n() >= 3) {
        return tree_least_palette(g, mode);
    }
    let mut sizes: BTreeMap<(bool, Vec<usize>), u32> = BTreeMap::new();
    for v in 0..g.n() {
        match mode {
            Mode::Vertex => {
                let mut open: Vec<usize> = g.neighbours(v).collect();
                open.sort_unstable();
                let mut closed = open.clone();
                closed.push(v);
                closed.sort_unstable();
                *sizes.entry((false, open)).or_default() += 1;
                *sizes.entry((true, closed)).or_default() += 1;
            }
            Mode::Edge => {
                let pendant = g.neighbours(v).filter(|&w| g.degree(w) == 1).count() as u32;
                sizes.insert((false, vec![v]), pendant);
            }
        }
    }
    sizes.into_values().max().unwrap_or(1).max(1)
}

/// Saturating count of rigid colourings of the subtree at `root` (avoiding
/// `cut`) up to root-fixing isomorphism. In vertex mode the root takes one
/// of `k` colours and children of one shape `S` taken `m` times contribute
/// `C(N(S), m)`; in edge mode the edge to each child is coloured too, giving
/// `C(k * N(S), m)`. `u128::MAX` means "at least that many".
fn rooted_class_count(g: &Graph, root: usize, cut: Option<usize>, k: u32, mode: Mode) -> u128 {
    let mut parent_edge = vec![usize::MAX; g.n()];
    let mut order = vec![root];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &(w, e) in g.incident(v) {
            if Some(e) != cut && !seen[w] {
                seen[w] = true;
                parent_edge[w] = e;
                order.push(w);
            }
        }
    }
    let k = k as u128;
    let mut count = vec![1u128; g.n()];
    for &v in order.iter().rev() {
        let mut shapes: BTreeMap<String, (u128, u128)> = BTreeMap::new();
        for &(w, e) in g.incident(v) {
            if e != parent_edge[v] && Some(e) != cut {
                shapes
                    .entry(rooted_code(g, w, Some(e), None))
                    .or_insert((count[w], 0))
                    .1 += 1;
            }
        }
        let mut total = if mode == Mode::Vertex { k } else { 1 };
        for (per_child, m) in shapes.into_values() {
            let a = if mode == Mode::Edge {
                per_child.saturating_mul(k)
            } else {
                per_child
            };
            total = total.saturating_mul(saturating_binomial(a, m));
        }
        count[v] = total;
    }
    count[root]
}

/// Exact D or D' of a tree from class counts of its rooted halves. Every
/// automorphism fixes the centre, or maps the central edge to itself.
fn tree_least_palette(t: &Graph, mode: Mode) -> u32 {
    let exists = |k: u32| match tree_shape(t) {
        TreeShape::Unicentred { centre } => rooted_class_count(t, centre, None, k, mode) > 0,
        TreeShape::Bicentred {
            centres: (a, b),
            central_edge,
        } => {
            let ca = rooted_class_count(t, a, Some(central_edge), k, mode);
            if rooted_code(t, a, Some(central_edge), None)
                == rooted_code(t, b, Some(central_edge), None)
            {
                // The swap is broken exactly when the halves get different classes.
                ca >= 2
            } else {
                ca > 0 && rooted_class_count(t, b, Some(central_edge), k, mode) > 0
            }
        }
        TreeShape::NotATree => unreachable!("called on trees only"),
    };
    (1..)
        .find(|&k| exists(k))
        .expect("n colours always suffice")
}

fn saturating_binomial(a: u128, m: u128) -> u128 {
    if m > a {
        return 0;
    }
    let m = m.min(a - m);
    let mut r = 1u128;
    for i in 0..m {
        match r.checked_mul(a - i) {
            Some(x) => r = x / (i + 1),
            None => return u128::MAX,
        }
    }
    r
}

fn least_palette(g: &Graph, mode: Mode, max_k: u32) -> Result<DistinguishingReport> {
    g.require_connected()?;
    for k in palette_lower_bound(g, mode)..=max_k {
        if let Some(witness) = Search::new(g, mode, k, None).run() {
            return Ok(DistinguishingReport { k, witness, mode });
        }
    }
    Err(Error::BoundExceeded { bound: max_k })
}

/// D(g): the least `k <= max_k` admitting a vertex colouring preserved by no
/// nontrivial automorphism.
pub fn distinguishing_number(g: &Graph, max_k: u32) -> Result<DistinguishingReport> {
    least_palette(g, Mode::Vertex, max_k)
}

/// D'(g): as [`distinguishing_number`] for edge colourings. Needs at least three
/// vertices, below which the edge action is not faithful.
pub fn distinguishing_index(g: &Graph, max_k: u32) -> Result<DistinguishingReport> {
    if g.n() < 3 {
        return Err(contract(
            "the distinguishing index needs at least 3 vertices",
        ));
    }
    least_palette(g, Mode::Edge, max_k)
}

/// Whether some distinguishing vertex `k`-colouring gives `u` and `v` the same colour.
pub fn has_distinguishing_with_equal_pair(g: &Graph, k: u32, u: usize, v: usize) -> Result<bool> {
    g.require_connected()?;
    if u >= g.n() || v >= g.n() {
        return Err(contract("vertex out of range"));
    }
    let tie = (u != v).then_some((u, v));
    Ok(Search::new(g, Mode::Vertex, k, tie).run().is_some())
}

/// A tree with a designated root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= graph.n() {
            return Err(contract(format!("root {root} outside 0..{}", graph.n())));
        }
        Ok(RootedTree { graph, root })
    }

    pub fn single_vertex() -> Self {
        RootedTree {
            graph: Graph::empty(1),
            root: 0,
        }
    }

    /// Path on `n` vertices rooted at an end.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(crate::graph::families::path(n), 0)
    }

    /// Star with `leaves` leaves rooted at its centre.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::new(crate::graph::families::star(leaves), 0)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// The component of `t - cut` containing `root`, relabelled in BFS order
    /// so the root becomes 0.
    pub fn component(t: &Graph, root: usize, cut: usize) -> Result<Self> {
        let mut order = vec![root];
        let mut index = vec![usize::MAX; t.n()];
        index[root] = 0;
        let mut edges = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &(w, e) in t.incident(v) {
                if e != cut && index[w] == usize::MAX {
                    index[w] = order.len();
                    order.push(w);
                    edges.push((index[v], index[w]));
                }
            }
        }
        Self::new(Graph::new(order.len(), edges)?, 0)
    }

    fn code(&self, labels: Option<&[u32]>) -> String {
        rooted_code(&self.graph, self.root, None, labels)
    }
}

/// Whether a root-preserving isomorphism maps `a` onto `b`, also preserving
/// edge colours when both are given.
pub fn rooted_tree_isomorphic(
    a: &RootedTree,
    b: &RootedTree,
    colours: Option<(&[u32], &[u32])>,
) -> bool {
    match colours {
        None => a.code(None) == b.code(None),
        Some((ca, cb)) => {
            ca.len() == a.graph.m()
                && cb.len() == b.graph.m()
                && a.code(Some(ca)) == b.code(Some(cb))
        }
    }
}

/// Distinguishing edge colourings of a rooted tree up to colour-preserving
/// rooted isomorphism. Automorphisms of a rooted tree fix the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouringClasses {
    pub count: usize,
    /// The lexicographically first colouring of each class, in that order.
    pub representatives: Vec<Vec<u32>>,
}

pub fn enumerate_distinguishing_edge_colourings(
    t: &RootedTree,
    k: u32,
) -> Result<ColouringClasses> {
    if k == 0 {
        return Err(contract("palette size must be positive"));
    }
    let m = t.graph.m();
    let total = (k as u64)
        .checked_pow(m as u32)
        .filter(|&x| x <= ENUMERATION_GUARD);
    if total.is_none() {
        return Err(Error::TooLarge(format!(
            "{k}^{m} edge colourings exceed the enumeration guard of {ENUMERATION_GUARD}"
        )));
    }
    let mut seen = std::collections::HashSet::new();
    let mut representatives = Vec::new();
    let mut c = vec![0u32; m];
    loop {
        let (code, rigid) = rooted_code_and_rigidity(&t.graph, t.root, None, Some(&c));
        if rigid && seen.insert(code) {
            representatives.push(c.clone());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(ColouringClasses {
                    count: representatives.len(),
                    representatives,
                });
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

/// The class count of [`enumerate_distinguishing_edge_colourings`] without
/// enumerating. A colouring is rigid when the (edge colour, subtree class)
/// pairs at each vertex are distinct, so for children of one shape `S` taken
/// `m` times there are `C(k * N(S), m)` choices.
pub fn count_distinguishing_edge_colourings(t: &RootedTree, k: u32) -> Result<u128> {
    if k == 0 {
        return Err(contract("palette size must be positive"));
    }
    match rooted_class_count(&t.graph, t.root, None, k, Mode::Edge) {
        u128::MAX => Err(Error::TooLarge("class count exceeds 128 bits".into())),
        count => Ok(count),
    }
}

/// Outcome of the three membership conditions. Later conditions are only
/// evaluated when the tree is bicentred.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyTVerdict {
    pub member: bool,
    pub k: u32,
    pub bicentred: bool,
    pub halves_isomorphic: Option<bool>,
    /// Distinguishing `k`-edge colourings of the half at the lower centre, up to isomorphism.
    pub half_colourings: Option<usize>,
}

/// Whether `t` is bicentred, its two rooted halves are isomorphic, and each
/// half has exactly one distinguishing `k`-edge colouring up to isomorphism.
#[allow(non_snake_case)]
pub fn in_family_T(t: &Graph, k: u32) -> Result<FamilyTVerdict> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(contract(
            "membership is defined for trees with at least 3 vertices",
        ));
    }
    let TreeShape::Bicentred {
        centres: (a, b),
        central_edge,
    } = tree_shape(t)
    else {
        return Ok(FamilyTVerdict {
            member: false,
            k,
            bicentred: false,
            halves_isomorphic: None,
            half_colourings: None,
        });
    };
    let (ha, hb) = (
        RootedTree::component(t, a, central_edge)?,
        RootedTree::component(t, b, central_edge)?,
    );
    let iso = rooted_tree_isomorphic(&ha, &hb, None);
    let count =
        usize::try_from(count_distinguishing_edge_colourings(&ha, k)?).unwrap_or(usize::MAX);
    Ok(FamilyTVerdict {
        member: iso && count == 1,
        k,
        bicentred: true,
        halves_isomorphic: Some(iso),
        half_colourings: Some(count),
    })
}

/// Truth values of the three equivalent characterisations for a bicentred
/// tree and palette size `k >= 2`: (i) D = k and D' = k + 1; (ii) D = k and no
/// distinguishing `k`-vertex colouring gives both centres one colour; (iii)
/// membership in the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub k: u32,
    pub d: u32,
    pub d_prime: u32,
    pub index_exceeds: bool,
    pub centres_split: bool,
    pub in_family: bool,
}

impl SharpnessReport {
    pub fn agree(&self) -> bool {
        self.index_exceeds == self.centres_split && self.centres_split == self.in_family
    }
}

/// Evaluates all three conditions; disagreement is an [`Error::Invariant`].
pub fn verify_sharpness(t: &Graph, k: u32) -> Result<SharpnessReport> {
    let report = sharpness_conditions(t, k)?;
    if !report.agree() {
        return Err(Error::Invariant(format!(
            "conditions disagree for k = {k}: ({}, {}, {})",
            report.index_exceeds, report.centres_split, report.in_family
        )));
    }
    Ok(report)
}

/// The three conditions without the agreement check.
pub fn sharpness_conditions(t: &Graph, k: u32) -> Result<SharpnessReport> {
    let TreeShape::Bicentred {
        centres: (u, v), ..
    } = tree_shape(t)
    else {
        return Err(contract("expected a bicentred tree"));
    };
    if k < 2 {
        return Err(contract("the characterisation needs k >= 2"));
    }
    let bound = t.n() as u32;
    let d = distinguishing_number(t, bound)?.k;
    let d_prime = distinguishing_index(t, bound)?.k;
    let index_exceeds = d == k && d_prime == k + 1;
    let centres_split = d == k && !has_distinguishing_with_equal_pair(t, k, u, v)?;
    let in_family = in_family_T(t, k)?.member;
    Ok(SharpnessReport {
        k,
        d,
        d_prime,
        index_exceeds,
        centres_split,
        in_family,
    })
}

/// Joins `u` and `v` by an edge and hangs `k * n_i` copies of each `T_i` from
/// each of them, where `n_i` counts the distinguishing `k`-edge colourings of
/// `T_i` up to isomorphism. Vertices 0 and 1 are `u` and `v`.
#[allow(non_snake_case)]
pub fn build_family_T_example(collection: &[RootedTree], k: u32) -> Result<Graph> {
    let mut counts = Vec::with_capacity(collection.len());
    for (i, t) in collection.iter().enumerate() {
        let n_i = usize::try_from(count_distinguishing_edge_colourings(t, k)?)
            .map_err(|_| Error::TooLarge(format!("tree {i} has too many classes to copy")))?;
        if n_i == 0 {
            return Err(contract(format!(
                "tree {i} has no distinguishing {k}-edge colouring"
            )));
        }
        counts.push(n_i);
    }
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for side in [0, 1] {
        for (t, &n_i) in collection.iter().zip(&counts) {
            for _ in 0..k as usize * n_i {
                let base = next;
                // Shift so the copy's root sits at `base`.
                let shift = |x: usize| base + (x + t.graph.n() - t.root) % t.graph.n();
                edges.push((side, shift(t.root)));
                edges.extend(t.graph.edges().iter().map(|&(a, b)| (shift(a), shift(b))));
                next += t.graph.n();
            }
        }
    }
    Graph::new(next, edges)
}

/// Whether two trees are isomorphic.
pub fn trees_isomorphic(a: &Graph, b: &Graph) -> bool {
    match (free_tree_code(a), free_tree_code(b)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}
