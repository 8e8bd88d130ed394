//! Colour arithmetic and colourings.
//!
//! A palette of `k` colours is identified with an abelian group
//! `Z_{m1} x ... x Z_{mr}`. Colours are stored as their palette integers
//! `0..k`, and the integer/tuple bijection is mixed radix with the first
//! modulus most significant, so colour `0` is always the group identity.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::symmetry::Permutation;

/// A product of cyclic groups `Z_{m1} x ... x Z_{mr}`, every `mi >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColourGroup {
    moduli: Vec<u32>,
    order: u32,
}

impl ColourGroup {
    /// The prime factorisation group for a palette of `k` colours, primes
    /// ascending with repeats (`4 -> Z2 x Z2`). `k = 1` gives the trivial group.
    pub fn from_palette(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(contract("palette size must be positive"));
        }
        let mut primes = Vec::new();
        let mut rest = k;
        let mut p = 2;
        while p * p <= rest {
            while rest.is_multiple_of(p) {
                primes.push(p);
                rest /= p;
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        Ok(ColourGroup {
            moduli: primes,
            order: k,
        })
    }

    /// `Z_k` as a single cyclic factor.
    pub fn cyclic(k: u32) -> Result<Self> {
        match k {
            0 => Err(contract("palette size must be positive")),
            1 => Ok(ColourGroup {
                moduli: Vec::new(),
                order: 1,
            }),
            _ => Ok(ColourGroup {
                moduli: vec![k],
                order: k,
            }),
        }
    }

    /// Product of the given moduli in order.
    pub fn product(moduli: &[u32]) -> Result<Self> {
        if moduli.iter().any(|&m| m < 2) {
            return Err(contract("every factor needs at least two elements"));
        }
        let order = moduli
            .iter()
            .try_fold(1u32, |acc, &m| acc.checked_mul(m))
            .ok_or_else(|| contract("group order overflows"))?;
        Ok(ColourGroup {
            moduli: moduli.to_vec(),
            order,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    /// Palette integer to component tuple.
    pub fn decode(&self, mut a: u32) -> Vec<u32> {
        let mut digits = vec![0; self.moduli.len()];
        for (d, &m) in digits.iter_mut().zip(&self.moduli).rev() {
            *d = a % m;
            a /= m;
        }
        digits
    }

    /// Component tuple to palette integer. Digits are reduced modulo their factor.
    pub fn encode(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&d, &m)| acc * m + d % m)
    }

    fn zip_with(&self, a: u32, b: u32, f: impl Fn(u32, u32, u32) -> u32) -> u32 {
        let (da, db) = (self.decode(a), self.decode(b));
        let out: Vec<u32> = da
            .iter()
            .zip(&db)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| f(x, y, m))
            .collect();
        self.encode(&out)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.zip_with(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.zip_with(a, b, |x, y, m| (x + m - y) % m)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    /// `times * a` for any integer multiplier.
    pub fn scale(&self, a: u32, times: i64) -> u32 {
        let digits: Vec<u32> = self
            .decode(a)
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (x as i64 * times).rem_euclid(m as i64) as u32)
            .collect();
        self.encode(&digits)
    }
}

/// Palette-size `k` group and its integer/tuple bijection in one call.
pub fn encode_palette(k: u32) -> Result<ColourGroup> {
    ColourGroup::from_palette(k)
}

/// Anything whose stabiliser can be asked for.
pub trait Colouring {
    fn is_preserved_by(&self, gamma: &Permutation) -> bool;
    fn check_domain(&self, g: &Graph) -> Result<()>;
    /// Vertex colours and edge labels handed to the automorphism search.
    fn search_labels(&self) -> (Option<&[u32]>, Option<&[u32]>);
}

macro_rules! colouring_type {
    ($name:ident, $what:literal) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            group: ColourGroup,
            values: Vec<u32>,
        }

        impl $name {
            pub fn new(group: ColourGroup, values: Vec<u32>) -> Result<Self> {
                if let Some(&bad) = values.iter().find(|&&a| !group.contains(a)) {
                    return Err(Error::Validation(format!(
                        "colour {bad} outside a palette of {}",
                        group.order()
                    )));
                }
                Ok($name { group, values })
            }

            pub fn constant(group: ColourGroup, len: usize, colour: u32) -> Result<Self> {
                Self::new(group, vec![colour; len])
            }

            pub fn group(&self) -> &ColourGroup {
                &self.group
            }

            /// Palette size.
            pub fn k(&self) -> u32 {
                self.group.order()
            }

            pub fn values(&self) -> &[u32] {
                &self.values
            }

            pub fn get(&self, i: usize) -> u32 {
                self.values[i]
            }

            pub fn len(&self) -> usize {
                self.values.len()
            }

            pub fn is_empty(&self) -> bool {
                self.values.is_empty()
            }

            /// Same values read in another group of the same order.
            pub fn reinterpret(&self, group: ColourGroup) -> Result<Self> {
                if group.order() != self.group.order() {
                    return Err(contract("reinterpreting colours needs equal palette sizes"));
                }
                Ok($name {
                    group,
                    values: self.values.clone(),
                })
            }

            /// Component `i` of every colour, as a colouring over `Z_{m_i}`.
            pub fn project(&self, i: usize) -> Result<Self> {
                let m = *self
                    .group
                    .moduli()
                    .get(i)
                    .ok_or_else(|| contract(format!("component {i} out of range")))?;
                let values = self
                    .values
                    .iter()
                    .map(|&a| self.group.decode(a)[i])
                    .collect();
                Ok($name {
                    group: ColourGroup::cyclic(m)?,
                    values,
                })
            }

            /// Transposes colours `a` and `b` everywhere.
            pub fn swap_colours(&self, a: u32, b: u32) -> Self {
                let values = self
                    .values
                    .iter()
                    .map(|&x| {
                        if x == a {
                            b
                        } else if x == b {
                            a
                        } else {
                            x
                        }
                    })
                    .collect();
                $name {
                    group: self.group.clone(),
                    values,
                }
            }

            fn expect_len(&self, want: usize) -> Result<()> {
                if self.values.len() == want {
                    Ok(())
                } else {
                    Err(contract(format!(
                        concat!($what, " colouring has {} values, graph has {}"),
                        self.values.len(),
                        want
                    )))
                }
            }

            /// Number of distinct colours actually used.
            pub fn palette_used(&self) -> usize {
                let mut v = self.values.clone();
                v.sort_unstable();
                v.dedup();
                v.len()
            }
        }
    };
}

colouring_type!(VertexColouring, "vertex");
colouring_type!(EdgeColouring, "edge");

impl Colouring for VertexColouring {
    fn check_domain(&self, g: &Graph) -> Result<()> {
        self.expect_len(g.n())
    }

    fn is_preserved_by(&self, gamma: &Permutation) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(v, &c)| self.values[gamma.vertex(v)] == c)
    }

    fn search_labels(&self) -> (Option<&[u32]>, Option<&[u32]>) {
        (Some(&self.values), None)
    }
}

impl Colouring for EdgeColouring {
    fn check_domain(&self, g: &Graph) -> Result<()> {
        self.expect_len(g.m())
    }

    fn is_preserved_by(&self, gamma: &Permutation) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(e, &c)| self.values[gamma.edge(e)] == c)
    }

    fn search_labels(&self) -> (Option<&[u32]>, Option<&[u32]>) {
        (None, Some(&self.values))
    }
}

/// `uv -> c(u) + c(v)`.
pub fn canonical_edge_colouring(g: &Graph, c: &VertexColouring) -> Result<EdgeColouring> {
    c.check_domain(g)?;
    let group = c.group();
    let values = g
        .edges()
        .iter()
        .map(|&(u, v)| group.add(c.get(u), c.get(v)))
        .collect();
    Ok(EdgeColouring {
        group: group.clone(),
        values,
    })
}

/// The unique vertex colouring of the tree `t` with `root -> root_colour` whose
/// canonical edge colouring is `c_edge`.
pub fn vertex_colouring_from_edges(
    t: &Graph,
    c_edge: &EdgeColouring,
    root: usize,
    root_colour: u32,
) -> Result<VertexColouring> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    c_edge.check_domain(t)?;
    let group = c_edge.group();
    if root >= t.n() || !group.contains(root_colour) {
        return Err(contract("root or root colour out of range"));
    }
    let mut values = vec![u32::MAX; t.n()];
    values[root] = root_colour;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(w) = queue.pop_front() {
        for &(u, e) in t.incident(w) {
            if values[u] == u32::MAX {
                values[u] = group.sub(c_edge.get(e), values[w]);
                queue.push_back(u);
            }
        }
    }
    VertexColouring::new(group.clone(), values)
}

/// `sum_{i=1..l} (-1)^i c(e_i)` along the closed walk that starts at `start`
/// and traverses `walk` in order.
pub fn alternating_walk_sum(
    g: &Graph,
    c_edge: &EdgeColouring,
    start: usize,
    walk: &[usize],
) -> Result<u32> {
    c_edge.check_domain(g)?;
    if start >= g.n() {
        return Err(contract("walk start out of range"));
    }
    let group = c_edge.group();
    let mut at = start;
    let mut sum = 0;
    for (i, &e) in walk.iter().enumerate() {
        if e >= g.m() {
            return Err(contract(format!("edge {e} out of range")));
        }
        let (u, v) = g.edge(e);
        at = match at {
            x if x == u => v,
            x if x == v => u,
            _ => {
                return Err(contract(format!(
                    "walk step {} is not incident to vertex {at}",
                    i + 1
                )))
            }
        };
        let term = if i % 2 == 0 {
            group.neg(c_edge.get(e))
        } else {
            c_edge.get(e)
        };
        sum = group.add(sum, term);
    }
    if at != start {
        return Err(contract("walk does not return to its start"));
    }
    Ok(sum)
}

/// Tuple-valued edge colouring from one part per group factor; the result
/// lives in the product of the parts' groups.
pub fn combine(parts: &[EdgeColouring]) -> Result<EdgeColouring> {
    let first = parts
        .first()
        .ok_or_else(|| contract("nothing to combine"))?;
    if parts.iter().any(|p| p.len() != first.len()) {
        return Err(contract("parts colour different edge sets"));
    }
    let moduli: Vec<u32> = parts
        .iter()
        .flat_map(|p| p.group.moduli().iter().copied())
        .collect();
    let group = ColourGroup::product(&moduli)?;
    let values = (0..first.len())
        .map(|e| {
            let digits: Vec<u32> = parts
                .iter()
                .flat_map(|p| p.group.decode(p.get(e)))
                .collect();
            group.encode(&digits)
        })
        .collect();
    Ok(EdgeColouring { group, values })
}

/// Wire form: `{"k": int, "vertex_colours": [...]}` or `{"k": int, "edge_colours": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColouringDoc {
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_colours: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_colours: Option<Vec<u32>>,
}

/// A parsed colouring of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyColouring {
    Vertex(VertexColouring),
    Edge(EdgeColouring),
}

impl ColouringDoc {
    pub fn from_vertex(c: &VertexColouring) -> Self {
        ColouringDoc {
            k: c.k(),
            vertex_colours: Some(c.values.clone()),
            edge_colours: None,
        }
    }

    pub fn from_edge(c: &EdgeColouring) -> Self {
        ColouringDoc {
            k: c.k(),
            vertex_colours: None,
            edge_colours: Some(c.values.clone()),
        }
    }

    /// Validates and builds the colouring over the palette group of `k`.
    pub fn into_colouring(self) -> Result<AnyColouring> {
        let group = ColourGroup::from_palette(self.k)?;
        match (self.vertex_colours, self.edge_colours) {
            (Some(v), None) => Ok(AnyColouring::Vertex(VertexColouring::new(group, v)?)),
            (None, Some(e)) => Ok(AnyColouring::Edge(EdgeColouring::new(group, e)?)),
            _ => Err(Error::Validation(
                "colouring must have exactly one of vertex_colours and edge_colours".into(),
            )),
        }
    }
}

impl From<&VertexColouring> for ColouringDoc {
    fn from(c: &VertexColouring) -> Self {
        ColouringDoc::from_vertex(c)
    }
}

impl From<&EdgeColouring> for ColouringDoc {
    fn from(c: &EdgeColouring) -> Self {
        ColouringDoc::from_edge(c)
    }
}
