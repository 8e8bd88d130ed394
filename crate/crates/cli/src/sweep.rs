//! Corpus sweeps behind `desym verify`.

use std::collections::HashSet;

use clap::ValueEnum;
use desym_core::colouring::{canonical_edge_colouring, ColourGroup, VertexColouring};
use desym_core::corpus::{connected_graphs_up_to, trees_up_to};
use desym_core::desymm::{edge_to_vertex, vertex_to_edge};
use desym_core::distinguishing::{
    distinguishing_index, distinguishing_number, in_family_T, sharpness_conditions,
};
use desym_core::graph::{to_graph6, tree_shape, TreeShape};
use desym_core::symmetry::{automorphisms, is_less_symmetric, stabiliser};
use desym_core::{Error, Graph};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::input::{random_edge_colouring, random_vertex_colouring, rng};

/// Largest colouring count the bijection check will enumerate per tree and palette.
pub const BIJECTION_GUARD: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// D' <= D + 1.
    IndexBound,
    /// The three characterisations of bicentred trees with D' = D + 1 agree.
    Sharpness,
    /// Every vertex colouring is less symmetric than its canonical edge colouring.
    CanonicalContainment,
    /// On trees the canonical map is a stabiliser-preserving bijection.
    TreeBijection,
    /// Vertex-to-edge desymmetrisation passes its certificate.
    VertexToEdge,
    /// Edge-to-vertex desymmetrisation passes its certificate and round-trips.
    EdgeToVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusKind {
    Trees,
    Connected,
}

impl Check {
    pub fn default_kind(self) -> CorpusKind {
        match self {
            Check::Sharpness | Check::TreeBijection | Check::EdgeToVertex => CorpusKind::Trees,
            _ => CorpusKind::Connected,
        }
    }

    fn has_rows(self) -> bool {
        matches!(self, Check::IndexBound | Check::Sharpness)
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub check: Check,
    pub kind: CorpusKind,
    pub min_n: usize,
    pub max_n: usize,
    /// Fixed palette size; `None` lets each check pick its own.
    pub k: Option<u32>,
    pub samples: usize,
    pub seed: u64,
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct Row {
    pub graph6: String,
    pub n: usize,
    pub D: u32,
    pub D_prime: u32,
    pub in_T: Option<bool>,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub check: Check,
    pub kind: CorpusKind,
    pub min_n: usize,
    pub max_n: usize,
    pub k: Option<u32>,
    pub samples: usize,
    pub seed: u64,
    pub graphs: usize,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<Row>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Outcome {
    checked: usize,
    skipped: usize,
    failures: Vec<String>,
    row: Option<Row>,
}

impl Outcome {
    fn skipped() -> Self {
        Outcome {
            skipped: 1,
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

pub fn corpus(kind: CorpusKind, min_n: usize, max_n: usize) -> CliResult<Vec<Graph>> {
    if min_n == 0 || min_n > max_n {
        return Err(CliError::Usage(format!(
            "need 1 <= min-n <= max-n, got {min_n}..{max_n}"
        )));
    }
    let levels = match kind {
        CorpusKind::Trees => trees_up_to(max_n)?,
        CorpusKind::Connected => connected_graphs_up_to(max_n)?,
    };
    Ok(levels.into_iter().skip(min_n - 1).flatten().collect())
}

/// Runs the sweep. Work is spread over `jobs` threads but results are
/// aggregated in corpus order, so the report does not depend on scheduling.
pub fn run(cfg: &SweepConfig) -> CliResult<SweepReport> {
    if cfg.k == Some(0) {
        return Err(CliError::Usage("k must be positive".into()));
    }
    if cfg.kind == CorpusKind::Connected
        && matches!(cfg.check, Check::TreeBijection | Check::EdgeToVertex)
    {
        return Err(CliError::Usage(format!(
            "{:?} needs --kind trees",
            cfg.check
        )));
    }
    let graphs = corpus(cfg.kind, cfg.min_n, cfg.max_n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let outcomes: Vec<desym_core::Result<Outcome>> = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| check_graph(cfg, i as u64, g))
            .collect()
    });
    let mut report = SweepReport {
        check: cfg.check,
        kind: cfg.kind,
        min_n: cfg.min_n,
        max_n: cfg.max_n,
        k: cfg.k,
        samples: cfg.samples,
        seed: cfg.seed,
        graphs: graphs.len(),
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
        rows: Vec::new(),
    };
    for (g, outcome) in graphs.iter().zip(outcomes) {
        let outcome = outcome?;
        report.checked += outcome.checked;
        report.skipped += outcome.skipped;
        let graph6 = to_graph6(g);
        report
            .failures
            .extend(outcome.failures.into_iter().map(|detail| Failure {
                graph6: graph6.clone(),
                detail,
            }));
        if cfg.check.has_rows() {
            report.rows.extend(outcome.row);
        }
    }
    Ok(report)
}

fn check_graph(cfg: &SweepConfig, index: u64, g: &Graph) -> desym_core::Result<Outcome> {
    let mut rng = rng(cfg.seed, index);
    let pick_k = |rng: &mut rand_chacha::ChaCha8Rng| cfg.k.unwrap_or_else(|| rng.gen_range(2..=5));
    match cfg.check {
        Check::IndexBound => index_bound(g),
        Check::Sharpness => sharpness(g, cfg.k),
        Check::TreeBijection => tree_bijection(g, cfg.k),
        Check::CanonicalContainment => {
            let mut out = Outcome::default();
            for _ in 0..cfg.samples {
                let k = pick_k(&mut rng);
                let c = random_vertex_colouring(&mut rng, g, k)?;
                let canonical = canonical_edge_colouring(g, &c)?;
                let holds = is_less_symmetric(g, &c, &canonical)?.holds;
                out.check(holds, || format!("k={k} c={:?}", c.values()));
            }
            Ok(out)
        }
        Check::VertexToEdge => {
            if matches!(tree_shape(g), TreeShape::Bicentred { .. }) {
                return Ok(Outcome::skipped());
            }
            let mut out = Outcome::default();
            for _ in 0..cfg.samples {
                let k = pick_k(&mut rng);
                let c = random_vertex_colouring(&mut rng, g, k)?;
                let result = vertex_to_edge(g, &c, true);
                let detail = || format!("k={k} c={:?}", c.values());
                match result {
                    Ok(r) => out.check(r.certificate.is_some_and(|x| x.contained), detail),
                    Err(Error::Invariant(e)) => out.check(false, || format!("{}: {e}", detail())),
                    Err(e) => return Err(e),
                }
            }
            Ok(out)
        }
        Check::EdgeToVertex => {
            let mut out = Outcome::default();
            for _ in 0..cfg.samples {
                let k = pick_k(&mut rng);
                let c = random_edge_colouring(&mut rng, g, k)?;
                let detail = || format!("k={k} c={:?}", c.values());
                match edge_to_vertex(g, &c, true) {
                    Ok(r) => {
                        let round_trip = canonical_edge_colouring(g, &r.colouring)? == c;
                        out.check(
                            round_trip && r.certificate.is_some_and(|x| x.contained),
                            detail,
                        );
                    }
                    Err(Error::Invariant(e)) => out.check(false, || format!("{}: {e}", detail())),
                    Err(e) => return Err(e),
                }
            }
            Ok(out)
        }
    }
}

fn index_bound(g: &Graph) -> desym_core::Result<Outcome> {
    if g.n() < 3 {
        return Ok(Outcome::skipped());
    }
    let bound = g.n() as u32;
    let d = distinguishing_number(g, bound)?.k;
    let d_prime = distinguishing_index(g, bound)?.k;
    let in_t = if g.is_tree() {
        Some(in_family_T(g, d)?.member)
    } else {
        None
    };
    let mut out = Outcome::default();
    out.check(d_prime <= d + 1, || format!("D={d} D'={d_prime}"));
    out.row = Some(Row {
        graph6: to_graph6(g),
        n: g.n(),
        D: d,
        D_prime: d_prime,
        in_T: in_t,
        k: d,
    });
    Ok(out)
}

fn sharpness(g: &Graph, k: Option<u32>) -> desym_core::Result<Outcome> {
    if g.n() < 4 || !matches!(tree_shape(g), TreeShape::Bicentred { .. }) {
        return Ok(Outcome::skipped());
    }
    let k = match k {
        Some(k) => k,
        None => distinguishing_number(g, g.n() as u32)?.k,
    };
    if k < 2 {
        return Ok(Outcome::skipped());
    }
    let r = sharpness_conditions(g, k)?;
    let mut out = Outcome::default();
    out.check(r.agree(), || {
        format!(
            "k={k}: (i)={} (ii)={} (iii)={}",
            r.index_exceeds, r.centres_split, r.in_family
        )
    });
    out.row = Some(Row {
        graph6: to_graph6(g),
        n: g.n(),
        D: r.d,
        D_prime: r.d_prime,
        in_T: Some(r.in_family),
        k,
    });
    Ok(out)
}

/// Exhausts the vertex colourings with the centre (or both centres) coloured
/// 0 and checks that their canonical images are distinct, fill the expected
/// target set, and have identical stabilisers.
fn tree_bijection(t: &Graph, k: Option<u32>) -> desym_core::Result<Outcome> {
    let (fixed, central_edge) = match tree_shape(t) {
        TreeShape::Unicentred { centre } => (vec![centre], None),
        TreeShape::Bicentred {
            centres: (a, b),
            central_edge,
        } => (vec![a, b], Some(central_edge)),
        TreeShape::NotATree => return Err(Error::NotATree),
    };
    let free = t.n() - fixed.len();
    let aut = automorphisms(t)?;
    let mut out = Outcome::default();
    for k in k.map_or(vec![2, 3], |k| vec![k]) {
        let total = (k as u64)
            .checked_pow(free as u32)
            .filter(|&x| x <= BIJECTION_GUARD);
        let Some(total) = total else {
            return Err(Error::TooLarge(format!(
                "{k}^{free} colourings exceed the bijection guard of {BIJECTION_GUARD}"
            )));
        };
        let group = ColourGroup::cyclic(k)?;
        let slots: Vec<usize> = (0..t.n()).filter(|v| !fixed.contains(v)).collect();
        let mut values = vec![0u32; t.n()];
        let mut images = HashSet::new();
        for mut code in 0..total {
            for &v in &slots {
                values[v] = (code % k as u64) as u32;
                code /= k as u64;
            }
            let c = VertexColouring::new(group.clone(), values.clone())?;
            let e = canonical_edge_colouring(t, &c)?;
            let on_target = central_edge.is_none_or(|ce| e.get(ce) == 0);
            let same = stabiliser(t, &aut, &c)? == stabiliser(t, &aut, &e)?;
            out.check(on_target && same, || format!("k={k} c={:?}", c.values()));
            images.insert(e.values().to_vec());
        }
        out.check(images.len() as u64 == total, || {
            format!("k={k}: {} images for {total} colourings", images.len())
        });
    }
    Ok(out)
}
