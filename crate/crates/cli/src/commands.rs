//! One function per subcommand. Each returns the exact text for stdout.

use std::fmt::Write as _;

use clap::ValueEnum;
use desym_core::colouring::{AnyColouring, ColouringDoc};
use desym_core::desymm::{edge_to_vertex, vertex_to_edge, DesymmResult};
use desym_core::distinguishing::{
    distinguishing_index, distinguishing_number, in_family_T, sharpness_conditions,
    DistinguishingReport, FamilyTVerdict, Mode, SharpnessReport,
};
use desym_core::graph::{
    bridges, equivalence_classes, to_graph6, tree_shape, ClassKind, TreeShape,
};
use desym_core::symmetry::automorphisms;
use desym_core::Graph;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::input::{random_edge_colouring, random_vertex_colouring, rng};
use crate::sweep::{self, CorpusKind, SweepConfig, SweepReport};
use crate::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    VertexToEdge,
    EdgeToVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Vertex,
    Edge,
}

#[derive(Serialize)]
struct Doc<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

fn json<T: Serialize>(command: &str, body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Doc {
        schema: SCHEMA,
        command,
        body,
    })
    .expect("reports serialise");
    s.push('\n');
    s
}

fn join(values: &[impl ToString]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct ClassRow {
    kind: ClassKind,
    size: usize,
    edges: Vec<usize>,
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    n: usize,
    m: usize,
    connected: bool,
    bipartite: bool,
    /// Absent for disconnected graphs.
    bridges: Option<Vec<usize>>,
    cycle_edges: Option<Vec<usize>>,
    classes: Option<Vec<ClassRow>>,
    tree: &'static str,
    centres: Vec<usize>,
    aut: usize,
}

pub fn analyze(g: &Graph, format: Format) -> CliResult<String> {
    let connected = g.is_connected();
    let (bridge_list, cycle_edges, classes) = if connected {
        let cs = equivalence_classes(g)?;
        let classes = cs
            .classes()
            .iter()
            .map(|c| ClassRow {
                kind: c.kind,
                size: c.len(),
                edges: c.edges.clone(),
            })
            .collect();
        (
            Some(bridges(g)?),
            Some(cs.cycle_edges().to_vec()),
            Some(classes),
        )
    } else {
        (None, None, None)
    };
    let (tree, centres) = match tree_shape(g) {
        TreeShape::NotATree => ("not-a-tree", vec![]),
        TreeShape::Unicentred { centre } => ("unicentred", vec![centre]),
        TreeShape::Bicentred {
            centres: (a, b), ..
        } => ("bicentred", vec![a, b]),
    };
    let a = Analysis {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        connected,
        bipartite: g.is_bipartite(),
        bridges: bridge_list,
        cycle_edges,
        classes,
        tree,
        centres,
        aut: automorphisms(g)?.order(),
    };
    Ok(match format {
        Format::Json => json("analyze", a),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "graph6: {}", a.graph6).unwrap();
            writeln!(s, "vertices: {}  edges: {}", a.n, a.m).unwrap();
            writeln!(s, "connected: {}  bipartite: {}", a.connected, a.bipartite).unwrap();
            if let (Some(b), Some(c)) = (&a.bridges, &a.cycle_edges) {
                writeln!(s, "bridges: {}", join(b)).unwrap();
                writeln!(s, "cycle edges: {}", join(c)).unwrap();
            }
            for class in a.classes.iter().flatten() {
                writeln!(
                    s,
                    "class {:?} size {}: {}",
                    class.kind,
                    class.size,
                    join(&class.edges)
                )
                .unwrap();
            }
            writeln!(s, "tree: {}  centres: {}", a.tree, join(&a.centres)).unwrap();
            writeln!(s, "automorphisms: {}", a.aut).unwrap();
            s
        }
        Format::Csv => {
            let mut s = String::from("class,kind,size,edges\n");
            for (i, class) in a.classes.iter().flatten().enumerate() {
                writeln!(
                    s,
                    "{i},{},{},{}",
                    kind_name(class.kind),
                    class.size,
                    join(&class.edges)
                )
                .unwrap();
            }
            s
        }
    })
}

fn kind_name(kind: ClassKind) -> &'static str {
    match kind {
        ClassKind::Path => "path",
        ClassKind::Cycle => "cycle",
        ClassKind::Disjoint => "disjoint",
    }
}

pub struct DesymmArgs {
    pub colouring: Option<AnyColouring>,
    pub direction: Option<Direction>,
    /// Palette for a random colouring when none is given.
    pub k: u32,
    pub seed: u64,
    pub verify: bool,
}

pub fn desymm(g: &Graph, args: DesymmArgs, format: Format) -> CliResult<String> {
    let direction = match (&args.colouring, args.direction) {
        (_, Some(d)) => d,
        (Some(AnyColouring::Edge(_)), None) => Direction::EdgeToVertex,
        _ => Direction::VertexToEdge,
    };
    let mut rng = rng(args.seed, 0);
    let (input, output, doc, strategy, components, certificate) = match direction {
        Direction::VertexToEdge => {
            let c = match args.colouring {
                Some(AnyColouring::Vertex(c)) => c,
                None => random_vertex_colouring(&mut rng, g, args.k)?,
                Some(AnyColouring::Edge(_)) => {
                    return Err(CliError::Usage(
                        "vertex-to-edge needs vertex_colours".into(),
                    ))
                }
            };
            let r = vertex_to_edge(g, &c, args.verify)?;
            (
                ColouringDoc::from(&c),
                r.colouring.values().to_vec(),
                serde_json::to_value(&r),
                r.strategy,
                r.components,
                r.certificate,
            )
        }
        Direction::EdgeToVertex => {
            let c = match args.colouring {
                Some(AnyColouring::Edge(c)) => c,
                None => random_edge_colouring(&mut rng, g, args.k)?,
                Some(AnyColouring::Vertex(_)) => {
                    return Err(CliError::Usage("edge-to-vertex needs edge_colours".into()))
                }
            };
            let r: DesymmResult<_> = edge_to_vertex(g, &c, args.verify)?;
            (
                ColouringDoc::from(&c),
                r.colouring.values().to_vec(),
                serde_json::to_value(&r),
                r.strategy,
                r.components,
                r.certificate,
            )
        }
    };
    if let Some(cert) = &certificate {
        if !cert.contained {
            return Err(
                desym_core::Error::Invariant("certificate reports no containment".into()).into(),
            );
        }
    }
    let doc = doc.expect("results serialise");
    Ok(match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                input: ColouringDoc,
                #[serde(flatten)]
                result: serde_json::Value,
            }
            json("desymm", Out { input, result: doc })
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "strategy: {strategy}").unwrap();
            if !components.is_empty() {
                writeln!(s, "components: {}", join(&components)).unwrap();
            }
            writeln!(s, "colours: {}", join(&output)).unwrap();
            if let Some(cert) = certificate {
                writeln!(
                    s,
                    "stabiliser: {} -> {}  contained: {}",
                    cert.stab_before, cert.stab_after, cert.contained
                )
                .unwrap();
            }
            s
        }
        Format::Csv => {
            let edge = direction == Direction::VertexToEdge;
            let mut s = String::from(if edge {
                "edge,u,v,colour\n"
            } else {
                "vertex,colour\n"
            });
            for (i, c) in output.iter().enumerate() {
                if edge {
                    let (u, v) = g.edge(i);
                    writeln!(s, "{i},{u},{v},{c}").unwrap();
                } else {
                    writeln!(s, "{i},{c}").unwrap();
                }
            }
            s
        }
    })
}

pub fn dist(g: &Graph, mode: ModeArg, max_k: Option<u32>, format: Format) -> CliResult<String> {
    let bound = max_k.unwrap_or(g.n().max(1) as u32);
    let report: DistinguishingReport = match mode {
        ModeArg::Vertex => distinguishing_number(g, bound)?,
        ModeArg::Edge => distinguishing_index(g, bound)?,
    };
    let name = match report.mode {
        Mode::Vertex => "vertex",
        Mode::Edge => "edge",
    };
    Ok(match format {
        Format::Json => json("dist", &report),
        Format::Text => format!(
            "mode: {name}\nk: {}\nwitness: {}\n",
            report.k,
            join(&report.witness)
        ),
        Format::Csv => format!(
            "mode,k,witness\n{name},{},{}\n",
            report.k,
            join(&report.witness)
        ),
    })
}

#[derive(Serialize)]
struct FamilyOut {
    #[serde(flatten)]
    verdict: FamilyTVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    conditions: Option<SharpnessReport>,
}

/// Membership with palette `k`, `D(t)` by default. Bicentred trees also get
/// the full set of conditions.
pub fn family(t: &Graph, k: Option<u32>, format: Format) -> CliResult<String> {
    let k = match k {
        Some(k) => k,
        None => distinguishing_number(t, t.n() as u32)?.k,
    };
    let verdict = in_family_T(t, k)?;
    let conditions = if verdict.bicentred && k >= 2 {
        Some(sharpness_conditions(t, k)?)
    } else {
        None
    };
    let out = FamilyOut {
        verdict,
        conditions,
    };
    Ok(match format {
        Format::Json => json("family", &out),
        Format::Text | Format::Csv => {
            let mut s = format!(
                "k: {}\nmember: {}\nbicentred: {}\n",
                out.verdict.k, out.verdict.member, out.verdict.bicentred
            );
            if let Some(r) = &out.conditions {
                writeln!(s, "D: {}  D': {}", r.d, r.d_prime).unwrap();
                writeln!(
                    s,
                    "conditions: {} {} {}",
                    r.index_exceeds, r.centres_split, r.in_family
                )
                .unwrap();
            }
            s
        }
    })
}

/// Report text and whether the sweep passed.
pub fn verify(cfg: &SweepConfig, format: Format) -> CliResult<(String, SweepReport)> {
    let report = sweep::run(cfg)?;
    let text = match format {
        Format::Json => json("verify", &report),
        Format::Csv => {
            let mut s = String::from("graph6,n,D,D_prime,in_T,k\n");
            for r in &report.rows {
                let in_t = r.in_T.map_or(String::new(), |b| b.to_string());
                writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.graph6, r.n, r.D, r.D_prime, in_t, r.k
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let check = serde_json::to_value(report.check).unwrap();
            let mut s = String::new();
            writeln!(s, "check: {}", check.as_str().unwrap_or_default()).unwrap();
            writeln!(
                s,
                "corpus: {:?} n={}..={}",
                report.kind, report.min_n, report.max_n
            )
            .unwrap();
            writeln!(
                s,
                "graphs: {}  checked: {}  skipped: {}",
                report.graphs, report.checked, report.skipped
            )
            .unwrap();
            writeln!(s, "failures: {}", report.failures.len()).unwrap();
            for f in &report.failures {
                writeln!(s, "  {} {}", f.graph6, f.detail).unwrap();
            }
            writeln!(s, "{}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
            s
        }
    };
    Ok((text, report))
}

pub fn corpus(kind: CorpusKind, min_n: usize, max_n: usize, format: Format) -> CliResult<String> {
    let graphs: Vec<String> = sweep::corpus(kind, min_n, max_n)?
        .iter()
        .map(to_graph6)
        .collect();
    Ok(match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                kind: CorpusKind,
                min_n: usize,
                max_n: usize,
                count: usize,
                graphs: Vec<String>,
            }
            json(
                "corpus",
                Out {
                    kind,
                    min_n,
                    max_n,
                    count: graphs.len(),
                    graphs,
                },
            )
        }
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for g in graphs {
                s.push_str(&g);
                s.push('\n');
            }
            s
        }
    })
}
