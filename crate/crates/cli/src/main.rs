use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use desym_cli::commands::{self, DesymmArgs, Direction, Format, ModeArg};
use desym_cli::error::{CliError, CliResult};
use desym_cli::input::{read_colouring, read_graph};
use desym_cli::sweep::{Check, CorpusKind, SweepConfig};

/// Symmetry breaking by vertex and edge colourings of finite graphs.
///
/// Graphs are read as graph6 or as an edge list (vertex count, then one pair
/// per line). Colourings are JSON: {"k": 3, "vertex_colours": [...]} or
/// {"k": 3, "edge_colours": [...]}.
#[derive(Parser)]
#[command(name = "desym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file, or - for stdin.
    #[arg(long, default_value = "-")]
    graph: String,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Connectivity, bridges, cycle edge classes, tree shape, group order.
    Analyze {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Turn a vertex colouring into a less symmetric edge colouring, or back.
    Desymm {
        #[command(flatten)]
        graph: GraphArg,
        /// Colouring file. Without one a random colouring is drawn from --seed.
        #[arg(long)]
        colouring: Option<String>,
        /// Defaults to the direction matching the colouring.
        #[arg(long, value_enum)]
        direction: Option<Direction>,
        /// Palette size of the random colouring.
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check stabiliser containment by enumeration.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Distinguishing number (vertex mode) or index (edge mode).
    Dist {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "vertex")]
        mode: ModeArg,
        /// Largest palette to try; defaults to the order of the graph.
        #[arg(long)]
        max_k: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Whether a tree belongs to the family of bicentred trees with index
    /// above their number, for palette k (default: its distinguishing number).
    Family {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Sweep a generated corpus and check one property on every graph.
    Verify {
        #[arg(long, value_enum)]
        check: Check,
        /// Corpus to sweep; each check has its own default.
        #[arg(long, value_enum)]
        kind: Option<CorpusKind>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        /// Fixed palette size. Random checks otherwise draw k in 2..=5.
        #[arg(long)]
        k: Option<u32>,
        /// Random colourings per graph.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print every tree or connected graph of the given orders, one graph6 per line.
    Corpus {
        #[arg(long, value_enum)]
        kind: CorpusKind,
        /// Smallest order; defaults to --max-n.
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Analyze { graph, format } => {
            commands::analyze(&read_graph(&graph.graph)?, format.format)
        }
        Command::Desymm {
            graph,
            colouring,
            direction,
            k,
            seed,
            verify,
            format,
        } => {
            let g = read_graph(&graph.graph)?;
            let colouring = colouring.as_deref().map(read_colouring).transpose()?;
            let args = DesymmArgs {
                colouring,
                direction,
                k,
                seed,
                verify,
            };
            commands::desymm(&g, args, format.format)
        }
        Command::Dist {
            graph,
            mode,
            max_k,
            format,
        } => commands::dist(&read_graph(&graph.graph)?, mode, max_k, format.format),
        Command::Family { graph, k, format } => {
            commands::family(&read_graph(&graph.graph)?, k, format.format)
        }
        Command::Verify {
            check,
            kind,
            min_n,
            max_n,
            k,
            samples,
            seed,
            jobs,
            format,
        } => {
            let cfg = SweepConfig {
                check,
                kind: kind.unwrap_or(check.default_kind()),
                min_n,
                max_n,
                k,
                samples,
                seed,
                jobs,
            };
            let start = Instant::now();
            let (text, report) = commands::verify(&cfg, format.format)?;
            eprintln!("{} graphs in {:.2?}", report.graphs, start.elapsed());
            if !report.passed() {
                print(&text);
                return Err(CliError::Failed {
                    failures: report.failures.len(),
                    checked: report.checked,
                });
            }
            Ok(text)
        }
        Command::Corpus {
            kind,
            min_n,
            max_n,
            format,
        } => commands::corpus(kind, min_n.unwrap_or(max_n), max_n, format),
    }
}

fn print(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
