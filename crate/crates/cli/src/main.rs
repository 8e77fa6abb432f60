use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wordrep::checks::{run_paper_checks, verify_main_theorem, TriangulationVerdict};
use wordrep::polyomino::{
    enumerate_triangulations, k4_canonical_orientation, k4_substitution, Polyomino, SourcePattern,
    MAX_TRIANGULATION_CELLS,
};
use wordrep::semitrans::{
    is_semi_transitive, solve_traced, Orientation, SolveResult, SolverConfig, Verdict,
};
use wordrep::{Graph, Word};

/// Word-representable graphs, semi-transitive orientations and
/// triangulated polyominoes.
#[derive(Parser)]
#[command(name = "wordrep", version)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alternation graphs of words.
    #[command(subcommand)]
    Word(WordCmd),
    /// Orientations: verification and search.
    #[command(subcommand)]
    Orient(OrientCmd),
    /// Polyomino triangulations and K4 substitution.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Reproduce the published results.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum WordCmd {
    /// Print the alternation graph of WORD (e.g. 14213243 or "1 1' 2 2'").
    Graph {
        word: String,
        #[arg(long)]
        dot: bool,
    },
    /// Does WORD represent the graph in GRAPH (JSON)?
    Check { word: String, graph: PathBuf },
}

#[derive(Subcommand)]
enum OrientCmd {
    /// Check an orientation (JSON) for cycles and shortcuts.
    Verify {
        orientation: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Search for a semi-transitive orientation of a graph (JSON).
    Solve {
        graph: PathBuf,
        /// Write the search trace, one event per line.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Maximum number of search nodes.
        #[arg(long, env = "WORDREP_BUDGET", default_value_t = 10_000_000)]
        budget: u64,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    /// 3-colorable triangulations.
    #[value(name = "3col")]
    ThreeCol,
    /// Triangulations containing a forbidden 2x2 pattern.
    Forbidden,
    /// Triangulations with a semi-transitive orientation.
    Solve,
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Enumerate all triangulations of a polyomino (ASCII, `#` and `.`)
    /// with their verdicts.
    Triangulations {
        polyomino: PathBuf,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
    },
    /// The polyomino with both diagonals in every cell.
    K4 {
        polyomino: PathBuf,
        /// Print the canonical orientation instead of the graph.
        #[arg(long)]
        orient: bool,
        /// Stack horizontal sources in columns (yields shortcuts).
        #[arg(long, requires = "orient")]
        column_variant: bool,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Orientable iff 3-colorable iff forbidden-free, over every
    /// triangulation of every convex polyomino up to a size.
    MainTheorem {
        #[arg(long)]
        max_cells: usize,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run every reproducible check and print a pass/fail table.
    Paper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the property asked about does not hold.
fn run(cli: &Cli) -> Result<bool> {
    let out = Printer { pretty: cli.pretty };
    match &cli.command {
        Command::Word(WordCmd::Graph { word, dot }) => {
            let g = Word::parse(word)?.alternation_graph();
            if *dot {
                out.raw(&g.to_dot())?;
            } else {
                out.emit(&g.to_json())?;
            }
            Ok(true)
        }
        Command::Word(WordCmd::Check { word, graph }) => {
            let w = Word::parse(word)?;
            let g = read_graph(graph)?;
            let represents = w.represents(&g)?;
            out.emit(&json!({ "represents": represents }))?;
            Ok(represents)
        }
        Command::Orient(OrientCmd::Verify { orientation, dot }) => {
            let o = read_with(orientation, Orientation::from_json_str)?;
            let verdict = is_semi_transitive(&o)?;
            if *dot {
                out.raw(&o.to_dot(None))?;
            } else {
                out.emit(&verdict_json(&verdict))?;
            }
            Ok(verdict.is_ok())
        }
        Command::Orient(OrientCmd::Solve {
            graph,
            trace,
            budget,
            time_limit,
            dot,
        }) => {
            let g = read_graph(graph)?;
            let config = SolverConfig {
                node_budget: *budget,
                time_budget: time_limit.map(Duration::from_secs_f64),
                record_trace: trace.is_some(),
            };
            let (result, search) = solve_traced(&g, config)?;
            if let Some(path) = trace {
                fs::write(path, search.to_text())
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let oriented = result.is_oriented();
            match result {
                SolveResult::Oriented(o) if *dot => out.raw(&o.to_dot(None))?,
                SolveResult::Oriented(o) => out.emit(&o.to_json())?,
                SolveResult::Impossible(_) => out.emit(&json!({
                    "result": "impossible",
                    "nodes": search.nodes,
                    "branch_points": search.branch_points,
                }))?,
            }
            Ok(oriented)
        }
        Command::Poly(PolyCmd::Triangulations { polyomino, filter }) => {
            let p = read_with(polyomino, Polyomino::from_ascii)?;
            let config = SolverConfig::quiet();
            let mut shown = 0;
            for (index, t) in enumerate_triangulations(&p, MAX_TRIANGULATION_CELLS)?.enumerate() {
                let v = TriangulationVerdict::of(&t, config)?;
                let keep = match filter {
                    None => true,
                    Some(Filter::ThreeCol) => v.three_colorable,
                    Some(Filter::Forbidden) => v.forbidden,
                    Some(Filter::Solve) => v.orientable,
                };
                if keep {
                    shown += 1;
                    out.emit(&json!({
                        "index": index,
                        "triangulation": v.ascii,
                        "three_colorable": v.three_colorable,
                        "forbidden": v.forbidden,
                        "orientable": v.orientable,
                    }))?;
                }
            }
            Ok(shown > 0)
        }
        Command::Poly(PolyCmd::K4 {
            polyomino,
            orient,
            column_variant,
            dot,
        }) => {
            let p = read_with(polyomino, Polyomino::from_ascii)?;
            if !orient {
                let g = k4_substitution(&p);
                if *dot {
                    out.raw(&g.to_dot())?;
                } else {
                    out.emit(&g.to_json())?;
                }
                return Ok(true);
            }
            let pattern = if *column_variant {
                SourcePattern::ColumnAligned
            } else {
                SourcePattern::Staggered
            };
            let o = k4_canonical_orientation(&p, pattern);
            let verdict = is_semi_transitive(&o)?;
            if *dot {
                out.raw(&o.to_dot(None))?;
            } else {
                out.emit(&o.to_json())?;
            }
            eprintln!("{}", serde_json::to_string(&verdict_json(&verdict))?);
            Ok(verdict.is_ok())
        }
        Command::Verify(VerifyCmd::MainTheorem { max_cells, jobs }) => {
            let report = verify_main_theorem(*max_cells, *jobs)?;
            for v in &report.exceptions {
                out.emit(v)?;
            }
            if report.holds() {
                out.line(&format!(
                    "equivalence holds: {} triangulations checked",
                    report.triangulations
                ))?;
            } else {
                out.line(&format!(
                    "equivalence fails: {} exceptions among {} triangulations",
                    report.exceptions.len(),
                    report.triangulations
                ))?;
            }
            Ok(report.holds())
        }
        Command::Verify(VerifyCmd::Paper) => {
            let reports = run_paper_checks();
            for r in &reports {
                out.line(&r.line())?;
            }
            Ok(reports.iter().all(|r| r.passed))
        }
    }
}

struct Printer {
    pretty: bool,
}

impl Printer {
    fn emit<T: serde::Serialize>(&self, value: &T) -> Result<()> {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)?
        } else {
            serde_json::to_string(value)?
        };
        self.line(&text)
    }

    fn line(&self, text: &str) -> Result<()> {
        writeln!(io::stdout().lock(), "{text}")?;
        Ok(())
    }

    fn raw(&self, text: &str) -> Result<()> {
        io::stdout().lock().write_all(text.as_bytes())?;
        Ok(())
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn read_with<T>(path: &Path, parse: impl Fn(&str) -> wordrep::Result<T>) -> Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text).with_context(|| format!("in {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    read_with(path, Graph::from_json_str)
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Ok => json!({ "verdict": "ok" }),
        Verdict::Cyclic(cycle) => json!({ "verdict": "cyclic", "cycle": cycle }),
        Verdict::Shortcut(s) => json!({
            "verdict": "shortcut",
            "path": s.path,
            "missing": [s.missing.0, s.missing.1],
        }),
    }
}
