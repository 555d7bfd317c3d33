//! `matchdist`: distances, reachability and gadgets for token-jumping
//! matching reconfiguration.

mod gen;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use matchdist::dst::{build_dst_instance, prune_to_allowed};
use matchdist::fpt::{bipartite_distance_with, FptAnswer, FptError, FptOptions};
use matchdist::graph::{bipartition, is_maximal, parse_instance, Graph, Instance};
use matchdist::matching::{edmonds_gallai, is_maximum, matching_number};
use matchdist::reconfig::{is_connected, is_reachable, oracle_diameter, oracle_distance, validate_sequence, BudgetExceeded, Distance, ReconfigSequence, DEFAULT_STATE_BUDGET};
use matchdist::slack::distance_one_nonmaximal;
use matchdist::steiner::dreyfus_wagner;
use report::{Failure, Report};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "matchdist", version, about = "Token-jumping distances between matchings")]
struct Cli {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// State budget for exhaustive searches.
    #[arg(long, global = true, env = "MATCHDIST_BUDGET", default_value_t = DEFAULT_STATE_BUDGET)]
    budget: usize,
    /// Include wall-clock timing (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Fpt,
    Oracle,
    Slack,
}

#[derive(Subcommand)]
enum Command {
    /// Length of a shortest sequence from the source to the target matching.
    Distance {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Print the exchanges of a shortest sequence.
        #[arg(long)]
        witness: bool,
        /// Exit with status 1 when the target is unreachable.
        #[arg(long)]
        strict: bool,
        /// Worker threads for the side-choice enumeration.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the Steiner reduction (two maximum matchings only) as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Whether the target matching can be reached at all.
    Reachable { instance: PathBuf },
    /// Whether all matchings of size k form one component.
    Connected {
        graph: PathBuf,
        /// Defaults to the matching number.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Largest distance between two matchings of size k (exhaustive).
    Diameter {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate a gadget instance.
    Gen {
        #[command(subcommand)]
        kind: gen::GenKind,
    },
    /// Edmonds–Gallai partition and matching number.
    Egd { graph: PathBuf },
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn budget_failure(e: BudgetExceeded) -> Failure {
    Failure::Budget(e.to_string())
}

struct Solved {
    distance: Distance,
    sequence: Option<ReconfigSequence>,
    method: &'static str,
    detail: serde_json::Value,
}

fn fpt_solved(a: FptAnswer) -> Solved {
    Solved {
        distance: a.distance,
        sequence: a.sequence,
        method: "fpt",
        detail: json!({
            "route": a.method,
            "via_nonmaximal": a.via_nonmaximal,
            "best_split": a.best_split,
            "choices_evaluated": a.choices_evaluated,
        }),
    }
}

fn solve(inst: &Instance, method: MethodArg, threads: usize, budget: usize) -> Result<Solved, Failure> {
    let (g, s, t) = (&inst.graph, &inst.source, &inst.target);
    let slack = !is_maximal(g, s) || !is_maximal(g, t);
    let bipartite = bipartition(g).is_some();
    let method = match method {
        MethodArg::Auto if slack => MethodArg::Slack,
        MethodArg::Auto if bipartite => MethodArg::Fpt,
        MethodArg::Auto => MethodArg::Oracle,
        m => m,
    };
    match method {
        MethodArg::Slack => {
            let r = distance_one_nonmaximal(g, s, t).map_err(|e| Failure::Capability(e.to_string()))?;
            Ok(Solved {
                distance: Distance::Finite(r.length),
                sequence: Some(r.sequence),
                method: "exact-nonmaximal",
                detail: json!({ "extra_exchange": r.delta }),
            })
        }
        MethodArg::Fpt => match bipartite_distance_with(g, s, t, FptOptions { threads }) {
            Ok(a) => Ok(fpt_solved(a)),
            Err(e @ FptError::NotBipartite) => Err(Failure::Capability(format!("{e}; use --method oracle"))),
            Err(e) => Err(Failure::Internal(e.to_string())),
        },
        MethodArg::Oracle => {
            let o = oracle_distance(g, s, t, budget).map_err(budget_failure)?;
            Ok(Solved { distance: o.distance, sequence: o.witness, method: "oracle", detail: json!({ "explored": o.explored }) })
        }
        MethodArg::Auto => unreachable!(),
    }
}

fn write_dot(inst: &Instance, path: &Path) -> Result<(), Failure> {
    let (g, s, t) = (&inst.graph, &inst.source, &inst.target);
    if bipartition(g).is_none() || !is_maximum(g, s) || !is_maximum(g, t) {
        return Err(Failure::Capability("--dot needs two maximum matchings of a bipartite graph".into()));
    }
    let (h, _, hs, ht) = prune_to_allowed(g, s, t).expect("maximum matchings use allowed edges");
    let red = build_dst_instance(&h, &hs, &ht).map_err(|e| Failure::Capability(e.to_string()))?;
    let highlight = if red.is_unreachable() { Vec::new() } else { dreyfus_wagner(&red.instance).map(|t| t.arcs).unwrap_or_default() };
    std::fs::write(path, red.to_dot(&highlight)).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn distance(cli: &Cli, file: &Path, method: MethodArg, witness: bool, strict: bool, threads: usize, dot: Option<&Path>) -> Result<Report, Failure> {
    let inst = read_instance(file)?;
    let solved = solve(&inst, method, threads.max(1), cli.budget)?;
    // Self-check: never print a witness that does not replay.
    if let Some(seq) = &solved.sequence {
        validate_sequence(&inst.graph, &inst.source, &inst.target, seq).map_err(|e| Failure::Internal(format!("witness failed validation: {e}")))?;
        if solved.distance != Distance::Finite(seq.len()) {
            return Err(Failure::Internal("witness length differs from the distance".into()));
        }
    }
    if let Some(p) = dot {
        write_dot(&inst, p)?;
    }
    let mut report = Report::new("distance", file.display(), solved.method, json!(solved.distance)).detail(solved.detail);
    if witness {
        if let Some(seq) = &solved.sequence {
            report = report.witness(&inst.graph, seq);
        }
    }
    if strict && solved.distance == Distance::Infinite {
        report.exit = 1;
    }
    Ok(report)
}

/// Size-`k` matchings do not exist; the empty configuration graph is treated
/// as connected with diameter 0.
fn beyond_nu(k: usize, g: &Graph) -> String {
    format!("k = {k} exceeds the matching number {}; no such matchings (reported as connected, diameter 0)", matching_number(g))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(read_instance(path)?.graph)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Distance { instance, method, witness, strict, threads, dot } => {
            distance(cli, instance, *method, *witness, *strict, *threads, dot.as_deref())
        }
        Command::Reachable { instance } => {
            let inst = read_instance(instance)?;
            let r = is_reachable(&inst.graph, &inst.source, &inst.target);
            Ok(Report::new("reachable", instance.display(), "formula", json!(r.reachable)).detail(json!({ "reason": r.reason })))
        }
        Command::Connected { graph, k } => {
            let g = read_graph(graph)?;
            let k = k.unwrap_or_else(|| matching_number(&g));
            let c = is_connected(&g, k);
            let mut detail = json!({ "k": k, "empty": c.empty });
            if c.empty {
                detail["warning"] = json!(beyond_nu(k, &g));
            }
            Ok(Report::new("connected", graph.display(), "formula", json!(c.connected)).detail(detail))
        }
        Command::Diameter { graph, k } => {
            let g = read_graph(graph)?;
            let k = k.unwrap_or_else(|| matching_number(&g));
            let d = oracle_diameter(&g, k, cli.budget).map_err(budget_failure)?;
            let mut detail = json!({ "k": k });
            if k > matching_number(&g) {
                detail["warning"] = json!(beyond_nu(k, &g));
            }
            Ok(Report::new("diameter", graph.display(), "oracle", json!(d)).detail(detail))
        }
        Command::Gen { kind } => gen::run(kind, cli.json),
        Command::Egd { graph } => {
            let g = read_graph(graph)?;
            let eg = edmonds_gallai(&g);
            let one = |vs: &[usize]| vs.iter().map(|v| v + 1).collect::<Vec<_>>();
            let answer = json!({ "nu": eg.nu, "D": one(&eg.d), "A": one(&eg.a), "C": one(&eg.c) });
            Ok(Report::new("egd", graph.display(), "formula", answer))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.seconds = Some(start.elapsed().as_secs_f64());
            }
            report.print(cli.json);
            ExitCode::from(report.exit)
        }
        Err(f) => {
            f.print(cli.json);
            ExitCode::from(f.code())
        }
    }
}
