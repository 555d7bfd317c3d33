use crate::report::{Failure, Report};
use clap::{Args, Subcommand};
use matchdist::gadgets::{check_gadget, gen_setcover, gen_setcover_nonmaximum, gen_vc, GadgetInstance, SetCoverInstance};
use matchdist::graph::{parse_instance, write_instance, Graph};
use serde_json::json;
use std::path::{Path, PathBuf};

#[derive(Subcommand)]
pub enum GenKind {
    /// Set Cover gadget (both matchings maximum).
    Setcover(SetCoverArgs),
    /// Set Cover gadget with the appended long path (matchings maximal only).
    SetcoverNonmax(SetCoverArgs),
    /// Vertex Cover gadget of a small graph.
    Vc(VcArgs),
}

#[derive(Args)]
pub struct SetCoverArgs {
    /// Universe size; items are 1..=n.
    #[arg(long)]
    items: Option<usize>,
    /// Sets separated by ';', items by ',' (e.g. "1;1,2;2,3").
    #[arg(long)]
    sets: Option<String>,
    /// File with an `items <n>` line and one `set <a> <b> …` line per set.
    #[arg(long, conflicts_with_all = ["items", "sets"])]
    spec: Option<PathBuf>,
    /// Instance file to write; the annotation goes to `<out>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VcArgs {
    /// Edges like "1-2,2-3".
    #[arg(long)]
    edges: Option<String>,
    /// Vertex count (defaults to the largest endpoint).
    #[arg(long)]
    vertices: Option<usize>,
    /// Graph file in the instance format (matching lines are ignored).
    #[arg(long, conflicts_with_all = ["edges", "vertices"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn bad(msg: impl Into<String>) -> Failure {
    Failure::Parse(msg.into())
}

fn number(s: &str) -> Result<usize, Failure> {
    s.trim().parse().map_err(|_| bad(format!("bad number {s:?}")))
}

/// 1-based items in, 0-based out.
fn item(s: &str) -> Result<usize, Failure> {
    match number(s)? {
        0 => Err(bad("items are numbered from 1")),
        i => Ok(i - 1),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn set_cover_spec(a: &SetCoverArgs) -> Result<SetCoverInstance, Failure> {
    let (items, sets) = if let Some(path) = &a.spec {
        let mut items = None;
        let mut sets = Vec::new();
        for line in read(path)?.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let mut f = line.split_whitespace();
            match f.next() {
                Some("items") => items = Some(number(f.next().unwrap_or(""))?),
                Some("set") => sets.push(f.map(item).collect::<Result<Vec<_>, _>>()?),
                _ => return Err(bad(format!("unexpected line {line:?}"))),
            }
        }
        (items.ok_or_else(|| bad("missing items line"))?, sets)
    } else {
        let items = a.items.ok_or_else(|| bad("--items is required"))?;
        let text = a.sets.as_deref().ok_or_else(|| bad("--sets is required"))?;
        let sets = text.split(';').map(|s| s.split(',').map(item).collect()).collect::<Result<Vec<_>, _>>()?;
        (items, sets)
    };
    SetCoverInstance::new(items, sets).map_err(|e| bad(e.to_string()))
}

fn vc_spec(a: &VcArgs) -> Result<Graph, Failure> {
    if let Some(path) = &a.spec {
        return parse_instance(&read(path)?).map(|i| i.graph).map_err(|e| bad(e.to_string()));
    }
    let text = a.edges.as_deref().unwrap_or("");
    let mut edges = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (u, v) = part.split_once('-').ok_or_else(|| bad(format!("bad edge {part:?}")))?;
        edges.push((item(u)?, item(v)?));
    }
    let n = a.vertices.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, edges).map_err(|e| bad(e.to_string()))
}

fn emit(kind: &'static str, gad: GadgetInstance, out: Option<&Path>, as_json: bool) -> Result<Report, Failure> {
    check_gadget(&gad).map_err(|e| Failure::Internal(e.to_string()))?;
    let instance = write_instance(&gad.graph, &gad.first, &gad.second);
    let annotation = serde_json::to_string_pretty(&gad.annotation()).expect("annotations serialise");
    let size = json!({ "vertices": gad.graph.n(), "edges": gad.graph.m(), "matching_size": gad.first.len() });
    let mut report = Report::new("gen", kind, "construction", size).detail(json!({ "params": gad.params }));
    match out {
        Some(path) => {
            let side = PathBuf::from(format!("{}.json", path.display()));
            std::fs::write(path, &instance).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            std::fs::write(&side, annotation + "\n").map_err(|e| Failure::Io(format!("{}: {e}", side.display())))?;
            report.detail = Some(json!({ "params": gad.params, "files": [path.display().to_string(), side.display().to_string()] }));
        }
        None if as_json => {
            report.detail = Some(json!({ "params": gad.params, "instance": instance, "annotation": gad.annotation() }));
        }
        None => report.raw = Some(instance),
    }
    Ok(report)
}

pub fn run(kind: &GenKind, as_json: bool) -> Result<Report, Failure> {
    let invalid = |e: matchdist::gadgets::GadgetError| bad(e.to_string());
    match kind {
        GenKind::Setcover(a) => emit("setcover", gen_setcover(&set_cover_spec(a)?).map_err(invalid)?, a.out.as_deref(), as_json),
        GenKind::SetcoverNonmax(a) => {
            emit("setcover-nonmax", gen_setcover_nonmaximum(&set_cover_spec(a)?).map_err(invalid)?, a.out.as_deref(), as_json)
        }
        GenKind::Vc(a) => emit("vc", gen_vc(&vc_spec(a)?).map_err(invalid)?, a.out.as_deref(), as_json),
    }
}
