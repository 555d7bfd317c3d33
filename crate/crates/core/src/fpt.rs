//! Exact distance between two equal-size matchings of a bipartite graph.
//!
//! Non-maximal endpoints and differences with an odd path are settled
//! directly. Otherwise two candidates are compared: the cheapest route
//! through a non-maximal matching, and the best split through an
//! intermediate matching `M_U(S)`. The split picks, for every cycle of the
//! difference, the side whose exposed vertices rotate it; both halves are
//! then distances between maximum matchings of a graph with the exposed
//! vertices of one side deleted.

use crate::dst::{max_matching_distance, DstError};
use crate::graph::{bipartition, is_maximal, sym_diff_decompose, Bipartition, Component, EdgeId, Graph, Matching, Side, SymDiffDecomposition};
use crate::matching::is_maximum;
use crate::reconfig::{validate_sequence, Distance, ReconfigSequence};
use crate::slack::{distance_one_nonmaximal, halving_sequence, shortest_via_nonmaximal, SlackError};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FptError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("matchings have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("side choice is not feasible for component {0}")]
    InfeasibleChoice(usize),
    #[error("subinstance matching is not maximum")]
    SubinstanceNotMaximum,
    #[error(transparent)]
    Dst(#[from] DstError),
    #[error(transparent)]
    Slack(#[from] SlackError),
    #[error("internal error: witness failed validation")]
    InvalidWitness,
}

/// Which argument produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// One endpoint has a free edge.
    NonMaximalEndpoint,
    /// `|Ms Δ Mt| / 2`: the lower bound is met directly.
    Halving,
    /// Both matchings maximum.
    MaximumMatchings,
    /// Through a matching that is not inclusion-wise maximal.
    ViaNonMaximal,
    /// Through `M_U(S)` for the best side choice.
    SideChoice,
    Unreachable,
}

/// Side per component of the difference, indexed like
/// `SymDiffDecomposition::components()` (paths first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SideChoice {
    pub sides: Vec<Side>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubInstance {
    pub graph: Graph,
    /// Edge id in the subinstance -> edge id in the original graph.
    pub edge_map: Vec<EdgeId>,
    pub source: Matching,
    pub target: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FptAnswer {
    pub distance: Distance,
    pub sequence: Option<ReconfigSequence>,
    pub method: Method,
    /// Length of the best route through a non-maximal matching, if computed.
    pub via_nonmaximal: Option<usize>,
    /// Best split length over all side choices, if any choice succeeded.
    pub best_split: Option<usize>,
    pub choices_evaluated: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FptOptions {
    /// Worker threads for the side-choice enumeration (1 = sequential).
    pub threads: usize,
}

impl Default for FptOptions {
    fn default() -> Self {
        FptOptions { threads: 1 }
    }
}

/// Vertices reachable from an `Ms`-exposed vertex on `side` by an even
/// alternating path.
fn even_reach(g: &Graph, bip: &Bipartition, ms: &Matching, side: Side) -> Vec<bool> {
    let mate = ms.mates(g);
    let mut even = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for v in ms.exposed(g) {
        if bip.side(v) == side {
            even[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(y) = queue.pop_front() {
        for &(z, _) in g.neighbors(y) {
            if let Some(w) = mate[z] {
                if w != y && !even[w] {
                    even[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    even
}

/// A cycle is reconfigurable from a side when an alternating path joins an
/// exposed vertex of that side to it; a path when it has an exposed vertex on
/// that side.
pub fn reconfigurable_from(g: &Graph, bip: &Bipartition, ms: &Matching, component: &Component, side: Side) -> bool {
    if component.is_cycle() {
        let even = even_reach(g, bip, ms, side);
        component.vertices.iter().any(|&v| even[v])
    } else {
        let cover = ms.cover(g);
        component.vertices.iter().any(|&v| cover[v].is_none() && bip.side(v) == side)
    }
}

/// The intermediate matching: target edges on components assigned `U`,
/// source edges elsewhere.
pub fn intermediate_matching(g: &Graph, ms: &Matching, mt: &Matching, dec: &SymDiffDecomposition, choice: &SideChoice) -> Matching {
    let mut keep: Vec<EdgeId> = ms.edges().iter().copied().filter(|&e| mt.contains(e)).collect();
    for (c, comp) in dec.components().enumerate() {
        let from = if choice.sides[c] == Side::U { mt } else { ms };
        keep.extend(comp.edges.iter().copied().filter(|&e| from.contains(e)));
    }
    Matching::new(g, keep).expect("component-wise mix of two matchings")
}

/// `I_U(S)`: `Ms → M_U(S)` with the source-exposed `W`-vertices deleted, and
/// `I_W(S)`: `M_U(S) → Mt` with the target-exposed `U`-vertices deleted.
pub fn build_subinstances(g: &Graph, bip: &Bipartition, ms: &Matching, mt: &Matching, dec: &SymDiffDecomposition, choice: &SideChoice) -> Result<(SubInstance, SubInstance), FptError> {
    for (c, comp) in dec.components().enumerate() {
        if !reconfigurable_from(g, bip, ms, comp, choice.sides[c]) {
            return Err(FptError::InfeasibleChoice(c));
        }
    }
    let mid = intermediate_matching(g, ms, mt, dec, choice);
    let side_exposed = |m: &Matching, s: Side| -> Vec<usize> { m.exposed(g).into_iter().filter(|&v| bip.side(v) == s).collect() };
    let make = |removed: Vec<usize>, a: &Matching, b: &Matching| -> Result<SubInstance, FptError> {
        let (h, map) = g.without_vertices(&removed);
        let source = a.restrict_to(&map).ok_or(FptError::SubinstanceNotMaximum)?;
        let target = b.restrict_to(&map).ok_or(FptError::SubinstanceNotMaximum)?;
        if !is_maximum(&h, &source) || !is_maximum(&h, &target) {
            return Err(FptError::SubinstanceNotMaximum);
        }
        Ok(SubInstance { graph: h, edge_map: map, source, target })
    };
    let iu = make(side_exposed(ms, Side::W), ms, &mid)?;
    let iw = make(side_exposed(mt, Side::U), &mid, mt)?;
    Ok((iu, iw))
}

/// Every feasible side choice. Paths have exactly one feasible side; cycles
/// may have two. Empty when some component has no feasible side.
pub fn feasible_choices(g: &Graph, bip: &Bipartition, ms: &Matching, dec: &SymDiffDecomposition) -> Vec<SideChoice> {
    let options: Vec<Vec<Side>> = dec
        .components()
        .map(|c| [Side::U, Side::W].into_iter().filter(|&s| reconfigurable_from(g, bip, ms, c, s)).collect())
        .collect();
    if options.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for opts in &options {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Side>| {
                opts.iter().map(move |&s| {
                    let mut next = prefix.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(|sides| SideChoice { sides }).collect()
}

fn split_route(g: &Graph, bip: &Bipartition, ms: &Matching, mt: &Matching, dec: &SymDiffDecomposition, choice: &SideChoice) -> Result<Option<ReconfigSequence>, FptError> {
    let (iu, iw) = build_subinstances(g, bip, ms, mt, dec, choice)?;
    let first = max_matching_distance(&iu.graph, &iu.source, &iu.target)?;
    let Some(a) = first.sequence else { return Ok(None) };
    let second = max_matching_distance(&iw.graph, &iw.source, &iw.target)?;
    let Some(b) = second.sequence else { return Ok(None) };
    let mut seq = a.map_edges(&iu.edge_map);
    seq.extend(&b.map_edges(&iw.edge_map));
    Ok(Some(seq))
}

pub fn bipartite_distance(g: &Graph, ms: &Matching, mt: &Matching) -> Result<FptAnswer, FptError> {
    bipartite_distance_with(g, ms, mt, FptOptions::default())
}

pub fn bipartite_distance_with(g: &Graph, ms: &Matching, mt: &Matching, opts: FptOptions) -> Result<FptAnswer, FptError> {
    let bip = bipartition(g).ok_or(FptError::NotBipartite)?;
    if ms.len() != mt.len() {
        return Err(FptError::SizeMismatch(ms.len(), mt.len()));
    }
    let answer = |seq: ReconfigSequence, method: Method| FptAnswer {
        distance: Distance::Finite(seq.len()),
        sequence: Some(seq),
        method,
        via_nonmaximal: None,
        best_split: None,
        choices_evaluated: 0,
    };
    let checked = |a: FptAnswer| -> Result<FptAnswer, FptError> {
        if let Some(seq) = &a.sequence {
            validate_sequence(g, ms, mt, seq).map_err(|_| FptError::InvalidWitness)?;
        }
        Ok(a)
    };

    if !is_maximal(g, ms) || !is_maximal(g, mt) {
        let route = distance_one_nonmaximal(g, ms, mt)?;
        return checked(answer(route.sequence, Method::NonMaximalEndpoint));
    }
    if let Some(seq) = halving_sequence(g, ms, mt) {
        return checked(answer(seq, Method::Halving));
    }
    if is_maximum(g, ms) {
        let ans = max_matching_distance(g, ms, mt)?;
        return checked(match ans.sequence {
            Some(seq) => answer(seq, Method::MaximumMatchings),
            None => unreachable_answer(None, None, 0),
        });
    }

    let beta = shortest_via_nonmaximal(g, ms, mt)?;
    let dec = sym_diff_decompose(g, ms, mt);
    let choices = feasible_choices(g, &bip, ms, &dec);
    let run = |c: &SideChoice| split_route(g, &bip, ms, mt, &dec, c);
    let results: Vec<Result<Option<ReconfigSequence>, FptError>> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().expect("thread pool");
        pool.install(|| choices.par_iter().map(run).collect())
    } else {
        choices.iter().map(run).collect()
    };
    let mut best_split: Option<ReconfigSequence> = None;
    for r in results {
        if let Some(seq) = r? {
            if best_split.as_ref().is_none_or(|b| seq.len() < b.len()) {
                best_split = Some(seq);
            }
        }
    }
    let beta_len = beta.as_ref().map(|r| r.length);
    let split_len = best_split.as_ref().map(ReconfigSequence::len);
    let count = choices.len();
    let pick = match (beta, best_split) {
        (None, None) => return Ok(unreachable_answer(beta_len, split_len, count)),
        (Some(b), Some(s)) if b.length < s.len() => (b.sequence, Method::ViaNonMaximal),
        (_, Some(s)) => (s, Method::SideChoice),
        (Some(b), None) => (b.sequence, Method::ViaNonMaximal),
    };
    let mut a = answer(pick.0, pick.1);
    a.via_nonmaximal = beta_len;
    a.best_split = split_len;
    a.choices_evaluated = count;
    checked(a)
}

fn unreachable_answer(via: Option<usize>, split: Option<usize>, choices: usize) -> FptAnswer {
    FptAnswer {
        distance: Distance::Infinite,
        sequence: None,
        method: Method::Unreachable,
        via_nonmaximal: via,
        best_split: split,
        choices_evaluated: choices,
    }
}
