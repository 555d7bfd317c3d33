//! Token-jumping moves, sequence validation, the exhaustive BFS oracle and
//! the reachability / connectivity decisions.

use crate::graph::{bipartition, is_maximal, sym_diff_decompose, EdgeId, Graph, Matching};
use crate::matching::{edmonds_gallai, edmonds_gallai_from, has_unique_perfect_matching, is_maximum, matching_number, EgClass};
use serde::{Serialize, Serializer};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use thiserror::Error;

/// Default cap on the number of matchings an exhaustive search may visit.
pub const DEFAULT_STATE_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("state budget of {budget} exceeded after {explored} states")]
pub struct BudgetExceeded {
    pub budget: usize,
    pub explored: usize,
}

/// A shortest-path length that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Exchange {
    pub remove: EdgeId,
    pub add: EdgeId,
}

impl Exchange {
    pub fn new(remove: EdgeId, add: EdgeId) -> Self {
        Exchange { remove, add }
    }

    pub fn reversed(self) -> Self {
        Exchange { remove: self.add, add: self.remove }
    }

    pub fn map_edges(self, map: &[EdgeId]) -> Self {
        Exchange { remove: map[self.remove], add: map[self.add] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconfigSequence {
    pub start: Matching,
    pub steps: Vec<Exchange>,
}

impl ReconfigSequence {
    pub fn new(start: Matching) -> Self {
        ReconfigSequence { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `M_0, M_1, …, M_len` without validation.
    pub fn matchings(&self) -> Vec<Matching> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.start.clone();
        out.push(cur.clone());
        for s in &self.steps {
            cur = cur.exchanged(s.remove, s.add);
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self) -> Matching {
        let mut cur = self.start.clone();
        for s in &self.steps {
            cur = cur.exchanged(s.remove, s.add);
        }
        cur
    }

    /// Appends `other`, which is expected to start where `self` ends.
    pub fn extend(&mut self, other: &ReconfigSequence) {
        self.steps.extend_from_slice(&other.steps);
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> ReconfigSequence {
        ReconfigSequence {
            start: self.end(),
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// Re-expresses a sequence on a subgraph in the parent's edge ids.
    pub fn map_edges(&self, map: &[EdgeId]) -> ReconfigSequence {
        ReconfigSequence {
            start: self.start.map_edges(map),
            steps: self.steps.iter().map(|s| s.map_edges(map)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidStep {
    #[error("sequence does not start at the source matching")]
    WrongStart,
    #[error("step {step}: edge index out of range")]
    EdgeOutOfRange { step: usize },
    #[error("step {step}: removes and adds the same edge")]
    SameEdge { step: usize },
    #[error("step {step}: removed edge is not in the current matching")]
    RemoveAbsent { step: usize },
    #[error("step {step}: added edge is already in the current matching")]
    AddPresent { step: usize },
    #[error("step {step}: added edge conflicts with the current matching")]
    Conflict { step: usize },
    #[error("sequence ends at a matching other than the target")]
    WrongEnd,
}

impl InvalidStep {
    /// 1-based index of the offending step, if the failure is local.
    pub fn step(&self) -> Option<usize> {
        match *self {
            InvalidStep::EdgeOutOfRange { step }
            | InvalidStep::SameEdge { step }
            | InvalidStep::RemoveAbsent { step }
            | InvalidStep::AddPresent { step }
            | InvalidStep::Conflict { step } => Some(step),
            _ => None,
        }
    }
}

/// Checks that `seq` is a token-jumping walk from `ms` to `mt`.
pub fn validate_sequence(g: &Graph, ms: &Matching, mt: &Matching, seq: &ReconfigSequence) -> Result<(), InvalidStep> {
    if &seq.start != ms {
        return Err(InvalidStep::WrongStart);
    }
    let mut cur = ms.clone();
    let mut cover = ms.cover(g);
    for (i, s) in seq.steps.iter().enumerate() {
        let step = i + 1;
        if s.remove >= g.m() || s.add >= g.m() {
            return Err(InvalidStep::EdgeOutOfRange { step });
        }
        if s.remove == s.add {
            return Err(InvalidStep::SameEdge { step });
        }
        if !cur.contains(s.remove) {
            return Err(InvalidStep::RemoveAbsent { step });
        }
        if cur.contains(s.add) {
            return Err(InvalidStep::AddPresent { step });
        }
        let (a, b) = g.edge(s.remove);
        cover[a] = None;
        cover[b] = None;
        let (u, v) = g.edge(s.add);
        if cover[u].is_some() || cover[v].is_some() {
            return Err(InvalidStep::Conflict { step });
        }
        cover[u] = Some(s.add);
        cover[v] = Some(s.add);
        cur = cur.exchanged(s.remove, s.add);
    }
    if &cur != mt {
        return Err(InvalidStep::WrongEnd);
    }
    Ok(())
}

/// All exchanges applicable to `m`, in (remove, add) order.
pub fn moves(g: &Graph, m: &Matching) -> Vec<Exchange> {
    let cover = m.cover(g);
    let mut out = Vec::new();
    for &e in m.edges() {
        for (f, &(u, v)) in g.edges().iter().enumerate() {
            let free = |x: usize| cover[x].is_none() || cover[x] == Some(e);
            if f != e && !m.contains(f) && free(u) && free(v) {
                out.push(Exchange::new(e, f));
            }
        }
    }
    out
}

/// Matchings one token jump away from `m`, sorted.
pub fn neighbors(g: &Graph, m: &Matching) -> Vec<Matching> {
    let mut out: Vec<Matching> = moves(g, m).into_iter().map(|x| m.exchanged(x.remove, x.add)).collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub distance: Distance,
    pub witness: Option<ReconfigSequence>,
    pub explored: usize,
}

/// Breadth-first search over the configuration graph from `ms` to `mt`.
pub fn oracle_distance(g: &Graph, ms: &Matching, mt: &Matching, budget: usize) -> Result<OracleAnswer, BudgetExceeded> {
    if ms.len() != mt.len() {
        return Ok(OracleAnswer { distance: Distance::Infinite, witness: None, explored: 0 });
    }
    let mut parent: HashMap<Matching, Option<(Matching, Exchange)>> = HashMap::new();
    parent.insert(ms.clone(), None);
    let mut queue = VecDeque::from([ms.clone()]);
    let mut found = ms == mt;
    while !found {
        let Some(cur) = queue.pop_front() else { break };
        for x in moves(g, &cur) {
            let next = cur.exchanged(x.remove, x.add);
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= budget {
                return Err(BudgetExceeded { budget, explored: parent.len() });
            }
            parent.insert(next.clone(), Some((cur.clone(), x)));
            if &next == mt {
                found = true;
                break;
            }
            queue.push_back(next);
        }
    }
    let explored = parent.len();
    if !found {
        return Ok(OracleAnswer { distance: Distance::Infinite, witness: None, explored });
    }
    let mut steps = Vec::new();
    let mut cur = mt.clone();
    while let Some(Some((prev, x))) = parent.get(&cur) {
        steps.push(*x);
        cur = prev.clone();
    }
    steps.reverse();
    let seq = ReconfigSequence { start: ms.clone(), steps };
    Ok(OracleAnswer { distance: Distance::Finite(seq.len()), witness: Some(seq), explored })
}

/// Every matching of size `k`, sorted.
pub fn matchings_of_size(g: &Graph, k: usize, budget: usize) -> Result<Vec<Matching>, BudgetExceeded> {
    fn rec(
        g: &Graph,
        k: usize,
        from: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<EdgeId>,
        out: &mut Vec<Matching>,
        budget: usize,
    ) -> Result<(), BudgetExceeded> {
        if cur.len() == k {
            if out.len() >= budget {
                return Err(BudgetExceeded { budget, explored: out.len() });
            }
            out.push(Matching::from_sorted_unchecked(cur.clone()));
            return Ok(());
        }
        for e in from..g.m() {
            if g.m() - e < k - cur.len() {
                break;
            }
            let (u, v) = g.edge(e);
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            cur.push(e);
            rec(g, k, e + 1, used, cur, out, budget)?;
            cur.pop();
            used[u] = false;
            used[v] = false;
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(g, k, 0, &mut vec![false; g.n()], &mut Vec::new(), &mut out, budget)?;
    Ok(out)
}

/// The configuration graph on all matchings of one size.
#[derive(Debug, Clone)]
pub struct ConfigurationGraph {
    pub matchings: Vec<Matching>,
    pub adjacency: Vec<Vec<usize>>,
}

impl ConfigurationGraph {
    pub fn build(g: &Graph, k: usize, budget: usize) -> Result<Self, BudgetExceeded> {
        let matchings = matchings_of_size(g, k, budget)?;
        let index: HashMap<&Matching, usize> = matchings.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let adjacency = matchings
            .iter()
            .map(|m| {
                let mut adj: Vec<usize> = moves(g, m).iter().map(|x| index[&m.exchanged(x.remove, x.add)]).collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        Ok(ConfigurationGraph { matchings, adjacency })
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.matchings.binary_search(m).ok()
    }

    /// BFS distances (`usize::MAX` when unreachable) and parents from `s`.
    pub fn bfs(&self, s: usize) -> (Vec<usize>, Vec<usize>) {
        let mut dist = vec![usize::MAX; self.matchings.len()];
        let mut parent = vec![usize::MAX; self.matchings.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Shortest walk from `s` to `t` as a sequence, if one exists.
    pub fn shortest_sequence(&self, g: &Graph, s: usize, t: usize) -> Option<ReconfigSequence> {
        let (dist, parent) = self.bfs(s);
        if dist[t] == usize::MAX {
            return None;
        }
        let mut chain = vec![t];
        while *chain.last().unwrap() != s {
            chain.push(parent[*chain.last().unwrap()]);
        }
        chain.reverse();
        let steps = chain
            .windows(2)
            .map(|w| {
                let (a, b) = (&self.matchings[w[0]], &self.matchings[w[1]]);
                let remove = a.difference(b)[0];
                let add = b.difference(a)[0];
                let _ = g;
                Exchange::new(remove, add)
            })
            .collect();
        Some(ReconfigSequence { start: self.matchings[s].clone(), steps })
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.matchings.len()];
        let mut count = 0;
        for s in 0..self.matchings.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for s in 0..self.matchings.len() {
            let (dist, _) = self.bfs(s);
            for &d in &dist {
                if d == usize::MAX {
                    return Distance::Infinite;
                }
                best = best.max(d);
            }
        }
        Distance::Finite(best)
    }
}

/// Largest distance between two size-`k` matchings. An empty configuration
/// graph has diameter 0.
pub fn oracle_diameter(g: &Graph, k: usize, budget: usize) -> Result<Distance, BudgetExceeded> {
    Ok(ConfigurationGraph::build(g, k, budget)?.diameter())
}

/// Which argument settled a reachability question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReachabilityReason {
    /// One matching is not inclusion-wise maximal.
    NonMaximal,
    /// Both matchings are maximum; decided per cycle of the difference.
    CycleCondition,
    /// Not maximum: an augmenting path lets a token escape.
    NotMaximum,
    /// Sizes differ.
    SizeMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Reachability {
    pub reachable: bool,
    pub reason: ReachabilityReason,
}

/// Decides whether `mt` can be reached from `ms`. Polynomial in all cases.
pub fn is_reachable(g: &Graph, ms: &Matching, mt: &Matching) -> Reachability {
    use ReachabilityReason::*;
    if ms.len() != mt.len() {
        return Reachability { reachable: false, reason: SizeMismatch };
    }
    if !is_maximal(g, ms) || !is_maximal(g, mt) {
        return Reachability { reachable: true, reason: NonMaximal };
    }
    if !is_maximum(g, ms) {
        return Reachability { reachable: true, reason: NotMaximum };
    }
    let eg = edmonds_gallai_from(g, ms).expect("checked maximum");
    let class = eg.classes(g.n());
    let decomposition = sym_diff_decompose(g, ms, mt);
    let reachable = decomposition
        .cycles
        .iter()
        .all(|c| c.vertices.iter().any(|&v| class[v] != EgClass::C));
    Reachability { reachable, reason: CycleCondition }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    /// `k` exceeds the matching number, so there are no size-`k` matchings.
    pub empty: bool,
}

/// Whether all size-`k` matchings form one component under token jumping.
pub fn is_connected(g: &Graph, k: usize) -> Connectivity {
    let nu = matching_number(g);
    if k > nu {
        return Connectivity { connected: true, empty: true };
    }
    if k < nu {
        return Connectivity { connected: true, empty: false };
    }
    let eg = edmonds_gallai(g);
    let core = g.induced(&eg.c);
    Connectivity { connected: has_unique_perfect_matching(&core), empty: false }
}

/// Convenience: is the graph bipartite.
pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}
