//! Shortest transformations that pass through a matching which is not
//! inclusion-wise maximal.
//!
//! Two pieces live here. [`distance_one_nonmaximal`] handles instances where
//! one endpoint already has a free edge: the answer is `d/2` or `d/2 + 1`.
//! [`shortest_via_nonmaximal`] handles two maximal (but not maximum)
//! matchings in a bipartite graph: it finds the cheapest way to slide free
//! vertices until two of them are adjacent, then finishes as above.

use crate::graph::{bipartition, is_maximal, sym_diff_decompose, Bipartition, EdgeId, Graph, Matching, PathKind, Side, SymDiffDecomposition, Vertex};
use crate::matching::is_maximum;
use crate::reconfig::{Exchange, ReconfigSequence};
use serde::Serialize;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlackError {
    #[error("matchings have different sizes")]
    SizeMismatch,
    #[error("both matchings are inclusion-wise maximal")]
    BothMaximal,
    #[error("a matching is not inclusion-wise maximal")]
    NotMaximal,
    #[error("graph is not bipartite")]
    NotBipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteAnswer {
    pub length: usize,
    pub sequence: ReconfigSequence,
    /// Whether the finishing phase needed one extra exchange for cycles.
    pub delta: bool,
}

/// Extra exchange needed after reaching a non-maximal matching: the
/// difference has a cycle but no path with an odd number of edges.
pub fn needs_parking(dec: &SymDiffDecomposition) -> bool {
    !dec.cycles.is_empty() && !dec.has_odd_path()
}

fn oriented_path(ms: &Matching, vertices: &[Vertex], edges: &[EdgeId], first_in_target: bool) -> (Vec<Vertex>, Vec<EdgeId>) {
    let starts_in_target = !ms.contains(edges[0]);
    if starts_in_target == first_in_target {
        (vertices.to_vec(), edges.to_vec())
    } else {
        (vertices.iter().rev().copied().collect(), edges.iter().rev().copied().collect())
    }
}

/// `|Ms Δ Mt| / 2` exchanges, available when the difference has no cycle or
/// has a path with an odd number of edges. Returns `None` otherwise.
///
/// Even paths are slid from their end that `Ms` leaves free. A path with two
/// target end-edges is slid until one target edge remains open; the open slot
/// is then passed through every cycle (fill with the cycle's first source
/// edge, slide the rest, which opens a new slot) and finally closed by a path
/// with two source end-edges.
pub fn halving_sequence(g: &Graph, ms: &Matching, mt: &Matching) -> Option<ReconfigSequence> {
    let dec = sym_diff_decompose(g, ms, mt);
    if needs_parking(&dec) {
        return None;
    }
    let mut steps = Vec::new();
    let mut target_heavy = Vec::new();
    let mut source_heavy = Vec::new();
    for p in &dec.paths {
        match p.path_kind(ms).unwrap() {
            PathKind::Even => {
                let (_, e) = oriented_path(ms, &p.vertices, &p.edges, true);
                for i in (1..e.len()).step_by(2) {
                    steps.push(Exchange::new(e[i], e[i - 1]));
                }
            }
            PathKind::TargetHeavy => target_heavy.push(p.edges.clone()),
            PathKind::SourceHeavy => source_heavy.push(p.edges.clone()),
        }
    }
    debug_assert_eq!(target_heavy.len(), source_heavy.len());
    for (i, (t, s)) in target_heavy.iter().zip(&source_heavy).enumerate() {
        for j in (1..t.len()).step_by(2) {
            steps.push(Exchange::new(t[j], t[j - 1]));
        }
        let mut hole = *t.last().unwrap();
        if i == 0 {
            for c in &dec.cycles {
                let k = c.edges.len();
                let first = (0..k).find(|&j| ms.contains(c.edges[j])).unwrap();
                let e: Vec<EdgeId> = (0..k).map(|j| c.edges[(first + j) % k]).collect();
                steps.push(Exchange::new(e[0], hole));
                for j in (2..k).step_by(2) {
                    steps.push(Exchange::new(e[j], e[j - 1]));
                }
                hole = e[k - 1];
            }
        }
        steps.push(Exchange::new(s[0], hole));
        for j in (2..s.len()).step_by(2) {
            steps.push(Exchange::new(s[j], s[j - 1]));
        }
    }
    Some(ReconfigSequence { start: ms.clone(), steps })
}

fn free_edge(g: &Graph, m: &Matching) -> Option<EdgeId> {
    let cov = m.cover(g);
    (0..g.m()).find(|&e| {
        let (u, v) = g.edge(e);
        cov[u].is_none() && cov[v].is_none()
    })
}

/// Shortest transformation when `ms` (or `mt`) is not inclusion-wise maximal:
/// `d/2` exchanges unless the difference consists of cycles and even paths
/// only, in which case one cycle edge is first parked on a free edge.
pub fn distance_one_nonmaximal(g: &Graph, ms: &Matching, mt: &Matching) -> Result<RouteAnswer, SlackError> {
    if ms.len() != mt.len() {
        return Err(SlackError::SizeMismatch);
    }
    let source_free = free_edge(g, ms);
    let target_free = free_edge(g, mt);
    if source_free.is_none() && target_free.is_none() {
        return Err(SlackError::BothMaximal);
    }
    if let Some(seq) = halving_sequence(g, ms, mt) {
        return Ok(RouteAnswer { length: seq.len(), sequence: seq, delta: false });
    }
    let sequence = match source_free {
        Some(e) => park_then_halve(g, ms, mt, e),
        None => park_then_halve(g, mt, ms, target_free.unwrap()).reversed(),
    };
    Ok(RouteAnswer { length: sequence.len(), sequence, delta: true })
}

fn park_then_halve(g: &Graph, ms: &Matching, mt: &Matching, free: EdgeId) -> ReconfigSequence {
    let dec = sym_diff_decompose(g, ms, mt);
    let cycle = &dec.cycles[0];
    let parked = *cycle.edges.iter().find(|&&e| ms.contains(e)).unwrap();
    let moved = ms.exchanged(parked, free);
    let rest = halving_sequence(g, &moved, mt).expect("parking leaves an odd path");
    let mut steps = vec![Exchange::new(parked, free)];
    steps.extend(rest.steps);
    ReconfigSequence { start: ms.clone(), steps }
}

/// Which case of the arc-cost table priced an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CostRule {
    /// Adds a target edge and removes a source-only edge: cost 0.
    Progress,
    /// Enters a difference path that reaches a vertex next to a free vertex: cost 0.
    SinkPath,
    /// Adds a non-target edge and removes a source-only edge: cost 1.
    Neutral,
    /// Removes an edge shared by both matchings: cost 2.
    Detour,
}

impl CostRule {
    pub fn cost(self) -> u32 {
        match self {
            CostRule::Progress | CostRule::SinkPath => 0,
            CostRule::Neutral => 1,
            CostRule::Detour => 2,
        }
    }
}

/// Arc `from → to` standing for the slide that removes `via–to` (a source
/// edge) and adds `from–via`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuxArc {
    pub from: Vertex,
    pub via: Vertex,
    pub to: Vertex,
    pub cost: u32,
    pub rule: CostRule,
}

/// Digraph on the walker side: nodes reachable from a free vertex of that
/// side by an even alternating path, sources are the free vertices, sinks are
/// the nodes with a free neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuxDigraph {
    pub walker_side: Side,
    pub nodes: Vec<Vertex>,
    pub sources: Vec<Vertex>,
    pub sinks: Vec<Vertex>,
    pub arcs: Vec<AuxArc>,
}

impl AuxDigraph {
    fn out_arcs(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.from].push(i);
        }
        out
    }
}

/// Cost of the slide `remove via–to, add from–via` measured against `mt`.
pub fn slide_rule(g: &Graph, ms: &Matching, mt: &Matching, from: Vertex, via: Vertex, to: Vertex) -> CostRule {
    let add = g.edge_between(from, via).unwrap();
    let remove = g.edge_between(via, to).unwrap();
    debug_assert!(ms.contains(remove) && !ms.contains(add));
    match (mt.contains(add), mt.contains(remove)) {
        (true, false) => CostRule::Progress,
        (false, false) => CostRule::Neutral,
        (false, true) => CostRule::Detour,
        (true, true) => unreachable!("two target edges at one vertex"),
    }
}

/// Builds the digraph with side `U` of the canonical bipartition as the
/// walker side.
pub fn build_aux_digraph(g: &Graph, ms: &Matching, mt: &Matching) -> Result<AuxDigraph, SlackError> {
    let bip = bipartition(g).ok_or(SlackError::NotBipartite)?;
    Ok(build_aux_digraph_on(g, &bip, ms, mt, Side::U, true))
}

/// As [`build_aux_digraph`] for an explicit walker side. With `sink_paths`
/// false the zero-cost rule for arcs entering a difference path that contains
/// a sink is skipped, leaving pure per-slide costs.
pub fn build_aux_digraph_on(g: &Graph, bip: &Bipartition, ms: &Matching, mt: &Matching, side: Side, sink_paths: bool) -> AuxDigraph {
    let n = g.n();
    let mate = ms.mates(g);
    let on_side = |v: Vertex| bip.side(v) == side;
    let sources: Vec<Vertex> = (0..n).filter(|&v| on_side(v) && mate[v].is_none()).collect();
    let mut reach = vec![false; n];
    let mut stack = sources.clone();
    for &x in &sources {
        reach[x] = true;
    }
    while let Some(u) = stack.pop() {
        for &(v, _) in g.neighbors(u) {
            if let Some(w) = mate[v] {
                if mate[u] != Some(v) && !reach[w] {
                    reach[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let nodes: Vec<Vertex> = (0..n).filter(|&v| reach[v]).collect();
    let is_sink = |v: Vertex| on_side(v) && g.neighbors(v).iter().any(|&(w, _)| mate[w].is_none());
    let sinks: Vec<Vertex> = nodes.iter().copied().filter(|&v| is_sink(v)).collect();

    let dec = sym_diff_decompose(g, ms, mt);
    let mut on_sink_path = vec![false; n];
    if sink_paths {
        for p in &dec.paths {
            if p.vertices.iter().any(|&v| is_sink(v)) {
                for &v in &p.vertices {
                    on_sink_path[v] = true;
                }
            }
        }
    }

    let mut arcs = Vec::new();
    for &u in &nodes {
        for &(v, _) in g.neighbors(u) {
            let Some(w) = mate[v] else { continue };
            if mate[u] == Some(v) || !reach[w] {
                continue;
            }
            let mut rule = slide_rule(g, ms, mt, u, v, w);
            if rule != CostRule::Progress && on_sink_path[w] {
                rule = CostRule::SinkPath;
            }
            arcs.push(AuxArc { from: u, via: v, to: w, cost: rule.cost(), rule });
        }
    }
    arcs.sort_by_key(|a| (a.from, a.to, a.via));
    AuxDigraph { walker_side: side, nodes, sources, sinks, arcs }
}

/// Multi-source Dijkstra; ties broken by node index then arc index. Returns
/// distances and the arc used to reach each node.
fn dijkstra(n: usize, sources: &[Vertex], arcs: &[AuxArc], out: &[Vec<usize>]) -> (Vec<u32>, Vec<Option<usize>>) {
    let mut dist = vec![u32::MAX; n];
    let mut pred = vec![None; n];
    let mut heap = BinaryHeap::new();
    for &s in sources {
        dist[s] = 0;
        heap.push(Reverse((0u32, s)));
    }
    let mut done = vec![false; n];
    while let Some(Reverse((d, v))) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for &i in &out[v] {
            let a = &arcs[i];
            let nd = d + a.cost;
            if nd < dist[a.to] {
                dist[a.to] = nd;
                pred[a.to] = Some(i);
                heap.push(Reverse((nd, a.to)));
            }
        }
    }
    (dist, pred)
}

fn walk_to(pred: &[Option<usize>], arcs: &[AuxArc], mut v: Vertex) -> Vec<AuxArc> {
    let mut out = Vec::new();
    while let Some(i) = pred[v] {
        out.push(arcs[i]);
        v = arcs[i].from;
    }
    out.reverse();
    out
}

/// Cheapest slides that bring a free vertex of one side next to a free
/// vertex of the other side, followed by the finishing phase.
///
/// Every exchange between two maximal matchings is a slide, so the prefix
/// moves free vertices ("walkers") along alternating paths, and the first
/// matching with a free edge appears when a `U`-walker and a `W`-walker are
/// adjacent. Each slide is priced `1 + Δφ` where `φ` is half the distance in
/// edges to `mt`, which is exactly the arc cost of the walker digraphs. Both
/// walkers are routed by Dijkstra; every candidate meeting edge is turned
/// into an explicit matching whose finishing cost is computed exactly.
///
/// Returns `Ok(None)` when `ms` is maximum (no transformation can pass a
/// non-maximal matching).
pub fn shortest_via_nonmaximal(g: &Graph, ms: &Matching, mt: &Matching) -> Result<Option<RouteAnswer>, SlackError> {
    let bip = bipartition(g).ok_or(SlackError::NotBipartite)?;
    if ms.len() != mt.len() {
        return Err(SlackError::SizeMismatch);
    }
    if !is_maximal(g, ms) || !is_maximal(g, mt) {
        return Err(SlackError::NotMaximal);
    }
    if is_maximum(g, ms) {
        return Ok(None);
    }
    let n = g.n();
    let walkers = [Side::U, Side::W].map(|side| {
        let aux = build_aux_digraph_on(g, &bip, ms, mt, side, false);
        let (dist, pred) = dijkstra(n, &aux.sources, &aux.arcs, &aux.out_arcs(n));
        (aux, dist, pred)
    });
    let d = ms.symmetric_difference(mt).len();
    let mut candidates: Vec<(u32, EdgeId, Vertex, Vertex)> = Vec::new();
    for e in (0..g.m()).filter(|&e| !ms.contains(e)) {
        let (u, w) = bip.orient(g, e);
        let (du, dw) = (walkers[0].1[u], walkers[1].1[w]);
        if du != u32::MAX && dw != u32::MAX {
            candidates.push((du + dw, e, u, w));
        }
    }
    candidates.sort_unstable();
    let mut best: Option<(usize, ReconfigSequence, bool)> = None;
    for &(cost, _, u, w) in &candidates {
        if best.as_ref().is_some_and(|b| cost as usize + d / 2 >= b.0) {
            break;
        }
        let mut prefix = ReconfigSequence::new(ms.clone());
        let walk_u = walk_to(&walkers[0].2, &walkers[0].0.arcs, u);
        let walk_w = walk_to(&walkers[1].2, &walkers[1].0.arcs, w);
        for a in walk_u.iter().chain(&walk_w) {
            let remove = g.edge_between(a.via, a.to).unwrap();
            let add = g.edge_between(a.from, a.via).unwrap();
            prefix.steps.push(Exchange::new(remove, add));
        }
        let stop = prefix.end();
        if crate::reconfig::validate_sequence(g, ms, &stop, &prefix).is_err() {
            continue;
        }
        let finish = distance_one_nonmaximal(g, &stop, mt).expect("walkers meet on a free edge");
        let length = prefix.len() + finish.length;
        if best.as_ref().is_none_or(|b| length < b.0) {
            prefix.extend(&finish.sequence);
            best = Some((length, prefix, finish.delta));
        }
    }
    Ok(best.map(|(length, sequence, delta)| RouteAnswer { length, sequence, delta }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::validate_sequence;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn single_jump_between_path_ends() {
        let g = path(4);
        let ms = Matching::new(&g, [0]).unwrap();
        let mt = Matching::new(&g, [2]).unwrap();
        let ans = distance_one_nonmaximal(&g, &ms, &mt).unwrap();
        assert_eq!((ans.length, ans.delta), (1, false));
        assert_eq!(validate_sequence(&g, &ms, &mt, &ans.sequence), Ok(()));
    }

    #[test]
    fn cycle_plus_spare_edge_needs_parking() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5)]).unwrap();
        let ms = Matching::new(&g, [0, 2]).unwrap();
        let mt = Matching::new(&g, [1, 3]).unwrap();
        let ans = distance_one_nonmaximal(&g, &ms, &mt).unwrap();
        assert_eq!((ans.length, ans.delta), (3, true));
        assert_eq!(validate_sequence(&g, &ms, &mt, &ans.sequence), Ok(()));
        let back = distance_one_nonmaximal(&g, &mt, &ms).unwrap();
        assert_eq!(validate_sequence(&g, &mt, &ms, &back.sequence), Ok(()));
    }

    #[test]
    fn identical_and_maximal_inputs() {
        let g = path(4);
        let ms = Matching::new(&g, [0]).unwrap();
        assert_eq!(distance_one_nonmaximal(&g, &ms, &ms).unwrap().length, 0);
        let mid = Matching::new(&g, [1]).unwrap();
        assert_eq!(distance_one_nonmaximal(&g, &mid, &mid), Err(SlackError::BothMaximal));
    }

    #[test]
    fn walker_digraph_on_a_path() {
        let g = path(6);
        let ms = Matching::new(&g, [1, 3]).unwrap();
        let aux = build_aux_digraph(&g, &ms, &ms).unwrap();
        assert_eq!(aux.sources, vec![0]);
        assert_eq!(aux.sinks, vec![4]);
        let arcs: Vec<(usize, usize, u32)> = aux.arcs.iter().map(|a| (a.from, a.to, a.cost)).collect();
        assert_eq!(arcs, vec![(0, 2, 2), (2, 4, 2)]);
    }

    #[test]
    fn no_free_vertex_on_walker_side() {
        let g = path(2);
        let ms = Matching::new(&g, [0]).unwrap();
        let aux = build_aux_digraph(&g, &ms, &ms).unwrap();
        assert!(aux.sources.is_empty() && aux.arcs.is_empty());
        assert_eq!(shortest_via_nonmaximal(&g, &ms, &ms), Ok(None));
    }

    #[test]
    fn route_through_free_edge() {
        // 0-1-2-3-4-5 with the two middle edges matched; same source and target.
        let g = path(6);
        let ms = Matching::new(&g, [1, 3]).unwrap();
        let ans = shortest_via_nonmaximal(&g, &ms, &ms).unwrap().unwrap();
        assert_eq!(validate_sequence(&g, &ms, &ms, &ans.sequence), Ok(()));
        assert!(ans.sequence.matchings().iter().any(|m| !is_maximal(&g, m)));
        assert_eq!(ans.length, 4);
    }
}
