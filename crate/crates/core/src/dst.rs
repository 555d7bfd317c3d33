//! Distance between two maximum matchings of a bipartite graph via directed
//! Steiner trees.
//!
//! Every exposed vertex is moved to side `U`. Nodes of the digraph are the
//! `U`-vertices reachable from an exposed vertex by an even alternating path,
//! plus a root. An arc `u → w` stands for the slide of the source edge `vw`
//! onto `uv`; it costs 1 when `uv` is a target edge ("special") and 2
//! otherwise. The root reaches each exposed vertex for free. Terminals are
//! the `U`-vertices of the symmetric difference, and an optimal tree's cost
//! is the distance.

use crate::graph::{bipartition, sym_diff_decompose, Bipartition, Component, EdgeId, Graph, Matching, Side, SymDiffDecomposition, Vertex};
use crate::matching::{allowed_edges, is_maximum};
use crate::reconfig::{validate_sequence, Distance, Exchange, InvalidStep, ReconfigSequence};
use crate::steiner::{dreyfus_wagner, validate_tree, Arc, SteinerError, SteinerInstance, SteinerTree, TreeDefect};
use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArcKind {
    /// Root to an exposed vertex, cost 0.
    Artificial,
    /// `uv` in the target matching, `vw` in the source matching; cost 1.
    Special,
    Ordinary,
}

/// The graph path `from – via – to` behind an arc (`via` absent for root arcs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArcOrigin {
    pub from: Vertex,
    pub via: Option<Vertex>,
    pub to: Vertex,
    pub kind: ArcKind,
    /// Edge `from–via`, added when the arc is traversed downwards.
    pub slide_edge: Option<EdgeId>,
    /// Source edge `via–to`, removed when the arc is traversed downwards.
    pub source_edge: Option<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DstReduction {
    pub instance: SteinerInstance<u32>,
    pub origin: Vec<ArcOrigin>,
    /// Component (paths first, then cycles, as in `components()`) of each special arc.
    pub component_of_arc: Vec<Option<usize>>,
    /// Special arcs of each component, in component order.
    pub component_arcs: Vec<Vec<usize>>,
    pub decomposition: SymDiffDecomposition,
    /// Side of every vertex after moving exposed vertices to `U`.
    pub sides: Vec<Side>,
    pub in_reach: Vec<bool>,
    pub root: usize,
    /// Index into `decomposition.cycles` of a cycle no tree can reach.
    pub blocking_cycle: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DstError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("matchings have different sizes")]
    SizeMismatch,
    #[error("the {0} matching is not maximum")]
    NotMaximum(&'static str),
    #[error("exposed vertices of one component lie on both sides (vertex {0}); prune to allowed edges first")]
    ExposedOnBothSides(Vertex),
    #[error("tree is not usable: {0:?}")]
    Structure(Vec<StructureDefect>),
    #[error(transparent)]
    Steiner(#[from] SteinerError),
    #[error("internal error: produced sequence is invalid: {0}")]
    Invalid(#[from] InvalidStep),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum StructureDefect {
    NotATree(String),
    /// A special arc of a path component is missing.
    PathArcMissing { component: usize, arc: usize },
    /// A cycle component misses a number of special arcs other than one.
    CycleArcsMissing { component: usize, missing: usize },
    /// The root arc to the exposed end of a path component is missing.
    PathNotRooted { component: usize },
}

impl From<TreeDefect> for StructureDefect {
    fn from(d: TreeDefect) -> Self {
        StructureDefect::NotATree(d.to_string())
    }
}

impl DstReduction {
    pub fn arc_count(&self) -> usize {
        self.origin.len()
    }

    pub fn is_unreachable(&self) -> bool {
        self.blocking_cycle.is_some()
    }

    pub fn terminals(&self) -> &[usize] {
        &self.instance.terminals
    }

    fn is_cycle_component(&self, c: usize) -> bool {
        c >= self.decomposition.paths.len()
    }

    /// Graphviz rendering of the digraph; `highlight` arcs are drawn bold.
    pub fn to_dot(&self, highlight: &[usize]) -> String {
        let mut s = String::from("digraph steiner {\n");
        let _ = writeln!(s, "  r [label=\"r\", shape=box];");
        let terms: Vec<usize> = self.instance.terminals.clone();
        for v in (0..self.root).filter(|&v| self.in_reach[v]) {
            let shape = if terms.contains(&v) { "doublecircle" } else { "circle" };
            let _ = writeln!(s, "  n{} [label=\"{}\", shape={shape}];", v, v + 1);
        }
        for (i, (a, o)) in self.instance.arcs.iter().zip(&self.origin).enumerate() {
            let from = if a.from == self.root { "r".to_string() } else { format!("n{}", a.from) };
            let style = if highlight.contains(&i) { ", style=bold" } else { "" };
            let kind = match o.kind {
                ArcKind::Artificial => "artificial",
                ArcKind::Special => "special",
                ArcKind::Ordinary => "ordinary",
            };
            let _ = writeln!(s, "  {from} -> n{} [cost={}, kind={kind}{style}];", a.to, a.cost);
        }
        s.push_str("}\n");
        s
    }
}

/// Restricts `g` to its allowed edges and re-expresses both matchings there.
/// Returns the pruned graph, the map from its edge ids to `g`'s, and the two
/// matchings.
pub fn prune_to_allowed(g: &Graph, ms: &Matching, mt: &Matching) -> Option<(Graph, Vec<EdgeId>, Matching, Matching)> {
    let allowed = allowed_edges(g);
    let mut keep = vec![false; g.m()];
    for e in allowed {
        keep[e] = true;
    }
    let (h, map) = g.edge_subgraph(|e| keep[e]);
    let ms2 = ms.restrict_to(&map)?;
    let mt2 = mt.restrict_to(&map)?;
    Some((h, map, ms2, mt2))
}

/// Builds the Steiner instance. Expects maximum matchings and a graph in
/// which every edge is allowed; an exposed vertex on the wrong side of its
/// component is reported rather than repaired.
pub fn build_dst_instance(g: &Graph, ms: &Matching, mt: &Matching) -> Result<DstReduction, DstError> {
    let bip = bipartition(g).ok_or(DstError::NotBipartite)?;
    if ms.len() != mt.len() {
        return Err(DstError::SizeMismatch);
    }
    if !is_maximum(g, ms) {
        return Err(DstError::NotMaximum("source"));
    }
    if !is_maximum(g, mt) {
        return Err(DstError::NotMaximum("target"));
    }
    let bip = orient_exposed(g, &bip, ms, mt)?;
    let sides = bip.sides().to_vec();
    let n = g.n();
    let root = n;
    let smate = ms.mates(g);
    let dec = sym_diff_decompose(g, ms, mt);

    let exposed: Vec<Vertex> = ms.exposed(g);
    let mut in_reach = vec![false; n];
    let mut queue = VecDeque::new();
    for &x in &exposed {
        in_reach[x] = true;
        queue.push_back(x);
    }
    let mut arcs = Vec::new();
    let mut origin = Vec::new();
    for &x in &exposed {
        arcs.push(Arc { from: root, to: x, cost: 0 });
        origin.push(ArcOrigin { from: root, via: None, to: x, kind: ArcKind::Artificial, slide_edge: None, source_edge: None });
    }
    // Breadth-first over U', emitting the arcs of each node as it is settled.
    while let Some(u) = queue.pop_front() {
        for &(v, e) in g.neighbors(u) {
            if ms.contains(e) {
                continue;
            }
            let w = smate[v].expect("with exposed vertices only on U, every W-vertex is covered");
            let f = g.edge_between(v, w).unwrap();
            let kind = if mt.contains(e) { ArcKind::Special } else { ArcKind::Ordinary };
            let cost = if kind == ArcKind::Special { 1 } else { 2 };
            arcs.push(Arc { from: u, to: w, cost });
            origin.push(ArcOrigin { from: u, via: Some(v), to: w, kind, slide_edge: Some(e), source_edge: Some(f) });
            if !in_reach[w] {
                in_reach[w] = true;
                queue.push_back(w);
            }
        }
    }

    let comp_of = dec.component_of(n);
    let comps = dec.paths.len() + dec.cycles.len();
    let mut component_of_arc = vec![None; arcs.len()];
    let mut component_arcs = vec![Vec::new(); comps];
    for (i, o) in origin.iter().enumerate() {
        if o.kind == ArcKind::Special {
            let c = comp_of[o.from].expect("special arcs lie in the symmetric difference");
            component_of_arc[i] = Some(c);
            component_arcs[c].push(i);
        }
    }
    for list in &mut component_arcs {
        order_along_component(list, &origin);
    }
    let mut terminals: Vec<usize> = dec
        .components()
        .flat_map(|c| c.vertices.iter().copied())
        .filter(|&v| sides[v] == Side::U && in_reach[v])
        .collect();
    terminals.sort_unstable();
    let blocking_cycle = dec.cycles.iter().position(|c| !c.vertices.iter().any(|&v| in_reach[v]));

    Ok(DstReduction {
        instance: SteinerInstance { nodes: n + 1, arcs, root, terminals },
        origin,
        component_of_arc,
        component_arcs,
        decomposition: dec,
        sides,
        in_reach,
        root,
        blocking_cycle,
    })
}

/// Orders a component's special arcs head-to-tail (paths from their start).
fn order_along_component(list: &mut Vec<usize>, origin: &[ArcOrigin]) {
    if list.len() < 2 {
        return;
    }
    let heads: Vec<Vertex> = list.iter().map(|&a| origin[a].to).collect();
    let start = list.iter().position(|&a| !heads.contains(&origin[a].from)).unwrap_or_else(|| {
        (0..list.len()).min_by_key(|&i| origin[list[i]].from).unwrap()
    });
    let mut out = vec![list[start]];
    while out.len() < list.len() {
        let tail = origin[*out.last().unwrap()].to;
        match list.iter().find(|&&a| origin[a].from == tail) {
            Some(&a) if !out.contains(&a) => out.push(a),
            _ => break,
        }
    }
    *list = out;
}

/// Flips components so that every exposed vertex (of either matching) is on
/// side `U`.
fn orient_exposed(g: &Graph, bip: &Bipartition, ms: &Matching, mt: &Matching) -> Result<Bipartition, DstError> {
    let mut exposed = ms.exposed(g);
    exposed.extend(mt.exposed(g));
    let mut is_exposed = vec![false; g.n()];
    for &v in &exposed {
        is_exposed[v] = true;
    }
    let mut conflict = None;
    let flipped = bip.flip_components(g, |comp| {
        let on: Vec<Side> = comp.iter().filter(|&&v| is_exposed[v]).map(|&v| bip.side(v)).collect();
        if on.contains(&Side::U) && on.contains(&Side::W) {
            conflict = comp.iter().copied().find(|&v| is_exposed[v] && bip.side(v) == Side::W);
        }
        on.first() == Some(&Side::W) && !on.contains(&Side::U)
    });
    match conflict {
        Some(v) => Err(DstError::ExposedOnBothSides(v)),
        None => Ok(flipped),
    }
}

/// Checks that `tree` is feasible and has the shape every optimal tree has:
/// all special arcs of each path, all but one special arc of each cycle, and
/// the root joined to the exposed end of each path.
pub fn verify_tree_structure(red: &DstReduction, tree: &SteinerTree<u32>) -> Vec<StructureDefect> {
    if let Err(d) = validate_tree(&red.instance, tree) {
        return vec![d.into()];
    }
    let mut member = vec![false; red.arc_count()];
    for &a in &tree.arcs {
        member[a] = true;
    }
    let mut defects = Vec::new();
    for (c, comp) in red.decomposition.components().enumerate() {
        let arcs = &red.component_arcs[c];
        if red.is_cycle_component(c) {
            if !comp.vertices.iter().any(|&v| red.in_reach[v]) {
                continue;
            }
            let missing = arcs.iter().filter(|&&a| !member[a]).count();
            if missing != 1 {
                defects.push(StructureDefect::CycleArcsMissing { component: c, missing });
            }
        } else {
            if let Some(&a) = arcs.iter().find(|&&a| !member[a]) {
                defects.push(StructureDefect::PathArcMissing { component: c, arc: a });
            }
            let start = path_exposed_end(red, comp);
            let rooted = (0..red.arc_count()).any(|a| {
                member[a] && red.origin[a].kind == ArcKind::Artificial && Some(red.origin[a].to) == start
            });
            if !rooted {
                defects.push(StructureDefect::PathNotRooted { component: c });
            }
        }
    }
    defects
}

/// The end of a path component not covered by the source matching.
fn path_exposed_end(red: &DstReduction, comp: &Component) -> Option<Vertex> {
    let first = *comp.vertices.first()?;
    let last = *comp.vertices.last()?;
    let exposed = |v: Vertex| red.instance.arcs.iter().zip(&red.origin).any(|(_, o)| o.kind == ArcKind::Artificial && o.to == v);
    [first, last].into_iter().find(|&v| exposed(v))
}

/// Replays an optimal tree as a reconfiguration sequence of exactly its cost.
///
/// The tree is walked depth-first from the root, heaviest arc first (ties by
/// smaller head). Going down an arc slides its source edge onto its slide
/// edge; going back up restores it, except that special arcs stay put and the
/// arc entering a cycle is closed off with the cycle's missing target edge.
pub fn tree_to_sequence(red: &DstReduction, tree: &SteinerTree<u32>, g: &Graph, ms: &Matching) -> Result<ReconfigSequence, DstError> {
    let defects = verify_tree_structure(red, tree);
    if !defects.is_empty() {
        return Err(DstError::Structure(defects));
    }
    let mut member = vec![false; red.arc_count()];
    for &a in &tree.arcs {
        member[a] = true;
    }
    // Target edge at the source of each cycle's missing arc.
    let mut closing: HashMap<usize, EdgeId> = HashMap::new();
    for (c, arcs) in red.component_arcs.iter().enumerate() {
        if red.is_cycle_component(c) {
            if let Some(&a) = arcs.iter().find(|&&a| !member[a]) {
                closing.insert(c, red.origin[a].slide_edge.unwrap());
            }
        }
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); red.instance.nodes];
    for &a in &tree.arcs {
        children[red.instance.arcs[a].from].push(a);
    }
    for list in &mut children {
        list.sort_by_key(|&a| (std::cmp::Reverse(red.instance.arcs[a].cost), red.instance.arcs[a].to, a));
    }

    let mut seq = ReconfigSequence::new(ms.clone());
    let mut previous: Option<usize> = None;
    let mut stack: Vec<(usize, usize)> = vec![(red.root, 0)];
    let mut entered_by: Vec<Option<usize>> = vec![None; red.instance.nodes];
    while let Some(&mut (node, ref mut next)) = stack.last_mut() {
        if let Some(&a) = children[node].get(*next) {
            *next += 1;
            let o = &red.origin[a];
            if o.kind != ArcKind::Artificial {
                seq.steps.push(Exchange::new(o.source_edge.unwrap(), o.slide_edge.unwrap()));
            }
            previous = Some(a);
            entered_by[o.to] = Some(a);
            stack.push((o.to, 0));
            continue;
        }
        stack.pop();
        let Some(a) = entered_by[node] else { continue };
        let o = &red.origin[a];
        match o.kind {
            ArcKind::Artificial | ArcKind::Special => {}
            ArcKind::Ordinary => {
                let closes = previous
                    .and_then(|p| red.component_of_arc[p])
                    .filter(|&c| red.is_cycle_component(c))
                    .and_then(|c| closing.get(&c).copied());
                let add = closes.unwrap_or_else(|| o.source_edge.unwrap());
                seq.steps.push(Exchange::new(o.slide_edge.unwrap(), add));
            }
        }
        previous = Some(a);
    }
    debug_assert_eq!(seq.len(), tree.cost as usize);
    debug_assert_eq!(validate_sequence(g, ms, &seq.end(), &seq), Ok(()));
    Ok(seq)
}

/// Arcs of the digraph realised by the exchanges of `seq`, together with all
/// root arcs. A sequence reaching the target makes every terminal reachable
/// from the root in this subgraph.
pub fn sequence_to_subgraph(red: &DstReduction, g: &Graph, seq: &ReconfigSequence) -> Vec<usize> {
    let mut index: HashMap<(Vertex, Vertex, Vertex), usize> = HashMap::new();
    for (i, o) in red.origin.iter().enumerate() {
        if let Some(v) = o.via {
            index.insert((o.from, v, o.to), i);
        }
    }
    let mut out: Vec<usize> = (0..red.arc_count()).filter(|&i| red.origin[i].kind == ArcKind::Artificial).collect();
    for s in &seq.steps {
        let (a, b) = g.edge(s.remove);
        let (c, d) = g.edge(s.add);
        let shared = [a, b].into_iter().find(|&x| x == c || x == d);
        let Some(v) = shared else { continue };
        let x = if a == v { b } else { a };
        let y = if c == v { d } else { c };
        for key in [(x, v, y), (y, v, x)] {
            if let Some(&i) = index.get(&key) {
                out.push(i);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Terminals not reachable from the root using only `arcs`.
pub fn unreached_terminals(red: &DstReduction, arcs: &[usize]) -> Vec<usize> {
    let mut out = vec![Vec::new(); red.instance.nodes];
    for &a in arcs {
        out[red.instance.arcs[a].from].push(red.instance.arcs[a].to);
    }
    let mut seen = vec![false; red.instance.nodes];
    seen[red.root] = true;
    let mut queue = VecDeque::from([red.root]);
    while let Some(v) = queue.pop_front() {
        for &w in &out[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    red.instance.terminals.iter().copied().filter(|&t| !seen[t]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxMatchingAnswer {
    pub distance: Distance,
    pub sequence: Option<ReconfigSequence>,
    /// A cycle of the symmetric difference that cannot be rotated.
    pub blocking_cycle: Option<Component>,
    pub tree_cost: Option<u32>,
}

/// Exact distance between two maximum matchings of a bipartite graph:
/// prune to allowed edges, build the Steiner instance, solve it exactly and
/// replay the tree. The witness is in `g`'s edge ids.
pub fn max_matching_distance(g: &Graph, ms: &Matching, mt: &Matching) -> Result<MaxMatchingAnswer, DstError> {
    if bipartition(g).is_none() {
        return Err(DstError::NotBipartite);
    }
    if ms.len() != mt.len() {
        return Err(DstError::SizeMismatch);
    }
    if !is_maximum(g, ms) {
        return Err(DstError::NotMaximum("source"));
    }
    if !is_maximum(g, mt) {
        return Err(DstError::NotMaximum("target"));
    }
    let (h, map, hs, ht) = prune_to_allowed(g, ms, mt).expect("maximum matchings use allowed edges only");
    let red = build_dst_instance(&h, &hs, &ht)?;
    if let Some(c) = red.blocking_cycle {
        return Ok(MaxMatchingAnswer {
            distance: Distance::Infinite,
            sequence: None,
            blocking_cycle: Some(red.decomposition.cycles[c].clone()),
            tree_cost: None,
        });
    }
    let tree = dreyfus_wagner(&red.instance)?;
    let seq = tree_to_sequence(&red, &tree, &h, &hs)?;
    validate_sequence(&h, &hs, &ht, &seq)?;
    let seq = seq.map_edges(&map);
    Ok(MaxMatchingAnswer {
        distance: Distance::Finite(seq.len()),
        sequence: Some(seq),
        blocking_cycle: None,
        tree_cost: Some(tree.cost),
    })
}
