//! Maximum matchings (Hopcroft–Karp for bipartite graphs, Edmonds' blossom
//! algorithm otherwise), allowed edges, the Edmonds–Gallai decomposition and
//! the unique-perfect-matching test.

use crate::graph::{bipartition, Bipartition, EdgeId, Graph, Matching, Side, Vertex};
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("matching of size {size} is not maximum (maximum is {nu})")]
    NotMaximum { size: usize, nu: usize },
}

/// Alternating-forest search of Edmonds' algorithm over a mate array.
struct Forest<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    root: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Forest<'a> {
    fn new(g: &'a Graph, mate: Vec<usize>) -> Self {
        let n = g.n();
        Forest {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            root: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn reset(&mut self) {
        self.parent.fill(NONE);
        self.even.fill(false);
        self.root.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
    }

    /// Common base of `a` and `b`, or `None` if they lie in different trees.
    fn lca(&self, mut a: usize, mut b: usize) -> Option<usize> {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return Some(b);
            }
            if self.mate[b] == NONE {
                return None;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows a forest from `roots`. Returns `Ok(Some(v))` for the far end of
    /// an augmenting path (single-root use), `Ok(None)` when the forest is
    /// exhausted and `Err(())` when two trees touch along an even-even edge.
    fn grow(&mut self, roots: &[usize]) -> Result<Option<usize>, ()> {
        self.reset();
        let mut queue = VecDeque::new();
        for &r in roots {
            self.root[r] = true;
            self.even[r] = true;
            queue.push_back(r);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[i].0;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_even = self.root[to] || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_even {
                    let b = self.lca(v, to).ok_or(())?;
                    self.in_blossom.fill(false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for x in 0..self.g.n() {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = b;
                            if !self.even[x] {
                                self.even[x] = true;
                                queue.push_back(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Ok(Some(to));
                    }
                    let next = self.mate[to];
                    self.even[next] = true;
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

fn to_mate_array(g: &Graph, m: &Matching) -> Vec<usize> {
    m.mates(g).into_iter().map(|x| x.unwrap_or(NONE)).collect()
}

fn from_mate_array(g: &Graph, mate: &[usize]) -> Matching {
    let opt: Vec<Option<Vertex>> = mate.iter().map(|&x| (x != NONE).then_some(x)).collect();
    Matching::from_mates(g, &opt)
}

/// Edmonds' blossom algorithm, starting from a greedy matching.
pub fn blossom_max_matching(g: &Graph) -> Matching {
    let mut mate = vec![NONE; g.n()];
    for &(u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut f = Forest::new(g, mate);
    for v in 0..g.n() {
        if f.mate[v] == NONE {
            if let Ok(Some(end)) = f.grow(&[v]) {
                f.augment(end);
            }
        }
    }
    from_mate_array(g, &f.mate)
}

/// Hopcroft–Karp on a bipartite graph.
pub fn hopcroft_karp(g: &Graph, bip: &Bipartition) -> Matching {
    let left = bip.vertices_on(Side::U);
    let n = g.n();
    let mut mate = vec![NONE; n];
    let mut dist = vec![usize::MAX; n];
    loop {
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.neighbors(u) {
                match mate[w] {
                    NONE => found = true,
                    u2 if dist[u2] == usize::MAX => {
                        dist[u2] = dist[u] + 1;
                        queue.push_back(u2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        fn dfs(g: &Graph, u: usize, mate: &mut [usize], dist: &mut [usize]) -> bool {
            for i in 0..g.neighbors(u).len() {
                let w = g.neighbors(u)[i].0;
                let next = mate[w];
                if next == NONE || (dist[next] == dist[u] + 1 && dfs(g, next, mate, dist)) {
                    mate[u] = w;
                    mate[w] = u;
                    return true;
                }
            }
            dist[u] = usize::MAX;
            false
        }
        for &u in &left {
            if mate[u] == NONE {
                dfs(g, u, &mut mate, &mut dist);
            }
        }
    }
    from_mate_array(g, &mate)
}

pub fn max_matching(g: &Graph) -> Matching {
    match bipartition(g) {
        Some(b) => hopcroft_karp(g, &b),
        None => blossom_max_matching(g),
    }
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).len()
}

/// True iff no augmenting path exists for `m`.
pub fn is_maximum(g: &Graph, m: &Matching) -> bool {
    let mut f = Forest::new(g, to_mate_array(g, m));
    (0..g.n()).all(|v| f.mate[v] != NONE || matches!(f.grow(&[v]), Ok(None)))
}

/// Edges that belong to at least one maximum matching.
pub fn allowed_edges(g: &Graph) -> Vec<EdgeId> {
    match bipartition(g) {
        Some(bip) => allowed_edges_bipartite(g, &bip),
        None => allowed_edges_by_deletion(g),
    }
}

/// Definition-level check: `uv` is allowed iff `ν(G − u − v) = ν(G) − 1`.
pub fn allowed_edges_by_deletion(g: &Graph) -> Vec<EdgeId> {
    let nu = matching_number(g);
    (0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            let (h, _) = g.without_vertices(&[u, v]);
            matching_number(&h) + 1 == nu
        })
        .collect()
}

/// A non-matching edge is allowed iff it touches a vertex reachable from an
/// exposed vertex by an even alternating path, or lies on an alternating cycle
/// (both ends in one strong component of the matching-oriented digraph).
fn allowed_edges_bipartite(g: &Graph, bip: &Bipartition) -> Vec<EdgeId> {
    let m = hopcroft_karp(g, bip);
    let mate = to_mate_array(g, &m);
    let n = g.n();
    let mut even = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| mate[v] == NONE).collect();
    for &v in &queue {
        even[v] = true;
    }
    while let Some(y) = queue.pop_front() {
        for &(z, _) in g.neighbors(y) {
            let w = mate[z];
            if w != NONE && w != y && !even[w] {
                even[w] = true;
                queue.push_back(w);
            }
        }
    }
    // Arcs U -> W along non-matching edges, W -> U along matching edges.
    let out: Vec<Vec<usize>> = (0..n)
        .map(|v| match bip.side(v) {
            Side::U => g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| mate[v] != w).collect(),
            Side::W => if mate[v] == NONE { Vec::new() } else { vec![mate[v]] },
        })
        .collect();
    let comp = strong_components(&out);
    (0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            m.contains(e) || even[u] || even[v] || comp[u] == comp[v]
        })
        .collect()
}

/// Kosaraju's algorithm; returns a component id per node.
fn strong_components(out: &[Vec<usize>]) -> Vec<usize> {
    let n = out.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, i)) = stack.pop() {
            if i < out[v].len() {
                stack.push((v, i + 1));
                let w = out[v][i];
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
            }
        }
    }
    let mut rev = vec![Vec::new(); n];
    for v in 0..n {
        for &w in &out[v] {
            rev[w].push(v);
        }
    }
    let mut comp = vec![NONE; n];
    let mut next = 0;
    for &s in order.iter().rev() {
        if comp[s] != NONE {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &rev[v] {
                if comp[w] == NONE {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EgClass {
    D,
    A,
    C,
}

/// Edmonds–Gallai partition together with the maximum matching that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EgDecomposition {
    pub d: Vec<Vertex>,
    pub a: Vec<Vertex>,
    pub c: Vec<Vertex>,
    pub witness: Matching,
    pub nu: usize,
}

impl EgDecomposition {
    pub fn classes(&self, n: usize) -> Vec<EgClass> {
        let mut out = vec![EgClass::C; n];
        for &v in &self.d {
            out[v] = EgClass::D;
        }
        for &v in &self.a {
            out[v] = EgClass::A;
        }
        out
    }
}

pub fn edmonds_gallai(g: &Graph) -> EgDecomposition {
    let m = max_matching(g);
    edmonds_gallai_from(g, &m).expect("max_matching returns a maximum matching")
}

/// Partition obtained by growing one alternating forest from every vertex
/// exposed by the maximum matching `m`.
pub fn edmonds_gallai_from(g: &Graph, m: &Matching) -> Result<EgDecomposition, MatchingError> {
    let mut f = Forest::new(g, to_mate_array(g, m));
    let roots: Vec<usize> = (0..g.n()).filter(|&v| f.mate[v] == NONE).collect();
    let not_max = || MatchingError::NotMaximum { size: m.len(), nu: matching_number(g) };
    match f.grow(&roots) {
        Ok(None) => {}
        _ => return Err(not_max()),
    }
    let (mut d, mut a, mut c) = (Vec::new(), Vec::new(), Vec::new());
    for v in 0..g.n() {
        if f.even[v] {
            d.push(v);
        } else if f.parent[v] != NONE {
            a.push(v);
        } else {
            c.push(v);
        }
    }
    Ok(EgDecomposition { d, a, c, witness: m.clone(), nu: m.len() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PerfectMatchings {
    None,
    Unique,
    Multiple,
}

/// Counts perfect matchings up to "more than one": with a perfect matching
/// `M`, a second one exists iff `G - e` is perfectly matchable for some
/// `e ∈ M`.
pub fn perfect_matching_count(g: &Graph) -> PerfectMatchings {
    if g.n() % 2 == 1 {
        return PerfectMatchings::None;
    }
    let m = max_matching(g);
    if 2 * m.len() != g.n() {
        return PerfectMatchings::None;
    }
    for &e in m.edges() {
        let (h, _) = g.edge_subgraph(|f| f != e);
        if 2 * matching_number(&h) == g.n() {
            return PerfectMatchings::Multiple;
        }
    }
    PerfectMatchings::Unique
}

pub fn has_unique_perfect_matching(g: &Graph) -> bool {
    perfect_matching_count(g) == PerfectMatchings::Unique
}
