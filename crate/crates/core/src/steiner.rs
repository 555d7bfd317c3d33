//! Directed Steiner tree: the Dreyfus–Wagner subset dynamic program, the
//! recursive greedy approximation of Charikar et al. and an exhaustive
//! arc-subset search for cross-checking.
//!
//! Costs are any unsigned primitive integer type.

use num_traits::{PrimInt, Unsigned};
use serde::Serialize;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt::Debug;
use thiserror::Error;

pub trait Cost: PrimInt + Unsigned + Debug + Send + Sync {}
impl<T: PrimInt + Unsigned + Debug + Send + Sync> Cost for T {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc<C> {
    pub from: usize,
    pub to: usize,
    pub cost: C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerInstance<C> {
    pub nodes: usize,
    pub arcs: Vec<Arc<C>>,
    pub root: usize,
    pub terminals: Vec<usize>,
}

/// An out-arborescence given by sorted arc indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerTree<C> {
    pub arcs: Vec<usize>,
    pub cost: C,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinerError {
    #[error("terminal {0} is not reachable from the root")]
    Unreachable(usize),
    #[error("node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("{arcs} arcs exceed the exhaustive-search limit of {limit}")]
    TooLarge { arcs: usize, limit: usize },
    #[error("{0} terminals exceed the subset dynamic program's limit")]
    TooManyTerminals(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeDefect {
    #[error("arc index {0} out of range")]
    ArcOutOfRange(usize),
    #[error("node {0} has more than one incoming arc")]
    InDegree(usize),
    #[error("the root has an incoming arc")]
    RootEntered,
    #[error("arc {0} is not reachable from the root")]
    Detached(usize),
    #[error("terminal {0} is not covered")]
    MissingTerminal(usize),
    #[error("stated cost differs from the sum of arc costs")]
    CostMismatch,
}

impl<C: Cost> SteinerInstance<C> {
    fn check(&self) -> Result<(), SteinerError> {
        for &v in std::iter::once(&self.root).chain(&self.terminals) {
            if v >= self.nodes {
                return Err(SteinerError::NodeOutOfRange(v));
            }
        }
        for a in &self.arcs {
            for v in [a.from, a.to] {
                if v >= self.nodes {
                    return Err(SteinerError::NodeOutOfRange(v));
                }
            }
        }
        Ok(())
    }

    /// Distinct terminals other than the root, sorted.
    pub fn proper_terminals(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.terminals.iter().copied().filter(|&v| v != self.root).collect();
        t.sort_unstable();
        t.dedup();
        t
    }

    fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.from].push(i);
        }
        out
    }

    fn in_arcs(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.nodes];
        for (i, a) in self.arcs.iter().enumerate() {
            inc[a.to].push(i);
        }
        inc
    }

    fn cost_of(&self, arcs: &[usize]) -> C {
        arcs.iter().fold(C::zero(), |s, &i| s + self.arcs[i].cost)
    }

    fn require_reachable(&self) -> Result<(), SteinerError> {
        let reach = reachable(self, |_| true);
        match self.proper_terminals().into_iter().find(|&t| !reach[t]) {
            Some(t) => Err(SteinerError::Unreachable(t)),
            None => Ok(()),
        }
    }
}

fn reachable<C: Cost>(inst: &SteinerInstance<C>, mut allowed: impl FnMut(usize) -> bool) -> Vec<bool> {
    let out = inst.out_arcs();
    let mut seen = vec![false; inst.nodes];
    seen[inst.root] = true;
    let mut queue = VecDeque::from([inst.root]);
    while let Some(v) = queue.pop_front() {
        for &i in &out[v] {
            let w = inst.arcs[i].to;
            if allowed(i) && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Checks the arborescence invariants shared by every solver.
pub fn validate_tree<C: Cost>(inst: &SteinerInstance<C>, tree: &SteinerTree<C>) -> Result<(), TreeDefect> {
    let mut indeg = vec![0usize; inst.nodes];
    let mut member = vec![false; inst.arcs.len()];
    for &i in &tree.arcs {
        let a = inst.arcs.get(i).ok_or(TreeDefect::ArcOutOfRange(i))?;
        member[i] = true;
        indeg[a.to] += 1;
        if a.to == inst.root {
            return Err(TreeDefect::RootEntered);
        }
        if indeg[a.to] > 1 {
            return Err(TreeDefect::InDegree(a.to));
        }
    }
    let seen = reachable(inst, |i| member[i]);
    if let Some(&i) = tree.arcs.iter().find(|&&i| !seen[inst.arcs[i].from]) {
        return Err(TreeDefect::Detached(i));
    }
    if let Some(t) = inst.proper_terminals().into_iter().find(|&t| !seen[t]) {
        return Err(TreeDefect::MissingTerminal(t));
    }
    if inst.cost_of(&tree.arcs) != tree.cost {
        return Err(TreeDefect::CostMismatch);
    }
    Ok(())
}

/// Turns a feasible arc set into an arborescence: breadth-first parent arcs
/// from the root (lowest arc index first), then non-terminal leaves pruned.
fn arborescence<C: Cost>(inst: &SteinerInstance<C>, arcs: &[usize]) -> SteinerTree<C> {
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = vec![Vec::new(); inst.nodes];
    for &i in &sorted {
        out[inst.arcs[i].from].push(i);
    }
    let mut parent: Vec<Option<usize>> = vec![None; inst.nodes];
    let mut seen = vec![false; inst.nodes];
    seen[inst.root] = true;
    let mut queue = VecDeque::from([inst.root]);
    while let Some(v) = queue.pop_front() {
        for &i in &out[v] {
            let w = inst.arcs[i].to;
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(i);
                queue.push_back(w);
            }
        }
    }
    let mut keep = vec![false; inst.nodes];
    for t in inst.proper_terminals() {
        let mut v = t;
        while !keep[v] && v != inst.root {
            keep[v] = true;
            v = inst.arcs[parent[v].expect("feasible arc set")].from;
        }
    }
    let mut tree: Vec<usize> = (0..inst.nodes).filter(|&v| keep[v]).map(|v| parent[v].unwrap()).collect();
    tree.sort_unstable();
    let cost = inst.cost_of(&tree);
    SteinerTree { arcs: tree, cost }
}

/// Largest terminal count accepted by [`dreyfus_wagner`].
pub const MAX_DP_TERMINALS: usize = 20;

/// Exact minimum-cost arborescence by the `3^t` subset dynamic program.
///
/// `best[S][v]` is the cheapest tree rooted at `v` reaching the terminal
/// subset `S`. Subsets are merged at a common node, then pushed backwards
/// along arcs with Dijkstra.
pub fn dreyfus_wagner<C: Cost>(inst: &SteinerInstance<C>) -> Result<SteinerTree<C>, SteinerError> {
    inst.check()?;
    inst.require_reachable()?;
    let terms = inst.proper_terminals();
    let t = terms.len();
    if t == 0 {
        return Ok(SteinerTree { arcs: Vec::new(), cost: C::zero() });
    }
    if t > MAX_DP_TERMINALS {
        return Err(SteinerError::TooManyTerminals(t));
    }
    let n = inst.nodes;
    let inf = C::max_value();
    let full = (1usize << t) - 1;
    let mut best = vec![vec![inf; n]; full + 1];
    let mut via = vec![vec![None::<usize>; n]; full + 1];
    let mut split = vec![vec![0usize; n]; full + 1];
    let inc = inst.in_arcs();

    for s in 1..=full {
        if s.count_ones() == 1 {
            best[s][terms[s.trailing_zeros() as usize]] = C::zero();
        } else {
            for v in 0..n {
                let mut sub = (s - 1) & s;
                while sub > 0 {
                    if sub < s ^ sub {
                        let (a, b) = (best[sub][v], best[s ^ sub][v]);
                        if a != inf && b != inf && a + b < best[s][v] {
                            best[s][v] = a + b;
                            split[s][v] = sub;
                        }
                    }
                    sub = (sub - 1) & s;
                }
            }
        }
        let mut heap: BinaryHeap<Reverse<(C, usize)>> =
            (0..n).filter(|&v| best[s][v] != inf).map(|v| Reverse((best[s][v], v))).collect();
        let mut done = vec![false; n];
        while let Some(Reverse((d, w))) = heap.pop() {
            if done[w] {
                continue;
            }
            done[w] = true;
            for &i in &inc[w] {
                let a = &inst.arcs[i];
                let nd = d.saturating_add(a.cost);
                if nd < best[s][a.from] {
                    best[s][a.from] = nd;
                    via[s][a.from] = Some(i);
                    split[s][a.from] = 0;
                    heap.push(Reverse((nd, a.from)));
                }
            }
        }
    }

    let mut arcs = Vec::new();
    let mut stack = vec![(full, inst.root)];
    while let Some((s, v)) = stack.pop() {
        if let Some(i) = via[s][v] {
            arcs.push(i);
            stack.push((s, inst.arcs[i].to));
        } else if split[s][v] != 0 {
            stack.push((split[s][v], v));
            stack.push((s ^ split[s][v], v));
        }
    }
    let tree = arborescence(inst, &arcs);
    debug_assert!(tree.cost <= best[full][inst.root]);
    Ok(tree)
}

/// Largest arc count accepted by [`brute_force_steiner`].
pub const MAX_BRUTE_FORCE_ARCS: usize = 20;

/// Tries every arc subset; among the cheapest feasible subsets the one with
/// the lexicographically smallest sorted index list is reduced to a tree.
pub fn brute_force_steiner<C: Cost>(inst: &SteinerInstance<C>) -> Result<SteinerTree<C>, SteinerError> {
    inst.check()?;
    let m = inst.arcs.len();
    if m > MAX_BRUTE_FORCE_ARCS {
        return Err(SteinerError::TooLarge { arcs: m, limit: MAX_BRUTE_FORCE_ARCS });
    }
    inst.require_reachable()?;
    let terms = inst.proper_terminals();
    let mut best: Option<(C, Vec<usize>)> = None;
    for mask in 0u32..(1 << m) {
        let cost = (0..m).filter(|&i| mask >> i & 1 == 1).fold(C::zero(), |s, i| s + inst.arcs[i].cost);
        if best.as_ref().is_some_and(|(c, _)| cost > *c) {
            continue;
        }
        let seen = reachable(inst, |i| mask >> i & 1 == 1);
        if !terms.iter().all(|&t| seen[t]) {
            continue;
        }
        let set: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some((c, s)) => cost < *c || (cost == *c && set < *s),
        };
        if better {
            best = Some((cost, set));
        }
    }
    let (_, set) = best.expect("feasibility checked");
    Ok(arborescence(inst, &set))
}

struct Closure<C> {
    dist: Vec<Vec<C>>,
    next_arc: Vec<Vec<Option<usize>>>,
}

fn metric_closure<C: Cost>(inst: &SteinerInstance<C>) -> Closure<C> {
    let n = inst.nodes;
    let out = inst.out_arcs();
    let mut dist = vec![vec![C::max_value(); n]; n];
    let mut pred = vec![vec![None; n]; n];
    for s in 0..n {
        dist[s][s] = C::zero();
        let mut heap = BinaryHeap::from([Reverse((C::zero(), s))]);
        let mut done = vec![false; n];
        while let Some(Reverse((d, v))) = heap.pop() {
            if done[v] {
                continue;
            }
            done[v] = true;
            for &i in &out[v] {
                let w = inst.arcs[i].to;
                let nd = d + inst.arcs[i].cost;
                if nd < dist[s][w] {
                    dist[s][w] = nd;
                    pred[s][w] = Some(i);
                    heap.push(Reverse((nd, w)));
                }
            }
        }
    }
    Closure { dist, next_arc: pred }
}

impl<C: Cost> Closure<C> {
    fn path(&self, inst: &SteinerInstance<C>, from: usize, to: usize, out: &mut Vec<usize>) {
        let mut v = to;
        while v != from {
            let i = self.next_arc[from][v].expect("reachable");
            out.push(i);
            v = inst.arcs[i].from;
        }
    }
}

/// A partial solution of the recursive greedy: closure edges and the
/// terminals they reach.
struct Partial<C> {
    edges: Vec<(usize, usize)>,
    cost: C,
    covered: Vec<usize>,
}

fn as_wide<C: Cost>(c: C) -> u128 {
    c.to_u128().expect("costs fit in u128")
}

fn greedy_level<C: Cost>(cl: &Closure<C>, n: usize, level: usize, k: usize, root: usize, pool: &[usize]) -> Option<Partial<C>> {
    let inf = C::max_value();
    if level <= 1 {
        let mut near: Vec<(C, usize)> =
            pool.iter().filter(|&&x| cl.dist[root][x] != inf).map(|&x| (cl.dist[root][x], x)).collect();
        if near.len() < k {
            return None;
        }
        near.sort_unstable();
        near.truncate(k);
        let cost = near.iter().fold(C::zero(), |s, &(c, _)| s + c);
        return Some(Partial {
            edges: near.iter().map(|&(_, x)| (root, x)).collect(),
            cost,
            covered: near.iter().map(|&(_, x)| x).collect(),
        });
    }
    let mut left: Vec<usize> = pool.to_vec();
    let mut need = k;
    let mut acc = Partial { edges: Vec::new(), cost: C::zero(), covered: Vec::new() };
    while need > 0 {
        let mut pick: Option<Partial<C>> = None;
        for v in 0..n {
            if cl.dist[root][v] == inf {
                continue;
            }
            for kk in 1..=need {
                let Some(mut sub) = greedy_level(cl, n, level - 1, kk, v, &left) else { break };
                if v != root {
                    sub.edges.push((root, v));
                    sub.cost = sub.cost + cl.dist[root][v];
                }
                if v != root && left.contains(&v) && !sub.covered.contains(&v) {
                    sub.covered.push(v);
                }
                let denser = match &pick {
                    None => true,
                    Some(p) => {
                        as_wide(sub.cost) * (p.covered.len() as u128) < as_wide(p.cost) * (sub.covered.len() as u128)
                    }
                };
                if denser {
                    pick = Some(sub);
                }
            }
        }
        let p = pick?;
        need = need.saturating_sub(p.covered.len());
        left.retain(|x| !p.covered.contains(x));
        acc.cost = acc.cost + p.cost;
        acc.edges.extend(p.edges);
        acc.covered.extend(p.covered);
    }
    Some(acc)
}

/// Recursive greedy approximation. `level` 1 joins each terminal to the root
/// by a shortest path; each further level repeatedly adds the lowest-density
/// subtree built one level down.
pub fn recursive_greedy_approx<C: Cost>(inst: &SteinerInstance<C>, level: usize) -> Result<SteinerTree<C>, SteinerError> {
    inst.check()?;
    inst.require_reachable()?;
    let terms = inst.proper_terminals();
    if terms.is_empty() {
        return Ok(SteinerTree { arcs: Vec::new(), cost: C::zero() });
    }
    let cl = metric_closure(inst);
    let partial = greedy_level(&cl, inst.nodes, level.max(1), terms.len(), inst.root, &terms)
        .expect("all terminals reachable");
    let mut arcs = Vec::new();
    for &(a, b) in &partial.edges {
        cl.path(inst, a, b, &mut arcs);
    }
    Ok(arborescence(inst, &arcs))
}
