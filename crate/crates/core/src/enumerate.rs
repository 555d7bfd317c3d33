//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Canonical forms come from colour refinement plus individualisation, which
//! is exact (every leaf of the search is a labelling consistent with an
//! isomorphism-invariant ordered partition). Limited to 11 vertices so that an
//! adjacency matrix fits in a `u64`.

use crate::graph::{bipartition, Graph};
use std::collections::HashSet;

pub const MAX_VERTICES: usize = 11;

fn pair_bit(a: usize, b: usize) -> u32 {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    (j * (j - 1) / 2 + i) as u32
}

fn refine(adj: &[u16], colors: &mut Vec<usize>) {
    let n = adj.len();
    let mut count = colors.iter().copied().max().map_or(0, |c| c + 1);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut hist = vec![0; count];
                for w in 0..n {
                    if adj[v] >> w & 1 == 1 {
                        hist[colors[w]] += 1;
                    }
                }
                (colors[v], hist, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        let new_count = if n == 0 { 0 } else { rank + 1 };
        *colors = next;
        if new_count == count {
            return;
        }
        count = new_count;
    }
}

fn search(adj: &[u16], colors: Vec<usize>, best: &mut Option<u64>) {
    let n = adj.len();
    let mut colors = colors;
    refine(adj, &mut colors);
    let mut size = vec![0; n];
    for &c in &colors {
        size[c] += 1;
    }
    match (0..n).find(|&c| size[c] > 1) {
        None => {
            let mut code = 0u64;
            for v in 0..n {
                for w in v + 1..n {
                    if adj[v] >> w & 1 == 1 {
                        code |= 1 << pair_bit(colors[v], colors[w]);
                    }
                }
            }
            if best.is_none_or(|b| code < b) {
                *best = Some(code);
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colors[v] == cell) {
                let split: Vec<usize> = (0..n)
                    .map(|x| 2 * colors[x] + usize::from(colors[x] == cell && x != v))
                    .collect();
                search(adj, split, best);
            }
        }
    }
}

/// Canonical adjacency code: isomorphic graphs (same order) get equal codes.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_VERTICES, "canonical forms support at most {MAX_VERTICES} vertices");
    let adj = masks(g);
    let mut best = None;
    search(&adj, vec![0; g.n()], &mut best);
    best.unwrap_or(0)
}

fn masks(g: &Graph) -> Vec<u16> {
    let mut adj = vec![0u16; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("codes describe simple graphs")
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// each given by its canonical labelling, sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_VERTICES);
    let mut level: Vec<u64> = vec![0];
    for k in 1..=n {
        let mut seen = HashSet::new();
        for &code in &level {
            let base = from_code(k - 1, code);
            for nbrs in 0u32..(1 << (k - 1)) {
                let mut g = Graph::empty(k);
                for &(u, v) in base.edges() {
                    g.push_edge(u, v).unwrap();
                }
                for w in (0..k - 1).filter(|w| nbrs >> w & 1 == 1) {
                    g.push_edge(w, k - 1).unwrap();
                }
                seen.insert(canonical_code(&g));
            }
        }
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|c| from_code(n, c)).collect()
}

/// All graphs with `1..=max_n` vertices, grouped by order.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected() && bipartition(g).is_some()).collect()
}
