#![allow(dead_code)]

use matchdist::graph::{parse_instance, Graph, Instance, Matching};
use matchdist::matching::matching_number;
use matchdist::reconfig::{ConfigurationGraph, Distance, DEFAULT_STATE_BUDGET};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SMALL_EXAMPLE: &str = "\
p 7 7
e 1 2
e 2 3
e 3 4
e 1 4
e 1 5
e 5 6
e 6 7
s 1 2
s 3 4
s 6 7
t 1 4
t 2 3
t 5 6
";

pub fn small_example() -> Instance {
    parse_instance(SMALL_EXAMPLE).unwrap()
}

pub struct OraclePair {
    pub source: Matching,
    pub target: Matching,
    pub distance: Distance,
    pub source_index: usize,
    pub target_index: usize,
    pub k: usize,
}

/// Equal-size matching pairs of `g` with their exact distances: every pair
/// when there are at most `cap`, else a seeded sample of `cap`.
pub fn oracle_pairs(g: &Graph, cap: usize, seed: u64) -> (Vec<ConfigurationGraph>, Vec<OraclePair>) {
    let nu = matching_number(g);
    let graphs: Vec<ConfigurationGraph> = (0..=nu).map(|k| ConfigurationGraph::build(g, k, DEFAULT_STATE_BUDGET).unwrap()).collect();
    let mut all: Vec<(usize, usize, usize)> = Vec::new();
    for (k, cg) in graphs.iter().enumerate() {
        let c = cg.matchings.len();
        for s in 0..c {
            for t in 0..c {
                all.push((k, s, t));
            }
        }
    }
    if all.len() > cap {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        all.shuffle(&mut rng);
        all.truncate(cap);
        all.sort_unstable();
    }
    let mut out = Vec::with_capacity(all.len());
    let mut cached: Option<(usize, usize, Vec<usize>)> = None;
    for (k, s, t) in all {
        if cached.as_ref().is_none_or(|c| (c.0, c.1) != (k, s)) {
            cached = Some((k, s, graphs[k].bfs(s).0));
        }
        let d = cached.as_ref().unwrap().2[t];
        out.push(OraclePair {
            source: graphs[k].matchings[s].clone(),
            target: graphs[k].matchings[t].clone(),
            distance: if d == usize::MAX { Distance::Infinite } else { Distance::Finite(d) },
            source_index: s,
            target_index: t,
            k,
        });
    }
    (graphs, out)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    use rand::Rng;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A uniformly shuffled greedy matching stopped at size `k`, if it gets there.
pub fn random_matching(rng: &mut ChaCha8Rng, g: &Graph, k: usize) -> Option<Matching> {
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(rng);
    let mut used = vec![false; g.n()];
    let mut chosen = Vec::new();
    for e in order {
        if chosen.len() == k {
            break;
        }
        let (u, v) = g.edge(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            chosen.push(e);
        }
    }
    (chosen.len() == k).then(|| Matching::new(g, chosen).unwrap())
}

/// Seeded instances on at most `max_n` vertices with two equal-size
/// matchings, at least one of which is not inclusion-wise maximal.
pub fn nonmaximal_instances(count: usize, max_n: usize, seed: u64) -> Vec<(Graph, Matching, Matching)> {
    use matchdist::graph::is_maximal;
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.2..0.7);
        let g = random_graph(&mut rng, n, p);
        let nu = matching_number(&g);
        if nu == 0 {
            continue;
        }
        let k = rng.gen_range(1..=nu);
        let (Some(a), Some(b)) = (random_matching(&mut rng, &g, k), random_matching(&mut rng, &g, k)) else { continue };
        if is_maximal(&g, &a) && is_maximal(&g, &b) {
            continue;
        }
        out.push((g, a, b));
    }
    out
}

/// Random rooted digraph with at most `max_nodes` nodes, `max_arcs` distinct
/// arcs, `max_terminals` terminals and costs in `0..=max_cost`.
pub fn random_steiner(
    rng: &mut ChaCha8Rng,
    max_nodes: usize,
    max_arcs: usize,
    max_terminals: usize,
    max_cost: u32,
) -> matchdist::SteinerInstance {
    use matchdist::steiner::Arc;
    use rand::Rng;
    let nodes = rng.gen_range(2..=max_nodes);
    let mut pairs: Vec<(usize, usize)> = (0..nodes).flat_map(|a| (0..nodes).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_arcs.min(pairs.len()));
    let arcs = pairs[..m].iter().map(|&(from, to)| Arc { from, to, cost: rng.gen_range(0..=max_cost) }).collect();
    let root = rng.gen_range(0..nodes);
    let t = rng.gen_range(1..=max_terminals.min(nodes - 1));
    let mut others: Vec<usize> = (0..nodes).filter(|&v| v != root).collect();
    others.shuffle(rng);
    matchdist::SteinerInstance { nodes, arcs, root, terminals: others[..t].to_vec() }
}
