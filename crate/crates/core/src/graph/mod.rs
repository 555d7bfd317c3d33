//! Simple undirected graphs, matchings and the symmetric-difference
//! decomposition shared by the rest of the crate.
//!
//! Vertices are `0..n` internally. The text format in [`format`] is 1-based.

mod format;
mod matching;
mod symdiff;

pub use format::{parse_instance, write_graph, write_instance, Instance, ParseError};
pub use matching::{is_maximal, Matching};
pub use symdiff::{sym_diff_decompose, Component, ComponentKind, PathKind, SymDiffDecomposition};

use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("edges {0} and {1} share a vertex")]
    NotDisjoint(EdgeId, EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Each edge is normalised to `u < v` and
    /// keeps its position as its index.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut g = Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] };
        for (a, b) in edges {
            g.push_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn push_edge(&mut self, a: Vertex, b: Vertex) -> Result<EdgeId, GraphError> {
        for v in [a, b] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if self.edge_between(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| e)
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Keeps the vertex set and the edges selected by `keep`. Returns the new
    /// graph together with the map from new edge ids to old ones.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> (Graph, Vec<EdgeId>) {
        let mut g = Graph::empty(self.n);
        let mut map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep(e) {
                g.edges.push((u, v));
                let id = g.edges.len() - 1;
                g.adj[u].push((v, id));
                g.adj[v].push((u, id));
                map.push(e);
            }
        }
        (g, map)
    }

    /// Deletes every edge incident to a vertex in `removed` (vertex ids stay).
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<EdgeId>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        self.edge_subgraph(|e| {
            let (u, v) = self.edges[e];
            !gone[u] && !gone[v]
        })
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.push_edge(index[u], index[v]).expect("induced edges are simple");
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    U,
    W,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::U => Side::W,
            Side::W => Side::U,
        }
    }
}

/// A proper 2-colouring. Each component's smallest vertex is on side `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn vertices_on(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    /// Swaps the sides of every connected component of `g` selected by `pick`.
    pub fn flip_components(&self, g: &Graph, mut pick: impl FnMut(&[Vertex]) -> bool) -> Bipartition {
        let mut side = self.side.clone();
        for comp in g.components() {
            if pick(&comp) {
                for v in comp {
                    side[v] = side[v].flip();
                }
            }
        }
        Bipartition { side }
    }

    /// Endpoint of `e` on side `U`, then endpoint on side `W`.
    pub fn orient(&self, g: &Graph, e: EdgeId) -> (Vertex, Vertex) {
        let (a, b) = g.edge(e);
        if self.side[a] == Side::U {
            (a, b)
        } else {
            (b, a)
        }
    }
}

pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<Side>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::U);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &(w, _) in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(sv.flip());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition { side: side.into_iter().map(Option::unwrap).collect() })
}
