use super::{EdgeId, Graph, GraphError, Vertex};
use serde::Serialize;

/// A set of pairwise vertex-disjoint edges, stored as sorted edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self, GraphError> {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut owner = vec![usize::MAX; g.n()];
        for (i, &e) in edges.iter().enumerate() {
            if e >= g.m() {
                return Err(GraphError::EdgeOutOfRange(e));
            }
            if i > 0 && edges[i - 1] == e {
                return Err(GraphError::NotDisjoint(e, e));
            }
            let (u, v) = g.edge(e);
            for x in [u, v] {
                if owner[x] != usize::MAX {
                    return Err(GraphError::NotDisjoint(owner[x], e));
                }
                owner[x] = e;
            }
        }
        Ok(Matching { edges })
    }

    /// Builds a matching from a mate array (`mate[v]` is `v`'s partner).
    pub fn from_mates(g: &Graph, mate: &[Option<Vertex>]) -> Self {
        let mut edges = Vec::new();
        for (v, m) in mate.iter().enumerate() {
            if let Some(w) = *m {
                if v < w {
                    edges.push(g.edge_between(v, w).expect("mate pairs are edges"));
                }
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    /// Caller guarantees `edges` is sorted and forms a matching.
    pub(crate) fn from_sorted_unchecked(edges: Vec<EdgeId>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn mates(&self, g: &Graph) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; g.n()];
        for &e in &self.edges {
            let (u, v) = g.edge(e);
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// For every vertex, the matching edge covering it.
    pub fn cover(&self, g: &Graph) -> Vec<Option<EdgeId>> {
        let mut cov = vec![None; g.n()];
        for &e in &self.edges {
            let (u, v) = g.edge(e);
            cov[u] = Some(e);
            cov[v] = Some(e);
        }
        cov
    }

    pub fn exposed(&self, g: &Graph) -> Vec<Vertex> {
        let cov = self.cover(g);
        (0..g.n()).filter(|&v| cov[v].is_none()).collect()
    }

    /// `self - remove + add`, without validation.
    pub fn exchanged(&self, remove: EdgeId, add: EdgeId) -> Matching {
        let mut edges: Vec<EdgeId> = self.edges.iter().copied().filter(|&e| e != remove).collect();
        let pos = edges.binary_search(&add).unwrap_or_else(|p| p);
        edges.insert(pos, add);
        Matching { edges }
    }

    /// Edges in exactly one of the two matchings, sorted.
    pub fn symmetric_difference(&self, other: &Matching) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let (a, b) = (&self.edges, &other.edges);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j]);
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        out
    }

    pub fn difference(&self, other: &Matching) -> Vec<EdgeId> {
        self.edges.iter().copied().filter(|&e| !other.contains(e)).collect()
    }

    /// Re-expresses the matching through an edge-id map (`map[new] = old`).
    pub fn map_edges(&self, map: &[EdgeId]) -> Matching {
        let mut edges: Vec<EdgeId> = self.edges.iter().map(|&e| map[e]).collect();
        edges.sort_unstable();
        Matching { edges }
    }

    /// Inverse of [`Matching::map_edges`]; `None` if some edge has no preimage.
    pub fn restrict_to(&self, map: &[EdgeId]) -> Option<Matching> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            edges.push(map.binary_search(&e).ok()?);
        }
        edges.sort_unstable();
        Some(Matching { edges })
    }

    /// 1-based vertex pairs, for display.
    pub fn pairs(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().map(|&e| {
            let (u, v) = g.edge(e);
            (u + 1, v + 1)
        }).collect()
    }
}

/// True iff no edge of `g` has both endpoints exposed by `m`.
pub fn is_maximal(g: &Graph, m: &Matching) -> bool {
    let cov = m.cover(g);
    g.edges().iter().all(|&(u, v)| cov[u].is_some() || cov[v].is_some())
}
