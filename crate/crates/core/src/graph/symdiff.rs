use super::{EdgeId, Graph, Matching, Vertex};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// How a path component's end edges split between the two matchings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PathKind {
    /// One end edge from each matching (even edge count).
    Even,
    /// Both end edges belong to the source matching.
    SourceHeavy,
    /// Both end edges belong to the target matching.
    TargetHeavy,
}

/// One component of `Ms Δ Mt`. For a path `edges[i]` joins `vertices[i]` and
/// `vertices[i + 1]`; for a cycle it joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Component {
    pub fn is_cycle(&self) -> bool {
        self.kind == ComponentKind::Cycle
    }

    pub fn path_kind(&self, source: &Matching) -> Option<PathKind> {
        if self.is_cycle() {
            return None;
        }
        if self.edges.len() % 2 == 0 {
            return Some(PathKind::Even);
        }
        if source.contains(self.edges[0]) {
            Some(PathKind::SourceHeavy)
        } else {
            Some(PathKind::TargetHeavy)
        }
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymDiffDecomposition {
    pub paths: Vec<Component>,
    pub cycles: Vec<Component>,
    /// Number of edges in the symmetric difference.
    pub d: usize,
}

impl SymDiffDecomposition {
    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.paths.iter().chain(self.cycles.iter())
    }

    pub fn has_odd_path(&self) -> bool {
        self.paths.iter().any(|p| p.edges.len() % 2 == 1)
    }

    /// Component index (paths first, then cycles) of every vertex, if any.
    pub fn component_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, c) in self.components().enumerate() {
            for &v in &c.vertices {
                out[v] = Some(i);
            }
        }
        out
    }
}

/// Splits `Ms Δ Mt` into alternating paths and cycles in canonical
/// orientation: a path starts at its smaller endpoint, a cycle at its smallest
/// vertex heading to the smaller of its two neighbours.
pub fn sym_diff_decompose(g: &Graph, ms: &Matching, mt: &Matching) -> SymDiffDecomposition {
    let diff = ms.symmetric_difference(mt);
    let n = g.n();
    let mut inc: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in &diff {
        let (u, v) = g.edge(e);
        inc[u].push(e);
        inc[v].push(e);
    }
    let mut used = vec![false; g.m()];
    let mut paths = Vec::new();
    let mut cycles = Vec::new();

    let walk = |start: Vertex, first: EdgeId, used: &mut Vec<bool>| -> (Vec<Vertex>, Vec<EdgeId>) {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let (mut v, mut e) = (start, first);
        loop {
            used[e] = true;
            edges.push(e);
            v = g.other(e, v);
            match inc[v].iter().copied().find(|&f| !used[f]) {
                Some(f) => {
                    vertices.push(v);
                    e = f;
                }
                None => {
                    if v != start {
                        vertices.push(v);
                    }
                    break;
                }
            }
        }
        (vertices, edges)
    };

    for v in 0..n {
        if inc[v].len() == 1 && !used[inc[v][0]] {
            let (vertices, edges) = walk(v, inc[v][0], &mut used);
            paths.push(Component { kind: ComponentKind::Path, vertices, edges });
        }
    }
    for v in 0..n {
        if inc[v].len() == 2 && !used[inc[v][0]] {
            let a = g.other(inc[v][0], v);
            let b = g.other(inc[v][1], v);
            let first = if a < b { inc[v][0] } else { inc[v][1] };
            let (vertices, edges) = walk(v, first, &mut used);
            cycles.push(Component { kind: ComponentKind::Cycle, vertices, edges });
        }
    }
    SymDiffDecomposition { paths, cycles, d: diff.len() }
}
