//! Instance generators built from Set Cover and Vertex Cover instances, with
//! the conversions between covers and reconfiguration sequences.
//!
//! Set Cover gadget: per item `u` a 4-cycle `C_u` and a path `P_u` on `2 f_u`
//! vertices hanging off `c_u^1`; per set `S` a path `P_S` on `2|S|` vertices
//! followed by a long odd path `Q_S`. Even-indexed vertices of `P_u` and
//! odd-indexed vertices of `P_S` are joined by a matching that encodes
//! membership. The two matchings agree everywhere except on the 4-cycles,
//! and each `q_S^L` stays exposed.
//!
//! Vertex Cover gadget: per edge `e` a 4-cycle `C_e`, per vertex `v` a path
//! `p_v^1 p_v^2 t`, `c_e^1` joined to `p_v^1` for both ends of `e`, and a tail
//! `t q_1 … q_6`. Both matchings leave only `t` exposed.

use crate::graph::{bipartition, is_maximal, sym_diff_decompose, EdgeId, Graph, Matching, Vertex};
use crate::matching::is_maximum;
use crate::reconfig::{validate_sequence, Exchange, InvalidStep, ReconfigSequence};
use serde::Serialize;
use thiserror::Error;

/// Universe `0..items`, family of item sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetCoverInstance {
    pub items: usize,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("the family is empty")]
    EmptyFamily,
    #[error("the universe is empty")]
    EmptyUniverse,
    #[error("set {0} is empty")]
    EmptySet(usize),
    #[error("set {set} names item {item} outside the universe")]
    ItemOutOfRange { set: usize, item: usize },
    #[error("set {set} lists item {item} twice")]
    RepeatedItem { set: usize, item: usize },
    #[error("item {0} is in no set")]
    Uncovered(usize),
    #[error("the graph has no edges")]
    NoEdges,
    #[error("set index {0} out of range")]
    SetOutOfRange(usize),
    #[error("the chosen sets miss item {0}")]
    NotACover(usize),
    #[error("operation needs a set cover gadget")]
    WrongKind,
    #[error("{0} vertices are too many for the exhaustive vertex cover search")]
    TooLarge(usize),
    #[error("sequence is invalid: {0}")]
    InvalidSequence(#[from] InvalidStep),
    #[error("gadget check failed: {0}")]
    Defect(String),
}

impl SetCoverInstance {
    pub fn new(items: usize, sets: Vec<Vec<usize>>) -> Result<Self, GadgetError> {
        if items == 0 {
            return Err(GadgetError::EmptyUniverse);
        }
        if sets.is_empty() {
            return Err(GadgetError::EmptyFamily);
        }
        let mut seen = vec![false; items];
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(GadgetError::EmptySet(i));
            }
            let mut inner = vec![false; items];
            for &u in s {
                if u >= items {
                    return Err(GadgetError::ItemOutOfRange { set: i, item: u });
                }
                if inner[u] {
                    return Err(GadgetError::RepeatedItem { set: i, item: u });
                }
                inner[u] = true;
                seen[u] = true;
            }
        }
        if let Some(u) = seen.iter().position(|&b| !b) {
            return Err(GadgetError::Uncovered(u));
        }
        Ok(SetCoverInstance { items, sets })
    }

    /// Number of sets containing `u`.
    pub fn frequency(&self, u: usize) -> usize {
        self.sets.iter().filter(|s| s.contains(&u)).count()
    }

    /// Largest item frequency.
    pub fn f(&self) -> usize {
        (0..self.items).map(|u| self.frequency(u)).max().unwrap_or(0)
    }

    /// Largest set size.
    pub fn d(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// First item not covered by the chosen sets.
    pub fn uncovered_by(&self, chosen: &[usize]) -> Result<Option<usize>, GadgetError> {
        let mut hit = vec![false; self.items];
        for &i in chosen {
            for &u in self.sets.get(i).ok_or(GadgetError::SetOutOfRange(i))? {
                hit[u] = true;
            }
        }
        Ok(hit.iter().position(|&b| !b))
    }

    /// Minimum cover size by exhaustive search.
    pub fn optimum(&self) -> usize {
        let m = self.sets.len();
        assert!(m <= 24, "exhaustive search limited to 24 sets");
        (0u32..1 << m)
            .filter(|mask| {
                let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
                self.uncovered_by(&chosen).unwrap().is_none()
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// Length of each `Q_S`: `|U| (2 + f + d)`, rounded up to odd.
    pub fn tail_length(&self) -> usize {
        round_up_odd(self.items * (2 + self.f() + self.d()))
    }
}

fn round_up_odd(x: usize) -> usize {
    x | 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetCoverRoles {
    pub cover: SetCoverInstance,
    /// `c_u^1 … c_u^4` per item.
    pub cycles: Vec<[Vertex; 4]>,
    pub item_paths: Vec<Vec<Vertex>>,
    pub set_paths: Vec<Vec<Vertex>>,
    pub set_tails: Vec<Vec<Vertex>>,
    /// Appended path `r_1 … r_L'` (empty for the maximum variant).
    pub long_path: Vec<Vertex>,
    /// `(item terminal, set terminal)` for each membership.
    pub links: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCoverRoles {
    pub t: Vertex,
    pub tail: [Vertex; 6],
    /// `c_e^1 … c_e^4` per edge of `H`.
    pub cycles: Vec<[Vertex; 4]>,
    /// `p_v^1, p_v^2` per vertex of `H`.
    pub vertex_paths: Vec<[Vertex; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Roles {
    SetCover(SetCoverRoles),
    VertexCover(VertexCoverRoles),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetParams {
    pub l: Option<usize>,
    pub l_prime: Option<usize>,
    pub d: Option<usize>,
    pub f: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetInstance {
    #[serde(skip)]
    pub graph: Graph,
    #[serde(skip)]
    pub first: Matching,
    #[serde(skip)]
    pub second: Matching,
    /// Human-readable name of every vertex.
    pub labels: Vec<String>,
    pub roles: Roles,
    pub params: GadgetParams,
}

/// Companion record of a generated instance: vertex names (1-based ids) and
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Annotation<'a> {
    pub vertices: usize,
    pub edges: usize,
    pub labels: Vec<(usize, &'a str)>,
    pub params: &'a GadgetParams,
    pub roles: &'a Roles,
}

impl GadgetInstance {
    pub fn annotation(&self) -> Annotation<'_> {
        Annotation {
            vertices: self.graph.n(),
            edges: self.graph.m(),
            labels: self.labels.iter().enumerate().map(|(i, s)| (i + 1, s.as_str())).collect(),
            params: &self.params,
            roles: &self.roles,
        }
    }

    fn set_cover_roles(&self) -> Result<&SetCoverRoles, GadgetError> {
        match &self.roles {
            Roles::SetCover(r) => Ok(r),
            Roles::VertexCover(_) => Err(GadgetError::WrongKind),
        }
    }
}

struct Builder {
    edges: Vec<(Vertex, Vertex)>,
    labels: Vec<String>,
    first: Vec<(Vertex, Vertex)>,
    second: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new() -> Self {
        Builder { edges: Vec::new(), labels: Vec::new(), first: Vec::new(), second: Vec::new() }
    }

    fn vertex(&mut self, label: String) -> Vertex {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn path(&mut self, len: usize, label: impl Fn(usize) -> String) -> Vec<Vertex> {
        let vs: Vec<Vertex> = (1..=len).map(|i| self.vertex(label(i))).collect();
        for w in vs.windows(2) {
            self.edges.push((w[0], w[1]));
        }
        vs
    }

    /// Matches `vs[0]vs[1], vs[2]vs[3], …` in both matchings.
    fn match_pairs(&mut self, vs: &[Vertex]) {
        for pair in vs.chunks_exact(2) {
            self.first.push((pair[0], pair[1]));
            self.second.push((pair[0], pair[1]));
        }
    }

    fn square(&mut self, name: &str) -> [Vertex; 4] {
        let c = [1, 2, 3, 4].map(|i| self.vertex(format!("c_{name}^{i}")));
        self.edges.extend([(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]);
        self.first.extend([(c[0], c[1]), (c[2], c[3])]);
        self.second.extend([(c[1], c[2]), (c[0], c[3])]);
        c
    }

    fn finish(self) -> (Graph, Matching, Matching, Vec<String>) {
        let g = Graph::new(self.labels.len(), self.edges).expect("gadget edges are simple");
        let ids = |pairs: &[(Vertex, Vertex)]| -> Vec<EdgeId> { pairs.iter().map(|&(a, b)| g.edge_between(a, b).unwrap()).collect() };
        let first = Matching::new(&g, ids(&self.first)).expect("first gadget matching");
        let second = Matching::new(&g, ids(&self.second)).expect("second gadget matching");
        (g, first, second, self.labels)
    }
}

/// Set Cover gadget whose two matchings are maximum.
pub fn gen_setcover(inst: &SetCoverInstance) -> Result<GadgetInstance, GadgetError> {
    build_setcover(inst, false)
}

/// Variant with an appended long path `R` so that both matchings are maximal
/// but not maximum, while every non-maximal matching stays far away.
pub fn gen_setcover_nonmaximum(inst: &SetCoverInstance) -> Result<GadgetInstance, GadgetError> {
    build_setcover(inst, true)
}

fn build_setcover(inst: &SetCoverInstance, with_long_path: bool) -> Result<GadgetInstance, GadgetError> {
    let inst = SetCoverInstance::new(inst.items, inst.sets.clone())?;
    let (d, f) = (inst.d(), inst.f());
    let l = inst.tail_length();
    let mut b = Builder::new();
    let mut cycles = Vec::new();
    let mut item_paths = Vec::new();
    for u in 0..inst.items {
        let c = b.square(&(u + 1).to_string());
        let p = b.path(2 * inst.frequency(u), |i| format!("p_{}^{i}", u + 1));
        b.edges.push((c[0], p[0]));
        b.match_pairs(&p);
        cycles.push(c);
        item_paths.push(p);
    }
    let mut set_paths = Vec::new();
    let mut set_tails = Vec::new();
    for (j, s) in inst.sets.iter().enumerate() {
        let p = b.path(2 * s.len(), |i| format!("p_S{}^{i}", j + 1));
        let q = b.path(l, |i| format!("q_S{}^{i}", j + 1));
        b.edges.push((*p.last().unwrap(), q[0]));
        b.match_pairs(&p);
        b.match_pairs(&q);
        set_paths.push(p);
        set_tails.push(q);
    }
    // The k-th set containing u takes u's k-th terminal p_u^{2k}; u as the
    // k'-th smallest member of S takes S's terminal p_S^{2k'-1}.
    let mut links = Vec::new();
    let mut used = vec![0usize; inst.items];
    for (j, s) in inst.sets.iter().enumerate() {
        let mut members = s.clone();
        members.sort_unstable();
        for (k, &u) in members.iter().enumerate() {
            let a = item_paths[u][2 * used[u] + 1];
            let t = set_paths[j][2 * k];
            used[u] += 1;
            b.edges.push((a, t));
            links.push((a, t));
        }
    }
    let mut long_path = Vec::new();
    let mut l_prime = None;
    if with_long_path {
        let lp = round_up_odd(3 * inst.items + (l + d + f) * inst.sets.len());
        long_path = b.path(lp, |i| format!("r_{i}"));
        for q in &set_tails {
            b.edges.push((q[0], long_path[0]));
        }
        b.match_pairs(&long_path);
        l_prime = Some(lp);
    }
    let (graph, first, second, labels) = b.finish();
    let roles = SetCoverRoles { cover: inst, cycles, item_paths, set_paths, set_tails, long_path, links };
    let gadget = GadgetInstance {
        graph,
        first,
        second,
        labels,
        roles: Roles::SetCover(roles),
        params: GadgetParams { l: Some(l), l_prime, d: Some(d), f: Some(f) },
    };
    check_gadget(&gadget)?;
    Ok(gadget)
}

/// Vertex Cover gadget for `h`; isolated vertices of `h` still get a path.
pub fn gen_vc(h: &Graph) -> Result<GadgetInstance, GadgetError> {
    if h.m() == 0 {
        return Err(GadgetError::NoEdges);
    }
    let mut b = Builder::new();
    let t = b.vertex("t".into());
    let cycles: Vec<[Vertex; 4]> = (0..h.m()).map(|e| b.square(&format!("e{}", e + 1))).collect();
    let mut vertex_paths = Vec::new();
    for v in 0..h.n() {
        let p1 = b.vertex(format!("p_{}^1", v + 1));
        let p2 = b.vertex(format!("p_{}^2", v + 1));
        b.edges.extend([(p1, p2), (p2, t)]);
        b.match_pairs(&[p1, p2]);
        vertex_paths.push([p1, p2]);
    }
    for (e, &(x, y)) in h.edges().iter().enumerate() {
        b.edges.push((cycles[e][0], vertex_paths[x][0]));
        b.edges.push((cycles[e][0], vertex_paths[y][0]));
    }
    let tail: Vec<Vertex> = (1..=6).map(|i| b.vertex(format!("q_{i}"))).collect();
    b.edges.push((t, tail[0]));
    for w in tail.windows(2) {
        b.edges.push((w[0], w[1]));
    }
    b.match_pairs(&tail);
    let (graph, first, second, labels) = b.finish();
    let roles = VertexCoverRoles { t, tail: tail.try_into().unwrap(), cycles, vertex_paths };
    let gadget = GadgetInstance {
        graph,
        first,
        second,
        labels,
        roles: Roles::VertexCover(roles),
        params: GadgetParams { l: None, l_prime: None, d: None, f: None },
    };
    check_gadget(&gadget)?;
    Ok(gadget)
}

/// Structural checks shared by every generator: bipartite; matchings
/// maximum (maximal but not maximum with the long path); the difference is
/// exactly the 4-cycles; degree at most three for the Set Cover gadget; only
/// `t` exposed in the Vertex Cover gadget.
pub fn check_gadget(gad: &GadgetInstance) -> Result<(), GadgetError> {
    let g = &gad.graph;
    let fail = |s: &str| Err(GadgetError::Defect(s.to_string()));
    if bipartition(g).is_none() {
        return fail("not bipartite");
    }
    if gad.first.len() != gad.second.len() {
        return fail("matchings differ in size");
    }
    let (cycles, nonmax) = match &gad.roles {
        Roles::SetCover(r) => {
            if r.long_path.is_empty() && (0..g.n()).any(|v| g.degree(v) > 3) {
                return fail("degree above three");
            }
            (&r.cycles, !r.long_path.is_empty())
        }
        Roles::VertexCover(r) => {
            if gad.first.exposed(g) != vec![r.t] || gad.second.exposed(g) != vec![r.t] {
                return fail("t is not the only exposed vertex");
            }
            (&r.cycles, false)
        }
    };
    for m in [&gad.first, &gad.second] {
        let ok = if nonmax { is_maximal(g, m) && !is_maximum(g, m) } else { is_maximum(g, m) };
        if !ok {
            return fail(if nonmax { "matching is not maximal-but-not-maximum" } else { "matching is not maximum" });
        }
    }
    let dec = sym_diff_decompose(g, &gad.first, &gad.second);
    let mut found: Vec<Vec<Vertex>> = dec.cycles.iter().map(|c| sorted(&c.vertices)).collect();
    let mut want: Vec<Vec<Vertex>> = cycles.iter().map(|c| sorted(c)).collect();
    found.sort();
    want.sort();
    if !dec.paths.is_empty() || found != want {
        return fail("symmetric difference is not exactly the 4-cycles");
    }
    Ok(())
}

fn sorted(v: &[Vertex]) -> Vec<Vertex> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Upper bound on the sequence built from a cover of the given size:
/// `2 L |C| + 2 |U| (2 + f + d)`.
pub fn cover_length_bound(gad: &GadgetInstance, cover_size: usize) -> Result<usize, GadgetError> {
    let r = gad.set_cover_roles()?;
    let l = gad.params.l.unwrap();
    Ok(2 * l * cover_size + 2 * r.cover.items * (2 + r.cover.f() + r.cover.d()))
}

/// Builds a sequence from `first` to `second` out of a set cover. For each
/// chosen set in order: open `Q_S` by sliding its matching towards `q_S^L`;
/// for each item first covered by `S`, slide the alternating path from
/// `p_u^1` through the membership link to `q_S^1`, rotate `C_u` in three
/// exchanges, slide the path back; finally close `Q_S` again.
pub fn cover_to_sequence(gad: &GadgetInstance, cover: &[usize]) -> Result<ReconfigSequence, GadgetError> {
    let r = gad.set_cover_roles()?;
    if let Some(u) = r.cover.uncovered_by(cover)? {
        return Err(GadgetError::NotACover(u));
    }
    let g = &gad.graph;
    let edge = |a: Vertex, b: Vertex| g.edge_between(a, b).expect("gadget edge");
    let mut steps = Vec::new();
    let mut done = vec![false; r.cover.items];
    for &s in cover {
        let q = &r.set_tails[s];
        // Q_S: q^1 q^2, q^3 q^4, … slide right so that q^1 becomes exposed.
        let open: Vec<Exchange> = (0..q.len() / 2)
            .rev()
            .map(|i| Exchange::new(edge(q[2 * i], q[2 * i + 1]), edge(q[2 * i + 1], q[2 * i + 2])))
            .collect();
        steps.extend(open.iter().copied());
        let mut members = r.cover.sets[s].clone();
        members.sort_unstable();
        for u in members {
            if done[u] {
                continue;
            }
            done[u] = true;
            let link = r
                .links
                .iter()
                .find(|&&(a, t)| r.item_paths[u].contains(&a) && r.set_paths[s].contains(&t))
                .copied()
                .expect("membership link");
            // Alternating path p_u^1 … p_u^j, p_S^j' … p_S^last, q_S^1.
            let mut path: Vec<Vertex> = r.item_paths[u].iter().copied().take_while(|&v| v != link.0).collect();
            path.push(link.0);
            path.extend(r.set_paths[s].iter().copied().skip_while(|&v| v != link.1));
            path.push(q[0]);
            // Slide the matched edges towards q_S^1, last one first.
            let slide: Vec<Exchange> = (0..path.len() / 2)
                .rev()
                .map(|i| Exchange::new(edge(path[2 * i], path[2 * i + 1]), edge(path[2 * i + 1], path[2 * i + 2])))
                .collect();
            steps.extend(slide.iter().copied());
            let c = r.cycles[u];
            let p1 = r.item_paths[u][0];
            steps.push(Exchange::new(edge(c[0], c[1]), edge(c[0], p1)));
            steps.push(Exchange::new(edge(c[2], c[3]), edge(c[1], c[2])));
            steps.push(Exchange::new(edge(c[0], p1), edge(c[0], c[3])));
            steps.extend(slide.iter().rev().map(|x| x.reversed()));
        }
        steps.extend(open.iter().rev().map(|x| x.reversed()));
    }
    let seq = ReconfigSequence { start: gad.first.clone(), steps };
    validate_sequence(g, &gad.first, &gad.second, &seq)?;
    Ok(seq)
}

/// Sets whose `q_S^L` is covered by some matching of the sequence.
pub fn sequence_to_cover(gad: &GadgetInstance, seq: &ReconfigSequence) -> Result<Vec<usize>, GadgetError> {
    let r = gad.set_cover_roles()?;
    validate_sequence(&gad.graph, &gad.first, &gad.second, seq)?;
    let mut active = vec![false; r.set_tails.len()];
    for m in seq.matchings() {
        let cover = m.cover(&gad.graph);
        for (s, q) in r.set_tails.iter().enumerate() {
            if cover[*q.last().unwrap()].is_some() {
                active[s] = true;
            }
        }
    }
    Ok((0..active.len()).filter(|&s| active[s]).collect())
}

/// Largest graph accepted by [`min_vertex_cover`].
pub const MAX_COVER_VERTICES: usize = 24;

/// Minimum vertex cover size by exhaustive search.
pub fn min_vertex_cover(h: &Graph) -> Result<usize, GadgetError> {
    if h.n() > MAX_COVER_VERTICES {
        return Err(GadgetError::TooLarge(h.n()));
    }
    let best = (0u32..1 << h.n())
        .filter(|mask| h.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0);
    Ok(best)
}

/// Distance between the two matchings of `gen_vc(h)`: `3|E(H)| + 2τ(H)`.
pub fn expected_vc_distance(h: &Graph) -> Result<usize, GadgetError> {
    Ok(3 * h.m() + 2 * min_vertex_cover(h)?)
}

/// Diameter of the configuration graph of `gen_vc(h)` at its matching
/// number: the distance plus 6.
pub fn expected_vc_diameter(h: &Graph) -> Result<usize, GadgetError> {
    Ok(expected_vc_distance(h)? + 6)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SetCoverInstance {
        SetCoverInstance::new(3, vec![vec![0], vec![0, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn example_parameters() {
        let inst = example();
        assert_eq!((inst.f(), inst.d(), inst.optimum()), (2, 2, 2));
        assert_eq!(inst.tail_length(), 19);
        let gad = gen_setcover(&inst).unwrap();
        // 3 squares, item paths 4+4+2, set paths 2+4+4, three tails of 19.
        assert_eq!(gad.graph.n(), 12 + 10 + 10 + 57);
        // Square edges 12, links to item paths 3, item path edges 3+3+1,
        // set path edges 1+3+3, set-to-tail 3, tail edges 54, memberships 5.
        assert_eq!(gad.graph.m(), 12 + 3 + 7 + 7 + 3 + 54 + 5);
    }

    #[test]
    fn invalid_families() {
        assert_eq!(SetCoverInstance::new(2, vec![]), Err(GadgetError::EmptyFamily));
        assert_eq!(SetCoverInstance::new(2, vec![vec![0]]), Err(GadgetError::Uncovered(1)));
        assert_eq!(SetCoverInstance::new(1, vec![vec![]]), Err(GadgetError::EmptySet(0)));
    }

    #[test]
    fn cover_roundtrip() {
        let gad = gen_setcover(&example()).unwrap();
        let seq = cover_to_sequence(&gad, &[1, 2]).unwrap();
        assert_eq!(seq.len(), 61);
        assert!(seq.len() <= cover_length_bound(&gad, 2).unwrap());
        assert_eq!(sequence_to_cover(&gad, &seq).unwrap(), vec![1, 2]);
        assert_eq!(cover_to_sequence(&gad, &[0]), Err(GadgetError::NotACover(1)));
    }

    #[test]
    fn long_path_variant() {
        let gad = gen_setcover_nonmaximum(&example()).unwrap();
        assert_eq!(gad.params.l_prime, Some(79));
        let seq = cover_to_sequence(&gad, &[0, 1, 2]).unwrap();
        assert_eq!(sequence_to_cover(&gad, &seq).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn vertex_cover_gadget_sizes() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let gad = gen_vc(&k2).unwrap();
        assert_eq!(gad.graph.n(), 15);
        assert_eq!(expected_vc_distance(&k2).unwrap(), 5);
        assert_eq!(expected_vc_diameter(&k2).unwrap(), 11);
        let c3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(expected_vc_distance(&c3).unwrap(), 13);
        assert_eq!(gen_vc(&Graph::empty(3)), Err(GadgetError::NoEdges));
    }
}
