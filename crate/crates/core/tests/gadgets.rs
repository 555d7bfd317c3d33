use matchdist::fpt::bipartite_distance;
use matchdist::gadgets::{cover_length_bound, cover_to_sequence, expected_vc_diameter, expected_vc_distance, gen_setcover, gen_setcover_nonmaximum, gen_vc, min_vertex_cover, sequence_to_cover, SetCoverInstance};
use matchdist::graph::{bipartition, Graph};
use matchdist::matching::matching_number;
use matchdist::reconfig::{oracle_diameter, oracle_distance, Distance, DEFAULT_STATE_BUDGET};
use proptest::prelude::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

fn small_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", graph(2, &[(0, 1)])),
        ("P3", graph(3, &[(0, 1), (1, 2)])),
        ("P4", graph(4, &[(0, 1), (1, 2), (2, 3)])),
        ("C3", graph(3, &[(0, 1), (1, 2), (0, 2)])),
        ("C4", graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
    ]
}

#[test]
fn vertex_cover_gadget_distances_follow_the_formula() {
    for (name, h) in small_graphs() {
        let gad = gen_vc(&h).unwrap();
        let ans = bipartite_distance(&gad.graph, &gad.first, &gad.second).unwrap();
        assert_eq!(ans.distance, Distance::Finite(expected_vc_distance(&h).unwrap()), "{name}");
    }
}

#[test]
fn vertex_cover_gadget_distances_match_the_oracle() {
    for (name, h) in small_graphs().into_iter().take(2) {
        let gad = gen_vc(&h).unwrap();
        let o = oracle_distance(&gad.graph, &gad.first, &gad.second, DEFAULT_STATE_BUDGET).unwrap();
        assert_eq!(o.distance, Distance::Finite(expected_vc_distance(&h).unwrap()), "{name}");
    }
}

#[test]
fn smallest_vertex_cover_gadget_diameter() {
    let k2 = graph(2, &[(0, 1)]);
    let gad = gen_vc(&k2).unwrap();
    assert_eq!(matching_number(&gad.graph), 7);
    let diam = oracle_diameter(&gad.graph, 7, DEFAULT_STATE_BUDGET).unwrap();
    assert_eq!(diam, Distance::Finite(expected_vc_diameter(&k2).unwrap()));
}

#[test]
fn single_item_gadget_shortest_sequence_yields_a_single_set() {
    let inst = SetCoverInstance::new(1, vec![vec![0]]).unwrap();
    let gad = gen_setcover(&inst).unwrap();
    assert_eq!(gad.params.l, Some(5));
    let o = oracle_distance(&gad.graph, &gad.first, &gad.second, DEFAULT_STATE_BUDGET).unwrap();
    let seq = o.witness.unwrap();
    assert_eq!(sequence_to_cover(&gad, &seq).unwrap(), vec![0]);
    let built = cover_to_sequence(&gad, &[0]).unwrap();
    assert_eq!(Distance::Finite(built.len()), o.distance);
}

#[test]
fn example_gadget_distance() {
    let inst = SetCoverInstance::new(3, vec![vec![0], vec![0, 1], vec![1, 2]]).unwrap();
    let gad = gen_setcover(&inst).unwrap();
    assert!(bipartition(&gad.graph).is_some());
    let ans = bipartite_distance(&gad.graph, &gad.first, &gad.second).unwrap();
    let built = cover_to_sequence(&gad, &[1, 2]).unwrap();
    assert!(ans.distance.finite().unwrap() <= built.len());
    let cover = sequence_to_cover(&gad, ans.sequence.as_ref().unwrap()).unwrap();
    assert_eq!(inst.uncovered_by(&cover).unwrap(), None);
}

#[test]
fn long_path_variant_keeps_the_distance() {
    let inst = SetCoverInstance::new(2, vec![vec![0], vec![0, 1]]).unwrap();
    let base = gen_setcover(&inst).unwrap();
    let long = gen_setcover_nonmaximum(&inst).unwrap();
    let a = bipartite_distance(&base.graph, &base.first, &base.second).unwrap();
    let b = bipartite_distance(&long.graph, &long.first, &long.second).unwrap();
    assert_eq!(a.distance, b.distance);
}

fn families() -> impl Strategy<Value = SetCoverInstance> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 1..=4)))
        .prop_filter_map("every item covered", |(n, sets)| {
            SetCoverInstance::new(n, sets.into_iter().map(|s| s.into_iter().collect()).collect()).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_cover_round_trips(inst in families()) {
        let gad = gen_setcover(&inst).unwrap();
        let all: Vec<usize> = (0..inst.sets.len()).collect();
        let seq = cover_to_sequence(&gad, &all).unwrap();
        prop_assert!(seq.len() <= cover_length_bound(&gad, all.len()).unwrap());
        let back = sequence_to_cover(&gad, &seq).unwrap();
        prop_assert_eq!(inst.uncovered_by(&back).unwrap(), None);
    }

    #[test]
    fn vertex_cover_formula_on_random_small_graphs(edges in prop::collection::btree_set((0usize..4, 0usize..4), 1..5)) {
        let edges: Vec<(usize, usize)> = edges.into_iter().filter(|(a, b)| a < b).collect();
        prop_assume!(!edges.is_empty());
        let h = graph(4, &edges);
        let gad = gen_vc(&h).unwrap();
        let ans = bipartite_distance(&gad.graph, &gad.first, &gad.second).unwrap();
        prop_assert_eq!(ans.distance, Distance::Finite(3 * h.m() + 2 * min_vertex_cover(&h).unwrap()));
    }
}
