use matchdist::enumerate::graphs_up_to;
use matchdist::graph::{is_maximal, Graph};
use matchdist::matching::{
    allowed_edges, allowed_edges_by_deletion, blossom_max_matching, edmonds_gallai, edmonds_gallai_from, max_matching,
    matching_number, perfect_matching_count, EgClass, PerfectMatchings,
};
use matchdist::reconfig::matchings_of_size;

fn largest_by_search(g: &Graph) -> usize {
    (0..=g.n() / 2).rev().find(|&k| !matchings_of_size(g, k, 1_000_000).unwrap().is_empty()).unwrap()
}

#[test]
fn matching_number_agrees_with_search() {
    for g in graphs_up_to(7) {
        let nu = largest_by_search(&g);
        assert_eq!(matching_number(&g), nu);
        let m = blossom_max_matching(&g);
        assert_eq!(m.len(), nu);
        assert!(is_maximal(&g, &m));
        let count = matchings_of_size(&g, g.n() / 2, 1_000_000).unwrap().len();
        let expect = match (g.n() % 2, count) {
            (1, _) | (_, 0) => PerfectMatchings::None,
            (_, 1) => PerfectMatchings::Unique,
            _ => PerfectMatchings::Multiple,
        };
        assert_eq!(perfect_matching_count(&g), expect, "{:?}", g.edges());
    }
}

#[test]
fn allowed_edges_agree_with_enumeration() {
    for g in graphs_up_to(6) {
        let nu = matching_number(&g);
        let mut used = vec![false; g.m()];
        for m in matchings_of_size(&g, nu, 1_000_000).unwrap() {
            for &e in m.edges() {
                used[e] = true;
            }
        }
        let want: Vec<usize> = (0..g.m()).filter(|&e| used[e]).collect();
        assert_eq!(allowed_edges(&g), want);
        assert_eq!(allowed_edges_by_deletion(&g), want);
    }
}

/// Checks every structural property of the partition; returns the number of
/// violations.
fn gallai_violations(g: &Graph) -> usize {
    let mut bad = 0;
    let eg = edmonds_gallai(g);
    let class = eg.classes(g.n());
    let maxima = matchings_of_size(g, eg.nu, 1_000_000).unwrap();
    for m in maxima.iter().take(50) {
        let other = edmonds_gallai_from(g, m).unwrap();
        bad += usize::from((&other.d, &other.a, &other.c) != (&eg.d, &eg.a, &eg.c));
    }
    let mates = eg.witness.mates(g);
    for v in 0..g.n() {
        match (class[v], mates[v]) {
            (EgClass::C, Some(w)) => bad += usize::from(class[w] != EgClass::C),
            (EgClass::C, None) => bad += 1,
            (EgClass::A, Some(w)) => bad += usize::from(class[w] != EgClass::D),
            (EgClass::A, None) => bad += 1,
            (EgClass::D, _) => {}
        }
    }
    bad
}

#[test]
fn gallai_partition_is_canonical() {
    for g in graphs_up_to(7) {
        assert_eq!(gallai_violations(&g), 0, "{:?}", g.edges());
        let eg = edmonds_gallai(&g);
        assert_eq!(eg.witness.len(), max_matching(&g).len());
    }
}
