//! Exhaustive-search counts checked against published enumeration tables
//! (OEIS A002851 for cubic, A006820 for quartic connected graphs).

use spectral_bound::exact::{rat_pq, Scalar};
use spectral_bound::graph::Graph;
use spectral_bound::search::{
    canonical_graph6, enumerate_with, PruneHooks, SearchSpec,
};

fn count(spec: &SearchSpec) -> u64 {
    enumerate_with(spec, PruneHooks::default(), 1).unwrap().total()
}

/// Heawood graph from its LCF notation [5, -5]^7.
fn heawood() -> Graph {
    let n = 14i64;
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in 0..14i64 {
        let jump = if i % 2 == 0 { 5 } else { -5 };
        let j = (i + jump).rem_euclid(n);
        if i < j {
            edges.push((i as usize, j as usize));
        }
    }
    Graph::from_edges(14, &edges).unwrap()
}

#[test]
fn cubic_counts_match_published_table() {
    assert_eq!(count(&SearchSpec::count(3, 12, 12)), 85);
    assert_eq!(count(&SearchSpec::count(3, 14, 14)), 509);
}

#[test]
fn quartic_counts_match_published_table() {
    assert_eq!(count(&SearchSpec::count(4, 10, 10)), 59);
    assert_eq!(count(&SearchSpec::count(4, 11, 11)), 265);
}

#[test]
fn counts_by_n_covers_the_whole_range() {
    let res = enumerate_with(&SearchSpec::count(3, 4, 10), PruneHooks::default(), 2).unwrap();
    assert_eq!(res.total(), 27);
    let got: Vec<(u32, u64)> = res.counts_by_n.into_iter().collect();
    assert_eq!(got, vec![(4, 1), (6, 2), (8, 5), (10, 19)]);
}

#[test]
fn heawood_is_the_unique_smallest_cubic_graph_of_girth_6() {
    let mut spec = SearchSpec::count(3, 14, 14);
    spec.girth_min = Some(6);
    spec.mode = spectral_bound::search::SearchMode::Collect;
    let res = enumerate_with(&spec, PruneHooks::default(), 1).unwrap();
    assert_eq!(res.graphs, vec![canonical_graph6(&heawood()).unwrap()]);

    let mut spec = SearchSpec::count(3, 16, 16);
    spec.girth_min = Some(6);
    assert_eq!(count(&spec), 1);
}

#[test]
fn cubic_girth_exactly_5_on_14_vertices() {
    let mut spec = SearchSpec::count(3, 14, 14);
    spec.girth_exact = Some(5);
    assert_eq!(count(&spec), 8);
}

#[test]
fn eigenvalue_cap_splits_the_girth_6_graphs_on_18_vertices() {
    // Five cubic graphs of girth 6 exist on 18 vertices; exactly two keep
    // the second eigenvalue at or below 19/10, and both sit close enough
    // to the cap that the decision needs exact arithmetic.
    let mut spec = SearchSpec::count(3, 18, 18);
    spec.girth_exact = Some(6);
    assert_eq!(count(&spec), 5);

    spec.lambda2_max = Some(Scalar::from_rat(rat_pq(19, 10)));
    assert_eq!(count(&spec), 2);
}
