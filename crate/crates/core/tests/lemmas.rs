//! Structural facts about umbrella-free LDFS orderings, checked on every
//! ordering of every small connected cocomparability graph.

mod common;

use common::{connected_upto, for_each_permutation};
use moplex_core::classes::is_cocomparability;
use moplex_core::moplex::is_avoidable;
use moplex_core::orderings::{is_ldfs_ordering, is_umbrella_free, ldfs_plus};
use moplex_core::{Graph, VertexOrdering};

fn induces_c4(g: &Graph, q: [usize; 4]) -> bool {
    let degree = |v: usize| q.iter().filter(|&&w| g.has_edge(v, w)).count();
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]));
    distinct && q.iter().all(|&v| degree(v) == 2)
}

fn umbrella_free_ldfs_orderings(g: &Graph) -> Vec<VertexOrdering> {
    let mut out = Vec::new();
    for_each_permutation(g.vertex_count(), |perm| {
        let order = VertexOrdering::new(perm.to_vec()).unwrap();
        if is_umbrella_free(g, &order).is_none() && is_ldfs_ordering(g, &order).unwrap() {
            out.push(order);
        }
    });
    out
}

fn cocomparability_corpus() -> Vec<Graph> {
    connected_upto(6)
        .into_iter()
        .filter(is_cocomparability)
        .collect()
}

#[test]
fn three_point_condition_yields_induced_c4() {
    let mut triples = 0;
    for g in cocomparability_corpus() {
        for sigma in umbrella_free_ldfs_orderings(&g) {
            let s = sigma.sequence();
            let n = s.len();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let (a, b, c) = (s[i], s[j], s[k]);
                        if !g.has_edge(a, c) || g.has_edge(a, b) {
                            continue;
                        }
                        triples += 1;
                        assert!(
                            s[i + 1..j].iter().any(|&d| induces_c4(&g, [a, b, c, d])),
                            "{g:?} {sigma} ({a}, {b}, {c})"
                        );
                    }
                }
            }
        }
    }
    assert!(triples > 0);
}

#[test]
fn consecutive_non_edge_means_avoidable() {
    for g in cocomparability_corpus() {
        for sigma in umbrella_free_ldfs_orderings(&g) {
            for pair in sigma.sequence().windows(2) {
                if !g.has_edge(pair[0], pair[1]) {
                    assert!(is_avoidable(&g, pair[0]).unwrap(), "{g:?} {sigma}");
                }
            }
        }
    }
}

#[test]
fn ldfs_plus_keeps_umbrella_free_orderings_umbrella_free() {
    for g in cocomparability_corpus() {
        for_each_permutation(g.vertex_count(), |perm| {
            let tau = VertexOrdering::new(perm.to_vec()).unwrap();
            if is_umbrella_free(&g, &tau).is_none() {
                let sigma = ldfs_plus(&g, &tau).unwrap();
                assert!(is_umbrella_free(&g, &sigma).is_none(), "{g:?} {tau} -> {sigma}");
            }
        });
    }
}
