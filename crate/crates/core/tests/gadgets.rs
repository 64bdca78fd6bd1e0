mod common;

use common::{connected_upto, labeled_upto};
use moplex_core::classes::{clique_bipartition, is_cobipartite, two_coloring};
use moplex_core::generators::{embed_in_2moplex, gi_gadget, maxcut_gadget};
use moplex_core::moplex::moplex_number;
use moplex_core::oracles::brute_isomorphic;
use moplex_core::orderings::{cocomparability_ordering, is_umbrella_free};
use moplex_core::{Error, Graph, VertexOrdering, VertexSet};

#[test]
fn embedding_holds_for_every_small_cocomparability_graph() {
    let mut built = 0;
    for g in labeled_upto(6) {
        let Some(sigma) = cocomparability_ordering(&g) else {
            continue;
        };
        let gadget = embed_in_2moplex(&g, &sigma).unwrap();
        gadget.check(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        assert_eq!(gadget.graph.vertex_count(), 3 * g.vertex_count() + 2);
        assert_eq!(moplex_number(&gadget.graph), 2);
        built += 1;
    }
    assert!(built > 10_000);
}

#[test]
fn embedding_rejects_orderings_with_an_umbrella() {
    for g in connected_upto(5) {
        let identity = VertexOrdering::identity(g.vertex_count());
        match (is_umbrella_free(&g, &identity), embed_in_2moplex(&g, &identity)) {
            (None, Ok(_)) => {}
            (Some(_), Err(Error::Umbrella { .. })) => {}
            (u, r) => panic!("{g:?}: umbrella {u:?}, result {r:?}"),
        }
    }
}

#[test]
fn maxcut_gadget_holds_for_every_small_cobipartite_graph() {
    for g in labeled_upto(6).filter(is_cobipartite) {
        let (a, b) = clique_bipartition(&g).unwrap();
        if a.is_empty() || b.is_empty() {
            assert!(maxcut_gadget(&g, &a, &b).is_err());
            continue;
        }
        let gadget = maxcut_gadget(&g, &a, &b).unwrap();
        gadget.check(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        assert_eq!(gadget.graph.vertex_count(), 2 * g.vertex_count() + 2);
    }
}

fn bipartite_classes(n: usize) -> Vec<(Graph, VertexSet, VertexSet)> {
    connected_upto(n)
        .into_iter()
        .filter(|g| g.vertex_count() == n)
        .filter_map(|g| two_coloring(&g).map(|(a, b)| (g, a, b)))
        .collect()
}

fn relabel(g: &Graph, set: &VertexSet, perm: &[usize]) -> (Graph, VertexSet) {
    let n = g.vertex_count();
    let h = Graph::from_edges(n, g.edges().map(|(x, y)| (perm[x], perm[y]))).unwrap();
    (h, VertexSet::from_vertices(n, set.iter().map(|v| perm[v])))
}

#[test]
fn gi_gadget_reflects_isomorphism_of_small_bipartite_graphs() {
    for n in 2..=6 {
        let classes = bipartite_classes(n);
        let gadgets: Vec<Graph> = classes
            .iter()
            .map(|(g, a, b)| {
                let gadget = gi_gadget(g, a, b).unwrap();
                gadget.check(g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
                gadget.graph
            })
            .collect();
        for i in 0..classes.len() {
            for j in i..classes.len() {
                let iso = brute_isomorphic(&gadgets[i], &gadgets[j]).unwrap();
                assert_eq!(iso.is_some(), i == j, "classes {i}, {j} on {n} vertices");
            }
            let (g, a, _) = &classes[i];
            let perm: Vec<usize> = (0..n).rev().collect();
            let (h, ha) = relabel(g, a, &perm);
            let hb = ha.complement();
            let relabeled = gi_gadget(&h, &hb, &ha).unwrap().graph;
            let map = brute_isomorphic(&gadgets[i], &relabeled).unwrap().unwrap();
            assert!(map.is_valid(&gadgets[i], &relabeled));
        }
    }
}
