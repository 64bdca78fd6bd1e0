//! Asteroidal sets of vertices and of moplexes.
//!
//! Sets of size at most one count as asteroidal, so every non-empty graph has
//! asteroidal number at least one.

use serde::Serialize;

use crate::graph::Graph;
use crate::moplex::{moplexes, Moplex};
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AsteroidalWitness {
    Vertices(VertexSet),
    Moplexes(Vec<Moplex>),
}

/// For every vertex `a`, the component index of each vertex in `G − N[a]`
/// (`usize::MAX` for vertices of `N[a]`).
struct AvoidanceComponents {
    labels: Vec<Vec<usize>>,
}

impl AvoidanceComponents {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let labels = (0..n)
            .map(|a| {
                let mut label = vec![usize::MAX; n];
                let rest = g.vertices() - &g.closed_neighbors(a);
                for (i, c) in g.components(&rest).iter().enumerate() {
                    for v in c {
                        label[v] = i;
                    }
                }
                label
            })
            .collect();
        AvoidanceComponents { labels }
    }

    #[inline]
    fn same_side(&self, a: usize, x: usize, y: usize) -> bool {
        let l = &self.labels[a];
        l[x] != usize::MAX && l[x] == l[y]
    }
}

pub fn is_asteroidal_set(g: &Graph, set: &VertexSet) -> bool {
    if set.len() <= 1 {
        return true;
    }
    if !g.is_independent_set(set) {
        return false;
    }
    set.iter().all(|a| {
        let mut rest = set.clone();
        rest.remove(a);
        let avoid = g.vertices() - &g.closed_neighbors(a);
        let first = rest.first().expect("at least one other vertex");
        rest.is_subset(&g.component_of(first, &avoid))
    })
}

/// Extends the asteroidal set `chosen` by vertices greater than its last
/// member. Subsets of asteroidal sets are asteroidal, so only asteroidal sets
/// are ever extended.
fn extend(
    g: &Graph,
    comps: &AvoidanceComponents,
    chosen: &mut Vec<usize>,
    target: usize,
    best: &mut Vec<usize>,
) -> bool {
    if chosen.len() > best.len() {
        best.clone_from(chosen);
    }
    if chosen.len() == target {
        return true;
    }
    let start = chosen.last().map_or(0, |&v| v + 1);
    for x in start..g.vertex_count() {
        if chosen.iter().any(|&a| g.has_edge(a, x)) {
            continue;
        }
        // Each old member must still see the rest, x included, on one side;
        // x must see all old members on one side.
        let old_side = chosen.iter().all(|&a| {
            let other = chosen.iter().copied().find(|&b| b != a);
            other.is_none_or(|b| comps.same_side(a, x, b))
        });
        let new_side = chosen.windows(2).all(|w| comps.same_side(x, w[0], w[1]));
        let compatible = old_side && new_side;
        if !compatible {
            continue;
        }
        chosen.push(x);
        if extend(g, comps, chosen, target, best) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Some asteroidal set with exactly `k` vertices, if one exists.
pub fn asteroidal_set_of_size(g: &Graph, k: usize) -> Option<VertexSet> {
    if k > g.vertex_count() {
        return None;
    }
    let comps = AvoidanceComponents::new(g);
    let mut chosen = Vec::new();
    let mut best = Vec::new();
    extend(g, &comps, &mut chosen, k, &mut best)
        .then(|| VertexSet::from_vertices(g.vertex_count(), chosen))
}

/// Maximum size of an asteroidal set.
pub fn asteroidal_number(g: &Graph) -> usize {
    let comps = AvoidanceComponents::new(g);
    let mut chosen = Vec::new();
    let mut best = Vec::new();
    extend(g, &comps, &mut chosen, usize::MAX, &mut best);
    best.len()
}

/// No asteroidal triple.
pub fn is_at_free(g: &Graph) -> bool {
    let n = g.vertex_count();
    let comps = AvoidanceComponents::new(g);
    for a in 0..n {
        for b in (a + 1..n).filter(|&b| !g.has_edge(a, b)) {
            for c in (b + 1..n).filter(|&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                if comps.same_side(a, b, c) && comps.same_side(b, a, c) && comps.same_side(c, a, b)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Moplexes `X_1..X_k` such that for every `i` all other `X_j` lie in one
/// component of `G − N[X_i]`; searched over `k`-subsets of `moplexes(g)`.
pub fn asteroidal_set_of_moplexes(g: &Graph, k: usize) -> Option<AsteroidalWitness> {
    let all = moplexes(g);
    if k > all.len() {
        return None;
    }
    let avoid: Vec<VertexSet> = all
        .iter()
        .map(|m| g.vertices() - &g.closed_neighborhood_of_set(&m.vertices))
        .collect();

    let is_asteroidal = |pick: &[usize]| {
        pick.iter().all(|&i| {
            let mut others = g.no_vertices();
            for &j in pick.iter().filter(|&&j| j != i) {
                others |= &all[j].vertices;
            }
            match others.first() {
                None => true,
                Some(first) => {
                    others.is_subset(&avoid[i]) && others.is_subset(&g.component_of(first, &avoid[i]))
                }
            }
        })
    };

    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        if is_asteroidal(&pick) {
            return Some(AsteroidalWitness::Moplexes(
                pick.iter().map(|&i| all[i].clone()).collect(),
            ));
        }
        // Next k-combination of 0..all.len() in lexicographic order.
        let m = all.len();
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if pick[i] != i + m - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}
