//! Graph class recognition and the moplex-preference orientation of 2-moplex
//! graphs.

use serde::Serialize;

use crate::asteroidal::is_at_free;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moplex::{moplex_number, moplexes, Moplex};
use crate::orderings::{cocomparability_ordering, linear_extension, VertexOrdering};
use crate::separators::{all_minimal_separators, is_minimal_xy_separator};
use crate::set::VertexSet;

/// Largest graph accepted by the exhaustive hereditary sweeps.
pub const HEREDITARY_MAX_VERTICES: usize = 16;

/// Maximum cardinality search: repeatedly visits the unvisited vertex with the
/// most visited neighbors, smallest id on ties.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = unvisited
        .iter()
        .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
    {
        unvisited.remove(v);
        order.push(v);
        for w in g.adj(v) & &unvisited {
            weight[w] += 1;
        }
    }
    order
}

/// Chordal iff the reverse of a maximum cardinality search is a perfect
/// elimination ordering: the earlier-visited neighbors of every vertex form a
/// clique.
pub fn is_chordal(g: &Graph) -> bool {
    let order = maximum_cardinality_search(g);
    let mut visited = g.no_vertices();
    for v in order {
        let earlier = g.adj(v) & &visited;
        if !g.is_clique(&earlier) {
            return false;
        }
        visited.insert(v);
    }
    true
}

pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let nbrs = g.adj(v).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if nbrs[j + 1..]
                    .iter()
                    .any(|&c| !g.has_edge(a, c) && !g.has_edge(b, c))
                {
                    return false;
                }
            }
        }
        true
    })
}

/// A proper 2-coloring `(A, B)` of `g`; in every component the smallest vertex
/// goes to `A`.
pub fn two_coloring(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored");
            for w in g.adj(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let a = VertexSet::from_vertices(n, (0..n).filter(|&v| color[v] == Some(false)));
    let b = VertexSet::from_vertices(n, (0..n).filter(|&v| color[v] == Some(true)));
    Some((a, b))
}

/// A partition of `V(g)` into two cliques, if one exists.
pub fn clique_bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    two_coloring(&g.complement())
}

pub fn is_cobipartite(g: &Graph) -> bool {
    clique_bipartition(g).is_some()
}

/// Claw-free, AT-free and chordal.
pub fn is_proper_interval(g: &Graph) -> bool {
    is_chordal(g) && is_claw_free(g) && is_at_free(g)
}

/// `V(g)` splits into cliques `X`, `Y` (either may be empty) whose members of
/// `X` have closed neighborhoods totally ordered by inclusion.
///
/// Whether the nesting holds does not depend on which clique bipartition is
/// taken: a failure on one side of one bipartition exhibits an induced `C4`,
/// which rules out every bipartition.
pub fn is_cochain(g: &Graph) -> bool {
    match clique_bipartition(g) {
        None => false,
        Some((x, _)) => is_nested(g, &x),
    }
}

pub(crate) fn is_nested(g: &Graph, side: &VertexSet) -> bool {
    let mut closed: Vec<VertexSet> = side.iter().map(|v| g.closed_neighbors(v)).collect();
    closed.sort_by_key(VertexSet::len);
    closed.windows(2).all(|w| w[0].is_subset(&w[1]))
}

pub fn is_cocomparability(g: &Graph) -> bool {
    cocomparability_ordering(g).is_some()
}

fn check_hereditary_size(g: &Graph) -> Result<()> {
    if g.vertex_count() > HEREDITARY_MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "hereditary sweep vertex count",
            n: g.vertex_count(),
            max: HEREDITARY_MAX_VERTICES,
        });
    }
    Ok(())
}

fn induced_subgraphs(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter(|mask| mask.count_ones() >= 3)
        .map(move |mask| g.induced_subgraph(&VertexSet::from_mask(n, mask)).0)
}

/// Every induced subgraph has at most two moplexes.
pub fn hereditary_2moplex_check(g: &Graph) -> Result<bool> {
    check_hereditary_size(g)?;
    Ok(induced_subgraphs(g).all(|h| moplex_number(&h) <= 2))
}

/// Every connected induced subgraph has at most two moplexes.
pub fn connected_hereditary_2moplex_check(g: &Graph) -> Result<bool> {
    check_hereditary_size(g)?;
    Ok(induced_subgraphs(g)
        .filter(Graph::is_connected)
        .all(|h| moplex_number(&h) <= 2))
}

/// The orientation of the non-edges of a connected non-complete 2-moplex
/// graph by moplex preference: `(x, y)` is present when `x` lies with
/// `moplex_u` after removing any minimal x,y-separator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreferenceOrientation {
    pub vertex_count: usize,
    pub moplex_u: Moplex,
    pub moplex_w: Moplex,
    pub oriented_pairs: Vec<(usize, usize)>,
    /// Number of (pair, separator) combinations that agreed.
    pub separators_checked: usize,
}

impl PreferenceOrientation {
    fn out_sets(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::empty(self.vertex_count); self.vertex_count];
        for &(x, y) in &self.oriented_pairs {
            out[x].insert(y);
        }
        out
    }

    pub fn prefers(&self, x: usize, y: usize) -> bool {
        self.oriented_pairs.binary_search(&(x, y)).is_ok()
    }

    /// `x → y` and `y → z` imply `x → z`; no pair is oriented both ways.
    pub fn is_transitive(&self) -> bool {
        let out = self.out_sets();
        (0..self.vertex_count).all(|x| {
            !out[x].contains(x)
                && out[x]
                    .iter()
                    .all(|y| !out[y].contains(x) && out[y].is_subset(&out[x]))
        })
    }

    /// A linear extension, smallest id first among available vertices.
    pub fn ordering(&self) -> Option<VertexOrdering> {
        linear_extension(&self.out_sets())
    }
}

/// Orients every non-edge `xy` of a connected non-complete 2-moplex graph from
/// `x` to `y` when the moplex `U` (the one with the smaller least vertex) and
/// `x` share a component of `G − S` for a minimal x,y-separator `S`. All
/// separators of `S(x, y)` are checked to agree.
pub fn moplex_preference_orientation(g: &Graph) -> Result<PreferenceOrientation> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::Complete);
    }
    let mut found = moplexes(g);
    if found.len() != 2 {
        return Err(Error::TooManyMoplexes(found.len()));
    }
    let moplex_w = found.pop().expect("two moplexes");
    let moplex_u = found.pop().expect("two moplexes");
    let u = moplex_u.vertices.first().expect("non-empty moplex");

    let separators = all_minimal_separators(g);
    let n = g.vertex_count();
    let mut oriented_pairs = Vec::new();
    let mut separators_checked = 0;
    for x in 0..n {
        for y in (x + 1..n).filter(|&y| !g.has_edge(x, y)) {
            let mut verdict: Option<bool> = None;
            for s in separators.iter().filter(|s| is_minimal_xy_separator(g, s, x, y)) {
                if s.intersects(&moplex_u.vertices) {
                    return Err(Error::Violation(format!(
                        "moplex U meets minimal {x},{y}-separator {s}"
                    )));
                }
                let x_with_u = g.component_of(x, &(g.vertices() - s)).contains(u);
                match verdict {
                    None => verdict = Some(x_with_u),
                    Some(v) if v != x_with_u => {
                        return Err(Error::Violation(format!(
                            "preference between {x} and {y} depends on the separator"
                        )))
                    }
                    Some(_) => {}
                }
                separators_checked += 1;
            }
            match verdict {
                Some(true) => oriented_pairs.push((x, y)),
                Some(false) => oriented_pairs.push((y, x)),
                None => {
                    return Err(Error::Violation(format!(
                        "no minimal separator between non-adjacent {x} and {y}"
                    )))
                }
            }
        }
    }
    oriented_pairs.sort_unstable();
    Ok(PreferenceOrientation {
        vertex_count: n,
        moplex_u,
        moplex_w,
        oriented_pairs,
        separators_checked,
    })
}
