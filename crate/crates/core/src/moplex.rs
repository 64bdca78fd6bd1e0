//! Moplexes, moplicial vertices and avoidable vertices.
//!
//! A moplex is an inclusion-maximal clique module `X` whose neighborhood
//! `N(X)` is empty or a minimal separator. The vertex set of a complete graph
//! is a moplex, so `K_n` has moplex number one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};
use crate::separators::is_minimal_separator;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Moplex {
    pub vertices: VertexSet,
    pub neighborhood: VertexSet,
    pub simplicial: bool,
}

/// The inclusion-maximal clique modules of `g`: the classes of vertices
/// sharing a closed neighborhood, ordered by smallest vertex.
pub fn maximal_clique_modules(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let mut assigned = g.no_vertices();
    let mut out = Vec::new();
    for v in 0..n {
        if assigned.contains(v) {
            continue;
        }
        // Twins of v are adjacent to v, so only N[v] needs scanning.
        let class = VertexSet::from_vertices(
            n,
            closed[v].iter().filter(|&u| closed[u] == closed[v]),
        );
        assigned |= &class;
        out.push(class);
    }
    out
}

/// Whether the clique module `module` is a moplex.
fn as_moplex(g: &Graph, module: VertexSet) -> Option<Moplex> {
    let neighborhood = g.open_neighborhood_of_set(&module);
    if !neighborhood.is_empty() && is_minimal_separator(g, &neighborhood).is_none() {
        return None;
    }
    let simplicial = g.is_clique(&neighborhood);
    Some(Moplex {
        vertices: module,
        neighborhood,
        simplicial,
    })
}

/// All moplexes of `g`, ordered by smallest vertex.
pub fn moplexes(g: &Graph) -> Vec<Moplex> {
    maximal_clique_modules(g)
        .into_iter()
        .filter_map(|m| as_moplex(g, m))
        .collect()
}

pub fn moplex_number(g: &Graph) -> usize {
    moplexes(g).len()
}

/// At most `k` moplexes.
pub fn is_k_moplex(g: &Graph, k: usize) -> bool {
    moplex_number(g) <= k
}

/// Union of all moplexes.
pub fn moplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = g.no_vertices();
    for m in moplexes(g) {
        out |= &m.vertices;
    }
    out
}

pub fn is_moplicial(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let closed = g.closed_neighbors(v);
    let module = VertexSet::from_vertices(
        g.vertex_count(),
        closed.iter().filter(|&u| g.closed_neighbors(u) == closed),
    );
    Ok(as_moplex(g, module).is_some())
}

/// Pairs `(x, y)`, `x < y`, of non-adjacent neighbors of `v`: the induced P3s
/// with midpoint `v`.
pub fn extensions(g: &Graph, v: usize) -> Result<Vec<(usize, usize)>> {
    let neighbors = g.neighbors(v)?;
    let mut out = Vec::new();
    for x in neighbors {
        for y in neighbors.iter().filter(|&y| y > x) {
            if !g.has_edge(x, y) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// `v` is avoidable iff every extension `(x, y)` of `v` closes into an induced
/// cycle, i.e. `x` and `y` are joined by a path whose inner vertices avoid
/// `N[v]`.
pub fn is_avoidable(g: &Graph, v: usize) -> Result<bool> {
    let exts = extensions(g, v)?;
    let outside = g.vertices() - &g.closed_neighbors(v);
    Ok(exts.into_iter().all(|(x, y)| {
        let mut allowed = outside.clone();
        allowed.insert(x);
        allowed.insert(y);
        g.component_of(x, &allowed).contains(y)
    }))
}

pub fn avoidable_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_vertices(
        g.vertex_count(),
        (0..g.vertex_count()).filter(|&v| is_avoidable(g, v).unwrap_or(false)),
    )
}

/// Deletes an avoidable vertex that belongs to no moplex. The moplexes of the
/// result are exactly the images of the moplexes of `g`.
pub fn delete_avoidable_nonmoplicial(g: &Graph, v: usize) -> Result<(Graph, VertexMap)> {
    if is_moplicial(g, v)? {
        return Err(Error::Moplicial(v));
    }
    if !is_avoidable(g, v)? {
        return Err(Error::NotAvoidable(v));
    }
    g.remove_vertex(v)
}
