//! Minimal separators, S-full components and minimal-separator enumeration.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A minimal separator together with two of its full components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorCertificate {
    pub separator: VertexSet,
    pub full_components: [VertexSet; 2],
    pub endpoints: Option<(usize, usize)>,
}

impl SeparatorCertificate {
    /// Checks the certificate against `g` without trusting how it was built.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let [c1, c2] = &self.full_components;
        let s = &self.separator;
        !s.is_empty()
            && c1.is_disjoint(s)
            && c2.is_disjoint(s)
            && c1.is_disjoint(c2)
            && g.open_neighborhood_of_set(c1) == *s
            && g.open_neighborhood_of_set(c2) == *s
            && g.components(&(g.vertices() - s)).iter().any(|c| c == c1)
            && g.components(&(g.vertices() - s)).iter().any(|c| c == c2)
    }
}

/// Components `C` of `G − S` with `N(C) = S`, ordered by smallest vertex.
pub fn full_components(g: &Graph, separator: &VertexSet) -> Vec<VertexSet> {
    g.components(&(g.vertices() - separator))
        .into_iter()
        .filter(|c| g.open_neighborhood_of_set(c) == *separator)
        .collect()
}

/// Returns a certificate iff `separator` is a minimal separator of `g`, that
/// is, iff `G − S` has at least two S-full components. The empty set is never
/// a separator.
pub fn is_minimal_separator(g: &Graph, separator: &VertexSet) -> Option<SeparatorCertificate> {
    if separator.is_empty() || separator.universe() != g.vertex_count() {
        return None;
    }
    let mut full = full_components(g, separator).into_iter();
    let first = full.next()?;
    let second = full.next()?;
    Some(SeparatorCertificate {
        separator: separator.clone(),
        full_components: [first, second],
        endpoints: None,
    })
}

/// All minimal separators of `g`, in ascending set order.
///
/// Seeds with `N(C)` for every component `C` of `G − N[v]`, then closes the
/// collection under `S ↦ N(C)` for components `C` of `G − (S ∪ N(x))`,
/// `x ∈ S`, until no new separator appears.
pub fn all_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let vertices = g.vertices();
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();

    let mut record = |candidate: VertexSet, queue: &mut Vec<VertexSet>| {
        if !candidate.is_empty() && seen.insert(candidate.clone()) {
            queue.push(candidate);
        }
    };

    for v in 0..g.vertex_count() {
        let rest = &vertices - &g.closed_neighbors(v);
        for c in g.components(&rest) {
            record(g.open_neighborhood_of_set(&c), &mut queue);
        }
    }

    let mut next = 0;
    while next < queue.len() {
        let separator = queue[next].clone();
        next += 1;
        for x in &separator {
            let removed = &separator | g.adj(x);
            for c in g.components(&(&vertices - &removed)) {
                record(g.open_neighborhood_of_set(&c), &mut queue);
            }
        }
    }

    let sorted: BTreeSet<VertexSet> = queue.into_iter().collect();
    sorted.into_iter().collect()
}

/// True if `x` and `y` lie in distinct full components of `G − S`.
pub fn is_minimal_xy_separator(g: &Graph, separator: &VertexSet, x: usize, y: usize) -> bool {
    if separator.contains(x) || separator.contains(y) || separator.is_empty() {
        return false;
    }
    let rest = g.vertices() - separator;
    let cx = g.component_of(x, &rest);
    if cx.contains(y) || g.open_neighborhood_of_set(&cx) != *separator {
        return false;
    }
    let cy = g.component_of(y, &rest);
    g.open_neighborhood_of_set(&cy) == *separator
}

/// The minimal x,y-separators of `g`, in ascending set order.
pub fn minimal_separators_between(g: &Graph, x: usize, y: usize) -> Result<Vec<VertexSet>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y || g.has_edge(x, y) {
        return Err(Error::AdjacentOrEqual { x, y });
    }
    Ok(all_minimal_separators(g)
        .into_iter()
        .filter(|s| is_minimal_xy_separator(g, s, x, y))
        .collect())
}
