//! Hamiltonian paths of connected 2-moplex graphs.
//!
//! The path comes from three graph sweeps: a cocomparability ordering `τ₀`,
//! `σ = LDFS⁺(LDFS⁺(τ₀))`, then `DFS⁺(σ)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moplex::{avoidable_vertices, moplex_number};
use crate::orderings::{cocomparability_ordering, dfs_plus, ldfs_plus, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamPathCertificate {
    pub path: VertexOrdering,
    pub source_ordering: VertexOrdering,
}

impl HamPathCertificate {
    /// Two lines: `σ`, then the path.
    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.source_ordering, self.path)
    }
}

/// `sequence` is a permutation of `V(g)` whose consecutive vertices are
/// adjacent.
pub fn verify_hamiltonian_path(g: &Graph, sequence: &[usize]) -> bool {
    let n = g.vertex_count();
    if sequence.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in sequence {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    sequence.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// The umbrella-free LDFS ordering `LDFS⁺(LDFS⁺(τ₀))` of a connected
/// cocomparability graph.
pub fn double_ldfs_plus(g: &Graph) -> Result<VertexOrdering> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tau = cocomparability_ordering(g)
        .ok_or_else(|| Error::Violation("graph is not a cocomparability graph".into()))?;
    let first = ldfs_plus(g, &tau)?;
    ldfs_plus(g, &first)
}

fn check_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// A verified Hamiltonian path of a connected graph with at most two
/// moplexes.
pub fn hamiltonian_path_2moplex(g: &Graph) -> Result<HamPathCertificate> {
    check_connected(g)?;
    let k = moplex_number(g);
    if k > 2 {
        return Err(Error::TooManyMoplexes(k));
    }
    let sigma = double_ldfs_plus(g)?;
    let path = dfs_plus(g, &sigma)?;
    if !verify_hamiltonian_path(g, path.sequence()) {
        return Err(Error::Violation(format!("DFS+ sweep {path} is not a Hamiltonian path")));
    }
    Ok(HamPathCertificate {
        path,
        source_ordering: sigma,
    })
}

/// For a connected graph with at most two avoidable vertices, the ordering
/// `σ` itself is a Hamiltonian path.
pub fn hamiltonian_path_few_avoidable(g: &Graph) -> Result<HamPathCertificate> {
    check_connected(g)?;
    let k = avoidable_vertices(g).len();
    if k > 2 {
        return Err(Error::TooManyAvoidable(k));
    }
    let sigma = double_ldfs_plus(g)?;
    if !verify_hamiltonian_path(g, sigma.sequence()) {
        return Err(Error::Violation(format!("ordering {sigma} is not a Hamiltonian path")));
    }
    Ok(HamPathCertificate {
        path: sigma.clone(),
        source_ordering: sigma,
    })
}
