//! Exhaustive reference implementations. They rely on nothing but the graph
//! type and are meant for small inputs only.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::moplex::Moplex;
use crate::set::VertexSet;

pub const MAX_CUT_MAX: usize = 24;
pub const ISOMORPHISM_MAX: usize = 10;
pub const HAMILTONIAN_MAX: usize = 12;
pub const MOPLEX_MAX: usize = 8;
pub const SEPARATOR_MAX: usize = 12;

fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::ResourceLimit { what, n, max })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub side_one: VertexSet,
    pub side_two: VertexSet,
    pub size: usize,
}

/// A maximum cut, trying every bipartition with vertex 0 on side one.
pub fn brute_max_cut(g: &Graph) -> Result<Cut> {
    let n = g.vertex_count();
    guard("max-cut vertex count", n, MAX_CUT_MAX)?;
    let adj = adjacency_masks(g);
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut best = (0u32, 0u64);
    for mask in 0u64..1 << n.saturating_sub(1) {
        let side = mask << 1;
        let size: u32 = (0..n)
            .filter(|&v| side >> v & 1 == 1)
            .map(|v| (adj[v] & !side & all).count_ones())
            .sum();
        if size > best.0 {
            best = (size, side);
        }
    }
    let side_two = VertexSet::from_mask(n, best.1);
    Ok(Cut {
        side_one: side_two.complement(),
        side_two,
        size: best.0 as usize,
    })
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| (0..n).filter(|&w| g.has_edge(v, w)).fold(0, |m, w| m | 1 << w))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismMap {
    /// `mapping[v]` is the image of vertex `v` of the first graph.
    pub mapping: Vec<usize>,
}

impl IsomorphismMap {
    pub fn is_valid(&self, g1: &Graph, g2: &Graph) -> bool {
        let n = g1.vertex_count();
        if n != g2.vertex_count() || self.mapping.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in &self.mapping {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(self.mapping[u], self.mapping[v]))
        })
    }
}

/// An isomorphism `g1 → g2`, by backtracking over degree-compatible images.
pub fn brute_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<IsomorphismMap>> {
    let n = g1.vertex_count();
    guard("isomorphism vertex count", n.max(g2.vertex_count()), ISOMORPHISM_MAX)?;
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&x| d1[v] == d2[x]).collect())
        .collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(iso_extend(g1, g2, &candidates, 0, &mut mapping, &mut used)
        .then_some(IsomorphismMap { mapping }))
}

fn iso_extend(
    g1: &Graph,
    g2: &Graph,
    candidates: &[Vec<usize>],
    v: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == mapping.len() {
        return true;
    }
    for &x in &candidates[v] {
        if used[x] || (0..v).any(|u| g1.has_edge(u, v) != g2.has_edge(mapping[u], x)) {
            continue;
        }
        mapping[v] = x;
        used[x] = true;
        if iso_extend(g1, g2, candidates, v + 1, mapping, used) {
            return true;
        }
        used[x] = false;
    }
    mapping[v] = usize::MAX;
    false
}

/// A Hamiltonian path, by depth-first search over partial paths from every
/// start vertex.
pub fn brute_hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    guard("Hamiltonian path vertex count", n, HAMILTONIAN_MAX)?;
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for start in 0..n {
        path.push(start);
        used[start] = true;
        if ham_extend(g, &mut path, &mut used) {
            return Ok(Some(path));
        }
        path.pop();
        used[start] = false;
    }
    Ok(None)
}

fn ham_extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if path.len() == used.len() {
        return true;
    }
    let last = *path.last().expect("non-empty path");
    for next in 0..used.len() {
        if used[next] || !g.has_edge(last, next) {
            continue;
        }
        used[next] = true;
        path.push(next);
        if ham_extend(g, path, used) {
            return true;
        }
        path.pop();
        used[next] = false;
    }
    false
}

/// Whether `x` and `y` lie in different components of `G − removed`.
fn separated(g: &Graph, removed: u64, x: usize, y: usize) -> bool {
    let n = g.vertex_count();
    let mut reached = 1u64 << x;
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for w in 0..n {
            let bit = 1u64 << w;
            if g.has_edge(v, w) && reached & bit == 0 && removed & bit == 0 {
                if w == y {
                    return false;
                }
                reached |= bit;
                stack.push(w);
            }
        }
    }
    true
}

/// `S` separates some non-adjacent `x`, `y`, and no `S` minus one vertex
/// does.
fn is_minimal_separator_by_definition(g: &Graph, s: u64) -> bool {
    let n = g.vertex_count();
    if s == 0 {
        return false;
    }
    (0..n).filter(|&x| s >> x & 1 == 0).any(|x| {
        (x + 1..n)
            .filter(|&y| s >> y & 1 == 0 && !g.has_edge(x, y))
            .any(|y| {
                separated(g, s, x, y)
                    && (0..n)
                        .filter(|&z| s >> z & 1 == 1)
                        .all(|z| !separated(g, s & !(1u64 << z), x, y))
            })
    })
}

/// Every minimal separator, found by testing each vertex subset.
pub fn brute_minimal_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    guard("separator oracle vertex count", n, SEPARATOR_MAX)?;
    let mut out: Vec<VertexSet> = (1u64..1 << n)
        .filter(|&s| is_minimal_separator_by_definition(g, s))
        .map(|s| VertexSet::from_mask(n, s))
        .collect();
    out.sort();
    Ok(out)
}

/// Moplexes by definition: inclusion-maximal vertex subsets that are both a
/// clique and a module, whose neighborhood is empty or a minimal separator.
pub fn brute_moplexes(g: &Graph) -> Result<Vec<Moplex>> {
    let n = g.vertex_count();
    guard("moplex oracle vertex count", n, MOPLEX_MAX)?;
    let adj = adjacency_masks(g);
    let is_clique_module = |x: u64| {
        let members: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
        let clique = members
            .iter()
            .all(|&v| members.iter().all(|&w| v == w || adj[v] >> w & 1 == 1));
        let module = (0..n).filter(|&z| x >> z & 1 == 0).all(|z| {
            let hit = members.iter().filter(|&&v| adj[z] >> v & 1 == 1).count();
            hit == 0 || hit == members.len()
        });
        clique && module
    };
    let modules: Vec<u64> = (1u64..1 << n).filter(|&x| is_clique_module(x)).collect();
    let mut out = Vec::new();
    for &x in &modules {
        if modules.iter().any(|&y| y != x && y & x == x) {
            continue;
        }
        let nbhd = (0..n)
            .filter(|&v| x >> v & 1 == 1)
            .fold(0u64, |m, v| m | adj[v])
            & !x;
        if nbhd != 0 && !is_minimal_separator_by_definition(g, nbhd) {
            continue;
        }
        let simplicial = (0..n)
            .filter(|&v| nbhd >> v & 1 == 1)
            .all(|v| adj[v] | 1 << v | !nbhd == u64::MAX);
        out.push(Moplex {
            vertices: VertexSet::from_mask(n, x),
            neighborhood: VertexSet::from_mask(n, nbhd),
            simplicial,
        });
    }
    out.sort();
    Ok(out)
}
