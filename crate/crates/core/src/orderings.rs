//! Vertex orderings: umbrella-freeness, DFS and LDFS orderings, the
//! DFS+/LDFS+ sweeps and cocomparability orderings.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A permutation of `0..n` with its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// Fails unless `sequence` is a permutation of `0..sequence.len()`.
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range 0..{n}")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
            position[v] = i;
        }
        Ok(VertexOrdering { sequence, position })
    }

    /// Like [`VertexOrdering::new`], additionally requiring it to order `V(g)`.
    pub fn for_graph(g: &Graph, sequence: Vec<usize>) -> Result<Self> {
        if sequence.len() != g.vertex_count() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} vertices, graph has {}",
                sequence.len(),
                g.vertex_count()
            )));
        }
        Self::new(sequence)
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    /// Parses whitespace-separated vertex ids.
    pub fn parse(text: &str) -> Result<Self> {
        let sequence = text
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::InvalidOrdering(format!("`{t}` is not a vertex id")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::new(sequence)
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn into_sequence(self) -> Vec<usize> {
        self.sequence
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.sequence[i]
    }

    pub fn first(&self) -> Option<usize> {
        self.sequence.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.sequence.last().copied()
    }

    pub fn reversed(&self) -> Self {
        let mut sequence = self.sequence.clone();
        sequence.reverse();
        Self::new(sequence).expect("reversal of a permutation")
    }

    /// `x <_σ y`.
    #[inline]
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.position[x] < self.position[y]
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.sequence.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexOrdering({self})")
    }
}

impl Serialize for VertexOrdering {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.sequence.serialize(serializer)
    }
}

/// Three vertices `x <_σ y <_σ z` with `xz ∈ E` and `xy, yz ∉ E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UmbrellaViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

fn check_orders(g: &Graph, order: &VertexOrdering) -> Result<()> {
    if order.len() != g.vertex_count() {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} vertices, graph has {}",
            order.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        Err(Error::EmptyGraph)
    } else if !g.is_connected() {
        Err(Error::Disconnected)
    } else {
        Ok(())
    }
}

/// The first umbrella of `order` in lexicographic order of positions, or
/// `None` if the ordering is umbrella-free.
///
/// Panics if `order` does not order `V(g)`.
pub fn is_umbrella_free(g: &Graph, order: &VertexOrdering) -> Option<UmbrellaViolation> {
    assert_eq!(order.len(), g.vertex_count(), "ordering must cover V(g)");
    let seq = order.sequence();
    let n = seq.len();
    for i in 0..n {
        let x = seq[i];
        for j in i + 1..n {
            let y = seq[j];
            if g.has_edge(x, y) {
                continue;
            }
            for &z in &seq[j + 1..] {
                if g.has_edge(x, z) && !g.has_edge(y, z) {
                    return Some(UmbrellaViolation { x, y, z });
                }
            }
        }
    }
    None
}

/// Whether for all `a < b < c` with `ac ∈ E` and `ab ∉ E` there is a `d`
/// with `a < d < b`, `db ∈ E` and `dc ∉ E`.
pub fn is_ldfs_ordering(g: &Graph, order: &VertexOrdering) -> Result<bool> {
    check_orders(g, order)?;
    require_connected(g)?;
    let n = g.vertex_count();
    let seq = order.sequence();
    // after[j] = vertices at positions > j
    let mut after = vec![VertexSet::empty(n); n];
    for j in (0..n.saturating_sub(1)).rev() {
        after[j] = after[j + 1].clone();
        after[j].insert(seq[j + 1]);
    }
    for i in 0..n {
        let a = seq[i];
        for j in i + 1..n {
            let b = seq[j];
            if g.has_edge(a, b) {
                continue;
            }
            // c's still lacking a witness d
            let mut open = g.adj(a) & &after[j];
            for &d in &seq[i + 1..j] {
                if open.is_empty() {
                    break;
                }
                if g.has_edge(d, b) {
                    open &= g.adj(d);
                }
            }
            if !open.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `order` can be produced by a depth-first search: each vertex is
/// adjacent to the most recently visited vertex that still has unvisited
/// neighbors.
pub fn is_dfs_ordering(g: &Graph, order: &VertexOrdering) -> Result<bool> {
    check_orders(g, order)?;
    require_connected(g)?;
    let seq = order.sequence();
    let mut unvisited = g.vertices();
    unvisited.remove(seq[0]);
    let mut stack = vec![seq[0]];
    for &v in &seq[1..] {
        while let Some(&top) = stack.last() {
            if g.adj(top).intersects(&unvisited) {
                break;
            }
            stack.pop();
        }
        match stack.last() {
            Some(&top) if g.has_edge(top, v) => {}
            _ => return Ok(false),
        }
        unvisited.remove(v);
        stack.push(v);
    }
    Ok(true)
}

/// The DFS ordering that is lexicographically maximal with respect to `tau`:
/// starts at the last vertex of `tau` and always continues with the
/// `tau`-greatest unvisited neighbor of the deepest vertex that has one.
pub fn dfs_plus(g: &Graph, tau: &VertexOrdering) -> Result<VertexOrdering> {
    check_orders(g, tau)?;
    require_connected(g)?;
    let n = g.vertex_count();
    let start = tau.last().expect("non-empty graph");
    let mut unvisited = g.vertices();
    unvisited.remove(start);
    let mut stack = vec![start];
    let mut out = Vec::with_capacity(n);
    out.push(start);
    while let Some(&top) = stack.last() {
        let candidates = g.adj(top) & &unvisited;
        match candidates.iter().max_by_key(|&v| tau.position(v)) {
            Some(next) => {
                unvisited.remove(next);
                out.push(next);
                stack.push(next);
            }
            None => {
                stack.pop();
            }
        }
    }
    VertexOrdering::new(out)
}

/// The LDFS ordering that is lexicographically maximal with respect to `tau`.
///
/// Each unvisited vertex carries the visit times of its visited neighbors,
/// most recent first; the next vertex has the lexicographically largest label,
/// ties going to the `tau`-greatest vertex.
pub fn ldfs_plus(g: &Graph, tau: &VertexOrdering) -> Result<VertexOrdering> {
    check_orders(g, tau)?;
    require_connected(g)?;
    let n = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut unvisited = g.vertices();
    let mut out = Vec::with_capacity(n);
    for step in 1..=n {
        let next = unvisited
            .iter()
            .max_by(|&u, &v| {
                labels[u]
                    .cmp(&labels[v])
                    .then(tau.position(u).cmp(&tau.position(v)))
            })
            .expect("vertices remain");
        unvisited.remove(next);
        out.push(next);
        for w in g.adj(next) & &unvisited {
            labels[w].insert(0, step);
        }
    }
    VertexOrdering::new(out)
}

/// A transitive orientation of `h` as out-neighbor sets, if `h` is a
/// comparability graph.
///
/// Repeatedly picks an unoriented edge, orients its whole implication class
/// within the not-yet-oriented edges, and gives up when a class contains both
/// directions of an edge.
pub fn transitive_orientation(h: &Graph) -> Option<Vec<VertexSet>> {
    let n = h.vertex_count();
    let mut remaining: Vec<VertexSet> = (0..n).map(|v| h.adj(v).clone()).collect();
    let mut oriented = vec![VertexSet::empty(n); n];

    while let Some(seed_tail) = (0..n).find(|&v| !remaining[v].is_empty()) {
        let seed_head = remaining[seed_tail].first().expect("non-empty row");
        let mut class = vec![VertexSet::empty(n); n];
        class[seed_tail].insert(seed_head);
        let mut stack = vec![(seed_tail, seed_head)];
        while let Some((a, b)) = stack.pop() {
            // (a, b') forced when b' is not adjacent to b; (a', b) when a' is
            // not adjacent to a; adjacency taken among remaining edges.
            let mut forced = Vec::new();
            for b2 in &remaining[a] {
                if b2 != b && !remaining[b].contains(b2) {
                    forced.push((a, b2));
                }
            }
            for a2 in &remaining[b] {
                if a2 != a && !remaining[a].contains(a2) {
                    forced.push((a2, b));
                }
            }
            for (x, y) in forced {
                if class[y].contains(x) {
                    return None;
                }
                if !class[x].contains(y) {
                    class[x].insert(y);
                    stack.push((x, y));
                }
            }
        }
        for x in 0..n {
            for y in class[x].iter() {
                remaining[x].remove(y);
                remaining[y].remove(x);
                oriented[x].insert(y);
            }
        }
    }

    let transitive = (0..n).all(|x| {
        oriented[x]
            .iter()
            .all(|y| oriented[y].is_subset(&oriented[x]))
    });
    debug_assert!(transitive, "implication-class decomposition gave a non-transitive orientation");
    transitive.then_some(oriented)
}

/// Linear extension of an acyclic orientation, smallest available id first.
pub(crate) fn linear_extension(out: &[VertexSet]) -> Option<VertexOrdering> {
    let n = out.len();
    let mut indegree = vec![0usize; n];
    for row in out {
        for y in row {
            indegree[y] += 1;
        }
    }
    let mut ready: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seq = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        seq.push(v);
        for y in &out[v] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.insert(y);
            }
        }
    }
    (seq.len() == n).then(|| VertexOrdering::new(seq).expect("topological order"))
}

/// An umbrella-free ordering of `g`, if `g` is a cocomparability graph: a
/// linear extension of a transitive orientation of the complement.
pub fn cocomparability_ordering(g: &Graph) -> Option<VertexOrdering> {
    let orientation = transitive_orientation(&g.complement())?;
    let order = linear_extension(&orientation)?;
    debug_assert!(is_umbrella_free(g, &order).is_none());
    Some(order)
}
