//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite simple undirected graph. Vertices are `0..n`; adjacency rows are
/// bitsets so `has_edge` is O(1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
}

/// Correspondence between the vertices of a graph and those of a graph derived
/// from it (an induced subgraph or a vertex deletion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn new_to_old(&self) -> &[usize] {
        &self.new_to_old
    }

    /// Image of `set` (over the old universe) in the new graph; vertices
    /// without an image are dropped.
    pub fn map_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(
            self.new_to_old.len(),
            set.iter().filter_map(|v| self.to_new(v)),
        )
    }

    /// Preimage of `set` (over the new universe) in the old graph.
    pub fn unmap_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.old_to_new.len(), set.iter().map(|v| self.to_old(v)))
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidEdge(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from its adjacency rows. Rows must be symmetric and
    /// irreflexive.
    pub fn from_adjacency(adjacency: Vec<VertexSet>) -> Result<Self> {
        let n = adjacency.len();
        let mut edge_count = 0;
        for (u, row) in adjacency.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::Violation(format!("row {u} has wrong universe")));
            }
            if row.contains(u) {
                return Err(Error::Violation(format!("self-loop at {u}")));
            }
            for v in row {
                if !adjacency[v].contains(u) {
                    return Err(Error::Violation(format!("edge {u}-{v} is not symmetric")));
                }
            }
            edge_count += row.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// Adds an edge; returns false if it was already present.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if self.adjacency[u].contains(v) {
            return false;
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        self.edge_count += 1;
        true
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn no_vertices(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: set.last().unwrap_or(set.universe()),
                n: self.vertex_count(),
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Open neighborhood N(v), without range checking.
    #[inline]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut set = self.adjacency[v].clone();
        set.insert(v);
        set
    }

    /// N[X]: the union of the closed neighborhoods of the members of `set`.
    pub fn closed_neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out |= &self.adjacency[v];
        }
        out
    }

    /// N(X) = N[X] \ X.
    pub fn open_neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        self.closed_neighborhood_of_set(set) - set
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let component = self.grow_component(start, &mut remaining);
            out.push(component);
        }
        out
    }

    /// The component of `G[within]` containing `start`.
    pub fn component_of(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut remaining = within.clone();
        self.grow_component(start, &mut remaining)
    }

    fn grow_component(&self, start: usize, remaining: &mut VertexSet) -> VertexSet {
        remaining.remove(start);
        let mut component = VertexSet::singleton(self.vertex_count(), start);
        let mut frontier = component.clone();
        loop {
            let mut next = self.no_vertices();
            for u in &frontier {
                next |= &self.adjacency[u];
            }
            next &= &*remaining;
            if next.is_empty() {
                return component;
            }
            *remaining -= &next;
            component |= &next;
            frontier = next;
        }
    }

    /// True for graphs with exactly one component; the empty graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.component_of(0, &self.vertices()).len() == n
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `set`, relabelled densely in ascending order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, VertexMap) {
        let new_to_old = set.to_vec();
        let k = new_to_old.len();
        let mut old_to_new = vec![None; self.vertex_count()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::empty(k);
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for old_v in self.adjacency[old_u].iter() {
                if let Some(new_v) = old_to_new[old_v] {
                    if new_u < new_v {
                        g.add_edge(new_u, new_v);
                    }
                }
            }
        }
        (
            g,
            VertexMap {
                old_to_new,
                new_to_old,
            },
        )
    }

    /// G − v.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.induced_subgraph(&keep))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let full = VertexSet::full(n);
        let adjacency: Vec<VertexSet> = (0..n)
            .map(|v| {
                let mut row = &full - &self.adjacency[v];
                row.remove(v);
                row
            })
            .collect();
        let edge_count = n * n.saturating_sub(1) / 2 - self.edge_count;
        Graph {
            adjacency,
            edge_count,
        }
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adjacency[v])
        })
    }

    pub fn is_independent_set(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    /// Every vertex outside `set` sees either all of it or none of it.
    pub fn is_module(&self, set: &VertexSet) -> bool {
        if set.is_empty() {
            return true;
        }
        let outside = set.complement();
        outside.iter().all(|x| {
            let seen = &self.adjacency[x] & set;
            seen.is_empty() || seen == *set
        })
    }

    /// Parses the canonical edge-list format: a header line `n m` followed by
    /// `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        let mut g = Graph::empty(n);
        let mut seen = 0;
        for (line, text) in lines {
            if seen == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, text)?;
            let bad = |message: String| Error::Parse { line, message };
            if u >= n || v >= n {
                return Err(bad(format!("vertex id out of range 0..{n}")));
            }
            if u == v {
                return Err(bad(format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(bad(format!("duplicate edge {u} {v}")));
            }
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: text.lines().count() + 1,
                message: format!("expected {m} edges, found {seen}"),
            });
        }
        Ok(g)
    }

    /// Canonical edge-list text, newline terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.vertex_count(), self.edge_count).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut parts = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let token = parts.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        token.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{token}` is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

/// Serializes as `{"vertex_count": n, "edges": [[u, v], ...]}`.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("vertex_count", &self.vertex_count())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.vertex_count())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
