//! Named example graphs shipped as edge-list assets with a label sidecar.

use crate::graph::Graph;

/// A graph whose vertices carry display labels (line `i` of the `.labels`
/// file names vertex `i`).
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn parse(edge_list: &str, labels: &str) -> crate::Result<Self> {
        let graph = Graph::parse_edge_list(edge_list)?;
        let labels: Vec<String> = labels
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect();
        if labels.len() != graph.vertex_count() {
            return Err(crate::Error::Parse {
                line: labels.len() + 1,
                message: format!(
                    "label file names {} vertices, graph has {}",
                    labels.len(),
                    graph.vertex_count()
                ),
            });
        }
        Ok(LabeledGraph { graph, labels })
    }

    /// Vertex id of `label`. Panics on unknown labels.
    pub fn id(&self, label: &str) -> usize {
        self.lookup(label)
            .unwrap_or_else(|| panic!("unknown vertex label {label}"))
    }

    pub fn lookup(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn ids(&self, labels: &str) -> Vec<usize> {
        labels.split_whitespace().map(|l| self.id(l)).collect()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

pub const TWO_MOPLEX_EDGES: &str = include_str!("../fixtures/two_moplex.el");
pub const TWO_MOPLEX_LABELS: &str = include_str!("../fixtures/two_moplex.labels");
pub const SWEEP_EDGES: &str = include_str!("../fixtures/sweep.el");
pub const SWEEP_LABELS: &str = include_str!("../fixtures/sweep.labels");

/// Eight vertices with exactly two moplexes `{A2}` and `{B2, C2}`, and an
/// avoidable vertex `Center` that is neither moplicial nor simplicial.
pub fn two_moplex_example() -> LabeledGraph {
    LabeledGraph::parse(TWO_MOPLEX_EDGES, TWO_MOPLEX_LABELS).expect("bundled fixture")
}

/// Six vertices `a..f`; the reference graph for DFS+ and LDFS+ sweeps.
pub fn sweep_example() -> LabeledGraph {
    LabeledGraph::parse(SWEEP_EDGES, SWEEP_LABELS).expect("bundled fixture")
}

/// The net: a triangle with one pendant vertex on each corner. Vertices 0..3
/// form the triangle, 3..6 are the pendants.
pub fn net() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}
