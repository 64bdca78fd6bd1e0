use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("not a vertex ordering: {0}")]
    InvalidOrdering(String),

    #[error("vertices {x} and {y} must be distinct and non-adjacent")]
    AdjacentOrEqual { x: usize, y: usize },

    #[error("vertex {0} is moplicial")]
    Moplicial(usize),

    #[error("vertex {0} is not avoidable")]
    NotAvoidable(usize),

    #[error("ordering has an umbrella ({x}, {y}, {z})")]
    Umbrella { x: usize, y: usize, z: usize },

    #[error("graph is complete")]
    Complete,

    #[error("graph has {0} moplexes, at most 2 allowed")]
    TooManyMoplexes(usize),

    #[error("graph has {0} avoidable vertices, at most 2 allowed")]
    TooManyAvoidable(usize),

    #[error("invalid vertex partition: {0}")]
    InvalidPartition(String),

    #[error("{what}: {n} exceeds the limit of {max}")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("property violated: {0}")]
    Violation(String),
}

impl Error {
    /// Stable machine-readable code, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::Parse { .. } => "parse",
            Error::InvalidEdge(_) => "invalid_edge",
            Error::Disconnected => "disconnected",
            Error::EmptyGraph => "empty_graph",
            Error::InvalidOrdering(_) => "invalid_ordering",
            Error::AdjacentOrEqual { .. } => "adjacent_or_equal",
            Error::Moplicial(_) => "moplicial",
            Error::NotAvoidable(_) => "not_avoidable",
            Error::Umbrella { .. } => "umbrella",
            Error::Complete => "complete",
            Error::TooManyMoplexes(_) => "too_many_moplexes",
            Error::TooManyAvoidable(_) => "too_many_avoidable",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::Violation(_) => "violation",
        }
    }
}
