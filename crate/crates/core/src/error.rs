use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("edge {edge} has {found} vertices, expected {expected}")]
    EdgeWrongSize {
        edge: usize,
        found: usize,
        expected: usize,
    },

    #[error("edge {edge} repeats vertex {vertex}")]
    DuplicateVertexInEdge { edge: usize, vertex: usize },

    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {0:?} appears more than once")]
    DuplicateEdge(Vec<usize>),

    #[error("vertex {0} lies in no edge")]
    IsolatedVertex(usize),

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("hypergraph contains a cycle")]
    HasCycle,

    #[error("hypergraph is not a supertree")]
    NotSupertree,

    #[error("vector entry {index} is not strictly positive")]
    NonPositiveVector { index: usize },

    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { found: usize, expected: usize },

    #[error("vector is not k-unit: sum of k-th powers is {0}")]
    NotUnitVector(f64),

    #[error("alpha {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),

    #[error(
        "power iteration did not converge within {iterations} iterations (bracket width {width:e})"
    )]
    MaxIterationsExceeded { iterations: usize, width: f64 },

    #[error("target vertex {target} already lies in edge {edge}")]
    TargetInsideEdge { target: usize, edge: usize },

    #[error("pivot vertex {pivot} is not in edge {edge}")]
    PivotNotInEdge { pivot: usize, edge: usize },

    #[error("edge index {0} is out of range")]
    EdgeOutOfRange(usize),

    #[error("transformed hypergraph would contain a repeated edge")]
    ResultHasDuplicateEdge,

    #[error("edge {0} is pendent")]
    PendentEdge(usize),

    #[error("vertex {vertex} is not in edge {edge}")]
    VertexNotInEdge { vertex: usize, edge: usize },

    #[error("no edge adjacent to edge {0} avoids the release vertex")]
    NoAdjacentEdges(usize),

    #[error("switched edge {0:?} already exists")]
    ResultEdgeExists(Vec<usize>),

    #[error("switched edge would have fewer than k distinct vertices")]
    OverlapViolation,

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("order is not a permutation of the vertex ids")]
    NotAPermutation,

    #[error("beta = {beta} is outside [{lo}, {hi}]")]
    BetaOutOfRange { beta: usize, lo: usize, hi: usize },

    #[error("mu = {mu} is outside [{lo}, {hi}]")]
    MuOutOfRange { mu: usize, lo: usize, hi: usize },

    #[error("degree sequence is not supertree-feasible: {0}")]
    InfeasibleSequence(String),

    #[error("no supertree with these parameters exists")]
    EmptyClass,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, used by the CLI when reporting failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::BadParams(_) => "BadParams",
            Error::EdgeWrongSize { .. } => "EdgeWrongSize",
            Error::DuplicateVertexInEdge { .. } => "DuplicateVertexInEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::DuplicateEdge(_) => "DuplicateEdge",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::NotConnected => "NotConnected",
            Error::HasCycle => "HasCycle",
            Error::NotSupertree => "NotSupertree",
            Error::NonPositiveVector { .. } => "NonPositiveVector",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotUnitVector(_) => "NotUnitVector",
            Error::AlphaOutOfRange(_) => "AlphaOutOfRange",
            Error::MaxIterationsExceeded { .. } => "MaxIterationsExceeded",
            Error::TargetInsideEdge { .. } => "TargetInsideEdge",
            Error::PivotNotInEdge { .. } => "PivotNotInEdge",
            Error::EdgeOutOfRange(_) => "EdgeOutOfRange",
            Error::ResultHasDuplicateEdge => "ResultHasDuplicateEdge",
            Error::PendentEdge(_) => "PendentEdge",
            Error::VertexNotInEdge { .. } => "VertexNotInEdge",
            Error::NoAdjacentEdges(_) => "NoAdjacentEdges",
            Error::ResultEdgeExists(_) => "ResultEdgeExists",
            Error::OverlapViolation => "OverlapViolation",
            Error::InstanceTooLarge(_) => "InstanceTooLarge",
            Error::NotAPermutation => "NotAPermutation",
            Error::BetaOutOfRange { .. } => "BetaOutOfRange",
            Error::MuOutOfRange { .. } => "MuOutOfRange",
            Error::InfeasibleSequence(_) => "InfeasibleSequence",
            Error::EmptyClass => "EmptyClass",
            Error::Parse(_) => "Parse",
        }
    }
}
