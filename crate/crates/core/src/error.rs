//! Error types shared by the engines.

use alloc::string::String;

/// Anything the engines can reject or fail on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A multiplier `m_i` is zero.
    ZeroMultiplier { index: usize },
    /// More multipliers than the genus allows (`r > g`).
    RankExceedsGenus { rank: usize, genus: u32 },
    /// Genus below 2 where the coefficient conversion divides by `2g - 2`.
    GenusTooSmall { genus: u32 },
    /// Expansion size beyond the supported envelope (`r >= 8`).
    Capacity { rank: usize },
    /// Invalid metrized-graph input.
    Graph(GraphError),
    /// Internal consistency failure; indicates a bug, never bad input.
    Defect(String),
}

/// Validation failures for polarized metrized graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Empty,
    VertexOutOfRange { edge: usize },
    NonpositiveLength { edge: usize },
    Disconnected,
    /// `K(v) = 2q(v) - 2 + valence(v)` must be nonnegative.
    NegativeCanonicalDivisor { vertex: usize },
    /// Operation needs genus at least one.
    GenusZero,
    /// Subdivision point outside the open interval `(0, length)`.
    SubdivisionOutOfRange,
    EdgeOutOfRange { edge: usize },
}

impl From<GraphError> for Error {
    fn from(e: GraphError) -> Self {
        Error::Graph(e)
    }
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::ZeroMultiplier { index } => {
                write!(f, "multiplier m_{} is zero", index + 1)
            }
            Error::RankExceedsGenus { rank, genus } => {
                write!(f, "tuple length {rank} exceeds genus {genus}")
            }
            Error::GenusTooSmall { genus } => {
                write!(f, "genus {genus} too small, need g >= 2")
            }
            Error::Capacity { rank } => {
                write!(f, "tuple length {rank} exceeds the supported envelope (r <= 7)")
            }
            Error::Graph(e) => write!(f, "{e}"),
            Error::Defect(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph has no vertices"),
            GraphError::VertexOutOfRange { edge } => {
                write!(f, "edge {edge} references an unknown vertex")
            }
            GraphError::NonpositiveLength { edge } => {
                write!(f, "edge {edge} has nonpositive length")
            }
            GraphError::Disconnected => write!(f, "graph is disconnected"),
            GraphError::NegativeCanonicalDivisor { vertex } => {
                write!(f, "vertex {vertex} has K(v) = 2q - 2 + valence < 0")
            }
            GraphError::GenusZero => write!(f, "operation requires genus g >= 1"),
            GraphError::SubdivisionOutOfRange => {
                write!(f, "subdivision point must lie strictly inside the edge")
            }
            GraphError::EdgeOutOfRange { edge } => write!(f, "no edge with index {edge}"),
        }
    }
}
