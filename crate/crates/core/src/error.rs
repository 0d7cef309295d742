use alloc::string::String;

use crate::Measure;

/// Errors raised by graph construction and by the measures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("node {node} is out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// The power iteration hit the zero vector (e.g. a nilpotent adjacency matrix).
    #[error("degenerate spectrum: the iterate vanished after {iterations} iterations")]
    DegenerateSpectrum { iterations: usize },

    #[error("attenuation factor {beta} is not below the admissible limit {limit}")]
    Divergent { beta: f64, limit: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has {n} nodes, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("arithmetic overflow in exact computation")]
    Overflow,

    #[error("measure `{0}` has no closed form for this graph family")]
    NotTabulated(Measure),

    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
