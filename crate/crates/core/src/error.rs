use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph order {0} outside the supported range 1..=64")]
    InvalidOrder(usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set over {set} vertices used with a graph of order {graph}")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("combined order {0} exceeds the 64-vertex capacity")]
    CapacityExceeded(usize),
    #[error("order {order} too large for exact mode (at most {max})")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(
        "partition is not equitable: vertices {first} and {second} of block {block} \
         have different neighbour counts into block {target}"
    )]
    NotEquitable {
        block: usize,
        target: usize,
        first: usize,
        second: usize,
    },
    #[error("no sign change of the polynomial on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("unknown {kind} `{value}`")]
    Unknown { kind: &'static str, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
