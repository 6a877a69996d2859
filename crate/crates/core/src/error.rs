use thiserror::Error;

use crate::omega::CubeLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {0} is out of range (need 2 <= n <= 63)")]
    InvalidN(usize),
    #[error("invalid cube label: {0}")]
    InvalidCube(String),
    #[error("chain cells disagree in dimension or ambient n")]
    MixedChain,
    #[error("unmatched cell {0}")]
    Unmatched(CubeLabel),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("loop edge at vertex {0:?}; subdivide loops")]
    LoopEdge(String),
    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("complex too large: {cells} cells exceeds limit {limit}")]
    TooLarge { cells: u128, limit: u128 },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("internal defect: {0}")]
    Defect(String),
}
