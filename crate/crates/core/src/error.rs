use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("TooFewVertices: a mop needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("WrongDiagonalCount: expected {expected} diagonals, found {found}")]
    WrongDiagonalCount { expected: usize, found: usize },
    #[error("CrossingDiagonals: {0:?} and {1:?} interleave")]
    CrossingDiagonals((usize, usize), (usize, usize)),
    #[error("InvalidIndex: vertex {index} is out of range for order {n}")]
    InvalidIndex { index: usize, n: usize },
    #[error("InvalidDiagonal: {0:?} is a boundary edge, a loop or a repeated pair")]
    InvalidDiagonal((usize, usize)),
    #[error("NotAnEdge: {0:?}")]
    NotAnEdge((usize, usize)),
    #[error("NotADiagonal: {0:?}")]
    NotADiagonal((usize, usize)),
    #[error("NotABoundaryEdge: {0:?}")]
    NotABoundaryEdge((usize, usize)),
    #[error("NotDegree2: vertex {vertex} has degree {degree}")]
    NotDegree2 { vertex: usize, degree: usize },
    #[error("TooSmall: order {n} is below the required minimum {min}")]
    TooSmall { n: usize, min: usize },
    #[error("TooLarge: order {n} exceeds the allowed maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("KTooSmall: k = {k} but at least {min} is required")]
    KTooSmall { k: usize, min: usize },
    #[error("LimitExceeded: order {n} exceeds the oracle limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("BadParams: {0}")]
    BadParams(String),
    #[error("NotSimple: edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("Degenerate: {0}")]
    Degenerate(String),
    #[error("NotCounterClockwise: corners must be listed counterclockwise")]
    NotCounterClockwise,
    #[error("Parse: line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("Verification: {0}")]
    Verification(String),
}
