use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected dim={expected}, got dim={got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("objects {0} and {1} intersect; the instance must be pairwise disjoint")]
    IntersectingObjects(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported object for this operation: {0}")]
    UnsupportedObject(String),

    #[error("vertex {0} is isolated; an edge cover does not exist")]
    IsolatedVertex(usize),

    #[error("region {0} contains none of the candidate points")]
    UnhitRegion(usize),

    #[error("feasibility predicate is not monotone: {0}")]
    NonMonotone(String),

    #[error("oracle search space too large ({size:e} > {limit:e}); use a smaller instance")]
    OracleTooLarge { size: f64, limit: f64 },

    #[error("gadget construction failed: {0}")]
    Gadget(String),

    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
