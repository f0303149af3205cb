use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("complex is not closed: homology needs empty diagrams only")]
    NotClosed,
    #[error("malformed serialization: {0}")]
    Format(String),
    #[error("invalid diagram: {0}")]
    Diagram(String),
    #[error("gate {gate} has an odd number of strands; the invariant is zero")]
    OddIntersection { gate: usize },
    #[error("move not applicable: {0}")]
    Move(String),
    #[error("knotification: {0}")]
    Knotify(String),
    #[error("stabilization not reached by k = {kmax}")]
    Ceiling { kmax: u32, last: Box<crate::chain::BigradedHomology>, previous: Box<crate::chain::BigradedHomology> },
    #[error("series window: {0}")]
    Window(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("complex exceeded {0} objects")]
    TooLarge(usize),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
