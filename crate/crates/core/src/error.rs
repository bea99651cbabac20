use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{order}")]
    VertexOutOfRange { u: usize, v: usize, order: usize },

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    NoSuchVertex { vertex: usize, order: usize },

    #[error("{0}")]
    InvalidGenerator(String),

    #[error("invalid shuriken parameters t={t}, n={n}: {reason}")]
    InvalidParams { t: usize, n: usize, reason: &'static str },

    #[error("copy index {i} has no partner (t={t}, n={n})")]
    Unpaired { i: usize, t: usize, n: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Timeout(#[from] crate::solvers::Timeout),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
