use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// graph6 input could not be decoded; `offset` is the byte where decoding failed.
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6Parse { offset: usize, msg: String },

    /// An operation that needs shortest-path distances got a disconnected graph.
    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    /// A tree-only operation got a non-tree.
    #[error("expected a tree: {0}")]
    NotATree(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// The quotient-eigenvalue lemma needs an equitable partition.
    #[error("partition is not equitable for this matrix")]
    NotEquitable,

    #[error("matrix is not symmetric (entry ({i},{j}) differs from ({j},{i}) by {delta:e})")]
    Asymmetric { i: usize, j: usize, delta: f64 },

    #[error("Jacobi eigensolver failed to converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("parameter out of range: {0}")]
    Bound(String),

    /// Characteristic polynomial order bound exceeded; use the numeric path instead.
    #[error("matrix order {order} exceeds the exact char-poly bound {bound}; use the numeric eigensolver")]
    CharPolyBound { order: usize, bound: usize },

    /// A bisection bracket expected by the path secular equations was not found.
    #[error("secular-equation bracket not found: {0}")]
    NoBracket(String),

    /// The inductive -1 eigenvector failed its exact verification; construction bug.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("invalid family spec {spec:?}: {msg}")]
    FamilySpec { spec: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
