use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    /// A block refers to vertices outside the host, or is otherwise
    /// structurally incompatible with the host. Names the offending block.
    #[error("block {index} lies outside the host: {reason}")]
    BlockOutsideHost { index: usize, reason: String },

    /// A biclique in a cover touches an edge the host graph does not have.
    #[error("biclique {index} covers edge ({u},{v}) which is not in the host graph")]
    CoverOutsideHost { index: usize, u: u32, v: u32 },

    #[error("invalid partition scheme: {0}")]
    InvalidScheme(String),

    #[error("certificate is not an exact partition: {0}")]
    NotExactPartition(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
