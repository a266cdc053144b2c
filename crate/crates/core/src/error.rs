use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// `A = B = 0`: the polynomial has no quartic part.
    #[error("not a quartic: A and B cannot both vanish")]
    NotAQuartic,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("empty mesh: no zero-cell in the sampled box")]
    EmptyMesh,
}

pub type Result<T> = std::result::Result<T, Error>;
