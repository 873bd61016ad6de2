use crate::algebra::AlgebraError;
use crate::eisenstein::EisError;
use crate::laurent::LaurentError;
use crate::numeric::NumericError;

/// Any failure surfaced by the engine.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Eisenstein(#[from] EisError),
    #[error("range: {0}")]
    Range(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
