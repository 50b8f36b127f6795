use thiserror::Error;

use crate::expr::{EvalError, ParseError};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid deformation parameter q = {0}: q must be positive and different from 1")]
    InvalidQ(f64),

    #[error("degenerate bracket base {0}: x - 1/x vanishes or x = 0")]
    DegenerateBase(String),

    /// A parameter point excluded by one of the algebra's stated provisos.
    /// Batch runs treat these as skips rather than failures.
    #[error("{what}: {citation}")]
    Proviso { what: String, citation: &'static str },

    #[error("unitary normalization needs non-negative weights, but weight({n}) = {value}")]
    NonPositiveWeight { n: usize, value: f64 },

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("incompatible input: {0}")]
    Incompatible(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl Error {
    pub fn proviso(what: impl Into<String>, citation: &'static str) -> Self {
        Error::Proviso { what: what.into(), citation }
    }

    pub fn is_proviso(&self) -> bool {
        matches!(self, Error::Proviso { .. })
    }
}
