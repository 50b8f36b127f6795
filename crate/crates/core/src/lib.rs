//! Generalized boson and Heisenberg Hopf algebras on truncated Fock spaces.
//!
//! The crate builds matrix images of the generators of five algebra families
//! (`B`, `Bbar`, `Bq`, `Bbarq`, `H`), attaches coproduct, counit and antipode
//! tables to them, constructs the associated R-matrices, and measures the
//! residual of every structural identity on the part of the truncated space
//! where the identity is unaffected by the cutoff.
//!
//! Every check returns a [`CheckReport`]; nothing panics on a failed identity.

pub mod catalog;
pub mod error;
pub mod expr;
pub mod fock;
pub mod hopf;
pub mod linalg;
pub mod relations;
pub mod report;
pub mod rmatrix;
pub mod scalars;
pub mod structure;
pub mod tensor;

pub use error::{Error, Result};
pub use fock::{AlgebraSpec, Family, FockRep, Params, ValidityWindow};
pub use hopf::HopfTables;
pub use linalg::{Mat, C64};
pub use report::{CheckReport, Status};
pub use rmatrix::RMatrix;

/// Default truncation dimension.
pub const DEFAULT_DIM: usize = 16;
/// Default residual tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;
