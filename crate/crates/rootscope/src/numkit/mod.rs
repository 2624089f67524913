//! Minimal dense linear algebra: the handful of kernels the rest of the
//! crate needs (symmetric eigensolver, kernels, Gram–Schmidt frames,
//! SPD/LU solves, matrix exponential), with deterministic output.

mod eig;
mod expm;
mod frame;
mod mat;

pub use eig::{nullspace, sym_eig, SymEig};
pub use expm::expm;
pub use frame::{dot_gram, orthonormalize, project, reject, Frame};
pub use mat::{
    det, inverse, lu_solve, solve_spd, vadd, vaxpy, vdot, vnorm, vscale, vsub, Cholesky, Mat,
};

pub use mat::rank;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumError {
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("matrix must have at least one row and column")]
    EmptyMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("eigensolver failed to converge")]
    NoConvergence,
    #[error("inner product is not positive definite on the given vectors")]
    GramNotPD,
    #[error("matrix is not positive definite")]
    NotPD,
    #[error("matrix is singular")]
    Singular,
}
