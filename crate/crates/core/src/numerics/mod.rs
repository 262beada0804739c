//! Small dense linear algebra: complex/real matrices, a Jacobi Hermitian
//! eigensolver, the matrix exponential, rank and SVD.

mod complex;
mod decomp;
mod eig;
mod expm;
mod real;
mod tolerance;

pub use complex::ComplexMatrix;
pub use decomp::{rank_with_tol, real_rank, svd, Svd};
pub use eig::{hermitian_eig, symmetric_eigenvalues, HermitianEigen, MAX_SWEEPS};
pub use expm::matrix_exp;
pub use num_complex::Complex64;
pub use real::{distance, dot, norm, RealMatrix};
pub use tolerance::Tolerance;
