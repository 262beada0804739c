//! Killing forms, adjoint and coadjoint orbits of small matrix Lie algebras,
//! and the symplectic forms they carry.
//!
//! The pieces, bottom up:
//! - [`numerics`]: dense complex/real matrices, Jacobi eigensolver,
//!   matrix exponential, rank and SVD.
//! - [`lie`]: algebras with cached structure constants, brackets, `ad`,
//!   `Ad` and one-parameter subgroups; presets `u`, `su`, `so`.
//! - [`forms`]: Killing and trace forms, Cartan's criterion, `B♭`/`B♯` and
//!   the coadjoint action.
//! - [`orbits`]: spectral descriptors of `u(n)`/`su(n)` adjoint orbits.
//! - [`symplectic`]: `ω_h`, `Ω_h`, the KKS form and their comparison.
//! - [`verify`]: named verification suites run by the CLI.

pub mod error;
pub mod forms;
pub mod lie;
pub mod numerics;
pub mod orbits;
pub mod registry;
pub mod report;
pub mod sampling;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
