//! Symplectic structure on adjoint and coadjoint orbits.

mod forms;
mod kks;

pub use forms::{omega_h, omega_kernel, omega_matrix, solve_tangent_preimage, OrbitTangentVector, TANGENT_TOL};
pub use kks::{
    coadjoint_descriptor, d_omega_orbit, induced_orbit_map, kks, omega_orbit, pullback_compare, reference_sign,
    KksContext, PULLBACK_TOL,
};
