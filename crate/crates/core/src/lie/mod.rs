//! Matrix Lie algebras and the adjoint action of their groups.

mod algebra;
mod element;
mod group;
pub mod io;
mod presets;
mod validate;

pub use algebra::{AlgebraKind, LieAlgebra, AXIOM_TOL};
pub use element::{ad_matrix, bracket, AlgebraElement};
pub use group::{adjoint_action, flow_point, GroupElement, UNITARY_TOL};
pub use presets::{
    parse_preset_spec, preset, preset_registry, AlgebraPreset, SpecialOrthogonal, SpecialUnitary, Unitary,
};
pub use validate::{validate, ValidationReport};
