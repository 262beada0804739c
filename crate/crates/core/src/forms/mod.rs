//! Invariant bilinear forms, Cartan's criterion and the musical
//! isomorphisms between an algebra and its dual.

mod bilinear;
mod musical;

pub use bilinear::{
    classify_definiteness, form_registry, is_semisimple, killing_form, trace_form, BilinearForm, Definiteness,
    FormKind, FormStrategy, Killing, Semisimplicity, TraceForm,
};
pub use musical::{coadjoint, flat, sharp, Covector};
