//! The orbit form `Ω_h`, the Kirillov–Kostant–Souriau form on coadjoint
//! orbits, and their comparison through `B♭`.
//!
//! Tangent vectors are matched as follows: the generator of `ξ` at `h` on the
//! adjoint orbit is `[ξ, h]`, and by equivariance of `B♭` the generator of
//! `ξ` at `β = B♭(h)` on the coadjoint orbit is `B♭([ξ, h])`. With
//! `[ξ, h] = [h, −ξ]` this gives `Ω_h([ξ,h], [η,h]) = B(h, [ξ, η])`, while the
//! KKS form evaluates to `−β([ξ, η]) = −B(h, [ξ, η])`; the two differ by a
//! global sign.

use std::sync::{Arc, OnceLock};

use super::forms::{omega_h, solve_tangent_preimage, OrbitTangentVector};
use crate::error::{Error, Result};
use crate::forms::{flat, killing_form, trace_form, BilinearForm, Covector};
use crate::lie::{preset, AlgebraElement, LieAlgebra};
use crate::numerics::Tolerance;
use crate::orbits::{classify, OrbitDescriptor};
use crate::report::SuiteReport;
use crate::sampling::{random_element, sample_rng, stream_id};

/// Residual threshold for the KKS/Ω comparison.
pub const PULLBACK_TOL: f64 = 1e-9;

const INVARIANCE_SAMPLES: usize = 16;
const INVARIANCE_SEED: u64 = 0x5eed;
const INVARIANCE_TOL: f64 = 1e-9;

/// A nondegenerate, Ad-invariant form together with the relative sign
/// between the KKS form and `Ω_h` on matched tangent vectors.
#[derive(Debug, Clone)]
pub struct KksContext {
    form: BilinearForm,
    sign: i32,
}

impl KksContext {
    /// Checks the form and takes the sign from [`reference_sign`].
    pub fn new(form: BilinearForm) -> Result<Self> {
        let tol = Tolerance::default();
        if !form.is_nondegenerate(tol) {
            return Err(Error::DegenerateForm {
                smallest: crate::numerics::svd(form.gram()).smallest(),
            });
        }
        let residual = form.invariance_residual(INVARIANCE_SAMPLES, INVARIANCE_SEED)?;
        if residual.is_nan() || residual > INVARIANCE_TOL {
            return Err(Error::NotInvariant { residual });
        }
        Ok(Self {
            form,
            sign: reference_sign(),
        })
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.form.algebra()
    }

    pub fn sign(&self) -> i32 {
        self.sign
    }
}

/// Relative sign `KKS / Ω` fixed once on `su(2)` with the Killing form at
/// `h = e₃`, for the matched pair `([e₁, e₃], [e₂, e₃])`: the KKS form gives
/// `+2` and `Ω` gives `−2`.
pub fn reference_sign() -> i32 {
    static SIGN: OnceLock<i32> = OnceLock::new();
    *SIGN.get_or_init(|| {
        let su2 = preset("su", 2).expect("su(2) preset");
        let form = killing_form(&su2);
        let e = |i| AlgebraElement::basis(&su2, i);
        let h = e(2);
        let kks_value = -flat(&form, &h)
            .and_then(|beta| beta.pair(&e(0).bracket(&e(1))?))
            .expect("su(2) pairing");
        let u = solve_tangent_preimage(&h, &e(0).bracket(&h).unwrap()).expect("tangent");
        let w = solve_tangent_preimage(&h, &e(1).bracket(&h).unwrap()).expect("tangent");
        let omega = omega_h(&form, &h, &u.preimage, &w.preimage).expect("omega");
        if kks_value * omega < 0.0 {
            -1
        } else {
            1
        }
    })
}

/// `Ω_h(u, w) = ω_h(X, Y)` for preimages `u = [h, X]`, `w = [h, Y]`.
pub fn omega_orbit(ctx: &KksContext, u: &OrbitTangentVector, w: &OrbitTangentVector) -> Result<f64> {
    u.base.check_same(&w.base)?;
    let tol = Tolerance::new(1e-12, 1e-12);
    if !u.base.approx_eq(&w.base, tol) {
        return Err(Error::BaseMismatch);
    }
    omega_h(ctx.form(), &u.base, &u.preimage, &w.preimage)
}

/// `dΩ_h([h,X], [h,Y], [h,Z])` evaluated term by term: the three Lie
/// derivative terms, each rewritten through
/// `L_X ω_h(Y, Z) = ω_h(Z, [X,Y]) − ω_h(Y, [X,Z])`, followed by the three
/// bracket terms. The sum is `3·B(h, Jacobiator)` and should vanish.
pub fn d_omega_orbit(
    ctx: &KksContext,
    h: &AlgebraElement,
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<f64> {
    let form = ctx.form();
    let w = |a: &AlgebraElement, b: &AlgebraElement| omega_h(form, h, a, b);
    let br = |a: &AlgebraElement, b: &AlgebraElement| a.bracket(b);

    let lie_x = w(z, &br(x, y)?)? - w(y, &br(x, z)?)?;
    let lie_y = w(z, &br(y, x)?)? - w(x, &br(y, z)?)?;
    let lie_z = w(y, &br(z, x)?)? - w(x, &br(z, y)?)?;
    let lie_terms = lie_x - lie_y + lie_z;

    let bracket_terms = w(x, &br(y, z)?)? - w(y, &br(x, z)?)? + w(z, &br(x, y)?)?;
    Ok(lie_terms + bracket_terms)
}

/// KKS form at `β` on the generators of `ξ` and `η`: `−⟨β, [ξ, η]⟩`.
pub fn kks(ctx: &KksContext, beta: &Covector, xi: &AlgebraElement, eta: &AlgebraElement) -> Result<f64> {
    if !Arc::ptr_eq(ctx.algebra(), beta.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(-beta.pair(&xi.bracket(eta)?)?)
}

/// Compares the KKS form at `β = B♭(h)` with `sign·Ω_h` on matched tangent
/// vectors for `samples` random pairs `(ξ, η)`.
///
/// The reported `sign` is the one observed in the data (`0` when samples
/// disagree); the residual is measured against the context's sign.
pub fn pullback_compare(ctx: &KksContext, h: &AlgebraElement, samples: usize, seed: u64) -> Result<SuiteReport> {
    ctx.form().check_algebra(h)?;
    if crate::orbits::orbit_dim_by_rank(h) == 0 {
        return Err(Error::CentralElement);
    }
    let algebra = ctx.algebra();
    let beta = flat(ctx.form(), h)?;
    let stream = stream_id("pullback");
    let mut max_residual: f64 = 0.0;
    let mut observed: Option<i32> = None;
    let mut consistent = true;

    for idx in 0..samples {
        let mut rng = sample_rng(seed, stream, idx as u64);
        let xi = random_element(algebra, &mut rng);
        let eta = random_element(algebra, &mut rng);

        let k = kks(ctx, &beta, &xi, &eta)?;
        let u = solve_tangent_preimage(h, &xi.bracket(h)?)?;
        let w = solve_tangent_preimage(h, &eta.bracket(h)?)?;
        let omega = omega_orbit(ctx, &u, &w)?;

        max_residual = max_residual.max((k - f64::from(ctx.sign()) * omega).abs());
        if omega.abs() > 1e-6 && k.abs() > 1e-6 {
            let s = if k * omega < 0.0 { -1 } else { 1 };
            match observed {
                None => observed = Some(s),
                Some(prev) if prev != s => consistent = false,
                _ => {}
            }
        }
    }

    let sign = if consistent { observed.unwrap_or(0) } else { 0 };
    Ok(SuiteReport {
        suite: "pullback".into(),
        samples,
        max_residual,
        sign,
        pass: sign == ctx.sign() && max_residual <= PULLBACK_TOL,
    })
}

/// Descriptor of the coadjoint orbit through `α`. The covector is realized
/// as the matrix `M` with `⟨α, X⟩ = −Re tr(M X)` for all `X`, which is
/// equivariant under conjugation and independent of the form in use, and
/// `M` is classified like an adjoint orbit.
pub fn coadjoint_descriptor(alpha: &Covector, cluster_tol: Option<f64>) -> Result<OrbitDescriptor> {
    let realization = crate::forms::sharp(&trace_form(alpha.algebra()), alpha)?;
    classify(&realization, cluster_tol)
}

/// The induced map on orbit spaces: the adjoint orbit labelled by `desc` is
/// sent to the coadjoint orbit through `B♭` of its normal-form
/// representative `diag(iλ₁, …, iλₙ)`.
pub fn induced_orbit_map(ctx: &KksContext, desc: &OrbitDescriptor) -> Result<OrbitDescriptor> {
    let representative = desc.representative(ctx.algebra())?;
    coadjoint_descriptor(&flat(ctx.form(), &representative)?, None)
}
