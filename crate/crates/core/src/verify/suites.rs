use super::{Requirement, SuiteContext, VerificationSuite};
use crate::error::{Error, Result};
use crate::forms::{
    classify_definiteness, coadjoint, flat, is_semisimple, killing_form, sharp, trace_form, Definiteness,
};
use crate::lie::{flow_point, validate, AlgebraElement, AXIOM_TOL};
use crate::numerics::{norm, real_rank, svd, ComplexMatrix, RealMatrix, Tolerance};
use crate::orbits::{classify, default_cluster_tol, orbit_dim_by_rank, tangent_basis};
use crate::registry::Named;
use crate::report::SuiteReport;
use crate::sampling::{random_element, random_group_element, sample_rng, stream_id, SampleRng};
use crate::symplectic::{
    coadjoint_descriptor, d_omega_orbit, induced_orbit_map, kks, omega_h, omega_kernel, omega_orbit, pullback_compare,
    solve_tangent_preimage, KksContext, PULLBACK_TOL,
};

const BRACKET_TOL: f64 = 1e-10;
const ACTION_TOL: f64 = 1e-9;
const FD_STEP: f64 = 1e-5;
const FD_TOL: f64 = 1e-4;
const INVARIANCE_TOL: f64 = 1e-9;
const ISOMORPHISM_TOL: f64 = 1e-10;
const SYMPLECTIC_TOL: f64 = 1e-9;
const ALGEBRAIC_TOL: f64 = 1e-10;
/// Base points per pullback run; each gets `samples` pairs.
const PULLBACK_BASES: usize = 4;

type RunFn = fn(&SuiteContext, &'static str) -> Result<SuiteReport>;

/// A suite backed by a plain function.
struct FnSuite {
    name: &'static str,
    requirement: Requirement,
    run: RunFn,
}

impl Named for FnSuite {
    fn name(&self) -> &'static str {
        self.name
    }
}

impl VerificationSuite for FnSuite {
    fn requirement(&self) -> Requirement {
        self.requirement
    }

    fn run(&self, cx: &SuiteContext) -> Result<SuiteReport> {
        (self.run)(cx, self.name)
    }
}

/// Built-in suites in report order.
pub fn builtin_suites() -> Vec<Box<dyn VerificationSuite>> {
    use Requirement::*;
    let table: [(&'static str, Requirement, RunFn); 21] = [
        ("lie_algebra_axioms", None, axioms),
        ("declared_structure_constants", DeclaredConstants, declared_constants),
        ("bracket_matrix", None, bracket_matrix),
        ("adjoint_action", None, adjoint_action),
        ("ad_representation", None, ad_representation),
        ("flow_generator", None, flow_generator),
        ("form_invariance", None, form_invariance),
        ("cartan_consistency", None, cartan_consistency),
        ("flat_equivariance", None, flat_equivariance),
        ("flat_sharp_isomorphism", SymplecticForm, flat_sharp_isomorphism),
        ("descriptor_invariance", Classifiable, descriptor_invariance),
        ("dimension_identities", Classifiable, dimension_identities),
        ("tangent_basis_size", Classifiable, tangent_basis_size),
        (
            "omega_antisymmetry_bilinearity",
            SymplecticForm,
            antisymmetry_bilinearity,
        ),
        ("omega_invariance", SymplecticForm, omega_invariance),
        ("omega_kernel", SymplecticForm, omega_kernel_suite),
        ("omega_well_defined", SymplecticForm, omega_well_defined),
        ("omega_closed", SymplecticForm, omega_closed),
        ("omega_nondegenerate", SymplecticForm, omega_nondegenerate),
        ("pullback", SymplecticForm, pullback),
        ("commuting_square", ClassifiableSymplectic, commuting_square),
    ];
    table
        .into_iter()
        .map(|(name, requirement, run)| Box::new(FnSuite { name, requirement, run }) as Box<dyn VerificationSuite>)
        .collect()
}

fn rng(cx: &SuiteContext, name: &str, idx: usize) -> SampleRng {
    sample_rng(cx.seed, stream_id(name), idx as u64)
}

fn kks_ctx(cx: &SuiteContext) -> Result<&KksContext> {
    cx.kks
        .as_ref()
        .map_err(|reason| Error::SymplecticUnavailable(reason.clone()))
}

/// `1` for a failed discrete check, so it dominates any numerical residual.
fn flag(failed: bool) -> f64 {
    if failed {
        1.0
    } else {
        0.0
    }
}

/// Normal forms with repeated eigenvalues, `diag(i(n−m), …, −im, …)` for each
/// split `m`, which are traceless and so lie in both `u(n)` and `su(n)`.
fn normal_forms(cx: &SuiteContext) -> Result<Vec<AlgebraElement>> {
    let n = cx.algebra.matrix_size();
    (1..n)
        .map(|m| {
            let lambdas: Vec<f64> = (0..n)
                .map(|j| if j < m { (n - m) as f64 } else { -(m as f64) })
                .collect();
            AlgebraElement::from_matrix(&cx.algebra, &ComplexMatrix::imaginary_diagonal(&lambdas))
        })
        .collect()
}

/// Base points for orbit checks: the normal forms (when classifiable) and
/// then random elements, `samples` points in total beyond the normal forms.
fn base_points(cx: &SuiteContext, name: &str) -> Result<Vec<AlgebraElement>> {
    let mut points = if cx.classifiable() {
        normal_forms(cx)?
    } else {
        Vec::new()
    };
    points.extend((0..cx.samples).map(|i| random_element(&cx.algebra, &mut rng(cx, name, i))));
    Ok(points)
}

fn axioms(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let report = validate(&cx.algebra);
    let residual = report.antisymmetry.max(report.jacobi).max(report.closure);
    Ok(SuiteReport::against(name, 1, residual, AXIOM_TOL))
}

fn declared_constants(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let drift = cx.declared_drift.unwrap_or(0.0);
    Ok(SuiteReport::against(name, 1, drift, AXIOM_TOL))
}

fn bracket_matrix(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let x = random_element(&cx.algebra, &mut r);
        let y = random_element(&cx.algebra, &mut r);
        let direct = x.matrix().commutator(&y.matrix());
        worst = worst.max(x.bracket(&y)?.matrix().distance(&direct));
    }
    Ok(SuiteReport::against(name, cx.samples, worst, BRACKET_TOL))
}

fn adjoint_action(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let g1 = random_group_element(&cx.algebra, &mut r)?;
        let g2 = random_group_element(&cx.algebra, &mut r)?;
        let x = random_element(&cx.algebra, &mut r);
        let nested = g1.act(&g2.act(&x)?)?;
        let composed = g1.compose(&g2)?.act(&x)?;
        worst = worst.max(nested.distance(&composed));
    }
    Ok(SuiteReport::against(name, cx.samples, worst, ACTION_TOL))
}

fn ad_representation(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let x = random_element(&cx.algebra, &mut r);
        let y = random_element(&cx.algebra, &mut r);
        let (ax, ay) = (x.ad_matrix(), y.ad_matrix());
        let commutator = (&ax * &ay).sub(&(&ay * &ax));
        worst = worst.max(x.bracket(&y)?.ad_matrix().distance(&commutator));
    }
    Ok(SuiteReport::against(name, cx.samples, worst, ACTION_TOL))
}

/// Central difference of `t ↦ Ad(exp tX)ξ` at `t = 0` against `[X, ξ]`.
/// A forward difference has truncation error `h/2·‖ad(X)²ξ‖`, which already
/// exceeds the tolerance on `su(3)`.
fn flow_generator(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let x = random_element(&cx.algebra, &mut r);
        let xi = random_element(&cx.algebra, &mut r);
        let ahead = flow_point(&x, FD_STEP)?.act(&xi)?;
        let behind = flow_point(&x, -FD_STEP)?.act(&xi)?;
        let quotient = ahead.sub(&behind)?.scale(0.5 / FD_STEP);
        worst = worst.max(quotient.distance(&x.bracket(&xi)?));
    }
    Ok(SuiteReport::against(name, cx.samples, worst, FD_TOL))
}

/// Relative Ad-invariance defect of both the Killing and the trace form.
fn form_invariance(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let forms = [killing_form(&cx.algebra), trace_form(&cx.algebra)];
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let g = random_group_element(&cx.algebra, &mut r)?;
        let x = random_element(&cx.algebra, &mut r);
        let y = random_element(&cx.algebra, &mut r);
        let (gx, gy) = (g.act(&x)?, g.act(&y)?);
        for form in &forms {
            let before = form.eval(&x, &y)?;
            let after = form.eval(&gx, &gy)?;
            worst = worst.max((after - before).abs() / (1.0 + before.abs()));
        }
    }
    Ok(SuiteReport::against(name, cx.samples, worst, INVARIANCE_TOL))
}

/// The SVD verdict agrees with an elimination rank of the Killing Gram
/// matrix, compact semisimple algebras have a negative definite Killing
/// form, and a degeneracy witness annihilates the form.
fn cartan_consistency(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let tol = cx.tol;
    let verdict = is_semisimple(&cx.algebra, tol);
    let killing = killing_form(&cx.algebra);
    let full_rank = real_rank(killing.gram(), tol) == cx.algebra.dim();
    let mut residual = flag(full_rank != verdict.semisimple);
    if verdict.semisimple && cx.algebra.kind().is_compact() && cx.algebra.dim() > 0 {
        residual = residual.max(flag(
            classify_definiteness(&killing, tol)? != Definiteness::NegativeDefinite,
        ));
    }
    if let Some(w) = &verdict.witness {
        let scale = killing.gram().max_abs().max(1.0);
        residual = residual.max(norm(&killing.gram().mul_vec(w)) / scale);
    }
    Ok(SuiteReport::against(name, 1, residual, INVARIANCE_TOL))
}

fn flat_equivariance(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let g = random_group_element(&cx.algebra, &mut r)?;
        let x = random_element(&cx.algebra, &mut r);
        let lhs = flat(&cx.form, &g.act(&x)?)?;
        let rhs = coadjoint(&g, &flat(&cx.form, &x)?)?;
        worst = worst.max(lhs.distance(&rhs));
    }
    Ok(SuiteReport::against(name, cx.samples, worst, INVARIANCE_TOL))
}

fn flat_sharp_isomorphism(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut worst = flag(real_rank(cx.form.gram(), cx.tol) != cx.algebra.dim());
    for i in 0..cx.samples {
        let x = random_element(&cx.algebra, &mut rng(cx, name, i));
        let back = sharp(&cx.form, &flat(&cx.form, &x)?)?;
        worst = worst.max(back.distance(&x));
    }
    Ok(SuiteReport::against(name, cx.samples, worst, ISOMORPHISM_TOL))
}

/// Descriptors agree across random conjugates of each test element, and
/// test elements with different spectra get different descriptors.
fn descriptor_invariance(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let mut elements = normal_forms(cx)?;
    elements.push(AlgebraElement::zero(&cx.algebra));
    elements.push(random_element(&cx.algebra, &mut rng(cx, name, usize::MAX)));

    let mut worst: f64 = 0.0;
    let mut descriptors = Vec::new();
    let mut checked = 0;
    for (e, x) in elements.iter().enumerate() {
        let reference = classify(x, None)?;
        let scale = x.norm().max(1.0);
        for i in 0..cx.samples {
            let mut r = sample_rng(cx.seed, stream_id(name), ((e as u64) << 32) | i as u64);
            let g = random_group_element(&cx.algebra, &mut r)?;
            let conjugate = classify(&g.act(x)?, None)?;
            if conjugate.multiplicities != reference.multiplicities || conjugate.flag_type != reference.flag_type {
                worst = worst.max(1.0);
            }
            let deviation = reference
                .spectrum
                .iter()
                .zip(&conjugate.spectrum)
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
            worst = worst.max(deviation / scale);
            checked += 1;
        }
        descriptors.push((reference, default_cluster_tol(x)));
    }
    for (a, (da, ta)) in descriptors.iter().enumerate() {
        for (db, tb) in &descriptors[a + 1..] {
            if da.spectrum != db.spectrum && da.matches(db, ta.max(*tb)) {
                worst = worst.max(1.0);
            }
        }
    }
    Ok(SuiteReport::against(name, checked, worst, INVARIANCE_TOL))
}

fn dimension_identities(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let n = cx.algebra.matrix_size();
    let group_dim = cx.algebra.kind().group_dim(n, cx.algebra.dim());
    let points = base_points(cx, name)?;
    let mut failures = 0usize;
    for h in &points {
        let d = classify(h, None)?;
        let distinct = d.multiplicities.iter().all(|&m| m == 1);
        let ok = d.orbit_dim == orbit_dim_by_rank(h)
            && d.orbit_dim + d.isotropy_dim == group_dim
            && d.orbit_dim % 2 == 0
            && (!distinct || d.orbit_dim == n * n - n);
        failures += usize::from(!ok);
    }
    Ok(SuiteReport::against(name, points.len(), failures as f64, 0.0))
}

fn tangent_basis_size(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let points = base_points(cx, name)?;
    let mut failures = 0usize;
    for h in &points {
        failures += usize::from(tangent_basis(h).len() != classify(h, None)?.orbit_dim);
    }
    Ok(SuiteReport::against(name, points.len(), failures as f64, 0.0))
}

/// Antisymmetry and bilinearity of `ω_h`, `Ω_h` and the KKS form.
fn antisymmetry_bilinearity(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let ctx = kks_ctx(cx)?;
    let form = ctx.form();
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let h = random_element(&cx.algebra, &mut r);
        let x1 = random_element(&cx.algebra, &mut r);
        let x2 = random_element(&cx.algebra, &mut r);
        let y = random_element(&cx.algebra, &mut r);
        let (a, b): (f64, f64) = (
            rand::Rng::gen_range(&mut r, -1.0..=1.0),
            rand::Rng::gen_range(&mut r, -1.0..=1.0),
        );
        let mix = x1.combine(a, &x2, b)?;

        let w = |p: &AlgebraElement, q: &AlgebraElement| omega_h(form, &h, p, q);
        worst = worst.max((w(&x1, &y)? + w(&y, &x1)?).abs());
        worst = worst.max((w(&mix, &y)? - a * w(&x1, &y)? - b * w(&x2, &y)?).abs());

        let beta = flat(form, &h)?;
        let k = |p: &AlgebraElement, q: &AlgebraElement| kks(ctx, &beta, p, q);
        worst = worst.max((k(&x1, &y)? + k(&y, &x1)?).abs());
        worst = worst.max((k(&mix, &y)? - a * k(&x1, &y)? - b * k(&x2, &y)?).abs());

        let t = |p: &AlgebraElement| -> Result<_> { solve_tangent_preimage(&h, &h.bracket(p)?) };
        let (u1, u2, v, um) = (t(&x1)?, t(&x2)?, t(&y)?, t(&mix)?);
        let o = |p, q| omega_orbit(ctx, p, q);
        worst = worst.max((o(&u1, &v)? + o(&v, &u1)?).abs());
        worst = worst.max((o(&um, &v)? - a * o(&u1, &v)? - b * o(&u2, &v)?).abs());
    }
    Ok(SuiteReport::against(name, cx.samples, worst, ALGEBRAIC_TOL))
}

fn omega_invariance(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let form = kks_ctx(cx)?.form();
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let g = random_group_element(&cx.algebra, &mut r)?;
        let h = random_element(&cx.algebra, &mut r);
        let x = random_element(&cx.algebra, &mut r);
        let y = random_element(&cx.algebra, &mut r);
        let moved = omega_h(form, &g.act(&h)?, &g.act(&x)?, &g.act(&y)?)?;
        worst = worst.max((moved - omega_h(form, &h, &x, &y)?).abs());
    }
    Ok(SuiteReport::against(name, cx.samples, worst, SYMPLECTIC_TOL))
}

/// `ker ω_h` and `ker ad(h)` have equal dimension and span the same space,
/// and every kernel vector commutes with `h`.
fn omega_kernel_suite(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let form = kks_ctx(cx)?.form();
    let d = cx.algebra.dim();
    let points = base_points(cx, name)?;
    let mut worst: f64 = 0.0;
    for h in &points {
        let kernel = omega_kernel(form, h)?;
        let centralizer = svd(&h.ad_matrix()).null_space(cx.tol);
        let mut columns: Vec<Vec<f64>> = kernel.iter().map(|k| k.coeffs().to_vec()).collect();
        columns.extend(centralizer.iter().cloned());
        let joint = if columns.is_empty() {
            0
        } else {
            real_rank(&RealMatrix::from_columns(d, &columns), cx.tol)
        };
        worst = worst.max(flag(kernel.len() != centralizer.len() || joint != kernel.len()));
        for k in &kernel {
            worst = worst.max(h.bracket(k)?.norm());
        }
    }
    Ok(SuiteReport::against(name, points.len(), worst, SYMPLECTIC_TOL))
}

fn omega_well_defined(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let ctx = kks_ctx(cx)?;
    let points = base_points(cx, name)?;
    let mut worst: f64 = 0.0;
    for (i, h) in points.iter().enumerate() {
        let mut r = sample_rng(cx.seed, stream_id(name), (1u64 << 32) | i as u64);
        let kernel = omega_kernel(ctx.form(), h)?;
        let mut shift = || -> Result<AlgebraElement> {
            kernel.iter().try_fold(AlgebraElement::zero(&cx.algebra), |acc, k| {
                acc.add(&k.scale(rand::Rng::gen_range(&mut r, -1.0..=1.0)))
            })
        };
        let x = random_element(&cx.algebra, &mut rng(cx, name, 2 * i + points.len()));
        let y = random_element(&cx.algebra, &mut rng(cx, name, 2 * i + 1 + points.len()));
        let u = solve_tangent_preimage(h, &h.bracket(&x)?)?;
        let w = solve_tangent_preimage(h, &h.bracket(&y)?)?;
        let base = omega_orbit(ctx, &u, &w)?;
        let shifted = omega_orbit(ctx, &u.shifted(&shift()?)?, &w.shifted(&shift()?)?)?;
        worst = worst.max((shifted - base).abs());
    }
    Ok(SuiteReport::against(name, points.len(), worst, SYMPLECTIC_TOL))
}

fn omega_closed(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let ctx = kks_ctx(cx)?;
    let mut worst: f64 = 0.0;
    for i in 0..cx.samples {
        let mut r = rng(cx, name, i);
        let [h, x, y, z] = std::array::from_fn(|_| random_element(&cx.algebra, &mut r));
        worst = worst.max(d_omega_orbit(ctx, &h, &x, &y, &z)?.abs());
    }
    Ok(SuiteReport::against(name, cx.samples, worst, SYMPLECTIC_TOL))
}

/// The Gram matrix of `Ω_h` on the tangent basis at `h` has full rank equal
/// to the orbit dimension.
fn omega_nondegenerate(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let ctx = kks_ctx(cx)?;
    let points = base_points(cx, name)?;
    let mut failures = 0usize;
    for h in &points {
        let orbit_dim = if cx.classifiable() {
            classify(h, None)?.orbit_dim
        } else {
            orbit_dim_by_rank(h)
        };
        let tangents = tangent_basis(h)
            .iter()
            .map(|v| solve_tangent_preimage(h, v))
            .collect::<Result<Vec<_>>>()?;
        let k = tangents.len();
        let mut gram = RealMatrix::zeros(k, k);
        for a in 0..k {
            for b in 0..k {
                gram[(a, b)] = omega_orbit(ctx, &tangents[a], &tangents[b])?;
            }
        }
        let rank = if k == 0 {
            0
        } else {
            real_rank(&gram, Tolerance::default())
        };
        failures += usize::from(rank != orbit_dim || k != orbit_dim);
    }
    Ok(SuiteReport::against(name, points.len(), failures as f64, 0.0))
}

/// KKS against `sign·Ω_h` at several noncentral base points. The reported
/// sign is the one observed at every base point, or `0` if they disagree.
/// Abelian algebras have no noncentral points and pass with no samples.
fn pullback(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let ctx = kks_ctx(cx)?;
    let mut points = if cx.classifiable() {
        normal_forms(cx)?
    } else {
        Vec::new()
    };
    points.extend((0..PULLBACK_BASES).map(|i| random_element(&cx.algebra, &mut rng(cx, name, i))));
    points.retain(|h| orbit_dim_by_rank(h) > 0);

    let mut worst: f64 = 0.0;
    let mut signs = Vec::new();
    let mut samples = 0;
    for (i, h) in points.iter().enumerate() {
        let report = pullback_compare(ctx, h, cx.samples, cx.seed.wrapping_add(i as u64))?;
        worst = worst.max(report.max_residual);
        signs.push(report.sign);
        samples += report.samples;
    }
    let sign = match signs.first() {
        Some(&s) if signs.iter().all(|&t| t == s) => s,
        _ => 0,
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        samples,
        max_residual: worst,
        sign,
        pass: points.is_empty() || (sign == ctx.sign() && worst <= PULLBACK_TOL),
    })
}

/// The induced orbit map applied to `classify(X)` agrees with the coadjoint
/// descriptor of `B♭(X)`.
fn commuting_square(cx: &SuiteContext, name: &'static str) -> Result<SuiteReport> {
    let ctx = kks_ctx(cx)?;
    let points = base_points(cx, name)?;
    let mut worst: f64 = 0.0;
    for x in &points {
        let via_orbits = induced_orbit_map(ctx, &classify(x, None)?)?;
        let via_flat = coadjoint_descriptor(&flat(ctx.form(), x)?, None)?;
        let scale = norm(&via_flat.spectrum).max(1.0);
        if !via_orbits.matches(&via_flat, 1e-8 * scale) {
            worst = worst.max(1.0);
        }
        let deviation = via_orbits
            .spectrum
            .iter()
            .zip(&via_flat.spectrum)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        worst = worst.max(deviation / scale);
    }
    Ok(SuiteReport::against(name, points.len(), worst, SYMPLECTIC_TOL))
}
