use std::sync::Arc;

use orbitkit_core::forms::{flat, killing_form, trace_form, BilinearForm};
use orbitkit_core::lie::{preset, AlgebraElement, LieAlgebra};
use orbitkit_core::numerics::{real_rank, svd, ComplexMatrix, RealMatrix, Tolerance};
use orbitkit_core::orbits::{classify, tangent_basis};
use orbitkit_core::sampling::{random_element, random_group_element, sample_rng};
use orbitkit_core::symplectic::{
    d_omega_orbit, induced_orbit_map, kks, omega_h, omega_kernel, omega_orbit, pullback_compare,
    solve_tangent_preimage, KksContext,
};
use orbitkit_core::Error;

fn contexts() -> Vec<KksContext> {
    vec![
        KksContext::new(killing_form(&preset("su", 2).unwrap())).unwrap(),
        KksContext::new(killing_form(&preset("su", 3).unwrap())).unwrap(),
        KksContext::new(trace_form(&preset("u", 3).unwrap())).unwrap(),
    ]
}

fn diag(algebra: &Arc<LieAlgebra>, lambdas: &[f64]) -> AlgebraElement {
    AlgebraElement::from_matrix(algebra, &ComplexMatrix::imaginary_diagonal(lambdas)).unwrap()
}

/// `ω_h(X, Y)` straight from matrices: `B(h, XY − YX)` with `B` evaluated
/// on the expanded commutator.
fn omega_oracle(form: &BilinearForm, h: &AlgebraElement, x: &AlgebraElement, y: &AlgebraElement) -> f64 {
    let commutator = x.matrix().commutator(&y.matrix());
    let bracket = AlgebraElement::from_matrix(form.algebra(), &commutator).unwrap();
    form.eval(h, &bracket).unwrap()
}

#[test]
fn worked_su2_values() {
    let ctx = &contexts()[0];
    let su2 = ctx.algebra().clone();
    let e = |i| AlgebraElement::basis(&su2, i);
    assert_eq!(omega_h(ctx.form(), &e(2), &e(0), &e(1)).unwrap(), -2.0);
    let beta = flat(ctx.form(), &e(2)).unwrap();
    assert_eq!(kks(ctx, &beta, &e(0), &e(1)).unwrap(), 2.0);
    let u = solve_tangent_preimage(&e(2), &e(2).bracket(&e(0)).unwrap()).unwrap();
    let w = solve_tangent_preimage(&e(2), &e(2).bracket(&e(1)).unwrap()).unwrap();
    assert!((omega_orbit(ctx, &u, &w).unwrap() + 2.0).abs() < 1e-15);
    assert_eq!(ctx.sign(), -1);
}

#[test]
fn omega_matches_matrix_oracle() {
    for ctx in contexts() {
        let algebra = ctx.algebra().clone();
        for idx in 0..50 {
            let mut rng = sample_rng(4, 0, idx);
            let [h, x, y] = std::array::from_fn(|_| random_element(&algebra, &mut rng));
            let got = omega_h(ctx.form(), &h, &x, &y).unwrap();
            assert!((got - omega_oracle(ctx.form(), &h, &x, &y)).abs() <= 1e-10);
        }
    }
}

#[test]
fn omega_is_invariant_and_closed() {
    for ctx in contexts() {
        let algebra = ctx.algebra().clone();
        for idx in 0..100 {
            let mut rng = sample_rng(5, 0, idx);
            let g = random_group_element(&algebra, &mut rng).unwrap();
            let [h, x, y, z] = std::array::from_fn(|_| random_element(&algebra, &mut rng));
            let before = omega_h(ctx.form(), &h, &x, &y).unwrap();
            let after = omega_h(
                ctx.form(),
                &g.act(&h).unwrap(),
                &g.act(&x).unwrap(),
                &g.act(&y).unwrap(),
            )
            .unwrap();
            assert!((before - after).abs() <= 1e-9);
            assert!(d_omega_orbit(&ctx, &h, &x, &y, &z).unwrap().abs() <= 1e-9);
            assert_eq!(d_omega_orbit(&ctx, &h, &x, &x, &z).unwrap(), 0.0);
        }
    }
}

#[test]
fn kernel_is_centralizer() {
    for ctx in contexts() {
        let algebra = ctx.algebra().clone();
        for idx in 0..30 {
            let h = random_element(&algebra, &mut sample_rng(6, 0, idx));
            let kernel = omega_kernel(ctx.form(), &h).unwrap();
            let centralizer = svd(&h.ad_matrix()).null_space(Tolerance::default());
            assert_eq!(kernel.len(), centralizer.len());
            let mut columns: Vec<Vec<f64>> = kernel.iter().map(|k| k.coeffs().to_vec()).collect();
            columns.extend(centralizer);
            let joint = real_rank(&RealMatrix::from_columns(algebra.dim(), &columns), Tolerance::default());
            assert_eq!(joint, kernel.len());
        }
    }
}

#[test]
fn omega_is_nondegenerate_on_tangent_spaces() {
    for ctx in contexts() {
        let algebra = ctx.algebra().clone();
        let n = algebra.matrix_size();
        let mut points = vec![random_element(&algebra, &mut sample_rng(7, 0, 0))];
        if n == 3 {
            points.push(diag(&algebra, &[1.0, 1.0, -2.0]));
        }
        for h in points {
            let tangents: Vec<_> = tangent_basis(&h)
                .iter()
                .map(|v| solve_tangent_preimage(&h, v).unwrap())
                .collect();
            let k = tangents.len();
            let gram = RealMatrix::from_fn(k, k, |a, b| omega_orbit(&ctx, &tangents[a], &tangents[b]).unwrap());
            assert_eq!(
                real_rank(&gram, Tolerance::default()),
                classify(&h, None).unwrap().orbit_dim
            );
        }
    }
}

#[test]
fn pullback_sign_is_global() {
    for ctx in contexts() {
        let algebra = ctx.algebra().clone();
        let h = random_element(&algebra, &mut sample_rng(8, 0, 0));
        let report = pullback_compare(&ctx, &h, 100, 1).unwrap();
        assert_eq!(report.sign, -1);
        assert!(report.max_residual <= 1e-9);
        assert!(report.pass);
        assert!(matches!(
            pullback_compare(&ctx, &AlgebraElement::zero(&algebra), 10, 1),
            Err(Error::CentralElement)
        ));
    }
}

#[test]
fn induced_map_keeps_flag_type_and_separates_orbits() {
    let ctx = &contexts()[2];
    let u3 = ctx.algebra().clone();
    let a = classify(&diag(&u3, &[1.0, 2.0, 3.0]), None).unwrap();
    let b = classify(&diag(&u3, &[1.0, 2.0, 4.0]), None).unwrap();
    let (ia, ib) = (induced_orbit_map(ctx, &a).unwrap(), induced_orbit_map(ctx, &b).unwrap());
    assert_eq!(ia.multiplicities, vec![1, 1, 1]);
    assert!(!ia.matches(&ib, 1e-8));
    let zero = classify(&AlgebraElement::zero(&u3), None).unwrap();
    assert_eq!(induced_orbit_map(ctx, &zero).unwrap().orbit_dim, 0);
}
