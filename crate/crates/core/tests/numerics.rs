use orbitkit_core::numerics::{hermitian_eig, matrix_exp, rank_with_tol, Complex64, ComplexMatrix, Tolerance};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Square matrices of size `1..=max_n` with entries in `[-1, 1] + i[-1, 1]`.
fn square(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n)
            .prop_map(move |v| ComplexMatrix::from_fn(n, n, |i, j| c(v[i * n + j].0, v[i * n + j].1)))
    })
}

fn hermitian_part(a: &ComplexMatrix) -> ComplexMatrix {
    (a + &a.adjoint()).scale_real(0.5)
}

fn skew_part(a: &ComplexMatrix) -> ComplexMatrix {
    (a - &a.adjoint()).scale_real(0.5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn eigen_decomposition_reconstructs(a in square(8)) {
        let h = hermitian_part(&a);
        let tol = Tolerance::default();
        let eig = hermitian_eig(&h, tol).unwrap();
        let bound = 10.0 * tol.threshold(h.frobenius_norm());
        prop_assert!(eig.reconstruct().distance(&h) <= bound);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        let n = h.rows();
        let gram = &eig.vectors.adjoint() * &eig.vectors;
        prop_assert!(gram.distance(&ComplexMatrix::identity(n)) <= 1e-10);
    }

    #[test]
    fn exp_one_parameter_group(a in square(5), s in -1.0f64..1.0, t in -1.0f64..1.0) {
        let lhs = &matrix_exp(&a.scale_real(s)).unwrap() * &matrix_exp(&a.scale_real(t)).unwrap();
        let rhs = matrix_exp(&a.scale_real(s + t)).unwrap();
        prop_assert!(lhs.distance(&rhs) <= 1e-9);
    }

    #[test]
    fn rank_is_invariant_under_unitary_equivalence(
        a in square(5),
        u_gen in square(5),
        v_gen in square(5),
        drop in 0usize..5,
    ) {
        let n = a.rows();
        // force rank deficiency by zeroing columns past n - drop
        let keep = n.saturating_sub(drop);
        let a = ComplexMatrix::from_fn(n, n, |i, j| if j < keep { a[(i, j)] } else { c(0.0, 0.0) });
        let unitary = |g: &ComplexMatrix| {
            let g = ComplexMatrix::from_fn(n, n, |i, j| if i < g.rows() && j < g.cols() { g[(i, j)] } else { c(0.0, 0.0) });
            matrix_exp(&skew_part(&g)).unwrap()
        };
        let (u, v) = (unitary(&u_gen), unitary(&v_gen));
        let tol = Tolerance::default();
        let moved = &(&u * &a) * &v;
        prop_assert_eq!(rank_with_tol(&a, tol), rank_with_tol(&moved, tol));
    }
}

#[test]
fn two_by_two_eigenvalues_match_closed_form() {
    // [[a, b], [b̄, d]] has eigenvalues (a+d)/2 ± sqrt(((a-d)/2)² + |b|²)
    let (a, d, b) = (1.5, -0.25, c(0.3, -0.8));
    let h = ComplexMatrix::from_rows(&[vec![c(a, 0.0), b], vec![b.conj(), c(d, 0.0)]]).unwrap();
    let mid = (a + d) / 2.0;
    let radius = (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
    let eig = hermitian_eig(&h, Tolerance::default()).unwrap();
    assert!((eig.values[0] - (mid - radius)).abs() < 1e-14);
    assert!((eig.values[1] - (mid + radius)).abs() < 1e-14);
}

#[test]
fn exp_of_diagonal_and_rotation_generator() {
    let d = ComplexMatrix::from_rows(&[vec![c(0.0, 2.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]]).unwrap();
    let e = matrix_exp(&d).unwrap();
    assert!((e[(0, 0)] - c(2.0f64.cos(), 2.0f64.sin())).norm() < 1e-14);
    assert!((e[(1, 1)] - c((-1.0f64).exp(), 0.0)).norm() < 1e-14);

    // exp(θ[[0,-1],[1,0]]) is the rotation by θ, also for a large θ
    let theta = 7.3;
    let j = ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(-theta, 0.0)], vec![c(theta, 0.0), c(0.0, 0.0)]]).unwrap();
    let r = matrix_exp(&j).unwrap();
    assert!((r[(0, 0)].re - theta.cos()).abs() < 1e-12);
    assert!((r[(1, 0)].re - theta.sin()).abs() < 1e-12);
    assert!(r.unitarity_defect() < 1e-12);
}

#[test]
fn rank_of_outer_products() {
    let u = [c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 1.0)];
    let v = [c(0.5, 0.5), c(1.0, 0.0), c(0.0, -3.0)];
    let w = [c(2.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
    let rank_one = ComplexMatrix::from_fn(3, 3, |i, j| u[i] * v[j].conj());
    let rank_two = ComplexMatrix::from_fn(3, 3, |i, j| u[i] * v[j].conj() + w[i] * u[j].conj());
    let tol = Tolerance::default();
    assert_eq!(rank_with_tol(&rank_one, tol), 1);
    assert_eq!(rank_with_tol(&rank_two, tol), 2);
    assert_eq!(rank_with_tol(&ComplexMatrix::zeros(3, 3), tol), 0);
    assert_eq!(rank_with_tol(&ComplexMatrix::identity(4), tol), 4);
}
