use orbitkit_core::lie::io::{parse_algebra, AlgebraFile};
use orbitkit_core::lie::{flow_point, preset, validate, AlgebraElement, GroupElement, LieAlgebra};
use orbitkit_core::numerics::{Complex64, ComplexMatrix};
use orbitkit_core::sampling::{random_element, random_group_element, sample_rng};
use orbitkit_core::Error;
use proptest::prelude::*;

/// Levi-Civita symbol on {0, 1, 2}.
fn epsilon(i: usize, j: usize, k: usize) -> f64 {
    let (i, j, k) = (i as f64, j as f64, k as f64);
    (i - j) * (j - k) * (k - i) / 2.0
}

#[test]
fn su2_structure_constants_are_levi_civita() {
    let su2 = preset("su", 2).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(su2.structure_constant(i, j, k), epsilon(i, j, k), "c[{i}][{j}][{k}]");
            }
        }
    }
}

#[test]
fn su2_basis_is_minus_half_i_pauli() {
    let su2 = preset("su", 2).unwrap();
    let z = Complex64::new(0.0, 0.0);
    let h = Complex64::new(0.0, -0.5);
    let pauli_1 = ComplexMatrix::from_rows(&[vec![z, h], vec![h, z]]).unwrap();
    assert!(su2.basis()[0].distance(&pauli_1) < 1e-15);
}

#[test]
fn preset_dimensions() {
    for n in 1..=4 {
        assert_eq!(preset("u", n).unwrap().dim(), n * n);
        assert_eq!(preset("su", n).unwrap().dim(), n * n - 1);
    }
    for n in 2..=5 {
        assert_eq!(preset("so", n).unwrap().dim(), n * (n - 1) / 2);
    }
    assert!(matches!(preset("sp", 2), Err(Error::UnknownPreset(_))));
    assert!(matches!(preset("so", 1), Err(Error::BadDimension { .. })));
}

#[test]
fn presets_validate() {
    for (name, n) in [("u", 1), ("u", 3), ("su", 2), ("su", 4), ("so", 3), ("so", 5)] {
        let report = validate(&preset(name, n).unwrap());
        assert!(report.pass, "{name}({n}): {:?}", report.failures);
    }
}

#[test]
fn tampered_constants_fail_jacobi_or_antisymmetry() {
    let su2 = preset("su", 2).unwrap();
    let mut c = su2.structure_constants();
    c[0][1][2] += 0.1;
    let tampered = LieAlgebra::with_structure_constants("tampered", su2.kind(), 2, su2.basis().to_vec(), &c).unwrap();
    let report = validate(&tampered);
    assert!(!report.pass);
    assert!(report.antisymmetry >= 0.1 - 1e-15);
}

#[test]
fn file_round_trip_and_declared_drift() {
    let su3 = preset("su", 3).unwrap();
    let mut file = AlgebraFile::from_algebra(&su3);
    file.structure_constants = Some(su3.structure_constants());
    let json = serde_json::to_string(&file).unwrap();
    let loaded = parse_algebra(&json).unwrap();
    assert_eq!(loaded.algebra.kind(), su3.kind());
    assert_eq!(loaded.declared_drift(), Some(0.0));

    file.structure_constants.as_mut().unwrap()[1][2][3] -= 0.25;
    let loaded = parse_algebra(&serde_json::to_string(&file).unwrap()).unwrap();
    assert!((loaded.declared_drift().unwrap() - 0.25).abs() < 1e-12);
    assert!(matches!(parse_algebra("{\"name\": 1}"), Err(Error::Json(_))));
}

#[test]
fn one_parameter_subgroup_of_e3() {
    let su2 = preset("su", 2).unwrap();
    let e3 = AlgebraElement::basis(&su2, 2);
    let id = flow_point(&e3, 0.0).unwrap();
    assert!(id.matrix().distance(&ComplexMatrix::identity(2)) < 1e-15);
    let composed = flow_point(&e3, 0.4)
        .unwrap()
        .compose(&flow_point(&e3, 1.1).unwrap())
        .unwrap();
    assert!(composed.matrix().distance(flow_point(&e3, 1.5).unwrap().matrix()) < 1e-9);
    // exp(2π e₃) = −I since e₃ = diag(−i/2, i/2)
    let full = flow_point(&e3, std::f64::consts::TAU).unwrap();
    assert!(full.matrix().distance(&ComplexMatrix::identity(2).scale_real(-1.0)) < 1e-12);
}

#[test]
fn adjoint_action_fixes_generator_and_rotates_plane() {
    let su2 = preset("su", 2).unwrap();
    let e = |i| AlgebraElement::basis(&su2, i);
    let g = flow_point(&e(2), std::f64::consts::FRAC_PI_2).unwrap();
    assert!(g.act(&e(2)).unwrap().distance(&e(2)) < 1e-14);
    // Ad(exp(θe₃))e₁ = cos θ e₁ + sin θ e₂ from [e₃, e₁] = e₂
    assert!(g.act(&e(0)).unwrap().distance(&e(1)) < 1e-14);
    assert!(GroupElement::identity(&su2).act(&e(0)).unwrap().distance(&e(0)) == 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_matches_matrix_commutator(seed in any::<u64>(), which in 0usize..6) {
        let (name, n) = [("u", 2), ("u", 3), ("su", 2), ("su", 3), ("so", 3), ("so", 4)][which];
        let algebra = preset(name, n).unwrap();
        let mut rng = sample_rng(seed, 0, 0);
        let x = random_element(&algebra, &mut rng);
        let y = random_element(&algebra, &mut rng);
        let direct = x.matrix().commutator(&y.matrix());
        prop_assert!(x.bracket(&y).unwrap().matrix().distance(&direct) <= 1e-10);
        prop_assert_eq!(x.bracket(&x).unwrap().norm(), 0.0);
    }

    #[test]
    fn adjoint_is_a_homomorphism(seed in any::<u64>()) {
        let su3 = preset("su", 3).unwrap();
        let mut rng = sample_rng(seed, 1, 0);
        let g1 = random_group_element(&su3, &mut rng).unwrap();
        let g2 = random_group_element(&su3, &mut rng).unwrap();
        let x = random_element(&su3, &mut rng);
        let nested = g1.act(&g2.act(&x).unwrap()).unwrap();
        let composed = g1.compose(&g2).unwrap().act(&x).unwrap();
        prop_assert!(nested.distance(&composed) <= 1e-9);
    }
}
