use gammainv::pickrep::{density, density_table, pick_parameters, stieltjes_eval};
use gammainv::{extended_inverse, BranchInterval, ComplexValue, GridScheme, QuadratureConfig};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

#[test]
fn tolerance_refinement_converges() {
    let z = c(1.0, 0.5);
    let coarse = stieltjes_eval(1, z, &QuadratureConfig::with_tol(1e-6)).unwrap();
    let fine = stieltjes_eval(1, z, &QuadratureConfig::with_tol(1e-11)).unwrap();
    assert!((coarse - fine).norm() < 1e-6);
}

#[test]
fn densities_are_positive_on_tables() {
    for k in 0..=5 {
        for scheme in [GridScheme::Uniform, GridScheme::EndpointRefined] {
            let t = density_table(k, 32, scheme).unwrap();
            let i = BranchInterval::new(k).unwrap();
            assert!(t.nodes.iter().all(|&(x, d)| d > 0.0 && x > i.lo && x < i.hi && x != 0.0));
        }
    }
}

#[test]
fn odd_branches_are_monotone_even_ones_too() {
    for k in 1..=4 {
        let t = density_table(k, 64, GridScheme::EndpointRefined).unwrap();
        assert_eq!(t.monotone_violations(), 0, "k={k}");
    }
}

#[test]
fn table_is_deterministic() {
    let a = density_table(2, 48, GridScheme::EndpointRefined).unwrap().to_csv();
    let b = density_table(2, 48, GridScheme::EndpointRefined).unwrap().to_csv();
    assert_eq!(a, b);
}

#[test]
fn point_mass_vanishes_for_higher_branches() {
    let p = pick_parameters(5).unwrap();
    assert!(p.c_fit.abs() < 1e-4);
    assert!((p.b + 5.0).abs() < 1e-3);
}

#[test]
fn density_mass_matches_large_argument_decay() {
    // G_k(z) + k ≈ −(1/z)∫d_k for large |z|, so ∫d_k = lim −z(G_k(z) + k).
    let k = 1;
    let z = c(0.0, 1e4);
    let g = extended_inverse(k, z).unwrap();
    let mass = (-(g + k as f64) * z).re;
    let i = BranchInterval::new(k).unwrap();
    let n = 4000;
    // Midpoint rule on the substituted variable t = e(1 − v²), crude but independent.
    let mut sum = 0.0;
    for e in [i.lo, i.hi] {
        for j in 0..n {
            let v = (j as f64 + 0.5) / n as f64;
            let t = e * (1.0 - v * v);
            sum += density(k, t).unwrap() * 2.0 * v * e.abs() / n as f64;
        }
    }
    assert!((sum - mass).abs() < 1e-3 * mass, "{sum} vs {mass}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn representation_matches_inverse(k in 0i32..=4, re in -30.0f64..30.0, im in 0.05f64..30.0) {
        let z = c(re, im);
        let rep = stieltjes_eval(k, z, &QuadratureConfig::with_tol(1e-9)).unwrap();
        let direct = extended_inverse(k, z).unwrap();
        prop_assert!((rep - direct).norm() < 1e-6);
    }
}
