//! Stationary-state and ensemble moments against their exact values.

use std::f64::consts::PI;

use ucr_core::classical::{
    classical_density, classical_moments_closed_form, classical_moments_quadrature, ClassicalEnsemble,
};
use ucr_core::quantum::{
    commutator_bound, density_grid, eigen_level, quantum_moments_closed_form, quantum_moments_quadrature,
    raw_momentum_integral, wavefunction, wavefunction_norm, BouncerState,
};
use ucr_core::system::lookup;
use ucr_core::{PotentialModel, QuadratureSpec};

fn unit(name: &str) -> PotentialModel {
    lookup(name).unwrap().default_model()
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn levels(name: &str) -> std::ops::RangeInclusive<u32> {
    match name {
        "ho" => 0..=20,
        "well" => 1..=50,
        _ => 1..=10,
    }
}

#[test]
fn wavefunctions_are_normalized() {
    for name in ["ho", "well", "bouncer"] {
        for n in levels(name) {
            let l = eigen_level(&unit(name), n).unwrap();
            let norm = wavefunction_norm(&l, &spec()).unwrap();
            assert!((norm - 1.0).abs() < 1e-9, "{name} n={n}: {norm}");
        }
    }
}

#[test]
fn momentum_boundary_term_vanishes() {
    for name in ["ho", "well", "bouncer"] {
        for n in levels(name) {
            let l = eigen_level(&unit(name), n).unwrap();
            let raw = raw_momentum_integral(&l, &spec()).unwrap();
            assert!(raw.abs() < 1e-12, "{name} n={n}: {raw:e}");
        }
    }
}

#[test]
fn robertson_inequality_holds() {
    for name in ["ho", "well", "bouncer"] {
        for n in levels(name) {
            let l = eigen_level(&unit(name), n).unwrap();
            let m = quantum_moments_quadrature(&l, &spec()).unwrap();
            assert!(m.product >= commutator_bound(&l) - 1e-12, "{name} n={n}");
        }
    }
}

#[test]
fn oscillator_product_is_a_quarter() {
    for n in 0..=20 {
        let l = eigen_level(&unit("ho"), n).unwrap();
        let m = quantum_moments_quadrature(&l, &spec()).unwrap();
        assert!((m.product - 0.25).abs() < 1e-9, "n={n}");
        assert!(m.max_abs_deviation(&quantum_moments_closed_form(&l)) < 1e-9);
    }
    let ground = eigen_level(&unit("ho"), 0).unwrap();
    assert!((commutator_bound(&ground) - 0.25).abs() < 1e-12);
}

#[test]
fn well_approaches_a_third_from_below() {
    let mut last = 0.0;
    for n in (1..=60).chain([100, 300, 1000]) {
        let l = eigen_level(&unit("well"), n).unwrap();
        let m = quantum_moments_quadrature(&l, &spec()).unwrap();
        let npi2 = (n as f64 * PI).powi(2);
        assert!((m.mean_x2 - (1.0 / 3.0 - 2.0 / npi2)).abs() < 1e-10, "n={n}");
        assert!((m.mean_x2 - 1.0 / 3.0).abs() < 3.0 / npi2);
        assert!((m.mean_p2 - 1.0).abs() < 1e-10);
        assert!(m.product > last && m.product < 1.0 / 3.0, "n={n}");
        last = m.product;
    }
}

#[test]
fn bouncer_moments_and_normalization_identity() {
    for n in 1..=10 {
        let l = eigen_level(&unit("bouncer"), n).unwrap();
        let m = quantum_moments_quadrature(&l, &spec()).unwrap();
        assert!(m.max_abs_deviation(&quantum_moments_closed_form(&l)) < 1e-9, "n={n}");
        assert!((m.product - 4.0 / 135.0).abs() < 1e-9);
        let state = BouncerState::new(l, &spec()).unwrap();
        assert!((state.normalization / state.identity_normalization() - 1.0).abs() < 1e-8, "n={n}");
    }
    let b1 = commutator_bound(&eigen_level(&unit("bouncer"), 1).unwrap());
    assert!((b1 - 1.0 / (4.0 * 2.3381074104597670385f64.powi(3))).abs() < 1e-15);
    assert!(b1 < 4.0 / 135.0);
}

#[test]
fn classical_quadrature_matches_closed_form() {
    for name in ["ho", "well", "bouncer"] {
        let m = unit(name);
        let ens = ClassicalEnsemble::with_unit_energy(m, &spec()).unwrap();
        let q = classical_moments_quadrature(&ens, &spec()).unwrap();
        assert!(q.max_abs_deviation(&classical_moments_closed_form(&m)) < 1e-9, "{name}");
        assert!(q.mean_p.abs() < 1e-12);
        if name != "bouncer" {
            assert!(q.mean_x.abs() < 1e-12);
        }
    }
    let bb = classical_moments_closed_form(&unit("bouncer"));
    // var_x = 8/15 - (2/3)² is formed in floating point, so allow one ulp.
    assert!((bb.var_x - 4.0 / 45.0).abs() < 2e-17);
    assert_eq!(bb.var_p, 1.0 / 3.0);
    assert!((bb.product - 4.0 / 135.0).abs() < 1e-17);
}

#[test]
fn classical_support_is_exact() {
    let s = spec();
    let ho = ClassicalEnsemble::new(unit("ho"), 0.5, &s).unwrap();
    for x in [-1.0000001, 1.5, -40.0] {
        assert_eq!(classical_density(&ho, x).value, 0.0);
    }
    let well = ClassicalEnsemble::new(unit("well"), 3.0, &s).unwrap();
    assert_eq!(classical_density(&well, 0.5000001).value, 0.0);
    let b = ClassicalEnsemble::new(unit("bouncer"), 1.0, &s).unwrap();
    assert_eq!(classical_density(&b, -1e-9).value, 0.0);
    assert_eq!(classical_density(&b, 1.0 + 1e-9).value, 0.0);
}

#[test]
fn wavefunction_examples() {
    let ho = eigen_level(&unit("ho"), 0).unwrap();
    assert!((wavefunction(&ho, 0.0) - 0.751125544464942_5).abs() < 1e-15);
    let well = eigen_level(&unit("well"), 1).unwrap();
    assert!((wavefunction(&well, 0.0) - 2f64.sqrt()).abs() < 1e-15);
    for n in 1..=5 {
        assert_eq!(wavefunction(&eigen_level(&unit("bouncer"), n).unwrap(), 0.0), 0.0);
    }
}

fn trapezoid(xs: &[f64], ys: &[f64]) -> f64 {
    xs.windows(2).zip(ys.windows(2)).map(|(x, y)| 0.5 * (x[1] - x[0]) * (y[0] + y[1])).sum()
}

#[test]
fn well_density_grid_integrates_to_one() {
    for n in [1, 5, 12] {
        let l = eigen_level(&unit("well"), n).unwrap();
        let g = density_grid(&l, 1000, &spec()).unwrap();
        let xs: Vec<f64> = g.iter().map(|p| p.x_scaled).collect();
        let qm: Vec<f64> = g.iter().map(|p| p.p_qm).collect();
        let cl: Vec<f64> = g.iter().map(|p| p.p_cl).collect();
        assert!((trapezoid(&xs, &qm) - 1.0).abs() < 1e-3, "n={n}");
        assert!((trapezoid(&xs, &cl) - 1.0).abs() < 1e-3, "n={n}");
        assert!(g.iter().all(|p| (p.p_cl - 0.5).abs() < 1e-12 && !p.clipped));
    }
}

#[test]
fn grid_endpoints() {
    let g = density_grid(&eigen_level(&unit("ho"), 0).unwrap(), 3, &spec()).unwrap();
    assert!((g[1].p_qm - 1.0 / PI.sqrt()).abs() < 1e-12);
    let g = density_grid(&eigen_level(&unit("bouncer"), 1).unwrap(), 2, &spec()).unwrap();
    assert_eq!(g[0].p_qm, 0.0);
}
