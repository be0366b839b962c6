mod common;

use common::{hankel_only, mass_only, two_masses};
use perturbed_hardy::duality::{duality_identity, DualData, MassConvention};
use perturbed_hardy::kernels::{asymptotic_sweep, kernel_at_origin, kernel_at_point, kernel_value, sandwich_check};
use perturbed_hardy::spaces::build_gram_analytic;
use perturbed_hardy::{Tolerances, C64};

fn tol() -> Tolerances {
    Tolerances::default()
}

#[test]
fn single_mass_kernel_is_sqrt_two_fifths() {
    for degree in [40, 48, 64] {
        let k = kernel_value(&mass_only().space(4096), degree, None, &tol()).unwrap();
        assert!((k - (0.4f64).sqrt()).abs() < 1e-10, "M = {degree}: {k}");
    }
}

#[test]
fn hankel_kernel_is_one_over_outer_value() {
    let k = kernel_value(&hankel_only().space(4096), 48, None, &tol()).unwrap();
    assert!((k - 1.25).abs() < 1e-12);
}

#[test]
fn mass_trace_values() {
    let trace = asymptotic_sweep(&mass_only().space(4096), 12, 48, None, 1e-3, &tol()).unwrap();
    let expected = [0.632455532033676, 0.790569415042095, 0.921954445729289];
    for (e, x) in trace.entries.iter().zip(expected) {
        assert!((e.value - x).abs() < 1e-12, "n = {}", e.n);
    }
    assert!(trace.is_nondecreasing(0.0));
}

#[test]
fn hankel_trace_is_one_after_first_shift() {
    let trace = asymptotic_sweep(&hankel_only().space(4096), 6, 48, None, 1e-3, &tol()).unwrap();
    assert!((trace.entries[0].value - 1.25).abs() < 1e-12);
    for e in &trace.entries[1..] {
        assert!((e.value - 1.0).abs() < 1e-14);
    }
}

#[test]
fn mass_point_kernel_reproduces_z() {
    let gram = build_gram_analytic(&mass_only().space(1024), 40, None, &tol()).unwrap();
    let k = kernel_at_point(&gram, C64::new(0.5, 0.0)).unwrap();
    let z = nalgebra::DVector::from_fn(41, |m, _| C64::new(if m == 1 { 1.0 } else { 0.0 }, 0.0));
    assert!((gram.inner(&z, &k.as_dvector()) - C64::new(0.5, 0.0)).norm() < 1e-10);
    let origin = kernel_at_origin(&gram).unwrap();
    let at_zero = kernel_at_point(&gram, C64::new(0.0, 0.0)).unwrap();
    assert_eq!(origin, at_zero);
}

#[test]
fn mass_identity_closed_forms() {
    let space = mass_only().space(4096);
    let dual = DualData::from_space(&space, MassConvention::Unitary, &tol()).unwrap();
    assert!((dual.dual_masses().weights()[0] - 3.0 / 16.0).abs() < 1e-14);
    assert!((dual.t_at_zero() - 2.0).abs() < 1e-14);
    let r = duality_identity(&space, &dual, 40, None, &tol()).unwrap();
    assert!((r.k_shifted - (5.0f64 / 17.0).sqrt()).abs() < 1e-12);
    assert!((r.k_dual - (17.0f64 / 20.0).sqrt()).abs() < 1e-12);
    assert!(r.residual < 1e-9);
}

#[test]
fn printed_convention_breaks_the_identity() {
    let space = mass_only().space(4096);
    let dual = DualData::from_space(&space, MassConvention::Printed, &tol()).unwrap();
    assert!((dual.dual_masses().weights()[0] - 16.0 / 27.0).abs() < 1e-14);
    let r = duality_identity(&space, &dual, 40, None, &tol()).unwrap();
    assert!(r.residual > 1e-2, "{}", r.residual);
}

#[test]
fn hankel_identity_closed_forms() {
    let space = hankel_only().space(4096);
    let dual = DualData::from_space(&space, MassConvention::Unitary, &tol()).unwrap();
    let r = duality_identity(&space, &dual, 40, None, &tol()).unwrap();
    assert!((r.t_at_zero - 0.8).abs() < 1e-12);
    assert!((r.k_shifted - 1.25).abs() < 1e-12 && (r.k_dual - 1.0).abs() < 1e-12);
    assert!(r.residual < 1e-10);
}

#[test]
fn scaled_hankel_kernel() {
    let r = sandwich_check(&hankel_only().space(4096), 0, 0.5, 0, 48, None, &tol()).unwrap();
    assert!((r.k_full - 1.25).abs() < 1e-12);
    assert!((r.k_scaled - 1.0 / (1.0f64 - 0.09).sqrt()).abs() < 1e-12);
    assert!((r.k_scaled - 1.0483).abs() < 1e-4);
}

#[test]
fn truncating_masses_raises_the_kernel() {
    let r = sandwich_check(&two_masses().space(4096), 1, 0.9, 0, 40, None, &tol()).unwrap();
    assert!(r.k_truncated >= r.k_full);
    assert!((r.k_truncated - (0.4f64).sqrt()).abs() < 1e-10);
}

#[test]
fn shifted_weights() {
    let eff = mass_only().space(64).with_shift(2).effective_data().unwrap();
    assert!((eff.weights[0] - 3.0 / 16.0).abs() < 1e-15);
}
