mod common;

use common::corpus;
use perturbed_hardy::circle::FourierCoeffs;
use perturbed_hardy::duality::{check_hat_membership, theorem_check, DualData, L2Metric, MassConvention, Side};
use perturbed_hardy::{Tolerances, C64};

fn tol() -> Tolerances {
    Tolerances::default()
}

#[test]
fn embedded_polynomials_are_members() {
    for d in corpus() {
        let space = d.space(1024);
        let metric = L2Metric::new(&space, Side::Primal).unwrap();
        let p = FourierCoeffs::new(0, vec![C64::new(1.0, 0.5), C64::new(-0.3, 0.0), C64::new(0.0, 2.0)]);
        let v = metric.embed(&p).unwrap();
        let r = check_hat_membership(&v, &space, &tol()).unwrap();
        assert!(r.holds, "{}: {r:?}", d.name);
        if !v.mass_values.is_empty() {
            let mut w = v.clone();
            let delta = C64::new(0.0, 1e-3);
            w.mass_values[0] += delta;
            let r = check_hat_membership(&w, &space, &tol()).unwrap();
            assert!((r.mass_mismatch - delta.norm()).abs() < 1e-10, "{}", d.name);
            assert!(!r.holds);
        }
    }
}

#[test]
fn antianalytic_vector_is_not_a_member() {
    let space = common::classical().space(256);
    let metric = L2Metric::new(&space, Side::Primal).unwrap();
    let v = metric.embed(&FourierCoeffs::new(-1, vec![C64::new(1.0, 0.0)])).unwrap();
    let r = check_hat_membership(&v, &space, &tol()).unwrap();
    assert!((r.antianalytic_residual - 1.0).abs() < 1e-12 && !r.holds);
}

#[test]
fn dual_data_invariants_on_corpus() {
    for d in corpus() {
        let space = d.space(4096);
        let dual = DualData::from_space(&space, MassConvention::Unitary, &tol()).unwrap();
        assert!(dual.modulus_residual() < 1e-10, "{}", d.name);
        assert!(dual.outer_reflection_residual() < 1e-8, "{}", d.name);
        let back = DualData::from_space(dual.target(), MassConvention::Unitary, &tol()).unwrap();
        let symbol_gap = space
            .symbol()
            .values()
            .iter()
            .zip(back.dual_symbol().values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(symbol_gap < 1e-8, "{}: {symbol_gap}", d.name);
        for (w, v) in space.masses().weights().iter().zip(back.dual_masses().weights()) {
            assert!((w - v).abs() < 1e-8 * w, "{}", d.name);
        }
    }
}

#[test]
fn complement_is_orthogonal_to_blaschke_multiples() {
    for d in corpus() {
        let space = d.space(4096);
        let dual = DualData::from_space(&space, MassConvention::Unitary, &tol()).unwrap();
        let r = theorem_check(&space, &dual, 32, None, &tol()).unwrap();
        assert!(r.complement_orthogonality < 1e-8, "{}: {r:?}", d.name);
        assert!(r.converse_residual < 1e-8, "{}: {r:?}", d.name);
        assert!(r.unitarity_residual < 1e-8, "{}: {r:?}", d.name);
        assert!(r.membership_residual < 1e-6, "{}: {r:?}", d.name);
    }
}
