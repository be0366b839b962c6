mod common;

use common::{corpus, hankel_only, max_abs, two_masses};
use perturbed_hardy::circle::{blaschke_derivative, blaschke_value};
use perturbed_hardy::duality::{DualData, MassConvention};
use perturbed_hardy::oracle::{dense_psd_check, fd_derivative, QuadratureContext};
use perturbed_hardy::spaces::{build_gram_analytic, build_gram_laurent};
use perturbed_hardy::Tolerances;

#[test]
fn hankel_gram_matches_coefficient_formula() {
    let d = hankel_only();
    let q = QuadratureContext::new(1024, 2).unwrap();
    let oracle = q.gram_analytic(d.symbol_fn(), 6, &[], &[]).unwrap();
    let gram = build_gram_analytic(&d.space(1024), 6, None, &Tolerances::default()).unwrap();
    assert!(max_abs(&(gram.entries() - &oracle)) < 1e-12);
}

#[test]
fn corpus_grams_match_quadrature() {
    let q = QuadratureContext::new(2048, 2).unwrap();
    let tol = Tolerances::default();
    for d in corpus() {
        let space = d.space(2048);
        let g = build_gram_analytic(&space, 20, None, &tol).unwrap();
        let o = q.gram_analytic(d.symbol_fn(), 20, &d.points(), &d.weights()).unwrap();
        assert!(max_abs(&(g.entries() - o)) < 1e-8, "{}", d.name);
        let g = build_gram_laurent(&space, 10, None, &tol).unwrap();
        let o = q.gram_laurent(d.symbol_fn(), 10, &d.weights()).unwrap();
        assert!(max_abs(&(g.entries() - o)) < 1e-8, "{}", d.name);
    }
}

#[test]
fn truncated_mass_gram_is_smaller() {
    let tol = Tolerances::default();
    let space = two_masses().space(1024);
    let full = build_gram_analytic(&space, 30, None, &tol).unwrap();
    let trunc = build_gram_analytic(&space.with_cutoff(1).unwrap(), 30, None, &tol).unwrap();
    assert!(dense_psd_check(&(full.entries() - trunc.entries())).unwrap() >= -1e-12);
}

#[test]
fn derivatives_match_finite_differences() {
    let tol = Tolerances::default();
    for d in corpus().into_iter().filter(|d| !d.masses.is_empty()) {
        let points = d.points();
        let dual = DualData::from_space(&d.space(2048), MassConvention::Unitary, &tol).unwrap();
        for (k, &z) in points.iter().enumerate() {
            let fd = fd_derivative(|x| blaschke_value(&points, x), z, 1e-3);
            assert!((fd - blaschke_derivative(&points, k)).norm() < 1e-7, "{}", d.name);
            let outer = dual.source_outer();
            let fd = fd_derivative(|x| blaschke_value(&points, x) / outer.eval(x), z, 1e-3);
            assert!((fd - dual.inv_t_derivatives()[k]).norm() < 1e-7, "{}", d.name);
        }
    }
}

#[test]
fn outer_value_at_origin_matches_quadrature() {
    let q = QuadratureContext::new(2048, 2).unwrap();
    for d in corpus() {
        let dual = DualData::from_space(&d.space(2048), MassConvention::Unitary, &Tolerances::default()).unwrap();
        assert!((dual.source_outer().value_at_zero() - q.outer_at_zero(d.symbol_fn())).abs() < 1e-10, "{}", d.name);
    }
}
