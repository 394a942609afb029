mod common;

use common::{fixture, rf};
use hecke_core::poly::{Rational, VarSet};
use hecke_core::qexp::{eisenstein_series, Form, QSeries};
use hecke_core::torsion::{cubic_rep, regular_rep, BasisKind, TorsionBasis, TorsionElement};
use hecke_core::velu::{has_weight, isogenous_coefficients, AlgebraElement};
use hecke_testkit::fixtures;

fn torsion(u: &AlgebraElement) -> &TorsionElement {
    match u {
        AlgebraElement::Torsion(t) => t,
        AlgebraElement::Cubic(_) => panic!("expected a torsion element"),
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `f(2 tau)`.
fn dilate(f: &QSeries, order: usize) -> QSeries {
    let coeffs = (0..=order)
        .map(|n| if n % 2 == 0 { f.coeff(n / 2).clone() } else { r(0, 1) })
        .collect();
    QSeries::new(coeffs, f.weight())
}

#[test]
fn level2_coefficients_are_dilated_eisenstein_series() {
    // the 2-isogenous lattice is a rescaling of Z + 2 tau Z
    let n = 30;
    let (a, b, e) = (
        eisenstein_series(Form::A, n),
        eisenstein_series(Form::B, n),
        eisenstein_series(Form::E, n),
    );
    let aprime = &a.scale(&r(-4, 1)) - &e.pow(2).scale(&r(15, 1));
    let bprime = &b.scale(&r(22, 1)) + &(&a * &e).scale(&r(14, 1));
    assert_eq!(aprime.coeffs(), dilate(&a, n).scale(&r(16, 1)).coeffs());
    assert_eq!(bprime.coeffs(), dilate(&b, n).scale(&r(64, 1)).coeffs());
}

#[test]
fn level2_traces() {
    let c = isogenous_coefficients(2).unwrap();
    let (AlgebraElement::Cubic(a), AlgebraElement::Cubic(b)) = (&c.aprime, &c.bprime) else {
        panic!("level 2 is cubic")
    };
    assert_eq!(cubic_rep(a).trace(), rf("18a"));
    assert_eq!(cubic_rep(b).trace(), rf("66b"));
}

#[test]
fn level3_matrices() {
    let c = isogenous_coefficients(3).unwrap();
    let basis = TorsionBasis::power(3).unwrap();
    assert_eq!(regular_rep(torsion(&c.aprime), &basis).unwrap(), fixture(fixtures::LEVEL3_APRIME));
    assert_eq!(regular_rep(torsion(&c.bprime), &basis).unwrap(), fixture(fixtures::LEVEL3_BPRIME));
}

#[test]
fn level5_symmetric_matrices() {
    let c = isogenous_coefficients(5).unwrap();
    let basis = TorsionBasis::symmetric_five().unwrap();
    assert_eq!(regular_rep(torsion(&c.aprime), &basis).unwrap(), fixture(fixtures::LEVEL5_APRIME));
    assert_eq!(regular_rep(torsion(&c.bprime), &basis).unwrap(), fixture(fixtures::LEVEL5_BPRIME));
}

#[test]
fn coefficients_are_weighted() {
    for n in [2, 3, 5] {
        let c = isogenous_coefficients(n).unwrap();
        assert!(has_weight(&c.aprime, 4), "a' at level {n}");
        assert!(has_weight(&c.bprime, 6), "b' at level {n}");
        assert!(!has_weight(&c.aprime, 6));
    }
}

#[test]
fn representations_commute() {
    let c = isogenous_coefficients(2).unwrap();
    let (AlgebraElement::Cubic(a), AlgebraElement::Cubic(b)) = (&c.aprime, &c.bprime) else {
        panic!("level 2 is cubic")
    };
    let (ra, rb) = (cubic_rep(a), cubic_rep(b));
    assert_eq!(ra.mul(&rb), rb.mul(&ra));
    for (n, kind) in [(3, BasisKind::Power), (5, BasisKind::Symmetric), (5, BasisKind::Power)] {
        let c = isogenous_coefficients(n).unwrap();
        let basis = TorsionBasis::new(n, kind).unwrap();
        let ra = regular_rep(torsion(&c.aprime), &basis).unwrap();
        let rb = regular_rep(torsion(&c.bprime), &basis).unwrap();
        assert_eq!(ra.mul(&rb), rb.mul(&ra), "level {n}, {kind} basis");
    }
}

#[test]
fn level5_power_and_symmetric_traces_agree_up_to_degree() {
    // the symmetric basis spans the degree-6 subalgebra, so traces halve
    let c = isogenous_coefficients(5).unwrap();
    let power = TorsionBasis::power(5).unwrap();
    let sym = TorsionBasis::symmetric_five().unwrap();
    for u in [&c.aprime, &c.bprime] {
        let tp = regular_rep(torsion(u), &power).unwrap().trace();
        let ts = regular_rep(torsion(u), &sym).unwrap().trace();
        assert_eq!(tp, ts.scale(&r(2, 1)));
        assert_eq!(tp.vars(), VarSet::AB);
    }
}
