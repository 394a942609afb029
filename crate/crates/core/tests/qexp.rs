use std::collections::BTreeMap;

use hecke_core::qexp::{
    delta, delta_normalization, divisor_sums, eisenstein_series, express_in_monomials, hecke_on_series,
    monomial_series, odd_divisor_sums, oracle_table, weight_dimension, Form, QSeries, GUARD_ROWS,
};
use hecke_core::Error;
use num_bigint::BigInt;
use num_traits::{Pow, Zero};

type Q = num_rational::BigRational;

fn r(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

#[test]
fn divisor_sums_match_enumeration() {
    let s3 = divisor_sums(3, 200);
    let s5 = divisor_sums(5, 200);
    let odd = odd_divisor_sums(200);
    for n in 1..=200u32 {
        let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
        let sum = |k: u32| divisors.iter().map(|&d| BigInt::from(d).pow(k)).sum::<BigInt>();
        assert_eq!(s3[n as usize], sum(3), "sigma_3({n})");
        assert_eq!(s5[n as usize], sum(5), "sigma_5({n})");
        let o: u32 = divisors.iter().filter(|d| *d % 2 == 1).sum();
        assert_eq!(odd[n as usize], BigInt::from(o), "odd sum at {n}");
    }
}

#[test]
fn leading_terms() {
    assert_eq!(&eisenstein_series(Form::A, 2).coeffs()[..3], &[r(-1, 3), r(-80, 1), r(-720, 1)]);
    assert_eq!(&eisenstein_series(Form::B, 1).coeffs()[..2], &[r(2, 27), r(-112, 3)]);
    assert_eq!(eisenstein_series(Form::E, 2).coeffs(), &[r(-2, 3), r(-16, 1), r(-16, 1)]);
    assert_eq!(monomial_series(0, 0, 5), QSeries::constant(r(1, 1), 5));
    assert_eq!(monomial_series(1, 1, 3).coeff(0), &r(-2, 81));
}

#[test]
fn cubic_relation_to_order_forty() {
    let (a, b, e) = (
        eisenstein_series(Form::A, 40),
        eisenstein_series(Form::B, 40),
        eisenstein_series(Form::E, 40),
    );
    let rel = &(&e.pow(3) + &(&a * &e)) + &b;
    assert_eq!(rel.order(), 40);
    assert!(rel.is_zero());
}

#[test]
fn weight_four_eigenvalue() {
    let a = eisenstein_series(Form::A, 40);
    let t = hecke_on_series(&a, 4, 2, 20).unwrap();
    assert_eq!(t, a.truncate(20).scale(&r(9, 1)));
}

#[test]
fn cusp_form_eigenvalue() {
    let (s, lead) = delta_normalization(10);
    assert_eq!(lead, 1);
    // Delta = -(4a^3 + 27b^2)/256
    assert_eq!(s, r(-1, 256));
    let d = delta(40);
    let t = hecke_on_series(&d, 12, 2, 20).unwrap();
    let ratio = t.coeff(1) / d.coeff(1);
    assert_eq!(ratio, r(-24, 1));
    assert_eq!(t, d.truncate(20).scale(&ratio));
}

#[test]
fn hecke_operators_commute_on_weight_four() {
    let a = eisenstein_series(Form::A, 200);
    let t2t3 = hecke_on_series(&hecke_on_series(&a, 4, 3, 60).unwrap(), 4, 2, 30).unwrap();
    let t3t2 = hecke_on_series(&hecke_on_series(&a, 4, 2, 90).unwrap(), 4, 3, 30).unwrap();
    assert_eq!(t2t3, t3t2);
}

#[test]
fn constant_series() {
    let one = QSeries::constant(r(1, 1), 30);
    for n in [2u32, 3, 5, 7] {
        let t = hecke_on_series(&one, 0, n, 30 / n as usize).unwrap();
        assert_eq!(t.coeff(0), &r(n as i64 + 1, n as i64));
        assert!(t.coeffs()[1..].iter().all(Zero::is_zero));
    }
}

#[test]
fn monomial_expansion_round_trips() {
    let order = weight_dimension(12) + GUARD_ROWS;
    assert_eq!(weight_dimension(12), 2);
    assert_eq!(
        express_in_monomials(&monomial_series(3, 0, order), 12).unwrap(),
        BTreeMap::from([((3, 0), r(1, 1))])
    );
    let f = hecke_on_series(&monomial_series(3, 0, 2 * order), 12, 2, order).unwrap();
    let coords = express_in_monomials(&f, 12).unwrap();
    let mut back = QSeries::constant(r(0, 1), order);
    for (&(i, j), c) in &coords {
        back = &back + &monomial_series(i, j, order).scale(c);
    }
    assert_eq!(back.coeffs(), f.coeffs());
}

#[test]
fn monomials_are_independent() {
    for k in (0..=36).step_by(2) {
        let order = weight_dimension(k) + GUARD_ROWS;
        let mut seen = 0;
        for j in 0..=k / 6 {
            if (k - 6 * j) % 4 != 0 {
                continue;
            }
            let i = (k - 6 * j) / 4;
            let coords = express_in_monomials(&monomial_series(i, j, order), k).unwrap();
            assert_eq!(coords, BTreeMap::from([((i, j), r(1, 1))]));
            seen += 1;
        }
        assert_eq!(seen, weight_dimension(k));
    }
}

#[test]
fn oracle_tables() {
    let t2 = oracle_table(2, 24).unwrap();
    assert_eq!(t2.get((1, 0, 1, 0)), r(9, 1));
    assert_eq!(t2.entries[&(1, 0)].len(), 1);
    let t3 = oracle_table(3, 12).unwrap();
    assert_eq!(t3.entries[&(0, 1)], BTreeMap::from([((0, 1), r(244, 1))]));
    let t5 = oracle_table(5, 8).unwrap();
    assert_eq!(t5.entries[&(0, 0)], BTreeMap::from([((0, 0), r(6, 5))]));
    for t in [&t2, &t3, &t5] {
        assert!(t.weight_violations().is_empty());
    }
}

#[test]
fn short_input_is_rejected() {
    let a = eisenstein_series(Form::A, 10);
    assert_eq!(
        hecke_on_series(&a, 4, 2, 6),
        Err(Error::InsufficientTruncation { have: 10, need: 12 })
    );
}
