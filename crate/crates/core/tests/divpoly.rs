use hecke_core::divpoly::{division_poly, mult_formula};
use hecke_core::poly::{weight_of, Homogeneity, MultiPoly, Rational, Var};
use hecke_testkit::{q, Curve, Point, Q};
use num_traits::Zero;
use proptest::prelude::*;

fn eval(p: &MultiPoly, c: &Curve, x: &Q) -> Rational {
    p.evaluate(&[(Var::SmallA, c.a.clone()), (Var::SmallB, c.b.clone()), (Var::X, x.clone())])
        .unwrap()
}

/// True `psi_n(P)` up to the factor `y` for even `n`; zero exactly when it is.
fn psi_vanishes(n: u32, c: &Curve, p: &Point) -> bool {
    let Point::Affine(x, y) = p else { unreachable!() };
    let d = division_poly(n).unwrap();
    let v = eval(&d.body, c, x);
    v.is_zero() || (d.even && y.is_zero())
}

#[test]
fn psi_vanishes_exactly_on_torsion() {
    let cases = [
        (Curve { a: q(0), b: q(1) }, Point::Affine(q(2), q(3)), 6),
        (Curve { a: q(-43), b: q(166) }, Point::Affine(q(3), q(8)), 7),
        (Curve { a: q(0), b: q(4) }, Point::Affine(q(0), q(2)), 3),
        (Curve { a: q(-1), b: q(0) }, Point::Affine(q(1), q(0)), 2),
    ];
    for (c, p, order) in cases {
        assert!(c.contains(&p));
        assert_eq!(c.order(&p, 20), Some(order));
        let mut r = p.clone();
        for k in 1..order {
            // [k]P has order order / gcd(k, order)
            let ord_k = order / num_integer::gcd(k, order);
            for n in 1..=9 {
                assert_eq!(
                    psi_vanishes(n, &c, &r),
                    n % ord_k == 0,
                    "n={n}, k={k}, curve={c:?}"
                );
            }
            r = c.add(&r, &p);
        }
    }
}

#[test]
fn psi_three_matches_fixture() {
    let expected = hecke_core::poly::parse_poly(
        hecke_core::poly::VarSet::ABX,
        "3x^4 + 6ax^2 + 12bx - a^2",
    )
    .unwrap();
    assert_eq!(division_poly(3).unwrap().body, expected);
}

#[test]
fn weights_up_to_nine() {
    for n in 1..=9u32 {
        let d = division_poly(n).unwrap();
        let w = if d.even { n * n - 4 } else { n * n - 1 };
        assert_eq!(weight_of(&d.body), Homogeneity::Weight(w as i64));
        let f = mult_formula(n).unwrap();
        assert_eq!(weight_of(&f.phi), Homogeneity::Weight(2 * (n * n) as i64));
        assert_eq!(f.phi.degree_in(Var::X), n * n);
        if n > 1 {
            assert_eq!(weight_of(&f.psi_sq), Homogeneity::Weight(2 * (n * n) as i64 - 2));
        }
    }
}

fn small_q() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn multiplication_formula_matches_group_law(
        a in small_q(),
        x in small_q(),
        y in small_q().prop_filter("nonzero y", |y| !y.is_zero()),
    ) {
        let c = Curve::through(a, &x, &y);
        prop_assume!(!c.discriminant_part().is_zero());
        let p = Point::Affine(x.clone(), y);
        // rational torsion has order at most 12
        prop_assume!(c.order(&p, 12).is_none());
        for l in 2..=7u32 {
            let f = mult_formula(l).unwrap();
            let lp = c.mul(l, &p);
            let expected = lp.x().unwrap().clone();
            let got = eval(&f.phi, &c, &x) / eval(&f.psi_sq, &c, &x);
            prop_assert_eq!(got, expected, "l = {}", l);
        }
    }
}
