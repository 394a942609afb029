use hecke_core::poly::{
    char_poly, poly_gcd, ratfunc_normalize, Matrix, Monomial, MultiPoly, RatFunc, Rational, Var, VarSet,
    WeightGrading,
};
use hecke_testkit::{det_bareiss, det_cofactor};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn poly_ab(max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((-6i64..=6, 0u32..=3, 0u32..=3), 0..=max_terms).prop_map(|terms| {
        MultiPoly::from_terms(
            VarSet::AB,
            terms.into_iter().map(|(c, i, j)| (Monomial::from_exponents(&[i, j]), r(c))),
        )
    })
}

fn nonzero_ab(max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    poly_ab(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// Homogeneous of weight `w` in `a` (4) and `b` (6).
fn homogeneous(w: u32) -> impl Strategy<Value = MultiPoly> {
    let monos: Vec<(u32, u32)> = (0..=w / 6).filter(|j| (w - 6 * j) % 4 == 0).map(|j| ((w - 6 * j) / 4, j)).collect();
    proptest::collection::vec(-5i64..=5, monos.len())
        .prop_map(move |cs| {
            MultiPoly::from_terms(
                VarSet::AB,
                monos.iter().zip(cs).map(|(&(i, j), c)| (Monomial::from_exponents(&[i, j]), r(c))),
            )
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)
}

fn point() -> impl Strategy<Value = [(Var, Rational); 2]> {
    ((-20i64..=20, 1i64..=7), (-20i64..=20, 1i64..=7)).prop_map(|((an, ad), (bn, bd))| {
        [
            (Var::SmallA, Rational::new(an.into(), ad.into())),
            (Var::SmallB, Rational::new(bn.into(), bd.into())),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(p in poly_ab(5), q in poly_ab(5), s in poly_ab(5)) {
        prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(p in nonzero_ab(4), q in nonzero_ab(4), h in nonzero_ab(3)) {
        let (x, y) = (&p * &h, &q * &h);
        let g = poly_gcd(&x, &y);
        prop_assert!(x.div_exact(&g).is_some());
        prop_assert!(y.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&h).is_some());
    }

    #[test]
    fn normalization_is_idempotent_and_unique(
        p in nonzero_ab(4),
        q in nonzero_ab(3),
        h in nonzero_ab(3),
        c in (1i64..=9).prop_flat_map(|n| prop_oneof![Just(n), Just(-n)]),
        pts in proptest::collection::vec(point(), 20),
    ) {
        let f = ratfunc_normalize(p.clone(), q.clone()).unwrap();
        prop_assert_eq!(ratfunc_normalize(f.num().clone(), f.den().clone()).unwrap(), f.clone());
        // the same function written with a spurious common factor and scalar
        let g = RatFunc::new((&p * &h).scale(&r(c)), (&q * &h).scale(&r(c))).unwrap();
        for pt in &pts {
            if let (Some(x), Some(y)) = (f.evaluate(pt), g.evaluate(pt)) {
                prop_assert_eq!(x, y);
            }
        }
        prop_assert_eq!(f, g);
    }

    #[test]
    fn weight_is_additive(p in homogeneous(12), q in homogeneous(10)) {
        let g = WeightGrading::STANDARD;
        prop_assert!(g.weight_of(&p).is(12));
        prop_assert!(g.weight_of(&q).is(10));
        prop_assert!(g.weight_of(&(&p * &q)).is(22));
    }

    #[test]
    fn cayley_hamilton_on_integer_matrices(n in 1usize..=5, seed in int_matrix(5)) {
        let m = Matrix::from_rows(seed[..n].iter().map(|row| row[..n].iter().map(|&x| r(x)).collect()).collect());
        prop_assert!(char_poly(&m).evaluate_at(&m).is_zero());
    }

    #[test]
    fn faddeev_leverrier_determinant_matches_bareiss(n in 1usize..=6, seed in int_matrix(6)) {
        let rows: Vec<Vec<i64>> = seed[..n].iter().map(|row| row[..n].to_vec()).collect();
        let m = Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect());
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(char_poly(&m).det(), Rational::from_integer(det_bareiss(&ints)));
    }

    #[test]
    fn four_by_four_determinant_matches_cofactor_expansion(seed in int_matrix(4)) {
        let qs: Vec<Vec<Rational>> = seed.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect();
        let m = Matrix::from_rows(qs.clone());
        let cp = char_poly(&m);
        prop_assert_eq!(cp.det(), det_cofactor(&qs));
        // tr adj(M) = sum of principal 3x3 minors
        let mut minors = Rational::zero();
        for skip in 0..4 {
            let sub: Vec<Vec<Rational>> = (0..4)
                .filter(|&i| i != skip)
                .map(|i| (0..4).filter(|&j| j != skip).map(|j| qs[i][j].clone()).collect())
                .collect();
            minors += det_cofactor(&sub);
        }
        prop_assert_eq!(cp.adjugate_trace(), minors);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cayley_hamilton_on_polynomial_matrices(entries in proptest::collection::vec(poly_ab(3), 9)) {
        let m = Matrix::from_entries(3, entries);
        prop_assert!(char_poly(&m).evaluate_at(&m).is_zero());
    }
}

#[test]
fn companion_matrix_of_cubic_relation() {
    let p = |s: &str| hecke_core::poly::parse_poly(VarSet::AB, s).unwrap();
    let rho_e = Matrix::from_rows(vec![
        vec![p("0"), p("0"), p("-b")],
        vec![p("1"), p("0"), p("-a")],
        vec![p("0"), p("1"), p("0")],
    ]);
    let cp = char_poly(&rho_e);
    assert_eq!(cp.descending(), vec![p("1"), p("0"), p("a"), p("b")]);
    assert!(cp.evaluate_at(&rho_e).is_zero());
}
