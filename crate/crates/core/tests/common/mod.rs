#![allow(dead_code)]

use hecke_core::poly::{parse_poly, Matrix, MultiPoly, PolyMatrix, RatFunc, Rational, Var, VarSet};
use hecke_testkit::fixtures::Fixture;

pub fn ab(s: &str) -> MultiPoly {
    parse_poly(VarSet::AB, s).unwrap()
}

pub fn rf(s: &str) -> RatFunc {
    RatFunc::from_poly(ab(s))
}

pub fn fixture(f: Fixture) -> PolyMatrix {
    Matrix::from_rows(f.iter().map(|row| row.iter().map(|s| rf(s)).collect()).collect())
}

pub fn at(a: &Rational, b: &Rational) -> [(Var, Rational); 2] {
    [(Var::SmallA, a.clone()), (Var::SmallB, b.clone())]
}

/// Fixture entries read as polynomials in `a, b, A, B`.
pub fn marked_fixture(f: Fixture) -> PolyMatrix {
    Matrix::from_rows(
        f.iter()
            .map(|row| {
                row.iter()
                    .map(|s| RatFunc::from_poly(parse_poly(VarSet::AB_MARKED, s).unwrap()))
                    .collect()
            })
            .collect(),
    )
}
