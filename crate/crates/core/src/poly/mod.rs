//! Exact arithmetic kernel: sparse polynomials over Q, canonical rational
//! functions, matrices and characteristic polynomials, weight gradings.

mod fracmatrix;
mod gcd;
mod matrix;
mod monomial;
mod multipoly;
mod parse;
mod ratfunc;
mod series;
mod var;
mod weight;

pub use fracmatrix::{common_denominator, frac_columns, poly_lcm, FracMatrix};
pub use gcd::poly_gcd;
pub use matrix::{char_poly, CharPoly, Matrix, PolyMatrix, Scalar};
pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use parse::parse_poly;
pub use ratfunc::{ratfunc_normalize, RatFunc};
pub use series::series_coefficients;
pub use var::{Var, VarSet};
pub use weight::{weight_of, Homogeneity, WeightGrading};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
