use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::{poly_gcd, MultiPoly, Rational, Var, VarSet};
use crate::error::{Error, Result};

/// Quotient of polynomials in canonical form.
///
/// Numerator and denominator are coprime; the denominator has coprime
/// integer coefficients and a positive leading coefficient. Two equal
/// functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Canonical form of `num / den`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
        if num.vars() != den.vars() {
            return Err(Error::VarSetMismatch(num.vars(), den.vars()));
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero(num.vars()));
        }
        if let Some(c) = den.constant_value() {
            return Ok(RatFunc::from_poly(num.scale(&c.recip())));
        }
        let g = poly_gcd(&num, &den);
        if g.is_one() {
            return Ok(Self::scaled(num, den));
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        Ok(Self::scaled(num, den))
    }

    /// Fix the denominator scaling of an already coprime pair.
    fn scaled(num: MultiPoly, den: MultiPoly) -> RatFunc {
        if let Some(c) = den.constant_value() {
            return RatFunc::from_poly(num.scale(&c.recip()));
        }
        let (c, den) = den.primitive_split();
        let num = num.scale(&c.recip());
        RatFunc { num, den }
    }

    pub fn from_poly(num: MultiPoly) -> RatFunc {
        let den = MultiPoly::one(num.vars());
        RatFunc { num, den }
    }

    pub fn zero(vars: VarSet) -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: VarSet) -> RatFunc {
        RatFunc::from_poly(MultiPoly::one(vars))
    }

    pub fn constant(vars: VarSet, c: Rational) -> RatFunc {
        RatFunc::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn from_int(vars: VarSet, c: i64) -> RatFunc {
        RatFunc::from_poly(MultiPoly::from_int(vars, c))
    }

    pub fn var(vars: VarSet, v: Var) -> RatFunc {
        RatFunc::from_poly(MultiPoly::var(vars, v))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_polynomial(&self) -> Option<MultiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check(other)?;
        Ok(self.add_sub(other, false))
    }

    pub fn checked_sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check(other)?;
        Ok(self.add_sub(other, true))
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn check(&self, other: &RatFunc) -> Result<()> {
        if self.vars() == other.vars() {
            Ok(())
        } else {
            Err(Error::VarSetMismatch(self.vars(), other.vars()))
        }
    }

    fn add_sub(&self, other: &RatFunc, negate: bool) -> RatFunc {
        let combine = |x: &MultiPoly, y: &MultiPoly| if negate { x - y } else { x + y };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        if self.den == other.den {
            let n = combine(&self.num, &other.num);
            if self.is_polynomial() {
                return RatFunc::from_poly(n);
            }
            return RatFunc::new(n, self.den.clone()).expect("nonzero denominator");
        }
        if other.is_polynomial() {
            let n = combine(&self.num, &(&other.num * &self.den));
            return Self::scaled(n, self.den.clone());
        }
        if self.is_polynomial() {
            let n = combine(&(&self.num * &other.den), &other.num);
            return Self::scaled(n, other.den.clone());
        }
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            let n = combine(&(&self.num * &other.den), &(&other.num * &self.den));
            return Self::scaled(n, &self.den * &other.den);
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let n = combine(&(&self.num * &d2), &(&other.num * &d1));
        let den = &(&d1 * &d2) * &g;
        if n.is_zero() {
            return RatFunc::zero(self.vars());
        }
        let g2 = poly_gcd(&n, &g);
        if g2.is_one() {
            return Self::scaled(n, den);
        }
        let n = n.div_exact(&g2).expect("gcd divides");
        let den = den.div_exact(&g2).expect("gcd divides");
        Self::scaled(n, den)
    }

    fn mul_unchecked(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.vars());
        }
        if self.is_polynomial() && other.is_polynomial() {
            return RatFunc::from_poly(&self.num * &other.num);
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::scaled(&n1 * &n2, &d1 * &d2)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scaled(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.vars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RatFunc {
        self.mul_unchecked(&RatFunc::from_poly(p.clone()))
    }

    /// Value at a rational point; `None` if the denominator vanishes or a
    /// variable is missing.
    pub fn evaluate(&self, point: &[(Var, Rational)]) -> Option<Rational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(point)? / d)
    }

    pub fn embed(&self, target: VarSet) -> RatFunc {
        RatFunc {
            num: self.num.embed(target),
            den: self.den.embed(target),
        }
    }

    pub fn restrict(&self, target: VarSet) -> Option<RatFunc> {
        Some(RatFunc {
            num: self.num.restrict(target)?,
            den: self.den.restrict(target)?,
        })
    }
}

/// Remove the common factor of `n` and `d`.
fn cancel(n: &MultiPoly, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if d.is_one() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = poly_gcd(n, d);
    if g.is_one() {
        return (n.clone(), d.clone());
    }
    (
        n.div_exact(&g).expect("gcd divides"),
        d.div_exact(&g).expect("gcd divides"),
    )
}

/// Canonical form of `num / den`.
pub fn ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MultiPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            /// Panics if the variable sets differ (or on division by zero).
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ab(s: &str) -> MultiPoly {
        parse_poly(VarSet::AB, s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(ab(n), ab(d)).unwrap()
    }

    #[test]
    fn scalar_cancellation() {
        let f = rf("2a", "4b");
        assert_eq!(f.num(), &ab("a/2"));
        assert_eq!(f.den(), &ab("b"));
        assert!(f.den().leading_coeff() > Rational::zero());
    }

    #[test]
    fn common_factor_cancels() {
        let f = rf("(a-b)(a+b)", "a-b");
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &ab("a+b"));
    }

    #[test]
    fn zero_numerator_is_zero_over_one() {
        let f = rf("0", "a^2 + b");
        assert!(f.is_zero());
        assert!(f.den().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(ab("a"), ab("0")),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn sign_moves_to_numerator() {
        let f = rf("a", "-3b + a");
        let g = rf("-a", "3b - a");
        assert_eq!(f, g);
        assert!(f.den().leading_coeff() > Rational::zero());
    }

    #[test]
    fn field_operations() {
        let x = rf("a", "a + b");
        let y = rf("b", "a + b");
        assert!((&x + &y).is_one());
        let z = &x / &y;
        assert_eq!(z, rf("a", "b"));
        assert_eq!(&z * &z.inv().unwrap(), RatFunc::one(VarSet::AB));
        let w = &rf("1", "a^2 - b^2") - &rf("1", "a - b");
        assert_eq!(w, rf("1 - a - b", "a^2 - b^2"));
    }
}
