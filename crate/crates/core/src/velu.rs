//! Coefficients `a'`, `b'` of the isogenous curve `E / <P>` as elements of
//! the level-N algebra.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{rat, MultiPoly, RatFunc, Var, VarSet};
use crate::torsion::{is_odd_prime, torsion_ring, x_multiple, CubicElement, TorsionElement};

#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraElement {
    Cubic(CubicElement),
    Torsion(TorsionElement),
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsogenyCoefficients {
    pub level: u32,
    pub aprime: AlgebraElement,
    pub bprime: AlgebraElement,
}

fn var(v: Var) -> RatFunc {
    RatFunc::var(VarSet::AB, v)
}

/// `a' = -4a - 15e^2`, `b' = 22b + 14ae`.
pub fn isogenous_coefficients_two() -> IsogenyCoefficients {
    let (a, b) = (var(Var::SmallA), var(Var::SmallB));
    let zero = RatFunc::zero(VarSet::AB);
    let aprime = CubicElement::new(a.scale(&rat(-4)), zero.clone(), RatFunc::from_int(VarSet::AB, -15));
    let bprime = CubicElement::new(b.scale(&rat(22)), a.scale(&rat(14)), zero);
    IsogenyCoefficients {
        level: 2,
        aprime: AlgebraElement::Cubic(aprime),
        bprime: AlgebraElement::Cubic(bprime),
    }
}

/// `a' = a - 30 sum x_l^2 - 5(N-1) a` and
/// `b' = b - 70 sum x_l^3 - 42 a sum x_l - 14(N-1) b`, `l = 1..(N-1)/2`.
pub fn isogenous_coefficients_odd(n: u32) -> Result<IsogenyCoefficients> {
    if !is_odd_prime(n) {
        return Err(Error::UnsupportedLevel(n));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IsogenyCoefficients>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("isogeny cache poisoned").get(&n) {
        return Ok((**c).clone());
    }
    let ring = torsion_ring(n)?;
    let half = (n - 1) / 2;
    let powers = par::map_range(half as usize, |i| -> Result<[TorsionElement; 3]> {
        let x = x_multiple(i as u32 + 1, n)?;
        let x2 = &x * &x;
        let x3 = &x2 * &x;
        Ok([x, x2, x3])
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut s1 = TorsionElement::zero(&ring);
    let mut s2 = TorsionElement::zero(&ring);
    let mut s3 = TorsionElement::zero(&ring);
    for [x, x2, x3] in &powers {
        s1 = &s1 + x;
        s2 = &s2 + x2;
        s3 = &s3 + x3;
    }
    let m = n as i64 - 1;
    let (a, b) = (var(Var::SmallA), var(Var::SmallB));
    let aprime = &TorsionElement::constant(&ring, a.scale(&rat(1 - 5 * m))) - &s2.scale_rational(&rat(30));
    let bprime = &(&TorsionElement::constant(&ring, b.scale(&rat(1 - 14 * m))) - &s3.scale_rational(&rat(70)))
        - &s1.scale(&a.scale(&rat(42)));
    let out = IsogenyCoefficients {
        level: n,
        aprime: AlgebraElement::Torsion(aprime.reduced()),
        bprime: AlgebraElement::Torsion(bprime.reduced()),
    };
    cache
        .lock()
        .expect("isogeny cache poisoned")
        .insert(n, Arc::new(out.clone()));
    Ok(out)
}

/// Dispatch on the level.
pub fn isogenous_coefficients(n: u32) -> Result<IsogenyCoefficients> {
    if n == 2 {
        Ok(isogenous_coefficients_two())
    } else {
        isogenous_coefficients_odd(n)
    }
}

/// Whether every power-basis coordinate of `u` (coefficient of `x^k` or
/// `e^k`) is weight-homogeneous of weight `w - 2k` (or zero).
pub fn has_weight(u: &AlgebraElement, w: i64) -> bool {
    let grading = crate::poly::WeightGrading::STANDARD;
    let coords: Vec<RatFunc> = match u {
        AlgebraElement::Cubic(c) => c.coeffs.to_vec(),
        AlgebraElement::Torsion(t) => t.coeffs(),
    };
    coords.iter().enumerate().all(|(k, c)| {
        c.is_zero() || grading.weight_of_ratfunc(c).is(w - 2 * k as i64)
    })
}

/// Polynomial `p(x)` in `a, b, x` evaluated at `x_P`; convenience for tests
/// and callers holding formulas in `x`.
pub fn torsion_from_poly(n: u32, p: &MultiPoly) -> Result<TorsionElement> {
    TorsionElement::from_poly(&torsion_ring(n)?, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn level_two_coordinates() {
        let c = isogenous_coefficients_two();
        let rf = |s: &str| RatFunc::from_poly(parse_poly(VarSet::AB, s).unwrap());
        let AlgebraElement::Cubic(a) = &c.aprime else { panic!() };
        let AlgebraElement::Cubic(b) = &c.bprime else { panic!() };
        assert_eq!(a.coeffs, [rf("-4a"), rf("0"), rf("-15")]);
        assert_eq!(b.coeffs, [rf("22b"), rf("14a"), rf("0")]);
        assert!(has_weight(&c.aprime, 4));
        assert!(has_weight(&c.bprime, 6));
    }

    #[test]
    fn level_three_closed_form() {
        let c = isogenous_coefficients_odd(3).unwrap();
        let expect_a = torsion_from_poly(3, &parse_poly(VarSet::ABX, "-9a - 30x^2").unwrap()).unwrap();
        let expect_b = torsion_from_poly(3, &parse_poly(VarSet::ABX, "-27b - 70x^3 - 42ax").unwrap()).unwrap();
        assert_eq!(c.aprime, AlgebraElement::Torsion(expect_a));
        assert_eq!(c.bprime, AlgebraElement::Torsion(expect_b));
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(isogenous_coefficients(9), Err(Error::UnsupportedLevel(9)));
    }
}
