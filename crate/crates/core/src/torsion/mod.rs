//! Arithmetic in `K[x_P] / (psi_N)` with `K = Q(a, b)`, the level-2 cubic
//! algebra, and regular representations with respect to chosen bases.

mod basis;
mod cubic;
mod kpoly;
mod linalg;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

pub use basis::{regular_rep, regular_rep_frac, BasisKind, TorsionBasis};
pub use cubic::{cubic_rep, CubicElement};

use crate::divpoly::{division_poly, mult_formula};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::{common_denominator, frac, poly_gcd, poly_lcm, MultiPoly, RatFunc, Var, VarSet};

/// `K[x] / (psi_N)` for an odd prime `N`.
#[derive(Debug, PartialEq)]
pub struct TorsionRing {
    level: u32,
    /// Lower coefficients of the monic modulus `psi_N / N`.
    modulus: Vec<MultiPoly>,
}

pub fn is_odd_prime(n: u32) -> bool {
    n >= 3 && n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl TorsionRing {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// `(N^2 - 1) / 2`.
    pub fn dim(&self) -> usize {
        self.modulus.len()
    }

    /// Monic modulus, ascending, including the leading 1.
    pub fn modulus(&self) -> Vec<RatFunc> {
        let mut m: Vec<RatFunc> = self.modulus.iter().cloned().map(RatFunc::from_poly).collect();
        m.push(RatFunc::one(VarSet::AB));
        m
    }
}

/// The ring for level `n`, shared process-wide.
pub fn torsion_ring(n: u32) -> Result<Arc<TorsionRing>> {
    if !is_odd_prime(n) {
        return Err(Error::UnsupportedLevel(n));
    }
    static RINGS: OnceLock<Mutex<HashMap<u32, Arc<TorsionRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(Default::default);
    if let Some(r) = rings.lock().expect("ring cache poisoned").get(&n) {
        return Ok(Arc::clone(r));
    }
    let psi = division_poly(n)?;
    let scaled = psi.body.scale(&frac(1, n as i64));
    let mut coeffs: Vec<MultiPoly> = scaled
        .coefficients_in(Var::X)
        .into_iter()
        .map(|c| c.restrict(VarSet::AB).expect("x removed"))
        .collect();
    let lead = coeffs.pop().expect("nonconstant division polynomial");
    debug_assert!(lead.is_one());
    let ring = Arc::new(TorsionRing {
        level: n,
        modulus: coeffs,
    });
    let mut guard = rings.lock().expect("ring cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(ring)))
}

/// An element of [`TorsionRing`]: power-basis coordinates with polynomial
/// numerators over one shared denominator.
#[derive(Clone)]
pub struct TorsionElement {
    ring: Arc<TorsionRing>,
    num: Vec<MultiPoly>,
    /// Integer-primitive with positive leading coefficient.
    den: MultiPoly,
}

impl PartialEq for TorsionElement {
    fn eq(&self, other: &Self) -> bool {
        if self.level() != other.level() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num
            .iter()
            .zip(&other.num)
            .all(|(x, y)| x * &other.den == y * &self.den)
    }
}

impl fmt::Debug for TorsionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorsionElement[N={}]({:?}) / ({})", self.level(), self.num, self.den)
    }
}

impl fmt::Display for TorsionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl TorsionElement {
    fn build(ring: &Arc<TorsionRing>, num: Vec<MultiPoly>, den: MultiPoly) -> TorsionElement {
        let (c, den) = den.primitive_split();
        let num = if c.is_one() {
            num
        } else {
            let inv = c.recip();
            num.iter().map(|p| p.scale(&inv)).collect()
        };
        TorsionElement {
            ring: Arc::clone(ring),
            num,
            den,
        }
    }

    pub fn from_coeffs(ring: &Arc<TorsionRing>, coeffs: Vec<RatFunc>) -> Result<TorsionElement> {
        if coeffs.len() != ring.dim() {
            return Err(Error::WrongLength {
                expected: ring.dim(),
                got: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| c.vars() != VarSet::AB) {
            return Err(Error::VarSetMismatch(c.vars(), VarSet::AB));
        }
        let (num, den) = common_denominator(&coeffs);
        Ok(Self::build(ring, num, den))
    }

    /// Polynomial coordinates over the denominator `den`.
    pub fn from_parts(ring: &Arc<TorsionRing>, num: Vec<MultiPoly>, den: MultiPoly) -> Result<TorsionElement> {
        if num.len() != ring.dim() {
            return Err(Error::WrongLength {
                expected: ring.dim(),
                got: num.len(),
            });
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some(c) = num.iter().chain([&den]).find(|c| c.vars() != VarSet::AB) {
            return Err(Error::VarSetMismatch(c.vars(), VarSet::AB));
        }
        Ok(Self::build(ring, num, den))
    }

    pub fn zero(ring: &Arc<TorsionRing>) -> TorsionElement {
        Self::constant(ring, RatFunc::zero(VarSet::AB))
    }

    pub fn one(ring: &Arc<TorsionRing>) -> TorsionElement {
        Self::constant(ring, RatFunc::one(VarSet::AB))
    }

    pub fn constant(ring: &Arc<TorsionRing>, c: RatFunc) -> TorsionElement {
        let mut num = vec![MultiPoly::zero(VarSet::AB); ring.dim()];
        let (n, d) = c.into_parts();
        num[0] = n;
        Self::build(ring, num, d)
    }

    /// `x_P`.
    pub fn generator(ring: &Arc<TorsionRing>) -> TorsionElement {
        let mut num = vec![MultiPoly::zero(VarSet::AB); ring.dim()];
        num[1] = MultiPoly::one(VarSet::AB);
        Self::build(ring, num, MultiPoly::one(VarSet::AB))
    }

    /// The class of a polynomial in `a, b, x` evaluated at `x = x_P`.
    pub fn from_poly(ring: &Arc<TorsionRing>, p: &MultiPoly) -> Result<TorsionElement> {
        let target = VarSet::ABX;
        let p = if p.vars() == target {
            p.clone()
        } else if p.vars().is_subset_of(target) {
            p.embed(target)
        } else {
            return Err(Error::VarSetMismatch(p.vars(), target));
        };
        let raw: Vec<MultiPoly> = p
            .coefficients_in(Var::X)
            .into_iter()
            .map(|c| c.restrict(VarSet::AB).expect("x removed"))
            .collect();
        Ok(Self::build(ring, reduce(&ring.modulus, raw), MultiPoly::one(VarSet::AB)))
    }

    pub fn ring(&self) -> &Arc<TorsionRing> {
        &self.ring
    }

    pub fn level(&self) -> u32 {
        self.ring.level
    }

    pub fn dim(&self) -> usize {
        self.num.len()
    }

    /// Canonical coordinates in the power basis.
    pub fn coeffs(&self) -> Vec<RatFunc> {
        par::map_slice(&self.num, |p| RatFunc::new(p.clone(), self.den.clone()).expect("nonzero denominator"))
    }

    pub fn numerators(&self) -> &[MultiPoly] {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    /// Same element with the common factor of numerators and denominator removed.
    pub fn reduced(&self) -> TorsionElement {
        if self.den.is_one() {
            return self.clone();
        }
        let mut g = self.den.clone();
        for p in self.num.iter().filter(|p| !p.is_zero()) {
            g = poly_gcd(&g, p);
            if g.is_constant() {
                return self.clone();
            }
        }
        if self.is_zero() {
            return TorsionElement::zero(&self.ring);
        }
        let num = self.num.iter().map(|p| p.div_exact(&g).expect("gcd divides")).collect();
        Self::build(&self.ring, num, self.den.div_exact(&g).expect("gcd divides"))
    }

    fn check_level(&self, other: &TorsionElement) -> Result<()> {
        if self.level() == other.level() {
            Ok(())
        } else {
            Err(Error::LevelMismatch(self.level(), other.level()))
        }
    }

    pub fn checked_add(&self, other: &TorsionElement) -> Result<TorsionElement> {
        self.check_level(other)?;
        Ok(self.combine(other, |x, y| x + y))
    }

    pub fn checked_sub(&self, other: &TorsionElement) -> Result<TorsionElement> {
        self.check_level(other)?;
        Ok(self.combine(other, |x, y| x - y))
    }

    fn combine(&self, other: &TorsionElement, f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> TorsionElement {
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(x, y)| f(x, y)).collect();
            return Self::build(&self.ring, num, self.den.clone());
        }
        let den = poly_lcm(&self.den, &other.den);
        let ms = den.div_exact(&self.den).expect("lcm is a multiple");
        let mo = den.div_exact(&other.den).expect("lcm is a multiple");
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(x, y)| f(&(x * &ms), &(y * &mo)))
            .collect();
        Self::build(&self.ring, num, den)
    }

    pub fn scale(&self, c: &RatFunc) -> TorsionElement {
        let num = self.num.iter().map(|x| x * c.num()).collect();
        Self::build(&self.ring, num, &self.den * c.den())
    }

    pub fn scale_rational(&self, c: &crate::poly::Rational) -> TorsionElement {
        let num = self.num.iter().map(|x| x.scale(c)).collect();
        Self::build(&self.ring, num, self.den.clone())
    }

    pub fn pow(&self, e: u32) -> TorsionElement {
        let mut acc = TorsionElement::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `x_P * self`, by a shift and one reduction step.
    pub fn mul_generator(&self) -> TorsionElement {
        let mut raw = Vec::with_capacity(self.dim() + 1);
        raw.push(MultiPoly::zero(VarSet::AB));
        raw.extend(self.num.iter().cloned());
        TorsionElement {
            num: reduce(&self.ring.modulus, raw),
            den: self.den.clone(),
            ring: Arc::clone(&self.ring),
        }
    }
}

/// Reduce a coefficient vector of any length modulo the monic modulus.
fn reduce(modulus: &[MultiPoly], mut raw: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let d = modulus.len();
    for k in (d..raw.len()).rev() {
        let c = std::mem::replace(&mut raw[k], MultiPoly::zero(VarSet::AB));
        if c.is_zero() {
            continue;
        }
        for (i, m) in modulus.iter().enumerate() {
            if !m.is_zero() {
                raw[k - d + i] = &raw[k - d + i] - &(&c * m);
            }
        }
    }
    raw.resize(d, MultiPoly::zero(VarSet::AB));
    raw
}

/// Product reduced modulo `psi_N`.
pub fn torsion_mul(u: &TorsionElement, v: &TorsionElement) -> Result<TorsionElement> {
    u.check_level(v)?;
    let d = u.dim();
    let raw = par::map_range(2 * d - 1, |k| {
        let lo = k.saturating_sub(d - 1);
        let hi = k.min(d - 1);
        let mut acc = MultiPoly::zero(VarSet::AB);
        for i in lo..=hi {
            let (x, y) = (&u.num[i], &v.num[k - i]);
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
        acc
    });
    Ok(TorsionElement::build(&u.ring, reduce(&u.ring.modulus, raw), &u.den * &v.den))
}

/// Multiplicative inverse. Solves `rho(u) c = 1` in power coordinates by
/// fraction-free elimination over `Q[a, b]`; a zero determinant means `u`
/// shares a factor with `psi_N`.
pub fn torsion_invert(u: &TorsionElement) -> Result<TorsionElement> {
    let d = u.dim();
    let mut cols = Vec::with_capacity(d);
    let mut cur = TorsionElement {
        ring: Arc::clone(&u.ring),
        num: u.num.clone(),
        den: MultiPoly::one(VarSet::AB),
    };
    for j in 0..d {
        if j > 0 {
            cur = cur.mul_generator();
        }
        cols.push(cur.num.clone());
    }
    let mut rhs = vec![MultiPoly::zero(VarSet::AB); d];
    rhs[0] = MultiPoly::one(VarSet::AB);
    let (sol, det) = linalg::solve_fraction_free(&cols, &rhs)?;
    let num = sol.iter().map(|p| p * &u.den).collect();
    Ok(TorsionElement::build(&u.ring, num, det).reduced())
}

/// Reference inverse by the extended Euclidean algorithm in `K[x]`.
pub fn torsion_invert_euclid(u: &TorsionElement) -> Result<TorsionElement> {
    let mut inv = kpoly::inverse_mod(&u.coeffs(), &u.ring.modulus())?;
    inv.resize(u.dim(), RatFunc::zero(VarSet::AB));
    TorsionElement::from_coeffs(&u.ring, inv)
}

/// `x_{lP} = phi_l(x_P) / psi_l(x_P)^2` for `l` in `1..=(N-1)/2`.
pub fn x_multiple(l: u32, n: u32) -> Result<TorsionElement> {
    let ring = torsion_ring(n)?;
    let max = (n - 1) / 2;
    if l == 0 || l > max {
        return Err(Error::MultipleOutOfRange {
            multiple: l,
            level: n,
            max,
        });
    }
    if l == 1 {
        return Ok(TorsionElement::generator(&ring));
    }
    let f = mult_formula(l)?;
    let phi = TorsionElement::from_poly(&ring, &f.phi)?;
    let psi_sq = TorsionElement::from_poly(&ring, &f.psi_sq)?;
    Ok(torsion_mul(&phi, &torsion_invert(&psi_sq)?)?.reduced())
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&TorsionElement> for &TorsionElement {
            type Output = TorsionElement;
            /// Panics on a level mismatch.
            fn $method(self, rhs: &TorsionElement) -> TorsionElement {
                let f: fn(&TorsionElement, &TorsionElement) -> Result<TorsionElement> = $body;
                f(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, |u, v| u.checked_add(v));
forward_binop!(Sub, sub, |u, v| u.checked_sub(v));
forward_binop!(Mul, mul, torsion_mul);

impl Neg for &TorsionElement {
    type Output = TorsionElement;
    fn neg(self) -> TorsionElement {
        TorsionElement {
            ring: Arc::clone(&self.ring),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ab(s: &str) -> RatFunc {
        RatFunc::from_poly(parse_poly(VarSet::AB, s).unwrap())
    }

    #[test]
    fn primes() {
        let got: Vec<u32> = (0..30).filter(|&n| is_odd_prime(n)).collect();
        assert_eq!(got, vec![3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(torsion_ring(9).unwrap_err(), Error::UnsupportedLevel(9));
    }

    #[test]
    fn level_three_reduction() {
        let ring = torsion_ring(3).unwrap();
        let x = TorsionElement::generator(&ring);
        let x4 = &x * &x.pow(3);
        assert_eq!(x4.coeffs(), &[ab("a^2").scale(&frac(1, 3)), ab("-4b"), ab("-2a"), ab("0")]);
    }

    #[test]
    fn one_is_neutral_and_inverse_of_generator() {
        let ring = torsion_ring(3).unwrap();
        let x = TorsionElement::generator(&ring);
        let one = TorsionElement::one(&ring);
        assert_eq!(&x * &one, x);
        assert_eq!(torsion_invert(&one).unwrap(), one);
        assert_eq!(&x * &torsion_invert(&x).unwrap(), one);
    }

    #[test]
    fn inverse_routes_agree() {
        let ring = torsion_ring(3).unwrap();
        let u = TorsionElement::from_poly(&ring, &parse_poly(VarSet::ABX, "x^3 - 2a x^2 + b x + a^2 - 1").unwrap()).unwrap();
        assert_eq!(torsion_invert(&u).unwrap(), torsion_invert_euclid(&u).unwrap());
        let ring = torsion_ring(5).unwrap();
        let u = TorsionElement::from_poly(&ring, &crate::divpoly::mult_formula(2).unwrap().psi_sq).unwrap();
        assert_eq!(torsion_invert(&u).unwrap(), torsion_invert_euclid(&u).unwrap());
    }

    #[test]
    fn level_mismatch() {
        let x3 = TorsionElement::generator(&torsion_ring(3).unwrap());
        let x5 = TorsionElement::generator(&torsion_ring(5).unwrap());
        assert_eq!(torsion_mul(&x3, &x5), Err(Error::LevelMismatch(3, 5)));
    }

    #[test]
    fn multiple_range() {
        assert_eq!(x_multiple(1, 5).unwrap(), TorsionElement::generator(&torsion_ring(5).unwrap()));
        assert_eq!(
            x_multiple(3, 5),
            Err(Error::MultipleOutOfRange {
                multiple: 3,
                level: 5,
                max: 2
            })
        );
    }
}
