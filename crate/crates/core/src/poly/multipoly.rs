use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, Var, VarSet};
use crate::error::{Error, Result};

/// Sparse polynomial over Q in the variables of a [`VarSet`].
///
/// Terms are kept sorted in descending graded reverse-lexicographic order,
/// with no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: VarSet,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(vars: VarSet) -> MultiPoly {
        MultiPoly {
            vars,
            terms: Vec::new(),
        }
    }

    pub fn one(vars: VarSet) -> MultiPoly {
        MultiPoly::constant(vars, Rational::one())
    }

    pub fn constant(vars: VarSet, c: Rational) -> MultiPoly {
        MultiPoly::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: VarSet, c: i64) -> MultiPoly {
        MultiPoly::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(vars: VarSet, mono: Monomial, c: Rational) -> MultiPoly {
        assert_eq!(mono.len(), vars.len(), "exponent vector length");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(mono, c)]
        };
        MultiPoly { vars, terms }
    }

    /// The polynomial `v`. Panics if `v` is not in `vars`.
    pub fn var(vars: VarSet, v: Var) -> MultiPoly {
        let idx = vars
            .index_of(v)
            .unwrap_or_else(|| panic!("{v} not in {vars:?}"));
        let mono = Monomial::one(vars.len()).with_exponent(idx, 1);
        MultiPoly::monomial(vars, mono, Rational::one())
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(vars: VarSet, terms: I) -> MultiPoly
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), vars.len());
            match acc.entry(m) {
                Entry::Occupied(mut o) => *o.get_mut() += c,
                Entry::Vacant(v) => {
                    v.insert(c);
                }
            }
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: VarSet, acc: HashMap<Monomial, Rational>) -> MultiPoly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { vars, terms }
    }

    /// Builds from terms already sorted descending with no repeats or zeros.
    fn from_sorted(vars: VarSet, terms: Vec<(Monomial, Rational)>) -> MultiPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(m, _)| mono.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        match self.vars.index_of(v) {
            Some(i) => self.terms.iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch(self.vars, other.vars))
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let (l, r) = (&self.terms, &other.terms);
        while i < l.len() && j < r.len() {
            match l[i].0.cmp(&r[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(l[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&r[j].1 } else { r[j].1.clone() };
                    out.push((r[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &l[i].1 - &r[j].1
                    } else {
                        &l[i].1 + &r[j].1
                    };
                    if !c.is_zero() {
                        out.push((l[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(l[i..].iter().cloned());
        out.extend(r[j..].iter().map(|(m, c)| {
            let c = if negate { -c } else { c.clone() };
            (m.clone(), c)
        }));
        MultiPoly::from_sorted(self.vars, out)
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    Entry::Occupied(mut o) => *o.get_mut() += c,
                    Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        MultiPoly::from_map(self.vars, acc)
    }

    /// Multiply by `c * mono`. Order is preserved by monomial multiplication.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.mul(mono), k * c))
            .collect();
        MultiPoly::from_sorted(self.vars, terms)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        MultiPoly::from_sorted(self.vars, terms)
    }

    pub fn scale_int(&self, c: i64) -> MultiPoly {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        if n == 0 {
            return MultiPoly::one(self.vars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return MultiPoly::monomial(self.vars, m.pow(n), num_traits::pow(c.clone(), n as usize));
        }
        let mut result = MultiPoly::one(self.vars);
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        result
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.vars, d.vars, "div_exact variable sets");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero(self.vars));
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d.leading_term().expect("nonzero");
        if d.terms.len() == 1 {
            let inv = dc.recip();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                out.push((dm.quotient_of(m), c * &inv));
            }
            return Some(MultiPoly::from_sorted(self.vars, out));
        }
        // Remainder kept in a map ordered so the leading monomial is last.
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let inv = dc.recip();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !dm.divides(&m) {
                return None;
            }
            let qm = dm.quotient_of(&m);
            let qc = &c * &inv;
            for (tm, tc) in d.terms.iter().skip(1) {
                let key = tm.mul(&qm);
                let delta = tc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MultiPoly::from_sorted(self.vars, quot))
    }

    /// Coefficients with respect to `v`: `self = sum_k out[k] * v^k`, each
    /// `out[k]` living in `vars \ {v}`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let sub = self.vars.without(v);
        let Some(idx) = self.vars.index_of(v) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(idx) as usize].push((m.removed(idx), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                // removing a variable can reorder grevlex
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MultiPoly::from_sorted(sub, t)
            })
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(vars: VarSet, v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let idx = vars.index_of(v).expect("variable present");
        let terms = coeffs.iter().enumerate().flat_map(|(k, c)| {
            debug_assert_eq!(c.vars, vars.without(v));
            c.terms
                .iter()
                .map(move |(m, x)| (m.inserted(idx, k as u32), x.clone()))
        });
        let mut t: Vec<_> = terms.collect();
        t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly::from_sorted(vars, t)
    }

    /// The same polynomial viewed in a superset of its variables.
    pub fn embed(&self, target: VarSet) -> MultiPoly {
        if target == self.vars {
            return self.clone();
        }
        assert!(self.vars.is_subset_of(target), "embed into smaller set");
        let slots: Vec<usize> = self
            .vars
            .vars()
            .map(|v| target.index_of(v).expect("subset"))
            .collect();
        let n = target.len();
        let mut t: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.spread(&slots, n), c.clone()))
            .collect();
        t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly::from_sorted(target, t)
    }

    /// Drop unused variables to land in `target`; `None` if a dropped
    /// variable actually occurs.
    pub fn restrict(&self, target: VarSet) -> Option<MultiPoly> {
        if target == self.vars {
            return Some(self.clone());
        }
        if !target.is_subset_of(self.vars) {
            return None;
        }
        let mut p = self.clone();
        for v in self.vars.vars().filter(|v| !target.contains(*v)) {
            if p.uses(v) {
                return None;
            }
            let mut cs = p.coefficients_in(v);
            p = cs.swap_remove(0);
        }
        Some(p)
    }

    /// Substitute a rational value for `v`; the result lives in `vars \ {v}`.
    pub fn specialize(&self, v: Var, value: &Rational) -> MultiPoly {
        let coeffs = self.coefficients_in(v);
        let sub = self.vars.without(v);
        let mut acc = MultiPoly::zero(sub);
        for c in coeffs.iter().rev() {
            acc = acc.scale(value).merge(c, false);
        }
        acc
    }

    /// Evaluate at a full assignment. Missing variables are an error.
    pub fn evaluate(&self, point: &[(Var, Rational)]) -> Option<Rational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in self.vars.vars() {
            values.push(point.iter().find(|(w, _)| *w == v)?.1.clone());
        }
        let mut powers: Vec<Vec<Rational>> = values.iter().map(|x| vec![Rational::one(), x.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &values[i];
                    cache.push(next);
                }
                if e > 0 {
                    t *= &cache[e as usize];
                }
            }
            total += t;
        }
        Some(total)
    }

    /// `(c, q)` with `self = c * q`, `q` having coprime integer coefficients
    /// and positive leading coefficient. Zero maps to `(1, 0)`.
    pub fn primitive_split(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        // content = g / lcm
        let content = Rational::new(g, lcm);
        if content.is_one() {
            return (content, self.clone());
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Integer-primitive representative with positive leading coefficient.
    pub fn normalized(&self) -> MultiPoly {
        self.primitive_split().1
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one(self.vars.len());
        };
        it.fold(first.clone(), |g, (m, _)| g.gcd(m))
    }

    /// Map every coefficient-monomial pair; the result is re-sorted.
    pub fn map_terms<F>(&self, vars: VarSet, f: F) -> MultiPoly
    where
        F: Fn(&Monomial, &Rational) -> (Monomial, Rational),
    {
        MultiPoly::from_terms(vars, self.terms.iter().map(|(m, c)| f(m, c)))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names: Vec<&str> = self.vars.vars().map(Var::name).collect();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let num = c.numer().abs();
            let mut mono = String::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push_str(names[i]),
                    _ => mono.push_str(&format!("{}^{}", names[i], e)),
                }
            }
            if mono.is_empty() || !num.is_one() {
                write!(f, "{num}")?;
            }
            f.write_str(&mono)?;
            if !c.denom().is_one() {
                write!(f, "/{}", c.denom())?;
            }
        }
        Ok(())
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly::from_sorted(self.vars, terms)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics if the variable sets differ.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(VarSet::ABX, s).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = MultiPoly::var(VarSet::ABX, Var::X);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn multiplicative_identity() {
        let psi3 = p("3x^4 + 6ax^2 + 12bx - a^2");
        assert_eq!(&psi3 * &MultiPoly::one(VarSet::ABX), psi3);
    }

    #[test]
    fn power_evaluates_as_integer_power() {
        let e = MultiPoly::var(VarSet::ABE, Var::E);
        let r = |n: i64| Rational::from_integer(n.into());
        let v = e
            .pow(3)
            .evaluate(&[(Var::SmallA, r(1)), (Var::SmallB, r(1)), (Var::E, r(2))])
            .unwrap();
        assert_eq!(v, r(8));
    }

    #[test]
    fn mismatched_variable_sets_error() {
        let a = MultiPoly::var(VarSet::AB, Var::SmallA);
        let x = MultiPoly::var(VarSet::ABX, Var::X);
        assert_eq!(
            a.checked_add(&x),
            Err(Error::VarSetMismatch(VarSet::AB, VarSet::ABX))
        );
        assert!(a.checked_mul(&x).is_err());
    }

    #[test]
    fn exact_division() {
        let f = p("a^2 - b^2");
        let g = p("a - b");
        assert_eq!(f.div_exact(&g), Some(p("a + b")));
        assert_eq!(g.div_exact(&f), None);
        assert_eq!(p("x^3 + 1").div_exact(&p("x + 2")), None);
    }

    #[test]
    fn coefficient_view_round_trips() {
        let f = p("3x^4 + 6ax^2 + 12bx - a^2");
        let cs = f.coefficients_in(Var::X);
        assert_eq!(cs.len(), 5);
        assert_eq!(cs[4], MultiPoly::from_int(VarSet::AB, 3));
        assert_eq!(MultiPoly::from_coefficients_in(VarSet::ABX, Var::X, &cs), f);
    }

    #[test]
    fn primitive_split_normalizes_sign_and_content() {
        let f = p("-4a/3 + 2b");
        let (c, q) = f.primitive_split();
        assert_eq!(&q.scale(&c), &f);
        assert!(q.leading_coeff() > Rational::zero());
        assert_eq!(q, p("2a - 3b").normalized());
    }

    #[test]
    fn display_uses_fraction_suffix() {
        assert_eq!(p("a^2/3 - 4b").to_string(), "a^2/3 - 4b");
        assert_eq!(p("-2632ab/3").to_string(), "-2632ab/3");
    }
}
