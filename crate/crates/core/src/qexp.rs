//! Independent route to `c_{ijkl}`: truncated q-expansions of `a`, `b`,
//! `e`, the coefficient formula for `T_N`, and a linear solve against the
//! monomial basis of each weight.
//!
//! Only the exact rational type is shared with the symbolic pipeline.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::Rational;
use crate::table::CoefficientTable;

/// Extra rows beyond the dimension of a weight space, so every solve is
/// over-determined.
pub const GUARD_ROWS: usize = 4;

/// `sum_{n=0}^{Q} c_n q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
    weight: Option<u32>,
}

impl QSeries {
    pub fn new(coeffs: Vec<Rational>, weight: Option<u32>) -> QSeries {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        QSeries { coeffs, weight }
    }

    pub fn constant(c: Rational, order: usize) -> QSeries {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        QSeries::new(coeffs, Some(0))
    }

    /// Truncation order `Q`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn weight(&self) -> Option<u32> {
        self.weight
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let n = (order + 1).min(self.coeffs.len());
        QSeries::new(self.coeffs[..n].to_vec(), self.weight)
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|x| x * c).collect(), self.weight)
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut acc = QSeries::constant(Rational::one(), self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn zip(&self, other: &QSeries, f: impl Fn(&Rational, &Rational) -> Rational) -> QSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let weight = if self.weight == other.weight { self.weight } else { None };
        QSeries::new((0..n).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect(), weight)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.zip(rhs, |x, y| x + y)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.zip(rhs, |x, y| x - y)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !rhs.coeffs[k - i].is_zero())
                    .map(|i| &self.coeffs[i] * &rhs.coeffs[k - i])
                    .sum()
            })
            .collect();
        let weight = match (self.weight, rhs.weight) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        QSeries::new(coeffs, weight)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", cells.join(", "))
    }
}

/// `sigma_k(n) = sum_{d | n} d^k` for `n = 0..=max` (entry 0 unused, zero).
pub fn divisor_sums(k: u32, max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); max + 1];
    for d in 1..=max {
        let p = BigInt::from(d).pow(k);
        for m in (d..=max).step_by(d) {
            out[m] += &p;
        }
    }
    out
}

/// Sum of the odd divisors of `n` for `n = 0..=max`.
pub fn odd_divisor_sums(max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); max + 1];
    for d in (1..=max).step_by(2) {
        for m in (d..=max).step_by(d) {
            out[m] += d;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    A,
    B,
    E,
    Delta,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::A => "a",
            Form::B => "b",
            Form::E => "e",
            Form::Delta => "delta",
        }
    }

    pub fn from_name(s: &str) -> Option<Form> {
        [Form::A, Form::B, Form::E, Form::Delta].into_iter().find(|f| f.name() == s)
    }

    pub fn weight(self) -> u32 {
        match self {
            Form::A => 4,
            Form::B => 6,
            Form::E => 2,
            Form::Delta => 12,
        }
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `c0 (1 + m sum s(n) q^n)`.
fn eisenstein(c0: Rational, m: i64, sums: &[BigInt], weight: u32) -> QSeries {
    let step = &c0 * Rational::from_integer(m.into());
    let coeffs = sums
        .iter()
        .enumerate()
        .map(|(n, s)| if n == 0 { c0.clone() } else { &step * Rational::from_integer(s.clone()) })
        .collect();
    QSeries::new(coeffs, Some(weight))
}

/// `a = -(1 + 240 sum sigma_3(n) q^n)/3`, `b = 2(1 - 504 sum sigma_5(n) q^n)/27`,
/// `e = -2(1 + 24 sum sigma_odd(n) q^n)/3`, and the normalized cusp form
/// proportional to `4a^3 + 27b^2`.
pub fn eisenstein_series(form: Form, order: usize) -> QSeries {
    match form {
        Form::A => eisenstein(q(-1, 3), 240, &divisor_sums(3, order), 4),
        Form::B => eisenstein(q(2, 27), -504, &divisor_sums(5, order), 6),
        Form::E => eisenstein(q(-2, 3), 24, &odd_divisor_sums(order), 2),
        Form::Delta => delta(order),
    }
}

/// `4a^3 + 27b^2` scaled so its first nonzero coefficient is 1.
pub fn delta(order: usize) -> QSeries {
    let (scale, _) = delta_normalization(order.max(1));
    let a = eisenstein_series(Form::A, order);
    let b = eisenstein_series(Form::B, order);
    let raw = &a.pow(3).scale(&q(4, 1)) + &b.pow(2).scale(&q(27, 1));
    raw.scale(&scale)
}

/// The factor `s` with `s (4a^3 + 27b^2) = q + O(q^2)`, and the index of the
/// leading coefficient, both read off the expansion.
pub fn delta_normalization(order: usize) -> (Rational, usize) {
    let a = eisenstein_series(Form::A, order);
    let b = eisenstein_series(Form::B, order);
    let raw = &a.pow(3).scale(&q(4, 1)) + &b.pow(2).scale(&q(27, 1));
    let lead = raw
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("4a^3 + 27b^2 is not identically zero");
    (raw.coeff(lead).recip(), lead)
}

/// `a^i b^j` truncated at `order`.
pub fn monomial_series(i: u32, j: u32, order: usize) -> QSeries {
    let a = eisenstein_series(Form::A, order);
    let b = eisenstein_series(Form::B, order);
    &a.pow(i) * &b.pow(j)
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(T_N f)_n = f_{Nn} + N^{k-1} f_{n/N}`, the second term only when `N | n`.
pub fn hecke_on_series(f: &QSeries, k: u32, n: u32, order: usize) -> Result<QSeries> {
    if !is_prime(n) {
        return Err(Error::UnsupportedLevel(n));
    }
    let step = n as usize;
    let need = step * order;
    if f.order() < need {
        return Err(Error::InsufficientTruncation {
            have: f.order(),
            need,
        });
    }
    let lift = Rational::new(BigInt::from(n).pow(k), BigInt::from(n));
    let coeffs = (0..=order)
        .map(|m| {
            let mut c = f.coeff(step * m).clone();
            if m % step == 0 {
                c += &lift * f.coeff(m / step);
            }
            c
        })
        .collect();
    Ok(QSeries::new(coeffs, Some(k)))
}

/// `(i, j)` with `4i + 6j = k`.
fn weight_basis(k: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut j = 0;
    while 6 * j <= k {
        if (k - 6 * j) % 4 == 0 {
            out.push(((k - 6 * j) / 4, j));
        }
        j += 1;
    }
    out
}

/// Dimension of the weight-`k` part of `Q[a, b]`.
pub fn weight_dimension(k: u32) -> usize {
    if k % 2 == 1 {
        0
    } else {
        weight_basis(k).len()
    }
}

/// Coefficients of `f` in the monomials of weight `k`.
///
/// Requires `order >= dim + GUARD_ROWS`; every surplus row must be
/// consistent with the solution.
pub fn express_in_monomials(f: &QSeries, k: u32) -> Result<BTreeMap<(u32, u32), Rational>> {
    if k % 2 == 1 {
        return Err(Error::InvalidWeight(k as i64));
    }
    let basis = weight_basis(k);
    let dim = basis.len();
    if f.order() < dim + GUARD_ROWS {
        return Err(Error::UnderdeterminedSystem(k));
    }
    let columns: Vec<QSeries> = basis.iter().map(|&(i, j)| monomial_series(i, j, f.order())).collect();
    // augmented rows [m_1(n) .. m_d(n) | f_n]
    let mut rows: Vec<Vec<Rational>> = (0..=f.order())
        .map(|n| {
            let mut r: Vec<Rational> = columns.iter().map(|c| c.coeff(n).clone()).collect();
            r.push(f.coeff(n).clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..dim {
        let p = (pivot_row..rows.len())
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(Error::UnderdeterminedSystem(k))?;
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &factor * y;
            }
        }
        pivot_row += 1;
    }
    if rows[dim..].iter().any(|r| !r[dim].is_zero()) {
        return Err(Error::InconsistentSystem(k));
    }
    Ok(basis
        .into_iter()
        .zip(&rows)
        .filter(|(_, r)| !r[dim].is_zero())
        .map(|(m, r)| (m, r[dim].clone()))
        .collect())
}

/// `T_N(a^i b^j)` in the monomial basis, with truncation chosen from the
/// weight.
pub fn hecke_image(n: u32, i: u32, j: u32) -> Result<BTreeMap<(u32, u32), Rational>> {
    let k = 4 * i + 6 * j;
    let out_order = weight_dimension(k) + GUARD_ROWS;
    let f = monomial_series(i, j, n as usize * out_order);
    let g = hecke_on_series(&f, k, n, out_order)?;
    express_in_monomials(&g, k)
}

/// Every `c_{ijkl}` with `4i + 6j <= w`, from q-expansions alone.
pub fn oracle_table(n: u32, w: u32) -> Result<CoefficientTable> {
    let mut cells = Vec::new();
    for k in (0..=w).step_by(2) {
        cells.extend(weight_basis(k));
    }
    let images = par::map_slice(&cells, |&(i, j)| hecke_image(n, i, j));
    let mut table = CoefficientTable::new(n, w);
    for (cell, image) in cells.into_iter().zip(images) {
        table.entries.insert(cell, image?);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn leading_coefficients() {
        let a = eisenstein_series(Form::A, 2);
        assert_eq!(a.coeffs(), &[q(-1, 3), r(-80), r(-720)]);
        let b = eisenstein_series(Form::B, 1);
        assert_eq!(b.coeffs(), &[q(2, 27), q(-112, 3)]);
        let e = eisenstein_series(Form::E, 2);
        assert_eq!(e.coeffs(), &[q(-2, 3), r(-16), r(-16)]);
    }

    #[test]
    fn cubic_relation() {
        let e = eisenstein_series(Form::E, 40);
        let a = eisenstein_series(Form::A, 40);
        let b = eisenstein_series(Form::B, 40);
        assert!((&(&e.pow(3) + &(&a * &e)) + &b).is_zero());
    }

    #[test]
    fn delta_is_normalized() {
        let (s, lead) = delta_normalization(5);
        assert_eq!(lead, 1);
        assert_eq!(s, q(-1, 256));
        let d = delta(3);
        assert_eq!(d.coeffs(), &[r(0), r(1), r(-24), r(252)]);
    }

    #[test]
    fn constants_and_eigenvalues() {
        let one = QSeries::constant(r(1), 10);
        assert_eq!(hecke_on_series(&one, 0, 3, 3).unwrap(), QSeries::constant(q(4, 3), 3));
        assert_eq!(
            hecke_on_series(&one, 0, 3, 4).unwrap_err(),
            Error::InsufficientTruncation { have: 10, need: 12 }
        );
        assert_eq!(hecke_image(3, 0, 1).unwrap(), BTreeMap::from([((0, 1), r(244))]));
        assert_eq!(hecke_image(5, 0, 0).unwrap(), BTreeMap::from([((0, 0), q(6, 5))]));
    }

    #[test]
    fn rejects_non_primes() {
        let one = QSeries::constant(r(1), 10);
        assert_eq!(hecke_on_series(&one, 0, 4, 2), Err(Error::UnsupportedLevel(4)));
    }

    #[test]
    fn detects_short_and_inconsistent_input() {
        assert_eq!(express_in_monomials(&monomial_series(3, 0, 5), 12), Err(Error::UnderdeterminedSystem(12)));
        let mut bad = monomial_series(3, 0, 8).coeffs().to_vec();
        bad[8] += r(1);
        assert_eq!(express_in_monomials(&QSeries::new(bad, Some(12)), 12), Err(Error::InconsistentSystem(12)));
    }
}
