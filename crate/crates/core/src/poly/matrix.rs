use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MultiPoly, RatFunc, Rational};
use crate::par;

/// Commutative Q-algebra elements usable as matrix entries.
pub trait Scalar: Clone + PartialEq + Send + Sync + fmt::Debug {
    /// Zero in the same ring as `self`.
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    fn scale_elem(&self, c: &Rational) -> Self;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn scale_elem(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Scalar for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn scale_elem(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Scalar for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.vars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn scale_elem(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Matrix over the rational-function field; the carrier of regular
/// representations.
pub type PolyMatrix = Matrix<RatFunc>;

impl<T: Scalar> Matrix<T> {
    /// Panics unless `entries.len() == n * n`.
    pub fn from_entries(n: usize, entries: Vec<T>) -> Matrix<T> {
        assert_eq!(entries.len(), n * n, "matrix must be square");
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Matrix<T> {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T + Sync + Send) -> Matrix<T> {
        let entries = par::map_range(n * n, |k| f(k / n, k % n));
        Matrix { n, entries }
    }

    /// Identity, with ring taken from `template`.
    pub fn identity(n: usize, template: &T) -> Matrix<T> {
        let zero = template.zero_like();
        let one = template.one_like();
        Matrix::from_fn(n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Build from columns (each of length `n`).
    pub fn from_columns(cols: Vec<Vec<T>>) -> Matrix<T> {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n), "matrix must be square");
        let entries = (0..n * n).map(|k| cols[k % n][k / n].clone()).collect();
        Matrix { n, entries }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Sync + Send) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: par::map_slice(&self.entries, f),
        }
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            entries: par::map_range(self.entries.len(), |k| {
                self.entries[k].add_elem(&other.entries[k])
            }),
        }
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            entries: par::map_range(self.entries.len(), |k| {
                self.entries[k].sub_elem(&other.entries[k])
            }),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix<T> {
        self.map(|x| x.scale_elem(c))
    }

    /// Multiply every entry by the ring element `s`.
    pub fn scale_by(&self, s: &T) -> Matrix<T> {
        self.map(|x| x.mul_elem(s))
    }

    pub fn add_scalar(&self, s: &T) -> Matrix<T> {
        let mut out = self.clone();
        for i in 0..self.n {
            let k = i * self.n + i;
            out.entries[k] = out.entries[k].add_elem(s);
        }
        out
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let entries = par::map_range(n * n, |k| {
            let (i, j) = (k / n, k % n);
            let mut acc: Option<T> = None;
            for l in 0..n {
                let x = &self.entries[i * n + l];
                let y = &other.entries[l * n + j];
                if x.is_zero_elem() || y.is_zero_elem() {
                    continue;
                }
                let t = x.mul_elem(y);
                acc = Some(match acc {
                    None => t,
                    Some(a) => a.add_elem(&t),
                });
            }
            acc.unwrap_or_else(|| self.entries[0].zero_like())
        });
        Matrix { n, entries }
    }

    pub fn pow(&self, e: u32) -> Matrix<T> {
        let mut result = Matrix::identity(self.n, &self.entries[0]);
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    pub fn trace(&self) -> T {
        let mut acc = self.entries[0].zero_like();
        for i in 0..self.n {
            acc = acc.add_elem(self.get(i, i));
        }
        acc
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix<T>) -> T {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let parts = par::map_range(n, |i| {
            let mut acc = self.entries[0].zero_like();
            for l in 0..n {
                let x = &self.entries[i * n + l];
                let y = &other.entries[l * n + i];
                if !x.is_zero_elem() && !y.is_zero_elem() {
                    acc = acc.add_elem(&x.mul_elem(y));
                }
            }
            acc
        });
        parts
            .into_iter()
            .reduce(|a, b| a.add_elem(&b))
            .unwrap_or_else(|| self.entries[0].zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero_elem)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let width = (0..self.n)
            .map(|j| (0..self.n).map(|i| cells[i * self.n + j].len()).max().unwrap_or(0))
            .collect::<Vec<_>>();
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| format!("{:>w$}", cells[i * self.n + j], w = width[j]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

/// Coefficients of `det(lambda I - M)`, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> CharPoly<T> {
    /// Coefficient of `lambda^k`.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn ascending(&self) -> &[T] {
        &self.coeffs
    }

    /// `c_n, ..., c_0`.
    pub fn descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn det(&self) -> T {
        let c0 = &self.coeffs[0];
        if self.dim() % 2 == 0 {
            c0.clone()
        } else {
            c0.neg_elem()
        }
    }

    /// `tr adj(M) = (-1)^(n-1) c_1`.
    pub fn adjugate_trace(&self) -> T {
        let c1 = &self.coeffs[1];
        if self.dim() % 2 == 1 {
            c1.clone()
        } else {
            c1.neg_elem()
        }
    }

    /// `sum_k c_k M^k`; zero by Cayley-Hamilton.
    pub fn evaluate_at(&self, m: &Matrix<T>) -> Matrix<T> {
        // Horner
        let mut acc = Matrix::identity(m.dim(), &self.coeffs[0]).scale_by(self.coeffs.last().unwrap());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(m).add_scalar(c);
        }
        acc
    }
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence:
/// `M_1 = I`, `c_{n-k} = -tr(M M_k) / k`, `M_{k+1} = M M_k + c_{n-k} I`.
///
/// Only divides by the integers `1..=n`, so polynomial entries stay
/// polynomial. Entries with denominators should be cleared first.
pub fn char_poly<T: Scalar>(m: &Matrix<T>) -> CharPoly<T> {
    let n = m.dim();
    let template = &m.entries[0];
    let mut coeffs = vec![template.zero_like(); n + 1];
    coeffs[n] = template.one_like();
    let mut mk = Matrix::identity(n, template);
    for k in 1..=n {
        let c = m
            .trace_of_product(&mk)
            .scale_elem(&Rational::new(BigInt::from(-1), BigInt::from(k)));
        coeffs[n - k] = c;
        if k < n {
            mk = m.mul(&mk).add_scalar(&coeffs[n - k]);
        }
    }
    CharPoly { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VarSet};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn identity_char_poly() {
        let id = Matrix::identity(3, &q(0));
        let cp = char_poly(&id);
        assert_eq!(cp.descending(), vec![q(1), q(-3), q(3), q(-1)]);
        assert_eq!(cp.det(), q(1));
    }

    #[test]
    fn companion_of_cubic_relation() {
        let vars = VarSet::AB;
        let p = |s: &str| parse_poly(vars, s).unwrap();
        let rho_e = Matrix::from_rows(vec![
            vec![p("0"), p("0"), p("-b")],
            vec![p("1"), p("0"), p("-a")],
            vec![p("0"), p("1"), p("0")],
        ]);
        let cp = char_poly(&rho_e);
        assert_eq!(cp.descending(), vec![p("1"), p("0"), p("a"), p("b")]);
        assert!(cp.evaluate_at(&rho_e).is_zero());
        assert_eq!(cp.det(), p("-b"));
    }

    #[test]
    fn trace_of_product_matches_product_trace() {
        let a = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]);
        let b = Matrix::from_rows(vec![vec![q(-1), q(5)], vec![q(7), q(0)]]);
        assert_eq!(a.trace_of_product(&b), a.mul(&b).trace());
    }

    #[test]
    fn columns_round_trip() {
        let a = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]);
        assert_eq!(Matrix::from_columns(vec![a.column(0), a.column(1)]), a);
    }
}
