//! Independent reference computations for the test suites.
//!
//! Nothing here shares code with `hecke-core`'s polynomial machinery: the
//! group law works on concrete rational points, the determinants on plain
//! rational matrices.

pub mod fixtures;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Short Weierstrass curve `y^2 = x^3 + a x + b` over Q.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub a: Q,
    pub b: Q,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Infinity,
    Affine(Q, Q),
}

impl Point {
    pub fn x(&self) -> Option<&Q> {
        match self {
            Point::Infinity => None,
            Point::Affine(x, _) => Some(x),
        }
    }
}

impl Curve {
    /// The curve through `(x, y)` with the given `a`.
    pub fn through(a: Q, x: &Q, y: &Q) -> Curve {
        let b = y * y - x * x * x - &a * x;
        Curve { a, b }
    }

    /// Short model of `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`,
    /// together with the image of the affine point `(x, y)`.
    pub fn from_long(coeffs: [Q; 5], x: &Q, y: &Q) -> (Curve, Point) {
        let [a1, a2, a3, a4, a6] = coeffs;
        let b2 = &a1 * &a1 + q(4) * &a2;
        let b4 = q(2) * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + q(4) * &a6;
        let c4 = &b2 * &b2 - q(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + q(36) * &b2 * &b4 - q(216) * &b6;
        let curve = Curve {
            a: q(-27) * c4,
            b: q(-54) * c6,
        };
        let px = q(36) * x + q(3) * &b2;
        let py = q(108) * (q(2) * y + &a1 * x + &a3);
        (curve, Point::Affine(px, py))
    }

    /// Tate normal form with `(0, 0)` of order 5 (for generic `t`).
    pub fn with_five_torsion(t: &Q) -> (Curve, Point) {
        let coeffs = [q(1) - t, -t.clone(), -t.clone(), q(0), q(0)];
        Curve::from_long(coeffs, &q(0), &q(0))
    }

    pub fn discriminant_part(&self) -> Q {
        q(4) * &self.a * &self.a * &self.a + q(27) * &self.b * &self.b
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    pub fn add(&self, p: &Point, r: &Point) -> Point {
        match (p, r) {
            (Point::Infinity, _) => r.clone(),
            (_, Point::Infinity) => p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => {
                let slope = if x1 == x2 {
                    if (y1 + y2).is_zero() {
                        return Point::Infinity;
                    }
                    (q(3) * x1 * x1 + &self.a) / (q(2) * y1)
                } else {
                    (y2 - y1) / (x2 - x1)
                };
                let x3 = &slope * &slope - x1 - x2;
                let y3 = &slope * (x1 - &x3) - y1;
                Point::Affine(x3, y3)
            }
        }
    }

    pub fn neg(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), -y),
        }
    }

    /// `[n] p` by repeated addition (n is small in every caller).
    pub fn mul(&self, n: u32, p: &Point) -> Point {
        let mut acc = Point::Infinity;
        for _ in 0..n {
            acc = self.add(&acc, p);
        }
        acc
    }

    /// Smallest `n <= bound` with `[n] p = O`.
    pub fn order(&self, p: &Point, bound: u32) -> Option<u32> {
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc == Point::Infinity {
                return Some(n);
            }
            if n < bound {
                acc = self.add(&acc, p);
            }
        }
        None
    }
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    match n {
        0 => Q::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut total = Q::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Q>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det_cofactor(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Fraction-free Bareiss elimination for integer matrices.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
