//! Division polynomials and multiplication formulas for
//! `y^2 = x^3 + a x + b`.
//!
//! Everything is stored y-free. For even `n` the true `psi_n` is
//! `y * body`, and every `y^2` is replaced by `x^3 + a x + b`.

use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::poly::{frac, parse_poly, MultiPoly, VarSet};

#[derive(Clone, Debug, PartialEq)]
pub struct DivisionPolynomial {
    pub index: u32,
    /// `psi_n` for odd `n`, `psi_n / y` for even `n`.
    pub body: MultiPoly,
    pub even: bool,
}

impl DivisionPolynomial {
    /// The y-free reduction of `psi_n^2`.
    pub fn squared(&self) -> MultiPoly {
        let sq = self.body.pow(2);
        if self.even {
            &sq * &curve_rhs()
        } else {
            sq
        }
    }
}

/// `x(lP) = phi(x_P) / psi_sq(x_P)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicationFormula {
    pub index: u32,
    pub phi: MultiPoly,
    pub psi_sq: MultiPoly,
}

/// `x^3 + a x + b`.
pub fn curve_rhs() -> MultiPoly {
    parse_poly(VarSet::ABX, "x^3 + ax + b").expect("static")
}

type Table = RwLock<Vec<Arc<DivisionPolynomial>>>;

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(base_cases()))
}

fn base_cases() -> Vec<Arc<DivisionPolynomial>> {
    let p = |s: &str| parse_poly(VarSet::ABX, s).expect("static");
    [
        (0, "0", false),
        (1, "1", false),
        (2, "2", true),
        (3, "3x^4 + 6ax^2 + 12bx - a^2", false),
        (4, "4(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3)", true),
    ]
    .into_iter()
    .map(|(index, body, even)| {
        Arc::new(DivisionPolynomial {
            index,
            body: p(body),
            even,
        })
    })
    .collect()
}

/// Extend `t` (indices `0..t.len()`) through index `n`.
fn extend(t: &mut Vec<Arc<DivisionPolynomial>>, n: usize) {
    let y4 = curve_rhs().pow(2);
    let half = frac(1, 2);
    while t.len() <= n {
        let k = t.len();
        let b = |i: usize| &t[i].body;
        let body = if k % 2 == 1 {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            let m = (k - 1) / 2;
            let left = b(m + 2) * &b(m).pow(3);
            let right = b(m - 1) * &b(m + 1).pow(3);
            if m % 2 == 0 {
                &(&left * &y4) - &right
            } else {
                &left - &(&right * &y4)
            }
        } else {
            // 2y psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2);
            // the y factors cancel the same way for either parity of m
            let m = k / 2;
            let inner = &(b(m + 2) * &b(m - 1).pow(2)) - &(b(m - 2) * &b(m + 1).pow(2));
            (b(m) * &inner).scale(&half)
        };
        t.push(Arc::new(DivisionPolynomial {
            index: k as u32,
            body,
            even: k % 2 == 0,
        }));
    }
}

/// `psi_n`, memoized in a process-wide table that only ever grows.
pub fn division_poly(n: u32) -> Result<Arc<DivisionPolynomial>> {
    if n == 0 {
        return Err(Error::InvalidIndex);
    }
    let idx = n as usize;
    {
        let t = table().read().expect("division polynomial table poisoned");
        if let Some(p) = t.get(idx) {
            return Ok(Arc::clone(p));
        }
    }
    let mut t = table().write().expect("division polynomial table poisoned");
    extend(&mut t, idx);
    Ok(Arc::clone(&t[idx]))
}

/// `phi_l = x psi_l^2 - psi_{l+1} psi_{l-1}` together with `psi_l^2`.
pub fn mult_formula(l: u32) -> Result<MultiplicationFormula> {
    if l == 0 {
        return Err(Error::InvalidIndex);
    }
    let psi = division_poly(l)?;
    let up = division_poly(l + 1)?;
    let psi_sq = psi.squared();
    let x = MultiPoly::var(VarSet::ABX, crate::poly::Var::X);
    let cross = if l == 1 {
        // psi_0 = 0
        MultiPoly::zero(VarSet::ABX)
    } else {
        let down = division_poly(l - 1)?;
        let prod = &up.body * &down.body;
        if up.even {
            &prod * &curve_rhs()
        } else {
            prod
        }
    };
    let phi = &(&x * &psi_sq) - &cross;
    Ok(MultiplicationFormula {
        index: l,
        phi,
        psi_sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, weight_of, Homogeneity, Rational, Var};

    fn abx(s: &str) -> MultiPoly {
        parse_poly(VarSet::ABX, s).unwrap()
    }

    #[test]
    fn base_case_one() {
        assert!(division_poly(1).unwrap().body.is_one());
        assert_eq!(division_poly(0), Err(Error::InvalidIndex));
    }

    #[test]
    fn psi_three_literal() {
        let p = division_poly(3).unwrap();
        assert_eq!(p.body, abx("3x^4 + 6ax^2 + 12bx - a^2"));
        assert!(!p.even);
    }

    #[test]
    fn psi_five_degree_and_leading_term() {
        let p = division_poly(5).unwrap();
        assert_eq!(p.body.degree_in(Var::X), 12);
        let lead = p.body.coefficients_in(Var::X)[12].clone();
        assert_eq!(lead, MultiPoly::from_int(VarSet::AB, 5));
    }

    #[test]
    fn doubling_formula() {
        let f = mult_formula(2).unwrap();
        assert_eq!(f.phi, abx("x^4 - 2ax^2 - 8bx + a^2"));
        assert_eq!(f.psi_sq, abx("4(x^3 + ax + b)"));
    }

    #[test]
    fn doubling_on_y2_x3_plus_1() {
        let f = mult_formula(2).unwrap();
        let pt = [(Var::SmallA, rat(0)), (Var::SmallB, rat(1)), (Var::X, rat(2))];
        let num = f.phi.evaluate(&pt).unwrap();
        let den = f.psi_sq.evaluate(&pt).unwrap();
        assert_eq!(den, rat(36));
        assert_eq!(num / den, Rational::from_integer(0.into()));
    }

    #[test]
    fn weights_of_formulas() {
        let f = mult_formula(3).unwrap();
        assert_eq!(weight_of(&f.phi), Homogeneity::Weight(18));
        assert_eq!(weight_of(&f.psi_sq), Homogeneity::Weight(16));
        for n in 1..=9u32 {
            let p = division_poly(n).unwrap();
            let w = if p.even { n * n - 4 } else { n * n - 1 } as i64;
            assert_eq!(weight_of(&p.body), Homogeneity::Weight(w), "psi_{n}");
        }
    }

    #[test]
    fn odd_prime_degree_invariant() {
        for n in [3u32, 5, 7] {
            let p = division_poly(n).unwrap();
            let d = (n * n - 1) / 2;
            assert_eq!(p.body.degree_in(Var::X), d);
            let lead = &p.body.coefficients_in(Var::X)[d as usize];
            assert_eq!(lead, &MultiPoly::from_int(VarSet::AB, n as i64));
        }
    }
}
