//! The coefficients `c_{ijkl}` of `T_N(a^i b^j) = sum c_{ijkl} a^k b^l`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rational, Var, VarSet};

/// Monomials `a^i b^j` of weight `4i + 6j = k`, in increasing `j`.
pub fn monomials_of_weight(k: u32) -> Vec<(u32, u32)> {
    if k % 2 == 1 {
        return Vec::new();
    }
    (0..=k / 6)
        .filter(|j| (k - 6 * j) % 4 == 0)
        .map(|j| ((k - 6 * j) / 4, j))
        .collect()
}

/// Monomials of weight at most `w`, ordered by weight then `j`.
pub fn monomials_up_to(w: u32) -> Vec<(u32, u32)> {
    (0..=w).step_by(2).flat_map(monomials_of_weight).collect()
}

pub fn check_weight(k: i64) -> Result<u32> {
    if k < 0 || k % 2 != 0 {
        return Err(Error::InvalidWeight(k));
    }
    Ok(k as u32)
}

/// Sparse table `(i, j) -> (k, l) -> c_{ijkl}`; zero coefficients are
/// absent, but every source monomial of weight `<= max_weight` has a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub level: u32,
    pub max_weight: u32,
    pub entries: BTreeMap<(u32, u32), BTreeMap<(u32, u32), Rational>>,
}

impl CoefficientTable {
    pub fn new(level: u32, max_weight: u32) -> CoefficientTable {
        CoefficientTable {
            level,
            max_weight,
            entries: BTreeMap::new(),
        }
    }

    /// Build from the images `T_N(a^i b^j)` as polynomials in `a, b`.
    /// Rows outside the weight bound are ignored.
    pub fn from_images<'a, I>(level: u32, max_weight: u32, images: I) -> CoefficientTable
    where
        I: IntoIterator<Item = ((u32, u32), &'a MultiPoly)>,
    {
        let mut t = CoefficientTable::new(level, max_weight);
        for ((i, j), p) in images {
            if 4 * i + 6 * j > max_weight {
                continue;
            }
            let vars = p.vars();
            let (ia, ib) = (vars.index_of(Var::SmallA), vars.index_of(Var::SmallB));
            let row = p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let k = ia.map_or(0, |x| m.exponent(x));
                    let l = ib.map_or(0, |x| m.exponent(x));
                    ((k, l), c.clone())
                })
                .collect();
            t.entries.insert((i, j), row);
        }
        t
    }

    pub fn get(&self, ijkl: (u32, u32, u32, u32)) -> Rational {
        let (i, j, k, l) = ijkl;
        self.entries
            .get(&(i, j))
            .and_then(|r| r.get(&(k, l)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `T_N(a^i b^j)` as a polynomial in `a, b`.
    pub fn image(&self, i: u32, j: u32) -> Option<MultiPoly> {
        let row = self.entries.get(&(i, j))?;
        let terms = row.iter().map(|(&(k, l), c)| {
            (crate::poly::Monomial::from_exponents(&[k, l]), c.clone())
        });
        Some(MultiPoly::from_terms(VarSet::AB, terms))
    }

    /// Entries violating `4i + 6j = 4k + 6l`.
    pub fn weight_violations(&self) -> Vec<(u32, u32, u32, u32)> {
        let mut out = Vec::new();
        for (&(i, j), row) in &self.entries {
            for &(k, l) in row.keys() {
                if 4 * i + 6 * j != 4 * k + 6 * l {
                    out.push((i, j, k, l));
                }
            }
        }
        out
    }

    /// Restriction to source monomials of weight `<= w`.
    pub fn truncated(&self, w: u32) -> CoefficientTable {
        CoefficientTable {
            level: self.level,
            max_weight: w.min(self.max_weight),
            entries: self
                .entries
                .iter()
                .filter(|(&(i, j), _)| 4 * i + 6 * j <= w)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Sum of the diagonal coefficients `c_{ijij}` over weight `k`.
    pub fn trace_on_weight(&self, k: i64) -> Result<Rational> {
        let k = check_weight(k)?;
        if k > self.max_weight {
            return Err(Error::InsufficientTruncation {
                have: self.max_weight as usize,
                need: k as usize,
            });
        }
        Ok(monomials_of_weight(k)
            .into_iter()
            .map(|(i, j)| self.get((i, j, i, j)))
            .sum())
    }

    /// First `(i, j, k, l)` at which the tables differ, with both values.
    pub fn first_difference(&self, other: &CoefficientTable) -> Option<((u32, u32, u32, u32), Rational, Rational)> {
        let mut keys: Vec<(u32, u32, u32, u32)> = Vec::new();
        for t in [self, other] {
            for (&(i, j), row) in &t.entries {
                keys.extend(row.keys().map(|&(k, l)| (i, j, k, l)));
            }
        }
        let rows: std::collections::BTreeSet<(u32, u32)> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for key in keys {
            let (x, y) = (self.get(key), other.get(key));
            if x != y {
                return Some((key, x, y));
            }
        }
        // a row present on one side only, with no nonzero entries
        rows.into_iter()
            .find(|r| self.entries.contains_key(r) != other.entries.contains_key(r))
            .map(|(i, j)| ((i, j, i, j), self.get((i, j, i, j)), other.get((i, j, i, j))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    #[test]
    fn weight_spaces() {
        assert_eq!(monomials_of_weight(12), vec![(3, 0), (0, 2)]);
        assert_eq!(monomials_of_weight(2), vec![]);
        assert_eq!(monomials_of_weight(0), vec![(0, 0)]);
        assert_eq!(monomials_up_to(24).len(), 19);
    }

    #[test]
    fn rows_and_traces() {
        let p = parse_poly(VarSet::AB, "9a").unwrap();
        let q = parse_poly(VarSet::AB, "3/2").unwrap();
        let t = CoefficientTable::from_images(2, 4, [((1, 0), &p), ((0, 0), &q), ((0, 1), &p)]);
        assert_eq!(t.get((1, 0, 1, 0)), rat(9));
        assert!(t.entries.get(&(0, 1)).is_none());
        assert_eq!(t.trace_on_weight(4).unwrap(), rat(9));
        assert_eq!(t.trace_on_weight(3), Err(Error::InvalidWeight(3)));
        assert!(t.weight_violations().is_empty());
        assert_eq!(t.image(1, 0).unwrap(), p);
    }

    #[test]
    fn differences() {
        let p = parse_poly(VarSet::AB, "9a").unwrap();
        let q = parse_poly(VarSet::AB, "8a").unwrap();
        let t = CoefficientTable::from_images(2, 4, [((1, 0), &p)]);
        let u = CoefficientTable::from_images(2, 4, [((1, 0), &q)]);
        assert_eq!(t.first_difference(&t), None);
        assert_eq!(t.first_difference(&u), Some(((1, 0, 1, 0), rat(9), rat(8))));
    }
}
