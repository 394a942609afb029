use std::collections::BTreeMap;

use num_traits::Zero;

use super::{MultiPoly, RatFunc, Var, VarSet};
use crate::error::{Error, Result};

/// Split a polynomial in `{a, b, A, B}` into its `A^i B^j` coefficients.
fn by_marked_degree(p: &MultiPoly) -> BTreeMap<(u32, u32), MultiPoly> {
    let vars = p.vars();
    let ia = vars.index_of(Var::BigA).expect("A present");
    let ib = vars.index_of(Var::BigB).expect("B present");
    let mut out: BTreeMap<(u32, u32), Vec<_>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key = (m.exponent(ia), m.exponent(ib));
        let rest = m.removed(ib).removed(ia);
        out.entry(key).or_default().push((rest, c.clone()));
    }
    out.into_iter()
        .map(|(k, t)| (k, MultiPoly::from_terms(VarSet::AB, t)))
        .collect()
}

/// Power-series coefficients of `f` in `A, B`: the coefficient of
/// `A^i B^j` for every `i + j <= max_degree`, as polynomials in `a, b`.
///
/// The denominator must have a nonzero constant term at `A = B = 0`.
pub fn series_coefficients(
    f: &RatFunc,
    max_degree: u32,
) -> Result<BTreeMap<(u32, u32), MultiPoly>> {
    if f.vars() != VarSet::AB_MARKED {
        return Err(Error::VarSetMismatch(f.vars(), VarSet::AB_MARKED));
    }
    let num = by_marked_degree(f.num());
    let den = by_marked_degree(f.den());
    let d00 = den
        .get(&(0, 0))
        .and_then(MultiPoly::constant_value)
        .filter(|c| !c.is_zero())
        .ok_or(Error::NotSeriesInvertible)?;
    let inv = d00.recip();
    let mut out: BTreeMap<(u32, u32), MultiPoly> = BTreeMap::new();
    for total in 0..=max_degree {
        for i in (0..=total).rev() {
            let j = total - i;
            let mut acc = num
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| MultiPoly::zero(VarSet::AB));
            for (&(p, q), d) in &den {
                if (p, q) == (0, 0) || p > i || q > j {
                    continue;
                }
                if let Some(prev) = out.get(&(i - p, j - q)) {
                    acc = &acc - &(d * prev);
                }
            }
            out.insert((i, j), acc.scale(&inv));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn m(s: &str) -> MultiPoly {
        parse_poly(VarSet::AB_MARKED, s).unwrap()
    }

    #[test]
    fn product_of_geometric_series() {
        let one = m("1");
        let f = RatFunc::new(one, m("(1 - Aa)(1 - Bb)")).unwrap();
        let s = series_coefficients(&f, 2).unwrap();
        assert_eq!(s[&(1, 1)], parse_poly(VarSet::AB, "ab").unwrap());
        assert_eq!(s[&(2, 0)], parse_poly(VarSet::AB, "a^2").unwrap());
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn single_geometric_series() {
        let f = RatFunc::new(m("1"), m("1 - Aa")).unwrap();
        let s = series_coefficients(&f, 3).unwrap();
        assert_eq!(s[&(3, 0)], parse_poly(VarSet::AB, "a^3").unwrap());
        assert!(s[&(0, 3)].is_zero());
    }

    #[test]
    fn non_invertible_denominator() {
        let f = RatFunc::new(m("1"), m("A + a")).unwrap();
        assert_eq!(series_coefficients(&f, 2), Err(Error::NotSeriesInvertible));
        let g = RatFunc::new(m("1"), m("a - A")).unwrap();
        assert_eq!(series_coefficients(&g, 2), Err(Error::NotSeriesInvertible));
    }
}
