//! Dense univariate polynomials over `Q(a, b)`, ascending coefficients.

use crate::error::{Error, Result};
use crate::poly::RatFunc;

pub(crate) type KPoly = Vec<RatFunc>;

pub(crate) fn trim(p: &mut KPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[RatFunc]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn sub(p: &[RatFunc], q: &[RatFunc]) -> KPoly {
    let zero = RatFunc::zero(crate::poly::VarSet::AB);
    let n = p.len().max(q.len());
    let mut out: KPoly = (0..n)
        .map(|i| {
            let x = p.get(i).unwrap_or(&zero);
            match q.get(i) {
                Some(y) if !y.is_zero() => x - y,
                _ => x.clone(),
            }
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(p: &[RatFunc], q: &[RatFunc]) -> KPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let zero = RatFunc::zero(crate::poly::VarSet::AB);
    let mut out = vec![zero; p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in q.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `p` by nonzero `d`.
pub(crate) fn divrem(p: &[RatFunc], d: &[RatFunc]) -> Result<(KPoly, KPoly)> {
    let dd = degree(d).ok_or(Error::DivisionByZero)?;
    let inv = d[dd].inv()?;
    let mut r: KPoly = p.to_vec();
    trim(&mut r);
    let zero = RatFunc::zero(crate::poly::VarSet::AB);
    let mut quot = vec![zero; r.len().saturating_sub(dd).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < dd {
            break;
        }
        let c = &r[dr] * &inv;
        let shift = dr - dd;
        for k in 0..dd {
            if !d[k].is_zero() {
                r[shift + k] = &r[shift + k] - &(&c * &d[k]);
            }
        }
        r.truncate(dr);
        trim(&mut r);
        quot[shift] = c;
    }
    trim(&mut quot);
    Ok((quot, r))
}

/// `u^{-1}` modulo `m` (degree of `u` below that of `m`).
pub(crate) fn inverse_mod(u: &[RatFunc], m: &[RatFunc]) -> Result<KPoly> {
    let one = RatFunc::one(crate::poly::VarSet::AB);
    let mut r0: KPoly = m.to_vec();
    let mut r1: KPoly = u.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: KPoly = Vec::new();
    let mut s1: KPoly = vec![one];
    loop {
        match degree(&r1) {
            None => return Err(Error::NotInvertible),
            Some(0) => {
                let c = r1[0].inv()?;
                return Ok(s1.iter().map(|x| x * &c).collect());
            }
            Some(_) => {}
        }
        let (q, r) = divrem(&r0, &r1)?;
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn k(n: i64) -> RatFunc {
        RatFunc::from_int(VarSet::AB, n)
    }

    #[test]
    fn divrem_reconstructs() {
        // (x^3 + 2x + 5) = (x - 1)(x^2 + x + 3) + 8
        let p = vec![k(5), k(2), k(0), k(1)];
        let d = vec![k(-1), k(1)];
        let (q, r) = divrem(&p, &d).unwrap();
        assert_eq!(q, vec![k(3), k(1), k(1)]);
        assert_eq!(r, vec![k(8)]);
    }

    #[test]
    fn inverse_modulo_quadratic() {
        // x * (-x) = -x^2 = 1 mod x^2 + 1
        let m = vec![k(1), k(0), k(1)];
        let inv = inverse_mod(&[k(0), k(1)], &m).unwrap();
        assert_eq!(inv, vec![k(0), k(-1)]);
        assert_eq!(inverse_mod(&[k(0)], &m), Err(Error::NotInvertible));
    }
}
