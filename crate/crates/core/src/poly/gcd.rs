//! Multivariate gcd over Q.
//!
//! Recursive content / primitive-part decomposition with subresultant
//! pseudo-remainder sequences in a chosen main variable. Two cheap exits
//! come first: trial division, and for three or more variables a
//! coprimality certificate from univariate specializations (if every
//! specialization with non-vanishing leading coefficients has trivial gcd,
//! the true gcd has degree zero in that variable).

use num_traits::{One, Zero};

use super::{Monomial, MultiPoly, Rational, Var, VarSet};

/// Greatest common divisor, integer-primitive with positive leading
/// coefficient. `gcd(0, 0)` is `0`.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    assert_eq!(p.vars(), q.vars(), "gcd of polynomials in different rings");
    let vars = p.vars();
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(vars);
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mono = mp.gcd(&mq);
    let p = strip_monomial(p, &mp);
    let q = strip_monomial(q, &mq);
    let core = gcd_stripped(&p, &q);
    let g = core.mul_term(&mono, &Rational::one());
    g.normalized()
}

fn strip_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_one() {
        return p.clone();
    }
    let d = MultiPoly::monomial(p.vars(), m.clone(), Rational::one());
    p.div_exact(&d).expect("monomial content divides")
}

fn gcd_stripped(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let vars = p.vars();
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(vars);
    }
    let pn = p.normalized();
    let qn = q.normalized();
    if pn == qn {
        return pn;
    }
    for (small, large) in [(&pn, &qn), (&qn, &pn)] {
        if small.total_degree() <= large.total_degree()
            && small.vars().vars().all(|v| small.degree_in(v) <= large.degree_in(v))
            && large.div_exact(small).is_some()
        {
            return small.clone();
        }
    }
    if vars.len() >= 3 && coprime_certificate(&pn, &qn) {
        return MultiPoly::one(vars);
    }
    gcd_rec(&pn, &qn)
}

fn gcd_rec(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let vars = p.vars();
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(vars);
    }
    // main variable: occurs in both, smallest max degree
    let shared = vars
        .vars()
        .filter(|&v| p.uses(v) && q.uses(v))
        .min_by_key(|&v| p.degree_in(v).max(q.degree_in(v)));
    let Some(v) = shared else {
        // some variable occurs in only one argument; gcd divides its content
        let v = vars.vars().find(|&v| p.uses(v) || q.uses(v)).expect("non-constant");
        let (with, without) = if p.uses(v) { (p, q) } else { (q, p) };
        let c = content_in(with, v);
        let w = without.restrict(vars.without(v)).expect("v unused");
        return gcd_rec(&c, &w).embed(vars);
    };
    let sub = vars.without(v);
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let c = gcd_rec(&cp, &cq);
    let pp = p.div_exact(&cp.embed(vars)).expect("content divides");
    let qp = q.div_exact(&cq.embed(vars)).expect("content divides");
    let g = subresultant_gcd(&pp.coefficients_in(v), &qp.coefficients_in(v), sub);
    let g = MultiPoly::from_coefficients_in(vars, v, &g);
    let g = if g.uses(v) {
        let cg = content_in(&g, v);
        g.div_exact(&cg.embed(vars)).expect("content divides")
    } else {
        MultiPoly::one(vars)
    };
    (&c.embed(vars) * &g).normalized()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let coeffs = p.coefficients_in(v);
    let sub = p.vars().without(v);
    let mut nonzero: Vec<&MultiPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut g = MultiPoly::zero(sub);
    for c in nonzero {
        g = if g.is_zero() { c.normalized() } else { gcd_rec(&g, c) };
        if g.is_constant() {
            return MultiPoly::one(sub);
        }
    }
    g
}

fn degree(u: &[MultiPoly]) -> Option<usize> {
    u.iter().rposition(|c| !c.is_zero())
}

fn trim(u: &mut Vec<MultiPoly>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

/// Pseudo-remainder of `f` by `g` (coefficients in a polynomial ring).
fn prem(f: &[MultiPoly], g: &[MultiPoly]) -> Vec<MultiPoly> {
    let dg = degree(g).expect("nonzero divisor");
    let lc = &g[dg];
    let mut r: Vec<MultiPoly> = f.to_vec();
    trim(&mut r);
    let Some(df) = degree(&r) else {
        return r;
    };
    if df < dg {
        return r;
    }
    let mut e = (df - dg + 1) as u32;
    while let Some(d) = degree(&r) {
        if d < dg {
            break;
        }
        let lr = r[d].clone();
        for c in r.iter_mut().take(d) {
            *c = &*c * lc;
        }
        for k in 0..dg {
            let idx = k + d - dg;
            r[idx] = &r[idx] - &(&lr * &g[k]);
        }
        r.truncate(d);
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lc.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn subresultant_gcd(p: &[MultiPoly], q: &[MultiPoly], sub: VarSet) -> Vec<MultiPoly> {
    let one = MultiPoly::one(sub);
    let (mut f, mut g) = if degree(p) >= degree(q) {
        (p.to_vec(), q.to_vec())
    } else {
        (q.to_vec(), p.to_vec())
    };
    trim(&mut f);
    trim(&mut g);
    let mut lead = one.clone();
    let mut h = one.clone();
    loop {
        let delta = (degree(&f).unwrap() - degree(&g).unwrap()) as u32;
        let r = prem(&f, &g);
        let Some(dr) = degree(&r) else {
            return g;
        };
        if dr == 0 {
            return vec![one];
        }
        let divisor = &lead * &h.pow(delta);
        f = g;
        g = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        lead = f[degree(&f).unwrap()].clone();
        h = match delta {
            0 => h,
            1 => lead.clone(),
            _ => lead
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    }
}

/// Deterministic small evaluation points.
struct PointStream(u64);

impl PointStream {
    fn next(&mut self) -> Rational {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let v = ((self.0 >> 33) % 61) as i64 - 30;
        let v = if v == 0 { 31 } else { v };
        Rational::from_integer(v.into())
    }
}

fn coprime_certificate(p: &MultiPoly, q: &MultiPoly) -> bool {
    let vars = p.vars();
    let mut stream = PointStream(0x9e3779b97f4a7c15);
    'vars: for v in vars.vars().filter(|&v| p.uses(v) && q.uses(v)) {
        let (dp, dq) = (p.degree_in(v), q.degree_in(v));
        for _ in 0..3 {
            let mut ps = p.clone();
            let mut qs = q.clone();
            for w in vars.vars().filter(|&w| w != v) {
                let val = stream.next();
                ps = ps.specialize(w, &val);
                qs = qs.specialize(w, &val);
            }
            if ps.degree_in(v) != dp || qs.degree_in(v) != dq {
                continue;
            }
            let pu: Vec<Rational> = ps.coefficients_in(v).iter().map(|c| c.constant_term()).collect();
            let qu: Vec<Rational> = qs.coefficients_in(v).iter().map(|c| c.constant_term()).collect();
            if univariate_gcd_degree(pu, qu) == 0 {
                continue 'vars;
            }
        }
        return false;
    }
    true
}

fn univariate_gcd_degree(mut f: Vec<Rational>, mut g: Vec<Rational>) -> usize {
    let trim = |u: &mut Vec<Rational>| {
        while u.last().is_some_and(|c| c.is_zero()) {
            u.pop();
        }
    };
    trim(&mut f);
    trim(&mut g);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let dg = g.len() - 1;
        let inv = g[dg].recip();
        while f.len() > dg {
            let d = f.len() - 1;
            let factor = &f[d] * &inv;
            for k in 0..=dg {
                let t = &factor * &g[k];
                f[k + d - dg] -= t;
            }
            f.pop();
            trim(&mut f);
        }
        std::mem::swap(&mut f, &mut g);
    }
    f.len().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ab(s: &str) -> MultiPoly {
        parse_poly(VarSet::AB, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        // b > a in the monomial order, so the normalized form is b - a
        assert_eq!(poly_gcd(&ab("a^2 - b^2"), &ab("a - b")), ab("a - b").normalized());
        assert_eq!(ab("a - b").normalized(), ab("b - a"));
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        assert_eq!(poly_gcd(&ab("-6a + 4b"), &MultiPoly::zero(VarSet::AB)), ab("2b - 3a"));
    }

    #[test]
    fn discriminant_factor() {
        let d = ab("4a^3 + 27b^2");
        let g = poly_gcd(&(&d * &ab("a")), &(&d * &ab("b")));
        assert_eq!(g, d);
    }

    #[test]
    fn four_variable_common_factor() {
        let vars = VarSet::AB_MARKED;
        let f = parse_poly(vars, "1 - 11aA + 2bB").unwrap();
        let g1 = parse_poly(vars, "A^2 b - a + 3").unwrap();
        let g2 = parse_poly(vars, "B a^2 + A").unwrap();
        assert_eq!(poly_gcd(&(&f * &g1), &(&f * &g2)), f.normalized());
        assert!(poly_gcd(&g1, &g2).is_one());
    }

    #[test]
    fn univariate_degree_counts_common_roots() {
        let r = |n: i64| Rational::from_integer(n.into());
        // (x-1)(x-2) and (x-1)(x+5)
        let f = vec![r(2), r(-3), r(1)];
        let g = vec![r(-5), r(4), r(1)];
        assert_eq!(univariate_gcd_degree(f, g), 1);
    }
}
