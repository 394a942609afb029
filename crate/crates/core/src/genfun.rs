//! `F_N = c_N tr[(I - A rho(a'))(I - B rho(b'))]^{-1}`, exactly and as a
//! table of coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{
    char_poly, frac, series_coefficients, FracMatrix, Matrix, MultiPoly, PolyMatrix, RatFunc, Rational, Var,
    VarSet,
};
use crate::table::{check_weight, monomials_up_to, CoefficientTable};
use crate::torsion::{cubic_rep, regular_rep_frac, BasisKind, TorsionBasis};
use crate::velu::{isogenous_coefficients, AlgebraElement};

/// Largest matrix dimension accepted by [`generating_function`].
pub const EXACT_MAX_DIM: usize = 8;

/// `rho(a')` and `rho(b')` on a basis of the level-N algebra.
#[derive(Clone, Debug)]
pub struct Representation {
    pub level: u32,
    pub kind: BasisKind,
    pub aprime: FracMatrix,
    pub bprime: FracMatrix,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.aprime.dim()
    }
}

/// The basis used when none is requested: the 6-dimensional one at level 5,
/// the power basis elsewhere.
pub fn default_basis(level: u32) -> BasisKind {
    if level == 5 {
        BasisKind::Symmetric
    } else {
        BasisKind::Power
    }
}

/// Matrix dimension for `(level, kind)` without building anything:
/// 3 at level 2, 6 for the symmetric level-5 basis, `(N^2 - 1)/2` otherwise.
pub fn dimension(level: u32, kind: BasisKind) -> Result<usize> {
    normalization(level, kind)?;
    Ok(match (level, kind) {
        (2, _) => 3,
        (_, BasisKind::Symmetric) => 6,
        _ => ((level * level - 1) / 2) as usize,
    })
}

/// Regular representations of `a'`, `b'`; computed once per process.
pub fn representation(level: u32, kind: BasisKind) -> Result<Arc<Representation>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, BasisKind), Arc<Representation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().expect("representation cache poisoned").get(&(level, kind)) {
        return Ok(Arc::clone(r));
    }
    let rep = if level == 2 {
        if kind != BasisKind::Power {
            return Err(Error::UnsupportedBasis {
                level,
                kind: kind.name().to_string(),
            });
        }
        let c = isogenous_coefficients(2)?;
        let rho = |u: &AlgebraElement| match u {
            AlgebraElement::Cubic(c) => FracMatrix::from_ratfunc(&cubic_rep(c)),
            AlgebraElement::Torsion(_) => unreachable!("level 2 is cubic"),
        };
        Representation {
            level,
            kind,
            aprime: rho(&c.aprime),
            bprime: rho(&c.bprime),
        }
    } else {
        let basis = TorsionBasis::new(level, kind)?;
        let c = isogenous_coefficients(level)?;
        let rho = |u: &AlgebraElement| match u {
            AlgebraElement::Torsion(t) => regular_rep_frac(t, &basis),
            AlgebraElement::Cubic(_) => unreachable!("odd levels use the torsion algebra"),
        };
        Representation {
            level,
            kind,
            aprime: rho(&c.aprime)?,
            bprime: rho(&c.bprime)?,
        }
    };
    let rep = Arc::new(rep);
    let mut guard = cache.lock().expect("representation cache poisoned");
    Ok(Arc::clone(guard.entry((level, kind)).or_insert(rep)))
}

/// `c_N`: `1/2` at level 2, `1/N` on the symmetric level-5 basis and
/// `(1/N) (2/(N-1))` on the power basis.
pub fn normalization(level: u32, kind: BasisKind) -> Result<Rational> {
    let n = level as i64;
    match (level, kind) {
        (2, BasisKind::Power) => Ok(frac(1, 2)),
        (5, BasisKind::Symmetric) => Ok(frac(1, 5)),
        (_, BasisKind::Power) if crate::torsion::is_odd_prime(level) => Ok(frac(2, n * (n - 1))),
        (_, BasisKind::Power) => Err(Error::UnsupportedLevel(level)),
        (_, kind) => Err(Error::UnsupportedBasis {
            level,
            kind: kind.name().to_string(),
        }),
    }
}

/// `I - T rho` over `Q(a, b, A, B)` for `T` one of `A`, `B`.
fn factor(rho: &FracMatrix, marker: Var) -> PolyMatrix {
    let rho = rho.embed(VarSet::AB_MARKED);
    let den = rho.denominator();
    let t = MultiPoly::var(VarSet::AB_MARKED, marker);
    let n = rho.dim();
    Matrix::from_fn(n, |i, j| {
        let mut num = -&(&t * rho.numerator().get(i, j));
        if i == j {
            num = &num + den;
        }
        RatFunc::new(num, den.clone()).expect("nonzero denominator")
    })
}

/// The two factors `I - A rho(a')` and `I - B rho(b')`.
pub fn build_m_factors(level: u32, kind: BasisKind) -> Result<(PolyMatrix, PolyMatrix)> {
    let rep = representation(level, kind)?;
    Ok((factor(&rep.aprime, Var::BigA), factor(&rep.bprime, Var::BigB)))
}

/// `M = (I - A rho(a'))(I - B rho(b'))`.
pub fn build_m(level: u32, kind: BasisKind) -> Result<PolyMatrix> {
    let (fa, fb) = build_m_factors(level, kind)?;
    Ok(fa.mul(&fb))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratingFunction {
    pub level: u32,
    pub kind: BasisKind,
    pub normalization: Rational,
    /// Canonical rational function in `a, b, A, B`.
    pub value: RatFunc,
}

impl GeneratingFunction {
    /// `F_N(a, b, 0, 0)`.
    pub fn at_origin(&self) -> Result<RatFunc> {
        let s = series_coefficients(&self.value, 0)?;
        Ok(RatFunc::from_poly(s[&(0, 0)].clone()))
    }

    /// Coefficients `c_{ijkl}` with `4i + 6j <= w` read off the power
    /// series in `A, B`.
    pub fn table(&self, w: u32) -> Result<CoefficientTable> {
        let s = series_coefficients(&self.value, w / 4)?;
        Ok(CoefficientTable::from_images(self.level, w, s.iter().map(|(k, p)| (*k, p))))
    }
}

/// Exact `F_N` from the characteristic polynomial of the cleared product
/// `P = (d_a I - A N_a)(d_b I - B N_b)`, where `rho(a') = N_a / d_a`:
/// `tr M^{-1} = d_a d_b tr adj(P) / det P`.
pub fn generating_function(level: u32, kind: BasisKind) -> Result<GeneratingFunction> {
    let c = normalization(level, kind)?;
    let dim = dimension(level, kind)?;
    if dim > EXACT_MAX_DIM {
        return Err(Error::ExactDimensionUnsupported {
            dim,
            max: EXACT_MAX_DIM,
        });
    }
    let rep = representation(level, kind)?;
    let cleared = |rho: &FracMatrix, marker: Var| -> (Matrix<MultiPoly>, MultiPoly) {
        let rho = rho.embed(VarSet::AB_MARKED);
        let t = MultiPoly::var(VarSet::AB_MARKED, marker);
        let den = rho.denominator().clone();
        let m = Matrix::from_fn(rho.dim(), |i, j| {
            let e = -&(&t * rho.numerator().get(i, j));
            if i == j {
                &e + &den
            } else {
                e
            }
        });
        (m, den)
    };
    let (pa, da) = cleared(&rep.aprime, Var::BigA);
    let (pb, db) = cleared(&rep.bprime, Var::BigB);
    let cp = char_poly(&pa.mul(&pb));
    let num = (&(&da * &db) * &cp.adjugate_trace()).scale(&c);
    let value = RatFunc::new(num, cp.det())?;
    Ok(GeneratingFunction {
        level,
        kind,
        normalization: c,
        value,
    })
}

/// `T_N(a^i b^j) = c_N tr(rho(b')^j rho(a')^i)` for every `4i + 6j <= w`.
pub fn hecke_images(level: u32, kind: BasisKind, w: u32) -> Result<BTreeMap<(u32, u32), MultiPoly>> {
    let c = normalization(level, kind)?;
    let rep = representation(level, kind)?;
    let powers = |m: &FracMatrix, count: u32| {
        let mut out = vec![FracMatrix::identity(m.dim(), m.denominator())];
        for _ in 0..count {
            let next = out.last().expect("nonempty").mul(m).reduced();
            out.push(next);
        }
        out
    };
    let pa = powers(&rep.aprime, w / 4);
    let pb = powers(&rep.bprime, w / 6);
    let cells = monomials_up_to(w);
    let traces = par::map_slice(&cells, |&(i, j)| -> Result<MultiPoly> {
        let t = pb[j as usize].trace_of_product(&pa[i as usize]);
        let p = t.to_polynomial().ok_or(Error::NonPolynomialTrace)?;
        Ok(p.scale(&c))
    });
    cells
        .into_iter()
        .zip(traces)
        .map(|(k, t)| Ok((k, t?)))
        .collect()
}

/// The coefficient table by the Neumann route.
pub fn coefficient_table(level: u32, kind: BasisKind, w: u32) -> Result<CoefficientTable> {
    let images = hecke_images(level, kind, w)?;
    Ok(CoefficientTable::from_images(level, w, images.iter().map(|(k, p)| (*k, p))))
}

/// `sum_{4i + 6j = k} c_{ijij}` on the default basis.
pub fn trace_on_weight(level: u32, k: i64) -> Result<Rational> {
    let w = check_weight(k)?;
    coefficient_table(level, default_basis(level), w)?.trace_on_weight(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn normalizations() {
        assert_eq!(normalization(2, BasisKind::Power).unwrap(), frac(1, 2));
        assert_eq!(normalization(3, BasisKind::Power).unwrap(), frac(1, 3));
        assert_eq!(normalization(5, BasisKind::Power).unwrap(), frac(1, 10));
        assert_eq!(normalization(5, BasisKind::Symmetric).unwrap(), frac(1, 5));
        assert_eq!(normalization(7, BasisKind::Power).unwrap(), frac(1, 21));
        assert!(normalization(3, BasisKind::Symmetric).is_err());
        assert_eq!(normalization(9, BasisKind::Power), Err(Error::UnsupportedLevel(9)));
        assert_eq!(dimension(2, BasisKind::Power).unwrap(), 3);
        assert_eq!(dimension(5, BasisKind::Symmetric).unwrap(), 6);
        assert_eq!(dimension(7, BasisKind::Power).unwrap(), 24);
        assert!(dimension(7, BasisKind::Symmetric).is_err());
    }

    #[test]
    fn level_two_small_table() {
        let t = coefficient_table(2, BasisKind::Power, 8).unwrap();
        assert_eq!(t.get((0, 0, 0, 0)), frac(3, 2));
        assert_eq!(t.get((1, 0, 1, 0)), rat(9));
        assert_eq!(t.get((2, 0, 2, 0)), rat(129));
        assert!(t.weight_violations().is_empty());
    }

    #[test]
    fn level_two_exact_at_origin() {
        let f = generating_function(2, BasisKind::Power).unwrap();
        assert_eq!(f.at_origin().unwrap(), RatFunc::constant(VarSet::AB, frac(3, 2)));
    }

    #[test]
    fn symmetric_needs_odd_level() {
        assert!(matches!(
            representation(2, BasisKind::Symmetric),
            Err(Error::UnsupportedBasis { level: 2, .. })
        ));
    }
}
