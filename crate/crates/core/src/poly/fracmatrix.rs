use super::{poly_gcd, Matrix, MultiPoly, PolyMatrix, RatFunc, Scalar};
use crate::error::{Error, Result};
use crate::par;

/// Least common multiple, primitive with positive leading coefficient.
pub fn poly_lcm(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p == q {
        return p.normalized();
    }
    if p.is_constant() {
        return q.normalized();
    }
    if q.is_constant() {
        return p.normalized();
    }
    let g = poly_gcd(p, q);
    (p * &q.div_exact(&g).expect("gcd divides")).normalized()
}

/// Numerators over a shared denominator for a list of rational functions.
pub fn common_denominator(values: &[RatFunc]) -> (Vec<MultiPoly>, MultiPoly) {
    let vars = values.first().map_or(super::VarSet::AB, RatFunc::vars);
    let mut den = MultiPoly::one(vars);
    for v in values {
        if !v.den().is_one() {
            den = poly_lcm(&den, v.den());
        }
    }
    let nums = values
        .iter()
        .map(|v| {
            if v.den() == &den {
                v.num().clone()
            } else {
                v.num() * &den.div_exact(v.den()).expect("lcm is a multiple")
            }
        })
        .collect();
    (nums, den)
}

/// Square matrix of rational functions stored as a polynomial matrix over
/// one denominator, so products avoid per-entry gcds.
#[derive(Clone, Debug, PartialEq)]
pub struct FracMatrix {
    num: Matrix<MultiPoly>,
    den: MultiPoly,
}

impl FracMatrix {
    pub fn new(num: Matrix<MultiPoly>, den: MultiPoly) -> Result<FracMatrix> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some(e) = num.entries().iter().find(|e| e.vars() != den.vars()) {
            return Err(Error::VarSetMismatch(e.vars(), den.vars()));
        }
        Ok(FracMatrix { num, den })
    }

    pub fn from_ratfunc(m: &PolyMatrix) -> FracMatrix {
        let (nums, den) = common_denominator(m.entries());
        FracMatrix {
            num: Matrix::from_entries(m.dim(), nums),
            den,
        }
    }

    pub fn to_ratfunc(&self) -> PolyMatrix {
        self.num.map(|p| RatFunc::new(p.clone(), self.den.clone()).expect("nonzero denominator"))
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn numerator(&self) -> &Matrix<MultiPoly> {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn mul(&self, other: &FracMatrix) -> FracMatrix {
        FracMatrix {
            num: self.num.mul(&other.num),
            den: &self.den * &other.den,
        }
    }

    /// Identity with the same denominator convention (denominator 1).
    pub fn identity(n: usize, template: &MultiPoly) -> FracMatrix {
        FracMatrix {
            num: Matrix::identity(n, template),
            den: template.one_like(),
        }
    }

    /// Divide out the common content of all numerators and the denominator.
    pub fn reduced(&self) -> FracMatrix {
        let mut g = self.den.normalized();
        for e in self.num.entries() {
            if g.is_constant() {
                break;
            }
            if !e.is_zero() {
                g = poly_gcd(&g, e);
            }
        }
        let (c, _) = self.den.primitive_split();
        let g = g.scale(&c);
        if g.is_one() {
            return self.clone();
        }
        FracMatrix {
            num: self.num.map(|e| e.div_exact(&g).expect("common factor divides")),
            den: self.den.div_exact(&g).expect("common factor divides"),
        }
    }

    pub fn trace(&self) -> RatFunc {
        RatFunc::new(self.num.trace(), self.den.clone()).expect("nonzero denominator")
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &FracMatrix) -> RatFunc {
        let t = self.num.trace_of_product(&other.num);
        RatFunc::new(t, &self.den * &other.den).expect("nonzero denominator")
    }

    /// Entry-wise image under `f`, same denominator.
    pub fn map_numerators(&self, f: impl Fn(&MultiPoly) -> MultiPoly + Sync + Send) -> FracMatrix {
        FracMatrix {
            num: self.num.map(f),
            den: self.den.clone(),
        }
    }

    pub fn embed(&self, target: super::VarSet) -> FracMatrix {
        FracMatrix {
            num: self.num.map(|e| e.embed(target)),
            den: self.den.embed(target),
        }
    }
}

/// Assemble from columns given as `(numerators, denominator)` pairs.
pub fn frac_columns(cols: Vec<(Vec<MultiPoly>, MultiPoly)>) -> FracMatrix {
    let n = cols.len();
    let mut den = cols.first().map_or_else(|| MultiPoly::one(super::VarSet::AB), |c| c.1.one_like());
    for (_, d) in &cols {
        den = poly_lcm(&den, d);
    }
    let scaled: Vec<Vec<MultiPoly>> = par::map_slice(&cols, |(nums, d)| {
        let f = den.div_exact(d).expect("lcm is a multiple");
        nums.iter().map(|x| x * &f).collect()
    });
    let num = Matrix::from_columns(scaled);
    debug_assert_eq!(num.dim(), n);
    FracMatrix { num, den }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VarSet};

    fn ab(s: &str) -> MultiPoly {
        parse_poly(VarSet::AB, s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(ab(n), ab(d)).unwrap()
    }

    #[test]
    fn lcm_of_overlapping() {
        assert_eq!(poly_lcm(&ab("a*b"), &ab("b^2")), ab("ab^2"));
        assert_eq!(poly_lcm(&ab("3"), &ab("2a + 4")), ab("a + 2"));
    }

    #[test]
    fn round_trip_through_common_denominator() {
        let m = Matrix::from_rows(vec![
            vec![rf("1", "a"), rf("b", "1")],
            vec![rf("1", "a^2 + b"), rf("a", "3")],
        ]);
        let f = FracMatrix::from_ratfunc(&m);
        assert_eq!(f.to_ratfunc(), m);
        assert_eq!(f.mul(&f).to_ratfunc(), m.mul(&m));
        assert_eq!(f.trace_of_product(&f), m.mul(&m).trace());
    }

    #[test]
    fn reduced_cancels_shared_factor() {
        let num = Matrix::from_rows(vec![vec![ab("2a"), ab("4ab")], vec![ab("0"), ab("6a^2")]]);
        let f = FracMatrix::new(num, ab("2a")).unwrap().reduced();
        assert_eq!(f.denominator(), &ab("1"));
        assert_eq!(f.numerator().get(1, 1), &ab("3a"));
    }
}
