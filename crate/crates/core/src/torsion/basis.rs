use std::fmt;
use std::sync::OnceLock;

use super::linalg::ColumnSolver;
use super::{torsion_mul, torsion_ring, x_multiple, TorsionElement};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::{frac_columns, poly_lcm, FracMatrix, Matrix, MultiPoly, PolyMatrix, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `{1, x_P, ..., x_P^(d-1)}` (or `{1, e, e^2}` at level 2).
    Power,
    /// The six symmetric functions of `x_P, x_2P` at level 5.
    Symmetric,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Power => "power",
            BasisKind::Symmetric => "symmetric",
        }
    }

    pub fn from_name(s: &str) -> Option<BasisKind> {
        match s {
            "power" => Some(BasisKind::Power),
            "symmetric" => Some(BasisKind::Symmetric),
            _ => None,
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A linearly independent family spanning a subalgebra of the torsion ring.
#[derive(Clone, Debug)]
pub struct TorsionBasis {
    level: u32,
    kind: BasisKind,
    elements: Vec<TorsionElement>,
    solver: Option<ColumnSolver>,
    /// `rho(basis[i])`, filled on first use.
    reps: OnceLock<Vec<FracMatrix>>,
}

impl TorsionBasis {
    pub fn new(level: u32, kind: BasisKind) -> Result<TorsionBasis> {
        match kind {
            BasisKind::Power => Self::power(level),
            BasisKind::Symmetric if level == 5 => Self::symmetric_five(),
            BasisKind::Symmetric => Err(Error::UnsupportedBasis {
                level,
                kind: kind.name().to_string(),
            }),
        }
    }

    pub fn power(level: u32) -> Result<TorsionBasis> {
        let ring = torsion_ring(level)?;
        let mut elements = vec![TorsionElement::one(&ring)];
        for _ in 1..ring.dim() {
            let next = elements.last().expect("nonempty").mul_generator();
            elements.push(next);
        }
        Ok(TorsionBasis {
            level,
            kind: BasisKind::Power,
            elements,
            solver: None,
            reps: OnceLock::new(),
        })
    }

    /// `{1, x_P + x_2P, x_P x_2P, x_P^2 + x_2P^2, x_P^2 x_2P^2, x_P^3 + x_2P^3}`.
    pub fn symmetric_five() -> Result<TorsionBasis> {
        let ring = torsion_ring(5)?;
        let x1 = TorsionElement::generator(&ring);
        let x2 = x_multiple(2, 5)?;
        let one = TorsionElement::one(&ring);
        let s1 = &x1 + &x2;
        let p = &x1 * &x2;
        let x1sq = &x1 * &x1;
        let x2sq = &x2 * &x2;
        let s2 = &x1sq + &x2sq;
        let p2 = &p * &p;
        let s3 = &(&x1sq * &x1) + &(&x2sq * &x2);
        Self::from_elements(5, BasisKind::Symmetric, vec![one, s1, p, s2, p2, s3])
    }

    /// Checks independence and prepares coordinate solves.
    pub fn from_elements(level: u32, kind: BasisKind, elements: Vec<TorsionElement>) -> Result<TorsionBasis> {
        if let Some(e) = elements.iter().find(|e| e.level() != level) {
            return Err(Error::LevelMismatch(level, e.level()));
        }
        let columns: Vec<Vec<RatFunc>> = elements.iter().map(|e| e.coeffs()).collect();
        let solver = ColumnSolver::new(&columns)?;
        Ok(TorsionBasis {
            level,
            kind,
            elements,
            solver: Some(solver),
            reps: OnceLock::new(),
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[TorsionElement] {
        &self.elements
    }

    /// Coordinates of `u` in this basis.
    pub fn coordinates(&self, u: &TorsionElement) -> Result<Vec<RatFunc>> {
        if u.level() != self.level {
            return Err(Error::LevelMismatch(self.level, u.level()));
        }
        match &self.solver {
            None => Ok(u.coeffs()),
            Some(s) => s.solve(&u.coeffs()),
        }
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn element(&self, coords: &[RatFunc]) -> Result<TorsionElement> {
        if coords.len() != self.dim() {
            return Err(Error::WrongLength {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        let ring = self.elements[0].ring();
        let mut acc = TorsionElement::zero(ring);
        for (c, e) in coords.iter().zip(&self.elements) {
            if !c.is_zero() {
                acc = &acc + &e.scale(c);
            }
        }
        Ok(acc)
    }
}

/// Multiplication by `u` on the span of `basis`; column `j` holds the
/// coordinates of `u * basis[j]`.
pub fn regular_rep(u: &TorsionElement, basis: &TorsionBasis) -> Result<PolyMatrix> {
    Ok(regular_rep_frac(u, basis)?.to_ratfunc())
}

/// [`regular_rep`] over one shared denominator.
pub fn regular_rep_frac(u: &TorsionElement, basis: &TorsionBasis) -> Result<FracMatrix> {
    if u.level() != basis.level {
        return Err(Error::LevelMismatch(basis.level, u.level()));
    }
    match basis.kind {
        BasisKind::Power => {
            // u x^j by repeated shifts
            let mut cols: Vec<Vec<MultiPoly>> = Vec::with_capacity(basis.dim());
            let mut cur = u.clone();
            for j in 0..basis.dim() {
                if j > 0 {
                    cur = cur.mul_generator();
                }
                cols.push(cur.numerators().to_vec());
            }
            FracMatrix::new(Matrix::from_columns(cols), u.denominator().clone())
        }
        BasisKind::Symmetric => {
            let solver = basis.solver.as_ref().expect("symmetric basis has a solver");
            let (coords, den) = solver.solve_parts(u.numerators(), u.denominator())?;
            let reps = basis.element_reps()?;
            let mut common = MultiPoly::one(den.vars());
            for r in reps {
                common = poly_lcm(&common, r.denominator());
            }
            let n = basis.dim();
            let num = Matrix::from_fn(n, |i, j| {
                let mut acc = MultiPoly::zero(den.vars());
                for (c, r) in coords.iter().zip(reps) {
                    let e = r.numerator().get(i, j);
                    if c.is_zero() || e.is_zero() {
                        continue;
                    }
                    let f = common.div_exact(r.denominator()).expect("lcm is a multiple");
                    acc = &acc + &(&(c * e) * &f);
                }
                acc
            });
            Ok(FracMatrix::new(num, &den * &common)?.reduced())
        }
    }
}

impl TorsionBasis {
    /// Regular representations of the basis elements themselves, each
    /// column computed from a product in the full torsion ring.
    fn element_reps(&self) -> Result<&[FracMatrix]> {
        if let Some(r) = self.reps.get() {
            return Ok(r);
        }
        let solver = self.solver.as_ref().expect("symmetric basis has a solver");
        let n = self.dim();
        let products = par::map_range(n * n, |k| {
            let (i, j) = (k / n, k % n);
            if i > j {
                return Ok(None);
            }
            let p = torsion_mul(&self.elements[i], &self.elements[j])?;
            solver.solve_parts(p.numerators(), p.denominator()).map(Some)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let reps = (0..n)
            .map(|i| {
                let cols = (0..n)
                    .map(|j| {
                        let k = if i <= j { i * n + j } else { j * n + i };
                        products[k].clone().expect("upper triangle computed")
                    })
                    .collect();
                frac_columns(cols).reduced()
            })
            .collect();
        Ok(self.reps.get_or_init(|| reps))
    }
}
