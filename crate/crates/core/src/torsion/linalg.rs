//! Exact elimination over `Q(a, b)` with first-nonzero pivoting.

use crate::error::{Error, Result};
use crate::poly::{common_denominator, MultiPoly, RatFunc, VarSet};

/// Precomputed solver for `B c = w`, `B` an `m x k` matrix of full column
/// rank given by its columns.
#[derive(Clone, Debug)]
pub(crate) struct ColumnSolver {
    rank: usize,
    /// Numerators of the `m x m` transform `T` with `T B = [I_k; 0]`.
    transform: Vec<Vec<MultiPoly>>,
    den: MultiPoly,
}

impl ColumnSolver {
    pub(crate) fn new(columns: &[Vec<RatFunc>]) -> Result<ColumnSolver> {
        let k = columns.len();
        let m = columns.first().map_or(0, |c| c.len());
        let zero = RatFunc::zero(VarSet::AB);
        let one = RatFunc::one(VarSet::AB);
        // rows of [B | I]
        let mut rows: Vec<Vec<RatFunc>> = (0..m)
            .map(|i| {
                let mut r: Vec<RatFunc> = columns.iter().map(|c| c[i].clone()).collect();
                r.extend((0..m).map(|j| if i == j { one.clone() } else { zero.clone() }));
                r
            })
            .collect();
        for j in 0..k {
            let p = (j..m).find(|&r| !rows[r][j].is_zero()).ok_or(Error::DependentBasis)?;
            rows.swap(j, p);
            let inv = rows[j][j].inv()?;
            rows[j] = rows[j].iter().map(|x| if x.is_zero() { x.clone() } else { x * &inv }).collect();
            let pivot = rows[j].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == j || row[j].is_zero() {
                    continue;
                }
                let f = row[j].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        let flat: Vec<RatFunc> = rows.into_iter().flat_map(|r| r[k..].to_vec()).collect();
        let (nums, den) = common_denominator(&flat);
        let transform = nums.chunks(m.max(1)).map(|c| c.to_vec()).collect();
        Ok(ColumnSolver { rank: k, transform, den })
    }

    /// Coordinates of `num / den` in the column basis, over a shared
    /// denominator, or `OutsideSpan`.
    pub(crate) fn solve_parts(&self, num: &[MultiPoly], den: &MultiPoly) -> Result<(Vec<MultiPoly>, MultiPoly)> {
        let apply = |row: &[MultiPoly]| {
            let mut acc = MultiPoly::zero(VarSet::AB);
            for (t, x) in row.iter().zip(num) {
                if !t.is_zero() && !x.is_zero() {
                    acc = &acc + &(t * x);
                }
            }
            acc
        };
        if self.transform[self.rank..].iter().any(|row| !apply(row).is_zero()) {
            return Err(Error::OutsideSpan);
        }
        let coords = self.transform[..self.rank].iter().map(|row| apply(row)).collect();
        Ok((coords, &self.den * den))
    }

    pub(crate) fn solve(&self, w: &[RatFunc]) -> Result<Vec<RatFunc>> {
        let (num, den) = common_denominator(w);
        let (coords, den) = self.solve_parts(&num, &den)?;
        coords.into_iter().map(|c| RatFunc::new(c, den.clone())).collect()
    }
}


/// Solve `M c = rhs` over `Q[a, b]` by fraction-free Gauss-Jordan
/// elimination. `m` is given by columns. Returns `(det * c, det)`, or
/// `NotInvertible` when `M` is singular.
pub(crate) fn solve_fraction_free(columns: &[Vec<MultiPoly>], rhs: &[MultiPoly]) -> Result<(Vec<MultiPoly>, MultiPoly)> {
    let n = columns.len();
    let vars = rhs.first().map_or(VarSet::AB, MultiPoly::vars);
    let mut rows: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let mut r: Vec<MultiPoly> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut prev = MultiPoly::one(vars);
    for k in 0..n {
        let p = (k..n).find(|&r| !rows[r][k].is_zero()).ok_or(Error::NotInvertible)?;
        rows.swap(k, p);
        let pivot_row = rows[k].clone();
        let pivot = pivot_row[k].clone();
        let updated = crate::par::map_range(n, |i| {
            if i == k {
                return rows[i].clone();
            }
            let row = &rows[i];
            let f = &row[k];
            (0..=n)
                .map(|j| {
                    if j == k {
                        return MultiPoly::zero(vars);
                    }
                    let t = if f.is_zero() || pivot_row[j].is_zero() {
                        &pivot * &row[j]
                    } else {
                        &(&pivot * &row[j]) - &(f * &pivot_row[j])
                    };
                    t.div_exact(&prev).expect("fraction-free step is exact")
                })
                .collect()
        });
        rows = updated;
        prev = pivot;
    }
    // every diagonal entry is now the determinant of the row-permuted matrix
    let sol = rows.iter().map(|r| r[n].clone()).collect();
    Ok((sol, prev))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: i64) -> RatFunc {
        RatFunc::from_int(VarSet::AB, n)
    }

    #[test]
    fn solves_and_rejects() {
        // columns (1, 1, 0) and (0, 1, 1)
        let s = ColumnSolver::new(&[vec![k(1), k(1), k(0)], vec![k(0), k(1), k(1)]]).unwrap();
        assert_eq!(s.solve(&[k(2), k(5), k(3)]).unwrap(), vec![k(2), k(3)]);
        assert_eq!(s.solve(&[k(1), k(0), k(0)]), Err(Error::OutsideSpan));
    }

    #[test]
    fn fraction_free_matches_cramer() {
        use crate::poly::parse_poly;
        let p = |s: &str| parse_poly(VarSet::AB, s).unwrap();
        // columns (a, 1), (b, 2): det = 2a - b
        let cols = vec![vec![p("a"), p("1")], vec![p("b"), p("2")]];
        let (sol, det) = solve_fraction_free(&cols, &[p("1"), p("0")]).unwrap();
        assert_eq!(det, p("2a - b"));
        assert_eq!(sol, vec![p("2"), p("-1")]);
        let singular = vec![vec![p("a"), p("b")], vec![p("2a"), p("2b")]];
        assert_eq!(solve_fraction_free(&singular, &[p("1"), p("0")]).unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn dependent_columns() {
        let r = ColumnSolver::new(&[vec![k(1), k(2)], vec![k(2), k(4)]]);
        assert_eq!(r.unwrap_err(), Error::DependentBasis);
    }
}
