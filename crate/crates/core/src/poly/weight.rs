use super::{MultiPoly, RatFunc, Var};

/// Weights of the variables: `a = 4`, `b = 6`, `x = e = 2`, `A = -4`, `B = -6`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct WeightGrading {
    weights: [i64; 6],
}

impl Default for WeightGrading {
    fn default() -> Self {
        WeightGrading::STANDARD
    }
}

/// Result of [`weight_of`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Weight(i64),
    /// Terms of different weights.
    Mixed,
    /// The zero polynomial has every weight.
    Zero,
}

impl Homogeneity {
    pub fn weight(self) -> Option<i64> {
        match self {
            Homogeneity::Weight(w) => Some(w),
            _ => None,
        }
    }

    /// True if homogeneous of weight `w` (zero counts).
    pub fn is(self, w: i64) -> bool {
        matches!(self, Homogeneity::Zero) || self == Homogeneity::Weight(w)
    }
}

impl WeightGrading {
    pub const STANDARD: WeightGrading = WeightGrading {
        weights: [4, 6, 2, 2, -4, -6],
    };

    pub fn weight(&self, v: Var) -> i64 {
        self.weights[v as usize]
    }

    pub fn weight_of(&self, p: &MultiPoly) -> Homogeneity {
        let ws: Vec<i64> = p.vars().vars().map(|v| self.weight(v)).collect();
        let mut found = None;
        for (m, _) in p.terms() {
            let w: i64 = m
                .exponents()
                .iter()
                .zip(&ws)
                .map(|(&e, &w)| e as i64 * w)
                .sum();
            match found {
                None => found = Some(w),
                Some(f) if f != w => return Homogeneity::Mixed,
                _ => {}
            }
        }
        found.map_or(Homogeneity::Zero, Homogeneity::Weight)
    }

    /// Weight of a quotient of homogeneous polynomials.
    pub fn weight_of_ratfunc(&self, f: &RatFunc) -> Homogeneity {
        match (self.weight_of(f.num()), self.weight_of(f.den())) {
            (Homogeneity::Zero, _) => Homogeneity::Zero,
            (Homogeneity::Weight(n), Homogeneity::Weight(d)) => Homogeneity::Weight(n - d),
            _ => Homogeneity::Mixed,
        }
    }
}

/// Weight under the standard grading.
pub fn weight_of(p: &MultiPoly) -> Homogeneity {
    WeightGrading::STANDARD.weight_of(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VarSet};

    #[test]
    fn division_polynomial_three_has_weight_eight() {
        let p = parse_poly(VarSet::ABX, "3x^4 + 6ax^2 + 12bx - a^2").unwrap();
        assert_eq!(weight_of(&p), Homogeneity::Weight(8));
    }

    #[test]
    fn mixed_and_constant() {
        let p = parse_poly(VarSet::AB, "a + b").unwrap();
        assert_eq!(weight_of(&p), Homogeneity::Mixed);
        assert_eq!(weight_of(&MultiPoly::from_int(VarSet::AB, 5)), Homogeneity::Weight(0));
        assert_eq!(weight_of(&MultiPoly::zero(VarSet::AB)), Homogeneity::Zero);
    }

    #[test]
    fn marked_variables_have_negative_weight() {
        let p = parse_poly(VarSet::AB_MARKED, "14Bab").unwrap();
        assert_eq!(weight_of(&p), Homogeneity::Weight(4));
        let r = parse_poly(VarSet::AB_MARKED, "1 - 11aA - 22Bb").unwrap();
        assert_eq!(weight_of(&r), Homogeneity::Weight(0));
    }
}
