use std::ops::{Add, Mul, Sub};

use crate::poly::{Matrix, PolyMatrix, RatFunc, Var, VarSet};

/// `u0 + u1 e + u2 e^2` in `K[e] / (e^3 + a e + b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicElement {
    pub coeffs: [RatFunc; 3],
}

impl CubicElement {
    pub fn new(c0: RatFunc, c1: RatFunc, c2: RatFunc) -> CubicElement {
        CubicElement { coeffs: [c0, c1, c2] }
    }

    pub fn constant(c: RatFunc) -> CubicElement {
        let z = RatFunc::zero(VarSet::AB);
        CubicElement::new(c, z.clone(), z)
    }

    pub fn one() -> CubicElement {
        CubicElement::constant(RatFunc::one(VarSet::AB))
    }

    /// The root `e`.
    pub fn e() -> CubicElement {
        let z = RatFunc::zero(VarSet::AB);
        CubicElement::new(z.clone(), RatFunc::one(VarSet::AB), z)
    }

    pub fn scale(&self, c: &RatFunc) -> CubicElement {
        CubicElement {
            coeffs: self.coeffs.clone().map(|x| &x * c),
        }
    }
}

impl Add for &CubicElement {
    type Output = CubicElement;
    fn add(self, rhs: &CubicElement) -> CubicElement {
        let [x0, x1, x2] = &self.coeffs;
        let [y0, y1, y2] = &rhs.coeffs;
        CubicElement::new(x0 + y0, x1 + y1, x2 + y2)
    }
}

impl Sub for &CubicElement {
    type Output = CubicElement;
    fn sub(self, rhs: &CubicElement) -> CubicElement {
        let [x0, x1, x2] = &self.coeffs;
        let [y0, y1, y2] = &rhs.coeffs;
        CubicElement::new(x0 - y0, x1 - y1, x2 - y2)
    }
}

impl Mul for &CubicElement {
    type Output = CubicElement;
    fn mul(self, rhs: &CubicElement) -> CubicElement {
        let z = RatFunc::zero(VarSet::AB);
        let mut raw = vec![z; 5];
        for i in 0..3 {
            for j in 0..3 {
                raw[i + j] = &raw[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        let a = RatFunc::var(VarSet::AB, Var::SmallA);
        let b = RatFunc::var(VarSet::AB, Var::SmallB);
        // e^k = -a e^(k-2) - b e^(k-3)
        for k in [4, 3] {
            let c = raw[k].clone();
            raw[k - 2] = &raw[k - 2] - &(&c * &a);
            raw[k - 3] = &raw[k - 3] - &(&c * &b);
        }
        raw.truncate(3);
        let [c0, c1, c2]: [RatFunc; 3] = raw.try_into().expect("three coefficients");
        CubicElement::new(c0, c1, c2)
    }
}

/// Regular representation on `{1, e, e^2}`.
pub fn cubic_rep(u: &CubicElement) -> PolyMatrix {
    let e = CubicElement::e();
    let ue = u * &e;
    let ue2 = &ue * &e;
    Matrix::from_columns(vec![u.coeffs.to_vec(), ue.coeffs.to_vec(), ue2.coeffs.to_vec()])
}
