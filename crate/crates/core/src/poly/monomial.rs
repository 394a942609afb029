use std::cmp::Ordering;

use smallvec::SmallVec;

/// Dense exponent vector, one slot per variable of the owning [`VarSet`](super::VarSet).
///
/// `Ord` is graded reverse-lexicographic: total degree first, then the
/// monomial with the smaller exponent in the smallest variable wins.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.0[idx]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * n).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn with_exponent(&self, idx: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[idx] = e;
        m
    }

    pub fn removed(&self, idx: usize) -> Monomial {
        let mut m = self.clone();
        m.0.remove(idx);
        m
    }

    pub fn inserted(&self, idx: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0.insert(idx, e);
        m
    }

    /// Re-index into a larger variable set; `slots[i]` is the new position
    /// of variable `i`.
    pub fn spread(&self, slots: &[usize], nvars: usize) -> Monomial {
        let mut out = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.0.iter().enumerate() {
            out[slots[i]] = e;
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
