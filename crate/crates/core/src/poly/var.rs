use std::fmt;

/// The indeterminates that can appear in a [`MultiPoly`](super::MultiPoly).
///
/// Declaration order is the variable order used by the monomial order:
/// `a < b < x < e < A < B`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Weight-4 generator `a`.
    SmallA,
    /// Weight-6 generator `b`.
    SmallB,
    /// x-coordinate of a torsion point.
    X,
    /// Level-2 form `e`.
    E,
    /// Formal variable marking powers of `a`.
    BigA,
    /// Formal variable marking powers of `b`.
    BigB,
}

impl Var {
    pub const ALL: [Var; 6] = [
        Var::SmallA,
        Var::SmallB,
        Var::X,
        Var::E,
        Var::BigA,
        Var::BigB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::SmallA => "a",
            Var::SmallB => "b",
            Var::X => "x",
            Var::E => "e",
            Var::BigA => "A",
            Var::BigB => "B",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An ordered subset of [`Var`], stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);
    /// `{a, b}`: the ring of full-level forms.
    pub const AB: VarSet = VarSet(0b000011);
    /// `{a, b, x}`: division polynomials.
    pub const ABX: VarSet = VarSet(0b000111);
    /// `{a, b, e}`: the level-2 algebra.
    pub const ABE: VarSet = VarSet(0b001011);
    /// `{a, b, A, B}`: generating functions.
    pub const AB_MARKED: VarSet = VarSet(0b110011);

    pub fn from_vars(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |m, v| m | v.bit()))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & v.bit() != 0
    }

    /// Position of `v` in the exponent vector, if present.
    pub fn index_of(self, v: Var) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        Some((self.0 & (v.bit() - 1)).count_ones() as usize)
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn without(self, v: Var) -> VarSet {
        VarSet(self.0 & !v.bit())
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vars().map(Var::name)).finish()
    }
}
