//! Generating functions for Hecke operators `T_N` on the graded ring
//! `Q[a, b]` of modular forms of full level.
//!
//! The symbolic route builds the isogenous-curve coefficients `a'`, `b'`
//! inside a finite extension of `Q(a, b)` (the level-2 cubic algebra, or
//! `Q(a, b)[x_P] / (psi_N)` for odd primes), takes their regular
//! representations, and reads off
//! `F_N = c_N tr[(I - A rho(a'))(I - B rho(b'))]^{-1}`.
//! The [`qexp`] module recomputes every coefficient from q-expansions
//! without touching the polynomial machinery.

pub mod divpoly;
pub mod error;
pub mod genfun;
pub mod poly;
pub mod qexp;
pub mod table;
pub mod torsion;
pub mod velu;

mod par;

pub use error::{Error, Result};
pub use par::is_parallel;
