//! Exact two-variable knot polynomials from the type A₁ double affine Hecke
//! algebra, with a colored Jones cabling oracle to check their `t = −q²`
//! specializations.
//!
//! All arithmetic is exact: integer coefficients of arbitrary size and
//! rational functions in `q`, `t` kept in a reduced canonical form.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod hword;
pub mod invariants;
pub mod joracle;
pub mod macdonald;
pub mod polyrep;
pub mod selftest;

pub use error::{Error, Result};
pub use exactalg::{LaurentQ, LaurentQT, LaurentX, RatQT, TSubst};
pub use hword::{HElement, Letter, TauGen, TauWord};
pub use invariants::{CableSpec, Convention, Family, InvariantResult};
pub use macdonald::SymPoly;
pub use polyrep::RepFlavor;
