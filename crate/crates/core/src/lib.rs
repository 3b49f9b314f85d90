//! Exact computation of simple Yetter-Drinfeld modules for the restricted
//! two-parameter quantum Borel algebras `H_{r,s}` of type sl_3, and of their
//! behaviour under cocycle twists.
//!
//! The scalar domain is the cyclotomic field `Q(zeta_ell)` with exact
//! arbitrary-precision rational coordinates, so every rank, dimension, and
//! relation check below is exact; there are no floats anywhere.
//!
//! Module map:
//! - [`cyclotomic`]: arithmetic in `Q(zeta_ell)` as `Q[x]/(Phi_ell(x))`.
//! - [`linalg`]: dense column reduction and rank over the cyclotomic field.
//! - [`borel`]: the algebra `H_{r,s}` on its PBW basis, with canonical
//!   normal forms for all products.
//! - [`radford`]: the Radford action `x ⊳_β a` and the simple module
//!   `H ⊳_β g` (block decomposition, ranks, dimension, basis).
//! - [`twist`]: group 2-cocycles on `(Z/ell)^2`, the twisted multiplication,
//!   the character correspondence `β ↦ β_{g,σ}`, and presentation checks.
//! - [`closedform`]: one-dimensional module classification and the
//!   closed-form dimension formulas (Cartan system plus Dobrev's formula).

pub mod borel;
pub mod closedform;
pub mod cyclotomic;
pub mod linalg;
pub mod radford;
pub mod twist;

pub use borel::{BorelAlgebra, BorelParams, Element, Gen, GroupLike, Monomial, ParamError};
pub use cyclotomic::{CycError, CycField, CycScalar};
pub use linalg::CycMatrix;
pub use radford::{BlockIndex, Character, SimpleModuleReport, Sweep};
pub use twist::{Cocycle, TwistError};
