//! Exact generalized commuting probabilities of finite rings.
//!
//! For a finite ring `R` and `r` in `R`, `Pr_r(R)` is the fraction of ordered pairs
//! `(x, y)` with `xy - yx = r`. This crate computes it exactly, by direct enumeration and
//! by a centralizer-sum formula, and checks the identities and bounds that relate it to
//! centralizers, the center, the `r`-noncommuting graph and Z-isoclinism.

pub mod abelian;
pub mod bounds;
pub mod catalog;
pub mod commutators;
mod error;
pub mod graph;
pub mod isoclinism;
pub mod probability;
pub mod ring;
pub mod ringfile;
pub mod verify;

pub use error::{Error, Result};
pub use probability::{ExactProbability, Fraction};
pub use ring::{AdditiveGroupShape, FiniteRing, RingElement};
