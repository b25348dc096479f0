//! Exact numerical invariants of hyperelliptic genus-`g` Lefschetz fibrations
//! over the sphere.
//!
//! A fibration is described only by its vanishing-cycle census
//! ([`FibrationNumerics`]): the genus `g`, the number `n` of non-separating
//! vanishing cycles and the counts `s_h` of separating cycles of each type
//! `h = 1..=g/2`. From that census the crate derives the signature, Euler
//! characteristic, holomorphic Euler characteristic, `c1^2` and the slope
//! ([`invariants`]), evaluates a fixed registry of bounds, equivalences and
//! divisibility laws ([`constraints`]), and sweeps bounded parameter boxes
//! exhaustively ([`enumeration`]).
//!
//! Everything is exact: rationals never pass through floating point.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod constraints;
pub mod enumeration;
mod error;
mod fibration;
pub mod invariants;
mod rational;

pub use constraints::{CheckId, CheckResult, HypothesisFlags, Verdict};
pub use error::Error;
pub use fibration::FibrationNumerics;
pub use invariants::InvariantSet;
pub use rational::Rational;
