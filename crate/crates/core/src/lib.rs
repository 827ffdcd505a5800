#![forbid(unsafe_code)]

//! Exact generalized number-theoretic transforms.
//!
//! The transform family here uses the weight function `s^{±(k·i) mod N}` over
//! the residue ring modulo `M`, where the base `s`, the length `N` and the
//! modulus `M` are tied together by one of several parameter regimes
//! (geometric-sum moduli, prime-power lengths, `s^p + 1` moduli, `M = N + 1`).
//! Everything is computed with arbitrary-precision integers, so results are
//! exact: there is no rounding anywhere.
//!
//! The main entry points:
//!
//! - [`plan::make_plan`] / [`plan::plan_search`] build validated [`TransformPlan`]s.
//! - [`transform::forward`] / [`transform::inverse`] run the transform pair.
//! - [`theorems::convolve_exact_integers`] multiplies integer polynomials exactly.
//! - [`rebase`], [`gaussian`], [`duality`] and [`pairs`] cover basis changes,
//!   Gaussian-integer bases, the complement duality and ordered-pair bases.

pub mod bigring;
pub mod cli;
pub mod duality;
pub mod error;
pub mod gaussian;
pub mod io;
pub mod pairs;
mod parallel;
pub mod plan;
pub mod rebase;
pub mod theorems;
pub mod transform;
pub mod verify;

pub use bigring::{RingElement, RingModulus};
pub use error::{Error, Result};
pub use plan::{Regime, TransformPlan};
pub use transform::Sequence;
