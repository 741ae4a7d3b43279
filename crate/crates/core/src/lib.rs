//! Explicit Zassenhaus expansion of `e^{A+B}` and the product expansions of
//! `e^X e^Y` derived from it.
//!
//! Everything symbolic lives in the free associative algebra on two
//! generators with exact rational coefficients ([`freealg`]). The
//! [`numeric`] module evaluates the same expansions on dense matrices and
//! compares them with a scaling-and-squaring matrix exponential.

pub mod bch;
pub mod cli;
pub mod error;
pub mod freealg;
pub mod numeric;
pub mod verify;
pub mod zassenhaus;

pub use error::{Error, Result};
