//! Frobenius numbers of square and prime sequences.
//!
//! For coprime generators `A = (a, a+1, a+4, ..., a+k^2)` the Frobenius number
//! `g(A)` is the largest integer that is not a nonnegative integer combination
//! of the generators. This crate computes `g(A)` for
//!
//! * the finite square sequence `(a, a+1, a+4, ..., a+k^2)`, both directly and
//!   through a residue-class formula with per-class coefficients ([`finite`]),
//! * the infinite square sequence `(a, a+1, a+4, a+9, ...)` ([`infinite`]),
//! * the infinite prime sequence `(a, a+1, a+2, a+3, a+5, a+7, ...)`
//!   ([`infinite`]).
//!
//! The engine behind the finite case is a min-plus (tropical) truncated power
//! series product that tabulates `iota_k(n)`, the least number of squares from
//! `{1, 4, ..., k^2}` summing to `n` ([`minplus`]). The infinite cases reduce
//! to the classical classifications of sums of squares and of prime parts
//! ([`arithmetic`]). Everything is cross-checked against naive brute-force
//! implementations ([`oracle`]).
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod arithmetic;
pub mod error;
pub mod finite;
pub mod infinite;
pub mod minplus;
pub mod oracle;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
