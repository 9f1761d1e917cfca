//! Error type shared by all modules.

/// Errors reported by the library.
///
/// Contract violations that a caller can trigger with bad data (zero inputs,
/// non-coprime generator sets, out-of-range values) are reported as errors;
/// internal invariant violations panic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input or intermediate value would leave the supported integer range
    /// (signed 64-bit).
    #[error("range error: {0}")]
    Range(String),

    /// Requested computation exceeds the built-in memory or work budget.
    #[error("resource error: {0}")]
    Resource(String),

    /// The residue-class formula is not valid below the exact lower bound.
    #[error("formula not valid for a = {a}: exact lower bound is {u_hat}, use direct computation")]
    FormulaValidity { a: u64, u_hat: u64 },

    /// No decomposition of `n` into at most three parts from the primes plus
    /// one. Firing would falsify a Goldbach-type statement in the scanned
    /// range, so this must never be observed.
    #[error("no decomposition of {0} into at most three prime-or-one parts")]
    GoldbachFailure(u64),
}
