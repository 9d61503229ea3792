//! Exact combinatorics workbench: partitions and skew shapes, border-strip
//! tableaux, irreducible symmetric-group characters, matrix immanants,
//! cycle-cover enumeration on weighted digraphs, and end-to-end verifiers
//! for matching-count recovery on gadget graphs.
//!
//! Everything is exact: characters and immanants are arbitrary-precision
//! integers, symbolic results are dense integer polynomials in `x`, and the
//! modular pipeline works in residue arithmetic with an explicit CRT
//! reconstruction. No floating point is used anywhere.

pub mod characters;
pub mod gadgets;
pub mod graphs;
pub mod immanant;
pub mod oracles;
pub mod poly;
pub mod reductions;
pub mod shapes;
pub mod tableaux;

pub use characters::{chi, chi_nonrecursive, CycleType, Spectrum};
pub use graphs::{UndirectedGraph, Value, Weight, WeightedDigraph};
pub use poly::UniPoly;
pub use shapes::{Partition, SkewShape};

/// Errors shared across the workbench.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed textual input (partition grammar, graph or matrix files).
    #[error("parse error: {0}")]
    Parse(String),
    /// A partition-valued argument violates weak monotonicity or positivity.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// Two objects that must have equal size do not.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },
    /// A precondition on operation arguments is violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Input exceeds a hard cap (naive immanant size, table size).
    #[error("input too large: {0}")]
    TooLarge(String),
    /// Enumeration exceeded its configured budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A character value that must divide an immanant is zero.
    #[error("zero divisor: {0}")]
    ZeroDivisor(String),
    /// An algebraic identity the pipeline relies on failed to hold exactly.
    #[error("identity violation: {0}")]
    IdentityViolation(String),
    /// Not enough usable primes below the sieve cap.
    #[error("insufficient primes: {0}")]
    InsufficientPrimes(String),
}

pub type Result<T> = std::result::Result<T, Error>;
