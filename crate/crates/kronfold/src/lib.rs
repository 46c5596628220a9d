//! Exact arithmetic for symmetric-group representation theory at desk scale.
//!
//! The crate computes, with no floating point anywhere:
//! - integer partitions and their combinatorial statistics ([`partition`]),
//! - irreducible characters of the symmetric group via the Murnaghan–Nakayama
//!   recursion with a shared memo table ([`characters`]),
//! - Kronecker, symmetric and antisymmetric Kronecker, sm/am, and Kostka
//!   coefficients ([`coefficients`]),
//! - plethysm coefficients of complete homogeneous functions in the power-sum
//!   basis ([`plethysm`]),
//! - self-conjugate partitions of prescribed size, sign and bounded length
//!   ([`selfconj`]),
//! - semigroup positivity certificates for sm together with an independent
//!   verifier ([`certify`]),
//! - symbolic checks on the trace of a matrix power: its annihilator and
//!   invariant-space dimensions by fraction-free elimination ([`stabilizer`]).
//!
//! The numeric kernels are generic over an exact scalar (see [`scalar`]); the
//! aliases below fix the concrete arbitrary-precision types used throughout.

pub mod certify;
pub mod characters;
pub mod coefficients;
pub mod matrix;
pub mod partition;
pub mod plethysm;
pub mod scalar;
pub mod selfconj;
pub mod stabilizer;

/// Exact signed integer: character values, class sums, coefficient numerators.
pub type Int = num_bigint::BigInt;
/// Exact nonnegative integer: counts, dimensions, class orders.
pub type Nat = num_bigint::BigUint;
/// Exact rational: symmetric-function and polynomial coefficients.
pub type Rat = num_rational::Ratio<Int>;

pub use partition::{Partition, Sign};

/// Errors surfaced to callers. Internal arithmetic inconsistencies
/// (non-integral class sums, failed exact divisions) panic instead: they
/// signal a bug, not a bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("partitions must have equal weight, got {0} and {1}")]
    WeightMismatch(u64, u64),
    #[error("weight {0} exceeds the configured cap {1} (KF_MAX_WEIGHT or --max-weight raises it)")]
    WeightCapExceeded(u64, u64),
    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(Partition),
    #[error("no self-conjugate partition of {a} has sign {sign}: {a} lies in the exceptional set {set}")]
    ExceptionalSign { a: u64, sign: Sign, set: &'static str },
    #[error("invalid partition literal `{literal}`: {reason}")]
    Parse { literal: String, reason: String },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
