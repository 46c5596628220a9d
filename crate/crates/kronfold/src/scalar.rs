//! Scalar traits bounding the exact arithmetic the kernels need.
//!
//! Everything here is satisfied by the crate-root aliases (`Int`, `Rat`).
//! The machine integers also satisfy [`ExactInt`]; they are usable for toy
//! experiments but overflow silently outside tiny weights, so the shipped
//! entry points all run on the arbitrary-precision aliases.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact signed integer scalar: characters, class sums, elimination pivots.
pub trait ExactInt:
    Integer + Signed + FromPrimitive + Clone + Hash + Send + Sync + Debug + Display + 'static
{
}

impl<T> ExactInt for T where
    T: Integer + Signed + FromPrimitive + Clone + Hash + Send + Sync + Debug + Display + 'static
{
}

/// Exact commutative-ring scalar: polynomial and symmetric-function
/// coefficients. Satisfied by both the integer and the rational alias.
pub trait ExactScalar:
    Clone
    + PartialEq
    + num_traits::Zero
    + num_traits::One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + Debug
    + 'static
{
}

impl<T> ExactScalar for T where
    T: Clone
        + PartialEq
        + num_traits::Zero
        + num_traits::One
        + std::ops::Neg<Output = Self>
        + std::ops::Sub<Output = Self>
        + FromPrimitive
        + Send
        + Sync
        + Debug
        + 'static
{
}
