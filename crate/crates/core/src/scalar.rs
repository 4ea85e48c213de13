//! Integer scalar abstraction for the counting core.
//!
//! Counting formulas and q-polynomials are generic over [`ExactInt`] so the
//! same code runs on machine integers (`i64`, `i128`) when the caller knows
//! the values fit, and on `BigInt` when they may not. The crate-level aliases
//! instantiate everything with `BigInt`; narrow scalars are the caller's
//! overflow responsibility.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::FromPrimitive;

/// Exact integer scalar: ring ops, Euclidean division, gcd, and conversion
/// from machine-sized indices.
pub trait ExactInt: Integer + FromPrimitive + Clone + Debug + Display {
    /// Converts a loop index or count. Panics if the scalar type cannot hold
    /// it, which only narrow instantiations can trigger.
    fn from_index(i: u64) -> Self {
        Self::from_u64(i).expect("index does not fit in the chosen integer scalar")
    }
}

impl<T> ExactInt for T where T: Integer + FromPrimitive + Clone + Debug + Display {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn from_index_roundtrips() {
        assert_eq!(<i64 as ExactInt>::from_index(42), 42i64);
        assert_eq!(<BigInt as ExactInt>::from_index(42), BigInt::from(42));
    }

    #[test]
    #[should_panic(expected = "does not fit")]
    fn from_index_rejects_overflow() {
        let _ = <i8 as ExactInt>::from_index(300);
    }
}
