//! Exact enumeration of rational Dyck paths, binary necklaces, and the
//! generalized Catalan numbers that count both.
//!
//! For a grid with `m` rows and `n` columns the generalized Catalan number is
//!
//! ```text
//! C_gen(m, n) = gcd(m, n) / (m + n) * binomial(m + n, n)
//! ```
//!
//! This crate computes `C_gen` and its q-analogue in closed form
//! ([`exactmath`]) and enumerates the three families of objects it counts:
//! anchor-weighted Dyck paths ([`paths`]), weighted binary necklaces and
//! marked necklaces ([`necklaces`]). Every identity is cross-checked by
//! exhaustive enumeration ([`verify`]), and diagrams come out as
//! deterministic SVG ([`render`]). Everything is exact: arbitrary-precision
//! integers and rationals, no floating point in any count or weight.
//!
//! The counting core is generic over the integer scalar (anything satisfying
//! [`scalar::ExactInt`], e.g. `i64` for throwaway desk work); the aliases
//! below pin the arbitrary-precision instantiation used across the crate.
//!
//! ```
//! use gencat::{c_gen, GridShape, Int};
//!
//! let shape = GridShape::new(3, 3).unwrap();
//! assert_eq!(c_gen::<Int>(shape).unwrap(), Int::from(10));
//! ```

pub mod error;
pub mod exactmath;
pub mod necklaces;
pub mod paths;
pub mod render;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{binomial, c_gen, cat_rational, GridShape, RationalSlope};
pub use exactmath::{q_binomial, q_catalan_normalized, q_integer, Poly};
pub use necklaces::{canonical_rotation, minimal_period, Necklace};
pub use paths::{BinaryWord, DyckPath, Letter};

/// Arbitrary-precision integer used for all counts.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational used for all weights.
pub type Rational = num_rational::BigRational;

/// Dense integer polynomial in `q` with arbitrary-precision coefficients.
pub type IntPolynomial = Poly<Int>;
