//! Exact-arithmetic analysis of the canonical class of homogeneous orbit
//! spaces G/H inside GL(n): restricted-torus characters, weight
//! decompositions of the tangent space, and determinant-character tests.
//!
//! All computation is over arbitrary-precision integers and rationals;
//! results are exact and deterministic.

pub mod analyzer;
pub mod error;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod rep;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
