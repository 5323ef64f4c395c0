//! Exact machinery for the Diophantine equations `A³ + B³ = C³ + D³` and
//! `A⁴ + B⁴ + C⁴ + D⁴ + E⁴ = F⁴`.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! - [`exact`]: big integers, rationals and a small tower of formal square roots.
//! - [`series`]: polynomials and rational functions with Taylor expansion at 0 and
//!   Laurent expansion at infinity.
//! - [`recurrences`]: order-2 integer recurrences, their Casoratians and the rational
//!   generating functions of `ωₙ²` and `ωₙωₙ₊₁`.
//! - [`identities`]: parametric quadratic-form identities and their certification by
//!   full symbolic expansion.
//! - [`families`]: the built-in infinite families of solutions, generated and verified.
//! - [`oracle`]: brute-force searches used as ground truth.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod exact;
pub mod families;
pub mod identities;
pub mod oracle;
pub mod recurrences;
pub mod series;

pub use exact::{Integer, RadicalScalar, Rational};
pub use families::{FamilySpec, PowerRelation, SolutionTuple};
pub use identities::{MultiPoly, QuadraticFormTuple};
pub use recurrences::LinearRecurrence2;
pub use series::{Polynomial, RationalFunction};
