//! Exact d-invariant obstructions to weak symplectic fillings of Dehn
//! surgeries on L-space knots.
//!
//! The pipeline runs from a knot's symmetrized Alexander polynomial (or its
//! jump vector) through torsion coefficients to the d-invariants of every
//! Spin^c structure on the integral surgery `K(n)`, and decides whether the
//! negative-definite bound rules out weak fillings. All verdicts use exact
//! rationals; the d-invariant formulas are generic over [`Scalar`] so the
//! same code can be evaluated in floating point for display.

pub mod alexpoly;
pub mod dinv;
pub mod error;
pub mod families;
pub mod knot;
pub mod knotio;
pub mod obstruction;
pub mod report;
pub mod scalar;
pub mod torsion;

pub use alexpoly::{AlexanderPolynomial, ExponentSequence, JumpVector};
pub use error::{Error, LSpaceViolation, Result};
pub use knot::Knot;
pub use obstruction::{Conclusion, SlopeInterval};
pub use scalar::{ExactScalar, Scalar};
pub use torsion::{IntervalData, TorsionProfile};

/// Exact rational used for every verdict.
pub type ExactRational = num_rational::Ratio<i64>;
/// Exact rational with arbitrary-precision parts.
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;

pub type DInvariantTable = dinv::DInvariantTable<ExactRational>;
pub type DInvariantTableF64 = dinv::DInvariantTable<f64>;
pub type DInvariantTableBig = dinv::DInvariantTable<BigRational>;
pub type Verdict = obstruction::Verdict<ExactRational>;
