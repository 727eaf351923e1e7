use std::fmt;

use thiserror::Error;

/// The specific way a polynomial fails to have the staircase shape of an
/// L-space knot's symmetrized Alexander polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LSpaceViolation {
    /// A coefficient other than `+1` or `-1`.
    Coefficient { exponent: i64, coefficient: i64 },
    /// The coefficient at `exponent` differs from the one at `-exponent`.
    Asymmetric { exponent: i64 },
    /// Signs do not alternate starting from `+1` at the top degree.
    Sign { exponent: i64, expected: i64, found: i64 },
    /// The two highest exponents are not adjacent.
    TopGap { top: i64, next: i64 },
}

impl fmt::Display for LSpaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Coefficient { exponent, coefficient } => {
                write!(f, "coefficient {coefficient} at t^{exponent} is not +1 or -1")
            }
            Self::Asymmetric { exponent } => {
                write!(f, "coefficients at t^{exponent} and t^{} differ", -exponent)
            }
            Self::Sign { exponent, expected, found } => {
                write!(f, "sign at t^{exponent} is {found:+}, alternation from the top requires {expected:+}")
            }
            Self::TopGap { top, next } => {
                write!(f, "top exponents {top} and {next} are not adjacent")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty polynomial")]
    EmptyPolynomial,
    #[error("not an L-space knot polynomial: {0}")]
    NotLSpaceForm(LSpaceViolation),
    #[error("exponent sequence has no jumps (k = 0)")]
    DegenerateSequence,
    #[error("jump vector is empty")]
    EmptyJumpVector,
    #[error("jump r_{index} = {value} is not a positive integer")]
    InvalidJump { index: usize, value: i64 },
    #[error("first jump r_1 = {value}, but it must equal 1")]
    FirstJumpNotOne { value: u64 },
    #[error("jump vector does not reconstruct an antisymmetric exponent sequence")]
    InconsistentParity,
    #[error("interval formulas need an even number of jumps, got k = {k}")]
    UnsupportedParity { k: usize },
    #[error("genus {found} does not match the jump vector (expected {expected})")]
    GenusMismatch { expected: u64, found: u64 },
    #[error(
        "degenerate interval at j = {index}: need a_j < b_j < a_(j-1), got a_j = {a}, b_j = {b}, a_(j-1) = {prev}"
    )]
    DegenerateInterval { index: usize, a: i64, b: i64, prev: i64 },
    #[error("index {index} is outside 1..={genus}")]
    IndexOutOfRange { index: u64, genus: u64 },
    #[error("surgery slope must be a positive integer")]
    InvalidSlope,
    #[error("slope {slope} is below 2g - 1 = {min}")]
    SlopeTooSmall { slope: u64, min: u64 },
    #[error("slope {slope} exceeds the supported maximum {max}")]
    SlopeTooLarge { slope: u64, max: u64 },
    #[error("Spin^c label {label} is outside 0..={max} for slope {slope}")]
    LabelOutOfRange { label: u64, slope: u64, max: u64 },
    #[error("family index must be at least 1")]
    InvalidFamilyIndex,
    #[error("invalid Legendrian data: {0}")]
    InvalidLegendrian(String),
    #[error("second-branch label range ends at {branch_end}, table ends at {table_end}")]
    BranchRangeMismatch { branch_end: u64, table_end: u64 },
    #[error("torsion profiles disagree at j = {index}: interval formula {interval}, direct sum {direct}")]
    ProfileMismatch { index: usize, interval: u64, direct: u64 },
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl fmt::Display) -> Self {
        Self::Parse { context: context.into(), message: message.to_string() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
