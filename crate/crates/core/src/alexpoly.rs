//! Symmetrized Alexander polynomials of L-space knots and their jump vectors.
//!
//! An L-space knot has Alexander polynomial
//! `sum_{i=-k}^{k} (-1)^(k+i) t^(n_i)` for an antisymmetric, strictly
//! increasing exponent sequence `n_{-k} < ... < n_k` whose top two entries
//! are adjacent. The jump vector `r_i = n_{k+2-2i} - n_{k+1-2i}` records
//! every second gap; symmetry supplies the rest.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, LSpaceViolation, Result};

/// Sparse Laurent polynomial with integer coefficients. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlexanderPolynomial {
    coeffs: BTreeMap<i64, i64>,
    name: Option<String>,
}

impl AlexanderPolynomial {
    pub fn new(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Self { coeffs, name: None }
    }

    /// Builds a symmetric polynomial from its terms of nonnegative degree.
    pub fn from_nonnegative_half(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let half: Vec<_> = terms.into_iter().collect();
        let mirrored = half.iter().filter(|(e, _)| *e > 0).map(|&(e, c)| (-e, c));
        let all: Vec<_> = half.iter().copied().chain(mirrored).collect();
        Self::new(all)
    }

    pub fn one() -> Self {
        Self::new([(0, 1)])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Coefficient `c_h` of `t^h`.
    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// The exponents `n_{-k} < ... < n_k` of an L-space knot polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentSequence {
    exponents: Vec<i64>,
}

impl ExponentSequence {
    /// Half-length `k`; the sequence has `2k + 1` entries.
    pub fn k(&self) -> usize {
        self.exponents.len() / 2
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// `n_i` for `-k <= i <= k`.
    pub fn n(&self, i: isize) -> i64 {
        self.exponents[(i + self.k() as isize) as usize]
    }

    /// Sign `(-1)^(k+i)` attached to `n_i`.
    pub fn sign(&self, i: isize) -> i64 {
        if (self.k() as isize + i) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The Seifert genus, i.e. `n_k`.
    pub fn genus(&self) -> u64 {
        self.n(self.k() as isize) as u64
    }

    pub fn to_polynomial(&self) -> AlexanderPolynomial {
        let k = self.k() as isize;
        AlexanderPolynomial::new((-k..=k).map(|i| (self.n(i), self.sign(i))))
    }
}

/// Jump vector `r = (r_1, ..., r_k)` of an L-space knot polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JumpVector {
    r: Vec<u64>,
}

impl JumpVector {
    pub fn new(r: Vec<u64>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::EmptyJumpVector);
        }
        if let Some(index) = r.iter().position(|&v| v == 0) {
            return Err(Error::InvalidJump { index: index + 1, value: 0 });
        }
        if r[0] != 1 {
            return Err(Error::FirstJumpNotOne { value: r[0] });
        }
        Ok(Self { r })
    }

    /// Accepts signed input, as read from files.
    pub fn from_signed(r: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(r.len());
        for (idx, &v) in r.iter().enumerate() {
            if v < 1 {
                return Err(Error::InvalidJump { index: idx + 1, value: v });
            }
            out.push(v as u64);
        }
        Self::new(out)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.r
    }

    pub fn k(&self) -> usize {
        self.r.len()
    }

    /// `k / 2` for even `k`.
    pub fn h(&self) -> Option<usize> {
        self.k().is_multiple_of(2).then_some(self.k() / 2)
    }

    /// `r_i` with 1-based `i`.
    pub fn r(&self, i: usize) -> u64 {
        self.r[i - 1]
    }

    /// Sum of `r_i` for `i` in `from..=to` (1-based, empty when `from > to`).
    pub fn range_sum(&self, from: usize, to: usize) -> u64 {
        if from > to {
            return 0;
        }
        self.r[from - 1..to].iter().sum()
    }

    /// Genus of the polynomial the vector encodes, i.e. the sum of all jumps.
    pub fn genus(&self) -> u64 {
        self.r.iter().sum()
    }
}

/// Checks the L-space staircase shape and returns the exponent sequence.
pub fn validate_lspace_form(poly: &AlexanderPolynomial) -> Result<ExponentSequence> {
    if poly.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    for (exponent, coefficient) in poly.terms() {
        if coefficient.abs() != 1 {
            return Err(Error::NotLSpaceForm(LSpaceViolation::Coefficient { exponent, coefficient }));
        }
    }
    for (exponent, coefficient) in poly.terms().rev() {
        if poly.coeff(-exponent) != coefficient {
            return Err(Error::NotLSpaceForm(LSpaceViolation::Asymmetric { exponent }));
        }
    }
    let mut expected = 1;
    for (exponent, found) in poly.terms().rev() {
        if found != expected {
            return Err(Error::NotLSpaceForm(LSpaceViolation::Sign { exponent, expected, found }));
        }
        expected = -expected;
    }
    let exponents: Vec<i64> = poly.terms().map(|(e, _)| e).collect();
    if let [.., next, top] = exponents[..] {
        if top - next != 1 {
            return Err(Error::NotLSpaceForm(LSpaceViolation::TopGap { top, next }));
        }
    }
    // Symmetry plus alternation starting and ending at +1 forces an odd
    // number of terms, so n_0 = 0 sits in the middle.
    debug_assert_eq!(exponents.len() % 2, 1);
    Ok(ExponentSequence { exponents })
}

/// `r_i = n_{k+2-2i} - n_{k+1-2i}` for `i = 1..=k`.
pub fn jump_vector_from_exponents(seq: &ExponentSequence) -> Result<JumpVector> {
    let k = seq.k() as isize;
    if k == 0 {
        return Err(Error::DegenerateSequence);
    }
    let r = (1..=k).map(|i| (seq.n(k + 2 - 2 * i) - seq.n(k + 1 - 2 * i)) as u64).collect();
    JumpVector::new(r)
}

/// Gaps `n_k - n_{k-1}, n_{k-1} - n_{k-2}, ..., n_1 - n_0` read off `r`.
///
/// Antisymmetry turns `r_{k+1-i}` into `n_{k+1-2i} - n_{k-2i}`, so walking
/// down from the top the gaps are `r_1, r_k, r_2, r_{k-1}, ...`.
fn upper_gaps(r: &JumpVector) -> impl Iterator<Item = u64> + '_ {
    let k = r.k();
    (0..k).map(move |step| if step % 2 == 0 { r.r(step / 2 + 1) } else { r.r(k - (step - 1) / 2) })
}

pub fn exponents_from_jump_vector(r: &JumpVector) -> Result<ExponentSequence> {
    let mut upper = vec![r.genus() as i64];
    for gap in upper_gaps(r) {
        let last = *upper.last().expect("nonempty");
        upper.push(last - gap as i64);
    }
    if upper.last() != Some(&0) {
        return Err(Error::InconsistentParity);
    }
    // upper runs n_k, n_{k-1}, ..., n_0 = 0
    let mut exponents: Vec<i64> = upper[..r.k()].iter().map(|e| -e).collect();
    exponents.extend(upper.iter().rev());
    let seq = ExponentSequence { exponents };
    if jump_vector_from_exponents(&seq)? != *r {
        return Err(Error::InconsistentParity);
    }
    Ok(seq)
}

pub fn polynomial_from_jump_vector(r: &JumpVector) -> Result<AlexanderPolynomial> {
    Ok(exponents_from_jump_vector(r)?.to_polynomial())
}

/// Seifert genus of an L-space knot, the top exponent of its polynomial.
pub fn genus(poly: &AlexanderPolynomial) -> Result<u64> {
    Ok(validate_lspace_form(poly)?.genus())
}

/// Indices `j` in `2..=k` where `sum_{i=2}^j r_i <= sum_{i=k-j+2}^k r_i`
/// fails. An empty result means `r` passes the admissibility test.
pub fn krcatovich_check(r: &JumpVector) -> Vec<usize> {
    let k = r.k();
    (2..=k).filter(|&j| r.range_sum(2, j) > r.range_sum(k - j + 2, k)).collect()
}

/// `t_j = sum_{m > 0} m * c_{j+m}`, the torsion coefficient read straight
/// off the coefficients. Valid for every parity of `k`.
pub fn torsion_direct(poly: &AlexanderPolynomial, j: u64) -> i64 {
    let j = j as i64;
    poly.coeffs.range(j + 1..).map(|(&e, &c)| (e - j) * c).sum()
}
