//! Torsion coefficients from the jump vector via the interval formula.
//!
//! For `k = 2h`, the torsion coefficients drop by one exactly at the
//! integers `j` in one of the half-open intervals `(b_l, a_{l-1}]`,
//! `l = 1..=h`, and stay flat on the complementary `(a_l, b_l]`.

use serde::Serialize;

use crate::alexpoly::{torsion_direct, AlexanderPolynomial, JumpVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalData {
    pub genus: u64,
    pub h: usize,
    /// `A_1..A_h`
    pub big_a: Vec<u64>,
    /// `B_1..B_h`
    pub big_b: Vec<u64>,
    /// `C_2..C_h`
    pub big_c: Vec<u64>,
    /// `a_0..a_h`, with `a_0 = g`
    pub a: Vec<i64>,
    /// `b_1..b_h`, with `b_1 = g - 1`
    pub b: Vec<i64>,
}

impl IntervalData {
    /// `A_i` for `1 <= i <= h`; `A_0 = 0`.
    pub fn big_a(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.big_a[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> i64 {
        self.a[i]
    }

    /// `b_l` for `1 <= l <= h`.
    pub fn b(&self, l: usize) -> i64 {
        self.b[l - 1]
    }

    /// The intervals `(b_l, a_{l-1}]` on which the profile steps, `l = 1..=h`.
    pub fn step_intervals(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (1..=self.h).map(|l| (self.b(l), self.a(l - 1)))
    }
}

pub fn interval_data(r: &JumpVector, genus: u64) -> Result<IntervalData> {
    let k = r.k();
    let h = r.h().ok_or(Error::UnsupportedParity { k })?;
    if genus != r.genus() {
        return Err(Error::GenusMismatch { expected: r.genus(), found: genus });
    }
    let g = genus as i64;
    let big_a: Vec<u64> = (1..=h).map(|j| r.range_sum(1, j)).collect();
    let big_b: Vec<u64> = (1..=h).map(|j| r.range_sum(k - j + 1, k)).collect();
    let big_c: Vec<u64> = (2..=h).map(|l| r.range_sum(k - l + 2, k)).collect();

    let mut a = vec![g];
    a.extend((0..h).map(|idx| g - (big_a[idx] + big_b[idx]) as i64));
    let mut b = vec![g - 1];
    b.extend((1..h).map(|idx| g - (big_a[idx] + big_c[idx - 1]) as i64));

    for j in 1..=h {
        let (aj, bj, prev) = (a[j], b[j - 1], a[j - 1]);
        if !(aj < bj && bj < prev) {
            return Err(Error::DegenerateInterval { index: j, a: aj, b: bj, prev });
        }
    }
    Ok(IntervalData { genus, h, big_a, big_b, big_c, a, b })
}

/// `t_{j-1} - t_j`, which is 1 iff `j` lies in some `(b_l, a_{l-1}]`.
pub fn torsion_step(d: &IntervalData, j: u64) -> Result<u64> {
    if j == 0 || j > d.genus {
        return Err(Error::IndexOutOfRange { index: j, genus: d.genus });
    }
    let j = j as i64;
    Ok(d.step_intervals().filter(|&(lo, hi)| lo < j && j <= hi).count() as u64)
}

/// Torsion coefficients `t_0, ..., t_g` of one knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionProfile {
    values: Vec<u64>,
}

impl TorsionProfile {
    /// Builds the profile from the defining sum over the coefficients.
    pub fn from_polynomial(poly: &AlexanderPolynomial) -> Self {
        let genus = poly.max_exponent().unwrap_or(0).max(0) as u64;
        let values = (0..=genus).map(|j| torsion_direct(poly, j).max(0) as u64).collect();
        Self { values }
    }

    pub fn from_values(values: Vec<u64>) -> Self {
        assert!(!values.is_empty(), "profile needs at least t_0");
        Self { values }
    }

    pub fn genus(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `t_j`, zero beyond the genus.
    pub fn get(&self, j: u64) -> u64 {
        self.values.get(j as usize).copied().unwrap_or(0)
    }

    /// First index where the two profiles disagree.
    pub fn first_mismatch(&self, other: &TorsionProfile) -> Option<usize> {
        let len = self.values.len().max(other.values.len());
        (0..len).find(|&j| self.get(j as u64) != other.get(j as u64))
    }
}

/// `t_j = sum_{l=j+1}^{g} (t_{l-1} - t_l)` summed from the interval steps.
pub fn torsion_profile(d: &IntervalData) -> Result<TorsionProfile> {
    let g = d.genus;
    let mut values = vec![0u64; g as usize + 1];
    for j in (0..g).rev() {
        values[j as usize] = values[j as usize + 1] + torsion_step(d, j + 1)?;
    }
    Ok(TorsionProfile { values })
}
