//! Fillability verdicts from d-invariant tables.
//!
//! A rational homology sphere with `|H_1| = n` square-free that bounds a
//! negative definite 4-manifold has some d-invariant with
//! `4d >= 1 - 1/n` (n odd) or `4d >= 1` (n even). L-space surgeries only
//! have negative definite fillings, so a table with no such ("weak") value
//! rules out weak symplectic fillings altogether.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::dinv::{d_table, min_slope, DInvariantTable};
use crate::error::{Error, Result};
use crate::scalar::ExactScalar;
use crate::torsion::{IntervalData, TorsionProfile};
use crate::ExactRational;

pub fn is_square_free(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// The d-value at or above which a d-invariant of `K(n)` counts as weak:
/// `(1 - 1/n)/4` for odd `n`, `1/4` for even `n`.
pub fn weak_threshold<T: ExactScalar>(n: u64) -> T {
    let n = n as i64;
    if n.is_odd() {
        T::ratio(n - 1, 4 * n)
    } else {
        T::ratio(1, 4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    /// Square-free slope and no weak d-value: no weak symplectic fillings.
    Obstructed,
    /// Some d-value is weak, so the bound says nothing.
    Inconclusive,
    /// The slope is not square-free and the bound does not apply.
    NotApplicable,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Obstructed => "OBSTRUCTED",
            Self::Inconclusive => "INCONCLUSIVE",
            Self::NotApplicable => "NOT_APPLICABLE",
        }
    }

    /// Process exit code for a command whose result is this conclusion.
    pub fn exit_code(self) -> u8 {
        match self {
            Self::Obstructed => 0,
            Self::Inconclusive => 10,
            Self::NotApplicable => 11,
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<T = ExactRational> {
    pub slope: u64,
    pub square_free: bool,
    pub threshold: T,
    pub max_d: T,
    pub weak_labels: Vec<u64>,
    pub conclusion: Conclusion,
}

impl<T: ExactScalar> Verdict<T> {
    /// True when every d-value is strictly negative.
    pub fn all_negative(&self) -> bool {
        self.max_d < T::zero()
    }
}

pub fn classify<T: ExactScalar>(table: &DInvariantTable<T>) -> Verdict<T> {
    let n = table.slope;
    let threshold: T = weak_threshold(n);
    let weak_labels: Vec<u64> = table.entries.iter().filter(|e| e.value >= threshold).map(|e| e.label).collect();
    let max_d = table.values().max().cloned().expect("tables have at least label 0");
    let square_free = is_square_free(n);
    let conclusion = if !square_free {
        Conclusion::NotApplicable
    } else if weak_labels.is_empty() {
        Conclusion::Obstructed
    } else {
        Conclusion::Inconclusive
    };
    Verdict { slope: n, square_free, threshold, max_d, weak_labels, conclusion }
}

/// Exact verdict at slope `n` for a knot with the given torsion profile.
pub fn verdict_at(profile: &TorsionProfile, n: u64) -> Result<Verdict> {
    Ok(classify(&d_table::<ExactRational>(profile, n)?))
}

/// Closed or open endpoint of a slope interval; `None` value means infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeInterval {
    pub low: Option<ExactRational>,
    pub high: Option<ExactRational>,
    pub low_closed: bool,
    pub high_closed: bool,
}

impl SlopeInterval {
    pub fn closed(low: i64, high: i64) -> Self {
        assert!(low <= high, "empty interval [{low}, {high}]");
        Self {
            low: Some(ExactRational::from_integer(low)),
            high: Some(ExactRational::from_integer(high)),
            low_closed: true,
            high_closed: true,
        }
    }

    /// `(low, high]`; requires `low < high`.
    pub fn left_open(low: i64, high: i64) -> Self {
        assert!(low < high, "empty interval ({low}, {high}]");
        Self { low_closed: false, ..Self::closed(low, high) }
    }

    pub fn above(low: i64) -> Self {
        Self { low: Some(ExactRational::from_integer(low)), high: None, low_closed: false, high_closed: false }
    }

    pub fn below(high: i64) -> Self {
        Self { low: None, high: Some(ExactRational::from_integer(high)), low_closed: false, high_closed: false }
    }

    pub fn contains(&self, q: &ExactRational) -> bool {
        let above_low = match &self.low {
            None => true,
            Some(l) if self.low_closed => q >= l,
            Some(l) => q > l,
        };
        let below_high = match &self.high {
            None => true,
            Some(h) if self.high_closed => q <= h,
            Some(h) => q < h,
        };
        above_low && below_high
    }

    pub fn is_disjoint(&self, other: &SlopeInterval) -> bool {
        let low = tighter((self.low, self.low_closed), (other.low, other.low_closed), |a, b| a > b);
        let high = tighter((self.high, self.high_closed), (other.high, other.high_closed), |a, b| a < b);
        match (low, high) {
            ((Some(l), l_closed), (Some(h), h_closed)) => l > h || (l == h && !(l_closed && h_closed)),
            _ => false,
        }
    }
}

type End = (Option<ExactRational>, bool);

/// The more restrictive of two same-side endpoints; `None` is unbounded.
fn tighter(a: End, b: End, stricter: impl Fn(&ExactRational, &ExactRational) -> bool) -> End {
    match (a, b) {
        ((None, _), end) | (end, (None, _)) => end,
        ((Some(x), xc), (Some(y), yc)) => {
            if x == y {
                (Some(x), xc && yc)
            } else if stricter(&x, &y) {
                (Some(x), xc)
            } else {
                (Some(y), yc)
            }
        }
    }
}

impl fmt::Display for SlopeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.low_closed { '[' } else { '(' };
        let close = if self.high_closed { ']' } else { ')' };
        let low = self.low.map_or_else(|| "-inf".to_string(), |v| v.to_string());
        let high = self.high.map_or_else(|| "inf".to_string(), |v| v.to_string());
        write!(f, "{open}{low}, {high}{close}")
    }
}

/// Scans `n` in `2g-1..=scan_max` and returns `[2g-1, n]` for the largest
/// obstructed `n`, or `None` when there is none (including an empty range). Every rational slope in that interval inherits the
/// obstruction, since bounding a negative definite manifold is preserved
/// when the slope increases.
pub fn rational_nonfillable_interval(profile: &TorsionProfile, scan_max: u64) -> Result<Option<SlopeInterval>> {
    let low = min_slope(profile.genus());
    if scan_max < low {
        return Ok(None);
    }
    let conclusions: Vec<(u64, Conclusion)> = (low..=scan_max)
        .into_par_iter()
        .map(|n| verdict_at(profile, n).map(|v| (n, v.conclusion)))
        .collect::<Result<_>>()?;
    Ok(conclusions
        .iter()
        .rev()
        .find(|(_, c)| *c == Conclusion::Obstructed)
        .map(|&(n, _)| SlopeInterval::closed(low as i64, n as i64)))
}

/// Necessary condition for every d-value of `K(n)` to be non-weak, from the
/// label `g` entry alone. With `n = 2g + (m - 1)`: `(m-2)^2 < 4g` for even
/// `m`, `(m-1)(m-3) < 4g` for odd `m`. Returns `false` exactly when label
/// `g` is weak.
pub fn quick_bound(genus: u64, n: u64) -> bool {
    let g = genus as i64;
    let m = n as i64 - 2 * g + 1;
    if m <= 0 {
        // No labels at or above the genus.
        return true;
    }
    if m % 2 == 0 {
        (m - 2) * (m - 2) < 4 * g
    } else {
        (m - 1) * (m - 3) < 4 * g
    }
}

/// The lower bound line `A_i / (g - a_i) * (g - j)` under the torsion
/// profile, for the index minimising that slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughEstimate {
    pub i_min: usize,
    /// `A_{i_min} / (g - a_{i_min})`
    pub ratio: ExactRational,
    pub holds: bool,
}

impl RoughEstimate {
    pub fn line_slope(&self) -> ExactRational {
        -self.ratio
    }

    pub fn line_intercept(&self, genus: u64) -> ExactRational {
        self.ratio * ExactRational::from_integer(genus as i64)
    }
}

pub fn rough_estimate_details(d: &IntervalData) -> Result<RoughEstimate> {
    if d.h == 0 {
        return Err(Error::UnsupportedParity { k: 0 });
    }
    let g = d.genus as i64;
    let ratio_at = |i: usize| ExactRational::new(d.big_a(i) as i64, g - d.a(i));
    // min_by_key keeps the first minimum, i.e. the smallest index on ties.
    let i_min = (1..=d.h).min_by_key(|&i| ratio_at(i)).expect("h >= 1");
    let holds = d.a(i_min) + 4 * d.big_a(i_min) as i64 >= g;
    Ok(RoughEstimate { i_min, ratio: ratio_at(i_min), holds })
}

/// Sufficient condition for every d-value of `K(2g - 1)` to be negative:
/// `a_{i_min} + 4 A_{i_min} >= g`.
pub fn rough_estimate(d: &IntervalData) -> Result<bool> {
    Ok(rough_estimate_details(d)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexpoly::JumpVector;
    use crate::torsion::interval_data;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    fn profile(values: &[u64]) -> TorsionProfile {
        TorsionProfile::from_values(values.to_vec())
    }

    fn data(r: &[u64]) -> IntervalData {
        let jv = JumpVector::new(r.to_vec()).unwrap();
        interval_data(&jv, jv.genus()).unwrap()
    }

    #[test]
    fn square_free() {
        assert!(is_square_free(13));
        assert!(!is_square_free(12));
        for n in 0..100 {
            assert!(!is_square_free(8 * n + 4));
        }
        assert!(is_square_free(1));
        assert!(is_square_free(21));
        assert!(!is_square_free(1323));
        assert!(!is_square_free(1325));
        assert!(!is_square_free(0));
        let brute = |n: u64| (2..=n).all(|p| !n.is_multiple_of(p * p));
        for n in 1..2000 {
            assert_eq!(is_square_free(n), brute(n), "n = {n}");
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(weak_threshold::<ExactRational>(13), q(3, 13));
        assert_eq!(weak_threshold::<ExactRational>(12), q(1, 4));
        assert_eq!(weak_threshold::<ExactRational>(1), q(0, 1));
    }

    #[test]
    fn classify_pretzel_and_k1() {
        let v = verdict_at(&profile(&[3, 3, 2, 2, 1, 1, 1, 0]), 13).unwrap();
        assert_eq!(v.conclusion, Conclusion::Obstructed);
        assert_eq!(v.max_d, q(-23, 13));
        assert!(v.weak_labels.is_empty());
        let v = verdict_at(&profile(&[2, 2, 1, 1, 1, 1, 0]), 13).unwrap();
        assert_eq!(v.conclusion, Conclusion::Obstructed);
        let v = verdict_at(&profile(&[2, 2, 1, 1, 1, 1, 0]), 12).unwrap();
        assert_eq!(v.conclusion, Conclusion::NotApplicable);
        assert!(!v.square_free);
    }

    #[test]
    fn weak_labels_on_large_slopes() {
        let v = verdict_at(&profile(&[3, 3, 2, 2, 1, 1, 1, 0]), 41).unwrap();
        assert_eq!(v.conclusion, Conclusion::Inconclusive);
        assert!(v.weak_labels.contains(&7));
        assert!(!v.weak_labels.is_empty());
    }

    #[test]
    fn intervals() {
        let k1 = profile(&[2, 2, 1, 1, 1, 1, 0]);
        assert_eq!(rational_nonfillable_interval(&k1, 13).unwrap(), Some(SlopeInterval::closed(11, 13)));
        assert_eq!(rational_nonfillable_interval(&k1, 10).unwrap(), None);
        let pretzel = profile(&[3, 3, 2, 2, 1, 1, 1, 0]);
        assert_eq!(rational_nonfillable_interval(&pretzel, 13).unwrap(), Some(SlopeInterval::closed(13, 13)));
    }

    #[test]
    fn quick_bounds() {
        assert!(quick_bound(7, 13));
        assert!(!quick_bound(2, 9));
        assert!(quick_bound(6, 13));
        assert!(quick_bound(1, 1));
    }

    #[test]
    fn rough_estimates() {
        let e = rough_estimate_details(&data(&[1, 1, 1, 1, 1, 2])).unwrap();
        assert_eq!((e.i_min, e.ratio, e.holds), (1, q(1, 3), true));
        assert_eq!(e.line_intercept(7), q(7, 3));
        let e = rough_estimate_details(&data(&[1, 1, 1, 3])).unwrap();
        assert_eq!((e.i_min, e.ratio, e.holds), (1, q(1, 4), true));
        let e = rough_estimate_details(&data(&[1, 1])).unwrap();
        assert_eq!((e.i_min, e.ratio, e.holds), (1, q(1, 2), true));
        let e = rough_estimate_details(&data(&[1, 1, 1, 1, 3, 3])).unwrap();
        assert_eq!((e.i_min, e.ratio), (1, q(1, 4)));
        assert_eq!((e.line_slope(), e.line_intercept(10)), (q(-1, 4), q(5, 2)));
    }

    #[test]
    fn interval_display_and_membership() {
        let i = SlopeInterval::left_open(11, 13);
        assert_eq!(i.to_string(), "(11, 13]");
        assert!(!i.contains(&q(11, 1)));
        assert!(i.contains(&q(23, 2)));
        assert!(i.contains(&q(13, 1)));
        assert_eq!(SlopeInterval::above(13).to_string(), "(13, inf)");
        assert!(SlopeInterval::closed(11, 11).is_disjoint(&i));
        assert!(!SlopeInterval::closed(9, 11).is_disjoint(&SlopeInterval::closed(11, 13)));
        assert!(SlopeInterval::below(9).is_disjoint(&SlopeInterval::closed(9, 11)));
        assert!(!SlopeInterval::below(10).is_disjoint(&SlopeInterval::closed(9, 11)));
        assert!(!SlopeInterval::above(12).is_disjoint(&SlopeInterval::below(13)));
        assert!(SlopeInterval::below(9).is_disjoint(&SlopeInterval::left_open(9, 11)));
    }
}
