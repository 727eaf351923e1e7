//! A validated L-space knot and the per-slope analysis pipeline.

use rayon::prelude::*;

use crate::alexpoly::{
    jump_vector_from_exponents, krcatovich_check, polynomial_from_jump_vector, validate_lspace_form,
    AlexanderPolynomial, ExponentSequence, JumpVector,
};
use crate::dinv::{d_table, min_slope, DInvariantTable};
use crate::error::{Error, Result};
use crate::obstruction::{
    classify, is_square_free, quick_bound, rational_nonfillable_interval, rough_estimate_details, Conclusion,
    RoughEstimate, SlopeInterval, Verdict,
};
use crate::torsion::{interval_data, torsion_profile, IntervalData, TorsionProfile};
use crate::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Knot {
    name: String,
    polynomial: AlexanderPolynomial,
    sequence: ExponentSequence,
    jumps: Option<JumpVector>,
    violations: Vec<usize>,
    profile: TorsionProfile,
}

impl Knot {
    pub fn from_polynomial(name: impl Into<String>, polynomial: AlexanderPolynomial) -> Result<Self> {
        let name = name.into();
        let sequence = validate_lspace_form(&polynomial)?;
        let jumps = match jump_vector_from_exponents(&sequence) {
            Ok(r) => Some(r),
            Err(Error::DegenerateSequence) => None,
            Err(e) => return Err(e),
        };
        let violations = jumps.as_ref().map(krcatovich_check).unwrap_or_default();
        let profile = TorsionProfile::from_polynomial(&polynomial);
        if let Some(r) = jumps.as_ref().filter(|r| r.k() % 2 == 0) {
            // The interval formula must reproduce the direct sum.
            let by_interval = torsion_profile(&interval_data(r, sequence.genus())?)?;
            if let Some(index) = by_interval.first_mismatch(&profile) {
                return Err(Error::ProfileMismatch {
                    index,
                    interval: by_interval.get(index as u64),
                    direct: profile.get(index as u64),
                });
            }
        }
        let polynomial = polynomial.with_name(name.clone());
        Ok(Self { name, polynomial, sequence, jumps, violations, profile })
    }

    pub fn from_jump_vector(name: impl Into<String>, r: &JumpVector) -> Result<Self> {
        Self::from_polynomial(name, polynomial_from_jump_vector(r)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn polynomial(&self) -> &AlexanderPolynomial {
        &self.polynomial
    }

    pub fn sequence(&self) -> &ExponentSequence {
        &self.sequence
    }

    pub fn genus(&self) -> u64 {
        self.sequence.genus()
    }

    pub fn k(&self) -> usize {
        self.sequence.k()
    }

    /// `None` for the unknot.
    pub fn jump_vector(&self) -> Option<&JumpVector> {
        self.jumps.as_ref()
    }

    /// Indices failing the Krcatovich inequality; empty when admissible.
    pub fn krcatovich_violations(&self) -> &[usize] {
        &self.violations
    }

    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn profile(&self) -> &TorsionProfile {
        &self.profile
    }

    pub fn interval_data(&self) -> Result<IntervalData> {
        let r = self.jumps.as_ref().ok_or(Error::DegenerateSequence)?;
        interval_data(r, self.genus())
    }

    /// Smallest slope the analysis accepts, `2g - 1`.
    pub fn min_slope(&self) -> u64 {
        min_slope(self.genus())
    }

    pub fn rough_estimate(&self) -> Option<RoughEstimate> {
        self.interval_data().ok().and_then(|d| rough_estimate_details(&d).ok())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurgeryAnalysis {
    pub slope: u64,
    pub table: DInvariantTable,
    pub verdict: Verdict,
    pub quick_bound: bool,
    /// Only evaluated at `n = 2g - 1` for even `k`.
    pub rough_estimate: Option<RoughEstimate>,
}

/// The unknot has no jumps and no slope range here; it is rejected.
pub fn analyze(knot: &Knot, n: u64) -> Result<SurgeryAnalysis> {
    knot.jump_vector().ok_or(Error::DegenerateSequence)?;
    let table = d_table::<ExactRational>(knot.profile(), n)?;
    let verdict = classify(&table);
    let rough_estimate = if n == knot.min_slope() { knot.rough_estimate() } else { None };
    Ok(SurgeryAnalysis { slope: n, table, verdict, quick_bound: quick_bound(knot.genus(), n), rough_estimate })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub slope: u64,
    pub square_free: bool,
    pub quick_bound: bool,
    /// The quick bound already forces a weak value; no table was built.
    pub screened: bool,
    pub conclusion: Conclusion,
    pub max_d: Option<ExactRational>,
    pub weak_labels: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub low: u64,
    pub high: u64,
    pub rows: Vec<ScanRow>,
    pub interval: Option<SlopeInterval>,
}

fn scan_row(knot: &Knot, n: u64) -> Result<ScanRow> {
    let square_free = is_square_free(n);
    let quick = quick_bound(knot.genus(), n);
    if !quick {
        let conclusion = if square_free { Conclusion::Inconclusive } else { Conclusion::NotApplicable };
        return Ok(ScanRow {
            slope: n,
            square_free,
            quick_bound: quick,
            screened: true,
            conclusion,
            max_d: None,
            weak_labels: None,
        });
    }
    let verdict = classify(&d_table::<ExactRational>(knot.profile(), n)?);
    Ok(ScanRow {
        slope: n,
        square_free,
        quick_bound: quick,
        screened: false,
        conclusion: verdict.conclusion,
        max_d: Some(verdict.max_d),
        weak_labels: Some(verdict.weak_labels.len()),
    })
}

/// Verdicts for every integral slope in `2g-1..=max` and the resulting
/// rational non-fillable interval.
pub fn scan(knot: &Knot, max: u64) -> Result<ScanReport> {
    knot.jump_vector().ok_or(Error::DegenerateSequence)?;
    let low = knot.min_slope();
    if max < low {
        return Err(Error::SlopeTooSmall { slope: max, min: low });
    }
    let rows: Vec<ScanRow> = (low..=max).into_par_iter().map(|n| scan_row(knot, n)).collect::<Result<_>>()?;
    let interval = rows
        .iter()
        .rev()
        .find(|row| row.conclusion == Conclusion::Obstructed)
        .map(|row| SlopeInterval::closed(low as i64, row.slope as i64));
    debug_assert_eq!(interval, rational_nonfillable_interval(knot.profile(), max).ok().flatten());
    Ok(ScanReport { low, high: max, rows, interval })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pretzel() -> Knot {
        Knot::from_jump_vector("P(-2,3,11)", &JumpVector::new(vec![1, 1, 1, 1, 1, 2]).unwrap()).unwrap()
    }

    #[test]
    fn knot_basics() {
        let k = pretzel();
        assert_eq!(k.genus(), 7);
        assert_eq!(k.k(), 6);
        assert!(k.is_admissible());
        assert_eq!(k.profile().values(), &[3, 3, 2, 2, 1, 1, 1, 0]);
        assert_eq!(k.polynomial().name(), Some("P(-2,3,11)"));
    }

    #[test]
    fn unknot_and_odd_k() {
        let u = Knot::from_polynomial("unknot", AlexanderPolynomial::one()).unwrap();
        assert_eq!(u.jump_vector(), None);
        assert_eq!(u.profile().values(), &[0]);
        assert!(u.interval_data().is_err());
        assert_eq!(analyze(&u, 1).unwrap_err(), Error::DegenerateSequence);
        assert_eq!(scan(&u, 5).unwrap_err(), Error::DegenerateSequence);
        let trefoil = Knot::from_jump_vector("T(2,3)", &JumpVector::new(vec![1]).unwrap()).unwrap();
        assert_eq!(trefoil.profile().values(), &[1, 0]);
        assert!(matches!(trefoil.interval_data(), Err(Error::UnsupportedParity { k: 1 })));
        assert_eq!(trefoil.rough_estimate(), None);
        let a = analyze(&trefoil, 1).unwrap();
        assert_eq!(a.verdict.conclusion, Conclusion::Obstructed);
        assert_eq!(a.verdict.max_d, ExactRational::from_integer(-2));
    }

    #[test]
    fn inadmissible_vectors_still_run() {
        let k = Knot::from_jump_vector("bad", &JumpVector::new(vec![1, 3, 1, 1]).unwrap()).unwrap();
        assert!(!k.is_admissible());
        assert!(k.krcatovich_violations().contains(&2));
        assert!(analyze(&k, k.min_slope()).is_ok());
    }

    #[test]
    fn analyze_pretzel() {
        let k = pretzel();
        let a = analyze(&k, 13).unwrap();
        assert_eq!(a.verdict.conclusion, Conclusion::Obstructed);
        assert!(a.rough_estimate.unwrap().holds);
        assert_eq!(analyze(&k, 12).unwrap_err(), Error::SlopeTooSmall { slope: 12, min: 13 });
        assert_eq!(analyze(&k, 14).unwrap().verdict.conclusion, Conclusion::Obstructed);
        assert_eq!(analyze(&k, 18).unwrap().verdict.conclusion, Conclusion::NotApplicable);
        assert_eq!(analyze(&k, 14).unwrap().rough_estimate, None);
    }

    #[test]
    fn scan_pretzel() {
        let k = pretzel();
        let report = scan(&k, 20).unwrap();
        assert_eq!(report.rows.len(), 8);
        let expected = rational_nonfillable_interval(k.profile(), 20).unwrap();
        assert_eq!(report.interval, expected);
        for row in &report.rows {
            let full = analyze(&k, row.slope).unwrap().verdict;
            assert_eq!(row.conclusion, full.conclusion, "slope {}", row.slope);
        }
        assert!(scan(&k, 12).is_err());
    }
}
