//! Machine-readable output: CSV plot data and JSON records.
//!
//! Fractions are always emitted reduced as `[numerator, denominator]`
//! (JSON) or two columns (CSV). Nothing here formats a float.

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::dinv::{Branch, DInvariantTable};
use crate::families::{Candidate, ReportStatus, SlopeReport, SlopeTag};
use crate::knot::{Knot, ScanReport, ScanRow, SurgeryAnalysis};
use crate::obstruction::{Conclusion, RoughEstimate, SlopeInterval, Verdict};
use crate::torsion::TorsionProfile;
use crate::ExactRational;

/// Serializes as `[num, den]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac(pub ExactRational);

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(self.0.numer())?;
        t.serialize_element(self.0.denom())?;
        t.end()
    }
}

pub fn torsion_csv(profile: &TorsionProfile) -> String {
    let mut out = String::from("j,t_j\n");
    for (j, t) in profile.values().iter().enumerate() {
        out.push_str(&format!("{j},{t}\n"));
    }
    out
}

pub fn dinv_csv(table: &DInvariantTable) -> String {
    let mut out = String::from("i,numerator,denominator,branch\n");
    for e in &table.entries {
        out.push_str(&format!("{},{},{},{}\n", e.label, e.value.numer(), e.value.denom(), e.branch.as_str()));
    }
    out
}

/// The line `h(j) = slope * j + intercept` lying under the torsion profile.
pub fn bound_csv(estimate: &RoughEstimate, genus: u64) -> String {
    let (s, c) = (estimate.line_slope(), estimate.line_intercept(genus));
    format!(
        "slope_numerator,slope_denominator,intercept_numerator,intercept_denominator\n{},{},{},{}\n",
        s.numer(),
        s.denom(),
        c.numer(),
        c.denom()
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalRecord {
    pub low: Option<Frac>,
    pub high: Option<Frac>,
    pub low_closed: bool,
    pub high_closed: bool,
    pub display: String,
}

impl From<&SlopeInterval> for IntervalRecord {
    fn from(i: &SlopeInterval) -> Self {
        Self {
            low: i.low.map(Frac),
            high: i.high.map(Frac),
            low_closed: i.low_closed,
            high_closed: i.high_closed,
            display: i.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotSummary {
    pub name: String,
    pub genus: u64,
    pub k: usize,
    pub r: Vec<u64>,
    pub admissible: bool,
    pub krcatovich_violations: Vec<usize>,
    /// Set when the jump vector fails the Krcatovich inequality.
    pub inadmissible_r: bool,
}

impl From<&Knot> for KnotSummary {
    fn from(k: &Knot) -> Self {
        Self {
            name: k.name().to_string(),
            genus: k.genus(),
            k: k.k(),
            r: k.jump_vector().map(|r| r.as_slice().to_vec()).unwrap_or_default(),
            admissible: k.is_admissible(),
            krcatovich_violations: k.krcatovich_violations().to_vec(),
            inadmissible_r: !k.is_admissible(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryRecord {
    pub i: u64,
    pub d: Frac,
    pub branch: Branch,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRecord {
    pub slope: u64,
    pub genus: u64,
    pub structures: u64,
    pub entries: Vec<EntryRecord>,
}

impl From<&DInvariantTable> for TableRecord {
    fn from(t: &DInvariantTable) -> Self {
        Self {
            slope: t.slope,
            genus: t.genus,
            structures: t.structure_count(),
            entries: t.entries.iter().map(|e| EntryRecord { i: e.label, d: Frac(e.value), branch: e.branch }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictRecord {
    pub slope: u64,
    pub square_free: bool,
    pub threshold: Frac,
    pub max_d: Frac,
    pub all_negative: bool,
    pub weak_labels: Vec<u64>,
    pub conclusion: Conclusion,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        Self {
            slope: v.slope,
            square_free: v.square_free,
            threshold: Frac(v.threshold),
            max_d: Frac(v.max_d),
            all_negative: v.all_negative(),
            weak_labels: v.weak_labels.clone(),
            conclusion: v.conclusion,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RoughEstimateRecord {
    pub i_min: usize,
    pub ratio: Frac,
    pub holds: bool,
}

impl From<&RoughEstimate> for RoughEstimateRecord {
    fn from(e: &RoughEstimate) -> Self {
        Self { i_min: e.i_min, ratio: Frac(e.ratio), holds: e.holds }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisRecord {
    pub knot: KnotSummary,
    pub torsion: Vec<u64>,
    pub table: TableRecord,
    pub verdict: VerdictRecord,
    pub quick_bound: bool,
    pub rough_estimate: Option<RoughEstimateRecord>,
}

impl AnalysisRecord {
    pub fn new(knot: &Knot, a: &SurgeryAnalysis) -> Self {
        Self {
            knot: knot.into(),
            torsion: knot.profile().values().to_vec(),
            table: (&a.table).into(),
            verdict: (&a.verdict).into(),
            quick_bound: a.quick_bound,
            rough_estimate: a.rough_estimate.as_ref().map(Into::into),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRowRecord {
    pub slope: u64,
    pub square_free: bool,
    pub quick_bound: bool,
    pub screened: bool,
    pub conclusion: Conclusion,
    pub max_d: Option<Frac>,
    pub weak_labels: Option<usize>,
}

impl From<&ScanRow> for ScanRowRecord {
    fn from(r: &ScanRow) -> Self {
        Self {
            slope: r.slope,
            square_free: r.square_free,
            quick_bound: r.quick_bound,
            screened: r.screened,
            conclusion: r.conclusion,
            max_d: r.max_d.map(Frac),
            weak_labels: r.weak_labels,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub knot: KnotSummary,
    pub low: u64,
    pub high: u64,
    pub rows: Vec<ScanRowRecord>,
    pub nonfillable: Option<IntervalRecord>,
}

impl ScanRecord {
    pub fn new(knot: &Knot, s: &ScanReport) -> Self {
        Self {
            knot: knot.into(),
            low: s.low,
            high: s.high,
            rows: s.rows.iter().map(Into::into).collect(),
            nonfillable: s.interval.as_ref().map(Into::into),
        }
    }
}

pub fn scan_csv(s: &ScanReport) -> String {
    let mut out = String::from("slope,square_free,quick_bound,screened,conclusion,max_d_numerator,max_d_denominator\n");
    for r in &s.rows {
        let (num, den) =
            r.max_d.map_or((String::new(), String::new()), |d| (d.numer().to_string(), d.denom().to_string()));
        out.push_str(&format!(
            "{},{},{},{},{},{num},{den}\n",
            r.slope, r.square_free, r.quick_bound, r.screened, r.conclusion
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct TaggedInterval {
    pub interval: IntervalRecord,
    pub tag: SlopeTag,
}

#[derive(Debug, Clone, Serialize)]
pub struct SlopeReportRecord {
    pub index: u64,
    pub genus: u64,
    pub tight_excluded: IntervalRecord,
    pub candidates: Vec<Candidate>,
    pub m: Option<u64>,
    pub nonfillable: Option<IntervalRecord>,
    pub classification: Vec<TaggedInterval>,
    pub status: ReportStatus,
    pub disclaimer: &'static str,
}

impl From<&SlopeReport> for SlopeReportRecord {
    fn from(r: &SlopeReport) -> Self {
        Self {
            index: r.index,
            genus: r.genus,
            tight_excluded: (&r.tight_excluded).into(),
            candidates: r.candidates.clone(),
            m: r.m,
            nonfillable: r.nonfillable.as_ref().map(Into::into),
            classification: r
                .classification
                .iter()
                .map(|(i, tag)| TaggedInterval { interval: i.into(), tag: *tag })
                .collect(),
            status: r.status,
            disclaimer: r.disclaimer,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dinv::d_table;
    use crate::families::pretzel_p_2_3_11;

    #[test]
    fn pretzel_csvs() {
        let k = pretzel_p_2_3_11();
        assert_eq!(torsion_csv(k.profile()), "j,t_j\n0,3\n1,3\n2,2\n3,2\n4,1\n5,1\n6,1\n7,0\n");
        let table = d_table(k.profile(), 13).unwrap();
        let csv = dinv_csv(&table);
        assert!(csv.starts_with("i,numerator,denominator,branch\n0,-3,1,torsion\n"));
        assert!(csv.contains("4,-23,13,torsion\n"));
        let est = k.rough_estimate().unwrap();
        assert_eq!(
            bound_csv(&est, k.genus()),
            "slope_numerator,slope_denominator,intercept_numerator,intercept_denominator\n-1,3,7,3\n"
        );
    }

    #[test]
    fn fractions_as_pairs() {
        let json = serde_json::to_string(&Frac(ExactRational::new(-12, 52))).unwrap();
        assert_eq!(json, "[-3,13]");
        let rec = IntervalRecord::from(&SlopeInterval::above(13));
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"low":[13,1],"high":null,"low_closed":false,"high_closed":false,"display":"(13, inf)"}"#
        );
    }
}
