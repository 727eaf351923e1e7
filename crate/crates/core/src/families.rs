//! Built-in knots and the slope report for the `K_n` family.
//!
//! `K_n` is the closure of the 4-braid `[(2,1,3,2)^(2n+1), -1, 2, 1, 1, 2]`,
//! a hyperbolic L-space knot of genus `4n + 2` with Alexander polynomial
//! `1 + sum_{k=0}^n (t^(4k+2) + t^-(4k+2)) - sum_{j=0}^n (t^(4j+1) + t^-(4j+1))`.

use std::fmt;

use serde::Serialize;

use crate::alexpoly::AlexanderPolynomial;
use crate::error::{Error, Result};
use crate::knot::Knot;
use crate::knotio::parse_knot_json;
use crate::obstruction::{is_square_free, verdict_at, Conclusion, SlopeInterval};

/// Bundled knot JSON for the pretzel knot `P(-2,3,11)`.
pub const PRETZEL_P_2_3_11_JSON: &str = include_str!("../fixtures/p-2-3-11.json");

pub fn pretzel_p_2_3_11() -> Knot {
    parse_knot_json(PRETZEL_P_2_3_11_JSON).expect("bundled fixture is valid")
}

/// The torus knot `T(2, 2q+1)`, with `Delta = sum_{i=0}^{2q} (-1)^i t^(q-i)`.
pub fn torus_2(q: u64) -> Result<Knot> {
    if q == 0 {
        return Err(Error::InvalidFamilyIndex);
    }
    let q = q as i64;
    let poly = AlexanderPolynomial::new((0..=2 * q).map(|i| (q - i, if i % 2 == 0 { 1 } else { -1 })));
    Knot::from_polynomial(format!("T(2,{})", 2 * q + 1), poly)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnFamilyMember {
    pub index: u64,
    pub knot: Knot,
    /// Braid group generators on 4 strands; a negative entry is an inverse.
    pub braid_word: Vec<i64>,
    pub genus: u64,
    /// Thurston-Bennequin number of a Legendrian representative.
    pub tb: i64,
    pub rot_abs: u64,
}

pub fn kn_alexander(n: u64) -> AlexanderPolynomial {
    let n = n as i64;
    let mut terms = vec![(0, 1)];
    for k in 0..=n {
        terms.extend([(4 * k + 2, 1), (-4 * k - 2, 1)]);
    }
    for j in 0..=n {
        terms.extend([(4 * j + 1, -1), (-4 * j - 1, -1)]);
    }
    AlexanderPolynomial::new(terms)
}

pub fn kn_braid_word(n: u64) -> Vec<i64> {
    let mut word: Vec<i64> = (0..2 * n + 1).flat_map(|_| [2, 1, 3, 2]).collect();
    word.extend([-1, 2, 1, 1, 2]);
    word
}

pub fn kn_knot(n: u64) -> Result<KnFamilyMember> {
    if n == 0 {
        return Err(Error::InvalidFamilyIndex);
    }
    let knot = Knot::from_polynomial(format!("K_{n}"), kn_alexander(n))?;
    Ok(KnFamilyMember {
        index: n,
        genus: knot.genus(),
        knot,
        braid_word: kn_braid_word(n),
        tb: 8 * n as i64 + 1,
        rot_abs: 2,
    })
}

/// `t_j(K_n) = n - floor((j+2)/4) + 1` for `j <= 4n + 2`, zero beyond.
pub fn kn_torsion_closed_form(n: u64, j: u64) -> u64 {
    if j > 4 * n + 2 {
        0
    } else {
        n + 1 - (j + 2) / 4
    }
}

/// Slopes `p/q` outside `[2g_s - |rot| - 1, 2g_s - 1]` carry a tight contact
/// structure, given a Legendrian representative with
/// `tb + |rot| = 2g_s - 1`.
pub fn tight_excluded_interval(slice_genus: u64, tb: i64, rot_abs: u64) -> Result<SlopeInterval> {
    if slice_genus == 0 {
        return Err(Error::InvalidLegendrian("slice genus must be positive".into()));
    }
    let top = 2 * slice_genus as i64 - 1;
    if tb + rot_abs as i64 != top {
        return Err(Error::InvalidLegendrian(format!("tb + |rot| = {} but 2g_s - 1 = {top}", tb + rot_abs as i64)));
    }
    Ok(SlopeInterval::closed(top - rot_abs as i64, top))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SlopeTag {
    /// Tight contact structures exist, none weakly fillable.
    TightNonfillable,
    /// No weakly fillable structure; existence of tight ones is open.
    NonfillableTightUnknown,
    /// Tight structures exist; fillability is not decided here.
    TightFillabilityUnknown,
}

impl fmt::Display for SlopeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TightNonfillable => "TIGHT_NONFILLABLE",
            Self::NonfillableTightUnknown => "NONFILLABLE_TIGHT_UNKNOWN",
            Self::TightFillabilityUnknown => "TIGHT_FILLABILITY_UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub slope: u64,
    pub square_free: bool,
    pub conclusion: Conclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReportStatus {
    Complete,
    /// Neither `8n+3` nor `8n+5` gives an obstructed square-free slope.
    NoSquareFreeCandidate,
}

pub const HYPERBOLICITY_DISCLAIMER: &str =
    "surgeries are hyperbolic except for finitely many exceptional slopes, which are not identified";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeReport {
    pub index: u64,
    pub genus: u64,
    pub tight_excluded: SlopeInterval,
    pub candidates: Vec<Candidate>,
    pub m: Option<u64>,
    pub nonfillable: Option<SlopeInterval>,
    /// Disjoint labelled pieces; `[8n+1, 8n+3)` is left untagged since
    /// neither tightness nor fillability is known there.
    pub classification: Vec<(SlopeInterval, SlopeTag)>,
    pub status: ReportStatus,
    pub disclaimer: &'static str,
}

impl SlopeReport {
    pub fn tag_of(&self, q: &crate::ExactRational) -> Option<SlopeTag> {
        self.classification.iter().find(|(i, _)| i.contains(q)).map(|(_, t)| *t)
    }
}

pub fn kn_slope_classification(n: u64) -> Result<SlopeReport> {
    let member = kn_knot(n)?;
    let tight_excluded = tight_excluded_interval(member.genus, member.tb, member.rot_abs)?;
    let low = member.knot.min_slope();
    debug_assert_eq!(low, 8 * n + 3);

    let mut candidates = Vec::new();
    for slope in [8 * n + 5, 8 * n + 3] {
        let square_free = is_square_free(slope);
        let conclusion = verdict_at(member.knot.profile(), slope)?.conclusion;
        candidates.push(Candidate { slope, square_free, conclusion });
    }
    let m = candidates.iter().find(|c| c.conclusion == Conclusion::Obstructed).map(|c| c.slope);
    let nonfillable = m.map(|m| SlopeInterval::closed(low as i64, m as i64));

    let (excl_low, excl_high) = (8 * n as i64 + 1, 8 * n as i64 + 3);
    let mut classification = vec![(SlopeInterval::below(excl_low), SlopeTag::TightFillabilityUnknown)];
    let status = match m {
        Some(m) => {
            classification.push((SlopeInterval::closed(excl_high, excl_high), SlopeTag::NonfillableTightUnknown));
            if m as i64 > excl_high {
                classification.push((SlopeInterval::left_open(excl_high, m as i64), SlopeTag::TightNonfillable));
            }
            classification.push((SlopeInterval::above(m as i64), SlopeTag::TightFillabilityUnknown));
            ReportStatus::Complete
        }
        None => {
            classification.push((SlopeInterval::above(excl_high), SlopeTag::TightFillabilityUnknown));
            ReportStatus::NoSquareFreeCandidate
        }
    };

    Ok(SlopeReport {
        index: n,
        genus: member.genus,
        tight_excluded,
        candidates,
        m,
        nonfillable,
        classification,
        status,
        disclaimer: HYPERBOLICITY_DISCLAIMER,
    })
}
