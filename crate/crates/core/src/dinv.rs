//! d-invariants of integral surgeries on L-space knots.
//!
//! For `n >= 2g - 1` and `|i| <= n/2`,
//! `d(K(n), i) = (n - 2|i|)^2 / (4n) - 1/4 - 2 t_i(K)`, where the first two
//! terms are the d-invariant of the same surgery on the unknot.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::torsion::TorsionProfile;
use crate::ExactRational;

/// Largest slope the `i64` intermediate arithmetic supports.
pub const MAX_SLOPE: u64 = 1 << 30;

fn check_slope(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSlope);
    }
    if n > MAX_SLOPE {
        return Err(Error::SlopeTooLarge { slope: n, max: MAX_SLOPE });
    }
    Ok(())
}

fn check_label(n: u64, i: u64) -> Result<()> {
    if i > n / 2 {
        return Err(Error::LabelOutOfRange { label: i, slope: n, max: n / 2 });
    }
    Ok(())
}

/// Smallest slope the surgery formula covers, `2g - 1` (or 1 for the unknot).
pub fn min_slope(genus: u64) -> u64 {
    (2 * genus).saturating_sub(1).max(1)
}

/// `d(K(n), i)` as a single fraction with denominator `4n`.
fn d_value<T: Scalar>(n: u64, i: u64, torsion: u64) -> T {
    let (n, i, t) = (n as i64, i as i64, torsion as i64);
    let num = (n - 2 * i).pow(2) - n - 8 * n * t;
    T::ratio(num, 4 * n)
}

/// `d(U(n), i) = (n - 2i)^2 / (4n) - 1/4`.
pub fn unknot_d<T: Scalar>(n: u64, i: u64) -> Result<T> {
    check_slope(n)?;
    check_label(n, i)?;
    Ok(d_value(n, i, 0))
}

pub fn surgery_d<T: Scalar>(t: &TorsionProfile, n: u64, i: u64) -> Result<T> {
    check_slope(n)?;
    let min = min_slope(t.genus());
    if n < min {
        return Err(Error::SlopeTooSmall { slope: n, min });
    }
    check_label(n, i)?;
    Ok(d_value(n, i, t.get(i)))
}

/// Which closed form produced a table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Labels below the genus, where the torsion term contributes.
    Torsion,
    /// Labels at or above the genus, equal to the unknot value.
    Unknot,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Torsion => "torsion",
            Self::Unknot => "unknot",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DEntry<T> {
    pub label: u64,
    pub value: T,
    pub branch: Branch,
}

/// d-invariants of `K(n)` for labels `0..=floor(n/2)`.
///
/// `d` depends only on `|i|`, so each stored label stands for the orbit
/// `{i, -i}`; when `n` is even `n/2` and `-n/2` name the same structure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DInvariantTable<T = ExactRational> {
    pub slope: u64,
    pub genus: u64,
    pub entries: Vec<DEntry<T>>,
}

impl<T> DInvariantTable<T> {
    /// Number of Spin^c structures on `K(n)`, which is `n`.
    pub fn structure_count(&self) -> u64 {
        self.slope
    }

    pub fn get(&self, label: u64) -> Option<&T> {
        self.entries.get(label as usize).map(|e| &e.value)
    }

    pub fn values(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| &e.value)
    }
}

/// Tabulates both branches: labels `< g` carry the torsion term, labels
/// `g..=g + floor((m - 1)/2)` with `n = 2g + (m - 1)` are pure unknot values.
pub fn d_table<T: Scalar>(t: &TorsionProfile, n: u64) -> Result<DInvariantTable<T>> {
    check_slope(n)?;
    let g = t.genus();
    let min = min_slope(g);
    if n < min {
        return Err(Error::SlopeTooSmall { slope: n, min });
    }
    let table_end = n / 2;
    // m = n - 2g + 1 >= 0; the second branch is empty when m = 0.
    let m = (n + 1) as i64 - 2 * g as i64;
    if m >= 1 {
        let branch_end = g + ((m - 1) / 2) as u64;
        if branch_end != table_end {
            return Err(Error::BranchRangeMismatch { branch_end, table_end });
        }
    } else if g > 0 && table_end + 1 != g {
        return Err(Error::BranchRangeMismatch { branch_end: g - 1, table_end });
    }

    let entries = (0..=table_end)
        .map(|i| {
            if i < g {
                DEntry { label: i, value: d_value(n, i, t.get(i)), branch: Branch::Torsion }
            } else {
                DEntry { label: i, value: d_value(n, i, 0), branch: Branch::Unknot }
            }
        })
        .collect();
    Ok(DInvariantTable { slope: n, genus: g, entries })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::Ratio;

    use super::*;
    use crate::alexpoly::AlexanderPolynomial;

    fn q(n: i64, d: i64) -> ExactRational {
        Ratio::new(n, d)
    }

    fn pretzel_profile() -> TorsionProfile {
        TorsionProfile::from_values(vec![3, 3, 2, 2, 1, 1, 1, 0])
    }

    fn k1_profile() -> TorsionProfile {
        TorsionProfile::from_values(vec![2, 2, 1, 1, 1, 1, 0])
    }

    #[test]
    fn unknot_values() {
        assert_eq!(unknot_d::<ExactRational>(1, 0).unwrap(), q(0, 1));
        assert_eq!(unknot_d::<ExactRational>(13, 0).unwrap(), q(3, 1));
        assert_eq!(unknot_d::<ExactRational>(13, 6).unwrap(), q(-3, 13));
        assert!(matches!(unknot_d::<ExactRational>(13, 7), Err(Error::LabelOutOfRange { .. })));
        assert_eq!(unknot_d::<ExactRational>(0, 0), Err(Error::InvalidSlope));
    }

    #[test]
    fn surgery_values() {
        let p = pretzel_profile();
        assert_eq!(surgery_d::<ExactRational>(&p, 13, 0).unwrap(), q(-3, 1));
        assert_eq!(surgery_d::<ExactRational>(&p, 13, 4).unwrap(), q(-23, 13));
        assert_eq!(surgery_d::<ExactRational>(&k1_profile(), 11, 0).unwrap(), q(-3, 2));
        assert_eq!(surgery_d::<ExactRational>(&p, 12, 0), Err(Error::SlopeTooSmall { slope: 12, min: 13 }));
    }

    #[test]
    fn pretzel_table() {
        let t = d_table::<ExactRational>(&pretzel_profile(), 13).unwrap();
        let expected = [q(-3, 1), q(-51, 13), q(-35, 13), q(-43, 13), q(-23, 13), q(-27, 13), q(-29, 13)];
        assert_eq!(t.values().cloned().collect::<Vec<_>>(), expected);
        assert_eq!(t.values().max().unwrap(), &q(-23, 13));
        assert_eq!(t.structure_count(), 13);
        assert!(t.entries.iter().all(|e| e.branch == Branch::Torsion));
    }

    #[test]
    fn k1_table_second_branch() {
        let t = d_table::<ExactRational>(&k1_profile(), 13).unwrap();
        assert_eq!(t.entries.len(), 7);
        assert_eq!(t.entries[6].branch, Branch::Unknot);
        assert_eq!(t.entries[6].value, q(-3, 13));
        let t = d_table::<ExactRational>(&k1_profile(), 11).unwrap();
        assert!(t.entries.iter().all(|e| e.branch == Branch::Torsion));
    }

    #[test]
    fn other_scalars_agree() {
        let p = pretzel_profile();
        for n in 13..40 {
            let exact = d_table::<ExactRational>(&p, n).unwrap();
            let wide = d_table::<Ratio<i128>>(&p, n).unwrap();
            let big = d_table::<Ratio<BigInt>>(&p, n).unwrap();
            let float = d_table::<f64>(&p, n).unwrap();
            for (((e, w), b), f) in exact.values().zip(wide.values()).zip(big.values()).zip(float.values()) {
                assert_eq!((*e.numer() as i128, *e.denom() as i128), (*w.numer(), *w.denom()));
                assert_eq!(Ratio::new(BigInt::from(*e.numer()), BigInt::from(*e.denom())), *b);
                assert!((e.approx() - f).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn unknot_profile_uses_slope_one() {
        let p = TorsionProfile::from_polynomial(&AlexanderPolynomial::one());
        let t = d_table::<ExactRational>(&p, 1).unwrap();
        assert_eq!(t.values().cloned().collect::<Vec<_>>(), [q(0, 1)]);
    }

    #[test]
    fn even_slope_labels() {
        let t = d_table::<ExactRational>(&pretzel_profile(), 14).unwrap();
        assert_eq!(t.entries.len(), 8);
        assert_eq!(t.structure_count(), 14);
        assert_eq!(t.entries[7].value, q(-1, 4));
    }
}
