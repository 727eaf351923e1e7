//! Human tables and CSV for the single-knot commands. Tables show exact
//! fractions with a 4-place decimal marked "approx"; CSV carries fractions
//! only.

use std::fmt::Write;

use lsobstruct_core::knot::{ScanReport, SurgeryAnalysis};
use lsobstruct_core::{ExactRational, Knot, Scalar};

fn approx(q: &ExactRational) -> String {
    format!("{:.4}", q.approx())
}

fn with_approx(q: &ExactRational) -> String {
    format!("{q} (approx {})", approx(q))
}

fn jumps(knot: &Knot) -> String {
    match knot.jump_vector() {
        Some(r) => format!("({})", r.as_slice().iter().map(u64::to_string).collect::<Vec<_>>().join(", ")),
        None => "()".into(),
    }
}

fn knot_header(out: &mut String, knot: &Knot) {
    writeln!(out, "knot        {}", knot.name()).unwrap();
    writeln!(out, "genus       {}", knot.genus()).unwrap();
    writeln!(out, "r           {}", jumps(knot)).unwrap();
    if !knot.is_admissible() {
        let v: Vec<_> = knot.krcatovich_violations().iter().map(usize::to_string).collect();
        writeln!(out, "admissible  no (Krcatovich fails at j = {})", v.join(", ")).unwrap();
    }
    let t: Vec<_> = knot.profile().values().iter().map(u64::to_string).collect();
    writeln!(out, "torsion     {}", t.join(" ")).unwrap();
}

pub fn analysis_table(knot: &Knot, a: &SurgeryAnalysis) -> String {
    let mut out = String::new();
    knot_header(&mut out, knot);
    let v = &a.verdict;
    let sf = if v.square_free { "square-free" } else { "not square-free" };
    writeln!(out, "slope       {} ({sf})", a.slope).unwrap();
    writeln!(out, "threshold   {}", with_approx(&v.threshold)).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "{:>6}  {:>14}  {:>10}  branch", "i", "d", "approx").unwrap();
    for e in &a.table.entries {
        let weak = if v.weak_labels.contains(&e.label) { "  weak" } else { "" };
        writeln!(
            out,
            "{:>6}  {:>14}  {:>10}  {}{weak}",
            e.label,
            e.value.to_string(),
            approx(&e.value),
            e.branch.as_str()
        )
        .unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "max d       {}", with_approx(&v.max_d)).unwrap();
    writeln!(out, "quick bound {}", if a.quick_bound { "passes" } else { "fails" }).unwrap();
    if let Some(est) = &a.rough_estimate {
        let holds = if est.holds { "holds" } else { "fails" };
        writeln!(out, "rough est.  {holds} (i_min = {}, ratio {})", est.i_min, est.ratio).unwrap();
    }
    writeln!(out, "verdict     {}", v.conclusion).unwrap();
    out
}

pub fn analysis_csv(a: &SurgeryAnalysis) -> String {
    let mut out = String::from("slope,i,numerator,denominator,branch,weak,conclusion\n");
    for e in &a.table.entries {
        let weak = a.verdict.weak_labels.contains(&e.label);
        writeln!(
            out,
            "{},{},{},{},{},{weak},{}",
            a.slope,
            e.label,
            e.value.numer(),
            e.value.denom(),
            e.branch.as_str(),
            a.verdict.conclusion
        )
        .unwrap();
    }
    out
}

pub fn scan_table(knot: &Knot, s: &ScanReport) -> String {
    let mut out = String::new();
    knot_header(&mut out, knot);
    writeln!(out, "slopes      {}..={}", s.low, s.high).unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:>8}  {:>11}  {:>11}  {:>16}  {:>10}  conclusion",
        "slope", "square-free", "quick bound", "max d", "approx"
    )
    .unwrap();
    for row in &s.rows {
        let (max_d, approx_d) = match &row.max_d {
            Some(d) => (d.to_string(), approx(d)),
            None => ("screened".into(), "-".into()),
        };
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(
            out,
            "{:>8}  {:>11}  {:>11}  {:>16}  {:>10}  {}",
            row.slope,
            yes_no(row.square_free),
            if row.quick_bound { "pass" } else { "fail" },
            max_d,
            approx_d,
            row.conclusion
        )
        .unwrap();
    }
    writeln!(out).unwrap();
    match &s.interval {
        Some(i) => writeln!(out, "no weak fillings for rational slopes in {i}").unwrap(),
        None => writeln!(out, "no obstructed slope in {}..={}", s.low, s.high).unwrap(),
    }
    out
}

pub fn validate_table(knot: &Knot) -> String {
    let mut out = String::new();
    knot_header(&mut out, knot);
    writeln!(out, "k           {}", knot.k()).unwrap();
    writeln!(out, "min slope   {}", knot.min_slope()).unwrap();
    let status =
        if knot.is_admissible() { "valid L-space knot polynomial" } else { "L-space form, inadmissible jump vector" };
    writeln!(out, "status      {status}").unwrap();
    out
}

pub fn validate_csv(knot: &Knot) -> String {
    let r: Vec<_> = knot.jump_vector().map(|r| r.as_slice().iter().map(u64::to_string).collect()).unwrap_or_default();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "genus", "k", "r", "admissible"]).unwrap();
    w.write_record([
        knot.name().to_string(),
        knot.genus().to_string(),
        knot.k().to_string(),
        r.join(";"),
        knot.is_admissible().to_string(),
    ])
    .unwrap();
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("UTF-8 fields")
}
