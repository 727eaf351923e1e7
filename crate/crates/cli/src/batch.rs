//! Census batch runs: one JSON line per input row, in input order.

use std::io::Write;

use lsobstruct_core::knot::scan;
use lsobstruct_core::knotio::CensusRow;
use lsobstruct_core::report::ScanRecord;
use lsobstruct_core::Conclusion;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    Ok,
    Invalid,
}

#[derive(Debug, Serialize)]
pub struct BatchRecord {
    pub line: u64,
    pub name: String,
    pub status: RowStatus,
    pub error: Option<String>,
    pub result: Option<ScanRecord>,
    /// Verdict at `2g - 1`, repeated from `result` for quick filtering.
    pub primary: Option<Conclusion>,
}

fn run_row(row: &CensusRow, delta: u64) -> BatchRecord {
    let outcome = row.knot.as_ref().map_err(|e| e.clone()).and_then(|knot| {
        let report = scan(knot, knot.min_slope().saturating_add(delta))?;
        Ok((ScanRecord::new(knot, &report), report.rows.first().map(|r| r.conclusion)))
    });
    match outcome {
        Ok((result, primary)) => BatchRecord {
            line: row.line,
            name: row.name.clone(),
            status: RowStatus::Ok,
            error: None,
            result: Some(result),
            primary,
        },
        Err(e) => BatchRecord {
            line: row.line,
            name: row.name.clone(),
            status: RowStatus::Invalid,
            error: Some(e.to_string()),
            result: None,
            primary: None,
        },
    }
}

pub fn run(rows: &[CensusRow], delta: u64) -> Vec<BatchRecord> {
    rows.par_iter().map(|row| run_row(row, delta)).collect()
}

pub fn write_jsonl(records: &[BatchRecord], mut out: impl Write) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn summary(records: &[BatchRecord]) -> String {
    let ok = records.iter().filter(|r| r.status == RowStatus::Ok).count();
    let count = |c: Conclusion| records.iter().filter(|r| r.primary == Some(c)).count();
    format!(
        "batch: {} rows, {ok} ok, {} invalid; at 2g-1: {} OBSTRUCTED, {} INCONCLUSIVE, {} NOT_APPLICABLE",
        records.len(),
        records.len() - ok,
        count(Conclusion::Obstructed),
        count(Conclusion::Inconclusive),
        count(Conclusion::NotApplicable),
    )
}
