//! `lsobstruct`: decide whether the d-invariant bound rules out weak
//! symplectic fillings of integral surgeries on an L-space knot.
//!
//! Exit status: 0 OBSTRUCTED, 10 INCONCLUSIVE, 11 NOT_APPLICABLE for
//! `analyze`; `scan` exits 0 when some slope is obstructed and 10 otherwise.
//! Failures use sysexits codes: 64 usage, 65 invalid data, 66 unreadable
//! input, 73 unwritable output.

mod batch;
mod error;
mod render;
mod source;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lsobstruct_core::dinv::d_table;
use lsobstruct_core::families::{kn_knot, kn_slope_classification};
use lsobstruct_core::knot::{analyze, scan};
use lsobstruct_core::knotio::{knot_json, read_census};
use lsobstruct_core::obstruction::is_square_free;
use lsobstruct_core::report::{
    bound_csv, dinv_csv, scan_csv, torsion_csv, AnalysisRecord, KnotSummary, ScanRecord, SlopeReportRecord,
};
use lsobstruct_core::{Conclusion, ExactRational, Knot};
use serde::Serialize;

use crate::error::{CliError, EX_USAGE};
use crate::source::{family_knot, Family, KnotSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "lsobstruct", version, about = "Exact d-invariant obstructions for surgeries on L-space knots")]
struct Cli {
    /// Output format; machine formats carry exact fractions only.
    #[arg(long, value_enum, global = true, env = "LSOBSTRUCT_FORMAT", default_value = "table")]
    format: Format,
    /// Worker threads [default: number of logical CPUs].
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate d-invariants of K(n) and classify the slope.
    Analyze {
        #[command(flatten)]
        source: KnotSource,
        #[arg(long)]
        slope: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Classify every integral slope from 2g-1 to --max.
    Scan {
        #[command(flatten)]
        source: KnotSource,
        #[arg(long)]
        max: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a census CSV ("name,alexander" or "name,r") and write JSON lines.
    Batch {
        census: PathBuf,
        /// Also classify slopes up to 2g-1+DELTA [default: 2g-1 only].
        #[arg(long, default_value_t = 0)]
        delta: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit a built-in knot as JSON, or its slope report with --classify.
    Family {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        index: Option<u64>,
        /// Slope classification report (kn only).
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write torsion.csv, dinv.csv (with --slope) and bound.csv (even k) into a directory.
    PlotData {
        #[command(flatten)]
        source: KnotSource,
        #[arg(long)]
        slope: Option<u64>,
        #[arg(long)]
        output: PathBuf,
    },
    /// Check that a knot has an L-space Alexander polynomial.
    Validate {
        #[command(flatten)]
        source: KnotSource,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(CliError::output(path)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|()| out.flush()).map_err(CliError::output("<stdout>"))
        }
    }
}

/// A slope that is not square-free can never be obstructed, so it is
/// reported as such even below `2g - 1`, where no table is built.
#[derive(Serialize)]
struct InapplicableRecord {
    knot: KnotSummary,
    slope: u64,
    square_free: bool,
    conclusion: Conclusion,
    reason: &'static str,
}

const BELOW_RANGE: &str = "slope is not square-free and below 2g - 1";

fn cmd_inapplicable(knot: &Knot, slope: u64, format: Format, output: Option<&Path>) -> Result<u8, CliError> {
    let conclusion = Conclusion::NotApplicable;
    let text = match format {
        Format::Table => {
            format!("knot        {}\nslope       {slope} (not square-free)\nverdict     {conclusion}\n", knot.name())
        }
        Format::Json => {
            json(&InapplicableRecord { knot: knot.into(), slope, square_free: false, conclusion, reason: BELOW_RANGE })
        }
        Format::Csv => format!("slope,conclusion\n{slope},{conclusion}\n"),
    };
    emit(&text, output)?;
    Ok(conclusion.exit_code())
}

fn cmd_analyze(knot: &Knot, slope: u64, format: Format, output: Option<&Path>) -> Result<u8, CliError> {
    if slope >= 1 && slope < knot.min_slope() && !is_square_free(slope) && knot.jump_vector().is_some() {
        return cmd_inapplicable(knot, slope, format, output);
    }
    let a = analyze(knot, slope)?;
    let text = match format {
        Format::Table => render::analysis_table(knot, &a),
        Format::Json => json(&AnalysisRecord::new(knot, &a)),
        Format::Csv => render::analysis_csv(&a),
    };
    emit(&text, output)?;
    Ok(a.verdict.conclusion.exit_code())
}

fn cmd_scan(knot: &Knot, max: u64, format: Format, output: Option<&Path>) -> Result<u8, CliError> {
    let s = scan(knot, max)?;
    let text = match format {
        Format::Table => render::scan_table(knot, &s),
        Format::Json => json(&ScanRecord::new(knot, &s)),
        Format::Csv => scan_csv(&s),
    };
    emit(&text, output)?;
    Ok(if s.interval.is_some() { 0 } else { 10 })
}

fn cmd_batch(census: &Path, delta: u64, output: Option<&Path>) -> Result<u8, CliError> {
    let file = File::open(census).map_err(|source| CliError::Input { path: census.into(), source })?;
    let rows = read_census(file)?;
    let records = batch::run(&rows, delta);
    match output {
        Some(path) => {
            let file = File::create(path).map_err(CliError::output(path))?;
            batch::write_jsonl(&records, BufWriter::new(file)).map_err(CliError::output(path))?;
        }
        None => batch::write_jsonl(&records, io::stdout().lock()).map_err(CliError::output("<stdout>"))?,
    }
    for r in records.iter().filter(|r| r.error.is_some()) {
        eprintln!("skipped line {} ({}): {}", r.line, r.name, r.error.as_deref().unwrap_or_default());
    }
    eprintln!("{}", batch::summary(&records));
    Ok(0)
}

fn cmd_family(family: Family, index: Option<u64>, classify: bool, output: Option<&Path>) -> Result<u8, CliError> {
    let text = if classify {
        let n = match (family, index) {
            (Family::Kn, Some(n)) => n,
            (Family::Kn, None) => return Err(CliError::Usage("family kn needs --index".into())),
            _ => return Err(CliError::Usage("--classify is only available for kn".into())),
        };
        json(&SlopeReportRecord::from(&kn_slope_classification(n)?))
    } else {
        let knot = family_knot(family, index)?;
        let mut value = knot_json(&knot);
        if let (Family::Kn, Some(n)) = (family, index) {
            let member = kn_knot(n)?;
            let obj = value.as_object_mut().expect("knot JSON is an object");
            obj.insert("index".into(), n.into());
            obj.insert("braid_word".into(), member.braid_word.into());
            obj.insert("tb".into(), member.tb.into());
            obj.insert("rot_abs".into(), member.rot_abs.into());
        }
        json(&value)
    };
    emit(&text, output)?;
    Ok(0)
}

fn cmd_plot_data(knot: &Knot, slope: Option<u64>, dir: &Path) -> Result<u8, CliError> {
    std::fs::create_dir_all(dir).map_err(CliError::output(dir))?;
    let write = |name: &str, text: String| {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(CliError::output(path))
    };
    let table = slope.map(|n| d_table::<ExactRational>(knot.profile(), n)).transpose()?;
    write("torsion.csv", torsion_csv(knot.profile()))?;
    if let Some(table) = &table {
        write("dinv.csv", dinv_csv(table))?;
    }
    if let Some(est) = knot.rough_estimate() {
        write("bound.csv", bound_csv(&est, knot.genus()))?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct ValidateRecord {
    knot: KnotSummary,
    min_slope: u64,
    torsion: Vec<u64>,
}

fn cmd_validate(knot: &Knot, format: Format, output: Option<&Path>) -> Result<u8, CliError> {
    let text = match format {
        Format::Table => render::validate_table(knot),
        Format::Json => json(&ValidateRecord {
            knot: knot.into(),
            min_slope: knot.min_slope(),
            torsion: knot.profile().values().to_vec(),
        }),
        Format::Csv => render::validate_csv(knot),
    };
    emit(&text, output)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let jobs = cli.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    // Only fails if a pool already exists, which cannot happen here.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();

    match cli.command {
        Command::Analyze { source, slope, output } => {
            cmd_analyze(&source.load()?, slope, cli.format, output.as_deref())
        }
        Command::Scan { source, max, output } => cmd_scan(&source.load()?, max, cli.format, output.as_deref()),
        Command::Batch { census, delta, output } => cmd_batch(&census, delta, output.as_deref()),
        Command::Family { family, index, classify, output } => cmd_family(family, index, classify, output.as_deref()),
        Command::PlotData { source, slope, output } => cmd_plot_data(&source.load()?, slope, &output),
        Command::Validate { source, output } => cmd_validate(&source.load()?, cli.format, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
