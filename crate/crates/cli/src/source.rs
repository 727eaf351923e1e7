//! Where a knot comes from: inline JSON, a JSON file, or a built-in family.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lsobstruct_core::families::{kn_knot, pretzel_p_2_3_11, torus_2};
use lsobstruct_core::knotio::parse_knot_json;
use lsobstruct_core::Knot;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// The K_n family (genus 4n + 2); needs --index n >= 1.
    Kn,
    /// Torus knots T(2, 2q + 1); needs --index q >= 1.
    Torus,
    /// The pretzel knot P(-2,3,11).
    Pretzel,
}

#[derive(Debug, Clone, Args)]
pub struct KnotSource {
    /// Knot JSON, given inline or as a path to a file.
    #[arg(long, value_name = "JSON|PATH", conflicts_with_all = ["family", "index"], required_unless_present = "family")]
    pub knot: Option<String>,
    /// Built-in knot instead of --knot.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Family member index.
    #[arg(long, requires = "family")]
    pub index: Option<u64>,
}

pub fn family_knot(family: Family, index: Option<u64>) -> Result<Knot, CliError> {
    let need = |name: &str| index.ok_or_else(|| CliError::Usage(format!("--family {name} needs --index")));
    Ok(match family {
        Family::Kn => kn_knot(need("kn")?)?.knot,
        Family::Torus => torus_2(need("torus")?)?,
        Family::Pretzel => {
            if index.is_some() {
                return Err(CliError::Usage("--family pretzel takes no --index".into()));
            }
            pretzel_p_2_3_11()
        }
    })
}

impl KnotSource {
    pub fn load(&self) -> Result<Knot, CliError> {
        match (&self.knot, self.family) {
            (Some(arg), _) => {
                if arg.trim_start().starts_with('{') {
                    return Ok(parse_knot_json(arg)?);
                }
                let path = PathBuf::from(arg);
                let text = std::fs::read_to_string(&path).map_err(|source| CliError::Input { path, source })?;
                Ok(parse_knot_json(&text)?)
            }
            (None, Some(family)) => family_knot(family, self.index),
            (None, None) => Err(CliError::Usage("one of --knot or --family is required".into())),
        }
    }
}
