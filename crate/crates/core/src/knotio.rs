//! Knot input formats: the knot JSON object and census CSV files.
//!
//! Knot JSON is `{"name": ..., "alexander": [[exponent, coefficient], ...]}`
//! or `{"name": ..., "r": [...]}`. Alexander terms may list only the
//! nonnegative half, which is mirrored on load; a list containing any
//! negative exponent is taken as the full support and must be symmetric.
//!
//! Census CSV has header `name,alexander` (terms `exp:coeff` separated by
//! `;`) or `name,r` (jumps separated by `;`).

use std::collections::BTreeSet;
use std::io::Read;

use serde::Deserialize;

use crate::alexpoly::{AlexanderPolynomial, JumpVector};
use crate::error::{Error, Result};
use crate::knot::Knot;

/// Extra fields (genus, braid word, Legendrian data) are ignored on input.
#[derive(Debug, Deserialize)]
struct KnotJson {
    name: String,
    #[serde(default)]
    alexander: Option<Vec<(i64, i64)>>,
    #[serde(default)]
    r: Option<Vec<i64>>,
}

/// Turns a term list into a symmetric polynomial, mirroring a nonnegative
/// half or checking a full support for symmetry.
pub fn polynomial_from_terms(terms: &[(i64, i64)], context: &str) -> Result<AlexanderPolynomial> {
    let mut seen = BTreeSet::new();
    for &(e, _) in terms {
        if !seen.insert(e) {
            return Err(Error::parse(context, format!("exponent {e} listed twice")));
        }
    }
    if terms.iter().any(|&(e, _)| e < 0) {
        let poly = AlexanderPolynomial::new(terms.iter().copied());
        if !poly.is_symmetric() {
            return Err(Error::parse(context, "full-support polynomial is not symmetric"));
        }
        Ok(poly)
    } else {
        Ok(AlexanderPolynomial::from_nonnegative_half(terms.iter().copied()))
    }
}

fn knot_from_parts(name: &str, alexander: Option<&[(i64, i64)]>, r: Option<&[i64]>, context: &str) -> Result<Knot> {
    match (alexander, r) {
        (Some(terms), r) => {
            let knot = Knot::from_polynomial(name, polynomial_from_terms(terms, context)?)?;
            if let Some(r) = r {
                let actual: Vec<i64> =
                    knot.jump_vector().map(|v| v.as_slice().iter().map(|&x| x as i64).collect()).unwrap_or_default();
                if actual != r {
                    return Err(Error::parse(context, "\"r\" does not match \"alexander\""));
                }
            }
            Ok(knot)
        }
        (None, Some(r)) => Knot::from_jump_vector(name, &JumpVector::from_signed(r)?),
        (None, None) => Err(Error::parse(context, "expected an \"alexander\" or \"r\" field")),
    }
}

pub fn parse_knot_json(text: &str) -> Result<Knot> {
    let raw: KnotJson = serde_json::from_str(text).map_err(|e| Error::parse("knot JSON", e))?;
    knot_from_parts(&raw.name, raw.alexander.as_deref(), raw.r.as_deref(), "knot JSON")
}

/// The knot JSON object for `knot`, with the full support listed.
pub fn knot_json(knot: &Knot) -> serde_json::Value {
    let terms: Vec<[i64; 2]> = knot.polynomial().terms().map(|(e, c)| [e, c]).collect();
    serde_json::json!({
        "name": knot.name(),
        "alexander": terms,
        "r": knot.jump_vector().map(|r| r.as_slice().to_vec()).unwrap_or_default(),
        "genus": knot.genus(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusFormat {
    Alexander,
    Jumps,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    /// 1-based line number in the file, header included.
    pub line: u64,
    pub name: String,
    pub knot: Result<Knot>,
}

fn parse_terms(field: &str, context: &str) -> Result<Vec<(i64, i64)>> {
    field
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (e, c) =
                pair.split_once(':').ok_or_else(|| Error::parse(context, format!("term {pair:?} is not exp:coeff")))?;
            let e = e.trim().parse().map_err(|err| Error::parse(context, format!("exponent {e:?}: {err}")))?;
            let c = c.trim().parse().map_err(|err| Error::parse(context, format!("coefficient {c:?}: {err}")))?;
            Ok((e, c))
        })
        .collect()
}

fn parse_jumps(field: &str, context: &str) -> Result<Vec<i64>> {
    field
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|v| v.parse().map_err(|err| Error::parse(context, format!("jump {v:?}: {err}"))))
        .collect()
}

/// Reads a census file. Malformed rows become rows carrying an error; only
/// an unreadable stream or a bad header fails the whole read.
pub fn read_census(reader: impl Read) -> Result<Vec<CensusRow>> {
    let mut csv = csv::ReaderBuilder::new().flexible(true).trim(csv::Trim::All).from_reader(reader);
    let header = csv.headers().map_err(|e| Error::parse("census header", e))?.clone();
    if header.is_empty() {
        return Ok(Vec::new());
    }
    let format = match (header.get(0), header.get(1), header.len()) {
        (Some("name"), Some("alexander"), 2) => CensusFormat::Alexander,
        (Some("name"), Some("r"), 2) => CensusFormat::Jumps,
        _ => {
            return Err(Error::parse(
                "census header",
                format!(
                    "expected \"name,alexander\" or \"name,r\", found {:?}",
                    header.iter().collect::<Vec<_>>().join(",")
                ),
            ))
        }
    };

    let mut rows = Vec::new();
    for record in csv.records() {
        let (line, record) = match record {
            Ok(rec) => (rec.position().map_or(0, |p| p.line()), rec),
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                rows.push(CensusRow { line, name: String::new(), knot: Err(Error::parse(format!("line {line}"), e)) });
                continue;
            }
        };
        let name = record.get(0).unwrap_or_default().to_string();
        let knot = if record.len() != 2 {
            Err(Error::parse(format!("line {line}"), format!("expected 2 fields, found {}", record.len())))
        } else {
            let field = &record[1];
            match format {
                CensusFormat::Alexander => {
                    let context = format!("line {line}, field alexander");
                    parse_terms(field, &context).and_then(|terms| knot_from_parts(&name, Some(&terms), None, &context))
                }
                CensusFormat::Jumps => {
                    let context = format!("line {line}, field r");
                    parse_jumps(field, &context).and_then(|r| knot_from_parts(&name, None, Some(&r), &context))
                }
            }
        };
        rows.push(CensusRow { line, name, knot });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_alexander_half_and_full() {
        let half = r#"{"name": "P(-2,3,11)", "alexander": [[0,1],[1,-1],[2,1],[3,-1],[4,1],[6,-1],[7,1]]}"#;
        let k = parse_knot_json(half).unwrap();
        assert_eq!(k.jump_vector().unwrap().as_slice(), &[1, 1, 1, 1, 1, 2]);
        let full = r#"{"name": "trefoil", "alexander": [[-1,1],[0,-1],[1,1]]}"#;
        assert_eq!(parse_knot_json(full).unwrap().genus(), 1);
        let asym = r#"{"name": "x", "alexander": [[-1,1],[0,-1],[2,1]]}"#;
        assert!(matches!(parse_knot_json(asym), Err(Error::Parse { .. })));
        let dup = r#"{"name": "x", "alexander": [[0,1],[0,1]]}"#;
        assert!(matches!(parse_knot_json(dup), Err(Error::Parse { .. })));
    }

    #[test]
    fn json_jumps_and_consistency() {
        let k = parse_knot_json(r#"{"name": "K_1", "r": [1,1,1,3]}"#).unwrap();
        assert_eq!(k.genus(), 6);
        let both = r#"{"name": "t", "alexander": [[0,-1],[1,1]], "r": [1]}"#;
        assert!(parse_knot_json(both).is_ok());
        let mismatch = r#"{"name": "t", "alexander": [[0,-1],[1,1]], "r": [1,1]}"#;
        assert!(parse_knot_json(mismatch).is_err());
        assert!(parse_knot_json(r#"{"name": "t"}"#).is_err());
        assert!(matches!(parse_knot_json(r#"{"name": "t", "r": [2,1]}"#), Err(Error::FirstJumpNotOne { .. })));
        assert!(parse_knot_json("{not json").is_err());
    }

    #[test]
    fn json_round_trip() {
        let k = parse_knot_json(r#"{"name": "K_1", "r": [1,1,1,3]}"#).unwrap();
        let text = knot_json(&k).to_string();
        assert_eq!(parse_knot_json(&text).unwrap(), k);
        let unknot = parse_knot_json(r#"{"name": "U", "alexander": [[0,1]]}"#).unwrap();
        assert_eq!(parse_knot_json(&knot_json(&unknot).to_string()).unwrap(), unknot);
    }

    #[test]
    fn census_alexander() {
        let text = "name,alexander\nP,0:1;1:-1;2:1;3:-1;4:1;6:-1;7:1\nbad,0:1;1:2\ntrefoil,-1:1;0:-1;1:1\n";
        let rows = read_census(text.as_bytes()).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].knot.as_ref().unwrap().genus(), 7);
        assert!(rows[1].knot.is_err());
        assert_eq!(rows[1].line, 3);
        assert_eq!(rows[2].knot.as_ref().unwrap().genus(), 1);
    }

    #[test]
    fn census_jumps() {
        let text = "name,r\nK_1,1;1;1;3\nbad,2;1\nnonsense,1;x\nshort\n";
        let rows = read_census(text.as_bytes()).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows[0].knot.is_ok());
        assert_eq!(rows[1].knot, Err(Error::FirstJumpNotOne { value: 2 }));
        match &rows[2].knot {
            Err(Error::Parse { context, .. }) => assert_eq!(context, "line 4, field r"),
            other => panic!("{other:?}"),
        }
        assert!(rows[3].knot.is_err());
    }

    #[test]
    fn census_edge_cases() {
        assert!(read_census("".as_bytes()).unwrap().is_empty());
        assert!(read_census("name,r\n".as_bytes()).unwrap().is_empty());
        assert!(read_census("id,poly\nx,1\n".as_bytes()).is_err());
    }
}
