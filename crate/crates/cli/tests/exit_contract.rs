use std::path::Path;
use std::process::Command;

use lsobstruct_core::knot::analyze;
use lsobstruct_core::knotio::parse_knot_json;
use lsobstruct_core::obstruction::is_square_free;
use proptest::prelude::*;

const CORPUS: [&str; 5] = ["p-2-3-11.json", "k1.json", "trefoil.json", "not_lspace.json", "missing.json"];
const FORMATS: [&str; 3] = ["table", "json", "csv"];

/// The exit status the contract requires, computed through the library.
fn expected(file: &Path, slope: u64) -> i32 {
    let Ok(text) = std::fs::read_to_string(file) else { return 66 };
    let Ok(knot) = parse_knot_json(&text) else { return 65 };
    if slope >= 1 && slope < knot.min_slope() && !is_square_free(slope) {
        return 11;
    }
    match analyze(&knot, slope) {
        Ok(a) => a.verdict.conclusion.exit_code().into(),
        Err(_) => 65,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn analyze_honours_exit_contract(file in 0..CORPUS.len(), slope in 0u64..40, format in 0..FORMATS.len()) {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(CORPUS[file]);
        let out = Command::new(env!("CARGO_BIN_EXE_lsobstruct"))
            .args(["analyze", "--knot", path.to_str().unwrap(), "--slope", &slope.to_string(), "--format", FORMATS[format]])
            .output()
            .unwrap();
        let code = out.status.code().unwrap();
        prop_assert!(matches!(code, 0 | 10 | 11) || code > 63, "exit {code}");
        prop_assert_eq!(code, expected(&path, slope));
        if code > 63 {
            prop_assert!(out.stdout.is_empty());
            prop_assert!(!out.stderr.is_empty());
        } else {
            prop_assert!(!out.stdout.is_empty());
        }
    }
}
