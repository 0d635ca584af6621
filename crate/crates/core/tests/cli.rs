//! End-to-end checks of the command line surface: exit codes, output
//! determinism, and conformance to the shipped report schema.

use std::process::{Command, Output};

fn dzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_passes_for_weight_13() {
    let out = dzeta(&["verify", "13", "--suites", "exact,lemmas"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["weights"][0]["weight"], 13);
    assert_eq!(v["weights"][0]["lemmas"]["membership"], true);
}

#[test]
fn verify_numeric_suite() {
    let out = dzeta(&["verify", "13", "--suites", "numeric", "--eps", "1e-8"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let certs = v["weights"][0]["numeric"].as_array().unwrap();
    assert_eq!(certs.len(), 1);
    assert_eq!(certs[0]["passes"], true);
}

#[test]
fn even_weight_is_usage_error() {
    let out = dzeta(&["verify", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = dzeta(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dmatrix_seven_golden() {
    let out = dzeta(&["dmatrix", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dmatrix"], serde_json::json!([["0", "-10"], ["-2", "-4"]]));
}

#[test]
fn relations_thirteen() {
    let out = dzeta(&["relations", "13"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["relations"].as_array().unwrap().len(), 1);
}

#[test]
fn wbasis_twelve_plus() {
    let out = dzeta(&["wbasis", "plus", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 1);
    let out = dzeta(&["wbasis", "plus", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dims_table() {
    let out = dzeta(&["dims", "5", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 4);
    let out = dzeta(&["dims", "9", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic() {
    let a = dzeta(&["sweep", "--max-n", "13"]);
    let b = dzeta(&["sweep", "--max-n", "13"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "byte-identical output expected");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["weights"].as_array().unwrap().len(), 5);
}

#[test]
fn sweep_csv_single_row() {
    let out = dzeta(&["sweep", "--max-n", "5", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("weight,generators,"));
    assert!(lines[1].starts_with("5,1,0,0,1,1,0,"));
}

#[test]
fn sweep_unwritable_path_fails() {
    let out = dzeta(&["sweep", "--max-n", "5", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_to_file_matches_stdout() {
    let dir = std::env::temp_dir().join("dzeta-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = dzeta(&["sweep", "--max-n", "9", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let from_file = std::fs::read_to_string(&path).unwrap();
    let direct = dzeta(&["sweep", "--max-n", "9"]);
    assert_eq!(from_file.trim(), String::from_utf8_lossy(&direct.stdout).trim());
}

/// Light structural validation of a sweep report against the shipped schema:
/// required fields present, no unexpected fields, rationals match the
/// declared pattern.
#[test]
fn report_conforms_to_schema() {
    let schema_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report.schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let out = dzeta(&["verify", "13", "--suites", "exact,lemmas,numeric"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();

    let top_required: Vec<&str> = schema["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    for key in &top_required {
        assert!(report.get(key).is_some(), "missing top-level field {key}");
    }
    let block_schema = &schema["definitions"]["weight_block"];
    let block_required: Vec<&str> = block_schema["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    let allowed: Vec<&str> = block_schema["properties"]
        .as_object()
        .unwrap()
        .keys()
        .map(|s| s.as_str())
        .collect();
    let rational = regex_lite(&schema["definitions"]["rational"]["pattern"]);
    for block in report["weights"].as_array().unwrap() {
        for key in &block_required {
            assert!(block.get(key).is_some(), "missing field {key}");
        }
        for key in block.as_object().unwrap().keys() {
            assert!(allowed.contains(&key.as_str()), "unexpected field {key}");
        }
        for row in block["dmatrix"].as_array().unwrap() {
            for entry in row.as_array().unwrap() {
                assert!(rational(entry.as_str().unwrap()), "bad rational {entry}");
            }
        }
    }
}

/// Tiny matcher for the one pattern the schema uses: ^-?[0-9]+(/[0-9]+)?$
fn regex_lite(pattern: &serde_json::Value) -> impl Fn(&str) -> bool {
    assert_eq!(pattern.as_str().unwrap(), "^-?[0-9]+(/[0-9]+)?$");
    |s: &str| {
        let s = s.strip_prefix('-').unwrap_or(s);
        let mut parts = s.splitn(2, '/');
        let num = parts.next().unwrap_or("");
        let den = parts.next();
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        digits(num) && den.map(digits).unwrap_or(true)
    }
}
