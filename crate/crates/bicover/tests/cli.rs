use std::process::Command;

use bicover::cli::run;
use bicover::json::{
    DeformProfileJson, InvariantRecordJson, ManettiJson, PairVerdictJson, SignatureGroupJson,
    SingularityJson, SummaryJson,
};
use bicover_core::deformations::ManettiCertificate;
use bicover_core::invariants::InvariantRecord;
use bicover_core::search::SignatureGroup;
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bicover"))
        .args(args)
        .env_remove("BICOVER_THREADS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let mut argv = vec!["bicover"];
    argv.extend_from_slice(args);
    let o = run(argv);
    assert_eq!(o.code, 0, "stderr: {}", o.stderr);
    o.stdout
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, line: &str) {
    let v: Value = serde_json::from_str(line).unwrap();
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {line}\n{errors:?}");
}

#[test]
fn invariants_json_golden() {
    let (code, out, _) = bin(&["invariants", "((5,2),(3,2),(1,2))", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chi"], 7);
    assert_eq!(v["k2"], 20);
    assert_eq!(v["divisibility"]["exact"], 1);
    assert_eq!(v["pi1"], "simply_connected");
}

#[test]
fn manetti_and_singularity_text() {
    let (code, out, _) = bin(&["manetti", "14", "4", "6", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("certified: not deformation equivalent"));
    let (code, out, _) = bin(&["singularity", "1/5(1,2)"]);
    assert_eq!(code, 0);
    assert!(out.contains("not class T"));
    let (_, out, _) = bin(&["manetti", "14", "4", "6", "3"]);
    assert_eq!(out, "not certified: violated c >= k+4\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = bin(&["invariants", "((5,2),(4,2),(1,2))"]);
    assert_eq!(code, 1);
    assert!(err.contains("ParityViolation"));
    let (code, _, err) = bin(&["--format", "json", "invariants", "((0,3),(2,2))"]);
    assert_eq!(code, 1);
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(e["error"], "BranchBelowMinimum");
    assert_valid("error", err.trim());
    assert_eq!(bin(&["invariants", "((2,2),(0,0),(0,0))"]).0, 1);
    assert_eq!(bin(&["singularity", "1/6(1,2)"]).0, 1);
    assert_eq!(bin(&["frobnicate"]).0, 1);
    assert_eq!(bin(&["search", "--max-n", "-1"]).0, 1);
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn manetti_accepts_negative_shift() {
    let out = ok(&["manetti", "14", "4", "6", "-1", "--format", "json"]);
    let m: ManettiJson = serde_json::from_str(&out).unwrap();
    assert_eq!(m.violated, ["k >= 1"]);
}

#[test]
fn outputs_are_byte_identical_across_runs_and_threads() {
    let a = bin(&[
        "search",
        "--max-n",
        "9",
        "--max-m",
        "6",
        "--format",
        "json",
        "--threads",
        "1",
    ]);
    let b = bin(&[
        "search",
        "--max-n",
        "9",
        "--max-m",
        "6",
        "--format",
        "json",
        "--threads",
        "4",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let c = bin(&["invariants", "((28,8),(12,8))"]);
    let d = bin(&["invariants", "((28,8),(12,8))"]);
    assert_eq!(c, d);
}

#[test]
fn table_output_is_ascii() {
    for args in [
        vec!["invariants", "((5,2),(3,2),(1,2))"],
        vec!["compare", "((28,8),(12,8))", "((30,8),(10,8))"],
        vec!["singularity", "1/9(1,2)"],
        vec!["deform-profile", "((5,2),(3,2),(1,2))"],
        vec!["search", "--max-n", "6", "--max-m", "4"],
    ] {
        let out = ok(&args);
        assert!(out.is_ascii(), "{args:?}: {out}");
    }
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("bicover-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("search.conf");
    std::fs::write(&path, "max_n = 5\nmax_m = 2\ncertify = false\n").unwrap();
    let p = path.to_str().unwrap();
    let from_file = ok(&["search", "--config", p, "--format", "json"]);
    let from_flags = ok(&[
        "search",
        "--max-n",
        "5",
        "--max-m",
        "2",
        "--no-certify",
        "--format",
        "json",
    ]);
    assert_eq!(from_file, from_flags);
    let overridden = ok(&["search", "--config", p, "--max-n", "3", "--format", "json"]);
    assert_eq!(
        overridden,
        ok(&["search", "--max-n", "3", "--max-m", "2", "--format", "json"])
    );
    std::fs::write(&path, "max_n = five\n").unwrap();
    assert_eq!(run(["bicover", "search", "--config", p]).code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_outputs_match_schemas_and_round_trip() {
    for cover in [
        "((5,2),(3,2),(1,2))",
        "((3,4),(3,4),(3,4))",
        "((2,2),(2,2))",
        "((4,4),(2,2),(2,4))",
    ] {
        let line = ok(&["invariants", cover, "--format", "json"]);
        assert_valid("invariants", &line);
        let j: InvariantRecordJson = serde_json::from_str(&line).unwrap();
        let rec = InvariantRecord::try_from(j.clone()).unwrap();
        assert_eq!(InvariantRecordJson::from(&rec), j);
        assert_eq!(
            rec,
            InvariantRecord::compute(&cover.parse().unwrap()).unwrap()
        );
        assert_eq!(serde_json::to_string(&j).unwrap(), line.trim());

        let line = ok(&["deform-profile", cover, "--format", "json"]);
        assert_valid("deform_profile", &line);
        let j: DeformProfileJson = serde_json::from_str(&line).unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), line.trim());
    }

    for (a, b) in [
        ("((28,8),(12,8))", "((30,8),(10,8))"),
        ("((5,2),(3,2),(1,2))", "((3,2),(3,2),(3,2))"),
        ("((4,4),(4,4))", "((3,4),(3,4),(3,4))"),
    ] {
        let line = ok(&["compare", a, b, "--format", "json"]);
        assert_valid("compare", &line);
        let j: PairVerdictJson = serde_json::from_str(&line).unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), line.trim());
    }

    for q in ["1/4(1,1)", "1/5(1,2)", "1/45(1,14)", "1/7(1,6)"] {
        let line = ok(&["singularity", q, "--format", "json"]);
        assert_valid("singularity", &line);
        let j: SingularityJson = serde_json::from_str(&line).unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), line.trim());
    }

    for args in [["14", "4", "6", "1"], ["13", "4", "5", "3"]] {
        let mut argv = vec!["manetti"];
        argv.extend_from_slice(&args);
        argv.extend_from_slice(&["--format", "json"]);
        let line = ok(&argv);
        assert_valid("manetti", &line);
        let j: ManettiJson = serde_json::from_str(&line).unwrap();
        let cert = ManettiCertificate::try_from(j.clone()).unwrap();
        assert_eq!(ManettiJson::from(&cert), j);
    }

    let out = ok(&[
        "search", "--max-n", "30", "--max-m", "8", "--format", "json",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    for line in &lines {
        assert_valid("search_line", line);
    }
    let (last, groups) = lines.split_last().unwrap();
    let summary: SummaryJson = serde_json::from_str(last).unwrap();
    assert_eq!(summary.summary.groups as usize, groups.len());
    for line in groups {
        let j: SignatureGroupJson = serde_json::from_str(line).unwrap();
        let g = SignatureGroup::try_from(j.clone()).unwrap();
        assert_eq!(SignatureGroupJson::from(&g), j);
    }
}
