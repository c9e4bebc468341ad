use std::process::{Command, Output};

use serde_json::Value;

fn heckeq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckeq"))
        .args(args)
        .env_remove("HECKEQ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = heckeq(&full);
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let doc: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().expect("exit code"), doc)
}

fn ok(args: &[&str]) -> Value {
    let (code, doc) = json(args);
    assert_eq!(code, 0, "{args:?}: {doc}");
    doc["result"].clone()
}

fn error_kind(args: &[&str]) -> String {
    let (code, doc) = json(args);
    assert_eq!(code, 2, "{args:?}: {doc}");
    doc["error"]["kind"].as_str().expect("error kind").to_string()
}

#[test]
fn eigenvalue_values_and_validation() {
    assert_eq!(ok(&["eigenvalue", "--n", "6", "--diagram", "3,3"])["eigenvalue"], "q^2+3*q-1");
    assert_eq!(ok(&["eigenvalue", "--diagram", "1,1", "--n", "2"])["eigenvalue"], "-1");
    assert_eq!(error_kind(&["eigenvalue", "--diagram", "2,2,2", "--n", "5"]), "usage");
    assert_eq!(error_kind(&["eigenvalue", "--diagram", "2,3"]), "parse");
}

#[test]
fn reconstruct_inverts_eigenvalue_for_all_partitions_of_seven() {
    assert_eq!(ok(&["reconstruct", "--n", "6", "--poly", "q^2+3*q-1"])["diagram"], "3,3");
    let rows = [
        "7", "6,1", "5,2", "5,1,1", "4,3", "4,2,1", "4,1,1,1", "3,3,1", "3,2,2", "3,2,1,1",
        "3,1,1,1,1", "2,2,2,1", "2,2,1,1,1", "2,1,1,1,1,1", "1,1,1,1,1,1,1",
    ];
    for g in rows {
        let e = ok(&["eigenvalue", "--diagram", g])["eigenvalue"].as_str().unwrap().to_string();
        assert_eq!(ok(&["reconstruct", "--n", "7", "--poly", &e])["diagram"], g);
    }
    assert_eq!(error_kind(&["reconstruct", "--n", "3", "--poly", "q^^2"]), "parse");
    assert_eq!(error_kind(&["reconstruct", "--n", "3", "--poly", "q^5"]), "computation");
}

#[test]
fn character_tables() {
    let r = ok(&["characters", "--n", "3"]);
    let row = &r["projector"]["2,1"];
    assert_eq!((&row["(1)"], &row["(2)"], &row["(3)"]), (&2.into(), &0.into(), &(-1).into()));
    let r = ok(&["characters", "--n", "5", "--method", "both"]);
    assert_eq!(r["equal"], true);
    assert_eq!(r["projector"], r["mn"]);
    assert_eq!(error_kind(&["characters", "--n", "9", "--method", "projector"]), "usage");
    assert_eq!(ok(&["characters", "--n", "9", "--method", "mn"])["mn"]["9"]["(9)"], 1);
}

#[test]
fn trace_tables() {
    let r = ok(&["traces", "--diagram", "3,1"]);
    assert_eq!(r["3,1"]["L2"], "2*q-1");
    assert_eq!(r["3,1"]["L3"], "q^2+2*q-1");
    assert_eq!(r["3,1"]["L4"], "2*q^2+2*q-1");

    let r = ok(&["traces", "--diagram", "1,1,1", "--kind", "simply"]);
    assert_eq!(r["1,1,1"]["g1"], "-1");
    assert_eq!(r["1,1,1"]["g1g2"], "1");

    let r = ok(&["traces", "--n", "4", "--kind", "doubly"]);
    assert_eq!(r["4"]["g1g3"], "q^2");
    assert_eq!(r["3,1"]["g1g3"], "q^2-2*q");

    let r = ok(&["traces", "--diagram", "3,1", "--kind", "products", "--alphas", "2,4"]);
    assert_eq!(r["3,1"]["L2L4"], "q^3-2*q");

    assert_eq!(error_kind(&["traces", "--diagram", "3,1", "--kind", "bogus"]), "usage");
    assert_eq!(error_kind(&["traces", "--kind", "murphy"]), "usage");
}

#[test]
fn verify_passes_and_refuses_degenerate_q0() {
    let r = ok(&["verify", "--n", "4"]);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["passed"] == true), "{r}");
    let r = ok(&["--q0", "3/2", "verify", "--n", "3", "--check", "projectors"]);
    assert_eq!(r["checks"][0]["name"], "projectors");
    for q0 in ["1", "0", "-1"] {
        let (code, doc) = json(&["--q0", q0, "verify", "--n", "3"]);
        assert_eq!(code, 2, "q0={q0}: {doc}");
        assert!(doc.get("error").is_some());
    }
    assert_eq!(error_kind(&["verify", "--n", "7"]), "usage");
    assert_eq!(error_kind(&["verify", "--n", "3", "--check", "nope"]), "usage");
}

#[test]
fn suq_actions() {
    assert_eq!(ok(&["suq", "casimir", "-N", "3", "--diagram", "1"])["casimir"], "1+q^-4");
    assert_eq!(ok(&["suq", "casimir", "--irrep", "3:1"])["casimir"], "1+q^-4");
    assert_eq!(ok(&["suq", "reconstruct", "-N", "3", "--poly", "1+q^-4"])["irrep"], "3:1");
    assert_eq!(ok(&["suq", "dimension", "--irrep", "3:2,1"])["dimension"], 8);
    let r = ok(&["suq", "check"]);
    assert!(r["cases"].as_object().unwrap().values().all(|v| v == true));
    assert_eq!(ok(&["suq", "commutator", "--irrep", "3:2,1"])["passed"], true);
    assert_eq!(error_kind(&["suq", "reconstruct", "-N", "3", "--poly", "q+q^-4"]), "computation");
}

#[test]
fn json_output_is_deterministic_and_reparses() {
    let cases: &[&[&str]] = &[
        &["eigenvalue", "--diagram", "4,1,1"],
        &["characters", "--n", "4", "--method", "both"],
        &["traces", "--n", "4", "--kind", "simply"],
        &["suq", "casimir", "--irrep", "4:2,1"],
    ];
    for args in cases {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let first = String::from_utf8(heckeq(&full).stdout).unwrap();
        let second = String::from_utf8(heckeq(&full).stdout).unwrap();
        assert_eq!(first, second);
        let doc: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", first);
        assert!(doc["command"].as_str().unwrap().starts_with(args[0]));
        assert_eq!(doc["format"], "json");
        assert!(doc["parameters"].is_object());
    }
}

#[test]
fn table_output_and_usage_errors() {
    let out = heckeq(&["eigenvalue", "--diagram", "3,3"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("q^2+3*q-1"));
    let out = heckeq(&["eigenvalue"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&["no-such-command"]), "usage");
}

#[test]
fn cache_directory_roundtrip() {
    let dir = std::env::temp_dir().join(format!("heckeq-cli-test-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_heckeq"))
            .args(["--format", "json", "characters", "--n", "5"])
            .env("HECKEQ_CACHE_DIR", &dir)
            .output()
            .unwrap();
        assert!(out.status.success());
        assert!(out.stderr.is_empty(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let first = run();
    assert!(dir.join("heckeq-memo.json").exists());
    assert_eq!(run(), first);
    std::fs::write(dir.join("heckeq-memo.json"), "{not json").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_heckeq"))
        .args(["--format", "json", "characters", "--n", "5"])
        .env("HECKEQ_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, first);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ignoring cache"));
    let _ = std::fs::remove_dir_all(&dir);
}
