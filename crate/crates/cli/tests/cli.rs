use std::path::PathBuf;
use std::process::{Command, Output};

fn nervekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nervekit")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../core/tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn compare_bg_z2() {
    let out = nervekit(&["compare", "--example", "bg:z2", "--max-dim", "3", "--coeff", "f2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["verdict"], "pass");
    let degrees = r["result"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 3);
    assert!(degrees.iter().all(|d| d["verdict"] == "pass"));
}

#[test]
fn uniq_check_finds_one_family() {
    let out = nervekit(&["uniq-check", "--max-cosimplicial", "2", "--text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("families found: 1"));
}

#[test]
fn clean_fixtures_validate() {
    for f in ["delta2.json", "bg_z2.json", "hc_bg_z2.json", "binerve_bg_z2.json", "poset01.json"] {
        let out = nervekit(&["validate", "--in", &fixture(f)]);
        assert_eq!(out.status.code(), Some(0), "{f}");
    }
}

#[test]
fn planted_fixtures_fail_with_witnesses() {
    for f in ["non_wide", "broken_identity", "broken_marking", "broken_commutation", "broken_composition"] {
        let out = nervekit(&["validate", "--in", &fixture(&format!("planted/{f}.json"))]);
        assert_eq!(out.status.code(), Some(1), "{f}");
        let r = json(&out);
        assert_eq!(r["verdict"], "fail");
        let witnesses = r["checks"][0]["witnesses"].as_array().unwrap();
        assert!(!witnesses.is_empty(), "{f}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(nervekit(&["nerve", "--example", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(nervekit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nervekit(&["compare", "--coeff", "q", "--example", "bg:z2"]).status.code(), Some(2));
    assert_eq!(nervekit(&["homology", "--in", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let args = ["bspace", "--example", "discrete:chain2", "-d", "3", "--emit-cells"];
    let (a, b) = (nervekit(&args), nervekit(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["digest"].as_str().unwrap().len(), 64);
}

#[test]
fn saved_artifacts_read_back() {
    let dir = std::env::temp_dir().join(format!("nervekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let saved = dir.join("hc.json");
    let report = dir.join("report.json");
    let out = nervekit(&[
        "hcnerve", "--example", "bg:z2", "-d", "3",
        "--save", saved.to_str().unwrap(),
        "--out", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let back = nervekit(&["validate", "--in", saved.to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["verdict"], "pass");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_command_runs_on_a_small_example() {
    let cases: &[&[&str]] = &[
        &["example", "discrete:poset01"],
        &["nerve", "--example", "discrete:poset01"],
        &["binerve", "--example", "discrete:poset01", "--cols", "2", "--rows", "2"],
        &["hcnerve", "--example", "discrete:poset01"],
        &["bspace", "--example", "discrete:poset01"],
        &["diag", "--example", "discrete:poset01", "-d", "2"],
        &["cls", "--example", "discrete:poset01", "--cols", "1", "--rows", "1"],
        &["theta", "--example", "discrete:poset01", "--cols", "1", "--rows", "1", "--into-cls"],
        &["homology", "--example", "bg:z2", "--coeff", "z"],
        &["pi0", "--example", "discrete:antichain2"],
        &["horncheck", "--example", "bg:z2", "--space", "homs"],
        &["horncheck", "--in", &fixture("delta2.json"), "--horn", "2,1"],
    ];
    for args in cases {
        let out = nervekit(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
