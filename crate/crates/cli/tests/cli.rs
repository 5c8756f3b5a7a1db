use std::io::Write;
use std::process::{Command, Output, Stdio};

fn spectool(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spectool"))
        .args(args)
        .env_remove("SPECTOOL_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_triangle() {
    let out = spectool(&["analyze", "--json"], "Bw\n");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let g = &v[0];
    assert_eq!(g["graph6"], "Bw");
    assert!((g["spectrum"]["lambda1"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(g["spectrum"]["triangles"], 1);
    assert_eq!(g["spectral_mantel"]["class"], "has_triangle");
    assert_eq!(g["bounds"].as_array().unwrap().len(), 6);
}

#[test]
fn analyze_cycles_on_complete_bipartite() {
    let k33 = stdout(&spectool(
        &["gen", "--family", "bipartite", "--params", "3,3"],
        "",
    ));
    let out = spectool(
        &["analyze", "--json", "--cycles", "6", "--walks", "4"],
        &k33,
    );
    let v = json(&out);
    assert_eq!(v[0]["cycles"]["present"], serde_json::json!([4, 6]));
    assert_eq!(v[0]["cycles"]["mask"], "0b1010000");
    assert_eq!(
        v[0]["walks"]["totals"],
        serde_json::json!(["6", "18", "54", "162", "486"])
    );
}

#[test]
fn analyze_reports_bad_line() {
    let out = spectool(&["analyze"], "Bw\nBx\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn gen_composes_with_analyze() {
    let k3 = spectool(&["gen", "--family", "complete", "--params", "3"], "");
    assert_eq!(stdout(&k3).trim(), "Bw");
    let c5 = stdout(&spectool(
        &["gen", "--family", "cycle", "--params", "5"],
        "",
    ));
    let v = json(&spectool(&["analyze", "--json"], &c5));
    assert!((v[0]["spectrum"]["lambda1"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(
        spectool(&["gen", "--family", "cycle", "--params", "2"], "")
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        spectool(&["gen", "--family", "bipartite", "--params", "2"], "")
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        spectool(&["gen", "--family", "complete", "--params", "63"], "")
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_exit_codes_and_schema() {
    let out = spectool(
        &[
            "verify",
            "--theorem",
            "spectral-mantel",
            "--max-n",
            "5",
            "--json",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["config", "totals", "tight", "counterexamples", "runtime_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["totals"]["spectral-mantel"]["violated"], 0);
    assert_eq!(
        spectool(&["verify", "--max-n", "9"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        spectool(&["verify", "--max-n", "8"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        spectool(&["verify", "--theorem", "nope"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        spectool(&["verify", "--jobs", "0"], "").status.code(),
        Some(3)
    );
}

#[test]
fn verify_is_independent_of_jobs() {
    let run = |jobs: &str| {
        stdout(&spectool(
            &[
                "verify",
                "--theorem",
                "all",
                "--max-n",
                "5",
                "--jobs",
                jobs,
                "--json",
                "--no-timing",
            ],
            "",
        ))
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn fuzz_is_reproducible() {
    let args = [
        "fuzz",
        "--dist",
        "gnp:30,0.5",
        "--count",
        "200",
        "--seed",
        "7",
        "--theorem",
        "stanley,hong,hsf,lemma3,thm11",
        "--json",
        "--no-timing",
    ];
    let a = spectool(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&spectool(&args, "")));
    assert_eq!(json(&a)["graphs"], 200);
    assert_eq!(
        spectool(&["fuzz", "--dist", "gnp:30,1.5"], "")
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        spectool(&["fuzz", "--dist", "wheel:5"], "").status.code(),
        Some(3)
    );
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(spectool(&["--help"], "").status.code(), Some(0));
    assert_eq!(spectool(&["frobnicate"], "").status.code(), Some(3));
}
