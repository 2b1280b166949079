//! End-to-end tests against the built `mom` binary.

use std::path::Path;
use std::process::{Command, Output};

fn mom(cache_dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mom"))
        .args(args)
        .env("MOM_CACHE_DIR", cache_dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn value_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (
            &[
                "value", "--k", "2", "--beta", "1", "--n", "3", "--method", "dp",
            ],
            "20",
        ),
        (
            &[
                "value",
                "--k",
                "1",
                "--beta",
                "2",
                "--n",
                "0",
                "--method",
                "closed-form",
            ],
            "1",
        ),
        (
            &[
                "value", "--k", "2", "--beta", "1", "--n", "1", "--method", "cfkrs",
            ],
            "4",
        ),
    ];
    for (args, expected) in cases {
        let out = mom(dir.path(), args);
        assert_eq!(code(&out), 0, "{args:?}: {out:?}");
        assert_eq!(stdout(&out).trim(), *expected, "{args:?}");
    }
}

#[test]
fn method_agreement() {
    let dir = tempfile::tempdir().unwrap();
    for (k, beta, n) in [("1", "1", "4"), ("2", "1", "2"), ("1", "2", "3")] {
        let mut values = Vec::new();
        for method in ["dp", "cfkrs"] {
            let out = mom(
                dir.path(),
                &[
                    "value", "--k", k, "--beta", beta, "--n", n, "--method", method,
                ],
            );
            assert_eq!(code(&out), 0);
            values.push(stdout(&out).trim().to_string());
        }
        assert_eq!(values[0], values[1], "(k,beta,N)=({k},{beta},{n})");
    }
}

#[test]
fn closed_form_rejected_outside_domain() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &[
            "value",
            "--k",
            "2",
            "--beta",
            "1",
            "--n",
            "3",
            "--method",
            "closed-form",
        ],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn invalid_arguments_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &["value", "--k", "0", "--beta", "1", "--n", "1"],
    );
    assert_eq!(code(&out), 2);
    let out = mom(
        dir.path(),
        &["table", "--k", "1", "--beta", "1", "--n-range", "5..2"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn budget_violation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    // k*beta = 25 exceeds the enumeration budget.
    let out = mom(
        dir.path(),
        &["value", "--k", "5", "--beta", "5", "--n", "2"],
    );
    assert_eq!(code(&out), 1);
}

#[test]
fn cache_confirms_and_detects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["value", "--k", "2", "--beta", "1", "--n", "3"];
    assert_eq!(code(&mom(dir.path(), &args)), 0);
    // Re-run: cached value is confirmed.
    assert_eq!(code(&mom(dir.path(), &args)), 0);
    let path = dir.path().join("records.jsonl");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    // Corrupt the stored value; the next run must abort with exit 3.
    std::fs::write(&path, text.replace("\"20\"", "\"21\"")).unwrap();
    let out = mom(dir.path(), &args);
    assert_eq!(code(&out), 3, "{out:?}");

    // --no-cache computes without touching the corrupt cache.
    let mut no_cache = args.to_vec();
    no_cache.push("--no-cache");
    let out = mom(dir.path(), &no_cache);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "20");
}

#[test]
fn no_cache_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &["value", "--k", "1", "--beta", "1", "--n", "5", "--no-cache"],
    );
    assert_eq!(code(&out), 0);
    assert!(!dir.path().join("records.jsonl").exists());
}

#[test]
fn poly_text_and_latex() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(dir.path(), &["poly", "--k", "1", "--beta", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next().unwrap(), "N + 1");

    let out = mom(
        dir.path(),
        &["poly", "--k", "2", "--beta", "1", "--format", "latex"],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "\\frac{1}{6}(N+1)(N+2)(N+3)");
}

#[test]
fn poly_json_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &["poly", "--k", "1", "--beta", "2", "--format", "json"],
    );
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["degree"], 4);
    let coeffs: Vec<String> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let num = c["num"].as_str().unwrap();
            let den = c["den"].as_str().unwrap();
            if den == "1" {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        })
        .collect();
    assert_eq!(coeffs, ["1", "7/3", "23/12", "2/3", "1/12"]);
    assert_eq!(
        doc["factors"].as_array().unwrap()[0].as_str().unwrap(),
        "1/12"
    );
}

#[test]
fn poly_json_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &["poly", "--k", "2", "--beta", "1", "--format", "json"],
    );
    assert_eq!(code(&out), 0);
    // Field order mirrors the emitted document; `serde_json::Value` would
    // re-sort keys and defeat the byte-identity check.
    #[derive(serde::Serialize, serde::Deserialize)]
    struct Doc {
        k: u32,
        beta: u32,
        method: String,
        degree: u64,
        coefficients: Vec<Coeff>,
        factors: Vec<String>,
        elapsed_ms: u128,
    }
    #[derive(serde::Serialize, serde::Deserialize)]
    struct Coeff {
        num: String,
        den: String,
    }
    let rendered = stdout(&out).trim().to_string();
    let doc: Doc = serde_json::from_str(&rendered).unwrap();
    assert_eq!(serde_json::to_string(&doc).unwrap(), rendered);
}

#[test]
fn table_csv_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &["table", "--k", "1", "--beta", "1", "--n-range", "0..3"],
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(
        lines,
        ["k,beta,n,value", "1,1,0,1", "1,1,1,2", "1,1,2,3", "1,1,3,4"]
    );

    let out = mom(
        dir.path(),
        &["table", "--k", "2", "--beta", "1", "--n-range", "0..2"],
    );
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(values, ["1", "4", "10"]);

    let out = mom(
        dir.path(),
        &["table", "--k", "3", "--beta", "1", "--n-range", "1..1"],
    );
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "3,1,1,8");
}

#[test]
fn verify_fast_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = mom(
        dir.path(),
        &["verify", "--level", "fast", "--format", "json"],
    );
    assert_eq!(code(&out), 0, "{out:?}");
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["all_passed"], true);
    assert!(!doc["checks"].as_array().unwrap().is_empty());
}
