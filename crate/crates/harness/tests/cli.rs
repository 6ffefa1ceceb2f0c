//! End-to-end CLI tests driving the `rmmld` binary.

use std::collections::BTreeSet;
use std::process::{Command, Output};

fn rmmld(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmmld"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn params_prints_the_published_parameters() {
    let out = rmmld(&["params", "-r", "2", "-m", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"r":2,"m":4,"n":16,"k":11,"d":4}"#
    );
}

#[test]
fn params_rejects_bad_parameters() {
    let out = rmmld(&["params", "-r", "4", "-m", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn encode_bottom_row_and_hex() {
    let out = rmmld(&["encode", "-r", "2", "-m", "4", "00000000001"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0001000100010001");

    let out = rmmld(&["encode", "-r", "2", "-m", "4", "--hex", "00000000001"]);
    assert_eq!(stdout(&out).trim(), "0x1111");
}

#[test]
fn decode_corrects_a_single_error() {
    // all-ones codeword (a0 = 1) with x2 flipped
    let out = rmmld(&[
        "decode", "-r", "2", "-m", "4", "--mode", "errors", "1011111111111111",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("message: 10000000000"), "{text}");
    assert!(text.contains("status: ok"), "{text}");
}

#[test]
fn decode_erasures_with_inline_markers() {
    let out = rmmld(&[
        "decode", "-r", "2", "-m", "4", "--mode", "erasures", "?111111111111111",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("message: 10000000000"), "{text}");
}

#[test]
fn decode_rejects_erasures_in_error_mode() {
    let out = rmmld(&[
        "decode", "-r", "2", "-m", "4", "--mode", "errors", "?111111111111111",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn families_sigma_one_matches_the_worked_example() {
    let out = rmmld(&["families", "-r", "2", "-m", "4", "--sigma", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["sigma"], serde_json::json!([1]));
    assert_eq!(doc["small"], serde_json::json!([1, 2]));
    assert_eq!(doc["lambda"], serde_json::json!(3));
    let got: BTreeSet<Vec<u64>> = doc["large"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            s.as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect()
        })
        .collect();
    let expected: BTreeSet<Vec<u64>> = [
        vec![3, 4, 5, 6, 7, 8],
        vec![3, 4, 9, 10, 11, 12],
        vec![5, 6, 9, 10, 13, 14],
        vec![5, 6, 11, 12, 15, 16],
        vec![3, 4, 13, 14, 15, 16],
        vec![7, 8, 9, 10, 15, 16],
        vec![7, 8, 11, 12, 13, 14],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected);
}

#[test]
fn families_without_sigma_dumps_all_symbols() {
    let out = rmmld(&["families", "-r", "1", "-m", "2"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = doc.as_array().unwrap();
    assert_eq!(arr.len(), 3);
    // a0 = x1 and a0 = x2 + x3 + x4
    assert_eq!(arr[0]["small"], serde_json::json!([1]));
    assert_eq!(arr[0]["large"], serde_json::json!([[2, 3, 4]]));
}

#[test]
fn verify_within_radius_exits_zero() {
    let out = rmmld(&[
        "verify", "errors", "-r", "2", "-m", "4", "--max-weight", "1", "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations=0"));
}

#[test]
fn verify_usage_errors_exit_two() {
    // Both --weight and --max-weight is a usage error (clap conflict).
    let out = rmmld(&[
        "verify", "errors", "-r", "2", "-m", "4", "--weight", "1", "--max-weight", "2",
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Sampled mode without a seed.
    let out = rmmld(&[
        "verify", "errors", "-r", "2", "-m", "4", "--weight", "1", "--samples", "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // Pattern cap exceeded.
    let out = rmmld(&[
        "verify", "erasures", "-r", "2", "-m", "5", "--max-weight", "7", "--exhaustive",
        "--pattern-cap", "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn beyond_radius_failures_report_but_do_not_fail_the_run() {
    let out = rmmld(&[
        "verify", "errors", "-r", "2", "-m", "4", "--weight", "2", "--exhaustive",
        "--messages", "random:4", "--seed", "9",
    ]);
    assert_eq!(out.status.code(), Some(0), "beyond-radius failures never abort");
    let text = stdout(&out);
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn json_reports_are_reproducible_modulo_timing() {
    let dir = std::env::temp_dir().join(format!("rmmld-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let out = rmmld(&[
            "verify", "errors", "-r", "2", "-m", "5", "--weight", "2", "--samples", "300",
            "--seed", "31", "--messages", "random:8", "--workers", "3", "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let mut ja: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let mut jb: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(ja["schema_version"], serde_json::json!(1));
    assert_eq!(ja["rng"]["algorithm"], serde_json::json!("chacha8"));
    ja["timing"] = serde_json::json!(null);
    jb["timing"] = serde_json::json!(null);
    assert_eq!(ja, jb);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn witnesses_replay_through_the_decode_subcommand() {
    let dir = std::env::temp_dir().join(format!("rmmld-replay-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("erasures.json");
    let out = rmmld(&[
        "verify", "erasures", "-r", "2", "-m", "4", "--weight", "4", "--exhaustive",
        "--messages", "zero", "--json", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "weight-d failures are not violations");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let witnesses = report["witnesses"].as_array().unwrap();
    assert!(!witnesses.is_empty());
    for w in witnesses.iter().take(3) {
        let received = w["received"].as_str().unwrap();
        let out = rmmld(&[
            "decode", "-r", "2", "-m", "4", "--mode", "erasures", "--json", received,
        ]);
        assert!(out.status.success());
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let blocked: Vec<String> = doc["per_symbol"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|s| s["unrecoverable"].as_bool().unwrap())
            .map(|s| s["label"].as_str().unwrap().to_string())
            .collect();
        let recorded: Vec<String> = w["blocked_symbols"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        assert_eq!(blocked, recorded, "witness does not replay: {w}");
        assert_eq!(doc["message"].as_str().unwrap(), w["decoded"].as_str().unwrap());
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn transversal_verify_and_csv_summary() {
    let dir = std::env::temp_dir().join(format!("rmmld-csv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("summary.csv");
    let out = rmmld(&[
        "verify", "transversal", "--max-m", "4", "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("m=4 dim(S)=1 flat_dim=3: construction=3 bruteforce=3 formula=3 ok"), "{text}");
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("kind,r,m,weight,"));
    assert!(csv_text.contains("transversal,-,-,-,20,"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sim_bsc_reports_estimates_and_tail() {
    let out = rmmld(&[
        "sim", "bsc", "-r", "2", "-m", "4", "-p", "0.02", "--trials", "4000", "--seed", "11",
        "--decoders", "mld,reed", "--json", "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let est = &doc["estimates"];
    let decoders: Vec<&str> = est["per_decoder"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["decoder"].as_str().unwrap())
        .collect();
    assert_eq!(decoders, vec!["mld", "reed"]);
    let fer = est["per_decoder"][0]["fer"].as_f64().unwrap();
    let tail = est["analytic_tail_beyond_radius"].as_f64().unwrap();
    // The decoder corrects every single error, so its FER cannot exceed
    // the probability of two or more flips by more than sampling noise.
    assert!(fer <= tail + 0.02, "fer={fer} tail={tail}");
}

#[test]
fn sim_bec_runs_with_mld_only() {
    let out = rmmld(&[
        "sim", "bec", "-r", "2", "-m", "4", "--epsilon", "0.1", "--trials", "2000",
        "--seed", "5", "--json", "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["kind"], serde_json::json!("sim-bec"));
    // Every witness (if any) must have erased at least d coordinates.
    for w in doc["witnesses"].as_array().unwrap() {
        assert!(w["weight"].as_u64().unwrap() >= 4);
    }
}

#[test]
fn encode_reads_stdin_when_no_argument() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_rmmld"))
        .args(["encode", "-r", "2", "-m", "4"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"00000000001\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0001000100010001");
}

#[test]
fn workers_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_rmmld"))
        .env("RMMLD_WORKERS", "2")
        .args([
            "verify", "errors", "-r", "1", "-m", "3", "--max-weight", "1", "--exhaustive",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out2 = rmmld(&[
        "verify", "errors", "-r", "1", "-m", "3", "--max-weight", "1", "--exhaustive",
        "--workers", "1",
    ]);
    assert_eq!(out2.status.code(), Some(0));
    // Same totals regardless of worker configuration.
    let line = |o: &Output| {
        stdout(o)
            .lines()
            .next()
            .unwrap()
            .split(" (")
            .next()
            .unwrap()
            .to_string()
    };
    assert_eq!(line(&out), line(&out2));
}
