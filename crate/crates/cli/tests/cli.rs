//! End-to-end checks of the binary: exit codes, deterministic output, and
//! schema round-trips.

use std::process::{Command, Output};

fn afflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_afflag"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_passes_on_small_group() {
    let out = afflag(&[
        "verify", "--group", "A1", "--maxlen", "4", "--trials", "20", "--seed", "42",
    ]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rng=chacha20"));
    assert!(text.contains("quadric-cone"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_skips_ring_suites_on_g2() {
    let out = afflag(&["verify", "--group", "G2", "--maxlen", "4", "--trials", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("SKIPPED"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn invalid_group_is_usage_error() {
    let out = afflag(&["verify", "--group", "XZ9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kappa_zero_rejected_for_moment() {
    let out = afflag(&["moment", "--group", "A1", "--chi", "0", "--kappa", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_level_and_weight_accepted() {
    let out = afflag(&["moment", "--group", "A1", "--chi", "-2", "--kappa", "-1", "--maxlen", "2"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["kappa"], -1);
    for p in value["points"].as_array().unwrap() {
        assert_eq!(p["residual"], "0");
    }
}

#[test]
fn identical_config_gives_identical_bytes() {
    let args = [
        "verify", "--group", "A2", "--maxlen", "4", "--trials", "30", "--seed", "7",
    ];
    let a = afflag(&args);
    let b = afflag(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());

    let margs = [
        "moment", "--group", "B2", "--chi", "1,0", "--kappa", "2", "--maxlen", "3",
    ];
    let a = afflag(&margs);
    let b = afflag(&margs);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn moment_json_round_trips_byte_identically() {
    let out = afflag(&[
        "moment", "--group", "A1", "--chi", "1", "--kappa", "1", "--maxlen", "4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut reserialized = serde_json::to_string_pretty(&value).unwrap();
    reserialized.push('\n');
    assert_eq!(text, reserialized);

    // schema shape
    assert_eq!(value["group"], "A1");
    assert_eq!(value["kappa"], 1);
    let points = value["points"].as_array().unwrap();
    assert_eq!(points.len(), 9);
    assert_eq!(points[0]["m0"], "0");
    assert_eq!(points[0]["m1"][0], "1");
    for p in points {
        assert_eq!(p["residual"], "0");
    }
}

#[test]
fn enumerate_counts_and_signs() {
    let out = afflag(&[
        "enumerate",
        "--group",
        "A1",
        "--maxlen",
        "1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4); // header + 3 rows
    assert_eq!(lines[0], "length,lambda,w,sign");
    let signs: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(signs, vec!["1", "-1", "-1"]);

    let out = afflag(&["enumerate", "--group", "A2", "--maxlen", "1"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn moment_csv_has_lf_endings_and_header() {
    let out = afflag(&[
        "moment", "--group", "A1", "--chi", "0", "--kappa", "1", "--maxlen", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "length,lambda,w,m0,m1,residual");
    assert_eq!(lines.len(), 6); // header + 5 rows at maxlen 2
}

#[test]
fn writes_output_file() {
    let dir = std::env::temp_dir().join("afflag-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cloud.json");
    let out = afflag(&[
        "moment",
        "--group",
        "A1",
        "--chi",
        "0",
        "--kappa",
        "1",
        "--maxlen",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let data = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&data).unwrap();
    assert_eq!(value["points"].as_array().unwrap().len(), 5);
    std::fs::remove_file(&path).ok();
}
