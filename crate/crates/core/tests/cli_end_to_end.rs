use std::process::{Command, Output};

use serde_json::Value;

/// Oracle runs here use a lighter grid than the library default; the
/// acceptance target exercises the full default.
const TEST_GRID_N: &str = "1200";

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .env("SPECTRA_DEFAULT_GRID_N", TEST_GRID_N)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

const SCARF: [&str; 6] = ["--family", "scarf2", "--v1", "9.75", "--v2", "6"];

fn with<'a>(cmd: &'a str, base: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(base);
    v.extend_from_slice(extra);
    v
}

#[test]
fn analyze_scarf_levels() {
    let out = spectra(&with("analyze", &SCARF, &[]));
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let levels: Vec<(i64, f64)> = doc["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["epsilon"].as_i64().unwrap(), l["re"].as_f64().unwrap()))
        .collect();
    assert_eq!(levels, vec![(1, -6.25), (1, -2.25), (1, -0.25), (-1, -0.25)]);
    assert_eq!(doc["classification"], "AllReal");
    assert_eq!(doc["pt_symmetric"], true);
}

#[test]
fn analyze_morse_ab() {
    let out = spectra(&["analyze", "--family", "morse-ab", "--A", "1", "--B", "1", "--gamma-p", "3", "--delta-p", "3"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["classification"], "AllReal");
    assert_eq!(doc["levels"].as_array().unwrap().len(), 1);
    assert_eq!(doc["levels"][0]["re"].as_f64().unwrap(), -1.0);
}

#[test]
fn analyze_exit_codes() {
    let out = spectra(&["analyze", "--family", "scarf2", "--v1", "-1", "--v2", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let out = spectra(&["analyze", "--family", "scarf2", "--v1", "1"]);
    assert_eq!(code(&out), 2);

    // m_R < 1/2 on both series: no regular branch, empty document.
    let out = spectra(&["analyze", "--family", "scarf2", "--v1", "0", "--v2", "0.1"]);
    assert_eq!(code(&out), 3);
    let doc = json(&out);
    assert_eq!(doc["classification"], "Empty");
    assert!(doc["levels"].as_array().unwrap().is_empty());
}

#[test]
fn analyze_csv_output() {
    let out = spectra(&with("analyze", &SCARF, &["--format", "csv"]));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "epsilon,n,E_re,E_im\n1,0,-6.25,0\n1,1,-2.25,0\n1,2,-0.25,0\n-1,0,-0.25,0\n");
}

#[test]
fn scan_threshold_flip() {
    let out = spectra(&["scan", "--family", "scarf2", "--v1", "1", "--sweep", "v2", "--from", "0.1", "--to", "2.5", "--step", "0.05"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "swept_value,real_levels,complex_pairs,classification");
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    assert_eq!(rows.len(), 49);
    let values: Vec<f64> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[0] < w[1]));
    let first_broken = rows.iter().position(|r| r[3] == "BrokenConjugatePairs").unwrap();
    assert!((values[first_broken] - 1.3).abs() < 1e-12);
    assert!(rows[..first_broken].iter().all(|r| r[3] != "BrokenConjugatePairs"));
}

#[test]
fn scan_single_sample_and_bad_range() {
    let out = spectra(&["scan", "--family", "scarf2", "--v1", "1", "--sweep", "v2", "--from", "2", "--to", "2", "--step", "0.1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = spectra(&["scan", "--family", "scarf2", "--v1", "1", "--sweep", "v2", "--from", "2", "--to", "1", "--step", "0.1"]);
    assert_eq!(code(&out), 2);
    let out = spectra(&["scan", "--family", "scarf2", "--v1", "1", "--sweep", "v2", "--from", "1", "--to", "2", "--step", "0"]);
    assert_eq!(code(&out), 2);
    let out = spectra(&["scan", "--family", "scarf2", "--v1", "1", "--sweep", "bogus", "--from", "1", "--to", "2", "--step", "0.1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn scan_morse_delta() {
    let out = spectra(&[
        "scan", "--family", "morse-ab", "--A", "1", "--B", "1", "--gamma-p", "3", "--sweep", "delta-p",
        "--from", "2", "--to", "4", "--step", "0.5",
    ]);
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let real = cols[3] == "AllReal";
        assert_eq!(real, cols[0] == "3", "{line}");
    }
}

#[test]
fn verify_real_and_broken_phases() {
    let out = spectra(&with("verify", &SCARF, &[]));
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.starts_with("epsilon,n,E_closed_re,E_closed_im,E_numeric_re,E_numeric_im,abs_error,boundary_decay,matched\n"));
    assert_eq!(text.lines().filter(|l| l.ends_with(",true")).count(), 4);

    let out = spectra(&["verify", "--family", "scarf2", "--v1", "0", "--v2", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["all_matched"], true);
    assert_eq!(doc["levels"].as_array().unwrap().len(), 2);
    assert_eq!(doc["grid"]["n_points"], 1200);
}

#[test]
fn verify_tiny_grid_is_unmatched() {
    let out = spectra(&with("verify", &SCARF, &["--n-points", "64"]));
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).lines().skip(1).any(|l| l.ends_with(",false")));
}

#[test]
fn wavefunction_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi.csv");
    let path_str = path.to_str().unwrap();
    let out = spectra(&with("wavefunction", &SCARF, &["--epsilon", "1", "--n", "0", "--output", path_str]));
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,re_psi,im_psi\n"));
    assert!(text.lines().any(|l| l == "0,1,0"), "psi(0) = 1 exactly");

    let out = spectra(&with("verify", &SCARF, &["--from-file", path_str, "--epsilon", "1", "--n", "0"]));
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).ends_with(",true\n"));

    // The same profile is not an eigenfunction at the next level.
    let out = spectra(&with("verify", &SCARF, &["--from-file", path_str, "--epsilon", "1", "--n", "1"]));
    assert_eq!(code(&out), 4);

    for n in ["1", "2"] {
        let p = dir.path().join(format!("psi{n}.csv"));
        let ps = p.to_str().unwrap();
        assert_eq!(code(&spectra(&with("wavefunction", &SCARF, &["--n", n, "--output", ps]))), 0);
        let out = spectra(&with("verify", &SCARF, &["--from-file", ps, "--n", n]));
        assert_eq!(code(&out), 0, "n = {n}: {}", stdout(&out));
    }
}

#[test]
fn wavefunction_missing_level() {
    assert_eq!(code(&spectra(&with("wavefunction", &SCARF, &["--n", "3"]))), 2);
    assert_eq!(code(&spectra(&with("wavefunction", &SCARF, &["--epsilon", "-1", "--n", "1"]))), 2);
    assert_eq!(code(&spectra(&with("wavefunction", &SCARF, &["--epsilon", "0"]))), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        with("analyze", &SCARF, &[]),
        with("scan", &SCARF, &["--sweep", "v2", "--from", "1", "--to", "12", "--step", "0.5"]),
        with("wavefunction", &SCARF, &["--n", "2"]),
        with("verify", &SCARF, &["--n-points", "300", "--format", "json"]),
    ] {
        let a = spectra(&args);
        let b = spectra(&args);
        assert_eq!(code(&a), code(&b));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
