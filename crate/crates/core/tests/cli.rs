//! Runs the `fano` binary end to end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const PAIR: &str =
    r#"{"resonances": [{"position": 0.0, "width": 0.1}, {"position": 0.5, "width": 1.0}], "delta": 0.0}"#;

fn sorted_names(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    v.sort();
    v
}

#[test]
fn fig1_writes_eight_traces() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("fig1");
    let o = fano(&["fig1", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let expected: Vec<String> = ['a', 'b', 'c', 'd']
        .iter()
        .flat_map(|t| [format!("fig1{t}_dashed.csv"), format!("fig1{t}_full.csv")])
        .collect();
    assert_eq!(sorted_names(&out), expected);
    let text = fs::read_to_string(out.join("fig1c_full.csv")).unwrap();
    assert_eq!(text.lines().next(), Some("energy,sigma"));
    assert_eq!(text.lines().count(), 1002);
}

#[test]
fn fig2_writes_six_traces_and_a_contour() {
    let tmp = TempDir::new().unwrap();
    let o = fano(&["fig2", "--n", "51", "--out", tmp.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(sorted_names(tmp.path()).len(), 7);
    let contour = fs::read_to_string(tmp.path().join("fig2_contour.csv")).unwrap();
    assert_eq!(contour.lines().count(), 1 + 181);
    assert_eq!(contour.lines().next().unwrap().split(',').count(), 1 + 51);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let tmp = TempDir::new().unwrap();
    let model = write(tmp.path(), "m.json", PAIR);
    let out = tmp.path().join("t.csv");
    let args = [
        "trace",
        "--model",
        model.to_str().unwrap(),
        "--n",
        "301",
        "--out",
        out.to_str().unwrap(),
    ];
    assert!(fano(&args).status.success());
    let first = fs::read(&out).unwrap();
    assert!(fano(&args).status.success());
    assert_eq!(first, fs::read(&out).unwrap());
}

#[test]
fn trace_to_stdout_honours_representation() {
    let tmp = TempDir::new().unwrap();
    let model = write(tmp.path(), "m.json", PAIR);
    let m = model.to_str().unwrap();
    let product = fano(&["trace", "--model", m, "--n", "11"]);
    let poles = fano(&["trace", "--model", m, "--n", "11", "--repr", "poles-dynamic"]);
    assert!(product.status.success() && poles.status.success());
    let parse = |o: &Output| -> Vec<f64> {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect()
    };
    let (a, b) = (parse(&product), parse(&poles));
    assert_eq!(a.len(), 11);
    assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-10));
}

#[test]
fn params_with_equal_widths_names_the_singularity() {
    let tmp = TempDir::new().unwrap();
    let model = write(
        tmp.path(),
        "m.json",
        r#"{"resonances": [{"position": 0.0, "width": 1.0}, {"position": 1.0, "width": 1.0}], "delta": 0.0}"#,
    );
    let out = tmp.path().join("p.json");
    let o = fano(&[
        "params",
        "--model",
        model.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("EqualWidthsSingularity"), "{}", stderr(&o));
    assert_eq!(stderr(&o).lines().count(), 1);
    assert!(!out.exists(), "no partial output on error");
}

#[test]
fn params_reports_negative_ak_without_failing() {
    let tmp = TempDir::new().unwrap();
    let model = write(
        tmp.path(),
        "m.json",
        r#"{"resonances": [{"position": 0.5, "width": 1.0}, {"position": 0.0, "width": 0.9}], "delta": 0.0}"#,
    );
    let o = fano(&["params", "--model", model.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["complex"].is_null());
    assert!(v["complex_error"].as_str().unwrap().starts_with("NegativeAk"));
    assert!(v["sum_rule_residual"].as_f64().unwrap().abs() < 1e-12);
    assert!((v["static"]["q"].as_f64().unwrap() - 10.0).abs() < 1e-12);
}

#[test]
fn qscan_writes_infinity_tokens_at_the_pole() {
    let tmp = TempDir::new().unwrap();
    // With delta = 0, q~_1 = eps_2 is finite everywhere; at delta = pi/2 the pole of
    // q~_1 sits at the broad resonance's position, which is a grid point here.
    let model = write(
        tmp.path(),
        "m.json",
        r#"{"resonances": [{"position": 0.0, "width": 0.1}, {"position": 0.5, "width": 1.0}], "delta": 1.5707963267948966}"#,
    );
    let o = fano(&[
        "qscan",
        "--model",
        model.to_str().unwrap(),
        "--emin",
        "-1",
        "--emax",
        "1",
        "--n",
        "5",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().next(), Some("energy,q"));
    assert!(
        text.lines().any(|l| l.ends_with(",inf") || l.ends_with(",-inf")),
        "{text}"
    );
}

#[test]
fn fit_recovers_a_synthetic_profile() {
    let tmp = TempDir::new().unwrap();
    let mut csv = String::from("energy,sigma\n");
    for i in 0..201 {
        let e = -5.0 + 0.05 * i as f64;
        let eps = 2.0 * e;
        csv.push_str(&format!("{e},{}\n", (2.0 + eps).powi(2) / (eps * eps + 1.0) + 0.1));
    }
    let data = write(tmp.path(), "d.csv", &csv);
    let o = fano(&["fit", "--data", data.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["converged"], serde_json::Value::Bool(true));
    assert!((v["model"]["q"].as_f64().unwrap() - 2.0).abs() < 1e-6);
}

#[test]
fn compare_lists_deviations_and_inapplicable_forms() {
    let tmp = TempDir::new().unwrap();
    let model = write(tmp.path(), "m.json", PAIR);
    let o = fano(&["compare", "--model", model.to_str().unwrap(), "--n", "201"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let devs = v["deviations"].as_array().unwrap();
    assert!(!devs.is_empty());
    assert!(devs.iter().all(|d| d["max_abs_dev"].as_f64().unwrap() < 1e-10));
    assert!(v["inapplicable"]
        .as_array()
        .unwrap()
        .iter()
        .any(|i| i["representation"] == "double-pole"));
}

#[test]
fn contour_has_one_row_per_phase() {
    let tmp = TempDir::new().unwrap();
    let model = write(tmp.path(), "m.json", PAIR);
    let o = fano(&[
        "contour",
        "--model",
        model.to_str().unwrap(),
        "--n",
        "21",
        "--ndelta",
        "7",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().count(), 8);
    for line in text.lines().skip(1) {
        let values: Vec<f64> = line.split(',').skip(1).map(|s| s.parse().unwrap()).collect();
        assert_eq!(values.len(), 21);
        assert!(values.iter().all(|&s| (0.0..=4.0 + 1e-12).contains(&s)));
    }
}

#[test]
fn missing_model_file_is_an_io_failure() {
    let o = fano(&["trace", "--model", "/nonexistent/model.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn malformed_model_is_invalid_input() {
    let tmp = TempDir::new().unwrap();
    let model = write(
        tmp.path(),
        "m.json",
        r#"{"resonances": [{"position": 0.0}], "delta": 0.0}"#,
    );
    let o = fano(&["trace", "--model", model.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_arguments_exit_with_one() {
    assert_eq!(fano(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fano(&["trace"]).status.code(), Some(1));
    assert_eq!(fano(&["fig1", "--out", "/tmp/x", "--n", "1"]).status.code(), Some(1));
    assert_eq!(fano(&["--help"]).status.code(), Some(0));
}
