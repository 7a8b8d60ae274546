use std::io::Write;

use qcompare::cli::{run, GAIN_GRID_HEADER};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qcompare").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = invoke(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, v)
}

fn write_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn solve2_json_reports_closed_forms() {
    let (code, v) = json(&["solve2", "--q1", "0.5", "--costheta", "0.5", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["p_opt"].as_f64().unwrap(), 0.5);
    assert_eq!(v["p_sep"].as_f64().unwrap(), 0.25);
    assert_eq!(v["gain"].as_f64().unwrap(), 0.25);
    assert_eq!(v["branch"], "holds");
    assert!((v["alpha"].as_f64().unwrap() - 5.0 / 9.0).abs() < 1e-11);
    let fa = &v["povm"]["F_a"];
    assert_eq!(fa.as_array().unwrap().len(), 4);
}

#[test]
fn solve2_human_and_csv() {
    let (code, out, _) = invoke(&["solve2", "--q1", "0.9", "--costheta", "0.2"]);
    assert_eq!(code, 0);
    assert!(out.contains("p_opt       0.846325"));
    let (code, out, _) = invoke(&["solve2", "--q1", "0.9", "--costheta", "0.2", "--csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("field,value"));
    assert!(out.lines().any(|l| l == "p_sep,0.7744"));
}

#[test]
fn solve2_simulation_agrees() {
    let (code, v) = json(&[
        "solve2",
        "--q1",
        "0.3",
        "--costheta",
        "0.6",
        "--json",
        "--simulate",
        "50000",
        "--seed",
        "7",
        "--shards",
        "3",
    ]);
    assert_eq!(code, 0);
    for name in ["optimal", "separable"] {
        let sim = &v["simulation"][name];
        assert_eq!(sim["error_count"], 0);
        assert!(sim["deviation_sigmas"].as_f64().unwrap() < 5.0);
    }
}

#[test]
fn solve2_rejects_bad_parameters() {
    assert_eq!(invoke(&["solve2", "--q1", "0.5", "--costheta", "1.2"]).0, 2);
    assert_eq!(invoke(&["solve2", "--q1", "0", "--costheta", "0.5"]).0, 2);
    assert_eq!(invoke(&["solve2", "--q1", "0.5", "--costheta", "1"]).0, 2);
    assert_eq!(invoke(&["solve2", "--q1", "0.5"]).0, 2);
    assert_eq!(invoke(&["solve2", "--q1", "x", "--costheta", "0.5"]).0, 2);
    assert_eq!(invoke(&["bogus"]).0, 2);
}

#[test]
fn solve2_limits_on_request() {
    let (code, v) = json(&[
        "solve2",
        "--q1",
        "0.5",
        "--costheta",
        "0",
        "--allow-limit",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["p_opt"].as_f64().unwrap(), 1.0);
    assert_eq!(v["limit"], true);
}

#[test]
fn gain_grid_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gain.csv");
    let (code, out, _) = invoke(&[
        "gain-grid",
        "--steps",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("400 rows"));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(GAIN_GRID_HEADER));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 400);
    for row in &rows {
        assert_eq!(row.len(), 7);
        let p_opt: f64 = row[2].parse().unwrap();
        let p_sep: f64 = row[3].parse().unwrap();
        let gain: f64 = row[4].parse().unwrap();
        assert!((p_opt - p_sep - gain).abs() < 1e-11);
        assert!(row[5] == "0" || row[5] == "1");
    }
    let missing = dir.path().join("no/such/dir/gain.csv");
    assert_eq!(
        invoke(&[
            "gain-grid",
            "--steps",
            "4",
            "--out",
            missing.to_str().unwrap()
        ])
        .0,
        2
    );
    assert_eq!(
        invoke(&["gain-grid", "--steps", "1", "--out", path.to_str().unwrap()]).0,
        2
    );
}

#[test]
fn solve3_inside_and_outside_region() {
    let (code, v) = json(&["solve3", "--costheta", "0.2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["region_ok"], true);
    assert_eq!(
        (
            v["dim_h_prime"].as_u64(),
            v["dim_kcap_a"].as_u64(),
            v["dim_kcap_b"].as_u64()
        ),
        (Some(6), Some(3), Some(0))
    );
    assert!((v["p_opt"].as_f64().unwrap() - 0.761155042799).abs() < 1e-11);
    let (code, v) = json(&["solve3", "--costheta", "0.6", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["region_ok"], false);
    assert!(v["p_opt"].is_null());
    let (code, out, _) = invoke(&["solve3", "--costheta", "0.6"]);
    assert_eq!(code, 0);
    assert!(out.contains("not available"));
    assert_eq!(invoke(&["solve3", "--costheta", "1.5"]).0, 2);
}

#[test]
fn feasible_pure_pair_with_witness() {
    let f = write_file(
        r#"{"dim": 2, "priors": [0.5, 0.5], "pure": true,
        "states": [[[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]]]}"#,
    );
    let (code, v) = json(&[
        "feasible",
        "--input",
        f.path().to_str().unwrap(),
        "--witness",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["comparable"], true);
    let table = v["witness"]["table"].as_array().unwrap();
    assert!(table[0][0].as_f64().unwrap() > 1e-9);
    assert!(table[0][1].as_f64().unwrap().abs() < 1e-9);
    assert!((v["witness"]["identification_p"].as_f64().unwrap() - 0.32).abs() < 1e-11);
}

#[test]
fn feasible_detects_dependent_states() {
    let f = write_file(
        r#"{"dim": 2, "priors": [0.3, 0.3, 0.4], "pure": true,
        "states": [[[1, 0], [0, 0]], [[0, 0], [1, 0]], [[0.6, 0], [0, 0.8]]]}"#,
    );
    let (code, out, _) = invoke(&["feasible", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("comparable: no"));
}

#[test]
fn feasible_mixed_formats() {
    // nested rows and flat row-major input describe the same ensemble
    let nested = write_file(
        r#"{"dim": 2, "priors": [0.5, 0.5], "states": [
        [[[0.5, 0], [0, 0.5]], [[0, -0.5], [0.5, 0]]],
        [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]]}"#,
    );
    let flat = write_file(
        r#"{"dim": 2, "priors": [0.5, 0.5], "states": [
        [[0.5, 0], [0, 0.5], [0, -0.5], [0.5, 0]],
        [[1, 0], [0, 0], [0, 0], [0, 0]]]}"#,
    );
    let (c1, v1) = json(&[
        "feasible",
        "--input",
        nested.path().to_str().unwrap(),
        "--json",
    ]);
    let (c2, v2) = json(&[
        "feasible",
        "--input",
        flat.path().to_str().unwrap(),
        "--json",
    ]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(v1, v2);
    // a full-rank state swallows the other support
    let full = write_file(
        r#"{"dim": 2, "priors": [0.5, 0.5], "states": [
        [[0.7, 0], [0, 0], [0, 0], [0.3, 0]],
        [[1, 0], [0, 0], [0, 0], [0, 0]]]}"#,
    );
    assert_eq!(
        invoke(&["feasible", "--input", full.path().to_str().unwrap()]).0,
        1
    );
}

#[test]
fn feasible_invalid_input() {
    let cases = [
        r#"{"dim": 2, "priors": [0.5, 0.5], "pure": true, "states": [[[1, 0], [0, 0]]]}"#,
        r#"{"dim": 2, "priors": [0.6, 0.6], "pure": true, "states": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}"#,
        r#"{"dim": 2, "priors": [0.5, 0.5], "pure": true, "states": [[[1, 0], [0, 0]], [[2, 0], [0, 0]]]}"#,
        r#"{"dim": 2, "priors": [0.5, 0.5], "pure": true, "states": [[[1, 0]], [[0, 0], [1, 0]]]}"#,
        r#"{"dim": 2, "priors": [1.0], "states": [[[1, 0], [0, 1], [0, 0], [0, 0]]]}"#,
        r#"{"dim": 2, "priors": [1.0], "states": "nope"}"#,
        r#"{"dim": 2, "#,
    ];
    for text in cases {
        let f = write_file(text);
        let (code, _, err) = invoke(&["feasible", "--input", f.path().to_str().unwrap()]);
        assert_eq!(code, 2, "{text}");
        assert!(err.starts_with("error:"), "{err}");
    }
    assert_eq!(
        invoke(&["feasible", "--input", "/definitely/not/here.json"]).0,
        2
    );
}
