use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use wavechan_core::bounds2d::{relative_bound_2d, BoundingGeometry2D};

fn scenario(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenarios")
        .join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn run(dir: &Path, cmd: &str, sc: &Value, extra: &[&str]) -> (Output, PathBuf) {
    let path = dir.join(format!("{cmd}.json"));
    std::fs::write(&path, serde_json::to_string_pretty(sc).unwrap()).unwrap();
    let out = dir.join(format!("{cmd}_out"));
    let o = Command::new(env!("CARGO_BIN_EXE_wavechan"))
        .arg(cmd)
        .arg("--scenario")
        .arg(&path)
        .arg("--out")
        .arg(&out)
        .args(extra)
        .output()
        .unwrap();
    (o, out)
}

fn ok(dir: &Path, cmd: &str, sc: &Value, extra: &[&str]) -> PathBuf {
    let (o, out) = run(dir, cmd, sc, extra);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header
        .iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn bounds_2d_column_is_the_relative_bound() {
    let dir = tempfile::tempdir().unwrap();
    let mut sc = scenario("fig2b");
    sc["configurations"] = json!([]);
    sc["monotonicity"] = json!([]);
    let out = ok(dir.path(), "bounds", &sc, &["--max-n", "30"]);
    let (h, rows) = read_csv(&out.join("bounds2d.csv"));
    assert_eq!(rows.len(), 61);
    let g = BoundingGeometry2D::new(2.0 * PI, 0.5, 0.5, 1.0, 0.5, 0.5).unwrap();
    for r in &rows {
        let q: i64 = r[col(&h, "label")].parse().unwrap();
        let b: f64 = r[col(&h, "bound")].parse().unwrap();
        assert_eq!(b, relative_bound_2d(q, &g).unwrap(), "q = {q}");
        let deg: usize = r[col(&h, "degeneracy")].parse().unwrap();
        assert_eq!(deg, if q == 0 { 1 } else { 2 });
        assert_eq!(r[col(&h, "asymptote")].is_empty(), q == 0);
    }
    let meta: Value =
        serde_json::from_slice(&std::fs::read(out.join("metadata.json")).unwrap()).unwrap();
    assert_eq!(meta["d_max_convention"], "d_max = d + 2 R_s + 2 R_r");
}

#[test]
fn bounds_3d_staircase_steps() {
    let dir = tempfile::tempdir().unwrap();
    let mut sc = scenario("fig2c");
    sc["configurations"] = json!([]);
    let out = ok(dir.path(), "bounds", &sc, &["--max-n", "12"]);
    let (h, rows) = read_csv(&out.join("bounds3d.csv"));
    let mut i = 0;
    while i < rows.len() {
        let label = &rows[i][col(&h, "label")];
        let parts: Vec<&str> = label.split('/').collect();
        let (n, j) = (parts[0], parts[2]);
        let width = rows[i..]
            .iter()
            .take_while(|r| {
                let p: Vec<&str> = r[col(&h, "label")].split('/').collect();
                p[0] == n && p[2] == j
            })
            .count();
        let n: usize = n.parse().unwrap();
        assert_eq!(width, 2 * n + 1, "{label}");
        let step: Vec<&String> = rows[i..i + width]
            .iter()
            .map(|r| &r[col(&h, "bound")])
            .collect();
        assert!(step.iter().all(|b| *b == step[0]));
        i += width;
    }
    // (n, 1) and (n, 2) for n = 1..=12 and the (0, 2) channel
    assert_eq!(
        rows.len(),
        1 + (1..=12).map(|n| 2 * (2 * n + 1)).sum::<usize>()
    );
}

#[test]
fn smfig1_writes_both_normalizations() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(
        dir.path(),
        "bounds",
        &scenario("smfig1"),
        &["--resolution", "0.1"],
    );
    let (h, rows) = read_csv(&out.join("bounds2d_max.csv"));
    assert_eq!(rows[0][col(&h, "bound")].parse::<f64>().unwrap(), 1.0);
    assert_eq!(rows[0][col(&h, "shell_shell")].parse::<f64>().unwrap(), 1.0);
    let (h, rows) = read_csv(&out.join("bounds2d_q0.csv"));
    let zero = rows.iter().find(|r| r[col(&h, "label")] == "0").unwrap();
    assert_eq!(zero[col(&h, "bound")].parse::<f64>().unwrap(), 1.0);
    let (h, rows) = read_csv(&out.join("bounds2d.csv"));
    let total: f64 = rows
        .iter()
        .filter_map(|r| r[col(&h, "cylinder_shell")].parse::<f64>().ok())
        .sum();
    assert!((total - 1.0).abs() < 1e-12);
}

#[test]
fn count_rows_and_heuristic() {
    let dir = tempfile::tempdir().unwrap();
    let mut sc = scenario("fig3");
    sc["sweep"]["radii"] = json!([1.0, 2.0]);
    let out = ok(dir.path(), "count", &sc, &[]);
    let (h, rows) = read_csv(&out.join("count.csv"));
    assert_eq!(rows.len(), 6);
    for r in &rows {
        let rr: f64 = r[col(&h, "R_over_lambda")].parse().unwrap();
        let nsh: f64 = r[col(&h, "N_SH")].parse().unwrap();
        assert!((nsh - 8.0 * PI * PI * rr * rr).abs() < 1e-9 * nsh);
    }
    let counts: Vec<usize> = rows
        .iter()
        .map(|r| r[col(&h, "bound_count")].parse().unwrap())
        .collect();
    // more channels at lower thresholds
    assert!(counts[0] <= counts[1] && counts[1] <= counts[2]);
    let fit: Value =
        serde_json::from_slice(&std::fs::read(out.join("count_fit.json")).unwrap()).unwrap();
    assert_eq!(fit.as_array().unwrap().len(), 3);
}

#[test]
fn capacity_columns() {
    let dir = tempfile::tempdir().unwrap();
    let mut sc = scenario("fig4");
    sc["sweep"]["radii"] = json!([0.5, 2.0]);
    let out = ok(dir.path(), "capacity", &sc, &[]);
    let (h, rows) = read_csv(&out.join("capacity.csv"));
    assert_eq!(rows.len(), 2 * 2 * 4);
    for r in &rows {
        let exact: f64 = r[col(&h, "capacity_exact")].parse().unwrap();
        assert!(exact >= 0.0);
        if r[col(&h, "regime")] == "low_snr" {
            let rr: f64 = r[col(&h, "R_over_lambda")].parse().unwrap();
            let snr: f64 = r[col(&h, "SNR")].parse().unwrap();
            let want = snr * std::f64::consts::LOG2_E * 4.0 * PI * PI * 0.5 * rr;
            let got: f64 = r[col(&h, "capacity_asymptote")].parse().unwrap();
            assert!((got - want).abs() < 1e-12 * want);
            assert_eq!(r[col(&h, "N_antenna")], "inf");
        }
    }
}

#[test]
fn oracle_spectra_and_monotonicity() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(
        dir.path(),
        "oracle",
        &scenario("fig2b"),
        &["--resolution", "0.05"],
    );
    let (h, rows) = read_csv(&out.join("spectrum_shell_shell.csv"));
    for r in &rows {
        let (s, b) = (&r[col(&h, "sum_normalized")], &r[col(&h, "bound")]);
        let (s, b): (f64, Option<f64>) = (s.parse().unwrap(), b.parse().ok());
        if let Some(b) = b.filter(|b| *b >= 1e-20) {
            assert!(s <= b * (1.0 + 1e-9), "{s} > {b}");
        }
    }
    assert!(!rows[0][col(&h, "harmonic")].is_empty());
    let (_, mono) = read_csv(&out.join("monotonicity_half_square.csv"));
    assert!(mono.iter().all(|r| r[3].parse::<f64>().unwrap() >= -1e-10));
    let meta: Value =
        serde_json::from_slice(&std::fs::read(out.join("metadata.json")).unwrap()).unwrap();
    assert_eq!(meta["seed"], 1);
    assert_eq!(meta["configurations"][0]["source_points"], 15 * 15);
    assert_eq!(meta["monotonicity"][0]["passed"], true);
}

#[test]
fn outputs_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let sc = scenario("fig3");
    let a = ok(dir.path(), "count", &sc, &[]);
    let first = std::fs::read(a.join("count.csv")).unwrap();
    std::fs::remove_dir_all(&a).unwrap();
    let b = ok(dir.path(), "count", &sc, &[]);
    assert_eq!(first, std::fs::read(b.join("count.csv")).unwrap());

    let mut sc = scenario("fig2b");
    sc["configurations"] = json!([]);
    sc["monotonicity"] = json!([]);
    let out = ok(dir.path(), "bounds", &sc, &[]);
    let (h, rows) = read_csv(&out.join("bounds2d.csv"));
    for r in &rows {
        let text = &r[col(&h, "bound")];
        let v: f64 = text.parse().unwrap();
        assert_eq!(&format!("{v:.16e}"), text);
    }
}

#[test]
fn bad_scenarios_fail_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let mut sc = scenario("fig3");
    sc["geometry"]["radius"] = json!(1.0);
    let (o, out) = run(dir.path(), "count", &sc, &[]);
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("radius"), "{err}");
    assert!(!out.exists());

    let mut sc = scenario("fig3");
    sc["thresholds"] = json!([0.0]);
    let (o, out) = run(dir.path(), "count", &sc, &[]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("thresholds"));
    assert!(!out.exists());

    // a 2D scenario cannot drive the 3D capacity command
    let (o, out) = run(dir.path(), "capacity", &scenario("fig2b"), &[]);
    assert!(!o.status.success());
    assert!(!out.exists());
}

#[test]
fn shipped_scenarios_parse() {
    for name in ["fig2b", "fig2c", "fig3", "fig4", "smfig1", "smfig2"] {
        let text = serde_json::to_string(&scenario(name)).unwrap();
        wavechan_cli::scenario::Scenario::parse(&text).unwrap_or_else(|e| panic!("{name}: {e:#}"));
    }
}
