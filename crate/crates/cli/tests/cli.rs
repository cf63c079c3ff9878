use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn offcenter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_offcenter")).args(args).output().expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = offcenter(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    fn parse(text: &str) -> Self {
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        let header = lines.next().expect("header row").split(',').map(str::to_owned).collect();
        let rows = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
        Self { header, rows }
    }

    fn col(&self, name: &str) -> Vec<String> {
        let j = self.header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    fn num(&self, name: &str) -> Vec<f64> {
        self.col(name).iter().map(|s| s.parse().unwrap()).collect()
    }

    fn provenance(text: &str) -> HashMap<String, String> {
        text.lines()
            .filter_map(|l| l.strip_prefix("# "))
            .filter_map(|l| l.split_once(": "))
            .map(|(k, v)| (k.to_owned(), v.to_owned()))
            .collect()
    }
}

#[test]
fn free_even_levels() {
    let csv = Csv::parse(&stdout_ok(&["levels", "--g", "0", "--c", "0.75", "--parity", "even", "--count", "3"]));
    assert_eq!(csv.header, ["n", "parity", "epsilon", "Q", "kind"]);
    let eps = csv.num("epsilon");
    for (e, want) in eps.iter().zip([0.5, 2.5, 4.5]) {
        assert!((e - want).abs() < 1e-9);
    }
}

#[test]
fn dark_row_is_labelled() {
    let csv = Csv::parse(&stdout_ok(&["levels", "--g", "10", "--c", "1", "--parity", "even", "--count", "2"]));
    assert_eq!(csv.col("kind")[1], "dark");
    assert_eq!(csv.col("epsilon")[1], "2.5");
}

#[test]
fn levels_match_oracle() {
    let lv = Csv::parse(&stdout_ok(&["levels", "--g", "10", "--c", "0.75", "--count", "6"]));
    let or = Csv::parse(&stdout_ok(&["oracle", "--g", "10", "--c", "0.75", "--L", "10", "--k", "6"]));
    for (a, b) in lv.num("epsilon").iter().zip(or.num("epsilon")) {
        assert!((a - b).abs() < 5e-3, "{a} vs {b}");
    }
}

#[test]
fn twelve_digit_numbers_and_single_header() {
    let text = stdout_ok(&["levels", "--g", "10", "--c", "0.75", "--count", "2"]);
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body.iter().filter(|l| l.starts_with("n,")).count(), 1);
    for v in Csv::parse(&text).col("epsilon") {
        let digits = v.chars().filter(char::is_ascii_digit).count();
        assert!(digits <= 12 && !v.contains(' '), "{v}");
    }
    let prov = Csv::provenance(&text);
    assert_eq!(prov["g"], "10");
    assert_eq!(prov["schema_version"], "1.0");
    assert_eq!(prov["config.q_max"], "40");
}

fn inside_fraction(args: &[&str], c: f64) -> f64 {
    let csv = Csv::parse(&stdout_ok(args));
    let dx: f64 = 0.01;
    csv.num("x").iter().zip(csv.num("phi")).filter(|(x, _)| x.abs() < c).map(|(_, p)| p * p * dx).sum()
}

#[test]
fn ground_state_at_zero_coupling_peaks_at_origin() {
    let text = stdout_ok(&["wavefunction", "--g", "0", "--c", "0.75", "--n", "0"]);
    assert_eq!(Csv::provenance(&text)["epsilon"], "0.5");
    let csv = Csv::parse(&text);
    let (x, phi) = (csv.num("x"), csv.num("phi"));
    let imax = (0..phi.len()).max_by(|&a, &b| phi[a].total_cmp(&phi[b])).unwrap();
    assert!(x[imax].abs() < 1e-9);
}

#[test]
fn strong_walls_trap_or_expel_the_ground_state() {
    assert!(inside_fraction(&["wavefunction", "--g", "100", "--c", "1.5", "--n", "0"], 1.5) >= 0.99);
    assert!(inside_fraction(&["wavefunction", "--g", "20", "--c", "0.75", "--n", "0"], 0.75) <= 0.05);
}

#[test]
fn dark_table() {
    let csv = Csv::parse(&stdout_ok(&["dark", "--n-max", "4", "--c-max", "3"]));
    let n: Vec<String> = csv.col("n");
    let c = csv.num("c_star");
    assert!(c.windows(2).all(|w| w[0] <= w[1]));
    let has = |m: &str, v: f64| n.iter().zip(&c).any(|(a, b)| a == m && (b - v).abs() < 5e-5);
    assert!(has("2", 1.0));
    assert!(has("3", 1.7321));
    assert!(has("4", 0.7420));
    assert!(has("4", 2.3344));
}

#[test]
fn oracle_free_spectrum() {
    let csv = Csv::parse(&stdout_ok(&["oracle", "--g", "0", "--c", "0", "--L", "10", "--k", "4"]));
    for (k, e) in csv.num("epsilon").iter().enumerate() {
        assert!((e - k as f64 - 0.5).abs() < 5e-4);
    }
    assert!(csv.num("cert_err").iter().all(|e| *e >= 0.0 && *e < 5e-3));
}

#[test]
fn oracle_approaches_hard_walls() {
    let csv = Csv::parse(&stdout_ok(&["oracle", "--g", "1e6", "--c", "1.5", "--k", "4"]));
    let walls = offcenter_core::merged_spectrum(1.5, 4).unwrap();
    for (e, w) in csv.num("epsilon").iter().zip(&walls) {
        assert!((e - w.level.epsilon).abs() < 1e-2, "{e} vs {}", w.level.epsilon);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(offcenter(&["levels", "--g", "1"]).status.code(), Some(2));
    assert_eq!(offcenter(&["levels", "--g", "1", "--c", "0.75", "--count", "0"]).status.code(), Some(2));
    assert_eq!(offcenter(&["dark", "--n-max", "0"]).status.code(), Some(2));
    assert_eq!(offcenter(&["oracle", "--g", "1", "--c", "1", "--h", "0.01"]).status.code(), Some(2));
    assert_eq!(offcenter(&["sweep", "--mode", "g"]).status.code(), Some(2));
    let out = offcenter(&["levels", "--g", "1", "--c", "0.75", "--parity", "even", "--count", "30"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
}

fn run_in(dir: &Path, args: &[&str]) {
    let mut full: Vec<&str> = args.to_vec();
    let d = dir.to_str().unwrap();
    full.extend(["--out", d]);
    stdout_ok(&full);
}

#[test]
fn infinite_sweep_crossings_are_dark_points() {
    let tmp = tempfile::tempdir().unwrap();
    run_in(tmp.path(), &["sweep", "--mode", "infinite", "--count", "6"]);
    let text = fs::read_to_string(tmp.path().join("sweep_infinite_crossings.csv")).unwrap();
    let x = Csv::parse(&text);
    let (cs, ns) = (x.num("c"), x.col("n"));
    let found: Vec<(usize, f64)> = ns.iter().map(|n| n.parse().unwrap()).zip(cs).collect();

    // dark points whose level is carried by the tracked inside and outside columns
    let m = 3;
    let expected: Vec<(usize, f64)> = offcenter_core::dark_points(40, 4.0)
        .into_iter()
        .filter(|p| p.c_star >= 0.05)
        .filter(|p| {
            let e = p.n as f64 + 0.5;
            let inside = offcenter_core::inside_levels(p.c_star, p.parity, m).unwrap();
            let outside = offcenter_core::outside_levels(p.c_star, m).unwrap();
            inside.iter().any(|l| (l.epsilon - e).abs() < 1e-8) && outside.iter().any(|l| (l.epsilon - e).abs() < 1e-8)
        })
        .map(|p| (p.n, p.c_star))
        .collect();
    assert_eq!(found.len(), expected.len(), "{found:?} vs {expected:?}");
    for ((n, c), (dn, dc)) in found.iter().zip(&expected) {
        assert_eq!(n, dn);
        assert!((c - dc).abs() < 1e-9);
    }

    let main = Csv::parse(&fs::read_to_string(tmp.path().join("sweep_infinite.csv")).unwrap());
    assert_eq!(main.rows.len(), 160);
    assert!(main.col("regime").iter().all(|r| ["E", "C", "T"].contains(&r.as_str())));
}

#[test]
fn json_round_trip_reproduces_csv() {
    let tmp = tempfile::tempdir().unwrap();
    let (csv, json, re) = (tmp.path().join("csv"), tmp.path().join("json"), tmp.path().join("re"));
    let args = ["sweep", "--mode", "c", "--g", "10", "--from", "0.5", "--to", "1.5", "--points", "6", "--count", "4"];
    run_in(&csv, &args);
    let mut jargs = args.to_vec();
    jargs.extend(["--format", "json"]);
    run_in(&json, &jargs);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(json.join("sweep_c.json")).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], "1.0");
    assert!(doc["params"].is_object() && doc["data"]["levels"].is_array());
    stdout_ok(&["verify", json.join("sweep_c.json").to_str().unwrap(), "--out", re.to_str().unwrap()]);
    assert_eq!(fs::read(csv.join("sweep_c.csv")).unwrap(), fs::read(re.join("sweep_c.csv")).unwrap());

    let lv = tmp.path().join("levels.json");
    let lcsv = tmp.path().join("levels.csv");
    fs::write(&lv, stdout_ok(&["levels", "--g", "-1", "--c", "0.75", "--format", "json"])).unwrap();
    fs::write(&lcsv, stdout_ok(&["levels", "--g", "-1", "--c", "0.75"])).unwrap();
    let ok = offcenter(&["verify", lv.to_str().unwrap(), "--expect", lcsv.to_str().unwrap()]);
    assert!(ok.status.success());
    fs::write(&lcsv, "tampered\n").unwrap();
    let bad = offcenter(&["verify", lv.to_str().unwrap(), "--expect", lcsv.to_str().unwrap()]);
    assert!(!bad.status.success());
}

#[test]
fn width_sweep_has_three_curves() {
    let tmp = tempfile::tempdir().unwrap();
    run_in(tmp.path(), &["sweep", "--mode", "widths", "--g", "10", "--from", "0.5", "--to", "4", "--points", "8"]);
    let csv = Csv::parse(&fs::read_to_string(tmp.path().join("sweep_widths.csv")).unwrap());
    assert_eq!(csv.header, ["c", "n0_even", "n1_odd", "n2_even"]);
    let w0 = csv.num("n0_even");
    assert!(w0[7] > 0.9 && w0[7] < 1.0);
}

#[test]
fn coupling_sweep_default_grid() {
    let tmp = tempfile::tempdir().unwrap();
    run_in(tmp.path(), &["sweep", "--mode", "g", "--c", "0.75"]);
    let csv = Csv::parse(&fs::read_to_string(tmp.path().join("sweep_g.csv")).unwrap());
    assert_eq!(csv.rows.len(), 65);
    assert_eq!(csv.header[0], "g");
    assert_eq!(csv.header.len(), 8);
}
