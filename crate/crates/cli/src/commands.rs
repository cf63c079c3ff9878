use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use offcenter_core::hardwall::DEGENERACY_TOL;
use offcenter_core::scan::{self, default_width_levels};
use offcenter_core::{
    build_wavefunction, certified_eigensolve, crossings, dark_points, evaluate_wavefunction, solve_levels,
    solve_spectrum, sweep_c, sweep_g, sweep_infinite, sweep_widths, Crossing, DarkPoint, DeltaModel, EnergyLevel,
    GridSpec, LevelFlag, ModelParams, OracleResult, Parity, ScanResult, SolverConfig, WidthTable,
};

use crate::error::{CliError, Result};
use crate::output::{Cell, Document, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    G,
    C,
    Widths,
    Infinite,
}

impl SweepMode {
    pub fn name(self) -> &'static str {
        match self {
            SweepMode::G => "g",
            SweepMode::C => "c",
            SweepMode::Widths => "widths",
            SweepMode::Infinite => "infinite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DeltaArg {
    Nearest,
    Split,
}

impl From<DeltaArg> for DeltaModel {
    fn from(d: DeltaArg) -> Self {
        match d {
            DeltaArg::Nearest => DeltaModel::NearestPoint,
            DeltaArg::Split => DeltaModel::SplitWeight,
        }
    }
}

fn params(g: f64, c: f64) -> Result<ModelParams> {
    ModelParams::new(g, c).map_err(CliError::solver)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable output")
}

pub fn levels(g: f64, c: f64, parity: ParityArg, count: usize) -> Result<Document> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let p = params(g, c)?;
    let config = SolverConfig::default();
    let lv = match parity {
        ParityArg::Even => solve_levels(p, Parity::Even, count),
        ParityArg::Odd => solve_levels(p, Parity::Odd, count),
        ParityArg::Both => solve_spectrum(p, count),
    }
    .map_err(CliError::solver)?;
    let parity = match parity {
        ParityArg::Even => "even",
        ParityArg::Odd => "odd",
        ParityArg::Both => "both",
    };
    Ok(Document::new(
        json!({"command": "levels", "g": g, "c": c, "parity": parity, "count": count, "config": to_value(&config)}),
        to_value(&lv),
    ))
}

#[derive(Debug, Serialize, Deserialize)]
struct WavefunctionData {
    level: EnergyLevel,
    x: Vec<f64>,
    phi: Vec<f64>,
}

pub fn wavefunction(g: f64, c: f64, n: usize, xmin: f64, xmax: f64, dx: f64) -> Result<Document> {
    if !(dx > 0.0 && dx.is_finite()) {
        return Err(CliError::Usage(format!("--dx must be positive, got {dx}")));
    }
    if !(xmax >= xmin && xmin.is_finite() && xmax.is_finite()) {
        return Err(CliError::Usage(format!("empty sampling range [{xmin}, {xmax}]")));
    }
    let p = params(g, c)?;
    let parity = Parity::of(n);
    let level =
        *solve_levels(p, parity, n / 2 + 1).map_err(CliError::solver)?.last().expect("requested count is positive");
    let psi = build_wavefunction(level, p).map_err(CliError::solver)?;
    let steps = ((xmax - xmin) / dx + 1e-9).floor() as usize;
    let x: Vec<f64> = (0..=steps).map(|i| xmin + i as f64 * dx).collect();
    let phi = x.iter().map(|&x| evaluate_wavefunction(&psi, x)).collect();
    Ok(Document::new(
        json!({
            "command": "wavefunction", "g": g, "c": c, "n": n, "xmin": xmin, "xmax": xmax, "dx": dx,
            "epsilon": level.epsilon, "parity": parity.label(), "kind": level.kind.label(),
        }),
        to_value(&WavefunctionData { level, x, phi }),
    ))
}

/// Sample grid from an explicit list, a uniform range, or the mode default.
pub fn samples(mode: SweepMode, list: &[f64], range: Option<(f64, f64, usize)>) -> Result<Vec<f64>> {
    if !list.is_empty() {
        return Ok(list.to_vec());
    }
    if let Some((a, b, n)) = range {
        if n < 2 {
            return Err(CliError::Usage("--points must be at least 2".into()));
        }
        return Ok(scan::linspace(a, b, n));
    }
    Ok(match mode {
        SweepMode::G => scan::default_g_grid(),
        _ => scan::default_c_grid(),
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct InfiniteData {
    scan: ScanResult,
    crossings: Vec<Crossing>,
}

pub struct SweepArgs {
    pub mode: SweepMode,
    pub g: Option<f64>,
    pub c: Option<f64>,
    pub count: usize,
    pub levels: Vec<usize>,
    pub samples: Vec<f64>,
}

pub fn sweep(a: SweepArgs) -> Result<Document> {
    if a.count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let config = SolverConfig::default();
    let need = |v: Option<f64>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--mode {} requires --{flag}", a.mode.name())))
    };
    let mut prm = json!({"command": "sweep", "mode": a.mode.name(), "points": a.samples.len()});
    let data = match a.mode {
        SweepMode::G => {
            let c = need(a.c, "c")?;
            prm["c"] = json!(c);
            prm["count"] = json!(a.count);
            to_value(&sweep_g(c, &a.samples, a.count, &config).map_err(CliError::solver)?)
        }
        SweepMode::C => {
            let g = need(a.g, "g")?;
            prm["g"] = json!(g);
            prm["count"] = json!(a.count);
            to_value(&sweep_c(g, &a.samples, a.count, &config).map_err(CliError::solver)?)
        }
        SweepMode::Widths => {
            let g = need(a.g, "g")?;
            let ids: Vec<(usize, Parity)> = if a.levels.is_empty() {
                default_width_levels()
            } else {
                a.levels.iter().map(|&n| (n, Parity::of(n))).collect()
            };
            prm["g"] = json!(g);
            prm["levels"] = json!(ids.iter().map(|(n, _)| n).collect::<Vec<_>>());
            to_value(&sweep_widths(g, &a.samples, &ids, &config).map_err(CliError::solver)?)
        }
        SweepMode::Infinite => {
            prm["count"] = json!(a.count);
            let scan = sweep_infinite(&a.samples, a.count).map_err(CliError::solver)?;
            let crossings = crossings(&scan, DEGENERACY_TOL).map_err(CliError::solver)?;
            to_value(&InfiniteData { scan, crossings })
        }
    };
    prm["config"] = to_value(&config);
    Ok(Document::new(prm, data))
}

pub fn dark(n_max: usize, c_max: f64) -> Result<Document> {
    if n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    if c_max.is_nan() || c_max <= 0.0 {
        return Err(CliError::Usage(format!("--c-max must be positive, got {c_max}")));
    }
    let pts = dark_points(n_max, c_max);
    Ok(Document::new(json!({"command": "dark", "n_max": n_max, "c_max": c_max}), to_value(&pts)))
}

pub fn oracle(g: f64, c: f64, l: Option<f64>, h: f64, k: usize, delta: DeltaArg) -> Result<Document> {
    let p = params(g, c)?;
    let mut spec = GridSpec::for_displacement(c);
    spec.h = h;
    spec.delta_model = delta.into();
    if let Some(l) = l {
        spec.l = l;
    }
    spec.validate(c).map_err(CliError::oracle)?;
    if k == 0 || k > 20 {
        return Err(CliError::Usage(format!("--k must be in 1..=20, got {k}")));
    }
    let r = certified_eigensolve(p, &spec, k).map_err(CliError::oracle)?;
    Ok(Document::new(
        json!({"command": "oracle", "g": g, "c": c, "L": spec.l, "h": spec.h, "k": k, "delta_model": to_value(&spec.delta_model)}),
        to_value(&r),
    ))
}

fn flags_cell(labels: &[String], flags: &[LevelFlag]) -> Cell {
    let marked: Vec<String> = labels
        .iter()
        .zip(flags)
        .filter(|(_, f)| **f != LevelFlag::Regular)
        .map(|(l, f)| format!("{l}:{}", f.label()))
        .collect();
    Cell::Text(marked.join(";"))
}

fn scan_table(name: &str, scan: &ScanResult, with_regime: bool) -> Table {
    let labels: Vec<String> = scan.level_ids.iter().map(|id| id.label()).collect();
    let mut cols = vec![scan.axis.name().to_owned()];
    if with_regime {
        cols.push("regime".into());
    }
    cols.extend(labels.iter().cloned());
    cols.push("flags".into());
    let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut t = Table::new(name, &cols);
    for (i, row) in scan.levels.iter().enumerate() {
        let mut r: Vec<Cell> = vec![scan.samples[i].into()];
        if with_regime {
            r.push(scan.regimes[i].label().into());
        }
        r.extend(row.iter().map(|&e| Cell::from(e)));
        r.push(flags_cell(&labels, &scan.flags[i]));
        t.push(r);
    }
    t
}

/// CSV datasets carried by a document.
pub fn render(doc: &Document) -> Result<Vec<Table>> {
    let data = doc.data.clone();
    let tables = match doc.command() {
        Some("levels") => {
            let lv: Vec<EnergyLevel> = serde_json::from_value(data)?;
            let mut t = Table::new("levels", &["n", "parity", "epsilon", "Q", "kind"]);
            for l in lv {
                t.push(vec![l.n.into(), l.parity.label().into(), l.epsilon.into(), l.q.into(), l.kind.label().into()]);
            }
            vec![t]
        }
        Some("wavefunction") => {
            let w: WavefunctionData = serde_json::from_value(data)?;
            let mut t = Table::new("wavefunction", &["x", "phi"]);
            for (x, p) in w.x.iter().zip(&w.phi) {
                t.push(vec![(*x).into(), (*p).into()]);
            }
            vec![t]
        }
        Some("sweep") => match doc.params.get("mode").and_then(Value::as_str) {
            Some("g") => vec![scan_table("sweep_g", &serde_json::from_value(data)?, false)],
            Some("c") => vec![scan_table("sweep_c", &serde_json::from_value(data)?, false)],
            Some("widths") => {
                let w: WidthTable = serde_json::from_value(data)?;
                let mut cols = vec!["c".to_owned()];
                cols.extend(w.level_ids.iter().map(|id| id.label()));
                let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
                let mut t = Table::new("sweep_widths", &cols);
                for (c, row) in w.samples.iter().zip(&w.widths) {
                    let mut r: Vec<Cell> = vec![(*c).into()];
                    r.extend(row.iter().map(|&x| Cell::from(x)));
                    t.push(r);
                }
                vec![t]
            }
            Some("infinite") => {
                let d: InfiniteData = serde_json::from_value(data)?;
                let mut x = Table::new("sweep_infinite_crossings", &["c", "epsilon", "n", "inside", "outside_index"]);
                for p in &d.crossings {
                    let n = (p.epsilon - 0.5).round().max(0.0) as usize;
                    x.push(vec![
                        p.c.into(),
                        p.epsilon.into(),
                        n.into(),
                        p.inside.label().into(),
                        p.outside_index.into(),
                    ]);
                }
                vec![scan_table("sweep_infinite", &d.scan, true), x]
            }
            other => return Err(CliError::Usage(format!("unknown sweep mode {other:?}"))),
        },
        Some("dark") => {
            let pts: Vec<DarkPoint> = serde_json::from_value(data)?;
            let mut t = Table::new("dark", &["n", "c_star", "parity"]);
            for p in pts {
                t.push(vec![p.n.into(), p.c_star.into(), p.parity.label().into()]);
            }
            vec![t]
        }
        Some("oracle") => {
            let r: OracleResult = serde_json::from_value(data)?;
            let mut t = Table::new("oracle", &["k", "epsilon", "x2", "cert_err"]);
            for (i, e) in r.eigenvalues.iter().enumerate() {
                let err = r.certified_errors.get(i).copied().unwrap_or(f64::NAN);
                t.push(vec![i.into(), (*e).into(), r.second_moments[i].into(), err.into()]);
            }
            vec![t]
        }
        other => return Err(CliError::Usage(format!("unknown command in document: {other:?}"))),
    };
    Ok(tables)
}
