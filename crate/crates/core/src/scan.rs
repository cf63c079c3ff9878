//! Parameter sweeps with level continuation.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hardwall::{
    classify_regime, inside_roots_q, outside_roots_q, HardwallKind, Regime, DEGENERACY_TOL, HARDWALL_Q_MAX,
};
use crate::relative::{
    build_wavefunction, solve_in_sector, solve_levels_with, width, EnergyLevel, LevelKind, ModelParams, Parity, Sector,
    SolverConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    G,
    C,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::G => "g",
            Axis::C => "c",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum LevelId {
    Finite { n: usize, parity: Parity },
    Hardwall { kind: HardwallKind, parity: Parity, index: usize },
}

impl LevelId {
    pub fn label(&self) -> String {
        match self {
            LevelId::Finite { n, parity } => format!("n{n}_{}", parity.label()),
            LevelId::Hardwall { kind, parity, index } => {
                let k = match kind {
                    HardwallKind::Inside => "in",
                    HardwallKind::Outside => "out",
                };
                format!("{k}{index}_{}", parity.label())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelFlag {
    Regular,
    Dark,
    Triple,
}

impl LevelFlag {
    pub fn label(self) -> &'static str {
        match self {
            LevelFlag::Regular => "regular",
            LevelFlag::Dark => "dark",
            LevelFlag::Triple => "triple",
        }
    }
}

/// Horizontal guide lines at one end of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceLines {
    pub at: String,
    pub description: String,
    pub energies: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanMetadata {
    pub fixed: BTreeMap<String, f64>,
    pub config: SolverConfig,
    pub solver_version: String,
    pub reference_lines: Vec<ReferenceLines>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub axis: Axis,
    pub samples: Vec<f64>,
    pub level_ids: Vec<LevelId>,
    /// `levels[i][j]`: energy of `level_ids[j]` at `samples[i]`.
    pub levels: Vec<Vec<f64>>,
    pub flags: Vec<Vec<LevelFlag>>,
    /// Regime per sample (infinite-coupling sweeps only).
    pub regimes: Vec<Regime>,
    pub metadata: ScanMetadata,
}

impl ScanResult {
    pub fn column(&self, id: &LevelId) -> Option<Vec<f64>> {
        let j = self.level_ids.iter().position(|l| l == id)?;
        Some(self.levels.iter().map(|row| row[j]).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WidthTable {
    pub g: f64,
    pub samples: Vec<f64>,
    pub level_ids: Vec<LevelId>,
    /// `widths[i][j]`: ⟨x²⟩ of `level_ids[j]` at `samples[i]`.
    pub widths: Vec<Vec<f64>>,
    pub metadata: ScanMetadata,
}

impl WidthTable {
    pub fn column(&self, j: usize) -> Vec<f64> {
        self.widths.iter().map(|row| row[j]).collect()
    }
}

/// 65 couplings on [-2, 20], denser near g = 0.
pub fn default_g_grid() -> Vec<f64> {
    let (a, b) = ((-2.0f64).asinh(), 20.0f64.asinh());
    (0..65)
        .map(|i| {
            let s = a + (b - a) * i as f64 / 64.0;
            if i == 0 {
                -2.0
            } else if i == 64 {
                20.0
            } else {
                s.sinh()
            }
        })
        .collect()
}

/// 160 displacements evenly spaced on [0.05, 4].
pub fn default_c_grid() -> Vec<f64> {
    linspace(0.05, 4.0, 160)
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| if i == n - 1 { b } else { a + (b - a) * i as f64 / (n - 1) as f64 }).collect(),
    }
}

fn check_samples(samples: &[f64], axis: Axis) -> Result<()> {
    if samples.len() < 2 {
        return Err(Error::Domain(format!("a sweep needs at least two {} samples", axis.name())));
    }
    if samples.iter().any(|v| !v.is_finite()) || samples.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!("{} samples must be finite and strictly ascending", axis.name())));
    }
    Ok(())
}

fn at_sample(index: usize, axis: Axis, value: f64) -> impl Fn(Error) -> Error {
    move |e| Error::AtSample { index, axis: axis.name(), value, source: Box::new(e) }
}

fn finite_ids(n_levels: usize) -> Vec<LevelId> {
    (0..n_levels).map(|n| LevelId::Finite { n, parity: Parity::of(n) }).collect()
}

/// Levels n = 0..n_levels of both parities from prepared sectors, seeded by
/// the previous sample's Q values.
fn solve_sample(
    sectors: &[Sector; 2],
    params: ModelParams,
    n_levels: usize,
    seeds: Option<&[f64]>,
) -> Result<Vec<EnergyLevel>> {
    let per = [n_levels.div_ceil(2), n_levels / 2];
    let results: Vec<Result<Vec<EnergyLevel>>> = [0usize, 1]
        .par_iter()
        .map(|&p| {
            let own: Option<Vec<f64>> = seeds.map(|s| s.iter().skip(p).step_by(2).copied().collect());
            solve_in_sector(&sectors[p], params, per[p], own.as_deref())
        })
        .collect();
    let mut by_n = vec![None; n_levels];
    for r in results {
        for l in r? {
            by_n[l.n] = Some(l);
        }
    }
    Ok(by_n.into_iter().map(|l| l.expect("every quantum number solved")).collect())
}

fn sectors_for(c: f64, n_levels: usize, config: &SolverConfig) -> Result<[Sector; 2]> {
    let (even, odd) = rayon::join(
        || Sector::new(c, Parity::Even, n_levels.div_ceil(2), config),
        || Sector::new(c, Parity::Odd, (n_levels / 2).max(1), config),
    );
    Ok([even?, odd?])
}

fn row_of(levels: &[EnergyLevel]) -> (Vec<f64>, Vec<LevelFlag>) {
    levels
        .iter()
        .map(|l| {
            let f = if l.kind == LevelKind::Dark { LevelFlag::Dark } else { LevelFlag::Regular };
            (l.epsilon, f)
        })
        .unzip()
}

fn metadata(fixed: &[(&str, f64)], config: &SolverConfig, reference_lines: Vec<ReferenceLines>) -> ScanMetadata {
    ScanMetadata {
        fixed: fixed.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        config: *config,
        solver_version: env!("CARGO_PKG_VERSION").to_string(),
        reference_lines,
    }
}

fn oscillator_lines(n_levels: usize) -> Vec<f64> {
    (0..n_levels).map(|n| n as f64 + 0.5).collect()
}

/// Levels n < n_levels at fixed c over ascending couplings.
pub fn sweep_g(c: f64, g_samples: &[f64], n_levels: usize, config: &SolverConfig) -> Result<ScanResult> {
    check_samples(g_samples, Axis::G)?;
    ModelParams::new(0.0, c)?;
    if n_levels == 0 || n_levels > 40 {
        return Err(Error::Domain(format!("level count must be in 1..=40, got {n_levels}")));
    }
    let sectors = sectors_for(c, n_levels, config)?;
    let mut levels = Vec::with_capacity(g_samples.len());
    let mut flags = Vec::with_capacity(g_samples.len());
    let mut seeds: Option<Vec<f64>> = None;
    for (i, &g) in g_samples.iter().enumerate() {
        let params = ModelParams::new(g, c).map_err(at_sample(i, Axis::G, g))?;
        let row = solve_sample(&sectors, params, n_levels, seeds.as_deref()).map_err(at_sample(i, Axis::G, g))?;
        seeds = Some(row.iter().map(|l| l.q).collect());
        let (e, f) = row_of(&row);
        levels.push(e);
        flags.push(f);
    }
    let limits: Vec<f64> = (0..n_levels).filter_map(|n| sectors[n % 2].limit(n / 2).map(|q| q + 0.5)).collect();
    let lines = vec![
        ReferenceLines {
            at: "g=0".into(),
            description: "non-interacting levels".into(),
            energies: oscillator_lines(n_levels),
        },
        ReferenceLines { at: "g=inf".into(), description: "hard-wall limits".into(), energies: limits },
    ];
    Ok(ScanResult {
        axis: Axis::G,
        samples: g_samples.to_vec(),
        level_ids: finite_ids(n_levels),
        levels,
        flags,
        regimes: Vec::new(),
        metadata: metadata(&[("c", c), ("n_levels", n_levels as f64)], config, lines),
    })
}

/// Levels n < n_levels at fixed g over ascending positive displacements.
pub fn sweep_c(g: f64, c_samples: &[f64], n_levels: usize, config: &SolverConfig) -> Result<ScanResult> {
    check_samples(c_samples, Axis::C)?;
    if c_samples[0] <= 0.0 {
        return Err(Error::Domain("displacement samples must be positive".into()));
    }
    ModelParams::new(g, 1.0)?;
    if n_levels == 0 || n_levels > 40 {
        return Err(Error::Domain(format!("level count must be in 1..=40, got {n_levels}")));
    }
    // poles are independent per sample; root refinement is then continued
    let sectors: Vec<[Sector; 2]> = c_samples
        .par_iter()
        .enumerate()
        .map(|(i, &c)| sectors_for(c, n_levels, config).map_err(at_sample(i, Axis::C, c)))
        .collect::<Result<_>>()?;
    let mut levels = Vec::with_capacity(c_samples.len());
    let mut flags = Vec::with_capacity(c_samples.len());
    let mut seeds: Option<Vec<f64>> = None;
    for (i, (&c, sec)) in c_samples.iter().zip(&sectors).enumerate() {
        let params = ModelParams::new(g, c).map_err(at_sample(i, Axis::C, c))?;
        let row = solve_sample(sec, params, n_levels, seeds.as_deref()).map_err(at_sample(i, Axis::C, c))?;
        seeds = Some(row.iter().map(|l| l.q).collect());
        let (e, f) = row_of(&row);
        levels.push(e);
        flags.push(f);
    }
    let fermionic: Vec<f64> = (0..n_levels).map(|n| (n | 1) as f64 + 0.5).collect();
    let lines = vec![
        ReferenceLines {
            at: "c->0".into(),
            description: "non-interacting fermionic levels".into(),
            energies: fermionic,
        },
        ReferenceLines {
            at: "c->inf".into(),
            description: "non-interacting levels".into(),
            energies: oscillator_lines(n_levels),
        },
    ];
    Ok(ScanResult {
        axis: Axis::C,
        samples: c_samples.to_vec(),
        level_ids: finite_ids(n_levels),
        levels,
        flags,
        regimes: Vec::new(),
        metadata: metadata(&[("g", g), ("n_levels", n_levels as f64)], config, lines),
    })
}

/// ⟨x²⟩ of the requested levels at fixed g over ascending displacements.
pub fn sweep_widths(
    g: f64,
    c_samples: &[f64],
    level_ids: &[(usize, Parity)],
    config: &SolverConfig,
) -> Result<WidthTable> {
    check_samples(c_samples, Axis::C)?;
    if level_ids.is_empty() {
        return Err(Error::Domain("no levels requested".into()));
    }
    if let Some((n, p)) = level_ids.iter().find(|(n, p)| Parity::of(*n) != *p) {
        return Err(Error::Domain(format!("level n = {n} cannot have {} parity", p.label())));
    }
    let widths: Vec<Vec<f64>> = c_samples
        .par_iter()
        .map(|&c| {
            let params = ModelParams::new(g, c)?;
            let mut row = Vec::with_capacity(level_ids.len());
            for &(n, parity) in level_ids {
                let lv = solve_levels_with(params, parity, n / 2 + 1, config)?[n / 2];
                let psi = build_wavefunction(lv, params)?;
                row.push(width(&psi)?);
            }
            Ok(row)
        })
        .enumerate()
        .map(|(i, r): (usize, Result<Vec<f64>>)| r.map_err(at_sample(i, Axis::C, c_samples[i])))
        .collect::<Result<_>>()?;
    let ids = level_ids.iter().map(|&(n, parity)| LevelId::Finite { n, parity }).collect();
    let lines = vec![ReferenceLines {
        at: "c->inf".into(),
        description: "oscillator widths 2n+1".into(),
        energies: level_ids.iter().map(|(n, _)| (2 * n + 1) as f64).collect(),
    }];
    Ok(WidthTable {
        g,
        samples: c_samples.to_vec(),
        level_ids: ids,
        widths,
        metadata: metadata(&[("g", g)], config, lines),
    })
}

/// Default level selection of the width sweep.
pub fn default_width_levels() -> Vec<(usize, Parity)> {
    vec![(0, Parity::Even), (1, Parity::Odd), (2, Parity::Even)]
}

/// Hard-wall spectra over ascending displacements. Columns are the first
/// ⌈n_levels/2⌉ outside partners of each parity and as many inside levels
/// of each parity, so every identity is tracked at every sample.
pub fn sweep_infinite(c_samples: &[f64], n_levels: usize) -> Result<ScanResult> {
    check_samples(c_samples, Axis::C)?;
    if c_samples[0] <= 0.0 {
        return Err(Error::Domain("displacement samples must be positive".into()));
    }
    if n_levels == 0 || n_levels > 60 {
        return Err(Error::Domain(format!("level count must be in 1..=60, got {n_levels}")));
    }
    let m = n_levels.div_ceil(2);
    let mut ids = Vec::with_capacity(4 * m);
    for index in 0..m {
        for parity in [Parity::Even, Parity::Odd] {
            ids.push(LevelId::Hardwall { kind: HardwallKind::Outside, parity, index });
        }
    }
    for parity in [Parity::Even, Parity::Odd] {
        for index in 0..m {
            ids.push(LevelId::Hardwall { kind: HardwallKind::Inside, parity, index });
        }
    }
    let rows: Vec<(Vec<f64>, Regime)> = c_samples
        .par_iter()
        .enumerate()
        .map(|(i, &c)| {
            let run = || -> Result<(Vec<f64>, Regime)> {
                let out = outside_roots_q(c, m, HARDWALL_Q_MAX)?;
                if out.len() < m {
                    return Err(Error::RangeExhausted {
                        found: out.len(),
                        requested: m,
                        q_min: 0.9,
                        q_max: HARDWALL_Q_MAX,
                    });
                }
                let ie = inside_roots_q(c, Parity::Even, m, f64::INFINITY)?;
                let io = inside_roots_q(c, Parity::Odd, m, f64::INFINITY)?;
                let mut row: Vec<f64> = out.iter().flat_map(|q| [q + 0.5, q + 0.5]).collect();
                row.extend(ie.iter().chain(&io).map(|q| q + 0.5));
                Ok((row, classify_regime(c)?))
            };
            run().map_err(at_sample(i, Axis::C, c))
        })
        .collect::<Result<_>>()?;
    let (levels, regimes): (Vec<Vec<f64>>, Vec<Regime>) = rows.into_iter().unzip();
    let flags = levels
        .iter()
        .map(|row| {
            row.iter()
                .zip(&ids)
                .map(|(e, id)| {
                    let kind = match id {
                        LevelId::Hardwall { kind, .. } => *kind,
                        LevelId::Finite { .. } => unreachable!(),
                    };
                    let hit = row.iter().zip(&ids).any(|(o, oid)| {
                        matches!(oid, LevelId::Hardwall { kind: k, .. } if *k != kind)
                            && (o - e).abs() <= DEGENERACY_TOL
                    });
                    if hit {
                        LevelFlag::Triple
                    } else {
                        LevelFlag::Regular
                    }
                })
                .collect()
        })
        .collect();
    let lines = vec![
        ReferenceLines {
            at: "c->0".into(),
            description: "outside pairs at odd oscillator levels".into(),
            energies: (0..m).map(|k| (2 * k) as f64 + 1.5).collect(),
        },
        ReferenceLines {
            at: "c->inf".into(),
            description: "inside levels at oscillator levels".into(),
            energies: oscillator_lines(n_levels),
        },
    ];
    Ok(ScanResult {
        axis: Axis::C,
        samples: c_samples.to_vec(),
        level_ids: ids,
        levels,
        flags,
        regimes,
        metadata: metadata(&[("n_levels", n_levels as f64)], &SolverConfig::default(), lines),
    })
}

/// A meeting of an inside level with an outside pair in an
/// infinite-coupling sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub c: f64,
    pub epsilon: f64,
    pub inside: LevelId,
    pub outside_index: usize,
}

fn hardwall_gap(c: f64, parity: Parity, inside: usize, outside: usize) -> Result<(f64, f64)> {
    let qi = inside_roots_q(c, parity, inside + 1, f64::INFINITY)?[inside];
    let qo = *outside_roots_q(c, outside + 1, HARDWALL_Q_MAX)?.get(outside).ok_or(Error::RangeExhausted {
        found: outside,
        requested: outside + 1,
        q_min: 0.9,
        q_max: HARDWALL_Q_MAX,
    })?;
    Ok((qi - qo, qo + 0.5))
}

/// Inside/outside crossings of an infinite-coupling sweep. Samples where
/// the two columns meet within `tol` are reported as they stand; sign
/// changes between neighbouring samples are refined by bisection in c.
pub fn crossings(result: &ScanResult, tol: f64) -> Result<Vec<Crossing>> {
    let mut out = Vec::new();
    for (j, id) in result.level_ids.iter().enumerate() {
        let LevelId::Hardwall { kind: HardwallKind::Inside, parity, index: inside } = *id else { continue };
        for (k, oid) in result.level_ids.iter().enumerate() {
            let LevelId::Hardwall { kind: HardwallKind::Outside, parity: Parity::Even, index: outside } = *oid else {
                continue;
            };
            let d: Vec<f64> = result.levels.iter().map(|row| row[j] - row[k]).collect();
            for i in 0..d.len() {
                if d[i].abs() <= tol {
                    out.push(Crossing {
                        c: result.samples[i],
                        epsilon: result.levels[i][k],
                        inside: *id,
                        outside_index: outside,
                    });
                    continue;
                }
                if i + 1 == d.len() || d[i + 1].abs() <= tol || (d[i] < 0.0) == (d[i + 1] < 0.0) {
                    continue;
                }
                let (mut lo, mut hi, mut d_lo) = (result.samples[i], result.samples[i + 1], d[i]);
                let mut epsilon = 0.5 * (result.levels[i][k] + result.levels[i + 1][k]);
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    let (dm, e) = hardwall_gap(mid, parity, inside, outside)?;
                    epsilon = e;
                    if dm == 0.0 {
                        (lo, hi) = (mid, mid);
                        break;
                    }
                    if (dm < 0.0) == (d_lo < 0.0) {
                        (lo, d_lo) = (mid, dm);
                    } else {
                        hi = mid;
                    }
                }
                out.push(Crossing { c: 0.5 * (lo + hi), epsilon, inside: *id, outside_index: outside });
            }
        }
    }
    out.sort_by(|a, b| a.c.total_cmp(&b.c).then(a.epsilon.total_cmp(&b.epsilon)));
    Ok(out)
}
