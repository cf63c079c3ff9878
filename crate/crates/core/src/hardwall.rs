//! The infinite-coupling limit: hard walls at x = ±c split the line into an
//! inside box and two outside half-lines.

use std::f64::consts::{PI, SQRT_2};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relative::Parity;
use crate::roots::scan_roots;
use crate::specfun::{hermite_roots, pcf::parity_solution, pcf_d_and_slope, MAX_HERMITE_ORDER};

/// Coincidence tolerance for degeneracy flags, in energy.
pub const DEGENERACY_TOL: f64 = 1e-8;

const ROOT_TOL: f64 = 1e-13;
const OUTSIDE_START_Q: f64 = 0.9;
const OUTSIDE_STEP: f64 = 0.1;
/// Scan ceiling in Q for hard-wall levels.
pub const HARDWALL_Q_MAX: f64 = 400.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HardwallKind {
    Inside,
    Outside,
}

/// One g = ∞ eigenstate. Outside levels come in degenerate even/odd pairs
/// sharing `index` = ν; each partner is listed separately with
/// `multiplicity` 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HardwallLevel {
    pub kind: HardwallKind,
    pub parity: Parity,
    pub index: usize,
    pub epsilon: f64,
    pub multiplicity: u8,
}

impl HardwallLevel {
    /// Quantum number of an outside partner (2ν or 2ν + 1).
    pub fn outside_n(&self) -> Option<usize> {
        (self.kind == HardwallKind::Outside).then(|| 2 * self.index + self.parity.offset())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DarkPoint {
    pub n: usize,
    pub c_star: f64,
    pub parity: Parity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Exclusion,
    Crossover,
    Truncation,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::Exclusion => "E",
            Regime::Crossover => "C",
            Regime::Truncation => "T",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MergedLevel {
    pub level: HardwallLevel,
    /// An inside level coincides with an outside pair.
    pub triple: bool,
}

fn check_c(c: f64) -> Result<()> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::Domain(format!("hard-wall displacement must be positive, got {c}")));
    }
    Ok(())
}

/// Q values of the first `count` zeros of Q ↦ D_Q(c), ascending, below `q_max`.
pub(crate) fn outside_roots_q(c: f64, count: usize, q_max: f64) -> Result<Vec<f64>> {
    scan_roots(|q| Ok(pcf_d_and_slope(q, c)?.0), |_| OUTSIDE_STEP, OUTSIDE_START_Q, q_max, count, ROOT_TOL)
}

/// Q values of the first `count` zeros of Q ↦ y_parity(Q; c), below `q_max`.
pub(crate) fn inside_roots_q(c: f64, parity: Parity, count: usize, q_max: f64) -> Result<Vec<f64>> {
    // box-plus-oscillator lower bounds on the lowest level of each parity
    let (box_k, ho) = match parity {
        Parity::Even => (PI * PI / (4.0 * c * c), 0.5),
        Parity::Odd => (PI * PI / (c * c), 1.5),
    };
    let start = box_k.max(ho) - 0.5 - 1e-9;
    let even = parity == Parity::Even;
    let step = move |_q: f64| 0.05 * (1.0 / (c * c)).max(1.0);
    scan_roots(|q| Ok(parity_solution(q, even, c).0), step, start, q_max, count, ROOT_TOL * start.abs().max(1.0))
}

/// Dark displacements √2 y for the positive roots y of H_n (n >= 1).
pub fn dark_displacements(n: usize) -> &'static [f64] {
    static CACHE: [OnceLock<Vec<f64>>; MAX_HERMITE_ORDER + 1] = [const { OnceLock::new() }; MAX_HERMITE_ORDER + 1];
    if n == 0 || n > MAX_HERMITE_ORDER {
        return &[];
    }
    CACHE[n].get_or_init(|| hermite_roots(n).into_iter().filter(|&y| y > 0.0).map(|y| SQRT_2 * y).collect())
}

/// Lowest `count` inside levels of one parity.
pub fn inside_levels(c: f64, parity: Parity, count: usize) -> Result<Vec<HardwallLevel>> {
    check_c(c)?;
    let qs = inside_roots_q(c, parity, count, f64::INFINITY)?;
    Ok(qs
        .into_iter()
        .enumerate()
        .map(|(index, q)| HardwallLevel {
            kind: HardwallKind::Inside,
            parity,
            index,
            epsilon: q + 0.5,
            multiplicity: 1,
        })
        .collect())
}

/// Lowest `count` distinct outside levels, each expanded into its even
/// (n = 2ν) and odd (n = 2ν + 1) partner.
pub fn outside_levels(c: f64, count: usize) -> Result<Vec<HardwallLevel>> {
    if !(c >= 0.0 && c.is_finite()) {
        return Err(Error::Domain(format!("hard-wall displacement must be non-negative, got {c}")));
    }
    let qs = outside_roots_q(c, count, HARDWALL_Q_MAX)?;
    if qs.len() < count {
        return Err(Error::RangeExhausted {
            found: qs.len(),
            requested: count,
            q_min: OUTSIDE_START_Q,
            q_max: HARDWALL_Q_MAX,
        });
    }
    Ok(qs
        .into_iter()
        .enumerate()
        .flat_map(|(index, q)| {
            [Parity::Even, Parity::Odd].map(|parity| HardwallLevel {
                kind: HardwallKind::Outside,
                parity,
                index,
                epsilon: q + 0.5,
                multiplicity: 2,
            })
        })
        .collect())
}

/// Outside partner state evaluated at `x`: D_Q(|x|) beyond the walls with
/// the parity sign, identically zero between them.
pub fn symmetrized_outside(level: &HardwallLevel, c: f64, x: f64) -> Result<f64> {
    if x.abs() < c {
        return Ok(0.0);
    }
    let d = pcf_d_and_slope(level.epsilon - 0.5, x.abs())?.0;
    Ok(if x < 0.0 { level.parity.sign() * d } else { d })
}

/// Displacements c* = √2 y with H_n(y) = 0, y > 0, for 1 <= n <= n_max.
pub fn dark_points(n_max: usize, c_max: f64) -> Vec<DarkPoint> {
    let n_max = n_max.min(MAX_HERMITE_ORDER);
    let mut out: Vec<DarkPoint> = (1..=n_max)
        .flat_map(|n| dark_displacements(n).iter().map(move |&c_star| DarkPoint { n, c_star, parity: Parity::of(n) }))
        .filter(|p| p.c_star <= c_max)
        .collect();
    out.sort_by(|a, b| a.c_star.total_cmp(&b.c_star).then(a.n.cmp(&b.n)));
    out
}

/// Lowest `count` g = ∞ states (outside partners counted separately),
/// ascending in energy, with coincidences flagged.
pub fn merged_spectrum(c: f64, count: usize) -> Result<Vec<MergedLevel>> {
    check_c(c)?;
    let pairs = count.div_ceil(2);
    let outside = outside_levels(c, pairs)?;
    let cap = outside.last().map_or(f64::INFINITY, |l| l.epsilon) + DEGENERACY_TOL;
    let q_cap = cap - 0.5;
    let mut all = outside;
    for parity in [Parity::Even, Parity::Odd] {
        let qs = inside_roots_q(c, parity, count, q_cap)?;
        all.extend(qs.into_iter().enumerate().map(|(index, q)| HardwallLevel {
            kind: HardwallKind::Inside,
            parity,
            index,
            epsilon: q + 0.5,
            multiplicity: 1,
        }));
    }
    all.sort_by(|a, b| a.epsilon.total_cmp(&b.epsilon).then(a.kind.cmp(&b.kind)));
    let flagged: Vec<MergedLevel> = all
        .iter()
        .map(|l| {
            let triple = all.iter().any(|o| o.kind != l.kind && (o.epsilon - l.epsilon).abs() <= DEGENERACY_TOL);
            MergedLevel { level: *l, triple }
        })
        .collect();
    Ok(flagged.into_iter().take(count).collect())
}

/// Exclusion / crossover / truncation from the ordering of the lowest
/// inside and outside levels.
pub fn classify_regime(c: f64) -> Result<Regime> {
    check_c(c)?;
    let out = outside_roots_q(c, 2, HARDWALL_Q_MAX)?;
    let in_even = inside_roots_q(c, Parity::Even, 1, f64::INFINITY)?[0];
    let in_odd = inside_roots_q(c, Parity::Odd, 1, f64::INFINITY)?[0];
    let out0 = out[0];
    let out1 = out.get(1).copied().unwrap_or(f64::INFINITY);
    if in_even > out1 {
        Ok(Regime::Exclusion)
    } else if in_even.max(in_odd) < out0 {
        Ok(Regime::Truncation)
    } else {
        Ok(Regime::Crossover)
    }
}
