//! Finite-coupling relative problem: spectral equation, level solver and
//! piecewise eigenfunctions.
//!
//! Between the deltas the solution is a multiple of the even or odd
//! solution y_e, y_o of Weber's equation normalized at the origin; beyond
//! them it is the decaying D_Q(|x|). The jump condition at x = c reads
//! m_out - m_in = g with m the logarithmic derivatives, and by the Wronskian
//!
//! Φ_e(Q) = D'_Q(0) / (D_Q(c) y_e(c)),   Φ_o(Q) = -D_Q(0) / (D_Q(c) y_o(c)).
//!
//! Φ increases strictly between consecutive poles and sweeps (-∞, ∞) on
//! each interval. The poles are the g = ∞ levels of the sector (zeros of
//! D_Q(c) and of y(c)), so the k-th level of a sector lies alone between
//! the (k-1)-th and k-th pole.

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hardwall::{dark_displacements, inside_roots_q, outside_roots_q};
use crate::quad::integrate_pieces;
use crate::roots::bisect;
use crate::specfun::hermite::hermite_value;
use crate::specfun::pcf::{parity_solution, pcf_d_and_slope, pcf_d_origin, pcf_d_prime, pcf_dprime_origin};
use crate::specfun::rgamma;
use crate::specfun::weber::{Node, SolutionTable};
use crate::specfun::PcfTable;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub g: f64,
    pub c: f64,
}

impl ModelParams {
    pub fn new(g: f64, c: f64) -> Result<Self> {
        if !g.is_finite() {
            return Err(Error::Domain(format!("coupling must be finite, got {g}")));
        }
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::Domain(format!("displacement must be finite and non-negative, got {c}")));
        }
        Ok(Self { g, c })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// (-1)^n for levels of this parity.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    pub fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelKind {
    Regular,
    Dark,
}

impl LevelKind {
    pub fn label(self) -> &'static str {
        match self {
            LevelKind::Regular => "regular",
            LevelKind::Dark => "dark",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub n: usize,
    pub parity: Parity,
    pub epsilon: f64,
    #[serde(rename = "Q")]
    pub q: f64,
    pub kind: LevelKind,
}

impl EnergyLevel {
    fn new(n: usize, q: f64, kind: LevelKind) -> Self {
        Self { n, parity: Parity::of(n), epsilon: q + 0.5, q, kind }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub q_min: f64,
    pub q_max: f64,
    /// Continuation window unit; seeds are tried within ±5 dq.
    pub dq: f64,
    pub root_tol: f64,
    pub dark_tol: f64,
    pub pole_tol: f64,
    /// Check each solved level's node count against its label.
    pub validate_labels: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            q_min: -40.0,
            q_max: 40.0,
            dq: 0.01,
            root_tol: 1e-10,
            dark_tol: 1e-9,
            pole_tol: 1e-8,
            validate_labels: true,
        }
    }
}

/// Spectral function F(Q) for c > 0 and whether Q sits on a pole of F.
///
/// F = [D(c) D_{Q+1}(-c) + D(-c) D_{Q+1}(c)] / [D(-c) ± D(c)] + g D(c). The
/// numerator equals -2 D(0) D'(0) for every c and the denominator
/// 2 D(0) y_e(c) or -2 D'(0) y_o(c), so F is evaluated as
/// -D'(0)/y_e(c) + g D(c) or D(0)/y_o(c) + g D(c). A vanishing numerator
/// (dark points, non-interacting roots) yields 0 even on the pole.
pub fn spectral_function(q: f64, params: ModelParams, parity: Parity) -> Result<(f64, bool)> {
    spectral_function_with(q, params, parity, &SolverConfig::default())
}

pub fn spectral_function_with(
    q: f64,
    params: ModelParams,
    parity: Parity,
    config: &SolverConfig,
) -> Result<(f64, bool)> {
    if params.c == 0.0 {
        return Err(Error::ZeroDisplacement);
    }
    let (dc, _) = pcf_d_and_slope(q, params.c)?;
    let (y, dy) = parity_solution(q, parity == Parity::Even, params.c);
    let num = match parity {
        Parity::Even => -pcf_dprime_origin(q),
        Parity::Odd => pcf_d_origin(q),
    };
    let near_pole = y.abs() < config.pole_tol * y.hypot(dy);
    let ratio = if num == 0.0 { 0.0 } else { num / y };
    Ok((ratio + params.g * dc, near_pole))
}

/// Matching-function machinery for one parity sector at fixed c; the poles
/// do not depend on g and are computed once.
#[derive(Debug, Clone)]
pub(crate) struct Sector {
    c: f64,
    parity: Parity,
    config: SolverConfig,
    poles: Vec<f64>,
}

impl Sector {
    /// Prepares a sector able to deliver its lowest `count` levels.
    pub(crate) fn new(c: f64, parity: Parity, count: usize, config: &SolverConfig) -> Result<Self> {
        let poles = if c == 0.0 {
            // contact limit, even sector: D_Q(0) = 0 at Q = 1, 3, 5, ...
            (0..count).map(|k| (2 * k + 1) as f64).filter(|&q| q <= config.q_max).collect()
        } else {
            let outside = outside_roots_q(c, count, config.q_max)?;
            let cap = if outside.len() == count { outside[count - 1] } else { config.q_max };
            let inside = inside_roots_q(c, parity, count, cap)?;
            let mut all: Vec<f64> = outside.into_iter().chain(inside).collect();
            all.sort_by(f64::total_cmp);
            all.truncate(count);
            all
        };
        Ok(Self { c, parity, config: *config, poles })
    }

    /// Sector whose levels are all known in closed form (g = 0, or the odd
    /// sector of the contact limit); no poles are needed.
    pub(crate) fn unbounded(c: f64, parity: Parity, config: &SolverConfig) -> Self {
        Self { c, parity, config: *config, poles: Vec::new() }
    }

    /// g = ∞ limit of the k-th level of this sector, when below q_max.
    pub(crate) fn limit(&self, k: usize) -> Option<f64> {
        self.poles.get(k).copied()
    }

    fn phi(&self, q: f64) -> Result<f64> {
        if self.c == 0.0 {
            return Ok(-SQRT_2 * rgamma(-0.5 * q) / rgamma(0.5 * (1.0 - q)));
        }
        let (dc, _) = pcf_d_and_slope(q, self.c)?;
        let (y, _) = parity_solution(q, self.parity == Parity::Even, self.c);
        let num = match self.parity {
            Parity::Even => pcf_dprime_origin(q),
            Parity::Odd => -pcf_d_origin(q),
        };
        Ok(num / (dc * y))
    }

    fn is_dark(&self, n: usize) -> bool {
        self.c > 0.0 && dark_displacements(n).iter().any(|&cs| (cs - self.c).abs() <= self.config.dark_tol)
    }

    fn exhausted(&self, found: usize, requested: usize) -> Error {
        Error::RangeExhausted { found, requested, q_min: self.config.q_min, q_max: self.config.q_max }
    }

    /// Point just inside a pole (moving by `dir`) where Φ - g has the
    /// expected sign, shrinking the offset toward the pole if necessary.
    fn off_pole(&self, pole: f64, dir: f64, width: f64, g: f64) -> Result<(f64, f64)> {
        let mut delta = (1e-7 * pole.abs().max(1.0)).min(0.25 * width);
        let want_above = dir < 0.0;
        let mut last = (pole + dir * delta, f64::NAN);
        for _ in 0..12 {
            let q = pole + dir * delta;
            let v = self.phi(q)? - g;
            last = (q, v);
            if v.is_finite() && (v > 0.0) == want_above && v != 0.0 {
                return Ok(last);
            }
            if v == 0.0 {
                return Ok(last);
            }
            delta /= 16.0;
        }
        Ok(last)
    }

    /// The k-th level (0-based) of this sector at coupling g.
    pub(crate) fn level(&self, k: usize, g: f64, seed: Option<f64>) -> Result<EnergyLevel> {
        let n = 2 * k + self.parity.offset();
        if self.is_dark(n) {
            return Ok(EnergyLevel::new(n, n as f64, LevelKind::Dark));
        }
        if g == 0.0 || (self.c == 0.0 && self.parity == Parity::Odd) {
            return Ok(EnergyLevel::new(n, n as f64, LevelKind::Regular));
        }
        let lower = if k == 0 { None } else { self.poles.get(k - 1).copied() };
        let upper = self.poles.get(k).copied();
        if lower.is_none() && k > 0 {
            return Err(self.exhausted(k, k + 1));
        }
        let width = match (lower, upper) {
            (Some(l), Some(u)) => u - l,
            _ => f64::INFINITY,
        };
        if width <= 4.0 * f64::EPSILON * upper.unwrap_or(1.0).abs().max(1.0) {
            let q = 0.5 * (lower.unwrap() + upper.unwrap());
            return Ok(EnergyLevel::new(n, q, LevelKind::Regular));
        }

        let f = |q: f64| -> Result<f64> { Ok(self.phi(q)? - g) };

        let (hi, f_hi) = match upper {
            Some(u) => self.off_pole(u, -1.0, width, g)?,
            None => {
                let v = f(self.config.q_max)?;
                if v <= 0.0 {
                    return Err(self.exhausted(k, k + 1));
                }
                (self.config.q_max, v)
            }
        };
        let (lo, f_lo) = match lower {
            Some(l) => self.off_pole(l, 1.0, width, g)?,
            None => {
                let mut step = 1.0;
                let mut q = hi - step;
                loop {
                    if q <= self.config.q_min {
                        let v = f(self.config.q_min)?;
                        if v >= 0.0 {
                            return Err(self.exhausted(k, k + 1));
                        }
                        break (self.config.q_min, v);
                    }
                    let v = f(q)?;
                    if v < 0.0 {
                        break (q, v);
                    }
                    step *= 2.0;
                    q = hi - step;
                }
            }
        };
        if f_lo == 0.0 {
            return Ok(EnergyLevel::new(n, lo, LevelKind::Regular));
        }
        if f_hi == 0.0 {
            return Ok(EnergyLevel::new(n, hi, LevelKind::Regular));
        }
        if !(f_lo < 0.0 && f_hi > 0.0) {
            // root squeezed against a pole beyond resolution
            let q = if f_lo > 0.0 { lo } else { hi };
            return Ok(EnergyLevel::new(n, q, LevelKind::Regular));
        }

        let (mut a, mut b, mut fa) = (lo, hi, f_lo);
        if let Some(s) = seed {
            let w = 5.0 * self.config.dq;
            let sa = (s - w).max(lo);
            let sb = (s + w).min(hi);
            if sa < sb {
                let va = if sa == lo { f_lo } else { f(sa)? };
                let vb = if sb == hi { f_hi } else { f(sb)? };
                if va < 0.0 && vb > 0.0 {
                    a = sa;
                    b = sb;
                    fa = va;
                }
            }
        }
        // run to full precision; root_tol is the guaranteed bound
        let q = bisect(f, a, b, fa, 0.0)?;
        Ok(EnergyLevel::new(n, q, LevelKind::Regular))
    }
}

/// Lowest `count` levels of one parity sector, ascending.
pub fn solve_levels(params: ModelParams, parity: Parity, count: usize) -> Result<Vec<EnergyLevel>> {
    solve_levels_with(params, parity, count, &SolverConfig::default())
}

pub fn solve_levels_with(
    params: ModelParams,
    parity: Parity,
    count: usize,
    config: &SolverConfig,
) -> Result<Vec<EnergyLevel>> {
    solve_levels_seeded(params, parity, count, config, None)
}

/// As [`solve_levels_with`], with optional per-level seed Q values.
pub fn solve_levels_seeded(
    params: ModelParams,
    parity: Parity,
    count: usize,
    config: &SolverConfig,
    seeds: Option<&[f64]>,
) -> Result<Vec<EnergyLevel>> {
    let params = ModelParams::new(params.g, params.c)?;
    if count == 0 || count > 40 {
        return Err(Error::Domain(format!("level count must be in 1..=40, got {count}")));
    }
    let sector = if params.g == 0.0 || (params.c == 0.0 && parity == Parity::Odd) {
        Sector::unbounded(params.c, parity, config)
    } else {
        Sector::new(params.c, parity, count, config)?
    };
    solve_in_sector(&sector, params, count, seeds)
}

pub(crate) fn solve_in_sector(
    sector: &Sector,
    params: ModelParams,
    count: usize,
    seeds: Option<&[f64]>,
) -> Result<Vec<EnergyLevel>> {
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let seed = seeds.and_then(|s| s.get(k).copied()).filter(|s| s.is_finite());
        let level = sector.level(k, params.g, seed)?;
        if sector.config.validate_labels {
            validate_label(&level, params)?;
        }
        out.push(level);
    }
    Ok(out)
}

fn validate_label(level: &EnergyLevel, params: ModelParams) -> Result<()> {
    if level.kind == LevelKind::Dark || params.g == 0.0 {
        return Ok(());
    }
    let psi = assemble(*level, params, false)?;
    let counted = node_count(&psi);
    if counted != level.n {
        return Err(Error::Labeling { expected: level.n, counted });
    }
    Ok(())
}

/// Lowest `count` levels of both sectors together, ascending in energy.
pub fn solve_spectrum(params: ModelParams, count: usize) -> Result<Vec<EnergyLevel>> {
    solve_spectrum_with(params, count, &SolverConfig::default())
}

pub fn solve_spectrum_with(params: ModelParams, count: usize, config: &SolverConfig) -> Result<Vec<EnergyLevel>> {
    let mut all = solve_levels_with(params, Parity::Even, count, config)?;
    all.extend(solve_levels_with(params, Parity::Odd, count, config)?);
    all.sort_by(|a, b| a.epsilon.total_cmp(&b.epsilon).then(a.n.cmp(&b.n)));
    all.truncate(count);
    Ok(all)
}

/// g = ∞ partner of a finite-g level: the upper pole bounding its bracket.
pub fn infinite_coupling_partner(c: f64, n: usize, config: &SolverConfig) -> Result<Option<f64>> {
    let parity = Parity::of(n);
    let k = n / 2;
    let sector = Sector::new(c, parity, k + 1, config)?;
    Ok(sector.limit(k).map(|q| q + 0.5))
}

#[derive(Debug, Clone)]
enum Shape {
    /// Non-interacting oscillator state, already normalized.
    Oscillator { norm: f64 },
    /// Region II amplitude A and tables for y_parity on [0, c] and D_Q on [0, ∞).
    Exact { amp: f64, inside: SolutionTable, outside: PcfTable },
}

/// Eigenfunction assembled region by region:
///
/// region I   (x < -c): β D_Q(-x)
/// region II  (|x| < c): β D_Q(c) y(x) / y(-c)
/// region III (x > c):  (-1)^n β D_Q(x)
#[derive(Debug, Clone)]
pub struct PiecewiseWavefunction {
    pub level: EnergyLevel,
    pub c: f64,
    pub g: f64,
    pub beta: f64,
    shape: Shape,
}

/// Half-width of the integration window beyond the outer delta.
pub const TAIL_LENGTH: f64 = 12.0;
const QUAD_TOL: f64 = 1e-10;

impl PiecewiseWavefunction {
    pub fn half_width(&self) -> f64 {
        self.c + TAIL_LENGTH
    }

    fn parity_sign(&self) -> f64 {
        self.level.parity.sign()
    }

    /// Unnormalized value and slope (β excluded).
    fn raw(&self, x: f64) -> (f64, f64) {
        let s = self.parity_sign();
        match &self.shape {
            Shape::Oscillator { norm } => {
                let n = self.level.n;
                let y = x / SQRT_2;
                let e = (-0.25 * x * x).exp();
                let h = hermite_value(n, y);
                let hm1 = if n == 0 { 0.0 } else { hermite_value(n - 1, y) };
                let v = s * norm * h * e;
                let dv = s * norm * e * (SQRT_2 * n as f64 * hm1 - 0.5 * x * h);
                (v, dv)
            }
            Shape::Exact { amp, inside, outside } => {
                let u = x.abs();
                if u >= self.c {
                    let (d, dd, _) = outside.eval(u);
                    if x < 0.0 {
                        (d, -dd)
                    } else {
                        (s * d, s * dd)
                    }
                } else {
                    let node = inside.eval(u);
                    // y(-u) = s y(u), y'(-u) = -s y'(u)
                    if x < 0.0 {
                        (amp * s * node.y, -amp * s * node.dy)
                    } else {
                        (amp * node.y, amp * node.dy)
                    }
                }
            }
        }
    }

    fn value_and_slope(&self, x: f64) -> (f64, f64) {
        let (v, d) = self.raw(x);
        (self.beta * v, self.beta * d)
    }

    /// One-sided values and slopes (left, right) at the delta x0 ∈ {-c, c}.
    fn sides(&self, x0: f64) -> ((f64, f64), (f64, f64)) {
        let s = self.parity_sign();
        match &self.shape {
            Shape::Oscillator { .. } => {
                let v = self.value_and_slope(x0);
                (v, v)
            }
            Shape::Exact { amp, inside, .. } => {
                let q = self.level.q;
                let c = self.c;
                let d = outside_value(q, c);
                let dp = pcf_d_prime(q, c).map(|r| r.value).unwrap_or(f64::NAN);
                let node = inside.eval(c);
                let b = self.beta;
                let (yin, dyin) = (b * amp * node.y, b * amp * node.dy);
                if x0 < 0.0 {
                    let outer = (b * d, -b * dp);
                    let inner = (s * yin, -s * dyin);
                    (outer, inner)
                } else {
                    let outer = (s * b * d, s * b * dp);
                    ((yin, dyin), outer)
                }
            }
        }
    }
}

fn outside_value(q: f64, c: f64) -> f64 {
    pcf_d_and_slope(q, c).map(|v| v.0).unwrap_or(f64::NAN)
}

fn oscillator_norm(n: usize) -> f64 {
    let mut log_fact = 0.0;
    for k in 2..=n {
        log_fact += (k as f64).ln();
    }
    let log_norm = -0.25 * (2.0 * PI).ln() - 0.5 * (n as f64 * 2f64.ln() + log_fact);
    log_norm.exp()
}

fn assemble(level: EnergyLevel, params: ModelParams, normalize: bool) -> Result<PiecewiseWavefunction> {
    let c = params.c;
    let oscillator = level.kind == LevelKind::Dark || params.g == 0.0 || (c == 0.0 && level.parity == Parity::Odd);
    let shape = if oscillator {
        Shape::Oscillator { norm: oscillator_norm(level.n) }
    } else {
        let q = level.q;
        let even = level.parity == Parity::Even;
        let start = if even { Node::new(0.0, 1.0, 0.0) } else { Node::new(0.0, 0.0, 1.0) };
        let inside = SolutionTable::build(q + 0.5, start, c);
        let outside = PcfTable::new(q, 0.0);
        let (d_c, _, _) = outside.eval(c);
        let y_c = if c == 0.0 { 1.0 } else { parity_solution(q, even, c).0 };
        let amp = level.parity.sign() * d_c / y_c;
        Shape::Exact { amp, inside, outside }
    };
    let mut psi = PiecewiseWavefunction { level, c, g: params.g, beta: 1.0, shape };
    if normalize && !oscillator {
        // the tolerance is absolute, so repeat once at unit scale
        for _ in 0..2 {
            let n2 = norm_squared(&psi)?;
            psi.beta /= n2.sqrt();
        }
    }
    Ok(psi)
}

fn half_line_breaks(psi: &PiecewiseWavefunction) -> Vec<f64> {
    if psi.c > 0.0 {
        vec![0.0, psi.c, psi.half_width()]
    } else {
        vec![0.0, psi.half_width()]
    }
}

fn norm_squared(psi: &PiecewiseWavefunction) -> Result<f64> {
    let half = integrate_pieces(|x| psi.value_and_slope(x).0.powi(2), &half_line_breaks(psi), 0.5 * QUAD_TOL)?;
    Ok(2.0 * half)
}

/// Normalized eigenfunction of a solved level (β > 0: positive left tail).
pub fn build_wavefunction(level: EnergyLevel, params: ModelParams) -> Result<PiecewiseWavefunction> {
    let params = ModelParams::new(params.g, params.c)?;
    assemble(level, params, true)
}

/// φ(x); at x = ±c the outer one-sided limit is returned.
pub fn evaluate_wavefunction(psi: &PiecewiseWavefunction, x: f64) -> f64 {
    psi.value_and_slope(x).0
}

/// ∫|φ|² over [-L, L], L = c + 12.
pub fn norm(psi: &PiecewiseWavefunction) -> Result<f64> {
    norm_squared(psi)
}

/// ⟨x²⟩ = ∫ x² |φ|² dx.
pub fn width(psi: &PiecewiseWavefunction) -> Result<f64> {
    let half = integrate_pieces(|x| x * x * psi.value_and_slope(x).0.powi(2), &half_line_breaks(psi), 0.5 * QUAD_TOL)?;
    Ok(2.0 * half)
}

/// Strict sign changes of φ on [-L, L] sampled every 0.01, refined to
/// c/20 between the deltas; points with |φ| < 1e-9 are skipped.
pub fn node_count(psi: &PiecewiseWavefunction) -> usize {
    const STEP: f64 = 0.01;
    const GRAZE: f64 = 1e-9;
    let l = psi.half_width();
    let c = psi.c;
    let mut xs = Vec::new();
    let outer = ((l - c) / STEP).ceil() as usize;
    for i in 0..=outer {
        xs.push(-l + (l - c) * i as f64 / outer as f64);
    }
    if c > 0.0 {
        let fine = STEP.min(c / 20.0);
        let inner = ((2.0 * c) / fine).ceil() as usize;
        for i in 1..inner {
            xs.push(-c + 2.0 * c * i as f64 / inner as f64);
        }
    }
    for i in 0..=outer {
        xs.push(c + (l - c) * i as f64 / outer as f64);
    }
    let scale = if psi.beta.is_finite() && psi.beta > 0.0 { 1.0 } else { 0.0 };
    let mut count = 0;
    let mut last_sign = 0.0f64;
    for x in xs {
        let v = evaluate_wavefunction(psi, x) * scale;
        if v.abs() < GRAZE || !v.is_finite() {
            continue;
        }
        let sgn = v.signum();
        if last_sign != 0.0 && sgn != last_sign {
            count += 1;
        }
        last_sign = sgn;
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    pub cont_minus: f64,
    pub cont_plus: f64,
    pub jump_minus: f64,
    pub jump_plus: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.cont_minus.max(self.cont_plus).max(self.jump_minus).max(self.jump_plus)
    }
}

/// Continuity and derivative-jump residuals at x = -c and x = +c.
pub fn boundary_residuals(psi: &PiecewiseWavefunction, params: ModelParams) -> Residuals {
    let g = params.g;
    if params.c == 0.0 {
        // single delta of strength 2g at the origin
        let (v, d) = psi.value_and_slope(0.0);
        let (_, dl) = psi.value_and_slope(-0.0f64.min(-1e-300));
        let jump = ((d - dl) - 2.0 * g * v).abs();
        return Residuals { cont_minus: 0.0, cont_plus: 0.0, jump_minus: jump, jump_plus: jump };
    }
    let c = params.c;
    let ((lv_m, ld_m), (rv_m, rd_m)) = psi.sides(-c);
    let ((lv_p, ld_p), (rv_p, rd_p)) = psi.sides(c);
    Residuals {
        cont_minus: (rv_m - lv_m).abs(),
        cont_plus: (rv_p - lv_p).abs(),
        jump_minus: ((rd_m - ld_m) - g * lv_m).abs(),
        jump_plus: ((rd_p - ld_p) - g * rv_p).abs(),
    }
}
