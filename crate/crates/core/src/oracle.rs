//! Reference solutions independent of the parabolic-cylinder machinery:
//! a finite-difference diagonalization of the relative Hamiltonian and the
//! single merged delta at the origin.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relative::ModelParams;
use crate::specfun::rgamma;
use crate::tridiag::SymTridiagonal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaModel {
    /// Weight g/h on the grid point nearest to the delta.
    NearestPoint,
    /// Weight g/h shared linearly between the two bracketing grid points.
    SplitWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(rename = "L")]
    pub l: f64,
    pub h: f64,
    pub delta_model: DeltaModel,
}

impl GridSpec {
    pub fn new(l: f64, h: f64, delta_model: DeltaModel) -> Self {
        Self { l, h, delta_model }
    }

    /// Default grid for displacement c: L = c + 12, h = 0.002.
    pub fn for_displacement(c: f64) -> Self {
        Self { l: (c + 12.0).ceil(), h: 0.002, delta_model: DeltaModel::NearestPoint }
    }

    fn intervals(&self) -> usize {
        (2.0 * self.l / self.h).round() as usize
    }

    pub fn validate(&self, c: f64) -> Result<()> {
        if !(self.h > 0.0 && self.h <= 0.005) {
            return Err(Error::Domain(format!("grid step must lie in (0, 0.005], got {}", self.h)));
        }
        if self.l.is_nan() || self.l < c + 8.0 {
            return Err(Error::Domain(format!("half-width L = {} must be at least c + 8 = {}", self.l, c + 8.0)));
        }
        let m = 2.0 * self.l / self.h;
        if (m - m.round()).abs() > 1e-6 * m {
            return Err(Error::Domain(format!("2L/h = {m} is not an integer")));
        }
        Ok(())
    }

    pub fn halved(&self) -> Self {
        Self { h: 0.5 * self.h, ..*self }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub eigenvalues: Vec<f64>,
    pub second_moments: Vec<f64>,
    /// 2 |ε(h) - ε(h/2)| per level when the grid was refined, else empty.
    pub certified_errors: Vec<f64>,
    pub grid: GridSpec,
}

fn add_delta(diag: &mut [f64], spec: &GridSpec, x0: f64, g: f64) {
    let n = diag.len();
    // interior node i sits at -L + (i + 1) h
    let s = (x0 + spec.l) / spec.h - 1.0;
    match spec.delta_model {
        DeltaModel::NearestPoint => {
            let i = s.round().clamp(0.0, (n - 1) as f64) as usize;
            diag[i] += g / spec.h;
        }
        DeltaModel::SplitWeight => {
            let j = s.floor();
            let t = s - j;
            let j = j as isize;
            for (idx, w) in [(j, 1.0 - t), (j + 1, t)] {
                if (0..n as isize).contains(&idx) {
                    diag[idx as usize] += w * g / spec.h;
                }
            }
        }
    }
}

fn hamiltonian(params: ModelParams, spec: &GridSpec) -> (SymTridiagonal, Vec<f64>) {
    let n = spec.intervals() - 1;
    let h2 = spec.h * spec.h;
    let xs: Vec<f64> = (1..=n).map(|i| -spec.l + i as f64 * spec.h).collect();
    let mut diag: Vec<f64> = xs.iter().map(|x| 2.0 / h2 + 0.25 * x * x).collect();
    add_delta(&mut diag, spec, -params.c, params.g);
    add_delta(&mut diag, spec, params.c, params.g);
    (SymTridiagonal::new(diag, vec![-1.0 / h2; n - 1]), xs)
}

/// Lowest `k` eigenvalues of the discretized Hamiltonian with ⟨x²⟩ of each
/// eigenvector. The delta discretization converges as O(h) unless the
/// delta sits on a grid point; the rest of the operator as O(h²).
pub fn grid_eigensolve(params: ModelParams, spec: &GridSpec, k: usize) -> Result<OracleResult> {
    spec.validate(params.c)?;
    if k == 0 || k > 20 {
        return Err(Error::Domain(format!("oracle level count must be in 1..=20, got {k}")));
    }
    let (t, xs) = hamiltonian(params, spec);
    let pairs: Vec<(f64, f64)> = (0..k)
        .into_par_iter()
        .map(|i| {
            let e = t.eigenvalue(i)?;
            let v = t.eigenvector(e);
            let m2 = v.iter().zip(&xs).map(|(vi, x)| vi * vi * x * x).sum::<f64>();
            Ok((e, m2))
        })
        .collect::<Result<_>>()?;
    let (eigenvalues, second_moments) = pairs.into_iter().unzip();
    Ok(OracleResult { eigenvalues, second_moments, certified_errors: Vec::new(), grid: *spec })
}

/// [`grid_eigensolve`] on h and h/2; reports the finer result together with
/// the error bound 2 |ε(h) - ε(h/2)|.
pub fn certified_eigensolve(params: ModelParams, spec: &GridSpec, k: usize) -> Result<OracleResult> {
    let (coarse, fine) =
        rayon::join(|| grid_eigensolve(params, spec, k), || grid_eigensolve(params, &spec.halved(), k));
    let (coarse, mut fine) = (coarse?, fine?);
    fine.certified_errors =
        coarse.eigenvalues.iter().zip(&fine.eigenvalues).map(|(a, b)| 2.0 * (a - b).abs()).collect();
    Ok(fine)
}

/// Even-sector energies with both deltas merged into one of strength 2g
/// at the origin: zeros of √2 / Γ(-Q/2) + g / Γ((1 - Q)/2), an entire
/// function of Q, located by a fine scan and bisection.
pub fn contact_reference(g: f64, count: usize) -> Result<Vec<f64>> {
    if !g.is_finite() {
        return Err(Error::Domain(format!("coupling must be finite, got {g}")));
    }
    let f = |q: f64| std::f64::consts::SQRT_2 * rgamma(-0.5 * q) + g * rgamma(0.5 * (1.0 - q));
    const STEP: f64 = 0.01;
    // the attractive bound state sits near Q = -g²; start well below it
    let q_lo = (-40.0 - 2.0 * g * g).max(-300.0);
    let q_hi = 2.0 * count as f64 + 10.0;
    let mut roots = Vec::with_capacity(count);
    let mut i = 0usize;
    let mut a = q_lo;
    let mut fa = f(a);
    while roots.len() < count {
        i += 1;
        let b = q_lo + i as f64 * STEP;
        if b > q_hi {
            return Err(Error::RangeExhausted { found: roots.len(), requested: count, q_min: q_lo, q_max: q_hi });
        }
        let fb = f(b);
        if fa == 0.0 {
            roots.push(a);
        } else if fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            let (mut lo, mut hi, mut flo) = (a, b, fa);
            while hi - lo > 1e-14 * hi.abs().max(1.0) {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if (fm < 0.0) == (flo < 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    Ok(roots.into_iter().map(|q| q + 0.5).collect())
}
