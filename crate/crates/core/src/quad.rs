//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 48;
const INITIAL_PANELS: usize = 8;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn refine<F: Fn(f64) -> f64>(f: &F, p: Panel, tol: f64, depth: u32) -> Result<f64> {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    // below this the panel sum is rounding noise
    let floor = 32.0 * f64::EPSILON * (left.abs() + right.abs());
    if delta.abs() <= 15.0 * tol.max(floor) {
        return Ok(left + right + delta / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Quadrature { a: p.a, b: p.b });
    }
    let l = Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left };
    let r = Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right };
    Ok(refine(f, l, 0.5 * tol, depth + 1)? + refine(f, r, 0.5 * tol, depth + 1)?)
}

/// ∫_a^b f with absolute tolerance `tol`, starting from a few equal panels.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let h = (b - a) / INITIAL_PANELS as f64;
    let panel_tol = tol / INITIAL_PANELS as f64;
    let mut total = 0.0;
    let mut x0 = a;
    let mut f0 = f(a);
    for i in 1..=INITIAL_PANELS {
        let x1 = if i == INITIAL_PANELS { b } else { a + i as f64 * h };
        let xm = 0.5 * (x0 + x1);
        let fm = f(xm);
        let f1 = f(x1);
        let whole = simpson(x0, x1, f0, fm, f1);
        total += refine(&f, Panel { a: x0, b: x1, fa: f0, fm, fb: f1, whole }, panel_tol, 0)?;
        x0 = x1;
        f0 = f1;
    }
    Ok(total)
}

/// Sum of adaptive integrals over consecutive breakpoints.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: F, breaks: &[f64], tol: f64) -> Result<f64> {
    let pieces = breaks.len().saturating_sub(1).max(1) as f64;
    breaks.windows(2).map(|w| adaptive_simpson(&f, w[0], w[1], tol / pieces)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integral() {
        let v = adaptive_simpson(|x: f64| (-x * x).exp(), -8.0, 8.0, 1e-12).unwrap();
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn kinked_integrand_with_breakpoints() {
        let f = |x: f64| (x.abs() - 1.0).abs();
        let v = integrate_pieces(f, &[-2.0, -1.0, 0.0, 1.0, 2.0], 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn non_integrable_singularity_fails() {
        let r = adaptive_simpson(|x: f64| 1.0 / x.abs().max(1e-300), -1.0, 1.0, 1e-10);
        assert!(matches!(r, Err(Error::Quadrature { .. })));
    }
}
