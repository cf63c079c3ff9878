//! Bracketing and bisection on scalar functions.

use crate::error::Result;

/// Bisects a sign change of `f` on [lo, hi] down to width `tol`.
///
/// `f_lo` is f(lo); the signs of f(lo) and f(hi) must differ. An exact zero
/// at a probe ends the search early.
pub(crate) fn bisect<F>(f: F, mut lo: f64, mut hi: f64, f_lo: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let neg_lo = f_lo < 0.0;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Walks `f` upward from `start` with a step chosen by `step(q)` and
/// collects the first `count` sign changes, each refined to `tol`.
///
/// Stops early (returning fewer roots) once q exceeds `q_max`.
pub(crate) fn scan_roots<F, S>(f: F, step: S, start: f64, q_max: f64, count: usize, tol: f64) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
    S: Fn(f64) -> f64,
{
    let mut roots = Vec::with_capacity(count);
    let mut q = start;
    let mut fq = f(q)?;
    while roots.len() < count && q < q_max {
        let next = (q + step(q)).min(q_max);
        let fn_ = f(next)?;
        if fq == 0.0 {
            roots.push(q);
        } else if fn_ != 0.0 && (fn_ < 0.0) != (fq < 0.0) {
            roots.push(bisect(&f, q, next, fq, tol)?);
        }
        q = next;
        fq = fn_;
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sine_zeros() {
        let roots = scan_roots(|x: f64| Ok(x.sin()), |_| 0.1, 0.5, 20.0, 4, 1e-13).unwrap();
        for (k, r) in roots.iter().enumerate() {
            assert!((r - (k + 1) as f64 * std::f64::consts::PI).abs() < 1e-12);
        }
    }

    #[test]
    fn stops_at_range_end() {
        let roots = scan_roots(|x: f64| Ok(x.sin()), |_| 0.1, 0.5, 5.0, 4, 1e-13).unwrap();
        assert_eq!(roots.len(), 1);
    }
}
