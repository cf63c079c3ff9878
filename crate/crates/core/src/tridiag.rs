//! Symmetric tridiagonal eigenproblems by Sturm-sequence bisection.

use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 200;

#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    /// `off[i]` couples rows `i` and `i + 1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "empty matrix");
        assert_eq!(off.len() + 1, diag.len(), "off-diagonal length mismatch");
        Self { diag, off }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `lambda`.
    pub fn count_below(&self, lambda: f64) -> usize {
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut q = self.diag[0] - lambda;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            if q.abs() < tiny {
                q = if q < 0.0 { -tiny } else { tiny };
            }
            let e = self.off[i - 1];
            q = self.diag[i] - lambda - e * e / q;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.dim() {
            return Err(Error::Domain(format!("eigenvalue index {k} out of range")));
        }
        let (mut lo, mut hi) = self.gershgorin();
        let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
        let tol = 4.0 * f64::EPSILON * scale;
        for _ in 0..MAX_BISECTIONS {
            if hi - lo <= tol {
                return Ok(0.5 * (lo + hi));
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return Ok(mid);
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::NonConvergence(format!("bisection for eigenvalue {k} stalled at width {:e}", hi - lo)))
    }

    pub fn lowest(&self, k: usize) -> Result<Vec<f64>> {
        (0..k).map(|i| self.eigenvalue(i)).collect()
    }

    /// Unit eigenvector for a converged eigenvalue, by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.dim();
        let (lo, hi) = self.gershgorin();
        let shift = lambda + 64.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7 % 13) as f64)).collect();
        for _ in 0..3 {
            v = self.solve_shifted(shift, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        v
    }

    /// Solves (T - shift·I) x = b with partial pivoting.
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Vec<f64> {
        let n = self.dim();
        // rows stored as (main, upper, upper2) after elimination
        let mut d: Vec<f64> = self.diag.iter().map(|x| x - shift).collect();
        let mut du: Vec<f64> = self.off.clone();
        du.push(0.0);
        let mut dl: Vec<f64> = self.off.clone();
        let mut du2 = vec![0.0; n];
        let mut rhs = b.to_vec();
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                let piv = if d[i] == 0.0 { f64::MIN_POSITIVE } else { d[i] };
                let m = dl[i] / piv;
                d[i + 1] -= m * du[i];
                rhs[i + 1] -= m * rhs[i];
            } else {
                // swap rows i and i + 1
                let m = d[i] / dl[i];
                d[i] = dl[i];
                let tmp = d[i + 1];
                d[i + 1] = du[i] - m * tmp;
                du2[i] = du[i + 1];
                du[i + 1] = -m * du2[i];
                du[i] = tmp;
                rhs.swap(i, i + 1);
                rhs[i + 1] -= m * rhs[i];
            }
            dl[i] = 0.0;
        }
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = rhs[i];
            if i + 1 < n {
                s -= du[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= du2[i] * x[i + 2];
            }
            let piv = if d[i].abs() < tiny { tiny.copysign(d[i]) } else { d[i] };
            x[i] = s / piv;
        }
        x
    }
}
