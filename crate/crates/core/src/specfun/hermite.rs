//! Physicists' Hermite polynomials.

use crate::tridiag::SymTridiagonal;

pub const MAX_HERMITE_ORDER: usize = 60;

/// H_n(y) by the three-term recurrence H_{k+1} = 2y H_k - 2k H_{k-1}.
pub fn hermite_value(n: usize, y: f64) -> f64 {
    hermite_pair(n, y).0
}

/// (H_n(y), H_{n-1}(y)); the second entry is 0 for n = 0.
fn hermite_pair(n: usize, y: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Sum of |a_k| |y|^k over the monomial coefficients of H_n; the natural
/// scale against which a computed zero of H_n is judged.
pub fn hermite_scale(n: usize, y: f64) -> f64 {
    let ya = y.abs();
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = 2.0 * ya * cur + 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All real roots of H_n in ascending order.
///
/// Roots come from the eigenvalues of the symmetric Jacobi matrix of the
/// monic recurrence p_{k+1} = y p_k - (k/2) p_{k-1}, then get two Newton
/// polishing steps on H_n itself.
pub fn hermite_roots(n: usize) -> Vec<f64> {
    assert!((1..=MAX_HERMITE_ORDER).contains(&n), "hermite_roots supports 1 <= n <= {MAX_HERMITE_ORDER}, got {n}");
    if n == 1 {
        return vec![0.0];
    }
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let jacobi = SymTridiagonal::new(vec![0.0; n], off);
    let mut roots: Vec<f64> = jacobi.lowest(n).expect("Jacobi matrix bisection cannot fail for n <= 60");
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let (h, hm1) = hermite_pair(n, *r);
            let dh = 2.0 * n as f64 * hm1;
            if dh != 0.0 {
                *r -= h / dh;
            }
        }
    }
    // the spectrum is symmetric; enforce it exactly
    for i in 0..n / 2 {
        let m = 0.5 * (roots[n - 1 - i] - roots[i]);
        roots[i] = -m;
        roots[n - 1 - i] = m;
    }
    if n % 2 == 1 {
        roots[n / 2] = 0.0;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn low_order_values() {
        assert!(hermite_value(2, FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(hermite_value(0, 3.7), 1.0);
        assert_eq!(hermite_value(3, 1.0), -4.0);
        assert_eq!(hermite_value(4, 2.0), 16.0 * 16.0 - 48.0 * 4.0 + 12.0);
    }

    #[test]
    fn closed_form_roots() {
        let r2 = hermite_roots(2);
        assert!((r2[0] + FRAC_1_SQRT_2).abs() < 1e-15 && (r2[1] - FRAC_1_SQRT_2).abs() < 1e-15);
        let r3 = hermite_roots(3);
        let a = 1.5f64.sqrt();
        assert!((r3[0] + a).abs() < 1e-15 && r3[1] == 0.0 && (r3[2] - a).abs() < 1e-15);
        let r4 = hermite_roots(4);
        let inner = ((3.0 - 6f64.sqrt()) / 2.0).sqrt();
        let outer = ((3.0 + 6f64.sqrt()) / 2.0).sqrt();
        assert!((r4[2] - inner).abs() < 1e-14, "{} vs {inner}", r4[2]);
        assert!((r4[3] - outer).abs() < 1e-14);
        assert!((r4[2] - 0.524_647_623_275_290_3).abs() < 1e-12);
        assert!((r4[3] - 1.650_680_123_885_784_6).abs() < 1e-12);
    }

    #[test]
    fn all_roots_vanish_relative_to_scale() {
        for n in 1..=MAX_HERMITE_ORDER {
            let roots = hermite_roots(n);
            assert_eq!(roots.len(), n);
            for w in roots.windows(2) {
                assert!(w[0] < w[1], "n={n} not ascending");
            }
            for &r in &roots {
                let v = hermite_value(n, r).abs();
                assert!(v <= 1e-10 * hermite_scale(n, r), "n={n} r={r} H={v:e}");
            }
        }
    }
}
