//! Weber parabolic cylinder functions D_ν(x) for real order and argument.
//!
//! On x >= 0, D_ν is the solution that decays at +∞. It is anchored by its
//! large-x asymptotic expansion and carried inward with Taylor steps, which
//! is the numerically stable direction for a recessive solution. For x < 0
//! the connection formula splits
//!
//! D_ν(-u) = cos(πν) D_ν(u) + W_ν(u),
//!
//! where W_ν is the purely growing solution with W(0) = (1 - cos πν) D_ν(0)
//! and W'(0) = -(1 + cos πν) D'_ν(0). Each piece is evaluated in its own
//! stable direction, so near-integer orders keep full relative accuracy.

use std::f64::consts::{PI, SQRT_2};

use super::gamma::{cos_pi, rgamma, sin_pi};
use super::kummer::kummer_m;
use super::weber::{propagate, Node, SolutionTable};
use crate::error::{Error, Result};

/// Largest |x| accepted by the public evaluators.
pub const MAX_ARGUMENT: f64 = 60.0;

/// Estimated absolute error above which evaluation reports accuracy loss,
/// relative to the local magnitude of the solution.
pub const ACCURACY_LOSS_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub est_abs_error: f64,
}

impl EvalResult {
    /// `envelope` is the local solution magnitude |y| + |y'|/κ, which stays
    /// representative near zeros of the value itself.
    fn checked(self, order: f64, x: f64, envelope: f64) -> Result<Self> {
        if !self.value.is_finite() {
            return Err(Error::Overflow { order, x });
        }
        if self.est_abs_error > ACCURACY_LOSS_THRESHOLD * envelope.max(self.value.abs()).max(1.0) {
            return Err(Error::AccuracyLoss { order, x, est: self.est_abs_error });
        }
        Ok(self)
    }
}

/// D_ν(0) = 2^{ν/2} √π / Γ((1 - ν)/2).
pub fn pcf_d_origin(nu: f64) -> f64 {
    (0.5 * nu).exp2() * PI.sqrt() * rgamma(0.5 * (1.0 - nu))
}

/// D'_ν(0) = -2^{(ν+1)/2} √π / Γ(-ν/2).
pub fn pcf_dprime_origin(nu: f64) -> f64 {
    -(0.5 * (nu + 1.0)).exp2() * PI.sqrt() * rgamma(-0.5 * nu)
}

/// Summed asymptotic series sum_s t_s with t_{s+1}/t_s = sign (2s + m)(2s + m + 1) / (2(s+1) x²).
///
/// For the recessive solution m = -ν and sign = -1; for the dominant one
/// m = ν + 1 and sign = +1. Returns (S, dS/dx, relative error) or `None` when
/// the series has not converged before it starts to diverge.
fn asymptotic_series(m: f64, sign: f64, x: f64) -> Option<(f64, f64, f64)> {
    let x2 = x * x;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut dsum = 0.0f64;
    let mut abs_sum = 1.0f64;
    let mut max_term = 1.0f64;
    let mut prev_ratio = f64::INFINITY;
    for s in 0..4000usize {
        let sf = s as f64;
        let ratio = sign * (2.0 * sf + m) * (2.0 * sf + m + 1.0) / (2.0 * (sf + 1.0) * x2);
        let next = term * ratio;
        if next == 0.0 {
            return Some((sum, dsum, f64::EPSILON * abs_sum / sum.abs()));
        }
        // past the minimum of |ratio| and still growing: divergent tail
        if ratio.abs() >= 1.0 && ratio.abs() > prev_ratio {
            return None;
        }
        prev_ratio = ratio.abs();
        sum += next;
        dsum += -2.0 * (sf + 1.0) * next / x;
        abs_sum += next.abs();
        max_term = max_term.max(next.abs());
        term = next;
        if term.abs() < 1e-17 * sum.abs() {
            if max_term > 1e3 * sum.abs() {
                return None;
            }
            return Some((sum, dsum, term.abs() / sum.abs() + f64::EPSILON * abs_sum / sum.abs()));
        }
    }
    None
}

/// Recessive solution D_ν(x) and D'_ν(x) from the asymptotic expansion.
fn decaying_asymptotic(nu: f64, x: f64) -> Option<(Node, f64)> {
    let (s, ds, rel) = asymptotic_series(-nu, -1.0, x)?;
    let scale = (-x * x / 4.0 + nu * x.ln()).exp();
    let y = scale * s;
    let dy = scale * ((nu / x - 0.5 * x) * s + ds);
    Some((Node { x, y, dy, err: rel * y.abs() }, rel))
}

/// Log of e^{x²/4} x^{ν} times the asymptotic series of D_ν(x); used for
/// the scaled evaluation far out where D itself underflows.
fn decaying_asymptotic_scaled(nu: f64, x: f64) -> Option<f64> {
    let (s, _, _) = asymptotic_series(-nu, -1.0, x)?;
    Some((nu * x.ln()).exp() * s)
}

/// Dominant solution V with V ~ e^{x²/4} x^{-ν-1}, as (ln scale, S, dS/dx).
fn growing_asymptotic(nu: f64, x: f64) -> Option<(f64, f64, f64)> {
    let (s, ds, _) = asymptotic_series(nu + 1.0, 1.0, x)?;
    Some((x * x / 4.0 - (nu + 1.0) * x.ln(), s, ds))
}

/// Point where the recessive solution is anchored to its expansion.
fn find_anchor(nu: f64) -> (Node, f64) {
    let mut x = (2.0 * (nu.abs() + 1.0).sqrt() + 4.0).max(10.0);
    for _ in 0..40 {
        if let Some(found) = decaying_asymptotic(nu, x) {
            return found;
        }
        x += 3.0;
    }
    unreachable!("asymptotic expansion of D_{nu} failed to converge")
}

/// Everything needed to evaluate D_ν and its derivative for one order.
#[derive(Debug, Clone)]
pub struct PcfTable {
    order: f64,
    anchor_x: f64,
    anchor_rel: f64,
    decaying: SolutionTable,
    growing: Option<SolutionTable>,
    cos_pi_nu: f64,
    v_coef: f64,
    d0: f64,
    dp0: f64,
}

impl PcfTable {
    /// Tabulates D_ν on [0, anchor] and, when `negative_reach > 0`, the
    /// growing piece needed for arguments down to -negative_reach.
    pub fn new(order: f64, negative_reach: f64) -> Self {
        let a = order + 0.5;
        let (anchor, anchor_rel) = find_anchor(order);
        let decaying = SolutionTable::build(a, anchor, 0.0);
        let d0 = pcf_d_origin(order);
        let dp0 = pcf_dprime_origin(order);
        let cos_pi_nu = cos_pi(order);
        let growing = (negative_reach > 0.0).then(|| {
            let s = sin_pi(0.5 * order);
            let c = cos_pi(0.5 * order);
            let start = Node::new(0.0, 2.0 * s * s * d0, -2.0 * c * c * dp0);
            SolutionTable::build(a, start, negative_reach.min(anchor.x))
        });
        Self {
            order,
            anchor_x: anchor.x,
            anchor_rel,
            decaying,
            growing,
            cos_pi_nu,
            v_coef: (2.0 * PI).sqrt() * rgamma(-order),
            d0,
            dp0,
        }
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    /// Closed-form D_ν(0) minus the value reached by inward continuation.
    pub fn origin_mismatch(&self) -> f64 {
        self.decaying.nodes()[0].y - self.d0
    }

    /// Recessive side, x >= 0: (D, D', abs error).
    fn eval_nonneg(&self, x: f64) -> (f64, f64, f64) {
        if x >= self.anchor_x {
            return match decaying_asymptotic(self.order, x) {
                Some((n, _)) => (n.y, n.dy, n.err),
                None => {
                    let n = self.decaying.eval(x);
                    (n.y, n.dy, n.err + self.anchor_rel * n.y.abs())
                }
            };
        }
        let n = self.decaying.eval(x);
        (n.y, n.dy, n.err + 2.0 * self.anchor_rel * n.y.abs())
    }

    /// D_ν(x) and D'_ν(x) with an absolute error estimate for D_ν(x).
    pub fn eval(&self, x: f64) -> (f64, f64, f64) {
        if x >= 0.0 {
            return self.eval_nonneg(x);
        }
        let u = -x;
        let (du, dpu, eu) = self.eval_nonneg(u);
        let (w, dw, ew) = self.growing_at(u);
        let value = self.cos_pi_nu * du + w;
        let slope = -(self.cos_pi_nu * dpu + dw);
        (value, slope, eu + ew)
    }

    /// The growing piece W(u), u >= 0.
    fn growing_at(&self, u: f64) -> (f64, f64, f64) {
        if self.v_coef == 0.0 {
            return (0.0, 0.0, 0.0);
        }
        match &self.growing {
            Some(t) if u <= t.hi() * 1.000_001 || u < self.anchor_x => {
                let n = if u <= t.hi() {
                    t.eval(u)
                } else {
                    propagate(self.order + 0.5, t.nodes()[t.nodes().len() - 1], u, None)
                };
                (n.y, n.dy, n.err)
            }
            _ => {
                if let Some((ln_scale, s, ds)) = growing_asymptotic(self.order, u) {
                    let scale = ln_scale.exp();
                    let y = self.v_coef * scale * s;
                    let dy = self.v_coef * scale * ((0.5 * u - (self.order + 1.0) / u) * s + ds);
                    (y, dy, 4.0 * f64::EPSILON * y.abs())
                } else {
                    let s = sin_pi(0.5 * self.order);
                    let c = cos_pi(0.5 * self.order);
                    let start = Node::new(0.0, 2.0 * s * s * self.d0, -2.0 * c * c * self.dp0);
                    let n = propagate(self.order + 0.5, start, u, None);
                    (n.y, n.dy, n.err)
                }
            }
        }
    }
}

fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() || x.abs() > MAX_ARGUMENT {
        return Err(Error::Domain(format!("pcf argument {x} outside [-{MAX_ARGUMENT}, {MAX_ARGUMENT}]")));
    }
    Ok(())
}

fn check_order(q: f64) -> Result<()> {
    if !q.is_finite() {
        return Err(Error::Domain(format!("non-finite order {q}")));
    }
    Ok(())
}

fn envelope(q: f64, x: f64, value: f64, slope: f64) -> f64 {
    let kappa = (x * x / 4.0 - q - 0.5).abs().max(1.0).sqrt();
    value.abs() + slope.abs() / kappa
}

/// D_Q(x) with an error estimate.
pub fn pcf_d(q: f64, x: f64) -> Result<EvalResult> {
    check_order(q)?;
    check_argument(x)?;
    let table = PcfTable::new(q, (-x).max(0.0));
    let (value, slope, est) = table.eval(x);
    EvalResult { value, est_abs_error: est }.checked(q, x, envelope(q, x, value, slope))
}

/// D_Q(x) and D'_Q(x) from a single continuation (no table is kept).
pub fn pcf_d_and_slope(q: f64, x: f64) -> Result<(f64, f64)> {
    check_order(q)?;
    check_argument(x)?;
    let (value, slope, est) = if x >= 0.0 {
        let (anchor, rel) = find_anchor(q);
        if x >= anchor.x {
            let t = PcfTable::new(q, 0.0);
            t.eval_nonneg(x)
        } else {
            let n = propagate(q + 0.5, anchor, x, None);
            (n.y, n.dy, n.err + 2.0 * rel * n.y.abs())
        }
    } else {
        PcfTable::new(q, -x).eval(x)
    };
    EvalResult { value, est_abs_error: est }.checked(q, x, envelope(q, x, value, slope))?;
    Ok((value, slope))
}

/// Solutions of Weber's equation of order `q` normalized at the origin:
/// the even one with y(0) = 1, y'(0) = 0, the odd one with y(0) = 0,
/// y'(0) = 1. Returns (y, y') at `x`.
pub fn parity_solution(q: f64, even: bool, x: f64) -> (f64, f64) {
    let start = if even { Node::new(0.0, 1.0, 0.0) } else { Node::new(0.0, 0.0, 1.0) };
    let n = propagate(q + 0.5, start, x, None);
    (n.y, n.dy)
}

/// D'_Q(x) = (x/2) D_Q(x) - D_{Q+1}(x).
pub fn pcf_d_prime(q: f64, x: f64) -> Result<EvalResult> {
    let d = pcf_d(q, x)?;
    let d_next = pcf_d(q + 1.0, x)?;
    Ok(EvalResult {
        value: 0.5 * x * d.value - d_next.value,
        est_abs_error: 0.5 * x.abs() * d.est_abs_error + d_next.est_abs_error,
    })
}

/// D_Q(x) e^{x²/4} for x >= 0, which stays representable where D_Q underflows.
pub fn pcf_d_scaled(q: f64, x: f64) -> Result<f64> {
    check_order(q)?;
    check_argument(x)?;
    if x < 0.0 {
        return Err(Error::Domain("scaled evaluation needs x >= 0".into()));
    }
    if let Some(v) = decaying_asymptotic_scaled(q, x.max(1e-300)) {
        if x >= find_anchor(q).0.x {
            return Ok(v);
        }
    }
    Ok(pcf_d(q, x)?.value * (x * x / 4.0).exp())
}

/// D_Q(x) straight from the two Kummer series about the origin:
///
/// D_ν(x) = 2^{ν/2} √π e^{-x²/4} [ M(-ν/2, 1/2, x²/2) / Γ((1-ν)/2)
///           - √2 x M((1-ν)/2, 3/2, x²/2) / Γ(-ν/2) ].
///
/// Accurate for moderate |x|; it loses roughly e^{x²/2} in relative accuracy
/// on the recessive side.
pub fn pcf_d_kummer(q: f64, x: f64) -> EvalResult {
    let z = 0.5 * x * x;
    let even = kummer_m(-0.5 * q, 0.5, z);
    let odd = kummer_m(0.5 * (1.0 - q), 1.5, z);
    let pref = (0.5 * q).exp2() * PI.sqrt() * (-0.5 * z).exp();
    let ge = rgamma(0.5 * (1.0 - q));
    let go = SQRT_2 * x * rgamma(-0.5 * q);
    let value = pref * (ge * even.value - go * odd.value);
    let est = pref
        * (ge.abs() * (even.last_term + f64::EPSILON * even.abs_sum)
            + go.abs() * (odd.last_term + f64::EPSILON * odd.abs_sum))
        * 4.0;
    EvalResult { value, est_abs_error: est }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::hermite::hermite_value;

    #[test]
    fn integer_orders_in_closed_form() {
        let r = pcf_d(0.0, 1.3).unwrap();
        assert!((r.value - (-0.4225f64).exp()).abs() < 1e-14);
        let r = pcf_d(1.0, 1.0).unwrap();
        assert!((r.value - (-0.25f64).exp()).abs() < 1e-14);
        let r = pcf_d(2.0, 1.0).unwrap();
        assert!(r.value.abs() < 1e-14);
    }

    #[test]
    fn derivative_at_origin() {
        assert!(pcf_d_prime(0.0, 0.0).unwrap().value.abs() < 1e-14);
        assert!((pcf_d_prime(1.0, 0.0).unwrap().value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn origin_values_consistent_with_inward_continuation() {
        for &q in &[-7.3, -1.5, -0.2, 0.0, 0.5, 2.0, 3.3, 9.9, 17.0, 25.5] {
            let t = PcfTable::new(q, 0.0);
            let scale = pcf_d_origin(q).abs().max(pcf_dprime_origin(q).abs());
            assert!(t.origin_mismatch().abs() < 1e-12 * scale, "q={q}: {:e}", t.origin_mismatch());
        }
    }

    #[test]
    fn kummer_route_agrees_near_origin() {
        for &q in &[-2.7, 0.5, 1.5, 4.2] {
            for i in -20..=20 {
                let x = i as f64 * 0.1;
                let a = pcf_d(q, x).unwrap().value;
                let b = pcf_d_kummer(q, x).value;
                assert!((a - b).abs() < 1e-12 * (1.0 + a.abs()), "q={q} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn hermite_reduction_spot_checks() {
        for n in 0..=10usize {
            for &x in &[-5.0, -2.2, 0.0, 0.7, 5.0] {
                let expect = (-(n as f64) / 2.0).exp2() * hermite_value(n, x / SQRT_2) * (-x * x / 4.0f64).exp();
                let got = pcf_d(n as f64, x).unwrap().value;
                assert!((got - expect).abs() < 1e-10, "n={n} x={x}: {got} vs {expect}");
            }
        }
    }

    #[test]
    fn far_negative_argument_uses_connection_formula() {
        // integer order: D_n(-x) = (-1)^n D_n(x) even deep in the tail
        let a = pcf_d(3.0, -30.0).unwrap().value;
        let b = pcf_d(3.0, 30.0).unwrap().value;
        assert!((a + b).abs() <= 1e-14 * b.abs());
        // non-integer order overflows eventually
        assert!(matches!(pcf_d(0.5, -60.0), Err(Error::Overflow { .. })));
    }
}
