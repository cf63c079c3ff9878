//! Real-argument gamma function and friends.

use std::f64::consts::PI;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// sin(pi x) with exact argument reduction, so integers give exactly zero.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if n.rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

/// cos(pi x) with exact argument reduction.
pub fn cos_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let c = (PI * r).cos();
    if n.rem_euclid(2.0) == 0.0 {
        c
    } else {
        -c
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Lanczos sum for x >= 0.5.
fn gamma_lanczos(x: f64) -> f64 {
    // exact factorials keep integer arguments bit-clean
    if x == x.floor() && x <= 23.0 {
        return (1..x as u64).fold(1.0, |acc, k| acc * k as f64);
    }
    let z = x - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (i, &coef) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += coef / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power to delay overflow
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * sum
}

/// Gamma function for real, non-pole arguments.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::GammaPole(x));
    }
    if x >= 0.5 {
        Ok(gamma_lanczos(x))
    } else {
        Ok(PI / (sin_pi(x) * gamma_lanczos(1.0 - x)))
    }
}

/// Reciprocal gamma 1/Γ(x). Entire, so it is exactly zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        1.0 / gamma_lanczos(x)
    } else {
        sin_pi(x) * gamma_lanczos(1.0 - x) / PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn closed_forms() {
        assert_relative_eq!(gamma_real(0.5).unwrap(), PI.sqrt(), max_relative = 1e-14);
        assert_eq!(gamma_real(5.0).unwrap(), 24.0);
        assert_relative_eq!(gamma_real(-0.5).unwrap(), -2.0 * PI.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(gamma_real(1.5).unwrap(), 0.5 * PI.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn poles_are_errors() {
        for x in [0.0, -1.0, -2.0, -17.0] {
            assert!(matches!(gamma_real(x), Err(Error::GammaPole(_))));
            assert_eq!(rgamma(x), 0.0);
        }
    }

    #[test]
    fn large_arguments_match_factorials() {
        // 29! and Γ(30.5) = (59!!/2^30)·√π
        let f29: f64 = (1..=29u32).map(f64::from).product();
        assert_relative_eq!(gamma_real(30.0).unwrap(), f29, max_relative = 1e-13);
        let mut half = PI.sqrt();
        for k in 0..30 {
            half *= 0.5 + k as f64;
        }
        assert_relative_eq!(gamma_real(30.5).unwrap(), half, max_relative = 1e-13);
        assert_relative_eq!(gamma_real(-29.5).unwrap(), PI / (sin_pi(-29.5) * half), max_relative = 1e-13);
    }

    #[test]
    fn reflection_identity() {
        for i in 1..100 {
            let x = i as f64 / 100.0;
            let lhs = gamma_real(x).unwrap() * gamma_real(1.0 - x).unwrap() * (PI * x).sin() / PI;
            assert!((lhs - 1.0).abs() < 1e-12, "x={x} lhs={lhs}");
        }
    }

    #[test]
    fn trig_reduction_is_exact_at_integers() {
        assert_eq!(sin_pi(7.0), 0.0);
        assert_eq!(cos_pi(3.0), -1.0);
        assert_relative_eq!(sin_pi(-19.5), 1.0, max_relative = 1e-15);
    }
}
