use proptest::prelude::*;

use offcenter_core::relative::{
    boundary_residuals, build_wavefunction, evaluate_wavefunction, node_count, norm, solve_levels, spectral_function,
    ModelParams, Parity, SolverConfig,
};
use offcenter_core::scan::{linspace, sweep_g};
use offcenter_core::specfun::{gamma_real, pcf_d_and_slope, rgamma};
use offcenter_core::{grid_eigensolve, DeltaModel, GridSpec, LevelId};

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gamma_recurrence_and_reflection(x in 0.05f64..12.0) {
        let g = gamma_real(x).unwrap();
        prop_assert!((gamma_real(x + 1.0).unwrap() - x * g).abs() <= 1e-13 * (x * g).abs());
        let s = (std::f64::consts::PI * x).sin();
        if s.abs() > 1e-3 {
            let refl = gamma_real(x).unwrap() * gamma_real(1.0 - x).unwrap();
            prop_assert!((refl * s - std::f64::consts::PI).abs() < 1e-11);
        }
    }

    #[test]
    fn pcf_three_term_recurrence(q in -8.0f64..15.0, x in -4.0f64..8.0) {
        let d = |q: f64| pcf_d_and_slope(q, x).unwrap().0;
        let (lo, mid, hi) = (d(q - 1.0), d(q), d(q + 1.0));
        let scale = lo.abs().max(mid.abs() * x.abs().max(1.0)).max(hi.abs()) * q.abs().max(1.0);
        prop_assert!((hi - x * mid + q * lo).abs() <= 1e-10 * scale);
    }

    #[test]
    fn pcf_wronskian(q in -6.0f64..12.0, x in 0.0f64..4.0) {
        let (a, da) = pcf_d_and_slope(q, x).unwrap();
        let (b, db) = pcf_d_and_slope(q, -x).unwrap();
        let w = -a * db - da * b;
        let want = (2.0 * std::f64::consts::PI).sqrt() * rgamma(-q);
        let scale = (a * db).abs() + (da * b).abs();
        prop_assert!((w - want).abs() <= 1e-10 * scale.max(1.0));
    }

    #[test]
    fn levels_rise_with_coupling(c in 0.2f64..3.0, g1 in -3.0f64..30.0, dg in 0.01f64..20.0, p in parity()) {
        let a = solve_levels(ModelParams::new(g1, c).unwrap(), p, 3).unwrap();
        let b = solve_levels(ModelParams::new(g1 + dg, c).unwrap(), p, 3).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(x.epsilon <= y.epsilon + 1e-9);
        }
    }

    #[test]
    fn repulsion_never_lowers_a_level(c in 0.1f64..4.0, g in 0.0f64..200.0, p in parity()) {
        for l in solve_levels(ModelParams::new(g, c).unwrap(), p, 4).unwrap() {
            prop_assert!(l.epsilon >= l.n as f64 + 0.5 - 1e-9);
            prop_assert_eq!(l.parity, p);
        }
    }

    #[test]
    fn roots_are_zeros_of_the_spectral_function(c in 0.2f64..3.0, g in -4.0f64..40.0, p in parity()) {
        let params = ModelParams::new(g, c).unwrap();
        for l in solve_levels(params, p, 3).unwrap() {
            let (f, near_pole) = spectral_function(l.q, params, p).unwrap();
            if !near_pole {
                let (fl, _) = spectral_function(l.q - 1e-6, params, p).unwrap();
                let (fr, _) = spectral_function(l.q + 1e-6, params, p).unwrap();
                prop_assert!(f.abs() <= 1e-6 * (fr - fl).abs() + 1e-12, "F = {} at Q = {}", f, l.q);
            }
        }
    }

    #[test]
    fn eigenfunctions_are_normalized_symmetric_and_labelled(
        c in 0.2f64..3.0, g in -3.0f64..50.0, p in parity(), k in 0usize..3,
    ) {
        let params = ModelParams::new(g, c).unwrap();
        let level = solve_levels(params, p, k + 1).unwrap()[k];
        let psi = build_wavefunction(level, params).unwrap();
        prop_assert!((norm(&psi).unwrap() - 1.0).abs() < 1e-8);
        for i in 0..40 {
            let x = 0.137 * i as f64;
            prop_assert_eq!(evaluate_wavefunction(&psi, -x), p.sign() * evaluate_wavefunction(&psi, x));
        }
        prop_assert_eq!(node_count(&psi), level.n);
        prop_assert!(boundary_residuals(&psi, params).max() <= 1e-6);
    }

    #[test]
    fn grid_spectrum_is_ordered_with_positive_moments(c in 0.0f64..2.0, g in -2.0f64..20.0) {
        let r = grid_eigensolve(ModelParams::new(g, c).unwrap(), &GridSpec::new(10.0, 0.005, DeltaModel::SplitWeight), 5).unwrap();
        prop_assert!(r.eigenvalues.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(r.second_moments.iter().all(|m| *m > 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn continuation_matches_fresh_solves(c in 0.3f64..2.5) {
        let samples = linspace(-2.0, 20.0, 9);
        let config = SolverConfig::default();
        let r = sweep_g(c, &samples, 4, &config).unwrap();
        prop_assert_eq!(&r, &sweep_g(c, &samples, 4, &config).unwrap());
        for (i, &g) in samples.iter().enumerate() {
            let params = ModelParams::new(g, c).unwrap();
            for p in [Parity::Even, Parity::Odd] {
                for l in solve_levels(params, p, 2).unwrap() {
                    let col = r.column(&LevelId::Finite { n: l.n, parity: p }).unwrap();
                    prop_assert!((col[i] - l.epsilon).abs() <= 1e-9);
                }
            }
        }
    }
}
