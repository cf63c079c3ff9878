//! Special functions: gamma, Hermite polynomials, Kummer series and Weber
//! parabolic cylinder functions of real order and argument.

pub mod gamma;
pub mod hermite;
pub mod kummer;
pub mod pcf;
pub mod weber;

pub use gamma::{gamma_real, rgamma};
pub use hermite::{hermite_roots, hermite_value, MAX_HERMITE_ORDER};
pub use pcf::{
    parity_solution, pcf_d, pcf_d_and_slope, pcf_d_kummer, pcf_d_origin, pcf_d_prime, pcf_d_scaled, pcf_dprime_origin,
    EvalResult, PcfTable,
};
