//! Exact spectrum of the relative motion of two trapped particles coupled
//! by a pair of displaced delta potentials,
//!
//! H = -d²/dx² + x²/4 + g [δ(x + c) + δ(x - c)],
//!
//! in oscillator units, together with the infinite-coupling limit, a
//! finite-difference reference solver and parameter sweeps.

pub mod error;
pub mod hardwall;
pub mod oracle;
pub mod quad;
pub mod relative;
mod roots;
pub mod scan;
pub mod specfun;
pub mod tridiag;

pub use error::{Error, Result};

pub use hardwall::{
    classify_regime, dark_points, inside_levels, merged_spectrum, outside_levels, DarkPoint, HardwallKind,
    HardwallLevel, MergedLevel, Regime,
};
pub use oracle::{certified_eigensolve, contact_reference, grid_eigensolve, DeltaModel, GridSpec, OracleResult};
pub use relative::{
    boundary_residuals, build_wavefunction, evaluate_wavefunction, node_count, solve_levels, solve_spectrum,
    spectral_function, width, EnergyLevel, LevelKind, ModelParams, Parity, PiecewiseWavefunction, Residuals,
    SolverConfig,
};
pub use scan::{
    crossings, sweep_c, sweep_g, sweep_infinite, sweep_widths, Crossing, LevelFlag, LevelId, ScanResult, WidthTable,
};
