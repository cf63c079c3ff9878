//! Python module `offcenter`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use offcenter_core::relative::{self, EnergyLevel, LevelKind, ModelParams, Parity};
use offcenter_core::{hardwall, oracle, specfun, Error};

fn to_py(e: Error) -> PyErr {
    match e.root() {
        Error::Domain(_) | Error::ZeroDisplacement => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn params(g: f64, c: f64) -> PyResult<ModelParams> {
    ModelParams::new(g, c).map_err(to_py)
}

fn parse_parity(name: &str) -> PyResult<Option<Parity>> {
    match name {
        "even" => Ok(Some(Parity::Even)),
        "odd" => Ok(Some(Parity::Odd)),
        "both" => Ok(None),
        other => Err(PyValueError::new_err(format!("parity must be 'even', 'odd' or 'both', got {other:?}"))),
    }
}

/// One solved energy level.
#[pyclass(frozen, get_all, module = "offcenter")]
struct Level {
    n: usize,
    parity: &'static str,
    epsilon: f64,
    q: f64,
    dark: bool,
}

#[pymethods]
impl Level {
    fn __repr__(&self) -> String {
        format!("Level(n={}, parity='{}', epsilon={}, dark={})", self.n, self.parity, self.epsilon, self.dark)
    }
}

impl From<EnergyLevel> for Level {
    fn from(l: EnergyLevel) -> Self {
        Self { n: l.n, parity: l.parity.label(), epsilon: l.epsilon, q: l.q, dark: l.kind == LevelKind::Dark }
    }
}

fn find_level(p: ModelParams, n: usize) -> PyResult<EnergyLevel> {
    let lv = relative::solve_levels(p, Parity::of(n), n / 2 + 1).map_err(to_py)?;
    Ok(lv[n / 2])
}

/// Lowest levels at coupling `g` and displacement `c`.
#[pyfunction]
#[pyo3(signature = (g, c, parity = "both", count = 6))]
fn levels(g: f64, c: f64, parity: &str, count: usize) -> PyResult<Vec<Level>> {
    let p = params(g, c)?;
    let lv = match parse_parity(parity)? {
        Some(par) => relative::solve_levels(p, par, count),
        None => relative::solve_spectrum(p, count),
    }
    .map_err(to_py)?;
    Ok(lv.into_iter().map(Level::from).collect())
}

/// Normalized eigenfunction of level `n` at the points `x`.
#[pyfunction]
fn wavefunction(g: f64, c: f64, n: usize, x: Vec<f64>) -> PyResult<Vec<f64>> {
    let p = params(g, c)?;
    let psi = relative::build_wavefunction(find_level(p, n)?, p).map_err(to_py)?;
    Ok(x.iter().map(|&x| relative::evaluate_wavefunction(&psi, x)).collect())
}

/// ⟨x²⟩ of level `n`.
#[pyfunction]
fn width(g: f64, c: f64, n: usize) -> PyResult<f64> {
    let p = params(g, c)?;
    let psi = relative::build_wavefunction(find_level(p, n)?, p).map_err(to_py)?;
    relative::width(&psi).map_err(to_py)
}

/// (n, c*) pairs with H_n(c*/√2) = 0, ascending in c*.
#[pyfunction]
#[pyo3(signature = (n_max, c_max = 4.0))]
fn dark_points(n_max: usize, c_max: f64) -> Vec<(usize, f64)> {
    hardwall::dark_points(n_max, c_max).into_iter().map(|p| (p.n, p.c_star)).collect()
}

/// Infinite-coupling levels as (kind, parity, epsilon, triple).
#[pyfunction]
fn hardwall_spectrum(c: f64, count: usize) -> PyResult<Vec<(&'static str, &'static str, f64, bool)>> {
    let m = hardwall::merged_spectrum(c, count).map_err(to_py)?;
    Ok(m.into_iter()
        .map(|l| {
            let kind = match l.level.kind {
                hardwall::HardwallKind::Inside => "inside",
                hardwall::HardwallKind::Outside => "outside",
            };
            (kind, l.level.parity.label(), l.level.epsilon, l.triple)
        })
        .collect())
}

/// Finite-difference eigenvalues, ⟨x²⟩ and h-halving error bounds.
#[pyfunction]
#[pyo3(signature = (g, c, k = 6, h = 0.002, half_width = None))]
fn grid_oracle(g: f64, c: f64, k: usize, h: f64, half_width: Option<f64>) -> PyResult<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let p = params(g, c)?;
    let mut spec = oracle::GridSpec::for_displacement(c);
    spec.h = h;
    if let Some(l) = half_width {
        spec.l = l;
    }
    let r = oracle::certified_eigensolve(p, &spec, k).map_err(to_py)?;
    Ok((r.eigenvalues, r.second_moments, r.certified_errors))
}

/// Parabolic cylinder function D_q(x).
#[pyfunction]
fn pcf_d(q: f64, x: f64) -> PyResult<f64> {
    Ok(specfun::pcf_d(q, x).map_err(to_py)?.value)
}

#[pymodule]
fn offcenter(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Level>()?;
    m.add_function(wrap_pyfunction!(levels, m)?)?;
    m.add_function(wrap_pyfunction!(wavefunction, m)?)?;
    m.add_function(wrap_pyfunction!(width, m)?)?;
    m.add_function(wrap_pyfunction!(dark_points, m)?)?;
    m.add_function(wrap_pyfunction!(hardwall_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(grid_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(pcf_d, m)?)?;
    Ok(())
}
