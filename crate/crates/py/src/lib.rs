//! Python bindings: `import pylogzeta`.

use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use logzeta::{arithmetic, li, logderiv, special, BoundParameters, Error, PrecisionConfig};

fn to_py(err: Error) -> PyErr {
    if err.is_numerical() {
        PyArithmeticError::new_err(err.to_string())
    } else {
        PyValueError::new_err(err.to_string())
    }
}

fn bounds(delta: f64, delta0: f64, constant_c: f64) -> PyResult<BoundParameters> {
    BoundParameters::new(delta, delta0, constant_c).map_err(to_py)
}

/// Λ(m) for 1 <= m <= n_max.
#[pyclass(name = "MangoldtTable", frozen)]
struct PyMangoldtTable {
    inner: arithmetic::MangoldtTable,
}

#[pymethods]
impl PyMangoldtTable {
    #[new]
    fn new(n_max: usize) -> PyResult<Self> {
        Ok(Self {
            inner: arithmetic::build_mangoldt(n_max).map_err(to_py)?,
        })
    }

    #[getter]
    fn limit(&self) -> usize {
        self.inner.limit()
    }

    fn get(&self, m: usize) -> Option<f64> {
        self.inner.get(m)
    }

    fn chebyshev_psi(&self, n_cut: usize) -> PyResult<f64> {
        self.inner.chebyshev_psi(n_cut).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.inner.limit()
    }
}

#[pyclass(name = "ApproxReport", frozen)]
struct PyApproxReport {
    #[pyo3(get)]
    order: u32,
    #[pyo3(get)]
    point: Complex64,
    #[pyo3(get)]
    cutoff: usize,
    #[pyo3(get)]
    approximation: Complex64,
    #[pyo3(get)]
    reference: Complex64,
    #[pyo3(get)]
    residual_abs: f64,
    #[pyo3(get)]
    bound: f64,
    #[pyo3(get)]
    ratio: f64,
}

impl From<logderiv::ApproxReport> for PyApproxReport {
    fn from(r: logderiv::ApproxReport) -> Self {
        Self {
            order: r.order,
            point: r.point,
            cutoff: r.cutoff,
            approximation: r.approximation,
            reference: r.reference,
            residual_abs: r.residual_abs,
            bound: r.bound,
            ratio: r.ratio,
        }
    }
}

#[pymethods]
impl PyApproxReport {
    fn __repr__(&self) -> String {
        format!(
            "ApproxReport(order={}, point={}, cutoff={}, residual_abs={:e}, bound={:e}, ratio={})",
            self.order, self.point, self.cutoff, self.residual_abs, self.bound, self.ratio
        )
    }
}

#[pyfunction]
fn approx_log_derivative(table: &PyMangoldtTable, n: u32, a: Complex64, cutoff: usize) -> PyResult<Complex64> {
    logderiv::approx_log_derivative(&table.inner, n, a, cutoff).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (table, n, a, cutoff, delta = 0.0, delta0 = 1e-4, constant_c = 1.0))]
fn residual_report(
    table: &PyMangoldtTable,
    n: u32,
    a: Complex64,
    cutoff: usize,
    delta: f64,
    delta0: f64,
    constant_c: f64,
) -> PyResult<PyApproxReport> {
    let bp = bounds(delta, delta0, constant_c)?;
    let cfg = PrecisionConfig::default();
    logderiv::residual_report(&table.inner, n, a, cutoff, &bp, &cfg)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (table, n, a_grid, cutoff, delta = 0.0, delta0 = 1e-4, constant_c = 1.0))]
fn scan_over_a(
    table: &PyMangoldtTable,
    n: u32,
    a_grid: Vec<f64>,
    cutoff: usize,
    delta: f64,
    delta0: f64,
    constant_c: f64,
) -> PyResult<Vec<PyApproxReport>> {
    let bp = bounds(delta, delta0, constant_c)?;
    let series =
        logderiv::scan_over_a(&table.inner, n, &a_grid, cutoff, &bp, &PrecisionConfig::default()).map_err(to_py)?;
    Ok(series.entries.into_iter().map(Into::into).collect())
}

#[pyfunction]
#[pyo3(signature = (table, n, a, n_grid, delta = 0.0, delta0 = 1e-4, constant_c = 1.0))]
fn scan_over_n_cut(
    table: &PyMangoldtTable,
    n: u32,
    a: Complex64,
    n_grid: Vec<usize>,
    delta: f64,
    delta0: f64,
    constant_c: f64,
) -> PyResult<Vec<PyApproxReport>> {
    let bp = bounds(delta, delta0, constant_c)?;
    let series =
        logderiv::scan_over_n_cut(&table.inner, n, a, &n_grid, &bp, &PrecisionConfig::default()).map_err(to_py)?;
    Ok(series.entries.into_iter().map(Into::into).collect())
}

#[pyfunction]
fn compensating_integral(a: Complex64, j: u32, big_n: f64) -> PyResult<Complex64> {
    arithmetic::compensating_integral(a, j, big_n).map_err(to_py)
}

#[pyfunction]
fn zeta(s: Complex64) -> PyResult<Complex64> {
    special::zeta(s, &PrecisionConfig::default()).map_err(to_py)
}

/// `[g', g'', …, g⁽ⁿ⁾]` for `g = ln ζ` at `s`.
#[pyfunction]
fn log_zeta_derivatives(s: Complex64, n: usize) -> PyResult<Vec<Complex64>> {
    special::log_zeta_derivatives(s, n, &PrecisionConfig::default()).map_err(to_py)
}

#[pyfunction]
fn digamma(z: Complex64) -> PyResult<Complex64> {
    special::digamma(z, &PrecisionConfig::default()).map_err(to_py)
}

#[pyfunction]
fn log_gamma(z: Complex64) -> PyResult<Complex64> {
    special::log_gamma(z, &PrecisionConfig::default()).map_err(to_py)
}

#[pyfunction]
fn hurwitz_zeta(j: u32, q: Complex64) -> PyResult<Complex64> {
    special::hurwitz_zeta(j, q, &PrecisionConfig::default()).map_err(to_py)
}

#[pyfunction]
fn mellin_kernel(n: u32, a: Complex64, s: Complex64) -> PyResult<Complex64> {
    li::mellin_kernel(n, a, s).map_err(to_py)
}

#[pyfunction]
fn li_sum_arithmetic_side(table: &PyMangoldtTable, n: u32, a: Complex64, cutoff: usize) -> PyResult<Complex64> {
    li::li_sum_arithmetic_side(&table.inner, n, a, cutoff, &PrecisionConfig::default()).map_err(to_py)
}

#[pyfunction]
fn li_sum_derivative_side(n: u32, a: Complex64) -> PyResult<Complex64> {
    li::li_sum_derivative_side(n, a, &PrecisionConfig::default()).map_err(to_py)
}

#[pyfunction]
fn eta_coefficient(table: &PyMangoldtTable, n: u32, cutoff: usize) -> PyResult<f64> {
    logderiv::eta_coefficient(&table.inner, n, cutoff).map_err(to_py)
}

#[pyfunction]
fn line_one_oscillation(table: &PyMangoldtTable, t: f64, cutoff: usize) -> PyResult<Complex64> {
    logderiv::line_one_oscillation(&table.inner, t, cutoff, &PrecisionConfig::default()).map_err(to_py)
}

#[pymodule]
fn pylogzeta(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMangoldtTable>()?;
    m.add_class::<PyApproxReport>()?;
    m.add_function(wrap_pyfunction!(approx_log_derivative, m)?)?;
    m.add_function(wrap_pyfunction!(residual_report, m)?)?;
    m.add_function(wrap_pyfunction!(scan_over_a, m)?)?;
    m.add_function(wrap_pyfunction!(scan_over_n_cut, m)?)?;
    m.add_function(wrap_pyfunction!(compensating_integral, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(log_zeta_derivatives, m)?)?;
    m.add_function(wrap_pyfunction!(digamma, m)?)?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(mellin_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(li_sum_arithmetic_side, m)?)?;
    m.add_function(wrap_pyfunction!(li_sum_derivative_side, m)?)?;
    m.add_function(wrap_pyfunction!(eta_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(line_one_oscillation, m)?)?;
    Ok(())
}
