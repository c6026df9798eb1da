//! Python bindings for the biharmonic decomposition solvers.

use biharm_core as core;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(biharm, BiharmError, PyValueError);

fn err(e: core::Error) -> PyErr {
    BiharmError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(s: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    s.parse()
        .map_err(|e: T::Err| BiharmError::new_err(e.to_string()))
}

/// Truncated Maclaurin series in `x`.
#[pyclass(name = "XSeries", module = "biharm", skip_from_py_object)]
#[derive(Clone)]
pub struct PyXSeries(core::XSeries);

#[pymethods]
impl PyXSeries {
    #[new]
    fn new(coeffs: Vec<f64>) -> PyResult<Self> {
        core::XSeries::new(coeffs).map(Self).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn coeffs(&self) -> Vec<f64> {
        self.0.coeffs().to_vec()
    }

    /// Coefficient of `x^n`; zero beyond the truncation order.
    fn coeff(&self, n: usize) -> f64 {
        self.0.coeff(n)
    }

    fn eval(&self, x: f64) -> f64 {
        self.0.eval(x)
    }

    fn __len__(&self) -> usize {
        self.0.coeffs().len()
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __eq__(&self, other: PyRef<'_, Self>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("XSeries({})", self.0)
    }
}

/// Initial value problem on the line or with radial symmetry.
#[pyclass(name = "Problem", module = "biharm", skip_from_py_object)]
#[derive(Clone)]
pub struct PyProblem(core::Problem);

#[pymethods]
impl PyProblem {
    #[new]
    #[pyo3(signature = (
        geometry, g = "-y^2", alpha = 0.0, omega = 1.0, b2 = 0.0, f = None,
        y0 = 0.0, y1 = 0.0, y2 = 0.0, y3 = 0.0, allow_irregular = false
    ))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        geometry: &str,
        g: &str,
        alpha: f64,
        omega: f64,
        b2: f64,
        f: Option<&str>,
        y0: f64,
        y1: f64,
        y2: f64,
        y3: f64,
        allow_irregular: bool,
    ) -> PyResult<Self> {
        let mut p = core::Problem::new(parse(geometry)?, parse(g)?);
        p.alpha = alpha;
        p.omega = omega;
        p.b2 = b2;
        if let Some(f) = f {
            p.forcing = core::parse_forcing(f).map_err(err)?;
        }
        (p.y0, p.y1, p.y2, p.y3) = (y0, y1, y2, y3);
        p.allow_irregular = allow_irregular;
        p.validate().map_err(err)?;
        Ok(Self(p))
    }

    /// `g(y) = -y^(twice_sigma + 1)`, `omega = 1`, `y(0) = r0`, `y''(0) = r2`.
    #[staticmethod]
    fn standing_wave(geometry: &str, twice_sigma: u32, r0: f64, r2: f64) -> PyResult<Self> {
        Ok(Self(core::Problem::standing_wave(
            parse(geometry)?,
            twice_sigma,
            r0,
            r2,
        )))
    }

    #[getter]
    fn geometry(&self) -> String {
        self.0.geometry.to_string()
    }

    #[getter]
    fn g(&self) -> String {
        self.0.g.to_string()
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.0.alpha
    }

    #[getter]
    fn omega(&self) -> f64 {
        self.0.omega
    }

    #[getter]
    fn b2(&self) -> f64 {
        self.0.b2
    }

    #[getter]
    fn forcing(&self) -> PyXSeries {
        PyXSeries(self.0.forcing.clone())
    }

    #[getter]
    fn initial(&self) -> (f64, f64, f64, f64) {
        (self.0.y0, self.0.y1, self.0.y2, self.0.y3)
    }

    fn __repr__(&self) -> String {
        let p = &self.0;
        format!(
            "Problem(geometry={}, g={}, alpha={}, omega={}, b2={}, y0={}, y1={}, y2={}, y3={})",
            p.geometry, p.g, p.alpha, p.omega, p.b2, p.y0, p.y1, p.y2, p.y3
        )
    }
}

/// Decomposition `y = y_0 + ... + y_K` produced by one method.
#[pyclass(name = "Expansion", module = "biharm", skip_from_py_object)]
pub struct PyExpansion(core::Expansion);

#[pymethods]
impl PyExpansion {
    #[getter]
    fn method(&self) -> String {
        self.0.method.to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn components(&self) -> Vec<PyXSeries> {
        self.0.components.iter().cloned().map(PyXSeries).collect()
    }

    fn sum(&self) -> PyXSeries {
        PyXSeries(self.0.sum())
    }

    /// `y_0 + ... + y_upto`.
    fn partial_sum(&self, upto: usize) -> PyResult<PyXSeries> {
        self.0.partial_sum(upto).map(PyXSeries).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Expansion(method={}, components={}, order={})",
            self.0.method,
            self.0.len(),
            self.0.order()
        )
    }
}

/// Fixed-step RK4 samples.
#[pyclass(name = "SampleTable", module = "biharm", skip_from_py_object)]
pub struct PySampleTable(core::SampleTable);

#[pymethods]
impl PySampleTable {
    #[getter]
    fn xs(&self) -> Vec<f64> {
        self.0.xs.clone()
    }

    #[getter]
    fn ys(&self) -> Vec<f64> {
        self.0.ys.clone()
    }

    #[getter]
    fn step(&self) -> f64 {
        self.0.meta.step
    }

    #[getter]
    fn start(&self) -> f64 {
        self.0.meta.start
    }

    fn __len__(&self) -> usize {
        self.0.xs.len()
    }
}

/// Pointwise comparison of a series against samples.
#[pyclass(name = "ComparisonReport", module = "biharm", skip_from_py_object)]
pub struct PyComparisonReport(core::ComparisonReport);

#[pymethods]
impl PyComparisonReport {
    #[getter]
    fn max_abs_error(&self) -> f64 {
        self.0.max_abs_error
    }

    #[getter]
    fn max_rel_error(&self) -> f64 {
        self.0.max_rel_error
    }

    /// `(x, series, numeric, abs_error)` per sample.
    #[getter]
    fn rows(&self) -> Vec<(f64, f64, f64, f64)> {
        self.0
            .rows
            .iter()
            .map(|r| (r.x, r.series, r.numeric, r.abs_error))
            .collect()
    }
}

/// Outcome of the built-in regression suite.
#[pyclass(name = "RegressionReport", module = "biharm", skip_from_py_object)]
pub struct PyRegressionReport(core::regression::RegressionReport);

#[pymethods]
impl PyRegressionReport {
    /// True when no check failed; discrepancies are allowed.
    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    /// Row counts keyed by `PASS`, `DISCREPANCY` and `FAIL`.
    fn counts<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        use core::regression::Status;
        let d = PyDict::new(py);
        for s in [Status::Pass, Status::Discrepancy, Status::Fail] {
            d.set_item(s.to_string(), self.0.count(s))?;
        }
        Ok(d)
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn __len__(&self) -> usize {
        self.0.rows.len()
    }
}

fn method(name: &str) -> PyResult<core::Method> {
    parse(name)
}

/// Solves `problem` with `method` (`ADM_1D`, `LADM_1D`, `ADM_RADIAL`,
/// `LADM_RADIAL`), keeping `terms` corrections to `order`.
#[pyfunction]
#[pyo3(signature = (problem, method_name, terms = core::DEFAULT_TERMS, order = core::DEFAULT_ORDER))]
fn solve(
    problem: PyRef<'_, PyProblem>,
    method_name: &str,
    terms: usize,
    order: usize,
) -> PyResult<PyExpansion> {
    method(method_name)?
        .solve(&problem.0, terms, order)
        .map(PyExpansion)
        .map_err(err)
}

/// Maclaurin series of the exact solution from the Taylor recurrence.
#[pyfunction]
#[pyo3(signature = (problem, order = core::DEFAULT_ORDER))]
fn taylor_oracle(problem: PyRef<'_, PyProblem>, order: usize) -> PyResult<PyXSeries> {
    core::taylor_oracle(&problem.0, order)
        .map(PyXSeries)
        .map_err(err)
}

/// Components `y_0 ..= y_terms` of `method` from the independent recurrence.
#[pyfunction]
#[pyo3(signature = (problem, method_name, terms = core::DEFAULT_TERMS, order = core::DEFAULT_ORDER))]
fn component_oracle(
    problem: PyRef<'_, PyProblem>,
    method_name: &str,
    terms: usize,
    order: usize,
) -> PyResult<Vec<PyXSeries>> {
    core::component_oracle(method(method_name)?, &problem.0, terms, order)
        .map(|v| v.into_iter().map(PyXSeries).collect())
        .map_err(err)
}

/// Left-hand side minus right-hand side of the equation applied to `y`.
#[pyfunction]
fn residual(problem: PyRef<'_, PyProblem>, y: PyRef<'_, PyXSeries>) -> PyResult<PyXSeries> {
    core::residual(&problem.0, &y.0).map(PyXSeries).map_err(err)
}

/// Lowest degree at which the residual of `y` is significant, if any.
#[pyfunction]
#[pyo3(signature = (problem, y, rel_tol = 1e-9))]
fn residual_floor_degree(
    problem: PyRef<'_, PyProblem>,
    y: PyRef<'_, PyXSeries>,
    rel_tol: f64,
) -> PyResult<Option<usize>> {
    core::residual_floor_degree(&problem.0, &y.0, rel_tol).map_err(err)
}

/// RK4 solution on `[0, x_max]`.
#[pyfunction]
#[pyo3(signature = (problem, x_max, step = 1e-3))]
fn integrate_numeric(
    problem: PyRef<'_, PyProblem>,
    x_max: f64,
    step: f64,
) -> PyResult<PySampleTable> {
    core::integrate_numeric(&problem.0, x_max, step)
        .map(PySampleTable)
        .map_err(err)
}

#[pyfunction]
fn compare(series: PyRef<'_, PyXSeries>, table: PyRef<'_, PySampleTable>) -> PyComparisonReport {
    PyComparisonReport(core::compare(&series.0, &table.0))
}

/// `A_0 ..= A_k_max` for the nonlinearity `g` and the given components.
#[pyfunction]
fn adomian_polys(
    g: &str,
    components: Vec<PyRef<'_, PyXSeries>>,
    k_max: usize,
) -> PyResult<Vec<PyXSeries>> {
    let g: core::NonlinearitySpec = parse(g)?;
    let comps: Vec<core::XSeries> = components.iter().map(|c| c.0.clone()).collect();
    core::adomian_polys(&g, &comps, k_max)
        .map(|v| v.into_iter().map(PyXSeries).collect())
        .map_err(err)
}

#[pyfunction]
fn run_regression() -> PyResult<PyRegressionReport> {
    core::regression::run_regression()
        .map(PyRegressionReport)
        .map_err(err)
}

#[pymodule]
fn biharm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BiharmError", m.py().get_type::<BiharmError>())?;
    m.add("DEFAULT_ORDER", core::DEFAULT_ORDER)?;
    m.add("DEFAULT_TERMS", core::DEFAULT_TERMS)?;
    m.add_class::<PyXSeries>()?;
    m.add_class::<PyProblem>()?;
    m.add_class::<PyExpansion>()?;
    m.add_class::<PySampleTable>()?;
    m.add_class::<PyComparisonReport>()?;
    m.add_class::<PyRegressionReport>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(taylor_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(component_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(residual, m)?)?;
    m.add_function(wrap_pyfunction!(residual_floor_degree, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_numeric, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(adomian_polys, m)?)?;
    m.add_function(wrap_pyfunction!(run_regression, m)?)?;
    Ok(())
}
