//! Python bindings: exact cyclotomic numbers, star quivers, and the decision procedures.

use num_complex::Complex64;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use orbidecide::certificate::Certificate;
use orbidecide::deligne_simpson::{self, DSInstance};
use orbidecide::exactnum::{parse_cyc, CycNum};
use orbidecide::genus::{self, Bounds};
use orbidecide::numeric::{self, NumericClassSpec, NumericOutcome, SolverConfig};
use orbidecide::orbifold::{self, CParams, EtaSign, ExponentSet, OrbifoldCurve};
use orbidecide::point_support::point_support_witness;
use orbidecide::star_roots::{self, RootKind, RootVector};
use orbidecide::Decision;

type Matrix = Vec<Vec<Complex64>>;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn cyc(text: &str) -> PyResult<CycNum> {
    parse_cyc(text).map_err(value_err)
}

fn cyc_rows(rows: &[Vec<String>]) -> PyResult<Vec<Vec<CycNum>>> {
    rows.iter().map(|r| r.iter().map(|s| cyc(s)).collect()).collect()
}

fn sign(text: &str) -> PyResult<EtaSign> {
    text.parse().map_err(PyValueError::new_err)
}

/// `("YES", certificate)`, `("NO", None)` or `("UNKNOWN", bound)`.
fn decision<'py, C: ToString>(py: Python<'py>, d: &Decision<C>) -> PyResult<Bound<'py, PyAny>> {
    let pair = match d {
        Decision::Yes(c) => ("YES", c.to_string()).into_pyobject(py)?.into_any(),
        Decision::No => ("NO", py.None()).into_pyobject(py)?.into_any(),
        Decision::UnknownUpTo(b) => ("UNKNOWN", *b).into_pyobject(py)?.into_any(),
    };
    Ok(pair)
}

/// Element of a cyclotomic field, kept exact.
#[pyclass(name = "Cyc", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCyc(CycNum);

#[pymethods]
impl PyCyc {
    /// Parses `"p/q"` or `"cyc(n)[k:c, ...]"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        cyc(text).map(PyCyc)
    }

    #[staticmethod]
    fn root_of_unity(n: u32, j: i64) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        Ok(PyCyc(CycNum::root_of_unity(n, j)))
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    fn classify(&self) -> String {
        format!("{:?}", self.0.classify()).to_lowercase()
    }

    fn is_rational_integer(&self) -> bool {
        self.0.is_rational_integer()
    }

    fn to_complex(&self) -> Complex64 {
        self.0.to_complex()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyCyc(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyCyc(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyCyc(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_div(&other.0).map(PyCyc).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> Self {
        PyCyc(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Cyc('{}')", self.0)
    }
}

/// Star-shaped quiver with legs of lengths `n_i - 1`.
#[pyclass(name = "StarQuiver", frozen)]
struct PyStarQuiver(star_roots::StarQuiver);

#[pymethods]
impl PyStarQuiver {
    #[new]
    fn new(orders: Vec<u32>) -> PyResult<Self> {
        star_roots::build_star(&orders).map(PyStarQuiver).map_err(value_err)
    }

    #[getter]
    fn orders(&self) -> Vec<u32> {
        self.0.orders()
    }

    fn kind(&self) -> String {
        star_roots::classify(&self.0).to_string()
    }

    fn delta(&self) -> PyResult<Vec<i64>> {
        star_roots::delta(&self.0).map(|d| d.coeffs().to_vec()).map_err(value_err)
    }

    /// Positive roots up to `height` as `(coefficients, "real" | "imaginary")`.
    fn roots(&self, height: u64) -> Vec<(Vec<i64>, &'static str)> {
        star_roots::positive_roots_up_to(&self.0, height)
            .into_iter()
            .map(|(r, k)| (r.coeffs().to_vec(), if k == RootKind::Real { "real" } else { "imaginary" }))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("StarQuiver({:?})", self.0.orders())
    }
}

/// Exponents `e_ij` from `(c, η)` on a compact curve with the given point orders.
#[pyfunction]
#[pyo3(signature = (points, c, eta, genus = 0, eta_sign = "s41"))]
fn tau(points: Vec<u32>, c: Vec<Vec<String>>, eta: Vec<String>, genus: u32, eta_sign: &str) -> PyResult<Vec<Vec<String>>> {
    let curve = OrbifoldCurve::compact(genus, points).map_err(value_err)?;
    let p = CParams::new(cyc_rows(&c)?, eta.iter().map(|s| cyc(s)).collect::<PyResult<_>>()?);
    let e = orbifold::tau_from_c_eta(&curve, &p, sign(eta_sign)?).map_err(value_err)?;
    Ok(e.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect())
}

/// Least `(a, b)` for a module supported at a point of order `n`, if any.
#[pyfunction]
fn point_support(n: u32, c_row: Vec<String>) -> PyResult<Option<(u64, u64)>> {
    if n < 2 || c_row.len() != n as usize - 1 {
        return Err(PyValueError::new_err("need n >= 2 and n - 1 parameters"));
    }
    let row: Vec<CycNum> = c_row.iter().map(|s| cyc(s)).collect::<PyResult<_>>()?;
    Ok(point_support_witness(n, &row).certificate().map(|w| (w.a, w.b)))
}

/// Nonvanishing of category O, routed by genus and compactness.
///
/// Returns the decision pair and whether the certificate replays.
#[pyfunction]
#[pyo3(signature = (points, c, eta, genus = 0, punctures = 0, eta_sign = "s41", d_max = 24, height = 60))]
#[allow(clippy::too_many_arguments)]
fn check_o<'py>(
    py: Python<'py>,
    points: Vec<u32>,
    c: Vec<Vec<String>>,
    eta: Vec<String>,
    genus: u32,
    punctures: u32,
    eta_sign: &str,
    d_max: u64,
    height: u64,
) -> PyResult<(Bound<'py, PyAny>, Option<String>, bool)> {
    let curve = OrbifoldCurve::new(genus, punctures == 0, punctures, points).map_err(value_err)?;
    let p = CParams::new(cyc_rows(&c)?, eta.iter().map(|s| cyc(s)).collect::<PyResult<_>>()?);
    let s = sign(eta_sign)?;
    let bounds = Bounds { d_max, height, ..Bounds::default() };
    let d = if curve.is_compact() && genus == 0 {
        deligne_simpson::category_o_nonzero_genus0(&curve, &p, &bounds, s)
    } else {
        genus::category_o_nonzero(&curve, &p, &bounds, s)
    }
    .map_err(value_err)?;
    let criterion = d.certificate().map(|c: &Certificate| c.criterion().to_string());
    let replay = d.certificate().is_some_and(|c| c.replay(&curve, &p, s));
    Ok((decision(py, &d)?, criterion, replay))
}

/// Least strict root with integral exponent on the star of `orders`.
#[pyfunction]
#[pyo3(signature = (orders, e, height = 60))]
fn strict_root_search<'py>(py: Python<'py>, orders: Vec<u32>, e: Vec<Vec<String>>, height: u64) -> PyResult<Bound<'py, PyAny>> {
    let q = star_roots::build_star(&orders).map_err(value_err)?;
    let e = ExponentSet::new(cyc_rows(&e)?);
    decision(py, &deligne_simpson::strict_root_search(&q, &e, height).map_err(value_err)?)
}

fn ds_instance(e: &[Vec<String>], alpha: &str) -> PyResult<DSInstance> {
    let alpha = RootVector::parse(alpha).map_err(value_err)?;
    DSInstance::new(ExponentSet::new(cyc_rows(e)?), alpha).map_err(value_err)
}

/// Decomposition of `alpha` (written `"[a0; legs|...]"`) into roots with integral exponent.
#[pyfunction]
#[pyo3(signature = (e, alpha, box_cap = 1 << 22))]
fn cb_solvable<'py>(py: Python<'py>, e: Vec<Vec<String>>, alpha: &str, box_cap: u64) -> PyResult<Bound<'py, PyAny>> {
    let inst = ds_instance(&e, alpha)?;
    decision(py, &deligne_simpson::cb_solvable(&inst, box_cap).map_err(value_err)?)
}

/// Numerical search for `T_1 ⋯ T_m = I` in the semisimple classes of the instance.
///
/// Returns `None`, or `(residual, restart, matrices)` with matrices as nested lists.
#[pyfunction]
#[pyo3(signature = (e, alpha, seed = 0, restarts = 64, tol = 1e-9))]
fn solve_numeric(
    py: Python<'_>,
    e: Vec<Vec<String>>,
    alpha: &str,
    seed: u64,
    restarts: u32,
    tol: f64,
) -> PyResult<Option<(f64, u32, Vec<Matrix>)>> {
    let inst = ds_instance(&e, alpha)?;
    let spec = NumericClassSpec::from_instance(&inst).map_err(value_err)?;
    let cfg = SolverConfig { seed, restarts, tol, ..SolverConfig::default() };
    let outcome = py.detach(|| numeric::solve_numeric(&spec, &cfg));
    Ok(match outcome {
        NumericOutcome::NotFound => None,
        NumericOutcome::Found(sol) => {
            let mats = sol
                .matrices
                .iter()
                .map(|m| (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect()).collect())
                .collect();
            Some((sol.residual, sol.restart, mats))
        }
    })
}

/// Runs the command-line front end on `args`, returning `(exit code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = orbidecide::cli::main_with_args(std::iter::once("orbidecide".to_string()).chain(args), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

#[pymodule(name = "orbidecide")]
fn orbidecide_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyc>()?;
    m.add_class::<PyStarQuiver>()?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(point_support, m)?)?;
    m.add_function(wrap_pyfunction!(check_o, m)?)?;
    m.add_function(wrap_pyfunction!(strict_root_search, m)?)?;
    m.add_function(wrap_pyfunction!(cb_solvable, m)?)?;
    m.add_function(wrap_pyfunction!(solve_numeric, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
