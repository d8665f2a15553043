//! Python bindings: groups, generating-tuple counts, generating graphs,
//! bounds, planarity and the verification suites.

use gengraph::bounds::bounds_for;
use gengraph::count::{gen_stats, phi_enumerate_parallel, phi_mobius};
use gengraph::expr::group_from_expr;
use gengraph::graph::{build_gamma, edge_list_string, gamma_counts, GenGraph};
use gengraph::group::{min_gen_size, parse_table, write_table, FiniteGroup};
use gengraph::planarity::{expected_planarity, is_planar, SimpleGraph};
use gengraph::rational::rat_string;
use gengraph::suites::{render, run_suite, OutputFormat, RunConfig, Suite};
use gengraph::{Budgets, Error};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

pyo3::create_exception!(gengraph_py, BudgetError, PyRuntimeError);

fn py_err(e: Error) -> PyErr {
    if e.is_budget() {
        BudgetError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn budgets(steps: Option<u64>, vertex_cap: Option<usize>) -> Budgets {
    let mut b = Budgets::default();
    if let Some(s) = steps {
        b.steps = s;
    }
    if let Some(v) = vertex_cap {
        b.vertex_cap = v;
    }
    b
}

/// A finite group given by its multiplication table.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    inner: FiniteGroup,
}

#[pymethods]
impl PyGroup {
    /// Build from an expression such as `"C4xC2"`, `"D6"` or `"Q8"`.
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        Ok(PyGroup {
            inner: group_from_expr(expr).map_err(py_err)?,
        })
    }

    /// Parse a multiplication-table file's contents.
    #[staticmethod]
    fn from_table(text: &str) -> PyResult<Self> {
        Ok(PyGroup {
            inner: parse_table(text).map_err(py_err)?,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn is_cyclic(&self) -> bool {
        self.inner.is_cyclic()
    }

    /// Minimal number of generators.
    #[pyo3(signature = (steps=None))]
    fn d(&self, steps: Option<u64>) -> PyResult<usize> {
        min_gen_size(&self.inner, budgets(steps, None).steps).map_err(py_err)
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        if a >= self.inner.order() || b >= self.inner.order() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.inner.mul(a, b))
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn table(&self) -> String {
        write_table(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Group('{}', order={})", self.inner.name(), self.inner.order())
    }
}

/// A materialized generating graph.
#[pyclass(name = "GenGraph", frozen)]
struct PyGenGraph {
    inner: GenGraph,
}

#[pymethods]
impl PyGenGraph {
    #[getter]
    fn nu(&self) -> usize {
        self.inner.nu
    }

    #[getter]
    fn eta(&self) -> usize {
        self.inner.eta()
    }

    #[getter]
    fn loops(&self) -> Vec<u32> {
        self.inner.loops.clone()
    }

    #[getter]
    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges.clone()
    }

    /// The tuple of group elements at vertex `v`.
    fn vertex_tuple(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.nu {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.vertex_tuple(v).entries().to_vec())
    }

    fn component_count(&self) -> usize {
        self.inner.component_count()
    }

    fn edge_list(&self) -> String {
        edge_list_string(&self.inner)
    }

    /// Planarity verdict as a dict (`planar`, `method`, `witness`, ...).
    fn planarity<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &is_planar(&SimpleGraph::from_gamma(&self.inner)))
    }

    fn __repr__(&self) -> String {
        format!(
            "GenGraph({}, a={}, b={}, nu={}, eta={})",
            self.inner.group,
            self.inner.a,
            self.inner.b,
            self.inner.nu,
            self.inner.eta()
        )
    }
}

/// Number of generating `d`-tuples of `g`.
#[pyfunction]
#[pyo3(signature = (g, d, steps=None))]
fn phi(g: &PyGroup, d: usize, steps: Option<u64>) -> PyResult<u128> {
    phi_enumerate_parallel(&g.inner, d, budgets(steps, None).steps).map_err(py_err)
}

/// The same count by Möbius inversion over the subgroup lattice.
#[pyfunction]
#[pyo3(signature = (g, d, subgroup_cap=48))]
fn phi_by_mobius(g: &PyGroup, d: usize, subgroup_cap: usize) -> PyResult<u128> {
    phi_mobius(&g.inner, d, subgroup_cap).map_err(py_err)
}

/// `phi`, `P_G(d)` and `alpha(G, d)`, the rationals as `"p/q"` strings.
#[pyfunction]
#[pyo3(signature = (g, d, steps=None))]
fn stats<'py>(py: Python<'py>, g: &PyGroup, d: usize, steps: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let s = gen_stats(&g.inner, d, &budgets(steps, None)).map_err(py_err)?;
    #[derive(Serialize)]
    struct Row {
        group: String,
        order: usize,
        d: usize,
        phi: String,
        prob: String,
        alpha: String,
    }
    to_py(
        py,
        &Row {
            group: s.group,
            order: s.order,
            d: s.d,
            phi: s.phi.to_string(),
            prob: rat_string(&s.prob),
            alpha: rat_string(&s.alpha),
        },
    )
}

/// `(nu, eta, loops)` of the generating graph, without building it.
#[pyfunction]
#[pyo3(signature = (g, a, b, steps=None))]
fn counts(g: &PyGroup, a: usize, b: usize, steps: Option<u64>) -> PyResult<(u128, u128, u128)> {
    let c = gamma_counts(&g.inner, a, b, &budgets(steps, None)).map_err(py_err)?;
    Ok((c.nu, c.eta, c.loops))
}

#[pyfunction]
#[pyo3(signature = (g, a, b, vertex_cap=None, steps=None))]
fn generating_graph(g: &PyGroup, a: usize, b: usize, vertex_cap: Option<usize>, steps: Option<u64>) -> PyResult<PyGenGraph> {
    Ok(PyGenGraph {
        inner: build_gamma(&g.inner, a, b, &budgets(steps, vertex_cap)).map_err(py_err)?,
    })
}

/// Genus, thickness and crossing-number lower bounds.
#[pyfunction]
fn bounds<'py>(py: Python<'py>, g: &PyGroup, a: usize, b: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &bounds_for(&g.inner, a, b, &Budgets::default()).map_err(py_err)?)
}

/// Whether `Γ_{a,b}(G)` should be planar according to the classification.
#[pyfunction]
fn expected_planar(g: &PyGroup, a: usize, b: usize) -> PyResult<bool> {
    expected_planarity(&g.inner, a, b, &Budgets::default()).map_err(py_err)
}

/// Runs a verification suite; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, order_cap=None, ab_cap=6, workers=0))]
fn verify<'py>(py: Python<'py>, suite: &str, order_cap: Option<usize>, ab_cap: usize, workers: usize) -> PyResult<Bound<'py, PyAny>> {
    let cfg = RunConfig {
        order_cap,
        ab_cap,
        workers,
        ..RunConfig::default()
    };
    let s = Suite::parse(suite).map_err(py_err)?;
    let r = py.detach(|| run_suite(s, &cfg)).map_err(py_err)?;
    py.import("json")?.call_method1("loads", (render(&r, OutputFormat::Json),))
}

/// The bundled catalog.
#[pyfunction]
fn catalog() -> PyResult<Vec<PyGroup>> {
    Ok(gengraph::catalog::catalog()
        .map_err(py_err)?
        .into_iter()
        .map(|inner| PyGroup { inner })
        .collect())
}

#[pymodule]
pub fn gengraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyGenGraph>()?;
    m.add("BudgetError", m.py().get_type::<BudgetError>())?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_by_mobius, m)?)?;
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(counts, m)?)?;
    m.add_function(wrap_pyfunction!(generating_graph, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(expected_planar, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    Ok(())
}
