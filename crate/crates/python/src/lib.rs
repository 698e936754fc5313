//! Python bindings. Structured results come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use dischargekit::structures::{self, ConditionId};
use dischargekit::{choosability, discharging, graph6, repro, Limits};

fn err(e: dischargekit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn limits(max_arcs: usize, max_vertices: usize) -> Limits {
    Limits {
        max_arcs,
        max_vertices,
        ..Limits::default()
    }
}

#[pyclass(name = "Graph", module = "dischargekit_py", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyGraph(dischargekit::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        dischargekit::Graph::new(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph6::from_graph6(text).map(PyGraph).map_err(err)
    }

    fn to_graph6(&self) -> String {
        graph6::to_graph6(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.0.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.0.degree(v))
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.0.has_edge(a, b)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.vertex_count(), self.0.edge_count())
    }
}

impl PyGraph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v >= self.0.vertex_count() {
            return Err(err(dischargekit::Error::DanglingVertexIndex {
                vertex: v,
                n: self.0.vertex_count(),
            }));
        }
        Ok(())
    }
}

#[pyclass(name = "PlaneGraph", module = "dischargekit_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPlaneGraph(dischargekit::PlaneGraph);

#[pymethods]
impl PyPlaneGraph {
    /// `rotation[v]` lists the neighbors of `v` in cyclic order.
    #[new]
    fn new(rotation: Vec<Vec<usize>>) -> PyResult<Self> {
        dischargekit::PlaneGraph::new(rotation).map(PyPlaneGraph).map_err(err)
    }

    #[staticmethod]
    fn from_faces(n: usize, faces: Vec<Vec<usize>>) -> PyResult<Self> {
        dischargekit::PlaneGraph::from_faces(n, &faces).map(PyPlaneGraph).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        dischargekit::PlaneGraph::parse_json(text).map(PyPlaneGraph).map_err(err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0.to_json()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph(self.0.graph().clone())
    }

    fn rotation(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.graph().vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.rotation(v).to_vec())
    }

    /// Face boundary walks.
    fn faces(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.0.faces().map_err(err)?.into_iter().map(|f| f.boundary).collect())
    }
}

#[pyclass(name = "Orientation", module = "dischargekit_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyOrientation(dischargekit::Orientation);

#[pymethods]
impl PyOrientation {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        dischargekit::Orientation::from_arcs(n, &arcs).map(PyOrientation).map_err(err)
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.0.arcs().to_vec()
    }

    fn outdegrees(&self) -> Vec<usize> {
        self.0.outdegrees()
    }

    fn reversed(&self) -> Self {
        PyOrientation(self.0.reversed())
    }
}

#[pyfunction]
fn read_graph6(text: &str) -> PyResult<Vec<PyGraph>> {
    Ok(graph6::read_graph6(text).map_err(err)?.into_iter().map(PyGraph).collect())
}

/// `(even, odd)` Eulerian subdigraph counts.
#[pyfunction]
#[pyo3(signature = (orientation, max_arcs = Limits::default().max_arcs))]
fn count_eulerian(orientation: &PyOrientation, max_arcs: usize) -> PyResult<(u64, u64)> {
    let c = dischargekit::count_eulerian(&orientation.0, &limits(max_arcs, 0)).map_err(err)?;
    Ok((c.even, c.odd))
}

#[pyfunction]
#[pyo3(signature = (graph, sizes, max_arcs = Limits::default().max_arcs))]
fn find_certificate(py: Python<'_>, graph: &PyGraph, sizes: Vec<usize>, max_arcs: usize) -> PyResult<Py<PyAny>> {
    let cert = dischargekit::find_certificate(&graph.0, &sizes, &limits(max_arcs, 0)).map_err(err)?;
    to_py(py, &cert.map(|c| c.report()))
}

#[pyfunction]
#[pyo3(signature = (graph, k, max_vertices = Limits::default().max_vertices))]
fn is_k_choosable(py: Python<'_>, graph: &PyGraph, k: usize, max_vertices: usize) -> PyResult<Py<PyAny>> {
    let lim = limits(Limits::default().max_arcs, max_vertices);
    to_py(py, &dischargekit::is_k_choosable(&graph.0, k, &lim).map_err(err)?)
}

/// A coloring drawn from the lists, or `None`.
#[pyfunction]
fn l_color(graph: &PyGraph, lists: Vec<Vec<usize>>) -> PyResult<Option<Vec<usize>>> {
    let lists = dischargekit::ListAssignment::new(lists).map_err(err)?;
    dischargekit::l_color(&graph.0, &lists).map_err(err)
}

fn config(graph: &PyGraph, sizes: Vec<usize>, choice_set: Vec<usize>) -> PyResult<dischargekit::ReducibleConfig> {
    dischargekit::ReducibleConfig::new(graph.0.clone(), sizes, choice_set).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, sizes, max_vertices = Limits::default().max_vertices))]
fn check_extension(graph: &PyGraph, sizes: Vec<usize>, max_vertices: usize) -> PyResult<bool> {
    let c = config(graph, sizes, vec![])?;
    dischargekit::check_extension(&c, &limits(0, max_vertices)).map_err(err)
}

/// First canonical assignment with the given sizes that does not extend.
#[pyfunction]
#[pyo3(signature = (graph, sizes, max_vertices = Limits::default().max_vertices))]
fn extension_counterexample(
    graph: &PyGraph,
    sizes: Vec<usize>,
    max_vertices: usize,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let c = config(graph, sizes, vec![])?;
    let w = choosability::extension_counterexample(&c, &limits(0, max_vertices)).map_err(err)?;
    Ok(w.map(|l| l.lists().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (graph, sizes, choice_set, max_vertices = Limits::default().max_vertices))]
fn check_extension_with_rechoice(
    graph: &PyGraph,
    sizes: Vec<usize>,
    choice_set: Vec<usize>,
    max_vertices: usize,
) -> PyResult<bool> {
    let c = config(graph, sizes, choice_set)?;
    dischargekit::check_extension_with_rechoice(&c, &limits(0, max_vertices)).map_err(err)
}

fn condition_id(name: &str) -> PyResult<ConditionId> {
    ConditionId::ALL
        .into_iter()
        .find(|c| c.name().eq_ignore_ascii_case(name))
        .ok_or_else(|| PyValueError::new_err(format!("unknown condition {name:?}")))
}

/// `name` is one of `Thm1`, `Thm2`, `Corollary`.
#[pyfunction]
fn check_condition(py: Python<'_>, graph: &PyGraph, name: &str) -> PyResult<Py<PyAny>> {
    to_py(py, &structures::check_condition(&graph.0, condition_id(name)?))
}

#[pyfunction]
fn check_all_conditions(py: Python<'_>, graph: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &structures::check_all_conditions(&graph.0))
}

#[pyfunction]
fn find_trios(py: Python<'_>, graph: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &structures::find_trios(&graph.0))
}

#[pyfunction]
fn classify_role(graph: &PyGraph, vertex: usize, triangle: [usize; 3]) -> PyResult<String> {
    let r = structures::classify_role(&graph.0, vertex, triangle).map_err(err)?;
    Ok(format!("{r:?}"))
}

#[pyfunction]
fn enumerate_cycles(graph: &PyGraph, length: usize) -> PyResult<Vec<Vec<usize>>> {
    structures::enumerate_cycles(&graph.0, length).map_err(err)
}

#[pyfunction]
fn find_fixed_configs(py: Python<'_>, graph: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &structures::find_fixed_configs(&graph.0))
}

/// Runs the discharging rules; returns `{"ledger": ..., "report": ...}`.
#[pyfunction]
#[pyo3(signature = (embedding, rules_json = None))]
fn discharge(py: Python<'_>, embedding: &PyPlaneGraph, rules_json: Option<&str>) -> PyResult<Py<PyAny>> {
    let rules = match rules_json {
        Some(t) => discharging::RuleSet::from_json(t).map_err(err)?,
        None => discharging::RuleSet::default(),
    };
    let ledger = dischargekit::apply_rules(&embedding.0, &rules).map_err(err)?;
    let report = dischargekit::final_report(&ledger);
    to_py(py, &serde_json::json!({ "ledger": ledger, "report": report }))
}

/// Every bundled check as a list of rows.
#[pyfunction]
fn repro_rows(py: Python<'_>) -> PyResult<Py<PyAny>> {
    to_py(py, &repro::run_all(&Limits::default()))
}

#[pymodule]
fn dischargekit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPlaneGraph>()?;
    m.add_class::<PyOrientation>()?;
    m.add_function(wrap_pyfunction!(read_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(count_eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(find_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_choosable, m)?)?;
    m.add_function(wrap_pyfunction!(l_color, m)?)?;
    m.add_function(wrap_pyfunction!(check_extension, m)?)?;
    m.add_function(wrap_pyfunction!(extension_counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(check_extension_with_rechoice, m)?)?;
    m.add_function(wrap_pyfunction!(check_condition, m)?)?;
    m.add_function(wrap_pyfunction!(check_all_conditions, m)?)?;
    m.add_function(wrap_pyfunction!(find_trios, m)?)?;
    m.add_function(wrap_pyfunction!(classify_role, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(find_fixed_configs, m)?)?;
    m.add_function(wrap_pyfunction!(discharge, m)?)?;
    m.add_function(wrap_pyfunction!(repro_rows, m)?)?;
    Ok(())
}
