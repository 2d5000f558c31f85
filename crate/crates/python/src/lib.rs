//! Python bindings. The extension module is importable as `clawbound`.
//!
//! Structured results (traces, reports, decompositions) cross the boundary
//! as JSON strings; `json.loads` them on the Python side.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use serde_json::json;

use clawbound::decomposition::decompose;
use clawbound::domination::{self, DominationResult};
use clawbound::error::Error;
use clawbound::graph6::{emit_graph6, parse_graph6};
use clawbound::harness::{run_corpus as corpus, verify_pair as verify, RunConfig};
use clawbound::labeling::run_pipeline as pipeline;
use clawbound::{claw, product, VertexSet};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::VertexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "clawbound", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: clawbound::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        clawbound::Graph::from_edge_list(n, &edges)
            .map(|inner| PyGraph { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        parse_graph6(s).map(|inner| PyGraph { inner }).map_err(py_err)
    }

    /// Parses the `n m` header followed by `m` lines `u v`.
    #[staticmethod]
    fn from_edge_list_text(text: &str) -> PyResult<Self> {
        clawbound::Graph::parse_edge_list(text.as_bytes())
            .map(|inner| PyGraph { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        clawbound::Graph::path(n).map(|inner| PyGraph { inner }).map_err(py_err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        clawbound::Graph::cycle(n)
            .map(|inner| PyGraph { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        clawbound::Graph::complete(n)
            .map(|inner| PyGraph { inner })
            .map_err(py_err)
    }

    #[staticmethod]
    fn star(leaves: usize) -> PyResult<Self> {
        clawbound::Graph::star(leaves)
            .map(|inner| PyGraph { inner })
            .map_err(py_err)
    }

    fn to_graph6(&self) -> PyResult<String> {
        emit_graph6(&self.inner).map_err(py_err)
    }

    fn to_edge_list_text(&self) -> String {
        self.inner.to_edge_list_text()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(py_err)?;
        Ok(self.inner.degree(v))
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.closed_neighborhood(v).map(VertexSet::to_vec).map_err(py_err)
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(py_err)
    }

    fn is_claw_free(&self) -> bool {
        claw::is_claw_free(&self.inner)
    }

    /// `(center, [leaf, leaf, leaf])` of the first claw, or `None`.
    fn find_claw(&self) -> Option<(usize, Vec<usize>)> {
        claw::find_claw(&self.inner).map(|w| (w.center, w.leaves.to_vec()))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.n(), self.inner.edges())
    }
}

fn vertex_set(g: &clawbound::Graph, vs: &[usize]) -> PyResult<VertexSet> {
    let s: VertexSet = vs.iter().collect();
    g.check_set(s).map_err(py_err)?;
    Ok(s)
}

fn result_pair(r: DominationResult) -> (usize, Vec<usize>) {
    (r.value, r.witness.to_vec())
}

#[pyfunction]
fn cartesian_product(g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    product::cartesian_product(&g.inner, &h.inner)
        .map(|(inner, _)| PyGraph { inner })
        .map_err(py_err)
}

/// `(γ(G), witness)`.
#[pyfunction]
fn domination_number(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    domination::domination_number(&g.inner).map(result_pair).map_err(py_err)
}

/// `(i(G), witness)`.
#[pyfunction]
fn min_independent_dominating_set(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    domination::min_independent_dominating_set(&g.inner)
        .map(result_pair)
        .map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (g, independent = false))]
fn brute_force_gamma(g: &PyGraph, independent: bool) -> PyResult<(usize, Vec<usize>)> {
    domination::brute_force_gamma(&g.inner, independent)
        .map(result_pair)
        .map_err(py_err)
}

#[pyfunction]
fn is_dominating_set(g: &PyGraph, s: Vec<usize>) -> PyResult<bool> {
    let s = vertex_set(&g.inner, &s)?;
    domination::is_dominating_set(&g.inner, s).map_err(py_err)
}

/// Cell decomposition of `g` with respect to `gamma`, as JSON.
#[pyfunction(name = "decompose")]
fn decompose_json(g: &PyGraph, gamma: Vec<usize>) -> PyResult<String> {
    let dec = decompose(&g.inner, &gamma).map_err(py_err)?;
    serde_json::to_string(&dec.to_dump()).map_err(json_err)
}

/// Labeling pipeline on `G □ H`, returning the proof trace as JSON.
/// `d` lists flat product vertices `h * n_G + g`.
#[pyfunction]
#[pyo3(signature = (g, gamma, h, d, shuffle_seed = None))]
fn run_pipeline(
    g: &PyGraph,
    gamma: Vec<usize>,
    h: &PyGraph,
    d: Vec<usize>,
    shuffle_seed: Option<u64>,
) -> PyResult<String> {
    let d: VertexSet = d.iter().collect();
    let trace = pipeline(&g.inner, &gamma, &h.inner, d, shuffle_seed).map_err(py_err)?;
    serde_json::to_string(&trace).map_err(json_err)
}

/// Bound report, findings and proof traces for one pair, as JSON.
#[pyfunction]
#[pyo3(signature = (g, h, all_min_d = false, shuffle_seed = None))]
fn verify_pair(g: &PyGraph, h: &PyGraph, all_min_d: bool, shuffle_seed: Option<u64>) -> PyResult<String> {
    let cfg = RunConfig {
        all_min_d,
        order_shuffle_seed: shuffle_seed,
        ..RunConfig::default()
    };
    let v = verify(&g.inner, &h.inner, &cfg).map_err(py_err)?;
    serde_json::to_string(&json!({
        "report": v.report,
        "findings": v.findings,
        "max_overcount": v.max_overcount,
        "product_search_nodes": v.product_search_nodes,
        "traces": v.traces,
    }))
    .map_err(json_err)
}

/// Sweeps the built-in corpus and returns the summary as JSON.
#[pyfunction]
#[pyo3(signature = (max_ng = 6, max_nh = 4, all_min_d = false, jobs = None))]
fn run_corpus(py: Python<'_>, max_ng: usize, max_nh: usize, all_min_d: bool, jobs: Option<usize>) -> PyResult<String> {
    let cfg = RunConfig {
        all_min_d,
        jobs,
        ..RunConfig::with_caps(max_ng, max_nh)
    };
    let run = py.detach(|| corpus(&cfg)).map_err(py_err)?;
    serde_json::to_string(&json!({
        "summary": run.summary,
        "skipped_claw": run.skipped_claw,
        "skipped_disconnected": run.skipped_disconnected,
    }))
    .map_err(json_err)
}

#[pymodule]
#[pyo3(name = "clawbound")]
fn clawbound_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(cartesian_product, m)?)?;
    m.add_function(wrap_pyfunction!(domination_number, m)?)?;
    m.add_function(wrap_pyfunction!(min_independent_dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(is_dominating_set, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_json, m)?)?;
    m.add_function(wrap_pyfunction!(run_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pair, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    Ok(())
}
