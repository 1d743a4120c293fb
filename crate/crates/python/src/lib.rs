//! Python bindings. Binomials and monomials cross the boundary as strings in
//! the edge-label notation (`e1*e5 - e3*e6`), orders as spec strings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use toricgraph::algebra::text::{format_binomial, format_monomial};
use toricgraph::gb::monomial_ideal_height;
use toricgraph::toric::{self, GraverBackend, PrimitiveClass};
use toricgraph::{catalog, chromatic, export, graph, kmy, Error, MonomialOrder};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Capability(_) | Error::BoundViolation { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A simple graph on vertices `1..=p` with labelled edges.
#[pyclass(name = "Graph", frozen, module = "pytoricgraph")]
struct PyGraph {
    inner: toricgraph::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = toricgraph::Graph::new(vertex_count, &edges).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    /// Parses the edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: graph::parse_graph(text).map_err(to_py)? })
    }

    /// `K4`, `C6`, `bow-tie`, ...
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        catalog::by_name(name)
            .map(|inner| PyGraph { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown graph {name:?}")))
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// `(label, u, v)` triples.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner.edges().iter().map(|e| (e.label, e.u, e.v)).collect()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn delete_edge(&self, label: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: self.inner.delete_edge(label).map_err(to_py)? })
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.inner.vertex_count(), self.inner.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>())
    }
}

impl PyGraph {
    fn order(&self, spec: Option<&str>, partial: bool, default: MonomialOrder) -> PyResult<MonomialOrder> {
        match spec {
            Some(s) => MonomialOrder::parse_spec(s, &self.inner.labels(), partial).map_err(to_py),
            None => Ok(default),
        }
    }
}

/// Reduced Gröbner basis of the toric ideal under graded reverse lex.
#[pyfunction]
fn toric_ideal(g: &PyGraph) -> PyResult<Vec<String>> {
    let labels = g.inner.labels();
    let ideal = toric::toric_ideal(&g.inner).map_err(to_py)?;
    Ok(ideal.generators().iter().map(|b| format_binomial(b, &labels)).collect())
}

/// Reduced Gröbner basis under `order` (a spec string).
#[pyfunction]
#[pyo3(signature = (g, order=None, partial=false))]
fn groebner_basis(g: &PyGraph, order: Option<&str>, partial: bool) -> PyResult<Vec<String>> {
    let labels = g.inner.labels();
    let order = g.order(order, partial, MonomialOrder::grevlex_identity(g.inner.edge_count()))?;
    let ideal = toric::toric_ideal(&g.inner).and_then(|i| i.reduced(&order)).map_err(to_py)?;
    Ok(ideal.generators().iter().map(|b| format_binomial(b, &labels)).collect())
}

/// Minimal generators of the initial ideal.
#[pyfunction]
#[pyo3(signature = (g, order=None, partial=false))]
fn initial_ideal(g: &PyGraph, order: Option<&str>, partial: bool) -> PyResult<Vec<String>> {
    let labels = g.inner.labels();
    let order = g.order(order, partial, MonomialOrder::grevlex_identity(g.inner.edge_count()))?;
    let init = toric::toric_ideal(&g.inner)
        .and_then(|i| toric::initial_ideal_via_groebner(&i, &order))
        .map_err(to_py)?;
    Ok(init.iter().map(|m| format_monomial(m, &labels)).collect())
}

/// Height by the closed formula and by degeneration.
#[pyfunction]
fn height<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let h = toric::height_toric(&g.inner).map_err(to_py)?;
    let steps = kmy::deletion_sequence(&g.inner).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("formula", h.formula)?;
    d.set_item("degeneration", h.degeneration)?;
    d.set_item("deletion_sequence", steps.iter().map(|s| (s.label, s.degenerate)).collect::<Vec<_>>())?;
    d.set_item("nondegenerate_steps", kmy::nondegenerate_steps(&steps))?;
    Ok(d)
}

/// KMY decomposition with respect to edge `edge`.
#[pyfunction]
#[pyo3(signature = (g, edge, order=None, partial=false))]
fn kmy_decompose<'py>(
    py: Python<'py>,
    g: &PyGraph,
    edge: usize,
    order: Option<&str>,
    partial: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let labels = g.inner.labels();
    let order = order
        .map(|s| MonomialOrder::parse_spec(s, &labels, partial))
        .transpose()
        .map_err(to_py)?;
    let dec = kmy::kmy_decompose_toric(&g.inner, edge, order.as_ref()).map_err(to_py)?;
    let heights = kmy::kmy_heights(&dec).map_err(to_py)?;
    let bins = |i: &toricgraph::BinomialIdeal| -> Vec<String> {
        i.generators().iter().map(|b| format_binomial(b, &labels)).collect()
    };
    let d = PyDict::new(py);
    d.set_item("y", edge)?;
    d.set_item("order", dec.order.to_spec(&labels))?;
    d.set_item(
        "splits",
        dec.splits
            .iter()
            .map(|s| {
                (
                    format_binomial(&s.element, &labels),
                    s.d,
                    format_binomial(&s.q, &labels),
                    s.r.as_ref().map(|m| format_monomial(m, &labels)),
                )
            })
            .collect::<Vec<_>>(),
    )?;
    d.set_item("C", bins(&dec.c))?;
    d.set_item("N", bins(&dec.n))?;
    d.set_item("degenerate", dec.degenerate)?;
    d.set_item("heights", (heights.c, heights.i, heights.n))?;
    Ok(d)
}

/// Chromatic certificate for one order, or the best of `search` lex orders.
#[pyfunction]
#[pyo3(signature = (g, order=None, partial=false, search=None, seed=0))]
fn chromatic_certificate<'py>(
    py: Python<'py>,
    g: &PyGraph,
    order: Option<&str>,
    partial: bool,
    search: Option<usize>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let cert = match search {
        Some(budget) => py.detach(|| chromatic::order_search(&g.inner, budget, seed)),
        None => {
            let order = g.order(order, partial, MonomialOrder::lex_identity(g.inner.edge_count()))?;
            chromatic::chromatic_certificate(&g.inner, &order)
        }
    }
    .map_err(to_py)?;
    let labels = &cert.labels;
    let gens: Vec<String> = cert.init_gens.iter().map(|m| format_monomial(m, labels)).collect();
    let d = PyDict::new(py);
    d.set_item("order", cert.order_spec())?;
    d.set_item("init_generators", &gens)?;
    d.set_item("cover", cert.cover_labels())?;
    d.set_item("bound", cert.bound)?;
    d.set_item("exact_chromatic_number", cert.exact_chi)?;
    d.set_item("delta_plus_one", cert.delta_plus_one)?;
    d.set_item("cover_is_minimum", cert.cover_is_minimum)?;
    d.set_item(
        "divisibility_witness",
        cert.divisibility_witness.iter().map(|&(i, v)| (gens[i].clone(), labels[v])).collect::<Vec<_>>(),
    )?;
    d.set_item("verified", cert.verify())?;
    Ok(d)
}

/// Graver basis as `(binomial, closed walk, class)` triples.
#[pyfunction]
#[pyo3(signature = (g, backend="enumeration", edge_cap=24))]
fn graver_basis(g: &PyGraph, backend: &str, edge_cap: usize) -> PyResult<Vec<(String, Vec<usize>, String)>> {
    let backend = match backend {
        "enumeration" => GraverBackend::KernelEnumeration,
        "lawrence" => GraverBackend::LawrenceLifting,
        other => return Err(PyValueError::new_err(format!("unknown backend {other:?}"))),
    };
    let labels = g.inner.labels();
    let walks = toric::graver_basis_with(&g.inner, backend, edge_cap).map_err(to_py)?;
    walks
        .iter()
        .map(|w| {
            let walk = w.closed_walk(&g.inner).map_err(to_py)?;
            let class = match toric::classify_primitive_subgraph(w, &g.inner).map_err(to_py)? {
                PrimitiveClass::EvenCycle => "even_cycle",
                PrimitiveClass::TwoEdgeDisjointOddCycles => "contains_two_edge_disjoint_odd_cycles",
            };
            Ok((format_binomial(&w.binomial, &labels), walk, class.to_string()))
        })
        .collect()
}

/// Height of a monomial ideal given by generator strings over the edges of `g`.
#[pyfunction]
fn monomial_height(g: &PyGraph, gens: Vec<String>) -> PyResult<Option<usize>> {
    let labels = g.inner.labels();
    let monos = gens
        .iter()
        .map(|s| toricgraph::algebra::text::parse_monomial(s, &labels))
        .collect::<toricgraph::Result<Vec<_>>>()
        .map_err(to_py)?;
    Ok(monomial_ideal_height(&monos))
}

#[pyfunction]
fn macaulay2_script(g: &PyGraph) -> String {
    export::macaulay2_script(&g.inner)
}

#[pymodule]
fn pytoricgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(toric_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(initial_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(height, m)?)?;
    m.add_function(wrap_pyfunction!(kmy_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(graver_basis, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_height, m)?)?;
    m.add_function(wrap_pyfunction!(macaulay2_script, m)?)?;
    Ok(())
}
