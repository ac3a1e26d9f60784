//! Python bindings: graphs, families, spectra, enumeration and lemma checks.

use std::collections::BTreeMap;

use dlspec_core::canon;
use dlspec_core::enumeration;
use dlspec_core::lemmas::{self, LemmaLab, LemmaVerdict, Tolerances};
use dlspec_core::spectra::{self, SpectrumReport};
use dlspec_core::{FamilySpec, Vertex};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(dlspec, DlspecError, PyValueError, "Invalid input or violated precondition.");

fn err(e: dlspec_core::Error) -> PyErr {
    DlspecError::new_err(e.to_string())
}

trait OrPyErr<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPyErr<T> for dlspec_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "dlspec", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph(dlspec_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        dlspec_core::Graph::from_edges(n, &edges).py().map(PyGraph)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        dlspec_core::decode_graph6(s).py().map(PyGraph)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.0.edges().collect()
    }

    fn neighbors(&self, v: Vertex) -> PyResult<Vec<Vertex>> {
        self.check(v)?;
        Ok(self.0.neighbors(v).to_vec())
    }

    fn degree(&self, v: Vertex) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.0.degree(v))
    }

    fn degree_sequence(&self) -> Vec<usize> {
        self.0.degree_sequence()
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.0.has_edge(u, v)
    }

    fn add_edge(&self, u: Vertex, v: Vertex) -> PyResult<Self> {
        self.0.add_edge(u, v).py().map(PyGraph)
    }

    fn remove_edge(&self, u: Vertex, v: Vertex) -> PyResult<Self> {
        self.0.remove_edge(u, v).py().map(PyGraph)
    }

    fn relabel(&self, perm: Vec<Vertex>) -> PyResult<Self> {
        self.0.relabel(&perm).py().map(PyGraph)
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.0.is_tree()
    }

    fn is_unicyclic(&self) -> bool {
        self.0.is_unicyclic()
    }

    fn to_graph6(&self) -> PyResult<String> {
        dlspec_core::encode_graph6(&self.0).py()
    }

    fn canonical_form(&self) -> PyResult<String> {
        canon::canonical_form(&self.0).py().map(|c| c.into_string())
    }

    fn distance_matrix(&self) -> PyResult<Vec<Vec<u32>>> {
        let d = spectra::apsp(&self.0).py()?;
        Ok((0..d.n()).map(|u| d.row(u).to_vec()).collect())
    }

    fn transmissions(&self) -> PyResult<Vec<u64>> {
        Ok(spectra::apsp(&self.0).py()?.transmissions().to_vec())
    }

    /// Distance Laplacian as a list of rows.
    fn laplacian(&self) -> PyResult<Vec<Vec<f64>>> {
        let m = spectra::distance_laplacian(&self.0).py()?;
        Ok(m.as_slice().chunks(m.n()).map(<[f64]>::to_vec).collect())
    }

    /// `(eigenvalues, eigenvectors)`, eigenvalues descending, one vector per
    /// eigenvalue.
    fn spectrum(&self) -> PyResult<(Vec<f64>, Vec<Vec<f64>>)> {
        let s = spectra::laplacian_spectrum(&self.0).py()?;
        let vectors = (0..s.values().len()).map(|i| s.vector(i).to_vec()).collect();
        Ok((s.values().to_vec(), vectors))
    }

    fn spectral_radius(&self) -> PyResult<f64> {
        spectra::spectral_radius(&self.0).py()
    }

    fn quadratic_form(&self, x: Vec<f64>) -> PyResult<f64> {
        spectra::quadratic_form(&self.0, &x).py()
    }

    fn eigen_residual(&self, lam: f64, x: Vec<f64>) -> PyResult<f64> {
        spectra::eigen_residual(&self.0, lam, &x).py()
    }

    /// Eigenvalues, radius, residual and transmissions as a JSON object.
    fn spectrum_json(&self) -> PyResult<String> {
        Ok(SpectrumReport::for_graph(&self.0).py()?.to_json())
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        match dlspec_core::encode_graph6(&self.0) {
            Ok(s) => format!("Graph.from_graph6({s:?})"),
            Err(_) => format!("Graph({}, {:?})", self.0.n(), self.edges()),
        }
    }
}

impl PyGraph {
    fn check(&self, v: Vertex) -> PyResult<()> {
        if v >= self.0.n() {
            return Err(err(dlspec_core::Error::VertexOutOfRange { vertex: v, n: self.0.n() }));
        }
        Ok(())
    }
}

/// Outcome of one lemma check.
#[pyclass(name = "Verdict", module = "dlspec", frozen)]
pub struct PyVerdict(LemmaVerdict);

#[pymethods]
impl PyVerdict {
    #[getter]
    fn lemma(&self) -> &'static str {
        self.0.lemma.as_str()
    }

    #[getter]
    fn instance(&self) -> String {
        self.0.instance.clone()
    }

    /// `"PASS"`, `"INCONCLUSIVE"` or `"FAIL"`.
    #[getter]
    fn status(&self) -> String {
        self.0.status.to_string()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.status == dlspec_core::Status::Pass
    }

    #[getter]
    fn margin(&self) -> f64 {
        self.0.margin
    }

    #[getter]
    fn instances(&self) -> usize {
        self.0.instances
    }

    #[getter]
    fn evidence(&self) -> BTreeMap<String, f64> {
        self.0.evidence.clone()
    }

    #[getter]
    fn witness(&self) -> Option<String> {
        self.0.witness.clone()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!("Verdict({} {} {} margin={})", self.0.lemma.as_str(), self.0.instance, self.0.status, self.0.margin)
    }
}

fn verdicts(r: dlspec_core::Result<Vec<LemmaVerdict>>) -> PyResult<Vec<PyVerdict>> {
    Ok(r.py()?.into_iter().map(PyVerdict).collect())
}

/// Lemma checks with configurable tolerances.
#[pyclass(name = "LemmaLab", module = "dlspec", frozen)]
pub struct PyLemmaLab(LemmaLab);

#[pymethods]
impl PyLemmaLab {
    #[new]
    #[pyo3(signature = (strict = lemmas::STRICT_THRESHOLD, nonstrict = lemmas::NONSTRICT_TOLERANCE))]
    fn new(strict: f64, nonstrict: f64) -> PyResult<Self> {
        if !(strict > 0.0 && nonstrict > 0.0) {
            return Err(DlspecError::new_err("tolerances must be positive"));
        }
        Ok(PyLemmaLab(LemmaLab::new(Tolerances { strict, nonstrict })))
    }

    fn check_transmission_bound(&self, g: &PyGraph) -> PyResult<PyVerdict> {
        self.0.check_transmission_bound(&g.0).py().map(PyVerdict)
    }

    fn check_edge_addition_monotone(&self, g: &PyGraph, u: Vertex, v: Vertex) -> PyResult<PyVerdict> {
        self.0.check_edge_addition_monotone(&g.0, u, v).py().map(PyVerdict)
    }

    fn check_path_shift(&self, g: &PyGraph, u: Vertex, k: usize, l: usize) -> PyResult<PyVerdict> {
        self.0.check_path_shift(&g.0, u, k, l).py().map(PyVerdict)
    }

    fn check_clique_shift(&self, g: &PyGraph, u: Vertex, v: Vertex, k: usize, l: usize) -> PyResult<PyVerdict> {
        self.0.check_clique_shift(&g.0, u, v, k, l).py().map(PyVerdict)
    }

    fn check_h_vs_kite(&self, n: usize) -> PyResult<PyVerdict> {
        self.0.check_h_vs_kite(n).py().map(PyVerdict)
    }

    fn check_c4_family(&self, n: usize) -> PyResult<PyVerdict> {
        self.0.check_c4_family(n).py().map(PyVerdict)
    }

    #[pyo3(signature = (n, shards = 1))]
    fn extremal_search(&self, py: Python<'_>, n: usize, shards: usize) -> PyResult<PyVerdict> {
        py.detach(|| self.0.extremal_search_sharded(n, shards)).py().map(PyVerdict)
    }

    fn check_algebraic_connectivity_analogue(&self, py: Python<'_>, n: usize) -> PyResult<PyVerdict> {
        py.detach(|| self.0.check_algebraic_connectivity_analogue(n)).py().map(PyVerdict)
    }

    fn path_shift_sweep(&self, g: &PyGraph, u: Vertex, max_total: usize) -> PyResult<Vec<PyVerdict>> {
        verdicts(self.0.path_shift_sweep(&g.0, u, max_total))
    }

    fn clique_shift_sweep(&self, g: &PyGraph, u: Vertex, v: Vertex, max_total: usize) -> PyResult<Vec<PyVerdict>> {
        verdicts(self.0.clique_shift_sweep(&g.0, u, v, max_total))
    }

    #[pyo3(signature = (seed = lemmas::DEFAULT_SEED, trials = 200, max_n = 9))]
    fn edge_addition_random_suite(&self, seed: u64, trials: usize, max_n: usize) -> PyResult<Vec<PyVerdict>> {
        verdicts(self.0.edge_addition_random_suite(seed, trials, max_n))
    }
}

/// Builds a family member from its text form (`kite:n=6`, `c4spider:1,0,0,0`,
/// ...); returns the graph and its vertex roles.
#[pyfunction]
fn family(spec: &str) -> PyResult<(PyGraph, BTreeMap<String, Vertex>)> {
    let spec: FamilySpec = spec.parse().py()?;
    let (g, roles) = spec.build().py()?;
    let roles = roles.iter().map(|(k, v)| (k.to_string(), v)).collect();
    Ok((PyGraph(g), roles))
}

#[pyfunction]
fn spectral_radius(g: &PyGraph) -> PyResult<f64> {
    g.spectral_radius()
}

#[pyfunction]
fn spectrum(g: &PyGraph) -> PyResult<(Vec<f64>, Vec<Vec<f64>>)> {
    g.spectrum()
}

#[pyfunction]
fn are_isomorphic(a: &PyGraph, b: &PyGraph) -> PyResult<bool> {
    canon::are_isomorphic(&a.0, &b.0).py()
}

/// Canonical graph6 strings of all unicyclic graphs of order `n`, sorted.
#[pyfunction]
#[pyo3(signature = (n, shards = 1))]
fn enumerate_unicyclic(py: Python<'_>, n: usize, shards: usize) -> PyResult<Vec<String>> {
    Ok(py.detach(|| enumeration::partitioned_enumerate(n, shards)).py()?.graphs)
}

#[pyfunction]
fn cycle_radius_closed_form(n: usize) -> PyResult<f64> {
    spectra::cycle_radius_closed_form(n).py()
}

#[pyfunction]
fn kite_submatrix_bound(n: usize) -> PyResult<f64> {
    spectra::kite_submatrix_bound(n).py()
}

#[pymodule]
pub fn dlspec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DlspecError", m.py().get_type::<DlspecError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyVerdict>()?;
    m.add_class::<PyLemmaLab>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_unicyclic, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_radius_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(kite_submatrix_bound, m)?)?;
    Ok(())
}
