use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use knotkit::certify::{check_certificate, sum_certificate};
use knotkit::identify::{bundled_table, KnotTable};
use knotkit::invariants::{alexander, determinant, fingerprint, jones, murasugi_bound, signature};
use knotkit::moves::{self, DEFAULT_GLOBAL_BUDGET};
use knotkit::search::{replay_hit, run_pipeline, SearchConfig, SearchHit};
use knotkit::KnotError;

fn err(e: KnotError) -> PyErr {
    match e {
        KnotError::Resource(_) | KnotError::Overflow(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "PDDiagram", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDiagram {
    inner: knotkit::PDDiagram,
}

fn wrap(inner: knotkit::PDDiagram) -> PyDiagram {
    PyDiagram { inner }
}

#[pymethods]
impl PyDiagram {
    #[staticmethod]
    fn from_dt(code: &str) -> PyResult<Self> {
        let c = knotkit::DTCode::parse(code).map_err(err)?;
        c.realize().map(wrap).map_err(err)
    }

    #[staticmethod]
    fn from_braid(word: Vec<i32>) -> PyResult<Self> {
        Ok(wrap(knotkit::BraidWord::new(word).map_err(err)?.closure()))
    }

    /// Parses the `X[a,b,c,d] sign=+1` line format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        knotkit::PDDiagram::parse(text).map(wrap).map_err(err)
    }

    fn render(&self) -> String {
        self.inner.render()
    }

    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    fn component_count(&self) -> usize {
        self.inner.component_count()
    }

    fn writhe(&self) -> i64 {
        self.inner.writhe()
    }

    fn dt_code(&self) -> PyResult<String> {
        knotkit::codes::pd_to_dt(&self.inner).map(|c| c.render()).map_err(err)
    }

    fn braid_word(&self) -> PyResult<Vec<i32>> {
        knotkit::braid::vogel_braid(&self.inner).map(|w| w.letters().to_vec()).map_err(err)
    }

    fn mirror(&self) -> Self {
        wrap(moves::mirror(&self.inner))
    }

    fn crossing_change(&self, crossing: usize) -> PyResult<Self> {
        moves::crossing_change(&self.inner, crossing).map(wrap).map_err(err)
    }

    #[pyo3(signature = (seed, budget = DEFAULT_GLOBAL_BUDGET))]
    fn simplify(&self, seed: u64, budget: usize) -> Self {
        wrap(moves::simplify_global(&self.inner, budget, seed))
    }

    fn connected_sum(&self, other: PyRef<'_, PyDiagram>) -> PyResult<Self> {
        moves::connected_sum(&self.inner, &other.inner).map(wrap).map_err(err)
    }

    fn deconnect_sum(&self) -> Vec<Self> {
        moves::deconnect_sum(&self.inner).into_iter().map(wrap).collect()
    }

    fn alexander(&self) -> PyResult<String> {
        alexander(&self.inner).map(|p| p.render("t")).map_err(err)
    }

    fn jones(&self) -> PyResult<String> {
        jones(&self.inner).map(|p| p.render_half("t")).map_err(err)
    }

    fn signature(&self) -> PyResult<i64> {
        signature(&self.inner).map_err(err)
    }

    fn determinant(&self) -> PyResult<u64> {
        determinant(&self.inner).map_err(err)
    }

    fn murasugi_bound(&self) -> PyResult<u64> {
        murasugi_bound(&self.inner).map_err(err)
    }

    fn fingerprint(&self) -> PyResult<PyFingerprint> {
        fingerprint(&self.inner).map(|inner| PyFingerprint { inner }).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("<PDDiagram: {} comp; {} cross>", self.inner.component_count(), self.inner.crossing_count())
    }
}

#[pyclass(name = "Fingerprint", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyFingerprint {
    inner: knotkit::Fingerprint,
}

#[pymethods]
impl PyFingerprint {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        knotkit::Fingerprint::parse(text).map(|inner| PyFingerprint { inner }).map_err(err)
    }

    #[getter]
    fn alexander(&self) -> String {
        self.inner.alexander.render("t")
    }

    #[getter]
    fn jones(&self) -> String {
        self.inner.jones.render_half("t")
    }

    #[getter]
    fn signature(&self) -> i64 {
        self.inner.signature
    }

    #[getter]
    fn determinant(&self) -> u64 {
        self.inner.determinant
    }

    fn mirror(&self) -> Self {
        PyFingerprint { inner: self.inner.mirror() }
    }

    fn matches_up_to_mirror(&self, other: PyRef<'_, PyFingerprint>) -> bool {
        self.inner.matches_up_to_mirror(&other.inner)
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }
}

#[pyclass(name = "KnotTable", frozen)]
struct PyKnotTable {
    inner: KnotTable,
}

#[pymethods]
impl PyKnotTable {
    #[staticmethod]
    fn bundled() -> PyResult<Self> {
        bundled_table().map(|inner| PyKnotTable { inner }).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        KnotTable::load(path.as_ref(), true).map(|inner| PyKnotTable { inner }).map_err(err)
    }

    fn names(&self) -> Vec<String> {
        self.inner.entries.iter().map(|e| e.name.clone()).collect()
    }

    /// Matching names with their chirality, `as-listed` or `mirror`.
    fn identify(&self, d: PyRef<'_, PyDiagram>) -> PyResult<Vec<(String, String)>> {
        let ids = knotkit::identify::identify(&d.inner, &self.inner).map_err(err)?;
        Ok(ids.into_iter().map(|(n, c)| (n, c.to_string())).collect())
    }

    /// A diagram for `name`, `~name` or `a#b`.
    fn diagram(&self, claim: &str) -> PyResult<PyDiagram> {
        self.inner.claim_diagram(claim).map(wrap).map_err(err)
    }

    fn render(&self) -> String {
        self.inner.render()
    }
}

/// Runs the verification transcript; returns whether it passed and its text.
#[pyfunction]
#[pyo3(signature = (step = None))]
fn verify_paper(py: Python<'_>, step: Option<usize>) -> PyResult<(bool, String)> {
    let table = bundled_table().map_err(err)?;
    let t = py.detach(|| knotkit::transcript::verify_paper(&table, step));
    Ok((t.passed(), t.to_string()))
}

/// Checks the five-change certificate and returns the certified bound.
#[pyfunction]
fn certified_bound(py: Python<'_>) -> PyResult<usize> {
    let table = bundled_table().map_err(err)?;
    let r = py.detach(|| check_certificate(&sum_certificate(), &table));
    match (r.failure, r.bound) {
        (None, Some(b)) => Ok(b),
        (Some((i, why)), _) => Err(PyRuntimeError::new_err(format!("step {i}: {why}"))),
        (None, None) => Err(PyRuntimeError::new_err("no bound")),
    }
}

/// Runs the search and returns the tab-separated trial log.
#[pyfunction]
#[pyo3(signature = (base, seed, trials, k, budget = 2000, backtrack = 30))]
fn search(
    py: Python<'_>,
    base: &str,
    seed: u64,
    trials: usize,
    k: usize,
    budget: usize,
    backtrack: usize,
) -> PyResult<String> {
    let table = bundled_table().map_err(err)?;
    let d = table.claim_diagram(base).map_err(err)?;
    let cfg = SearchConfig {
        seed,
        trials,
        k_changes: k,
        budget,
        n_backtrack: backtrack,
        base_name: Some(base.to_string()),
        ..Default::default()
    };
    let out = py.detach(|| run_pipeline(&d, &cfg, &table)).map_err(err)?;
    Ok(out.log_text())
}

/// Re-checks one `hit=` line of a search log.
#[pyfunction]
fn replay(line: &str) -> PyResult<bool> {
    let table = bundled_table().map_err(err)?;
    let hit = SearchHit::parse_log_line(line).map_err(err)?;
    replay_hit(&hit, &table).map(|r| r.passed).map_err(err)
}

#[pymodule]
#[pyo3(name = "knotkit")]
fn knotkit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyFingerprint>()?;
    m.add_class::<PyKnotTable>()?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    m.add_function(wrap_pyfunction!(certified_bound, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(replay, m)?)?;
    Ok(())
}
