//! Python bindings: `QuadInt`, `Mat2`, `WordRep`, and the claim, table and
//! embedding reports as plain dictionaries.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use bianchi_core::claim_verifier::check_claim_with_workers;
use bianchi_core::embeddings::{self, DEFAULT_BUDGET};
use bianchi_core::json;
use bianchi_core::{self as core, RingId};
use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ring(d: i64) -> PyResult<RingId> {
    RingId::new(d).map_err(err)
}

/// Converts a JSON value into Python objects through the `json` module.
fn to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let loads = py.import("json")?.getattr("loads")?;
    Ok(loads.call1((v.to_string(),))?.unbind())
}

fn hash_of<T: Hash>(v: &T) -> u64 {
    let mut h = DefaultHasher::new();
    v.hash(&mut h);
    h.finish()
}

/// `x + y·ω` in `O_d`.
#[pyclass(name = "QuadInt", module = "bianchi_py", frozen)]
pub struct PyQuadInt(core::QuadInt);

#[pymethods]
impl PyQuadInt {
    #[new]
    fn new(d: i64, x: BigInt, y: BigInt) -> PyResult<Self> {
        Ok(PyQuadInt(core::QuadInt::new(ring(d)?, x, y)))
    }

    #[getter]
    fn d(&self) -> u32 {
        self.0.ring().d()
    }

    #[getter]
    fn x(&self) -> BigInt {
        self.0.x().clone()
    }

    #[getter]
    fn y(&self) -> BigInt {
        self.0.y().clone()
    }

    fn norm(&self) -> BigInt {
        self.0.norm()
    }

    fn conjugate(&self) -> Self {
        PyQuadInt(self.0.conjugate())
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    fn nearest_quotient(&self, b: &PyQuadInt) -> PyResult<Self> {
        self.same_ring(b)?;
        self.0.nearest_quotient(&b.0).map(PyQuadInt).map_err(err)
    }

    fn divmod(&self, b: &PyQuadInt) -> PyResult<(Self, Self)> {
        self.same_ring(b)?;
        let (q, r) = self.0.divmod(&b.0).map_err(err)?;
        Ok((PyQuadInt(q), PyQuadInt(r)))
    }

    fn __add__(&self, b: &PyQuadInt) -> PyResult<Self> {
        self.same_ring(b)?;
        Ok(PyQuadInt(&self.0 + &b.0))
    }

    fn __sub__(&self, b: &PyQuadInt) -> PyResult<Self> {
        self.same_ring(b)?;
        Ok(PyQuadInt(&self.0 - &b.0))
    }

    fn __mul__(&self, b: &PyQuadInt) -> PyResult<Self> {
        self.same_ring(b)?;
        Ok(PyQuadInt(&self.0 * &b.0))
    }

    fn __neg__(&self) -> Self {
        PyQuadInt(-&self.0)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<PyQuadInt>>().is_ok_and(|o| o.0 == self.0)
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadInt(d={}, x={}, y={})", self.0.ring().d(), self.0.x(), self.0.y())
    }
}

impl PyQuadInt {
    fn same_ring(&self, b: &PyQuadInt) -> PyResult<()> {
        if self.0.ring() == b.0.ring() {
            Ok(())
        } else {
            Err(err(core::Error::RingMismatch { left: self.0.ring(), right: b.0.ring() }))
        }
    }
}

/// A 2×2 matrix over `O_d`.
#[pyclass(name = "Mat2", module = "bianchi_py", frozen)]
pub struct PyMat2(core::Mat2);

#[pymethods]
impl PyMat2 {
    /// `Mat2(d, [[(x, y), (x, y)], [(x, y), (x, y)]])`.
    #[new]
    fn new(d: i64, entries: [[(BigInt, BigInt); 2]; 2]) -> PyResult<Self> {
        let r = ring(d)?;
        let [[a, b], [c, e]] = entries.map(|row| row.map(|(x, y)| core::QuadInt::new(r, x, y)));
        core::Mat2::new(a, b, c, e).map(PyMat2).map_err(err)
    }

    #[staticmethod]
    fn identity(d: i64) -> PyResult<Self> {
        Ok(PyMat2(core::Mat2::identity(ring(d)?)))
    }

    /// Parses `{"d": .., "entries": ..}`.
    #[staticmethod]
    #[pyo3(signature = (text, d = None))]
    fn from_json(text: &str, d: Option<i64>) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let r = d.map(ring).transpose()?;
        json::parse_mat2(&v, r).map(PyMat2).map_err(err)
    }

    fn to_json(&self) -> String {
        json::mat2(&self.0).to_string()
    }

    #[getter]
    fn d(&self) -> u32 {
        self.0.ring().d()
    }

    fn entries(&self) -> Vec<PyQuadInt> {
        self.0.entries().iter().cloned().map(PyQuadInt).collect()
    }

    fn det(&self) -> PyQuadInt {
        PyQuadInt(self.0.det())
    }

    fn norm_max(&self) -> BigInt {
        self.0.norm_max()
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyMat2).map_err(err)
    }

    fn __mul__(&self, b: &PyMat2) -> PyResult<Self> {
        self.0.mat_mul(&b.0).map(PyMat2).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyMat2(-&self.0)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<PyMat2>>().is_ok_and(|o| o.0 == self.0)
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Mat2(d={}, {})", self.0.ring().d(), self.0)
    }
}

/// `[sign] [L^e] T^p0 U^q0 (A T^p U^q)*`.
#[pyclass(name = "WordRep", module = "bianchi_py", frozen)]
pub struct PyWordRep(core::WordRep);

#[pymethods]
impl PyWordRep {
    #[staticmethod]
    fn parse(d: i64, text: &str) -> PyResult<Self> {
        core::WordRep::parse(ring(d)?, text).map(PyWordRep).map_err(err)
    }

    #[getter]
    fn d(&self) -> u32 {
        self.0.ring.d()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn epsilon(&self) -> u8 {
        self.0.epsilon
    }

    #[getter]
    fn p0(&self) -> BigInt {
        self.0.p0.clone()
    }

    #[getter]
    fn q0(&self) -> BigInt {
        self.0.q0.clone()
    }

    #[getter]
    fn sign(&self) -> i8 {
        self.0.sl_sign.as_i8()
    }

    /// `(p, q)` per block, in word order.
    #[getter]
    fn blocks(&self) -> Vec<(BigInt, BigInt)> {
        self.0.blocks.iter().map(|b| (b.p.clone(), b.q.clone())).collect()
    }

    fn evaluate(&self) -> PyMat2 {
        PyMat2(core::evaluate(&self.0))
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.extract::<PyRef<PyWordRep>>().is_ok_and(|o| o.0 == self.0)
    }

    fn __hash__(&self) -> u64 {
        hash_of(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("WordRep(d={}, {:?})", self.0.ring.d(), self.0.to_string())
    }
}

/// Word representation of a determinant-one matrix.
#[pyfunction]
fn represent(m: &PyMat2) -> PyResult<PyWordRep> {
    core::represent(&m.0).map(PyWordRep).map_err(err)
}

/// Exponent and iteration bounds for `w = represent(m)`.
#[pyfunction]
fn check_bounds(py: Python<'_>, m: &PyMat2, w: &PyWordRep) -> PyResult<Py<PyAny>> {
    let r = core::check_bounds(&m.0, &w.0);
    let mut v = json::bound_report(&r);
    v["bounds_ok"] = serde_json::Value::Bool(r.bounds_ok());
    to_py(py, &v)
}

/// Ring data for one `d`, or for all five when `d` is omitted.
#[pyfunction]
#[pyo3(signature = (d = None))]
fn tables(py: Python<'_>, d: Option<i64>) -> PyResult<Py<PyAny>> {
    let rings = match d {
        Some(d) => vec![ring(d)?],
        None => RingId::ALL.to_vec(),
    };
    let rows: Vec<_> = rings.into_iter().map(json::ring_table).collect();
    to_py(py, &serde_json::Value::Array(rows))
}

/// Exhaustive norm-decrease check for one ring.
#[pyfunction]
#[pyo3(signature = (d, workers = 1))]
fn verify_claim(py: Python<'_>, d: i64, workers: usize) -> PyResult<Py<PyAny>> {
    let r = ring(d)?;
    let rep = py.detach(|| check_claim_with_workers(r, workers));
    to_py(py, &json::claim_report(&rep))
}

/// Names and descriptions of the embedding catalog.
#[pyfunction]
fn catalog(py: Python<'_>) -> PyResult<Py<PyAny>> {
    let rows: Vec<_> = embeddings::catalog()
        .iter()
        .map(|s| {
            serde_json::json!({
                "name": s.name(),
                "domain": s.domain(),
                "dim": s.dim(),
                "scalars": s.scalar_kind().name(),
                "description": s.description(),
            })
        })
        .collect();
    to_py(py, &serde_json::Value::Array(rows))
}

fn find(name: &str) -> PyResult<embeddings::CatalogSpec> {
    embeddings::find(name).ok_or_else(|| PyKeyError::new_err(format!("unknown embedding {name}")))
}

/// Image of an element such as `"a b A | c"` under a catalog embedding.
#[pyfunction]
fn embed(py: Python<'_>, spec: &str, element: &str) -> PyResult<Py<PyAny>> {
    let m = find(spec)?.eval_text(element).map_err(err)?;
    to_py(py, &m.to_json())
}

/// Injectivity scan; returns `None` or the first colliding pair of element texts.
#[pyfunction]
#[pyo3(signature = (spec, max_len, budget = DEFAULT_BUDGET))]
fn scan(py: Python<'_>, spec: &str, max_len: usize, budget: u64) -> PyResult<Option<(String, String)>> {
    let s = find(spec)?;
    let out = py.detach(|| s.injectivity_scan(max_len, budget)).map_err(err)?;
    Ok(out.collision.map(|(u, v)| (u.render(s.components()), v.render(s.components()))))
}

#[pymodule]
fn bianchi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQuadInt>()?;
    m.add_class::<PyMat2>()?;
    m.add_class::<PyWordRep>()?;
    m.add_function(wrap_pyfunction!(represent, m)?)?;
    m.add_function(wrap_pyfunction!(check_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(tables, m)?)?;
    m.add_function(wrap_pyfunction!(verify_claim, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}
