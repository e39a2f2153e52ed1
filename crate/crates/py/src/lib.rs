//! Python bindings: fields, point multisets, direction analysis, envelopes,
//! bound checks and instance generators. Reports come back as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyString;

use renitent_core::generators::{generate, GenSpec};
use renitent_core::pipeline::{self, Bound as CheckBound, CChoice, Failure, FailureKind, Theorem};
use renitent_core::plane::ProjLine;
use renitent_core::uniformity::{line_count, PointMultiset};
use renitent_core::{Elem, Field};

create_exception!(pyrenitent, HypothesisError, PyValueError, "A hypothesis of the requested construction fails.");

fn raise(f: Failure) -> PyErr {
    match f.kind {
        FailureKind::Input => PyValueError::new_err(f.msg),
        FailureKind::Hypothesis => HypothesisError::new_err(f.msg),
    }
}

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// GF(q), given as `q`, `"p^e"` or `"p^e:m=c0,...,ce"`.
#[pyclass(name = "Field", module = "pyrenitent", frozen)]
struct PyField {
    inner: Field,
}

impl PyField {
    fn elem(&self, i: u32) -> PyResult<Elem> {
        self.inner.elem(i).map_err(value_err)
    }
}

#[pymethods]
impl PyField {
    #[new]
    fn new(spec: &Bound<'_, PyAny>) -> PyResult<Self> {
        let spec = match spec.extract::<u32>() {
            Ok(q) => q.to_string(),
            Err(_) => spec.extract::<String>()?,
        };
        pipeline::parse_field(&spec).map(|inner| PyField { inner }).map_err(raise)
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn e(&self) -> u32 {
        self.inner.e()
    }

    /// Coefficients of the defining polynomial, constant term first.
    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.inner.modulus().to_vec()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.add(self.elem(a)?, self.elem(b)?).index())
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.sub(self.elem(a)?, self.elem(b)?).index())
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.mul(self.elem(a)?, self.elem(b)?).index())
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        let a = self.elem(a)?;
        self.inner.inv(a).map(|x| x.index()).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn pow(&self, a: u32, k: u64) -> PyResult<u32> {
        Ok(self.inner.pow(self.elem(a)?, k).index())
    }

    fn trace(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.trace(self.elem(a)?).index())
    }

    fn __len__(&self) -> usize {
        self.inner.q() as usize
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyField) -> bool {
        self.inner == other.inner
    }
}

/// A multiset of affine points `(a, b)` of AG(2, q).
#[pyclass(name = "PointSet", module = "pyrenitent")]
struct PyPointSet {
    inner: PointMultiset,
}

#[pymethods]
impl PyPointSet {
    /// `points` holds `(a, b)` or `(a, b, m)` tuples.
    #[new]
    #[pyo3(signature = (field, points = Vec::new()))]
    fn new(field: &PyField, points: Vec<Vec<u64>>) -> PyResult<Self> {
        let mut t = PointMultiset::new(&field.inner);
        for p in points {
            let (a, b, m) = match p[..] {
                [a, b] => (a, b, 1),
                [a, b, m] => (a, b, m),
                _ => return Err(PyValueError::new_err(format!("expected (a, b) or (a, b, m), got {p:?}"))),
            };
            let coord = |x: u64| u32::try_from(x).map_err(value_err).and_then(|x| field.elem(x));
            t.insert(coord(a)?, coord(b)?, m).map_err(value_err)?;
        }
        Ok(PyPointSet { inner: t })
    }

    /// Parses the `a b [m]` text format.
    #[staticmethod]
    fn from_text(field: &PyField, text: &str) -> PyResult<Self> {
        PointMultiset::parse(&field.inner, text).map(|inner| PyPointSet { inner }).map_err(value_err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField { inner: self.inner.field().clone() }
    }

    /// Total size counted with multiplicity.
    #[getter]
    fn size(&self) -> u64 {
        self.inner.size()
    }

    fn points(&self) -> Vec<(u32, u32, u64)> {
        self.inner.iter().map(|(a, b, m)| (a.index(), b.index(), m)).collect()
    }

    fn add(&mut self, a: u32, b: u32, m: u64) -> PyResult<()> {
        let f = self.inner.field().clone();
        let (a, b) = (f.elem(a).map_err(value_err)?, f.elem(b).map_err(value_err)?);
        self.inner.insert(a, b, m).map_err(value_err)
    }

    /// Number of points, with multiplicity, on the line `[A:B:C]`.
    fn line_count(&self, line: (u32, u32, u32)) -> PyResult<u64> {
        let l = ProjLine::parse(self.inner.field(), &format!("[{}:{}:{}]", line.0, line.1, line.2)).map_err(value_err)?;
        line_count(&self.inner, &l).map_err(value_err)
    }

    /// Classifies all q + 1 directions against `lam`.
    fn analyze<'py>(&self, py: Python<'py>, lam: usize) -> PyResult<Bound<'py, PyAny>> {
        let outcome = pipeline::analyze(&self.inner, lam).map_err(raise)?;
        to_py(py, &outcome.report)
    }

    /// Builds and verifies an envelope. `theorem` is `"regular"`,
    /// `"weighted"` or `"general"`; `c` is an int or `"scan"`.
    #[pyo3(signature = (lam, theorem = "regular", c = None))]
    fn envelope<'py>(
        &self,
        py: Python<'py>,
        lam: usize,
        theorem: &str,
        c: Option<&Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let theorem = match theorem {
            "regular" => Theorem::Regular,
            "weighted" => Theorem::Weighted,
            "general" => Theorem::General,
            other => return Err(PyValueError::new_err(format!("unknown theorem {other:?}"))),
        };
        let c = match c {
            None => CChoice::Fixed(1),
            Some(v) if v.is_instance_of::<PyString>() && v.extract::<String>()? == "scan" => CChoice::Scan,
            Some(v) => CChoice::Fixed(v.extract()?),
        };
        let outcome = pipeline::envelope(&self.inner, lam, theorem, c).map_err(raise)?;
        to_py(py, &outcome.report)
    }

    /// Evaluates `"deficiency"`, `"szw"`, `"renitent"` or `"dichotomy"`.
    fn check<'py>(&self, py: Python<'py>, lam: usize, bound: &str) -> PyResult<Bound<'py, PyAny>> {
        let bound = match bound {
            "deficiency" => CheckBound::Deficiency,
            "szw" => CheckBound::Szw,
            "renitent" => CheckBound::Renitent,
            "dichotomy" => CheckBound::Dichotomy,
            other => return Err(PyValueError::new_err(format!("unknown bound {other:?}"))),
        };
        let outcome = pipeline::check(&self.inner, lam, bound).map_err(raise)?;
        to_py(py, &outcome.report)
    }

    fn __len__(&self) -> usize {
        self.inner.iter().count()
    }

    fn __repr__(&self) -> String {
        format!("PointSet(GF({}), {} points, size {})", self.inner.field().q(), self.inner.iter().count(), self.inner.size())
    }
}

fn run_gen<'py>(py: Python<'py>, field: &PyField, spec: GenSpec) -> PyResult<(PyPointSet, Bound<'py, PyAny>)> {
    let g = generate(&field.inner, &spec).map_err(value_err)?;
    Ok((PyPointSet { inner: g.multiset }, to_py(py, &g.truth)?))
}

/// Points `(a, b)` with weights; returns `(PointSet, truth)`.
#[pyfunction]
#[pyo3(signature = (field, points, weights = None))]
fn gen_planted<'py>(
    py: Python<'py>,
    field: &PyField,
    points: Vec<(u32, u32)>,
    weights: Option<Vec<u64>>,
) -> PyResult<(PyPointSet, Bound<'py, PyAny>)> {
    let points = points
        .into_iter()
        .map(|(a, b)| Ok((field.elem(a)?, field.elem(b)?)))
        .collect::<PyResult<Vec<_>>>()?;
    let weights = weights.unwrap_or_else(|| vec![1; points.len()]);
    run_gen(py, field, GenSpec::Planted { points, weights })
}

/// The conic x² + xy + δy² = 1 in even characteristic, with its nucleus.
#[pyfunction]
fn gen_norm_conic<'py>(py: Python<'py>, field: &PyField) -> PyResult<(PyPointSet, Bound<'py, PyAny>)> {
    run_gen(py, field, GenSpec::NormConic)
}

/// Each affine point independently with probability `density`.
#[pyfunction]
fn gen_random<'py>(py: Python<'py>, field: &PyField, seed: u64, density: f64) -> PyResult<(PyPointSet, Bound<'py, PyAny>)> {
    run_gen(py, field, GenSpec::Random { seed, density })
}

/// Union of the affine parts of lines `(A, B, C)`.
#[pyfunction]
fn gen_union_lines<'py>(
    py: Python<'py>,
    field: &PyField,
    lines: Vec<(u32, u32, u32)>,
) -> PyResult<(PyPointSet, Bound<'py, PyAny>)> {
    let lines = lines
        .into_iter()
        .map(|(a, b, c)| ProjLine::parse(&field.inner, &format!("[{a}:{b}:{c}]")).map_err(value_err))
        .collect::<PyResult<Vec<_>>>()?;
    run_gen(py, field, GenSpec::UnionLines { lines })
}

#[pymodule]
fn pyrenitent(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyPointSet>()?;
    m.add_function(wrap_pyfunction!(gen_planted, m)?)?;
    m.add_function(wrap_pyfunction!(gen_norm_conic, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random, m)?)?;
    m.add_function(wrap_pyfunction!(gen_union_lines, m)?)?;
    m.add("HypothesisError", m.py().get_type::<HypothesisError>())?;
    Ok(())
}
