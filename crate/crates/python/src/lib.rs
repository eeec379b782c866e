//! Python bindings. Scalars cross the boundary as `fractions.Fraction`;
//! inputs may also be `int` or `"p/q"` strings.

use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyString};

use alcove::metric::{self, PolytopeSource};
use alcove::polytope::{self, VertexTag};
use alcove::{normalization, span, Error, MaxPlusMatrix, Point, Scalar};

create_exception!(
    alcove,
    AlcoveError,
    PyValueError,
    "Invalid input for a max-plus operation."
);
create_exception!(
    alcove,
    StarFailure,
    AlcoveError,
    "The Kleene star does not exist. args: (message, witness_cycle, weight)."
);
create_exception!(
    alcove,
    EmptyPolytope,
    AlcoveError,
    "The alcoved polytope is empty."
);

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::Star(f) => {
            let weight = f.weight.clone().into_ratio();
            StarFailure::new_err((f.to_string(), f.witness_cycle, weight))
        }
        Error::EmptyPolytope => EmptyPolytope::new_err(err.to_string()),
        other => AlcoveError::new_err(other.to_string()),
    }
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for alcove::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(to_py_err)
    }
}

fn scalar(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if let Ok(text) = obj.cast::<PyString>() {
        return text.to_str()?.parse::<Scalar>().or_raise();
    }
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(AlcoveError::new_err(
            "floats are not exact; pass an int, Fraction or \"p/q\" string",
        ));
    }
    Ok(Scalar::from_ratio(obj.extract::<BigRational>()?))
}

fn ratio(s: &Scalar) -> BigRational {
    s.as_ratio().clone()
}

fn ratios<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Vec<BigRational> {
    values.into_iter().map(ratio).collect()
}

fn point(coords: &Bound<'_, PyAny>) -> PyResult<Point> {
    let coords: Vec<Bound<'_, PyAny>> = coords.extract()?;
    Ok(Point::new(
        coords.iter().map(scalar).collect::<PyResult<_>>()?,
    ))
}

/// Dense max-plus matrix of exact rationals.
#[pyclass(name = "Matrix", module = "alcove", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix(MaxPlusMatrix);

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(scalar).collect::<PyResult<Vec<_>>>())
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyMatrix(MaxPlusMatrix::from_rows(rows).or_raise()?))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    fn tolist(&self) -> Vec<Vec<BigRational>> {
        self.0.to_rows().iter().map(ratios).collect()
    }

    fn __getitem__(&self, index: (usize, usize)) -> PyResult<BigRational> {
        let (i, j) = index;
        if i >= self.0.rows() || j >= self.0.cols() {
            return Err(pyo3::exceptions::PyIndexError::new_err(
                "matrix index out of range",
            ));
        }
        Ok(ratio(self.0.get(i, j)))
    }

    fn __repr__(&self) -> String {
        let rows: Vec<String> = self
            .0
            .to_rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|v| format!("'{v}'")).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("Matrix([{}])", rows.join(", "))
    }

    /// Tropical product `self ⊙ other`.
    fn __matmul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix(self.0.tropical_matmul(&other.0).or_raise()?))
    }

    /// Tropical sum (entrywise maximum).
    fn __or__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix(self.0.tropical_add(&other.0).or_raise()?))
    }

    fn power(&self, k: u32) -> PyResult<PyMatrix> {
        Ok(PyMatrix(self.0.tropical_pow(k).or_raise()?))
    }

    fn transpose(&self) -> PyMatrix {
        PyMatrix(self.0.transpose())
    }

    /// Raises `StarFailure` with a positive-weight witness cycle.
    fn kleene_star(&self) -> PyResult<PyMatrix> {
        Ok(PyMatrix(self.0.kleene_star().or_raise()?))
    }

    fn column_normalized(&self) -> PyMatrix {
        PyMatrix(self.0.column_normalized())
    }

    fn max_cycle_mean(&self) -> PyResult<BigRational> {
        Ok(self.0.max_cycle_mean().or_raise()?.into_ratio())
    }

    fn norm(&self) -> BigRational {
        self.0.norm().into_ratio()
    }

    fn is_zero_diagonal(&self) -> PyResult<bool> {
        self.0.is_zero_diagonal().or_raise()
    }

    fn is_kleene_star(&self) -> PyResult<bool> {
        self.0.is_kleene_star().or_raise()
    }

    fn is_normal(&self) -> PyResult<bool> {
        self.0.is_normal().or_raise()
    }

    fn is_normal_idempotent(&self) -> PyResult<bool> {
        self.0.is_normal_idempotent().or_raise()
    }
}

/// `(mu over the columns of A_0)` or `None` for a point of `{x_n = 0}`.
#[pyfunction]
fn span_membership(a: &PyMatrix, x: &Bound<'_, PyAny>) -> PyResult<Option<Vec<BigRational>>> {
    let c = span::span_membership(&a.0, &point(x)?).or_raise()?;
    Ok(c.map(|c| ratios(&c.mu)))
}

#[pyfunction]
#[pyo3(signature = (a, count, seed = 0))]
fn span_sample(a: &PyMatrix, count: usize, seed: u64) -> Vec<Vec<BigRational>> {
    span::span_sample(&a.0, count, seed)
        .iter()
        .map(|p| ratios(p.coords()))
        .collect()
}

#[pyfunction]
fn contains(a: &PyMatrix, x: &Bound<'_, PyAny>) -> PyResult<bool> {
    polytope::contains(&a.0, &point(x)?).or_raise()
}

#[pyfunction]
fn is_empty(a: &PyMatrix) -> PyResult<bool> {
    polytope::is_empty(&a.0).or_raise()
}

#[pyfunction]
fn tighten(a: &PyMatrix) -> PyResult<PyMatrix> {
    Ok(PyMatrix(polytope::tighten(&a.0).or_raise()?))
}

#[pyfunction]
fn is_span_convex(a: &PyMatrix) -> PyResult<bool> {
    polytope::is_span_convex(&a.0).or_raise()
}

/// `[(coords, tag)]` with coords in `{x_n = 0}` and tag `"generator"` or
/// `"pseudovertex"`, sorted.
#[pyfunction]
fn enumerate_vertices(a: &PyMatrix) -> PyResult<Vec<(Vec<BigRational>, &'static str)>> {
    let v = polytope::enumerate_vertices(&a.0).or_raise()?;
    Ok(v.vertices
        .iter()
        .map(|v| {
            let tag = match v.tag {
                VertexTag::Generator => "generator",
                VertexTag::Pseudovertex => "pseudovertex",
            };
            (ratios(v.point.coords()), tag)
        })
        .collect())
}

#[pyfunction]
fn express_vertex(a: &PyMatrix, v: &Bound<'_, PyAny>) -> PyResult<Vec<BigRational>> {
    let c = polytope::express_vertex(&a.0, &point(v)?).or_raise()?;
    Ok(ratios(&c.mu))
}

#[pyfunction]
fn dual_extremals(a: &PyMatrix) -> PyResult<Vec<Vec<BigRational>>> {
    let pts = polytope::dual_extremals(&a.0).or_raise()?;
    Ok(pts.iter().map(|p| ratios(p.coords())).collect())
}

/// H-representation as a dict: `dim`, `box` of `(lower, upper)` and `diffs`
/// of `(i, k, lower, upper)`; `None` stands for an infinite bound.
#[pyfunction]
fn hrep<'py>(py: Python<'py>, a: &PyMatrix) -> PyResult<Bound<'py, PyDict>> {
    let h = polytope::hrep_from_matrix(&a.0).or_raise()?;
    let bound = |b: &Option<Scalar>| b.as_ref().map(ratio);
    let d = PyDict::new(py);
    d.set_item("dim", h.dim)?;
    let boxes: Vec<_> = h
        .bounds
        .iter()
        .map(|b| (bound(&b.lower), bound(&b.upper)))
        .collect();
    d.set_item("box", boxes)?;
    let diffs: Vec<_> = h
        .diffs
        .iter()
        .map(|d| (d.i, d.k, bound(&d.bounds.lower), bound(&d.bounds.upper)))
        .collect();
    d.set_item("diffs", diffs)?;
    Ok(d)
}

/// Normal form `N = Q′AP′` with dense factors and the assignment data.
#[pyfunction]
fn normalize<'py>(py: Python<'py>, a: &PyMatrix) -> PyResult<Bound<'py, PyDict>> {
    let r = normalization::normalize(&a.0).or_raise()?;
    let d = PyDict::new(py);
    d.set_item("normal", PyMatrix(r.normal.clone()))?;
    d.set_item("p", PyMatrix(r.p.to_dense()))?;
    d.set_item("q", PyMatrix(r.q.to_dense()))?;
    d.set_item("t", ratio(&r.t))?;
    d.set_item("sigma", r.assignment.sigma.clone())?;
    d.set_item("row_potentials", ratios(&r.assignment.row_potentials))?;
    d.set_item("col_potentials", ratios(&r.assignment.col_potentials))?;
    d.set_item("value", ratio(&r.assignment.value))?;
    Ok(d)
}

#[pyfunction]
fn seminorm(p: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    Ok(metric::seminorm(&point(p)?).into_ratio())
}

#[pyfunction]
fn range_seminorm(p: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    Ok(metric::range_seminorm(&point(p)?).into_ratio())
}

#[pyfunction]
fn distance(p: &Bound<'_, PyAny>, q: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    Ok(metric::tropical_distance(&point(p)?, &point(q)?)
        .or_raise()?
        .into_ratio())
}

/// `(radius, attaining_point)` for a normal matrix.
#[pyfunction]
fn radius_section(a: &PyMatrix) -> PyResult<(BigRational, Vec<BigRational>)> {
    let r = metric::radius_section(&a.0).or_raise()?;
    Ok((r.radius.into_ratio(), ratios(r.attaining_point.coords())))
}

/// `(radius, attaining_vertex)` of `C_A` for a Kleene star whose polytope
/// contains the origin.
#[pyfunction]
fn radius_polytope(a: &PyMatrix) -> PyResult<(BigRational, Vec<BigRational>)> {
    let v = polytope::enumerate_vertices(&a.0).or_raise()?;
    let r = metric::radius_polytope(&v, PolytopeSource::Matrix(&a.0)).or_raise()?;
    Ok((r.radius.into_ratio(), ratios(r.attaining_point.coords())))
}

#[pymodule]
#[pyo3(name = "alcove")]
pub fn alcove_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyMatrix>()?;
    m.add("AlcoveError", py.get_type::<AlcoveError>())?;
    m.add("StarFailure", py.get_type::<StarFailure>())?;
    m.add("EmptyPolytope", py.get_type::<EmptyPolytope>())?;
    m.add_function(wrap_pyfunction!(span_membership, m)?)?;
    m.add_function(wrap_pyfunction!(span_sample, m)?)?;
    m.add_function(wrap_pyfunction!(contains, m)?)?;
    m.add_function(wrap_pyfunction!(is_empty, m)?)?;
    m.add_function(wrap_pyfunction!(tighten, m)?)?;
    m.add_function(wrap_pyfunction!(is_span_convex, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(express_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(dual_extremals, m)?)?;
    m.add_function(wrap_pyfunction!(hrep, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(seminorm, m)?)?;
    m.add_function(wrap_pyfunction!(range_seminorm, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(radius_section, m)?)?;
    m.add_function(wrap_pyfunction!(radius_polytope, m)?)?;
    Ok(())
}
