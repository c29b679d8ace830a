//! Python bindings: `Poly` and `Deriv` wrappers plus module-level helpers
//! for Groebner bases, grading, closures, the sl iso check, and Darboux
//! search. Structured reports cross the boundary as JSON strings so the
//! Python side can `json.loads` them without a schema dependency.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use wn_core::arith::{multi_gcd, MonomialOrder};
use wn_core::parse::{parse_deriv, parse_poly};
use wn_core::{WnError};

fn err(e: WnError) -> PyErr {
    match e {
        WnError::Parse(_) | WnError::VarMismatch { .. } => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn json<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(&serde_json::to_value(v).unwrap())
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// A sparse multivariate polynomial with exact rational coefficients.
#[pyclass(name = "Poly", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: wn_core::Poly,
}

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str, n: usize) -> PyResult<Self> {
        Ok(PyPoly {
            inner: parse_poly(text, n).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?}, n={})", self.inner.to_string(), self.inner.n())
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly {
            inner: self.inner.sub(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly {
            inner: self.inner.neg(),
        }
    }

    /// Partial derivative with respect to the 1-based variable index.
    fn partial(&self, i: usize) -> PyResult<PyPoly> {
        if i == 0 || i > self.inner.n() {
            return Err(PyValueError::new_err("variable index is 1-based"));
        }
        Ok(PyPoly {
            inner: self.inner.partial(i - 1).map_err(err)?,
        })
    }
}

/// A derivation of the polynomial ring, `sum f_i d/dx_i`.
#[pyclass(name = "Deriv", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDeriv {
    inner: wn_core::Deriv,
}

#[pymethods]
impl PyDeriv {
    #[new]
    fn new(text: &str, n: usize) -> PyResult<Self> {
        Ok(PyDeriv {
            inner: parse_deriv(text, n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn euler(n: usize) -> PyDeriv {
        PyDeriv {
            inner: wn_core::Deriv::euler(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Deriv({:?}, n={})", self.inner.to_string(), self.inner.n())
    }

    fn __eq__(&self, other: &PyDeriv) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyDeriv) -> PyResult<PyDeriv> {
        Ok(PyDeriv {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn bracket(&self, other: &PyDeriv) -> PyResult<PyDeriv> {
        Ok(PyDeriv {
            inner: self.inner.bracket(&other.inner).map_err(err)?,
        })
    }

    fn apply(&self, p: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly {
            inner: self.inner.apply(&p.inner).map_err(err)?,
        })
    }

    fn divergence(&self) -> PyPoly {
        PyPoly {
            inner: self.inner.divergence(),
        }
    }

    /// Graded components as a dict {index: Deriv}.
    fn graded_parts(&self) -> std::collections::BTreeMap<i64, PyDeriv> {
        wn_core::grading::graded_parts(&self.inner)
            .into_iter()
            .map(|(i, d)| (i, PyDeriv { inner: d }))
            .collect()
    }

    /// Splits a homogeneous component into (divergence-free, Euler-multiple).
    fn mn_project(&self, index: i64) -> PyResult<(PyDeriv, PyDeriv)> {
        let (m, e) = wn_core::grading::mn_project(&self.inner, index).map_err(err)?;
        Ok((PyDeriv { inner: m }, PyDeriv { inner: e }))
    }

    /// Polynomial cofactor if `f` is a Darboux polynomial, else None.
    fn darboux_cofactor(&self, f: &PyPoly) -> PyResult<Option<PyPoly>> {
        Ok(wn_core::darboux::is_darboux(&self.inner, &f.inner)
            .map_err(err)?
            .map(|c| PyPoly { inner: c }))
    }
}

/// Gcd of a list of polynomials.
#[pyfunction]
fn gcd(polys: Vec<PyRef<PyPoly>>) -> PyResult<PyPoly> {
    let ps: Vec<wn_core::Poly> = polys.iter().map(|p| p.inner.clone()).collect();
    Ok(PyPoly {
        inner: multi_gcd(&ps).map_err(err)?,
    })
}

/// Reduced Groebner basis, as strings in the input grammar.
#[pyfunction]
#[pyo3(signature = (gens, n, order="grevlex"))]
fn groebner(gens: Vec<String>, n: usize, order: &str) -> PyResult<Vec<String>> {
    let ord = match order {
        "grevlex" => MonomialOrder::Grevlex,
        "lex" => MonomialOrder::Lex,
        other => return Err(PyValueError::new_err(format!("unknown order `{other}`"))),
    };
    let ps = gens
        .iter()
        .map(|g| parse_poly(g, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let ideal = wn_core::ideals::IdealGens::new(n, ps);
    Ok(wn_core::ideals::groebner(&ideal, ord)
        .basis()
        .iter()
        .map(|p| p.to_string())
        .collect())
}

/// Ideal membership test.
#[pyfunction]
fn ideal_member(gens: Vec<String>, p: &str, n: usize) -> PyResult<bool> {
    let ps = gens
        .iter()
        .map(|g| parse_poly(g, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let ideal = wn_core::ideals::IdealGens::new(n, ps);
    let p = parse_poly(p, n).map_err(err)?;
    Ok(wn_core::ideals::contains(&ideal, &p))
}

/// Dimension and saturation status of the Lie closure at a degree cap.
#[pyfunction]
fn lie_closure_dim(gens: Vec<PyRef<PyDeriv>>, n: usize, cap: usize) -> PyResult<(usize, String)> {
    let ds: Vec<wn_core::Deriv> = gens.iter().map(|d| d.inner.clone()).collect();
    let t = wn_core::subalg::lie_closure(&ds, n, cap).map_err(err)?;
    let status = match t.status {
        wn_core::subalg::ClosureStatus::Closed => "closed",
        wn_core::subalg::ClosureStatus::SaturatedAtCap => "saturated-at-cap",
    };
    Ok((t.space.dim(), status.to_string()))
}

/// JSON report of the graded bracket table check.
#[pyfunction]
fn verify_bracket_table(n: usize, imax: i64) -> PyResult<String> {
    json(&wn_core::grading::verify_bracket_table(n, imax).map_err(err)?)
}

/// JSON report of the exhaustive sl_{n+1} isomorphism check.
#[pyfunction]
fn verify_sl_iso(n: usize) -> PyResult<String> {
    json(&wn_core::sliso::verify_iso(n).map_err(err)?)
}

/// JSON report of the bounded Darboux search.
#[pyfunction]
fn find_darboux(d: &PyDeriv, deg_f: usize, deg_cof: usize) -> PyResult<String> {
    json(&wn_core::darboux::find_darboux(&d.inner, deg_f, deg_cof).map_err(err)?)
}

/// JSON report of the simplicity probe.
#[pyfunction]
fn simplicity_probe(d: &PyDeriv, deg_f: usize, deg_cof: usize) -> PyResult<String> {
    json(&wn_core::darboux::simplicity_probe(&d.inner, deg_f, deg_cof).map_err(err)?)
}

#[pymodule]
fn wn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyDeriv>()?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(groebner, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_member, m)?)?;
    m.add_function(wrap_pyfunction!(lie_closure_dim, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bracket_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sl_iso, m)?)?;
    m.add_function(wrap_pyfunction!(find_darboux, m)?)?;
    m.add_function(wrap_pyfunction!(simplicity_probe, m)?)?;
    Ok(())
}
