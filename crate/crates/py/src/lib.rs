//! Python module `extq`: root data, Bernstein points and the pipeline on top
//! of them. Results come back as plain dicts and lists mirroring the CLI
//! JSON.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};
use serde_json::{json, Value};

use extq_core::bernstein::{centralizer_subdatum, check_condition_cc, iwahori_datum, BernsteinDatum};
use extq_core::extquot::{extended_quotient, fiber_over};
use extq_core::lattice::{smith_normal_form as snf, IntMatrix};
use extq_core::lpackets::packets_by_fiber;
use extq_core::parameters::{mu_tilde, mu_tilde_report, MuTildeOptions};
use extq_core::rootdata::{build_root_datum, recognize_components, weyl_group, CartanType, RootDatum};
use extq_core::torus::TorusPoint;
use extq_core::unipotent::{springer_correspondence, unipotent_classes};

create_exception!(extq, ExtqError, PyValueError, "Raised for invalid input or a failed computation.");

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    ExtqError::new_err(e.to_string())
}

/// Converts a JSON value to the matching Python object.
pub fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => return Err(err(format!("non-integral number {n}"))),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.to_rows()
}

fn parse_type(s: &str) -> PyResult<CartanType> {
    let mut chars = s.trim().chars();
    let family = chars.next().ok_or_else(|| err("empty type"))?.to_ascii_uppercase();
    let rank: usize = chars.as_str().parse().map_err(|_| err(format!("cannot parse type `{s}`, write e.g. A2 or G2")))?;
    let t = CartanType::new(family, rank);
    if !t.is_valid() {
        return Err(err(format!("`{s}` is not an irreducible Cartan type")));
    }
    Ok(t)
}

fn types_of(rd: &RootDatum) -> Vec<String> {
    recognize_components(rd).iter().map(|c| c.cartan.to_string()).collect()
}

/// A root datum on `X^* = Z^n`, built from a descriptor such as `SL3` or `C2:sc`.
#[pyclass(name = "RootDatum", module = "extq", frozen)]
pub struct PyRootDatum {
    inner: RootDatum,
}

#[pymethods]
impl PyRootDatum {
    #[new]
    fn new(descriptor: &str) -> PyResult<Self> {
        Ok(PyRootDatum { inner: build_root_datum(descriptor).map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    fn roots(&self) -> Vec<Vec<BigInt>> {
        self.inner.roots.clone()
    }

    fn coroots(&self) -> Vec<Vec<BigInt>> {
        self.inner.coroots.clone()
    }

    fn weyl_order(&self) -> PyResult<usize> {
        Ok(weyl_group(&self.inner).map_err(err)?.order())
    }

    fn cartan_types(&self) -> Vec<String> {
        types_of(&self.inner)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner.to_json())
    }

    fn __repr__(&self) -> String {
        format!("RootDatum({:?})", self.inner.label)
    }
}

/// A Bernstein point: the group plus generators of the image of `c^s`
/// (none for the Iwahori block).
#[pyclass(name = "BernsteinPoint", module = "extq", frozen)]
pub struct PyBernsteinPoint {
    inner: BernsteinDatum,
}

fn opts(torsion_bound: u32) -> PyResult<MuTildeOptions> {
    if torsion_bound == 0 {
        return Err(err("torsion_bound must be at least 1"));
    }
    Ok(MuTildeOptions { torsion_bound })
}

fn parse_point(s: &str) -> PyResult<TorusPoint> {
    TorusPoint::parse_torsion(s).ok_or_else(|| err(format!("cannot parse torsion point `{s}`, write e.g. 1/2,0")))
}

#[pymethods]
impl PyBernsteinPoint {
    #[new]
    #[pyo3(signature = (datum, gens = None))]
    fn new(datum: &str, gens: Option<Vec<String>>) -> PyResult<Self> {
        let rd = build_root_datum(datum).map_err(err)?;
        let gens = gens.unwrap_or_default();
        let inner = if gens.is_empty() {
            iwahori_datum(&rd).map_err(err)?
        } else {
            let pts = gens.iter().map(|g| parse_point(g)).collect::<PyResult<Vec<_>>>()?;
            centralizer_subdatum(&rd, &pts).map_err(err)?
        };
        Ok(PyBernsteinPoint { inner })
    }

    #[getter]
    fn id(&self) -> String {
        self.inner.id.clone()
    }

    /// Order of `W^s`.
    #[getter]
    fn weyl_order(&self) -> usize {
        self.inner.ws.order()
    }

    /// Root datum of `H = Z_G(im c^s)`.
    #[getter]
    fn h(&self) -> PyRootDatum {
        PyRootDatum { inner: self.inner.h.clone() }
    }

    fn extended_quotient<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let comps = extended_quotient(&self.inner.ws);
        to_py(py, &Value::Array(comps.iter().map(|c| c.to_json()).collect()))
    }

    /// Points of `T//W^s` over the orbit of `t0`.
    fn fiber<'py>(&self, py: Python<'py>, t0: &str) -> PyResult<Bound<'py, PyAny>> {
        let t0 = parse_point(t0)?;
        if t0.rank() != self.inner.h.rank {
            return Err(err(format!("point has rank {}, expected {}", t0.rank(), self.inner.h.rank)));
        }
        let comps = extended_quotient(&self.inner.ws);
        let pts = fiber_over(&self.inner.ws, &comps, &t0);
        let v: Vec<Value> = pts
            .iter()
            .map(|p| json!({"w": p.w.word_string(), "component": p.component, "t": p.t.display()}))
            .collect();
        to_py(py, &Value::Array(v))
    }

    fn unipotent_classes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let classes = unipotent_classes(&self.inner.h).map_err(err)?;
        to_py(py, &Value::Array(classes.iter().map(|c| c.to_json()).collect()))
    }

    fn springer<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &springer_correspondence(&self.inner.h).map_err(err)?.to_json())
    }

    /// The assignment of parameters to fiber points. With `strict`, label
    /// conflicts and fibers without an assignment raise `ExtqError`.
    #[pyo3(signature = (torsion_bound = 4, strict = false))]
    fn mu_tilde<'py>(&self, py: Python<'py>, torsion_bound: u32, strict: bool) -> PyResult<Bound<'py, PyAny>> {
        let o = opts(torsion_bound)?;
        let a = if strict { mu_tilde(&self.inner, o) } else { mu_tilde_report(&self.inner, o) }.map_err(err)?;
        to_py(py, &a.to_json())
    }

    #[pyo3(signature = (torsion_bound = 4))]
    fn lpackets<'py>(&self, py: Python<'py>, torsion_bound: u32) -> PyResult<Bound<'py, PyAny>> {
        let a = mu_tilde_report(&self.inner, opts(torsion_bound)?).map_err(err)?;
        let (fibers, skipped) = packets_by_fiber(&self.inner.ws, &a);
        to_py(
            py,
            &json!({
                "fibers": fibers.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
                "skipped": skipped.iter().map(|(t, e)| json!({"t0": t.display(), "reason": e.to_string()})).collect::<Vec<_>>(),
            }),
        )
    }

    fn check_cc<'py>(&self, py: Python<'py>, p: u64) -> PyResult<Bound<'py, PyAny>> {
        let types: Vec<CartanType> = recognize_components(&self.inner.h).iter().map(|c| c.cartan).collect();
        to_py(py, &check_condition_cc(&types, p).map_err(err)?.to_json())
    }

    fn __repr__(&self) -> String {
        format!("BernsteinPoint({:?})", self.inner.id)
    }
}

/// Smith normal form: returns `u, v, d` with `u m v = d` and the invariant factors.
#[pyfunction]
fn smith_normal_form<'py>(py: Python<'py>, rows: Vec<Vec<BigInt>>) -> PyResult<Bound<'py, PyDict>> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
        return Err(err("expected a nonempty rectangular matrix"));
    }
    let r = snf(&IntMatrix::from_big_rows(&rows, cols));
    let d = PyDict::new(py);
    d.set_item("u", int_rows(&r.u))?;
    d.set_item("v", int_rows(&r.v))?;
    d.set_item("d", int_rows(&r.d))?;
    d.set_item("invariant_factors", r.invariant_factors.clone())?;
    Ok(d)
}

/// Residual characteristic check for a list of irreducible types such as `["A2", "G2"]`.
#[pyfunction(name = "check_condition_cc")]
fn py_check_condition_cc<'py>(py: Python<'py>, types: Vec<String>, p: u64) -> PyResult<Bound<'py, PyAny>> {
    let types = types.iter().map(|t| parse_type(t)).collect::<PyResult<Vec<_>>>()?;
    to_py(py, &check_condition_cc(&types, p).map_err(err)?.to_json())
}

/// Adds the classes and functions to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootDatum>()?;
    m.add_class::<PyBernsteinPoint>()?;
    m.add_function(wrap_pyfunction!(smith_normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(py_check_condition_cc, m)?)?;
    m.add("ExtqError", m.py().get_type::<ExtqError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

#[pymodule]
fn extq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
