//! Python bindings: rings, polynomials, ideals, tight-closure operations,
//! and local-cohomology classes, mirroring the library surface.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use charp_closure_lab as core;
use core::dsl;

fn to_py(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A polynomial ring over F_p together with an optional defining ideal.
#[pyclass(name = "Ring", from_py_object)]
#[derive(Clone)]
struct PyRing {
    spec: core::RingSpec,
}

/// A sparse multivariate polynomial over F_p.
#[pyclass(name = "Poly", from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: core::Polynomial,
}

/// A finitely generated ideal of the ambient polynomial ring.
#[pyclass(name = "Ideal", from_py_object)]
#[derive(Clone)]
struct PyIdeal {
    inner: core::Ideal,
}

/// A verified system of parameters.
#[pyclass(name = "Sop", from_py_object)]
#[derive(Clone)]
struct PySop {
    inner: Arc<core::SopData>,
}

/// A class in the direct-limit model of top local cohomology.
#[pyclass(name = "CohClass", from_py_object)]
#[derive(Clone)]
struct PyCohClass {
    inner: core::LocalCohomClass,
}

impl PyRing {
    fn poly_arg(&self, value: &Bound<'_, PyAny>) -> PyResult<core::Polynomial> {
        if let Ok(p) = value.extract::<PyPoly>() {
            return Ok(p.inner);
        }
        if let Ok(text) = value.extract::<String>() {
            return core::Polynomial::parse(self.spec.ambient(), &text).map_err(to_py);
        }
        if let Ok(n) = value.extract::<u64>() {
            return Ok(core::Polynomial::constant(self.spec.ambient(), n));
        }
        Err(PyValueError::new_err("expected a Poly, a polynomial string, or an integer"))
    }

    fn poly_args(&self, values: &Bound<'_, PyAny>) -> PyResult<Vec<core::Polynomial>> {
        let mut out = Vec::new();
        for item in values.try_iter()? {
            out.push(self.poly_arg(&item?)?);
        }
        Ok(out)
    }
}

#[pymethods]
impl PyRing {
    /// Ring(prime, vars, defining=None): e.g.
    /// Ring(3, ["x","y","z","w"], ["x*y","y*z","z*w"]).
    #[new]
    #[pyo3(signature = (prime, vars, defining = None))]
    fn new(prime: u64, vars: Vec<String>, defining: Option<Vec<String>>) -> PyResult<Self> {
        let ambient = core::PolyRing::new(prime, vars).map_err(to_py)?;
        let gens = defining
            .unwrap_or_default()
            .iter()
            .map(|t| core::Polynomial::parse(&ambient, t))
            .collect::<core::Result<Vec<_>>>()
            .map_err(to_py)?;
        Ok(PyRing { spec: core::RingSpec::new(ambient, gens).map_err(to_py)? })
    }

    #[getter]
    fn prime(&self) -> u64 {
        self.spec.prime()
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.spec.ambient().vars().to_vec()
    }

    fn defining_ideal(&self) -> Vec<String> {
        self.spec.defining().iter().map(|g| g.to_string()).collect()
    }

    fn poly(&self, text: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.poly_arg(text)? })
    }

    fn ideal(&self, gens: &Bound<'_, PyAny>) -> PyResult<PyIdeal> {
        let gens = self.poly_args(gens)?;
        Ok(PyIdeal { inner: core::Ideal::new(self.spec.ambient(), gens).map_err(to_py)? })
    }

    fn minimal_primes(&self) -> PyResult<Vec<PyIdeal>> {
        Ok(core::minimal_primes(&self.spec)
            .map_err(to_py)?
            .into_iter()
            .map(|inner| PyIdeal { inner })
            .collect())
    }

    fn test_ideal(&self) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: core::test_ideal_sr(&self.spec).map_err(to_py)? })
    }

    fn tight_closure(&self, ideal: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: core::tight_closure_sr(&ideal.inner, &self.spec).map_err(to_py)? })
    }

    /// Colon route with transient elimination; returns
    /// (ideal, stabilized, eliminated as [(poly, level), ..]).
    fn parameter_test_ideal(
        &self,
        sop: &Bound<'_, PyAny>,
        t_max: u32,
    ) -> PyResult<(PyIdeal, bool, Vec<(PyPoly, u32)>)> {
        let sop = self.poly_args(sop)?;
        let result = core::parameter_test_ideal(&self.spec, &sop, t_max).map_err(to_py)?;
        let eliminated = result
            .eliminated
            .iter()
            .map(|w| (PyPoly { inner: w.element.clone() }, w.excluded_at_t))
            .collect();
        Ok((PyIdeal { inner: result.ideal }, result.stabilized, eliminated))
    }

    /// Bounded tight-closure membership: never answers MEMBER, only
    /// NON_MEMBER with a witness or UNKNOWN_UP_TO_BOUND.
    fn tc_membership_bounded(
        &self,
        x: &Bound<'_, PyAny>,
        ideal: &PyIdeal,
        multiplier: &Bound<'_, PyAny>,
        e_max: u32,
    ) -> PyResult<String> {
        let x = self.poly_arg(x)?;
        let c = self.poly_arg(multiplier)?;
        let verdict =
            core::tc_membership_bounded(&x, &ideal.inner, &self.spec, &c, e_max).map_err(to_py)?;
        Ok(verdict.to_string())
    }

    fn find_parameter_test_elements(&self, degree_bound: u32) -> PyResult<Vec<PyPoly>> {
        Ok(core::find_parameter_test_elements(&self.spec, degree_bound)
            .map_err(to_py)?
            .into_iter()
            .map(|inner| PyPoly { inner })
            .collect())
    }

    fn sop(&self, params: &Bound<'_, PyAny>) -> PyResult<PySop> {
        let params = self.poly_args(params)?;
        Ok(PySop {
            inner: Arc::new(core::SopData::new(self.spec.clone(), params).map_err(to_py)?),
        })
    }

    fn __repr__(&self) -> String {
        self.spec.describe()
    }
}

#[pymethods]
impl PyPoly {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.inner)
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.add(&other.inner).map_err(to_py)? })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.sub(&other.inner).map_err(to_py)? })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.mul(&other.inner).map_err(to_py)? })
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly { inner: self.inner.neg() }
    }

    fn __pow__(&self, exp: u64, _modulo: Option<u64>) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.pow(exp).map_err(to_py)? })
    }

    fn degree(&self) -> Option<u64> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// The iterated Frobenius image f^(p^e).
    fn frobenius(&self, e: u32) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.frobenius_power(e).map_err(to_py)? })
    }
}

#[pymethods]
impl PyIdeal {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal{}", self.inner)
    }

    fn gens(&self) -> Vec<PyPoly> {
        self.inner.gens().iter().map(|g| PyPoly { inner: g.clone() }).collect()
    }

    /// Generators of the reduced grevlex Groebner basis.
    fn groebner(&self) -> PyResult<Vec<String>> {
        let basis = self
            .inner
            .groebner_basis(core::MonomialOrder::GrevLex)
            .map_err(to_py)?;
        Ok(basis.elements().iter().map(|g| g.to_string()).collect())
    }

    fn member(&self, f: &PyPoly) -> PyResult<bool> {
        self.inner.contains(&f.inner).map_err(to_py)
    }

    fn equals(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.equals(&other.inner).map_err(to_py)
    }

    fn plus(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.plus(&other.inner).map_err(to_py)? })
    }

    fn times(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.times(&other.inner).map_err(to_py)? })
    }

    fn colon(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.colon(&other.inner).map_err(to_py)? })
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.intersect(&other.inner).map_err(to_py)? })
    }

    /// The Frobenius bracket power I^[q], q a power of the characteristic.
    fn bracket(&self, q: u64) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: core::bracket_power(&self.inner, q).map_err(to_py)? })
    }
}

#[pymethods]
impl PySop {
    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.sop().iter().map(|g| g.to_string()).collect();
        format!("Sop({})", gens.join(", "))
    }

    fn make_class(&self, rep: &PyPoly, level: u32) -> PyResult<PyCohClass> {
        Ok(PyCohClass { inner: core::make_class(&rep.inner, level, &self.inner).map_err(to_py)? })
    }
}

#[pymethods]
impl PyCohClass {
    fn __repr__(&self) -> String {
        self.inner.to_string()
    }

    #[getter]
    fn level(&self) -> u32 {
        self.inner.level()
    }

    fn representative(&self) -> PyPoly {
        PyPoly { inner: self.inner.representative().clone() }
    }

    fn is_zero(&self) -> PyResult<bool> {
        core::class_is_zero(&self.inner).map_err(to_py)
    }

    fn frobenius(&self) -> PyResult<PyCohClass> {
        Ok(PyCohClass { inner: core::frobenius_class(&self.inner).map_err(to_py)? })
    }

    fn annihilated_by(&self, ideal: &PyIdeal) -> PyResult<bool> {
        core::annihilates(&ideal.inner, &self.inner).map_err(to_py)
    }
}

/// Run the bundled three-plane F-stability demonstration; returns the audit
/// records as (assertion, inputs, verdict, anchor) tuples.
#[pyfunction]
fn reproduce(prime: u64) -> PyResult<Vec<(String, String, bool, String)>> {
    let outcome = dsl::run_reproduction(prime).map_err(to_py)?;
    Ok(outcome
        .records
        .into_iter()
        .map(|r| (r.assertion, r.inputs, r.verdict, r.anchor))
        .collect())
}

/// Execute a script in the command language; returns the printed trace
/// lines and raises if any statement errored.
#[pyfunction]
fn run_script(source: &str) -> PyResult<Vec<String>> {
    let program = dsl::parse_program(source).map_err(to_py)?;
    let mut env = dsl::Env::new();
    let outcome = dsl::execute_command(&program, &mut env);
    if outcome.errors > 0 {
        let first = outcome
            .trace
            .iter()
            .find(|t| t.kind == dsl::TraceKind::Error)
            .map(|t| format!("{}:{}: {}", t.line, t.col, t.text))
            .unwrap_or_else(|| "unknown error".into());
        return Err(PyValueError::new_err(first));
    }
    Ok(outcome.trace.into_iter().map(|t| t.text).collect())
}

#[pymodule]
fn charp_closure(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PySop>()?;
    m.add_class::<PyCohClass>()?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add_function(wrap_pyfunction!(run_script, m)?)?;
    Ok(())
}
