//! Python bindings: `superweyl.RootSystem`, `superweyl.Character` and the
//! Clifford and Schur helpers.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use superweyl::characters::{self, CharacterOptions, SuperCharacterReport};
use superweyl::clifford::{self, CliffordClassification, QuadraticSpace};
use superweyl::field::FieldMode;
use superweyl::laurent::{CharacterPoly, HalfWeight};
use superweyl::rootdata::{polarize, GammaFunctional, GroupSpec, PolarizedDatum, RootDatum};

create_exception!(superweyl, SuperWeylError, PyValueError);

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    SuperWeylError::new_err(e.to_string())
}

fn weight(coords: &[i64]) -> PyResult<HalfWeight> {
    HalfWeight::integral(coords).map_err(err)
}

/// An exact Laurent polynomial in `t1..tl` with half-integral exponents.
#[pyclass(name = "Character", frozen, eq, module = "superweyl")]
#[derive(Clone, PartialEq)]
pub struct PyCharacter {
    inner: CharacterPoly,
}

#[pymethods]
impl PyCharacter {
    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// `(doubled exponent vector, coefficient)` pairs in ascending order.
    fn terms(&self) -> Vec<(Vec<i64>, BigInt)> {
        self.inner
            .terms()
            .map(|(w, c)| (w.doubled().to_vec(), c.clone()))
            .collect()
    }

    /// Value at `t = (1, ..., 1)`.
    fn dim(&self) -> BigInt {
        self.inner.dim_eval()
    }

    fn coefficient(&self, doubled: Vec<i64>) -> PyResult<BigInt> {
        let w = HalfWeight::from_doubled(doubled).map_err(err)?;
        self.inner.coefficient(&w).map_err(err)
    }

    fn __mul__(&self, other: &PyCharacter) -> PyResult<PyCharacter> {
        Ok(Self { inner: self.inner.mul(&other.inner).map_err(err)? })
    }

    fn __add__(&self, other: &PyCharacter) -> PyResult<PyCharacter> {
        Ok(Self { inner: self.inner.add(&other.inner).map_err(err)? })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Character({})", self.inner)
    }
}

fn wrap(inner: CharacterPoly) -> PyCharacter {
    PyCharacter { inner }
}

/// A root datum of `GL(m|n)`, `Q(n)` or `P(n)` polarized by `gamma`.
#[pyclass(name = "RootSystem", frozen, module = "superweyl")]
pub struct PyRootSystem {
    pd: PolarizedDatum,
    spec: GroupSpec,
}

fn coords(w: &HalfWeight) -> Vec<i64> {
    w.coords().expect("roots are integral")
}

fn report_dict<'py>(py: Python<'py>, r: &SuperCharacterReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("lambda", coords(&r.lambda))?;
    d.set_item("even_char", wrap(r.even_char.clone()))?;
    d.set_item("odd_factor", wrap(r.odd_factor.clone()))?;
    d.set_item("super_char", wrap(r.super_char.clone()))?;
    d.set_item("even_dim", r.even_dim.clone())?;
    d.set_item("super_dim", r.super_dim.clone())?;
    d.set_item("top_weight_ok", r.top_weight_ok)?;
    d.set_item("euler_only", r.euler_only)?;
    d.set_item("n_lambda", r.n_lambda)?;
    if let Some(alt) = &r.reflected {
        let a = PyDict::new(py);
        a.set_item("odd_factor", wrap(alt.odd_factor.clone()))?;
        a.set_item("super_char", wrap(alt.super_char.clone()))?;
        a.set_item("super_dim", alt.super_dim.clone())?;
        a.set_item("top_weight_ok", alt.top_weight_ok)?;
        d.set_item("reflected", a)?;
    }
    Ok(d)
}

#[pymethods]
impl PyRootSystem {
    /// `group` is `"gl:m,n"`, `"q:n"` or `"p:n"`; `gamma` defaults to
    /// `gamma(L_i) = -i` and may be given as `"-1,-3,-2"` or a list of ints.
    #[new]
    #[pyo3(signature = (group, gamma=None))]
    fn new(group: &str, gamma: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let spec: GroupSpec = group.parse().map_err(err)?;
        let datum = RootDatum::build(spec).map_err(err)?;
        let gamma = match gamma {
            None => GammaFunctional::standard(datum.rank()),
            Some(g) => match g.extract::<String>() {
                Ok(s) => s.parse().map_err(err)?,
                Err(_) => GammaFunctional::from_integers(&g.extract::<Vec<i64>>()?),
            },
        };
        Ok(Self { pd: polarize(&datum, &gamma).map_err(err)?, spec })
    }

    #[getter]
    fn name(&self) -> String {
        self.spec.to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.pd.rank()
    }

    #[getter]
    fn even_positive(&self) -> Vec<Vec<i64>> {
        self.pd.pos_even().iter().map(coords).collect()
    }

    #[getter]
    fn even_negative(&self) -> Vec<Vec<i64>> {
        self.pd.neg_even().iter().map(coords).collect()
    }

    /// `(root, multiplicity)` pairs.
    #[getter]
    fn odd_positive(&self) -> Vec<(Vec<i64>, u32)> {
        self.pd.pos_odd().iter().map(|(d, &m)| (coords(d), m)).collect()
    }

    #[getter]
    fn odd_negative(&self) -> Vec<(Vec<i64>, u32)> {
        self.pd.neg_odd().iter().map(|(d, &m)| (coords(d), m)).collect()
    }

    /// Doubled coordinates of `rho_0`, `rho_1` and `rho`.
    #[getter]
    fn rho_doubled(&self) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
        (
            self.pd.rho_even().doubled().to_vec(),
            self.pd.rho_odd().doubled().to_vec(),
            self.pd.rho().doubled().to_vec(),
        )
    }

    fn is_dominant(&self, weight_coords: Vec<i64>) -> PyResult<bool> {
        let w = weight(&weight_coords)?;
        self.pd.datum().check_weight(&w).map_err(err)?;
        Ok(self.pd.is_dominant(&w))
    }

    /// Whether `lower <= upper` in the order cut out by the positive roots.
    fn leq(&self, lower: Vec<i64>, upper: Vec<i64>) -> PyResult<bool> {
        let (a, b) = (weight(&lower)?, weight(&upper)?);
        self.pd.datum().check_weight(&a).map_err(err)?;
        self.pd.datum().check_weight(&b).map_err(err)?;
        Ok(self.pd.leq(&a, &b))
    }

    fn distinguished_parabolic(&self) -> bool {
        self.pd.admits_distinguished_parabolic()
    }

    fn weyl_group_order(&self) -> PyResult<usize> {
        Ok(self.pd.weyl_elements().map_err(err)?.len())
    }

    fn even_character(&self, weight_coords: Vec<i64>) -> PyResult<PyCharacter> {
        Ok(wrap(characters::even_character(&self.pd, &weight(&weight_coords)?).map_err(err)?))
    }

    #[pyo3(signature = (weight_coords, force=false))]
    fn super_character<'py>(
        &self,
        py: Python<'py>,
        weight_coords: Vec<i64>,
        force: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = characters::super_character_with(&self.pd, &weight(&weight_coords)?, CharacterOptions { force })
            .map_err(err)?;
        report_dict(py, &r)
    }

    /// The Weyl dimension product as a `fractions.Fraction`.
    fn weyl_dimension<'py>(&self, py: Python<'py>, weight_coords: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
        let q = characters::weyl_dimension(&self.pd, &weight(&weight_coords)?).map_err(err)?;
        py.import("fractions")?
            .getattr("Fraction")?
            .call1((q.numer().clone(), q.denom().clone()))
    }

    fn __repr__(&self) -> String {
        format!("RootSystem({}, gamma={})", self.spec, self.pd.gamma())
    }
}

fn classification_dict<'py>(py: Python<'py>, c: &CliffordClassification) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("r", c.r)?;
    d.set_item("rad_dim", c.rad_dim)?;
    d.set_item("d", c.d)?;
    d.set_item("delta_class", c.delta_class.to_string())?;
    d.set_item("type", c.simple_type.to_string())?;
    d.set_item("closed_dim", c.closed_dim)?;
    d.set_item("isotropic_dim", c.isotropic_dim)?;
    Ok(d)
}

/// Classifies the simple Clifford supermodule of an integer Gram matrix.
#[pyfunction]
#[pyo3(signature = (gram, field="Q"))]
fn classify<'py>(py: Python<'py>, gram: Vec<Vec<i64>>, field: &str) -> PyResult<Bound<'py, PyDict>> {
    let mode: FieldMode = field.parse().map_err(err)?;
    let qs = QuadraticSpace::from_integers(&gram, mode).map_err(err)?;
    classification_dict(py, &clifford::classify(&qs))
}

/// Classification for the form `b^lambda` on the odd Cartan part of `group`.
#[pyfunction]
#[pyo3(signature = (group, weight_coords, field="Q"))]
fn classify_weight<'py>(
    py: Python<'py>,
    group: &str,
    weight_coords: Vec<i64>,
    field: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let spec: GroupSpec = group.parse().map_err(err)?;
    let datum = RootDatum::build(spec).map_err(err)?;
    let mode: FieldMode = field.parse().map_err(err)?;
    let qs = clifford::gram_from_weight(&datum, &weight(&weight_coords)?, mode).map_err(err)?;
    classification_dict(py, &clifford::classify(&qs))
}

#[pyfunction]
fn schur(partition: Vec<i64>, nvars: usize) -> PyResult<PyCharacter> {
    Ok(wrap(characters::schur(&partition, nvars).map_err(err)?))
}

#[pyfunction]
fn gl_super_character(m: usize, n: usize, weight_coords: Vec<i64>) -> PyResult<PyCharacter> {
    Ok(wrap(characters::gl_super_character(m, n, &weight_coords).map_err(err)?))
}

#[pymodule(name = "superweyl")]
fn superweyl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCharacter>()?;
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_weight, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(gl_super_character, m)?)?;
    m.add("SuperWeylError", m.py().get_type::<SuperWeylError>())?;
    Ok(())
}
