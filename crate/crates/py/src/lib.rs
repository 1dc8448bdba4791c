//! Python bindings. Generator indices are 0-based, as in the Rust library;
//! element text uses `x1, x2, ...`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use nilaut_core::autgroup::{self, Automorphism as CoreAut};
use nilaut_core::iastruct;
use nilaut_core::involutions::{self, BasisRole};
use nilaut_core::verify::{self, VerifyConfig};
use nilaut_core::wordlang;
use nilaut_core::zlinalg::{self, IntMatrix};
use nilaut_core::Element as CoreElement;

fn err(e: nilaut_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix(rows: Vec<Vec<BigInt>>) -> PyResult<IntMatrix> {
    IntMatrix::from_rows(rows).map_err(err)
}

#[pyclass(module = "nilaut", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Element {
    inner: CoreElement,
}

#[pymethods]
impl Element {
    #[new]
    fn new(abelian: Vec<BigInt>, comm: Vec<BigInt>) -> PyResult<Self> {
        let inner = CoreElement::from_parts(abelian, comm).map_err(err)?;
        Ok(Element { inner })
    }

    /// Parse text such as `x1^2*x2*[x1,x2]^-1`.
    #[staticmethod]
    fn parse(text: &str, rank: usize) -> PyResult<Self> {
        let inner = wordlang::parse_element(text, rank).map_err(err)?;
        Ok(Element { inner })
    }

    #[staticmethod]
    fn identity(rank: usize) -> Self {
        Element { inner: CoreElement::identity(rank) }
    }

    #[staticmethod]
    fn generator(rank: usize, index: usize) -> PyResult<Self> {
        let inner = CoreElement::generator(rank, index).map_err(err)?;
        Ok(Element { inner })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn abelian(&self) -> Vec<BigInt> {
        self.inner.abelian().to_vec()
    }

    #[getter]
    fn comm(&self) -> Vec<BigInt> {
        self.inner.comm().to_vec()
    }

    fn mul(&self, other: &Element) -> PyResult<Element> {
        let inner = self.inner.mul(&other.inner).map_err(err)?;
        Ok(Element { inner })
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.mul(other)
    }

    fn inv(&self) -> Element {
        Element { inner: self.inner.inv() }
    }

    fn __pow__(&self, k: BigInt, _modulo: Option<Py<PyAny>>) -> Element {
        Element { inner: self.inner.pow(&k) }
    }

    /// `[self, other] = self^-1 other^-1 self other`.
    fn commutator(&self, other: &Element) -> PyResult<Element> {
        let inner = self.inner.commutator(&other.inner).map_err(err)?;
        Ok(Element { inner })
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn is_central(&self) -> bool {
        self.inner.is_central()
    }

    fn is_primitive(&self) -> PyResult<bool> {
        self.inner.is_primitive().map_err(err)
    }

    fn __str__(&self) -> String {
        wordlang::format_element(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Element('{}', rank={})", self.__str__(), self.inner.rank())
    }
}

#[pyclass(module = "nilaut", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Automorphism {
    inner: CoreAut,
}

fn aut(inner: CoreAut) -> Automorphism {
    Automorphism { inner }
}

#[pymethods]
impl Automorphism {
    #[new]
    fn new(images: Vec<Element>) -> PyResult<Self> {
        let images = images.into_iter().map(|g| g.inner).collect();
        Ok(aut(CoreAut::from_images(images).map_err(err)?))
    }

    /// Parse a document `{"rank": n, "images": ["x1", ...]}`.
    #[staticmethod]
    fn from_json(document: &str) -> PyResult<Self> {
        Ok(aut(wordlang::parse_automorphism(document).map_err(err)?))
    }

    fn to_json(&self) -> String {
        wordlang::automorphism_to_json(&self.inner).to_string()
    }

    #[staticmethod]
    fn identity(rank: usize) -> Self {
        aut(CoreAut::identity(rank))
    }

    /// Conjugation `x -> a x a^-1`.
    #[staticmethod]
    fn conjugation(a: &Element) -> Self {
        aut(CoreAut::conjugation(&a.inner))
    }

    /// `x_i -> x_i^-1` for every generator.
    #[staticmethod]
    fn symmetry(rank: usize) -> PyResult<Self> {
        Ok(aut(CoreAut::symmetry_standard(rank).map_err(err)?))
    }

    /// Inverts generator `index` and fixes the others.
    #[staticmethod]
    fn extremal(rank: usize, index: usize) -> PyResult<Self> {
        Ok(aut(CoreAut::extremal_standard(rank, index).map_err(err)?))
    }

    #[staticmethod]
    fn lift(rows: Vec<Vec<BigInt>>) -> PyResult<Self> {
        Ok(aut(CoreAut::lift(&matrix(rows)?).map_err(err)?))
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn images(&self) -> Vec<Element> {
        self.inner
            .images()
            .iter()
            .map(|g| Element { inner: g.clone() })
            .collect()
    }

    fn apply(&self, g: &Element) -> PyResult<Element> {
        let inner = self.inner.apply(&g.inner).map_err(err)?;
        Ok(Element { inner })
    }

    fn __call__(&self, g: &Element) -> PyResult<Element> {
        self.apply(g)
    }

    /// `self ∘ other`: `other` is applied first.
    fn compose(&self, other: &Automorphism) -> PyResult<Automorphism> {
        Ok(aut(self.inner.compose(&other.inner).map_err(err)?))
    }

    fn __mul__(&self, other: &Automorphism) -> PyResult<Automorphism> {
        self.compose(other)
    }

    fn invert(&self) -> Automorphism {
        aut(self.inner.invert())
    }

    fn __pow__(&self, k: i64, _modulo: Option<Py<PyAny>>) -> Automorphism {
        aut(self.inner.pow(k))
    }

    fn commutes_with(&self, other: &Automorphism) -> PyResult<bool> {
        self.inner.commutes_with(&other.inner).map_err(err)
    }

    fn abelianize(&self) -> Vec<Vec<BigInt>> {
        self.inner.abelianize().to_rows()
    }

    fn is_ia(&self) -> bool {
        self.inner.is_ia()
    }

    fn is_involution(&self) -> bool {
        self.inner.is_involution()
    }

    /// One of `SymmetryModIA`, `ExtremalModIA`, `OtherInvolution`, `NotInvolution`.
    fn classify(&self) -> String {
        self.inner.classify_involution().to_string()
    }

    /// `a` with `self = conjugation(a)`, or `None` when not inner.
    fn inner_witness(&self) -> PyResult<Option<Element>> {
        let w = self.inner.inner_witness().map_err(err)?;
        Ok(w.map(|inner| Element { inner }))
    }

    /// Split an IA automorphism fixing generator `index` into commuting
    /// plus and minus parts with respect to its conjugation.
    fn split_ia(&self, index: usize) -> PyResult<(Automorphism, Automorphism)> {
        let s = iastruct::ia_tau_split(&self.inner, index).map_err(err)?;
        Ok((aut(s.plus), aut(s.minus)))
    }

    fn __str__(&self) -> String {
        wordlang::format_automorphism(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Automorphism.from_json('{}')", self.to_json())
    }
}

/// Canonical basis of an integer involution. Returns `((p, m, s), columns, roles)`.
#[pyfunction]
fn canonicalize(
    rows: Vec<Vec<BigInt>>,
) -> PyResult<((usize, usize, usize), Vec<Vec<BigInt>>, Vec<String>)> {
    let form = involutions::hua_reiner_canonicalize(&matrix(rows)?).map_err(err)?;
    let roles = form
        .roles()
        .iter()
        .map(|r| match r {
            BasisRole::Fixed => "fixed".to_string(),
            BasisRole::Negated => "negated".to_string(),
            BasisRole::Swapped { partner } => format!("swapped:{partner}"),
        })
        .collect();
    Ok((form.block_type(), form.basis().columns(), roles))
}

/// Smith normal form: `(left, diagonal, right)` with `left * m * right == diagonal`.
#[pyfunction]
fn smith(rows: Vec<Vec<BigInt>>) -> PyResult<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
    let d = zlinalg::smith_decompose(&matrix(rows)?);
    Ok((d.left.to_rows(), d.diagonal.to_rows(), d.right.to_rows()))
}

/// Primitive element `r` in the coset of `basis[index]` with `theta(r) = r^-1`.
#[pyfunction]
fn decode(theta: &Automorphism, basis: Vec<Element>, index: usize) -> PyResult<Element> {
    let taus: Vec<CoreAut> = basis.iter().map(|g| CoreAut::conjugation(&g.inner)).collect();
    let tau = taus.get(index).ok_or_else(|| {
        err(nilaut_core::Error::IndexOutOfRank { index, rank: taus.len() })
    })?;
    let r = iastruct::decode_triplet(tau, &theta.inner, &taus).map_err(err)?;
    Ok(Element { inner: r })
}

#[pyfunction]
fn is_attached(theta: &Automorphism, basis: Vec<Element>) -> PyResult<bool> {
    let taus: Vec<CoreAut> = basis.iter().map(|g| CoreAut::conjugation(&g.inner)).collect();
    autgroup::is_attached_symmetry(&theta.inner, &taus).map_err(err)
}

/// Run the verification harness and return the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (rank_min=2, rank_max=5, trials=200, seed=0))]
fn run_verify(py: Python<'_>, rank_min: usize, rank_max: usize, trials: usize, seed: u64) -> PyResult<String> {
    let config = VerifyConfig {
        rank_min,
        rank_max,
        trials,
        seed,
        mutant: None,
    };
    let report = py.detach(|| verify::run(&config)).map_err(err)?;
    Ok(report.to_json_pretty())
}

#[pymodule]
fn nilaut(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Element>()?;
    m.add_class::<Automorphism>()?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    m.add_function(wrap_pyfunction!(smith, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(is_attached, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
