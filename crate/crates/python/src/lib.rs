//! Python bindings: fillings with their statistics, Macdonald expansions
//! (plain and specialized at roots of unity), the split/swap bijections,
//! and the exhaustive verifiers.
//!
//! Fillings cross the boundary as lists of rows top-down, expansions as
//! dicts keyed by exponent tuples with {(q_exp, t_exp): int} coefficient
//! dicts, and verifiers return (verified, cases, report) triples.

use num_traits::Zero;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use macdonald::{
    check_conjugation_symmetry, check_factorization, macdonald_polynomial, verify_involution,
    verify_key_lemma, verify_lemmas, verify_theorem, EnumerationBudget, Partition, ShapeSpec,
    TailShape, DEFAULT_MAX_STATES,
};

fn value_err(e: macdonald::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_err)
}

fn tail_shape(mu_prime: Vec<usize>, n: usize, l: usize) -> PyResult<TailShape> {
    TailShape::new(partition(mu_prime)?, n, l).map_err(value_err)
}

/// A filling of a partition shape, constructed from rows listed top-down.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Filling {
    inner: macdonald::Filling,
}

#[pymethods]
impl Filling {
    #[new]
    fn new(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(Filling {
            inner: macdonald::Filling::from_rows_top_down(rows).map_err(value_err)?,
        })
    }

    /// The shape as a list of parts.
    fn shape(&self) -> Vec<usize> {
        self.inner.shape().parts().to_vec()
    }

    /// Rows top-down, as passed to the constructor.
    fn rows(&self) -> Vec<Vec<u32>> {
        self.inner.rows_top_down()
    }

    fn maj(&self) -> u64 {
        self.inner.maj()
    }

    fn inv(&self) -> i64 {
        self.inner.inv()
    }

    /// Descent cells as (row, col) pairs, row 1 at the bottom.
    fn descents(&self) -> Vec<(usize, usize)> {
        self.inner
            .descents()
            .into_iter()
            .map(|c| (c.row, c.col))
            .collect()
    }

    fn inversion_count(&self) -> u64 {
        self.inner.inversion_count()
    }

    /// maj restricted to the descents in row i (i >= 2).
    fn maj_rows(&self, i: usize) -> PyResult<u64> {
        self.inner.maj_rows(i).map_err(value_err)
    }

    fn arm_rows(&self, i: usize) -> PyResult<u64> {
        self.inner.arm_rows(i).map_err(value_err)
    }

    fn inv_rows(&self, i: usize) -> PyResult<i64> {
        self.inner.inv_rows(i).map_err(value_err)
    }

    /// Label counts in an alphabet of size m.
    fn evaluation(&self, m: usize) -> PyResult<Vec<usize>> {
        Ok(self
            .inner
            .evaluation(m)
            .map_err(value_err)?
            .entries()
            .to_vec())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Filling(\"{}\")", self.inner)
    }

    fn __eq__(&self, other: &Filling) -> bool {
        self.inner == other.inner
    }
}

/// Cells strictly right of (row, col) in the shape.
#[pyfunction]
fn arm(shape: Vec<usize>, row: usize, col: usize) -> PyResult<usize> {
    partition(shape)?
        .arm(macdonald::Cell::new(row, col))
        .map_err(value_err)
}

/// Cells strictly above (row, col) in the shape.
#[pyfunction]
fn leg(shape: Vec<usize>, row: usize, col: usize) -> PyResult<usize> {
    partition(shape)?
        .leg(macdonald::Cell::new(row, col))
        .map_err(value_err)
}

/// The monomial expansion of H~_shape in `vars` variables, as a dict
/// {exponent tuple: {(q_exp, t_exp): coefficient}}. With `l` set, the
/// coefficients are reduced mod Phi_l (t-exponents below phi(l)) and
/// vanishing coefficients are dropped.
#[pyfunction]
#[pyo3(signature = (shape, vars, l=None, max_states=None))]
fn macdonald_expansion(
    py: Python<'_>,
    shape: Vec<usize>,
    vars: usize,
    l: Option<u32>,
    max_states: Option<u64>,
) -> PyResult<Py<PyDict>> {
    let shape = partition(shape)?;
    let budget = EnumerationBudget::new(vars, max_states.unwrap_or(DEFAULT_MAX_STATES))
        .map_err(value_err)?;
    let expansion = macdonald_polynomial(&shape, &budget).map_err(value_err)?;
    let out = PyDict::new(py);
    match l {
        None => {
            for (nu, poly) in expansion.coeffs() {
                let key = PyTuple::new(py, nu.entries())?;
                let coeff = PyDict::new(py);
                for (&(qe, te), c) in poly.terms() {
                    coeff.set_item((qe, te), c.clone())?;
                }
                out.set_item(key, coeff)?;
            }
        }
        Some(l) => {
            let specialized = expansion.specialize(l).map_err(value_err)?;
            for (nu, element) in specialized.coeffs() {
                let key = PyTuple::new(py, nu.entries())?;
                let coeff = PyDict::new(py);
                for (&qe, vec) in element.rep() {
                    for (te, c) in vec.iter().enumerate() {
                        if !c.is_zero() {
                            coeff.set_item((qe, te), c.clone())?;
                        }
                    }
                }
                out.set_item(key, coeff)?;
            }
        }
    }
    Ok(out.into())
}

/// The tail involution on a filling of (mu', n^l).
#[pyfunction]
fn tau(filling: &Filling, mu_prime: Vec<usize>, n: usize, l: usize) -> PyResult<Filling> {
    let ts = tail_shape(mu_prime, n, l)?;
    Ok(Filling {
        inner: macdonald::tau(&filling.inner, &ts).map_err(value_err)?,
    })
}

/// Splits a filling of (mu', n^l) into (body, tail).
#[pyfunction]
fn pi_star(
    filling: &Filling,
    mu_prime: Vec<usize>,
    n: usize,
    l: usize,
) -> PyResult<(Filling, Filling)> {
    let ts = tail_shape(mu_prime, n, l)?;
    let split = macdonald::pi_star(&filling.inner, &ts).map_err(value_err)?;
    Ok((Filling { inner: split.body }, Filling { inner: split.tail }))
}

/// Boundary swap condition for a width-2 row (a, b) over an entry below.
#[pyfunction]
fn cond_xax(a: u32, b: u32, below: u32) -> bool {
    macdonald::cond_xax(a, b, below)
}

/// Interior swap condition for (a, b) over (below_left, below_right).
#[pyfunction]
fn cond_xxxx(a: u32, b: u32, below_left: u32, below_right: u32) -> bool {
    macdonald::cond_xxxx(a, b, below_left, below_right)
}

/// Checks the factorization of H~_{(mu',n^l)} at t = zeta_l in `vars`
/// variables. Returns (verified, cases, report).
#[pyfunction]
#[pyo3(signature = (mu_prime, n, l, vars, max_states=None))]
fn verify_factorization(
    mu_prime: Vec<usize>,
    n: usize,
    l: usize,
    vars: usize,
    max_states: Option<u64>,
) -> PyResult<(bool, u64, String)> {
    let spec = ShapeSpec::new(partition(mu_prime)?, n, l).map_err(value_err)?;
    let report = check_factorization(&spec, vars, max_states.unwrap_or(DEFAULT_MAX_STATES))
        .map_err(value_err)?;
    Ok((report.verified(), report.cases, report.to_string()))
}

/// Exhaustively checks inv(tau(T)) = inv(pi*(T)) and the maj congruence
/// mod l. Returns (verified, cases, report).
#[pyfunction]
#[pyo3(signature = (mu_prime, n, l, max_entry, max_states=None))]
fn verify_bijection(
    mu_prime: Vec<usize>,
    n: usize,
    l: usize,
    max_entry: usize,
    max_states: Option<u64>,
) -> PyResult<(bool, u64, String)> {
    let ts = tail_shape(mu_prime, n, l)?;
    let report = verify_theorem(&ts, max_entry, max_states.unwrap_or(DEFAULT_MAX_STATES))
        .map_err(value_err)?;
    Ok((report.verified(), report.cases, report.to_string()))
}

/// Exhaustively checks that tau squares to the identity and preserves
/// evaluations. Returns (verified, cases, report).
#[pyfunction]
#[pyo3(signature = (mu_prime, n, l, max_entry, max_states=None))]
fn verify_tau_involution(
    mu_prime: Vec<usize>,
    n: usize,
    l: usize,
    max_entry: usize,
    max_states: Option<u64>,
) -> PyResult<(bool, u64, String)> {
    let ts = tail_shape(mu_prime, n, l)?;
    let report = verify_involution(&ts, max_entry, max_states.unwrap_or(DEFAULT_MAX_STATES))
        .map_err(value_err)?;
    Ok((report.verified(), report.cases, report.to_string()))
}

/// Exhaustively checks the two-row swap lemmas up to `max_entry`.
/// Returns (verified, cases, report).
#[pyfunction]
fn verify_swap_lemmas(max_entry: u32) -> (bool, u64, String) {
    let report = verify_lemmas(max_entry);
    (report.verified(), report.cases(), report.to_string())
}

/// Replays the swap algorithm with stepwise assertions on every filling of
/// (mu', 2^l). Returns (verified, cases, report).
#[pyfunction]
#[pyo3(signature = (mu_prime, l, max_entry, max_states=None))]
fn verify_algorithm_replay(
    mu_prime: Vec<usize>,
    l: usize,
    max_entry: usize,
    max_states: Option<u64>,
) -> PyResult<(bool, u64, String)> {
    let ts = tail_shape(mu_prime, 2, l)?;
    let report = verify_key_lemma(&ts, max_entry, max_states.unwrap_or(DEFAULT_MAX_STATES))
        .map_err(value_err)?;
    Ok((report.verified(), report.cases, report.to_string()))
}

/// Checks H~_shape(q,t) against H~_conjugate(t,q). Returns
/// (verified, cases, report).
#[pyfunction]
#[pyo3(signature = (shape, vars=None, max_states=None))]
fn verify_symmetry(
    shape: Vec<usize>,
    vars: Option<usize>,
    max_states: Option<u64>,
) -> PyResult<(bool, u64, String)> {
    let shape = partition(shape)?;
    let vars = vars.unwrap_or_else(|| shape.size().max(1));
    let report = check_conjugation_symmetry(&shape, vars, max_states.unwrap_or(DEFAULT_MAX_STATES))
        .map_err(value_err)?;
    Ok((report.verified(), report.cases, report.to_string()))
}

#[pymodule]
fn macdonald_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Filling>()?;
    m.add_function(wrap_pyfunction!(arm, m)?)?;
    m.add_function(wrap_pyfunction!(leg, m)?)?;
    m.add_function(wrap_pyfunction!(macdonald_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(pi_star, m)?)?;
    m.add_function(wrap_pyfunction!(cond_xax, m)?)?;
    m.add_function(wrap_pyfunction!(cond_xxxx, m)?)?;
    m.add_function(wrap_pyfunction!(verify_factorization, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bijection, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tau_involution, m)?)?;
    m.add_function(wrap_pyfunction!(verify_swap_lemmas, m)?)?;
    m.add_function(wrap_pyfunction!(verify_algorithm_replay, m)?)?;
    m.add_function(wrap_pyfunction!(verify_symmetry, m)?)?;
    Ok(())
}
