//! Python module `srm`: sign-restricted matrices, their classes and orders.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::pyclass::CompareOp;

use srm_core::bruhat;
use srm_core::decompose;
use srm_core::digraph::{self, LoopedDigraph};
use srm_core::enumerate::{self, ClassFilter};
use srm_core::extremal;
use srm_core::interchange;
use srm_core::polytope;
use srm_core::verify;
use srm_core::{validate_srm, Error, SignMatrix};

fn err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_matrix(rows: &[Vec<i64>]) -> PyResult<SignMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(PyValueError::new_err("ragged rows"));
    }
    SignMatrix::from_i64(rows.len(), cols, &rows.concat()).map_err(err)
}

/// A validated sign-restricted matrix.
#[pyclass(name = "Srm", frozen, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySrm(srm_core::Srm);

#[pymethods]
impl PySrm {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        let m = to_matrix(&rows)?;
        validate_srm(&m).map(PySrm).map_err(|v| err(Error::NotSrm(v)))
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    fn rows(&self) -> Vec<Vec<i8>> {
        self.0.to_rows()
    }

    fn sum_matrix(&self) -> Vec<Vec<i64>> {
        self.0.sum_matrix().to_rows()
    }

    fn is_plus(&self) -> bool {
        self.0.is_plus()
    }

    fn nonzeros(&self) -> usize {
        self.0.nonzeros()
    }

    /// `(row_sums, col_sums)`.
    fn margins(&self) -> (Vec<i64>, Vec<i64>) {
        (self.0.row_sums(), self.0.col_sums())
    }

    /// The (0,1)-SRM reached and the interchange steps taken.
    fn eliminate(&self) -> (PySrm, Vec<String>) {
        let (out, trace) = interchange::eliminate_minus_ones(&self.0);
        (PySrm(out), trace.steps.iter().map(ToString::to_string).collect())
    }

    /// Signed subpermutation terms as `(sign, rows)` pairs.
    fn decompose(&self) -> PyResult<Vec<(i8, Vec<Vec<i8>>)>> {
        let d = decompose::signed_subperm_decomposition(&self.0).map_err(err)?;
        Ok(d.terms.iter().map(|t| (t.sign.value(), t.matrix.to_rows())).collect())
    }

    fn meet_irreducibles(&self) -> Vec<PySrm> {
        bruhat::meet_irreducible_decomposition(&self.0).into_iter().map(PySrm).collect()
    }

    /// `==` is equality; `<=` and friends are the Bruhat order.
    fn __richcmp__(&self, other: &PySrm, op: CompareOp) -> PyResult<bool> {
        let leq = |a: &PySrm, b: &PySrm| bruhat::bruhat_leq(&a.0, &b.0).map_err(err);
        Ok(match op {
            CompareOp::Eq => self == other,
            CompareOp::Ne => self != other,
            CompareOp::Le => leq(self, other)?,
            CompareOp::Ge => leq(other, self)?,
            CompareOp::Lt => self != other && leq(self, other)?,
            CompareOp::Gt => self != other && leq(other, self)?,
        })
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __and__(&self, other: &PySrm) -> PyResult<PySrm> {
        bruhat::bruhat_meet(&self.0, &other.0).map(PySrm).map_err(err)
    }

    fn __or__(&self, other: &PySrm) -> PyResult<PySrm> {
        bruhat::bruhat_join(&self.0, &other.0).map(PySrm).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Srm({:?})", self.0.to_rows())
    }
}

/// `None` when the matrix is an SRM, else the first violated condition.
#[pyfunction]
fn violation(rows: Vec<Vec<i64>>) -> PyResult<Option<String>> {
    Ok(validate_srm(&to_matrix(&rows)?).err().map(|v| v.to_string()))
}

#[pyfunction]
fn is_srm(rows: Vec<Vec<i64>>) -> PyResult<bool> {
    Ok(srm_core::is_srm(&to_matrix(&rows)?))
}

#[pyfunction]
fn max_nonzeros(m: usize, n: usize) -> u64 {
    extremal::max_nonzeros(m, n)
}

#[pyfunction]
fn extremal_srm(m: usize, n: usize) -> PySrm {
    PySrm(extremal::extremal_srm(m, n))
}

#[pyfunction]
#[pyo3(signature = (m, n, plus=false, max_cells=enumerate::DEFAULT_MAX_CELLS))]
fn enumerate_srms(m: usize, n: usize, plus: bool, max_cells: usize) -> PyResult<Vec<PySrm>> {
    let filter = if plus { ClassFilter::plus() } else { ClassFilter::all() };
    Ok(enumerate::enumerate_srms_capped(m, n, &filter, max_cells).map_err(err)?.map(PySrm).collect())
}

#[pyfunction]
#[pyo3(signature = (m, n, plus=false, max_cells=enumerate::DEFAULT_MAX_CELLS))]
fn count_srms(m: usize, n: usize, plus: bool, max_cells: usize) -> PyResult<u64> {
    let filter = if plus { ClassFilter::plus() } else { ClassFilter::all() };
    enumerate::count_srms_capped(m, n, &filter, max_cells).map_err(err)
}

/// Whether some (0,±1)-matrix has row sums `r` and column sums `s`.
#[pyfunction]
fn pm_nonempty(r: Vec<i64>, s: Vec<i64>) -> PyResult<bool> {
    interchange::pm_nonempty(&r, &s).map_err(err)
}

/// Orders a looped digraph (0-based vertices) into an SRM; `None` if impossible.
#[pyfunction]
#[pyo3(signature = (n, edges, loops=Vec::new()))]
fn srm_ordering(n: usize, edges: Vec<(usize, usize)>, loops: Vec<usize>) -> PyResult<Option<PySrm>> {
    let d = LoopedDigraph::new(n, edges, loops).map_err(err)?;
    if !digraph::srm_orderable(&d).map_err(err)? {
        return Ok(None);
    }
    Ok(Some(PySrm(digraph::srm_ordering(&d).map_err(err)?.matrix)))
}

/// Whether the c-SRM polytope's integral points, vertices and class agree.
#[pyfunction]
fn verify_polytope(m: usize, n: usize, c: i64) -> PyResult<bool> {
    Ok(polytope::verify_polytope(m, n, c).map_err(err)?.passed())
}

/// Disjoint (0,1)-matrices with the two margin pairs, or `None`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn find_joint_realization(
    r1: Vec<i64>,
    s1: Vec<i64>,
    r2: Vec<i64>,
    s2: Vec<i64>,
) -> PyResult<Option<(Vec<Vec<i8>>, Vec<Vec<i8>>)>> {
    let found = decompose::find_joint_realization(&r1, &s1, &r2, &s2).map_err(err)?;
    Ok(found.map(|j| (j.b1.to_rows(), j.b2.to_rows())))
}

/// Runs one verification suite by number; returns `(passed, details)`.
#[pyfunction]
fn run_suite(id: u8) -> PyResult<(bool, Vec<String>)> {
    let r = verify::run_suite(id).ok_or_else(|| PyValueError::new_err(format!("no suite {id}")))?;
    Ok((r.passed, r.details))
}

#[pymodule]
fn srm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySrm>()?;
    m.add_function(wrap_pyfunction!(violation, m)?)?;
    m.add_function(wrap_pyfunction!(is_srm, m)?)?;
    m.add_function(wrap_pyfunction!(max_nonzeros, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_srm, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_srms, m)?)?;
    m.add_function(wrap_pyfunction!(count_srms, m)?)?;
    m.add_function(wrap_pyfunction!(pm_nonempty, m)?)?;
    m.add_function(wrap_pyfunction!(srm_ordering, m)?)?;
    m.add_function(wrap_pyfunction!(verify_polytope, m)?)?;
    m.add_function(wrap_pyfunction!(find_joint_realization, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
