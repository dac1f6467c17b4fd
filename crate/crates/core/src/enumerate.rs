//! Exhaustive streaming enumeration of small matrix classes.
//!
//! Cells are filled in column-major order trying `-1, 0, 1`, so matrices are
//! emitted in lexicographic order of [`SignMatrix::column_major_key`].

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::margins::MarginPair;
use crate::matrix::SignMatrix;
use crate::srm::Srm;

/// Largest `m * n` enumerated without an explicit override.
pub const DEFAULT_MAX_CELLS: usize = 20;

/// Restricts an SRM enumeration to a subclass.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFilter {
    /// Only matrices without `-1` entries.
    pub plus_only: bool,
    /// Exact row and column sums.
    pub margins: Option<MarginPair>,
    /// Upper bound on every row sum.
    pub c_bound: Option<i64>,
}

impl ClassFilter {
    pub fn all() -> Self {
        ClassFilter::default()
    }

    pub fn plus() -> Self {
        ClassFilter {
            plus_only: true,
            ..ClassFilter::default()
        }
    }

    pub fn with_margins(margins: MarginPair) -> Self {
        ClassFilter {
            margins: Some(margins),
            ..ClassFilter::default()
        }
    }

    pub fn with_c_bound(c: i64) -> Self {
        ClassFilter {
            c_bound: Some(c),
            ..ClassFilter::default()
        }
    }

    /// Membership test for an already-valid SRM.
    pub fn admits(&self, a: &SignMatrix) -> bool {
        (!self.plus_only || a.is_nonnegative())
            && self.margins.as_ref().is_none_or(|p| p.matches(a))
            && self.c_bound.is_none_or(|c| a.row_sums().iter().all(|&r| r <= c))
    }
}

fn check_cap(rows: usize, cols: usize, cap: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyShape { rows, cols });
    }
    let cells = rows * cols;
    if cells > cap {
        return Err(Error::CapExceeded { cells, cap });
    }
    if cap > DEFAULT_MAX_CELLS && cells > DEFAULT_MAX_CELLS {
        warn!("enumerating {rows}x{cols} ({cells} cells) above the default cap of {DEFAULT_MAX_CELLS}");
    }
    Ok(())
}

#[derive(Debug, Clone)]
struct Rules {
    rows: usize,
    cols: usize,
    sign_restricted: bool,
    allow_negative: bool,
    row_targets: Option<Vec<i64>>,
    col_targets: Option<Vec<i64>>,
    c_bound: Option<i64>,
}

const CANDIDATES: [i8; 3] = [-1, 0, 1];

/// Depth-first backtracker over the cells; yields every matrix obeying [`Rules`].
#[derive(Debug, Clone)]
pub struct MatrixStream {
    rules: Rules,
    values: Vec<i8>,
    next_candidate: Vec<usize>,
    row_prefix: Vec<i64>,
    col_prefix: Vec<i64>,
    depth: usize,
    done: bool,
}

impl MatrixStream {
    fn new(rules: Rules) -> Self {
        let cells = rules.rows * rules.cols;
        let done = match (&rules.row_targets, &rules.col_targets) {
            (Some(r), Some(s)) => {
                r.len() != rules.rows || s.len() != rules.cols || r.iter().sum::<i64>() != s.iter().sum::<i64>()
            }
            _ => false,
        };
        MatrixStream {
            values: vec![0; cells],
            next_candidate: vec![0; cells],
            row_prefix: vec![0; rules.rows],
            col_prefix: vec![0; rules.cols],
            depth: 0,
            done,
            rules,
        }
    }

    fn feasible(&self, k: usize, v: i8) -> bool {
        let r = &self.rules;
        if v < 0 && !r.allow_negative {
            return false;
        }
        let (i, j) = (k % r.rows, k / r.rows);
        let cp = self.col_prefix[j] + i64::from(v);
        let rp = self.row_prefix[i] + i64::from(v);
        if r.sign_restricted && (!(0..=1).contains(&cp) || rp < 0) {
            return false;
        }
        let rows_left = (r.rows - 1 - i) as i64;
        let cols_left = (r.cols - 1 - j) as i64;
        if let Some(s) = &r.col_targets {
            if (cp - s[j]).abs() > rows_left {
                return false;
            }
        }
        if let Some(t) = &r.row_targets {
            if (rp - t[i]).abs() > cols_left {
                return false;
            }
        }
        if cols_left == 0 {
            if let Some(c) = r.c_bound {
                if rp > c {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, k: usize, v: i8) {
        let (i, j) = (k % self.rules.rows, k / self.rules.rows);
        self.values[k] = v;
        self.row_prefix[i] += i64::from(v);
        self.col_prefix[j] += i64::from(v);
    }

    fn unassign(&mut self, k: usize) {
        let (i, j) = (k % self.rules.rows, k / self.rules.rows);
        let v = i64::from(self.values[k]);
        self.row_prefix[i] -= v;
        self.col_prefix[j] -= v;
        self.values[k] = 0;
    }

    fn current(&self) -> SignMatrix {
        let (m, n) = (self.rules.rows, self.rules.cols);
        let mut data = vec![0i8; m * n];
        for (k, &v) in self.values.iter().enumerate() {
            data[(k % m) * n + k / m] = v;
        }
        SignMatrix::from_data_unchecked(m, n, data)
    }
}

impl Iterator for MatrixStream {
    type Item = SignMatrix;

    fn next(&mut self) -> Option<SignMatrix> {
        if self.done {
            return None;
        }
        let cells = self.values.len();
        loop {
            if self.depth == cells {
                let out = self.current();
                self.depth -= 1;
                self.unassign(self.depth);
                return Some(out);
            }
            let k = self.depth;
            let mut advanced = false;
            while self.next_candidate[k] < CANDIDATES.len() {
                let v = CANDIDATES[self.next_candidate[k]];
                self.next_candidate[k] += 1;
                if self.feasible(k, v) {
                    self.assign(k, v);
                    self.depth += 1;
                    if self.depth < cells {
                        self.next_candidate[self.depth] = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if k == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.unassign(self.depth);
            }
        }
    }
}

/// Stream of certified SRMs.
#[derive(Debug, Clone)]
pub struct SrmStream(MatrixStream);

impl Iterator for SrmStream {
    type Item = Srm;

    fn next(&mut self) -> Option<Srm> {
        self.0.next().map(Srm::new_unchecked)
    }
}

/// All `m x n` SRMs admitted by `filter`, with the default cell cap.
pub fn enumerate_srms(m: usize, n: usize, filter: &ClassFilter) -> Result<SrmStream> {
    enumerate_srms_capped(m, n, filter, DEFAULT_MAX_CELLS)
}

pub fn enumerate_srms_capped(m: usize, n: usize, filter: &ClassFilter, max_cells: usize) -> Result<SrmStream> {
    check_cap(m, n, max_cells)?;
    if let Some(c) = filter.c_bound {
        if c < 0 {
            return Err(Error::Precondition(format!("row-sum cap {c} is negative")));
        }
    }
    let (row_targets, col_targets) = match &filter.margins {
        Some(p) => {
            if p.rows() != m || p.cols() != n {
                return Err(Error::MarginMismatch(format!(
                    "margins of length {}x{} for a {m}x{n} class",
                    p.rows(),
                    p.cols()
                )));
            }
            (Some(p.row_sums.clone()), Some(p.col_sums.clone()))
        }
        None => (None, None),
    };
    Ok(SrmStream(MatrixStream::new(Rules {
        rows: m,
        cols: n,
        sign_restricted: true,
        allow_negative: !filter.plus_only,
        row_targets,
        col_targets,
        c_bound: filter.c_bound,
    })))
}

pub fn count_srms(m: usize, n: usize, filter: &ClassFilter) -> Result<u64> {
    count_srms_capped(m, n, filter, DEFAULT_MAX_CELLS)
}

pub fn count_srms_capped(m: usize, n: usize, filter: &ClassFilter, max_cells: usize) -> Result<u64> {
    Ok(enumerate_srms_capped(m, n, filter, max_cells)?.count() as u64)
}

fn margin_class(margins: &MarginPair, allow_negative: bool, max_cells: usize) -> Result<MatrixStream> {
    let (m, n) = (margins.rows(), margins.cols());
    check_cap(m, n, max_cells)?;
    Ok(MatrixStream::new(Rules {
        rows: m,
        cols: n,
        sign_restricted: false,
        allow_negative,
        row_targets: Some(margins.row_sums.clone()),
        col_targets: Some(margins.col_sums.clone()),
        c_bound: None,
    }))
}

/// The class `A±(R, S)` of all (0,±1)-matrices with margins `(R, S)`.
pub fn enumerate_pm_class(margins: &MarginPair) -> Result<MatrixStream> {
    margin_class(margins, true, DEFAULT_MAX_CELLS)
}

pub fn enumerate_pm_class_capped(margins: &MarginPair, max_cells: usize) -> Result<MatrixStream> {
    margin_class(margins, true, max_cells)
}

/// The class `A(R, S)` of (0,1)-matrices with margins `(R, S)`.
pub fn enumerate_zero_one_class(margins: &MarginPair) -> Result<MatrixStream> {
    margin_class(margins, false, DEFAULT_MAX_CELLS)
}

pub fn enumerate_zero_one_class_capped(margins: &MarginPair, max_cells: usize) -> Result<MatrixStream> {
    margin_class(margins, false, max_cells)
}

/// Largest nonzero count over all `m x n` SRMs, by exhaustive search.
pub fn brute_force_max_nonzeros(m: usize, n: usize) -> Result<u64> {
    brute_force_max_nonzeros_capped(m, n, DEFAULT_MAX_CELLS)
}

pub fn brute_force_max_nonzeros_capped(m: usize, n: usize, max_cells: usize) -> Result<u64> {
    Ok(enumerate_srms_capped(m, n, &ClassFilter::all(), max_cells)?
        .map(|a| a.nonzeros() as u64)
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_counts() {
        assert_eq!(count_srms(2, 2, &ClassFilter::plus()).unwrap(), 9);
        assert_eq!(count_srms(2, 2, &ClassFilter::all()).unwrap(), 10);
        assert_eq!(count_srms(3, 2, &ClassFilter::plus()).unwrap(), 16);
    }

    #[test]
    fn emission_order_is_column_major_lexicographic() {
        let keys: Vec<Vec<i8>> = enumerate_srms(2, 3, &ClassFilter::all())
            .unwrap()
            .map(|a| a.column_major_key())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn margin_filter() {
        let f = ClassFilter::with_margins(MarginPair::new(vec![1, 0], vec![1, 0]));
        let found: Vec<Vec<Vec<i8>>> = enumerate_srms(2, 2, &f).unwrap().map(|a| a.to_rows()).collect();
        assert_eq!(found, vec![vec![vec![0, 1], vec![1, -1]], vec![vec![1, 0], vec![0, 0]]]);
    }

    #[test]
    fn pm_classes() {
        let p = MarginPair::new(vec![2, 0], vec![2, 0]);
        let class: Vec<SignMatrix> = enumerate_pm_class(&p).unwrap().collect();
        assert!(class.contains(&SignMatrix::from_rows(&[[1, 1], [1, -1]]).unwrap()));
        let perms: Vec<SignMatrix> = enumerate_pm_class(&MarginPair::new(vec![1, 1], vec![1, 1]))
            .unwrap()
            .collect();
        assert_eq!(perms.len(), 2);
        assert_eq!(enumerate_pm_class(&MarginPair::new(vec![1], vec![1])).unwrap().count(), 1);
        assert_eq!(enumerate_pm_class(&MarginPair::new(vec![1], vec![2])).unwrap().count(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_srms(5, 5, &ClassFilter::all()),
            Err(Error::CapExceeded { cells: 25, cap: 20 })
        ));
        assert!(enumerate_srms_capped(5, 5, &ClassFilter::plus(), 25).is_ok());
    }

    #[test]
    fn small_maxima() {
        assert_eq!(brute_force_max_nonzeros(2, 2).unwrap(), 3);
        assert_eq!(brute_force_max_nonzeros(1, 2).unwrap(), 2);
        assert_eq!(brute_force_max_nonzeros(3, 3).unwrap(), 6);
    }
}
