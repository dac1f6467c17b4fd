//! Row/column sum vectors and the matrix classes they define.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SignMatrix;
use crate::srm::Srm;

/// A row sum vector `R` and column sum vector `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarginPair {
    pub row_sums: Vec<i64>,
    pub col_sums: Vec<i64>,
}

impl MarginPair {
    pub fn new(row_sums: Vec<i64>, col_sums: Vec<i64>) -> Self {
        MarginPair { row_sums, col_sums }
    }

    pub fn rows(&self) -> usize {
        self.row_sums.len()
    }

    pub fn cols(&self) -> usize {
        self.col_sums.len()
    }

    pub fn row_total(&self) -> i64 {
        self.row_sums.iter().sum()
    }

    pub fn col_total(&self) -> i64 {
        self.col_sums.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.row_total() == self.col_total()
    }

    /// True when `m` has exactly these margins.
    pub fn matches(&self, m: &SignMatrix) -> bool {
        m.rows() == self.rows()
            && m.cols() == self.cols()
            && m.row_sums() == self.row_sums
            && m.col_sums() == self.col_sums
    }
}

pub fn margins(m: &SignMatrix) -> MarginPair {
    MarginPair::new(m.row_sums(), m.col_sums())
}

/// `(R, S)` are the margins of some SRM iff `R ≥ 0`, `S` is a (0,1)-vector
/// and the totals agree.
pub fn realizable_margins(p: &MarginPair) -> bool {
    !p.row_sums.is_empty()
        && !p.col_sums.is_empty()
        && p.row_sums.iter().all(|&r| r >= 0)
        && p.col_sums.iter().all(|&s| s == 0 || s == 1)
        && p.is_balanced()
}

/// The unique staircase (0,1)-SRM with margins `(R, S)`: skipping columns with
/// `s_j = 0`, row 1 takes the first `r_1` ones, row 2 the next `r_2`, and so on.
pub fn canonical_staircase(p: &MarginPair) -> Result<Srm> {
    if !realizable_margins(p) {
        return Err(Error::UnrealizableMargins(format!(
            "R={:?}, S={:?}",
            p.row_sums, p.col_sums
        )));
    }
    let mut out = SignMatrix::zeros_unchecked(p.rows(), p.cols());
    let mut open_cols = p
        .col_sums
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == 1)
        .map(|(j, _)| j);
    for (i, &r) in p.row_sums.iter().enumerate() {
        for _ in 0..r {
            let j = open_cols.next().expect("balanced margins");
            out.set_unchecked(i, j, 1);
        }
    }
    Ok(Srm::new_unchecked(out))
}

/// Gale–Ryser test: is the class `A(R, S)` of (0,1)-matrices nonempty?
pub fn zero_one_class_nonempty(row_sums: &[i64], col_sums: &[i64]) -> bool {
    if row_sums.iter().any(|&r| r < 0) || col_sums.iter().any(|&s| s < 0) {
        return false;
    }
    if row_sums.iter().sum::<i64>() != col_sums.iter().sum::<i64>() {
        return false;
    }
    let mut s = col_sums.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let mut prefix = 0;
    for (k, sk) in s.iter().enumerate() {
        prefix += sk;
        let cap: i64 = row_sums.iter().map(|&r| r.min(k as i64 + 1)).sum();
        if prefix > cap {
            return false;
        }
    }
    // k = n bound forces every r_i <= n
    row_sums.iter().all(|&r| r <= col_sums.len() as i64)
}

/// Ryser's greedy construction: each row in turn puts its ones in the columns
/// with the largest remaining demand (ties to the smallest index).
pub fn ryser_realization(row_sums: &[i64], col_sums: &[i64]) -> Option<SignMatrix> {
    if row_sums.is_empty() || col_sums.is_empty() || !zero_one_class_nonempty(row_sums, col_sums) {
        return None;
    }
    let (m, n) = (row_sums.len(), col_sums.len());
    let mut remaining = col_sums.to_vec();
    let mut out = SignMatrix::zeros_unchecked(m, n);
    for (i, &r) in row_sums.iter().enumerate() {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| remaining[b].cmp(&remaining[a]).then(a.cmp(&b)));
        for &j in order.iter().take(r as usize) {
            if remaining[j] == 0 {
                return None;
            }
            remaining[j] -= 1;
            out.set_unchecked(i, j, 1);
        }
    }
    remaining.iter().all(|&s| s == 0).then_some(out)
}

/// Finds a (0,1)-matrix with margins `(R, S)` avoiding every cell where
/// `forbidden(i, j)` holds, by unit-capacity max-flow. Returns `None` when no
/// such matrix exists.
pub fn realize_avoiding(
    row_sums: &[i64],
    col_sums: &[i64],
    forbidden: impl Fn(usize, usize) -> bool,
) -> Option<SignMatrix> {
    let (m, n) = (row_sums.len(), col_sums.len());
    if m == 0 || n == 0 {
        return None;
    }
    if row_sums.iter().any(|&r| r < 0 || r > n as i64) || col_sums.iter().any(|&s| s < 0 || s > m as i64) {
        return None;
    }
    let total: i64 = row_sums.iter().sum();
    if total != col_sums.iter().sum::<i64>() {
        return None;
    }
    let allowed: Vec<Vec<bool>> = (0..m).map(|i| (0..n).map(|j| !forbidden(i, j)).collect()).collect();
    let mut assigned = vec![vec![false; n]; m];
    let mut row_left = row_sums.to_vec();
    let mut col_left = col_sums.to_vec();
    let mut flow = 0;
    // Each augmenting path runs source -> row -> (col -> row)* -> col -> sink.
    loop {
        let Some(path) = augmenting_path(&allowed, &assigned, &row_left, &col_left) else {
            break;
        };
        let (start_row, end_col) = (path[0].0, path.last().unwrap().1);
        row_left[start_row] -= 1;
        col_left[end_col] -= 1;
        for &(i, j, add) in &path_cells(&path) {
            assigned[i][j] = add;
        }
        flow += 1;
    }
    if flow != total {
        return None;
    }
    let mut out = SignMatrix::zeros_unchecked(m, n);
    for i in 0..m {
        for j in 0..n {
            if assigned[i][j] {
                out.set_unchecked(i, j, 1);
            }
        }
    }
    Some(out)
}

/// Alternating path as (row, col) forward steps; returned list interleaves
/// forward edges (set) and backward edges (unset).
fn augmenting_path(
    allowed: &[Vec<bool>],
    assigned: &[Vec<bool>],
    row_left: &[i64],
    col_left: &[i64],
) -> Option<Vec<(usize, usize)>> {
    let (m, n) = (allowed.len(), allowed[0].len());
    // BFS over rows; parent_col[j] = row reaching col j, parent_row[i] = col reaching row i.
    let mut parent_col: Vec<Option<usize>> = vec![None; n];
    let mut parent_row: Vec<Option<usize>> = vec![None; m];
    let mut seen_row = vec![false; m];
    let mut queue = std::collections::VecDeque::new();
    for i in 0..m {
        if row_left[i] > 0 {
            seen_row[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !allowed[i][j] || assigned[i][j] || parent_col[j].is_some() {
                continue;
            }
            parent_col[j] = Some(i);
            if col_left[j] > 0 {
                // unwind
                let mut path = Vec::new();
                let mut col = j;
                loop {
                    let row = parent_col[col].unwrap();
                    path.push((row, col));
                    match parent_row[row] {
                        Some(prev_col) => {
                            path.push((row, prev_col));
                            col = prev_col;
                        }
                        None => break,
                    }
                }
                path.reverse();
                return Some(path);
            }
            for (k, row_assigned) in assigned.iter().enumerate() {
                if row_assigned[j] && !seen_row[k] {
                    seen_row[k] = true;
                    parent_row[k] = Some(j);
                    queue.push_back(k);
                }
            }
        }
    }
    None
}

/// Converts an alternating path into cell updates: even positions are new
/// assignments, odd positions are released ones.
fn path_cells(path: &[(usize, usize)]) -> Vec<(usize, usize, bool)> {
    // path (after reverse) alternates: forward (row, col) set, backward (row', col) unset
    path.iter()
        .enumerate()
        .map(|(k, &(i, j))| (i, j, k % 2 == 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realizability_examples() {
        assert!(realizable_margins(&MarginPair::new(vec![2, 0, 0, 1], vec![1, 1, 1])));
        assert!(realizable_margins(&MarginPair::new(vec![4, 0, 0], vec![1, 1, 1, 1])));
        assert!(!realizable_margins(&MarginPair::new(vec![1], vec![2])));
        assert!(!realizable_margins(&MarginPair::new(vec![1, 1], vec![1, 0])));
    }

    #[test]
    fn margins_of_example_matrices() {
        let a = SignMatrix::from_rows(&[[0i8, 1, 1], [1, -1, 0], [0, 1, -1]]).unwrap();
        assert_eq!(margins(&a), MarginPair::new(vec![2, 0, 0], vec![1, 1, 0]));
        let a = SignMatrix::from_rows(&[[0i8, 1, 1], [1, -1, 0], [0, 1, -1], [0, 0, 1]]).unwrap();
        assert_eq!(margins(&a), MarginPair::new(vec![2, 0, 0, 1], vec![1, 1, 1]));
        let z = SignMatrix::zeros(2, 3).unwrap();
        assert_eq!(margins(&z), MarginPair::new(vec![0, 0], vec![0, 0, 0]));
    }

    #[test]
    fn staircase_examples() {
        let s = canonical_staircase(&MarginPair::new(vec![2, 0, 0, 1], vec![1, 1, 1])).unwrap();
        assert_eq!(
            s.to_rows(),
            vec![vec![1, 1, 0], vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]
        );
        let s = canonical_staircase(&MarginPair::new(vec![3, 0], vec![1, 1, 1])).unwrap();
        assert_eq!(s.to_rows(), vec![vec![1, 1, 1], vec![0, 0, 0]]);
        let s = canonical_staircase(&MarginPair::new(vec![1], vec![1])).unwrap();
        assert_eq!(s.to_rows(), vec![vec![1]]);
        // zero columns are skipped
        let s = canonical_staircase(&MarginPair::new(vec![1, 1], vec![0, 1, 0, 1])).unwrap();
        assert_eq!(s.to_rows(), vec![vec![0, 1, 0, 0], vec![0, 0, 0, 1]]);
        assert!(canonical_staircase(&MarginPair::new(vec![1], vec![2])).is_err());
    }

    #[test]
    fn gale_ryser_and_ryser_construction() {
        assert!(zero_one_class_nonempty(&[1, 1, 2], &[2, 1, 1]));
        assert!(!zero_one_class_nonempty(&[2, 0], &[2, 0]));
        assert!(!zero_one_class_nonempty(&[3], &[1, 1]));
        let r = [8, 7, 7, 5, 7, 7];
        let s = [6, 6, 5, 5, 5, 5, 5, 4];
        let a = ryser_realization(&r, &s).unwrap();
        assert_eq!(a.row_sums(), r.to_vec());
        assert_eq!(a.col_sums(), s.to_vec());
    }

    #[test]
    fn flow_realization_respects_forbidden_cells() {
        let a = realize_avoiding(&[1, 1], &[1, 1], |i, j| i == j).unwrap();
        assert_eq!(a.to_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert!(realize_avoiding(&[1], &[1], |_, _| true).is_none());
        let a = realize_avoiding(&[2, 1, 1], &[1, 2, 1], |_, _| false).unwrap();
        assert_eq!(a.row_sums(), vec![2, 1, 1]);
        assert_eq!(a.col_sums(), vec![1, 2, 1]);
    }

    #[test]
    fn flow_agrees_with_gale_ryser_on_small_margins() {
        for r0 in 0..=3i64 {
            for r1 in 0..=3 {
                for s0 in 0..=2i64 {
                    for s1 in 0..=2 {
                        for s2 in 0..=2 {
                            let (r, s) = ([r0, r1], [s0, s1, s2]);
                            assert_eq!(
                                realize_avoiding(&r, &s, |_, _| false).is_some(),
                                zero_one_class_nonempty(&r, &s),
                                "{r:?} {s:?}"
                            );
                            assert_eq!(
                                ryser_realization(&r, &s).is_some(),
                                zero_one_class_nonempty(&r, &s),
                                "{r:?} {s:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}
