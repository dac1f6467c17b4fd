//! Sign-restricted matrices.
//!
//! A matrix is sign-restricted when every column prefix sum (from the top)
//! is 0 or 1 and every row prefix sum (from the left) is nonnegative.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{sum_matrix, SignMatrix, SumMatrix};

/// The first prefix constraint broken by a matrix. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Column prefix sum down to `row` left `{0, 1}`.
    ColumnPrefix { row: usize, col: usize, sum: i64 },
    /// Row prefix sum across to `col` went negative.
    RowPrefix { row: usize, col: usize, sum: i64 },
}

impl Violation {
    pub fn position(&self) -> (usize, usize) {
        match *self {
            Violation::ColumnPrefix { row, col, .. } | Violation::RowPrefix { row, col, .. } => (row, col),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::ColumnPrefix { row, col, sum } => {
                write!(f, "column {col} prefix sum {sum} at ({row},{col})")
            }
            Violation::RowPrefix { row, col, sum } => {
                write!(f, "row {row} prefix sum {sum} at ({row},{col})")
            }
        }
    }
}

/// A [`SignMatrix`] certified to be sign-restricted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Srm(SignMatrix);

impl Srm {
    pub fn matrix(&self) -> &SignMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> SignMatrix {
        self.0
    }

    /// `Σ(A)`.
    pub fn sum_matrix(&self) -> SumMatrix {
        sum_matrix(&self.0)
    }

    /// True when the matrix has no `-1` entry, i.e. it lies in `S⁺`.
    pub fn is_plus(&self) -> bool {
        self.0.is_nonnegative()
    }

    /// Largest row sum; a matrix is a c-SRM iff this is at most `c`.
    pub fn max_row_sum(&self) -> i64 {
        self.0.row_sums().into_iter().max().unwrap_or(0)
    }

    /// Used where the construction itself guarantees validity; checked in debug builds.
    pub(crate) fn new_unchecked(m: SignMatrix) -> Srm {
        debug_assert!(validate_srm(&m).is_ok(), "constructed matrix is not an SRM: {m:?}");
        Srm(m)
    }
}

impl Deref for Srm {
    type Target = SignMatrix;

    fn deref(&self) -> &SignMatrix {
        &self.0
    }
}

impl AsRef<SignMatrix> for Srm {
    fn as_ref(&self) -> &SignMatrix {
        &self.0
    }
}

impl TryFrom<SignMatrix> for Srm {
    type Error = Error;

    fn try_from(m: SignMatrix) -> Result<Srm> {
        validate_srm(&m).map_err(Error::NotSrm)
    }
}

impl fmt::Display for Srm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Srm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Srm{:?}", self.0.to_rows())
    }
}

/// Checks both prefix families, scanning positions in row-major order.
///
/// At a single position the column constraint is reported before the row
/// constraint.
pub fn validate_srm(m: &SignMatrix) -> std::result::Result<Srm, Violation> {
    first_violation(m).map_or_else(|| Ok(Srm(m.clone())), Err)
}

pub fn is_srm(m: &SignMatrix) -> bool {
    first_violation(m).is_none()
}

fn first_violation(m: &SignMatrix) -> Option<Violation> {
    let (rows, cols) = m.shape();
    let mut col_prefix = vec![0i64; cols];
    for i in 0..rows {
        let mut row_prefix = 0i64;
        for (j, cp) in col_prefix.iter_mut().enumerate() {
            let v = i64::from(m.get(i, j));
            *cp += v;
            row_prefix += v;
            if !(0..=1).contains(cp) {
                return Some(Violation::ColumnPrefix {
                    row: i + 1,
                    col: j + 1,
                    sum: *cp,
                });
            }
            if row_prefix < 0 {
                return Some(Violation::RowPrefix {
                    row: i + 1,
                    col: j + 1,
                    sum: row_prefix,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(rows: &[&[i8]]) -> SignMatrix {
        SignMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn accepts_small_srms() {
        assert!(validate_srm(&sm(&[&[0, 1], &[1, -1]])).is_ok());
        assert!(validate_srm(&SignMatrix::zeros(3, 3).unwrap()).is_ok());
        for m in [
            sm(&[&[0, 1, 1], &[1, -1, 0], &[0, 1, -1]]),
            sm(&[&[0, 1, 0, 1], &[1, -1, 1, -1], &[0, 1, -1, 1]]),
            sm(&[&[0, 1, 1], &[1, -1, 0], &[0, 1, -1], &[0, 0, 1]]),
        ] {
            assert!(is_srm(&m), "{m:?}");
        }
    }

    #[test]
    fn transpose_of_srm_can_fail() {
        let m = sm(&[&[0, 1, 0], &[1, -1, 1], &[1, 0, -1]]);
        assert_eq!(
            validate_srm(&m),
            Err(Violation::ColumnPrefix { row: 3, col: 1, sum: 2 })
        );
    }

    #[test]
    fn single_minus_one_reports_column_first() {
        let v = validate_srm(&sm(&[&[-1]])).unwrap_err();
        assert_eq!(v, Violation::ColumnPrefix { row: 1, col: 1, sum: -1 });
        assert_eq!(v.to_string(), "column 1 prefix sum -1 at (1,1)");
    }

    #[test]
    fn row_prefix_violation() {
        // column prefixes fine, row 2 starts with -1
        let m = sm(&[&[0, 1], &[-1, 0]]);
        assert_eq!(
            validate_srm(&m),
            Err(Violation::ColumnPrefix { row: 2, col: 1, sum: -1 })
        );
        let m = sm(&[&[1, 1, 0], &[0, -1, 1]]);
        assert_eq!(validate_srm(&m), Err(Violation::RowPrefix { row: 2, col: 2, sum: -1 }));
    }
}
