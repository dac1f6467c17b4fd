//! Dense matrix carriers.
//!
//! [`SignMatrix`] holds entries in `{-1, 0, 1}` and is the type every other
//! module works with. [`IntMatrix`] holds arbitrary integers; it is used for
//! sum-matrices, margins arithmetic and the intermediate padded matrices of the
//! decomposition routines.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `m x n` matrix with entries in `{-1, 0, 1}`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct SignMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i8>,
}

/// Serialized form shared by the JSON reader and writer.
#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for SignMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        if raw.entries.len() != raw.rows {
            return Err(Error::EntryCount {
                rows: raw.rows,
                cols: raw.cols,
                expected: raw.rows * raw.cols,
                got: raw.entries.iter().map(Vec::len).sum(),
            });
        }
        let mut flat = Vec::with_capacity(raw.rows * raw.cols);
        for row in &raw.entries {
            if row.len() != raw.cols {
                return Err(Error::EntryCount {
                    rows: raw.rows,
                    cols: raw.cols,
                    expected: raw.rows * raw.cols,
                    got: raw.entries.iter().map(Vec::len).sum(),
                });
            }
            flat.extend_from_slice(row);
        }
        SignMatrix::from_i64(raw.rows, raw.cols, &flat)
    }
}

impl From<SignMatrix> for RawMatrix {
    fn from(m: SignMatrix) -> Self {
        RawMatrix {
            rows: m.rows,
            cols: m.cols,
            entries: m.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect(),
        }
    }
}

fn check_shape(rows: usize, cols: usize, len: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyShape { rows, cols });
    }
    if len != rows * cols {
        return Err(Error::EntryCount {
            rows,
            cols,
            expected: rows * cols,
            got: len,
        });
    }
    Ok(())
}

impl SignMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i8>) -> Result<Self> {
        check_shape(rows, cols, data.len())?;
        if let Some(pos) = data.iter().position(|v| !(-1..=1).contains(v)) {
            return Err(Error::EntryOutOfRange {
                row: pos / cols + 1,
                col: pos % cols + 1,
                value: i64::from(data[pos]),
            });
        }
        Ok(SignMatrix { rows, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        check_shape(rows, cols, data.len())?;
        let mut out = Vec::with_capacity(data.len());
        for (pos, &v) in data.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::EntryOutOfRange {
                    row: pos / cols + 1,
                    col: pos % cols + 1,
                    value: v,
                });
            }
            out.push(v as i8);
        }
        Ok(SignMatrix { rows, cols, data: out })
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(m * n);
        for r in rows {
            if r.as_ref().len() != n {
                return Err(Error::EntryCount {
                    rows: m,
                    cols: n,
                    expected: m * n,
                    got: rows.iter().map(|r| r.as_ref().len()).sum(),
                });
            }
            data.extend_from_slice(r.as_ref());
        }
        SignMatrix::new(m, n, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        SignMatrix::new(rows, cols, vec![0; rows * cols])
    }

    pub(crate) fn zeros_unchecked(rows: usize, cols: usize) -> Self {
        SignMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub(crate) fn from_data_unchecked(rows: usize, cols: usize, data: Vec<i8>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        SignMatrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entry at 0-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.data[i * self.cols + j]
    }

    /// Sets the 0-based entry `(i, j)`; the value must lie in `{-1, 0, 1}`.
    pub fn set(&mut self, i: usize, j: usize, value: i8) -> Result<()> {
        if !(-1..=1).contains(&value) {
            return Err(Error::EntryOutOfRange {
                row: i + 1,
                col: j + 1,
                value: i64::from(value),
            });
        }
        self.data[i * self.cols + j] = value;
        Ok(())
    }

    pub(crate) fn set_unchecked(&mut self, i: usize, j: usize, value: i8) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[i8] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries in column-major order; enumeration order is lexicographic in this key.
    pub fn column_major_key(&self) -> Vec<i8> {
        let mut key = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                key.push(self.get(i, j));
            }
        }
        key
    }

    pub fn count(&self, value: i8) -> usize {
        self.data.iter().filter(|&&v| v == value).count()
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&v| v >= 0)
    }

    /// First `-1` in row-major order, 0-based.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&v| v < 0)
            .map(|p| (p / self.cols, p % self.cols))
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| i64::from(v)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.cols];
        for i in 0..self.rows {
            for (j, s) in sums.iter_mut().enumerate() {
                *s += i64::from(self.get(i, j));
            }
        }
        sums
    }

    pub fn transpose(&self) -> SignMatrix {
        let mut out = SignMatrix::zeros_unchecked(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set_unchecked(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| i64::from(v)).collect(),
        }
    }

    /// Leading `rows x cols` submatrix.
    pub fn leading(&self, rows: usize, cols: usize) -> Result<SignMatrix> {
        if rows == 0 || cols == 0 || rows > self.rows || cols > self.cols {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rows,
                right_cols: cols,
            });
        }
        let mut out = SignMatrix::zeros_unchecked(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set_unchecked(i, j, self.get(i, j));
            }
        }
        Ok(out)
    }

    pub(crate) fn ensure_same_shape(&self, other: &SignMatrix) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(())
    }

    /// Row-major entries joined by commas, rows separated by semicolons.
    pub fn flat_label(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Canonical text form: header line `m n`, then one line per row.
impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line = self
                .row(i)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignMatrix{:?}", self.to_rows())
    }
}

/// A dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

/// The sum-matrix of a matrix: entry `(i, j)` is the total of the leading
/// `i x j` submatrix.
pub type SumMatrix = IntMatrix;

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        check_shape(rows, cols, data.len())?;
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(m * n);
        for r in rows {
            if r.as_ref().len() != n {
                return Err(Error::EntryCount {
                    rows: m,
                    cols: n,
                    expected: m * n,
                    got: rows.iter().map(|r| r.as_ref().len()).sum(),
                });
            }
            data.extend_from_slice(r.as_ref());
        }
        IntMatrix::new(m, n, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    /// Entry with a phantom zero row and column: `at(i, j)` is `(i-1, j-1)`
    /// for `i, j >= 1` and 0 when either index is 0.
    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j == 0 {
            0
        } else {
            self.get(i - 1, j - 1)
        }
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn total(&self) -> i64 {
        self.data.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.cols];
        for i in 0..self.rows {
            for (j, s) in sums.iter_mut().enumerate() {
                *s += self.get(i, j);
            }
        }
        sums
    }

    /// Converts to a sign matrix when every entry lies in `{-1, 0, 1}`.
    pub fn to_sign(&self) -> Result<SignMatrix> {
        SignMatrix::from_i64(self.rows, self.cols, &self.data)
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &IntMatrix) -> bool {
        self.shape() == other.shape() && self.data.iter().zip(&other.data).all(|(a, b)| a >= b)
    }

    pub fn entrywise_max(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, i64::max)
    }

    pub fn entrywise_min(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, i64::min)
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(i64, i64) -> i64) -> Result<IntMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line = self
                .row(i)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

/// Sum-matrix of an arbitrary integer matrix.
pub fn sum_matrix_of(a: &IntMatrix) -> SumMatrix {
    let (m, n) = a.shape();
    let mut s = IntMatrix::zeros(m, n);
    for i in 0..m {
        let mut row_prefix = 0;
        for j in 0..n {
            row_prefix += a.get(i, j);
            let above = if i > 0 { s.get(i - 1, j) } else { 0 };
            s.set(i, j, above + row_prefix);
        }
    }
    s
}

/// Sum-matrix `Σ(M)` of a sign matrix.
pub fn sum_matrix(m: &SignMatrix) -> SumMatrix {
    sum_matrix_of(&m.to_int())
}

/// Inverse of the sum-matrix map by second-order finite differences:
/// `a_ij = s_ij - s_{i-1,j} - s_{i,j-1} + s_{i-1,j-1}`.
///
/// Works on all integer matrices; the result may fall outside `{-1,0,1}`.
pub fn inverse_sum_matrix(s: &IntMatrix) -> IntMatrix {
    let (m, n) = s.shape();
    let mut a = IntMatrix::zeros(m, n);
    for i in 1..=m {
        for j in 1..=n {
            let v = s.at(i, j) - s.at(i - 1, j) - s.at(i, j - 1) + s.at(i - 1, j - 1);
            a.set(i - 1, j - 1, v);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(rows: &[&[i8]]) -> SignMatrix {
        SignMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn rejects_out_of_range_and_empty() {
        assert!(matches!(
            SignMatrix::new(1, 2, vec![0, 2]),
            Err(Error::EntryOutOfRange { row: 1, col: 2, value: 2 })
        ));
        assert!(matches!(SignMatrix::new(0, 2, vec![]), Err(Error::EmptyShape { .. })));
        assert!(SignMatrix::from_rows(&[vec![1i8, 0], vec![1]]).is_err());
    }

    #[test]
    fn sum_matrix_of_small_examples() {
        let p = sm(&[&[0, 1], &[1, -1]]);
        assert_eq!(sum_matrix(&p).to_rows(), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(sum_matrix(&SignMatrix::zeros(3, 4).unwrap()), IntMatrix::zeros(3, 4));
        let f = sm(&[&[1, 0], &[0, 1]]);
        assert_eq!(sum_matrix(&f).to_rows(), vec![vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn inverse_sum_matrix_examples() {
        let s = IntMatrix::from_rows(&[[0i64, 1], [1, 1]]).unwrap();
        assert_eq!(inverse_sum_matrix(&s).to_rows(), vec![vec![0, 1], vec![1, -1]]);
        let s = IntMatrix::from_rows(&[[1i64, 1], [1, 2]]).unwrap();
        assert_eq!(inverse_sum_matrix(&s).to_rows(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn example_six_by_six_sum_matrix() {
        let a = sm(&[
            &[0, 1, 0, 1, 1, 0],
            &[0, 0, 1, -1, 0, 1],
            &[1, 0, -1, 1, 0, -1],
            &[0, 0, 1, 0, -1, 1],
            &[0, 0, 0, 0, 1, -1],
            &[0, 0, 0, 0, 0, 1],
        ]);
        let expected = IntMatrix::from_rows(&[
            [0i64, 1, 1, 2, 3, 3],
            [0, 1, 2, 2, 3, 4],
            [1, 2, 2, 3, 4, 4],
            [1, 2, 3, 4, 4, 5],
            [1, 2, 3, 4, 5, 5],
            [1, 2, 3, 4, 5, 6],
        ])
        .unwrap();
        assert_eq!(sum_matrix(&a), expected);
    }

    #[test]
    fn text_display_is_canonical() {
        let p = sm(&[&[0, 1], &[1, -1]]);
        assert_eq!(p.to_string(), "2 2\n0 1\n1 -1\n");
        assert_eq!(p.flat_label(), "0,1;1,-1");
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let p = sm(&[&[0, 1], &[1, -1]]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"rows":2,"cols":2,"entries":[[0,1],[1,-1]]}"#);
        let back: SignMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SignMatrix>(r#"{"rows":1,"cols":1,"entries":[[3]]}"#).is_err());
        assert!(serde_json::from_str::<SignMatrix>(r#"{"rows":2,"cols":1,"entries":[[1]]}"#).is_err());
    }

    #[test]
    fn column_major_key_order() {
        let m = sm(&[&[1, 0], &[0, -1]]);
        assert_eq!(m.column_major_key(), vec![1, 0, 0, -1]);
    }
}
