//! Maximum number of nonzeros in an `m x n` SRM and a matrix attaining it.
//!
//! The extremal matrix is built column by column: the first column holds one
//! nonzero in the middle row, each following column widens that band by one
//! row above and below until a column spans all `m` rows, after which columns
//! alternate between `m - 1` nonzeros (rows `2..=m`) and `m` nonzeros. Inside
//! every column the nonzeros alternate `+1, -1, ...` from the top.

use crate::matrix::SignMatrix;
use crate::srm::Srm;

/// Index (1-based) of the first column holding `m` nonzeros: `⌈(m+1)/2⌉`.
fn full_column(m: usize) -> usize {
    (m + 1).div_ceil(2)
}

fn ceil_half(x: i64) -> i64 {
    x.div_euclid(2) + x.rem_euclid(2)
}

/// The closed-form count, evaluated verbatim for any `m, n >= 1`.
///
/// Only meaningful for `m >= 2` and `n >= ⌈(m+1)/2⌉ - 1`; see [`max_nonzeros`].
pub fn zeta_closed_form(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    if m % 2 == 0 {
        m * n - m * m / 4 - ceil_half(n - m / 2 - 1)
    } else {
        m * n - (m * m - 1) / 4 - ceil_half(n - (m + 1) / 2)
    }
}

/// Square case: `(3n²-n)/4` when `n ≡ 0, 3 (mod 4)`, else `(3n²-n+2)/4`.
pub fn zeta_square(n: usize) -> i64 {
    let n = n as i64;
    match n % 4 {
        0 | 3 => (3 * n * n - n) / 4,
        _ => (3 * n * n - n + 2) / 4,
    }
}

/// Maximum number of nonzeros over all `m x n` sign-restricted matrices.
///
/// * `m = 1`: every entry of a single row can be `1`, so the answer is `n`.
/// * `n < ⌈(m+1)/2⌉ - 1`: the widening band never reaches a full column and
///   the count is `1 + 3 + ... + (2n-1) = n²`.
/// * otherwise the closed form [`zeta_closed_form`] applies.
pub fn max_nonzeros(m: usize, n: usize) -> u64 {
    assert!(m >= 1 && n >= 1, "dimensions must be positive");
    if m == 1 {
        return n as u64;
    }
    if n + 1 < full_column(m) {
        return (n * n) as u64;
    }
    zeta_closed_form(m, n) as u64
}

/// Nonzero rows (1-based, inclusive) of column `j` (1-based) in the extremal matrix.
fn band(m: usize, j: usize) -> (usize, usize) {
    let k = full_column(m);
    let centre = m / 2 + 1;
    if j < k {
        (centre + 1 - j, (centre + j - 1).min(m))
    } else if (j - k).is_multiple_of(2) {
        (1, m)
    } else {
        (2, m)
    }
}

/// An `m x n` SRM with [`max_nonzeros`]`(m, n)` nonzeros.
pub fn extremal_srm(m: usize, n: usize) -> Srm {
    assert!(m >= 1 && n >= 1, "dimensions must be positive");
    let mut out = SignMatrix::zeros_unchecked(m, n);
    if m == 1 {
        for j in 0..n {
            out.set_unchecked(0, j, 1);
        }
        return Srm::new_unchecked(out);
    }
    for j in 1..=n {
        let (top, bottom) = band(m, j);
        for i in top..=bottom {
            let sign = if (i - top) % 2 == 0 { 1 } else { -1 };
            out.set_unchecked(i - 1, j - 1, sign);
        }
    }
    Srm::new_unchecked(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srm::is_srm;

    #[test]
    fn reported_values() {
        assert_eq!(max_nonzeros(6, 8), 37);
        assert_eq!(max_nonzeros(9, 11), 76);
        assert_eq!(max_nonzeros(4, 4), 11);
        assert_eq!(max_nonzeros(1, 5), 5);
        assert_eq!(zeta_closed_form(6, 8), 37);
        assert_eq!(zeta_closed_form(9, 11), 76);
    }

    #[test]
    fn closed_form_understates_single_row() {
        assert_eq!(zeta_closed_form(1, 2), 1);
        assert_eq!(max_nonzeros(1, 2), 2);
    }

    #[test]
    fn closed_form_fails_for_narrow_matrices() {
        // 5x1: the band never reaches a full column
        assert_eq!(zeta_closed_form(5, 1), 0);
        assert_eq!(max_nonzeros(5, 1), 1);
    }

    #[test]
    fn square_formula_matches_closed_form() {
        for n in 2..40 {
            assert_eq!(zeta_square(n), zeta_closed_form(n, n), "n={n}");
            assert_eq!(zeta_square(n), max_nonzeros(n, n) as i64);
        }
    }

    #[test]
    fn example_six_by_eight() {
        let a = extremal_srm(6, 8);
        let expected: [[i8; 8]; 6] = [
            [0, 0, 0, 1, 0, 1, 0, 1],
            [0, 0, 1, -1, 1, -1, 1, -1],
            [0, 1, -1, 1, -1, 1, -1, 1],
            [1, -1, 1, -1, 1, -1, 1, -1],
            [0, 1, -1, 1, -1, 1, -1, 1],
            [0, 0, 1, -1, 1, -1, 1, -1],
        ];
        assert_eq!(a.matrix(), &SignMatrix::from_rows(&expected).unwrap());
        assert_eq!(a.col_sums(), vec![1, 1, 1, 0, 1, 0, 1, 0]);
        assert_eq!(a.nonzeros(), 37);
    }

    #[test]
    fn example_nine_by_eleven() {
        let a = extremal_srm(9, 11);
        assert_eq!(a.nonzeros(), 76);
        assert_eq!(a.row(0), &[0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(a.row(4), &[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1]);
        assert_eq!(a.row(8), &[0, 0, 0, 0, 1, -1, 1, -1, 1, -1, 1]);
    }

    #[test]
    fn extremal_is_srm_with_max_count() {
        for m in 1..=14 {
            for n in 1..=14 {
                let a = extremal_srm(m, n);
                assert!(is_srm(&a), "{m}x{n}");
                assert_eq!(a.nonzeros() as u64, max_nonzeros(m, n), "{m}x{n}");
            }
        }
        assert_eq!(extremal_srm(1, 3).to_rows(), vec![vec![1, 1, 1]]);
        assert_eq!(extremal_srm(3, 3).nonzeros(), 6);
    }
}
