//! Multichains `∅ = X_0 ⊆ X_1 ⊆ ... ⊆ X_m` of subsets of `{1, ..., n}` and
//! their bijection with the (0,1)-SRMs of size `m x n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SignMatrix;
use crate::srm::Srm;

pub const MAX_CHAIN_WIDTH: usize = 63;

/// Subsets are bitsets: bit `j` set means column `j + 1` belongs to the set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multichain {
    width: usize,
    subsets: Vec<u64>,
}

impl Multichain {
    /// Validates monotonicity `X_i ⊆ X_{i+1}` and the width bound.
    pub fn new(width: usize, subsets: Vec<u64>) -> Result<Self> {
        if width == 0 || subsets.is_empty() {
            return Err(Error::EmptyShape {
                rows: subsets.len(),
                cols: width,
            });
        }
        if width > MAX_CHAIN_WIDTH {
            return Err(Error::ChainTooWide(width));
        }
        let universe = (1u64 << width) - 1;
        for (i, &x) in subsets.iter().enumerate() {
            if x & !universe != 0 {
                return Err(Error::Precondition(format!(
                    "subset {} mentions columns beyond {width}",
                    i + 1
                )));
            }
            if i > 0 && subsets[i - 1] & !x != 0 {
                return Err(Error::NonMonotoneChain { index: i + 1 });
            }
        }
        Ok(Multichain { width, subsets })
    }

    /// Builds a chain from 1-based column lists.
    pub fn from_sets(width: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut subsets = Vec::with_capacity(sets.len());
        for set in sets {
            let mut bits = 0u64;
            for &c in set {
                if c == 0 || c > width {
                    return Err(Error::Precondition(format!("column {c} outside 1..={width}")));
                }
                bits |= 1 << (c - 1);
            }
            subsets.push(bits);
        }
        Multichain::new(width, subsets)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[u64] {
        &self.subsets
    }

    /// `X_i` (1-based) as sorted 1-based column indices.
    pub fn set(&self, i: usize) -> Vec<usize> {
        let bits = self.subsets[i - 1];
        (0..self.width).filter(|j| bits >> j & 1 == 1).map(|j| j + 1).collect()
    }

    /// `X_i` as a (0,1) indicator vector.
    pub fn indicator(&self, i: usize) -> Vec<u8> {
        let bits = self.subsets[i - 1];
        (0..self.width).map(|j| (bits >> j & 1) as u8).collect()
    }
}

impl fmt::Display for Multichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∅")?;
        for i in 1..=self.len() {
            let set = self.set(i);
            if set.is_empty() {
                write!(f, " ⊆ ∅")?;
            } else {
                let items: Vec<String> = set.iter().map(|c| c.to_string()).collect();
                write!(f, " ⊆ {{{}}}", items.join(","))?;
            }
        }
        Ok(())
    }
}

/// `X_i` collects the columns whose single 1 sits in rows `1..=i`.
pub fn multichain_of(a: &Srm) -> Result<Multichain> {
    if let Some((row, col)) = a.first_negative() {
        return Err(Error::HasNegativeEntry { row: row + 1, col: col + 1 });
    }
    if a.cols() > MAX_CHAIN_WIDTH {
        return Err(Error::ChainTooWide(a.cols()));
    }
    let mut acc = 0u64;
    let mut subsets = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        for (j, &v) in a.row(i).iter().enumerate() {
            if v == 1 {
                acc |= 1 << j;
            }
        }
        subsets.push(acc);
    }
    Ok(Multichain {
        width: a.cols(),
        subsets,
    })
}

/// Row `i` is the indicator of `X_i \ X_{i-1}`.
pub fn srm_of_multichain(c: &Multichain) -> Srm {
    let mut out = SignMatrix::zeros_unchecked(c.len(), c.width());
    let mut prev = 0u64;
    for (i, &x) in c.subsets().iter().enumerate() {
        let fresh = x & !prev;
        for j in 0..c.width() {
            if fresh >> j & 1 == 1 {
                out.set_unchecked(i, j, 1);
            }
        }
        prev = x;
    }
    Srm::new_unchecked(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srm::validate_srm;

    fn srm(rows: &[&[i8]]) -> Srm {
        validate_srm(&SignMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn four_by_six_example() {
        let a = srm(&[
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[1, 0, 0, 1, 0, 1],
        ]);
        let c = multichain_of(&a).unwrap();
        let expected = Multichain::from_sets(
            6,
            &[vec![2, 5], vec![2, 3, 5], vec![2, 3, 5], vec![1, 2, 3, 4, 5, 6]],
        )
        .unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.indicator(2), vec![0, 1, 1, 0, 1, 0]);
        assert_eq!(srm_of_multichain(&expected), a);
    }

    #[test]
    fn permutation_gives_saturated_chain() {
        // permutation (3,1,4,2): row i has its 1 in column π(i)
        let a = srm(&[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]]);
        let c = multichain_of(&a).unwrap();
        assert_eq!(c.set(1), vec![3]);
        assert_eq!(c.set(2), vec![1, 3]);
        assert_eq!(c.set(3), vec![1, 3, 4]);
        assert_eq!(c.set(4), vec![1, 2, 3, 4]);
        assert_eq!(c.to_string(), "∅ ⊆ {3} ⊆ {1,3} ⊆ {1,3,4} ⊆ {1,2,3,4}");
    }

    #[test]
    fn zero_matrix_and_empty_chain() {
        let z = srm(&[&[0, 0], &[0, 0], &[0, 0]]);
        let c = multichain_of(&z).unwrap();
        assert!(c.subsets().iter().all(|&x| x == 0));
        assert_eq!(srm_of_multichain(&Multichain::new(2, vec![0, 0, 0]).unwrap()), z);
    }

    #[test]
    fn rejects_minus_one_and_non_monotone() {
        let p = srm(&[&[0, 1], &[1, -1]]);
        assert!(matches!(multichain_of(&p), Err(Error::HasNegativeEntry { row: 2, col: 2 })));
        assert!(matches!(
            Multichain::new(3, vec![0b011, 0b001]),
            Err(Error::NonMonotoneChain { index: 2 })
        ));
    }
}
