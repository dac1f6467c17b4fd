//! Signed subpermutation decompositions of SRMs and disjoint joint
//! realizations of (0,1)-matrix classes.

use std::fmt;

use serde::Serialize;

use crate::enumerate::{enumerate_zero_one_class_capped, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::interchange::Sign;
use crate::margins::{realize_avoiding, zero_one_class_nonempty, MarginPair};
use crate::matrix::SignMatrix;
use crate::srm::Srm;

/// Perfect matching in the bipartite graph on `n + n` vertices with an edge
/// `(i, j)` whenever `edge(i, j)`. Rows are processed in index order and
/// columns tried in index order. Returns `row -> column`.
pub fn perfect_matching(n: usize, edge: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    fn augment(
        i: usize,
        n: usize,
        edge: &impl Fn(usize, usize) -> bool,
        seen: &mut [bool],
        col_owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..n {
            if edge(i, j) && !seen[j] {
                seen[j] = true;
                if col_owner[j].is_none_or(|k| augment(k, n, edge, seen, col_owner)) {
                    col_owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut col_owner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, n, &edge, &mut seen, &mut col_owner) {
            return None;
        }
    }
    let mut out = vec![0; n];
    for (j, owner) in col_owner.iter().enumerate() {
        out[owner.expect("perfect")] = j;
    }
    Some(out)
}

/// At most one 1 in each row and column, all other entries 0.
pub fn is_subpermutation(p: &SignMatrix) -> bool {
    p.as_slice().iter().all(|&v| v == 0 || v == 1)
        && p.row_sums().iter().all(|&r| r <= 1)
        && p.col_sums().iter().all(|&s| s <= 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedTerm {
    pub sign: Sign,
    pub matrix: SignMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedDecomposition {
    pub terms: Vec<SignedTerm>,
}

impl SignedDecomposition {
    /// `Σ λ_i P_i` as an integer array, row-major.
    pub fn reconstruct(&self, rows: usize, cols: usize) -> Vec<i64> {
        let mut out = vec![0i64; rows * cols];
        for t in &self.terms {
            for (o, &v) in out.iter_mut().zip(t.matrix.as_slice()) {
                *o += i64::from(t.sign.value()) * i64::from(v);
            }
        }
        out
    }

    /// Reconstruction, pairwise disjoint supports, subpermutation shape.
    pub fn verify(&self, a: &SignMatrix) -> Result<()> {
        let (m, n) = a.shape();
        for (k, t) in self.terms.iter().enumerate() {
            if t.matrix.shape() != (m, n) {
                return Err(Error::Internal(format!("term {} has the wrong shape", k + 1)));
            }
            if !is_subpermutation(&t.matrix) {
                return Err(Error::Internal(format!("term {} is not a subpermutation matrix", k + 1)));
            }
        }
        let mut cover = vec![0u32; m * n];
        for t in &self.terms {
            for (c, &v) in cover.iter_mut().zip(t.matrix.as_slice()) {
                *c += u32::from(v == 1);
            }
        }
        if cover.iter().any(|&c| c > 1) {
            return Err(Error::Internal("terms overlap".into()));
        }
        let target: Vec<i64> = a.as_slice().iter().map(|&v| v.into()).collect();
        if self.reconstruct(m, n) != target {
            return Err(Error::Internal("terms do not sum to the matrix".into()));
        }
        Ok(())
    }
}

impl fmt::Display for SignedDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            let s = match t.sign {
                Sign::Plus => "+1",
                Sign::Minus => "-1",
            };
            writeln!(f, "{s}")?;
            write!(f, "{}", t.matrix)?;
        }
        Ok(())
    }
}

/// Pads `a` to a square matrix with every column sum 1: a last row under the
/// zero columns if any, then zero rows at the bottom or unit columns at the
/// right (each placed in the row with the smallest current sum).
fn square_up(a: &SignMatrix) -> Vec<Vec<i64>> {
    let (m, n) = a.shape();
    let mut rows: Vec<Vec<i64>> = (0..m).map(|i| a.row(i).iter().map(|&v| v.into()).collect()).collect();
    let sums = a.col_sums();
    if sums.contains(&0) {
        rows.push(sums.iter().map(|&s| i64::from(s == 0)).collect());
    }
    while rows.len() < n {
        rows.push(vec![0; n]);
    }
    let size = rows.len();
    while rows[0].len() < size {
        let target = (0..size)
            .min_by_key(|&i| (rows[i].iter().sum::<i64>(), i))
            .expect("nonempty");
        for (i, row) in rows.iter_mut().enumerate() {
            row.push(i64::from(i == target));
        }
    }
    rows
}

/// The block matrix `[[A, A1], [A2, A3]]` of size `Np`, all line sums `p`.
fn regular_extension(sq: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = sq.len();
    let r: Vec<i64> = sq.iter().map(|row| row.iter().sum()).collect();
    let p = *r.iter().max().expect("nonempty");
    let size = n * p as usize;
    let extra = size - n;
    let mut b = vec![vec![0i64; size]; size];
    for i in 0..n {
        b[i][..n].copy_from_slice(&sq[i]);
    }
    // A1: one 1 per column, row i receives p - r_i of them, going down the rows
    let mut col = n;
    for i in 0..n {
        for _ in 0..(p - r[i]) {
            b[i][col] = 1;
            col += 1;
        }
    }
    for k in 0..extra {
        // A2: row k of the lower block has its 1 in column k mod n
        b[n + k][k % n] = 1;
        // A3: circulant with p - 1 ones per line
        for s in 0..(p as usize - 1) {
            b[n + k][n + (k + s) % extra] = 1;
        }
    }
    (b, p)
}

/// Signed permutation terms restricted to `a`, not necessarily disjoint.
///
/// `B + J` has every line sum `p + Np`, so it splits into that many
/// permutation matrices by repeated perfect matching; subtracting the `Np`
/// cyclic shifts that make up `J` and keeping the leading `m x n` block
/// gives `a`.
pub fn signed_permutation_terms(a: &Srm) -> Result<Vec<SignedTerm>> {
    let (m, n) = a.shape();
    let (b, p) = regular_extension(&square_up(a));
    let size = b.len();
    let mut w: Vec<Vec<i64>> = b.iter().map(|row| row.iter().map(|v| v + 1).collect()).collect();
    let restrict = |perm: &dyn Fn(usize) -> usize| {
        let mut out = SignMatrix::zeros_unchecked(m, n);
        for i in 0..m {
            let j = perm(i);
            if j < n {
                out.set_unchecked(i, j, 1);
            }
        }
        out
    };
    let mut terms = Vec::new();
    for _ in 0..(p as usize + size) {
        let perm = perfect_matching(size, |i, j| w[i][j] > 0)
            .ok_or_else(|| Error::Internal("regular matrix without a perfect matching".into()))?;
        for (i, &j) in perm.iter().enumerate() {
            w[i][j] -= 1;
        }
        terms.push(SignedTerm {
            sign: Sign::Plus,
            matrix: restrict(&|i| perm[i]),
        });
    }
    if w.iter().flatten().any(|&v| v != 0) {
        return Err(Error::Internal("matchings did not exhaust B + J".into()));
    }
    for s in 0..size {
        terms.push(SignedTerm {
            sign: Sign::Minus,
            matrix: restrict(&|i| (i + s) % size),
        });
    }
    Ok(terms)
}

/// Disjoint subpermutation matrices `P_i` and signs with `a = Σ λ_i P_i`.
///
/// Starts from [`signed_permutation_terms`]; each +1 of `a` is kept only in
/// the first positive term containing it and each -1 only in the first
/// negative term containing it, so the supports become disjoint.
pub fn signed_subperm_decomposition(a: &Srm) -> Result<SignedDecomposition> {
    let raw = signed_permutation_terms(a)?;
    let (m, n) = a.shape();
    let mut terms: Vec<SignedTerm> = raw
        .iter()
        .map(|t| SignedTerm {
            sign: t.sign,
            matrix: SignMatrix::zeros_unchecked(m, n),
        })
        .collect();
    for i in 0..m {
        for j in 0..n {
            let v = a.get(i, j);
            if v == 0 {
                continue;
            }
            let k = raw
                .iter()
                .position(|t| t.sign.value() == v && t.matrix.get(i, j) == 1)
                .ok_or_else(|| Error::Internal(format!("entry ({},{}) is in no term of its sign", i + 1, j + 1)))?;
            terms[k].matrix.set_unchecked(i, j, 1);
        }
    }
    terms.retain(|t| t.matrix.nonzeros() > 0);
    let out = SignedDecomposition { terms };
    out.verify(a)?;
    Ok(out)
}

/// `A = A1 - A2` with `A1`, `A2` the (0,1) positive and negative parts.
pub fn split_pm(a: &SignMatrix) -> (SignMatrix, SignMatrix) {
    let (m, n) = a.shape();
    let pos = a.as_slice().iter().map(|&v| i8::from(v == 1)).collect();
    let neg = a.as_slice().iter().map(|&v| i8::from(v == -1)).collect();
    (
        SignMatrix::from_data_unchecked(m, n, pos),
        SignMatrix::from_data_unchecked(m, n, neg),
    )
}

/// Two (0,1)-matrices with no common 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointRealization {
    pub b1: SignMatrix,
    pub b2: SignMatrix,
}

impl JointRealization {
    pub fn union(&self) -> SignMatrix {
        let data = self.b1.as_slice().iter().zip(self.b2.as_slice()).map(|(x, y)| x + y).collect();
        SignMatrix::from_data_unchecked(self.b1.rows(), self.b1.cols(), data)
    }

    pub fn difference(&self) -> SignMatrix {
        let data = self.b1.as_slice().iter().zip(self.b2.as_slice()).map(|(x, y)| x - y).collect();
        SignMatrix::from_data_unchecked(self.b1.rows(), self.b1.cols(), data)
    }

    pub fn is_valid(&self, m1: &MarginPair, m2: &MarginPair) -> bool {
        let zero_one = |b: &SignMatrix| b.as_slice().iter().all(|&v| v == 0 || v == 1);
        zero_one(&self.b1)
            && zero_one(&self.b2)
            && self.b1.as_slice().iter().zip(self.b2.as_slice()).all(|(x, y)| x * y == 0)
            && m1.matches(&self.b1)
            && m2.matches(&self.b2)
    }
}

impl fmt::Display for JointRealization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.b1, self.b2)
    }
}

fn check_margins(vs: &[&[i64]]) -> Result<()> {
    if vs.iter().flat_map(|v| v.iter()).any(|&x| x < 0) {
        return Err(Error::Precondition("margins must be nonnegative".into()));
    }
    Ok(())
}

/// A disjoint pair `B1 ∈ A(R1,S1)`, `B2 ∈ A(R2,S2)`, if any. Every member of
/// the first class is tried and the second is completed on the complement of
/// its support by max-flow.
pub fn find_joint_realization(r1: &[i64], s1: &[i64], r2: &[i64], s2: &[i64]) -> Result<Option<JointRealization>> {
    find_joint_realization_capped(r1, s1, r2, s2, DEFAULT_MAX_CELLS)
}

pub fn find_joint_realization_capped(
    r1: &[i64],
    s1: &[i64],
    r2: &[i64],
    s2: &[i64],
    max_cells: usize,
) -> Result<Option<JointRealization>> {
    check_margins(&[r1, s1, r2, s2])?;
    if r1.len() != r2.len() || s1.len() != s2.len() {
        return Err(Error::MarginMismatch("the two margin pairs describe different shapes".into()));
    }
    if !zero_one_class_nonempty(r1, s1) || !zero_one_class_nonempty(r2, s2) {
        return Ok(None);
    }
    let first = MarginPair::new(r1.to_vec(), s1.to_vec());
    for b1 in enumerate_zero_one_class_capped(&first, max_cells)? {
        if let Some(b2) = realize_avoiding(r2, s2, |i, j| b1.get(i, j) == 1) {
            return Ok(Some(JointRealization { b1, b2 }));
        }
    }
    Ok(None)
}

/// Same question answered by enumerating both classes.
pub fn find_joint_realization_exhaustive(
    r1: &[i64],
    s1: &[i64],
    r2: &[i64],
    s2: &[i64],
    max_cells: usize,
) -> Result<Option<JointRealization>> {
    check_margins(&[r1, s1, r2, s2])?;
    let second: Vec<SignMatrix> =
        enumerate_zero_one_class_capped(&MarginPair::new(r2.to_vec(), s2.to_vec()), max_cells)?.collect();
    for b1 in enumerate_zero_one_class_capped(&MarginPair::new(r1.to_vec(), s1.to_vec()), max_cells)? {
        for b2 in &second {
            if b1.as_slice().iter().zip(b2.as_slice()).all(|(x, y)| x * y == 0) {
                return Ok(Some(JointRealization { b1, b2: b2.clone() }));
            }
        }
    }
    Ok(None)
}

/// With `R1` taking only the values `k` and `k + 1`: are `A(R,S)` and
/// `A(R - R1, S - S1)` both nonempty? Under that hypothesis this decides
/// whether `A(R,S)` has an `(R1,S1; R-R1,S-S1)` joint realization.
pub fn check_anstee_condition(r: &[i64], r1: &[i64], s: &[i64], s1: &[i64]) -> Result<bool> {
    check_margins(&[r, r1, s, s1])?;
    if r.len() != r1.len() || s.len() != s1.len() {
        return Err(Error::MarginMismatch("R1 or S1 has the wrong length".into()));
    }
    let lo = r1.iter().min().copied().unwrap_or(0);
    let hi = r1.iter().max().copied().unwrap_or(0);
    if hi > lo + 1 {
        return Err(Error::Hypothesis(format!("R1 spans {lo}..={hi}, not two consecutive values")));
    }
    let r2: Vec<i64> = r.iter().zip(r1).map(|(a, b)| a - b).collect();
    let s2: Vec<i64> = s.iter().zip(s1).map(|(a, b)| a - b).collect();
    if r2.iter().chain(&s2).any(|&x| x < 0) {
        return Err(Error::Precondition("R - R1 or S - S1 has a negative entry".into()));
    }
    Ok(zero_one_class_nonempty(r, s) && zero_one_class_nonempty(&r2, &s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srm::validate_srm;

    fn srm<R: AsRef<[i8]>>(rows: &[R]) -> Srm {
        validate_srm(&SignMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn decomposes_p_and_subpermutations() {
        let p = srm(&[[0, 1], [1, -1]]);
        let d = signed_subperm_decomposition(&p).unwrap();
        d.verify(&p).unwrap();
        assert!(d.terms.iter().any(|t| t.sign == Sign::Minus));
        let id = srm(&[[1, 0], [0, 1]]);
        let d = signed_subperm_decomposition(&id).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].sign, Sign::Plus);
        assert_eq!(&d.terms[0].matrix, id.matrix());
    }

    #[test]
    fn raw_terms_reconstruct() {
        let a = srm(&[[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, -1, 1]]);
        let raw = SignedDecomposition {
            terms: signed_permutation_terms(&a).unwrap(),
        };
        let target: Vec<i64> = a.as_slice().iter().map(|&v| v.into()).collect();
        assert_eq!(raw.reconstruct(3, 4), target);
        signed_subperm_decomposition(&a).unwrap();
    }

    #[test]
    fn tall_and_zero_inputs() {
        let tall = srm(&[[1], [0], [0], [0]]);
        signed_subperm_decomposition(&tall).unwrap();
        let zero = srm(&[[0, 0], [0, 0]]);
        assert!(signed_subperm_decomposition(&zero).unwrap().terms.is_empty());
    }

    #[test]
    fn split_examples() {
        let a = SignMatrix::from_rows(&[[1, 1], [1, -1]]).unwrap();
        let (p, n) = split_pm(&a);
        assert_eq!(p.to_rows(), vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(n.to_rows(), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn joint_examples() {
        let j = find_joint_realization(&[1, 1], &[1, 1], &[1, 0], &[0, 1]).unwrap().unwrap();
        assert_eq!(j.b1.to_rows(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(j.b2.to_rows(), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(j.union().to_rows(), vec![vec![1, 1], vec![0, 1]]);
        assert!(find_joint_realization(&[1], &[1], &[1], &[1]).unwrap().is_none());
        let z = find_joint_realization(&[1, 0], &[0, 1], &[0, 0], &[0, 0]).unwrap().unwrap();
        assert_eq!(z.b2.nonzeros(), 0);
    }

    #[test]
    fn anstee_hypothesis() {
        assert!(matches!(
            check_anstee_condition(&[2, 2], &[0, 2], &[2, 2], &[1, 1]),
            Err(Error::Hypothesis(_))
        ));
        assert!(check_anstee_condition(&[2, 2], &[1, 1], &[2, 2], &[1, 1]).unwrap());
        // A(R2,S2) with R2 = (0,0), S2 = (1,0) is empty
        assert!(!check_anstee_condition(&[1, 1], &[1, 1], &[2, 0], &[1, 0]).unwrap());
    }
}
