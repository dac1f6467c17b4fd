//! Interchanges: adding or subtracting `E = [[1,-1],[-1,1]]` on a 2x2
//! submatrix (rows and columns need not be consecutive). Margins are
//! preserved by every interchange.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::enumerate::{enumerate_pm_class_capped, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::margins::{margins, ryser_realization, zero_one_class_nonempty, MarginPair};
use crate::matrix::SignMatrix;
use crate::srm::{is_srm, Srm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `±E` on rows `i < k` and columns `j < l`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InterchangeStep {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub sign: Sign,
}

impl InterchangeStep {
    /// Accepts the two rows and two columns in either order.
    pub fn new(rows: (usize, usize), cols: (usize, usize), sign: Sign) -> Result<Self> {
        let sorted = |(a, b): (usize, usize)| if a <= b { (a, b) } else { (b, a) };
        let (rows, cols) = (sorted(rows), sorted(cols));
        if rows.0 == 0 || cols.0 == 0 || rows.0 == rows.1 || cols.0 == cols.1 {
            return Err(Error::InvalidInterchange(format!(
                "rows {rows:?} and columns {cols:?} must be distinct 1-based pairs"
            )));
        }
        Ok(InterchangeStep { rows, cols, sign })
    }

    /// The step undoing this one.
    pub fn inverse(self) -> InterchangeStep {
        InterchangeStep {
            sign: self.sign.flip(),
            ..self
        }
    }

    /// The four cells (0-based) with the change applied to each.
    fn deltas(&self) -> [(usize, usize, i8); 4] {
        let s = self.sign.value();
        let (i, k) = (self.rows.0 - 1, self.rows.1 - 1);
        let (j, l) = (self.cols.0 - 1, self.cols.1 - 1);
        [(i, j, s), (i, l, -s), (k, j, -s), (k, l, s)]
    }
}

impl fmt::Display for InterchangeStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(
            f,
            "({},{})x({},{}) {sign}",
            self.rows.0, self.rows.1, self.cols.0, self.cols.1
        )
    }
}

/// Applies a step; fails when an index is out of range or an entry would
/// leave `{-1, 0, 1}`.
pub fn apply_interchange(m: &SignMatrix, step: &InterchangeStep) -> Result<SignMatrix> {
    if step.rows.1 > m.rows() || step.cols.1 > m.cols() {
        return Err(Error::InvalidInterchange(format!(
            "{step} is outside a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let mut out = m.clone();
    for (i, j, d) in step.deltas() {
        let v = m.get(i, j) + d;
        if !(-1..=1).contains(&v) {
            return Err(Error::InvalidInterchange(format!(
                "{step} sends entry ({},{}) to {v}",
                i + 1,
                j + 1
            )));
        }
        out.set_unchecked(i, j, v);
    }
    Ok(out)
}

/// The class every intermediate matrix of a trace must stay in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceClass {
    Srm,
    PlusMinus,
    ZeroOne,
}

impl TraceClass {
    pub fn admits(self, m: &SignMatrix) -> bool {
        match self {
            TraceClass::Srm => is_srm(m),
            TraceClass::PlusMinus => true,
            TraceClass::ZeroOne => m.is_nonnegative(),
        }
    }
}

/// A start matrix and a sequence of interchanges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterchangeTrace {
    pub start: SignMatrix,
    pub steps: Vec<InterchangeStep>,
    pub class: TraceClass,
}

impl InterchangeTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every matrix visited, `start` included.
    pub fn replay(&self) -> Result<Vec<SignMatrix>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for step in &self.steps {
            let next = apply_interchange(out.last().expect("nonempty"), step)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<SignMatrix> {
        Ok(self.replay()?.pop().expect("nonempty"))
    }

    /// Replays the trace checking class membership and constant margins.
    pub fn verify(&self) -> Result<()> {
        let target = margins(&self.start);
        for (t, m) in self.replay()?.iter().enumerate() {
            if !self.class.admits(m) {
                return Err(Error::Internal(format!("matrix {t} of the trace leaves {:?}", self.class)));
            }
            if !target.matches(m) {
                return Err(Error::Internal(format!("matrix {t} of the trace changes the margins")));
            }
        }
        Ok(())
    }
}

/// The top-left `-1`: minimal `i + j`, then minimal row. 0-based.
fn top_left_minus_one(a: &SignMatrix) -> Option<(usize, usize)> {
    let (m, n) = a.shape();
    (0..m + n - 1).find_map(|d| {
        (0..m)
            .filter(|&i| i <= d && d - i < n)
            .map(|i| (i, d - i))
            .find(|&(i, j)| a.get(i, j) == -1)
    })
}

/// Removes every `-1` by interchanges, one per step, staying inside the SRMs.
///
/// Each step takes the top-left `-1` at `(i, j)`, the nearest `1` above it in
/// column `j` (row `k`) and the nearest `1` left of it in row `i` (column `l`),
/// and adds `E` on rows `{k, i}` and columns `{l, j}`.
pub fn eliminate_minus_ones(a: &Srm) -> (Srm, InterchangeTrace) {
    let mut cur = a.matrix().clone();
    let mut steps = Vec::with_capacity(a.count(-1));
    while let Some((i, j)) = top_left_minus_one(&cur) {
        let k = (0..i).rev().find(|&k| cur.get(k, j) == 1).expect("a 1 above every -1 of an SRM");
        let l = (0..j).rev().find(|&l| cur.get(i, l) == 1).expect("a 1 left of every -1 of an SRM");
        debug_assert_eq!(cur.get(k, l), 0);
        let step = InterchangeStep {
            rows: (k + 1, i + 1),
            cols: (l + 1, j + 1),
            sign: Sign::Plus,
        };
        cur = apply_interchange(&cur, &step).expect("elimination step stays in range");
        debug_assert!(is_srm(&cur));
        steps.push(step);
    }
    let trace = InterchangeTrace {
        start: a.matrix().clone(),
        steps,
        class: TraceClass::Srm,
    };
    (Srm::new_unchecked(cur), trace)
}

/// Interchange steps turning one (0,1)-SRM into another with the same margins,
/// fixing one column at a time from the left.
fn connect_zero_one(a: &SignMatrix, b: &SignMatrix) -> Vec<InterchangeStep> {
    let mut cur = a.clone();
    let mut steps = Vec::new();
    let one_in = |m: &SignMatrix, j: usize| (0..m.rows()).find(|&i| m.get(i, j) == 1);
    for j in 0..cur.cols() {
        let (Some(ra), Some(rb)) = (one_in(&cur, j), one_in(b, j)) else {
            continue;
        };
        if ra == rb {
            continue;
        }
        let l = (j + 1..cur.cols())
            .find(|&l| cur.get(rb, l) == 1 && b.get(rb, l) == 0)
            .expect("equal row sums leave a surplus 1 to the right");
        let sign = if ra < rb { Sign::Minus } else { Sign::Plus };
        let step = InterchangeStep::new((ra + 1, rb + 1), (j + 1, l + 1), sign).expect("distinct indices");
        cur = apply_interchange(&cur, &step).expect("swap of a unit column pair");
        steps.push(step);
    }
    debug_assert_eq!(&cur, b);
    steps
}

/// A trace from `a` to `b` through SRMs: eliminate the `-1`s of `a`, move
/// between the two (0,1)-SRMs, then undo the elimination of `b`.
pub fn srm_interchange_path(a: &Srm, b: &Srm) -> Result<InterchangeTrace> {
    a.ensure_same_shape(b)?;
    let (ma, mb) = (margins(a), margins(b));
    if ma != mb {
        return Err(Error::MarginMismatch(format!(
            "R={:?}, S={:?} versus R={:?}, S={:?}",
            ma.row_sums, ma.col_sums, mb.row_sums, mb.col_sums
        )));
    }
    let (a_star, ta) = eliminate_minus_ones(a);
    let (b_star, tb) = eliminate_minus_ones(b);
    let mut steps = ta.steps;
    steps.extend(connect_zero_one(&a_star, &b_star));
    steps.extend(tb.steps.iter().rev().map(|s| s.inverse()));
    Ok(InterchangeTrace {
        start: a.matrix().clone(),
        steps,
        class: TraceClass::Srm,
    })
}

fn check_sums(r: &[i64], s: &[i64]) -> Result<()> {
    let (tr, ts) = (r.iter().sum::<i64>(), s.iter().sum::<i64>());
    if tr != ts {
        return Err(Error::SumMismatch {
            row_total: tr,
            col_total: ts,
        });
    }
    if r.is_empty() || s.is_empty() {
        return Err(Error::EmptyShape {
            rows: r.len(),
            cols: s.len(),
        });
    }
    Ok(())
}

fn sorted_desc(s: &[i64]) -> Vec<i64> {
    let mut s = s.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Is there an `m x n` matrix with entries in `{0, 1, 2}` and margins `(R, S)`?
/// Tests `Σ_{j≤k} s_j ≤ Σ_i min(r_i, 2k)` for every `k`, with `S` sorted
/// nonincreasing.
pub fn a012_nonempty(r: &[i64], s: &[i64]) -> Result<bool> {
    check_sums(r, s)?;
    if r.iter().chain(s).any(|&x| x < 0) {
        return Ok(false);
    }
    let s = sorted_desc(s);
    let mut prefix = 0;
    for (k, sk) in (1i64..).zip(&s) {
        prefix += sk;
        if prefix > r.iter().map(|&ri| ri.min(2 * k)).sum::<i64>() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is `A±(R, S)` nonempty? Tests
/// `Σ_{j≤k} s_j ≤ Σ_i min(r_i + n, 2k) - k m` for every `k`, with `S` sorted
/// nonincreasing. Margins may be negative.
pub fn pm_nonempty(r: &[i64], s: &[i64]) -> Result<bool> {
    check_sums(r, s)?;
    let (m, n) = (r.len() as i64, s.len() as i64);
    if r.iter().any(|&ri| ri.abs() > n) || s.iter().any(|&sj| sj.abs() > m) {
        return Ok(false);
    }
    let s = sorted_desc(s);
    let mut prefix = 0;
    for (k, sk) in (1i64..).zip(&s) {
        prefix += sk;
        let cap: i64 = r.iter().map(|&ri| (ri + n).min(2 * k)).sum::<i64>() - k * m;
        if prefix > cap {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `pm_nonempty` through the shift `A -> A + J` to a (0,1,2)-class with
/// margins `(R + n, S + m)`.
pub fn pm_nonempty_via_shift(r: &[i64], s: &[i64]) -> Result<bool> {
    check_sums(r, s)?;
    let (m, n) = (r.len() as i64, s.len() as i64);
    let r2: Vec<i64> = r.iter().map(|&x| x + n).collect();
    let s2: Vec<i64> = s.iter().map(|&x| x + m).collect();
    a012_nonempty(&r2, &s2)
}

fn all_steps(m: usize, n: usize) -> Vec<InterchangeStep> {
    let mut out = Vec::new();
    for i in 1..=m {
        for k in i + 1..=m {
            for j in 1..=n {
                for l in j + 1..=n {
                    for sign in [Sign::Plus, Sign::Minus] {
                        out.push(InterchangeStep {
                            rows: (i, k),
                            cols: (j, l),
                            sign,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Shortest interchange trace from `a` to `b` inside `A±(R, S)`, by
/// breadth-first search.
pub fn pm_interchange_path(a: &SignMatrix, b: &SignMatrix) -> Result<InterchangeTrace> {
    pm_interchange_path_capped(a, b, DEFAULT_MAX_CELLS)
}

pub fn pm_interchange_path_capped(a: &SignMatrix, b: &SignMatrix, max_cells: usize) -> Result<InterchangeTrace> {
    a.ensure_same_shape(b)?;
    let cells = a.rows() * a.cols();
    if cells > max_cells {
        return Err(Error::CapExceeded { cells, cap: max_cells });
    }
    if margins(a) != margins(b) {
        return Err(Error::MarginMismatch("endpoints have different margins".into()));
    }
    let moves = all_steps(a.rows(), a.cols());
    let mut parent: HashMap<SignMatrix, (SignMatrix, InterchangeStep)> = HashMap::new();
    let mut seen: HashSet<SignMatrix> = HashSet::from([a.clone()]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == b {
            break;
        }
        for step in &moves {
            if let Ok(next) = apply_interchange(&cur, step) {
                if seen.insert(next.clone()) {
                    parent.insert(next.clone(), (cur.clone(), *step));
                    queue.push_back(next);
                }
            }
        }
    }
    if !seen.contains(b) {
        return Err(Error::Internal("interchange graph is disconnected".into()));
    }
    let mut steps = Vec::new();
    let mut cur = b.clone();
    while let Some((prev, step)) = parent.get(&cur) {
        steps.push(*step);
        cur = prev.clone();
    }
    steps.reverse();
    Ok(InterchangeTrace {
        start: a.clone(),
        steps,
        class: TraceClass::PlusMinus,
    })
}

/// True when every member of `A±(R, S)` is reachable from every other by
/// interchanges inside the class. Vacuously true for an empty class.
pub fn pm_class_connected(p: &MarginPair, max_cells: usize) -> Result<bool> {
    let class: HashSet<SignMatrix> = enumerate_pm_class_capped(p, max_cells)?.collect();
    let Some(first) = class.iter().next().cloned() else {
        return Ok(true);
    };
    let moves = all_steps(p.rows(), p.cols());
    let mut seen = HashSet::from([first.clone()]);
    let mut queue = VecDeque::from([first]);
    while let Some(cur) = queue.pop_front() {
        for step in &moves {
            if let Ok(next) = apply_interchange(&cur, step) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.len() == class.len())
}

/// Every 0 is the only 0 in its row or the only 0 in its column; equivalently
/// no 2x2 submatrix holds at most one 1.
pub fn has_isolated_zeros(a: &SignMatrix) -> bool {
    let row_zeros: Vec<usize> = (0..a.rows()).map(|i| a.row(i).iter().filter(|&&v| v == 0).count()).collect();
    let col_zeros: Vec<usize> = (0..a.cols())
        .map(|j| (0..a.rows()).filter(|&i| a.get(i, j) == 0).count())
        .collect();
    (0..a.rows()).all(|i| (0..a.cols()).all(|j| a.get(i, j) != 0 || row_zeros[i] == 1 || col_zeros[j] == 1))
}

/// Does `A(R, S) = A±(R, S)`? Decided on one realization of `A(R, S)` by the
/// zero-pattern criterion of [`has_isolated_zeros`].
pub fn class_equality(r: &[i64], s: &[i64]) -> Result<bool> {
    check_sums(r, s)?;
    if !zero_one_class_nonempty(r, s) {
        return Err(Error::EmptyClass);
    }
    let a = ryser_realization(r, s).ok_or_else(|| Error::Internal("Gale–Ryser passed but no realization".into()))?;
    Ok(has_isolated_zeros(&a))
}

/// [`class_equality`] decided by enumerating `A±(R, S)` and looking for a `-1`.
pub fn class_equality_exhaustive(r: &[i64], s: &[i64], max_cells: usize) -> Result<bool> {
    check_sums(r, s)?;
    if !zero_one_class_nonempty(r, s) {
        return Err(Error::EmptyClass);
    }
    let p = MarginPair::new(r.to_vec(), s.to_vec());
    let mut class = enumerate_pm_class_capped(&p, max_cells)?;
    Ok(class.all(|a| a.is_nonnegative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::margins::canonical_staircase;
    use crate::srm::validate_srm;

    fn sm<R: AsRef<[i8]>>(rows: &[R]) -> SignMatrix {
        SignMatrix::from_rows(rows).unwrap()
    }

    fn example_seven() -> Srm {
        validate_srm(&sm(&[[0, 1, 1], [1, -1, 0], [0, 1, -1], [0, 0, 1]])).unwrap()
    }

    #[test]
    fn example_seven_trace() {
        let a = example_seven();
        let (out, trace) = eliminate_minus_ones(&a);
        assert_eq!(trace.len(), 2);
        assert_eq!(trace.steps[0].to_string(), "(1,2)x(1,2) +");
        assert_eq!(trace.steps[1].to_string(), "(1,3)x(2,3) +");
        let mid = trace.replay().unwrap();
        assert_eq!(mid[1], sm(&[[1, 0, 1], [0, 0, 0], [0, 1, -1], [0, 0, 1]]));
        assert_eq!(out.to_rows(), vec![vec![1, 1, 0], vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]);
        trace.verify().unwrap();
    }

    #[test]
    fn example_seven_reaches_staircase() {
        let a = example_seven();
        let canon = canonical_staircase(&MarginPair::new(vec![2, 0, 0, 1], vec![1, 1, 1])).unwrap();
        let t = srm_interchange_path(&a, &canon).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.end().unwrap(), *canon.matrix());
    }

    #[test]
    fn p_eliminates_in_one_step() {
        let p = validate_srm(&sm(&[[0, 1], [1, -1]])).unwrap();
        let (out, t) = eliminate_minus_ones(&p);
        assert_eq!(t.steps, vec![InterchangeStep::new((1, 2), (1, 2), Sign::Plus).unwrap()]);
        assert_eq!(out.to_rows(), vec![vec![1, 0], vec![0, 0]]);
    }

    #[test]
    fn apply_rejects_overflow_and_inverts() {
        let i2 = sm(&[[1, 0], [0, 1]]);
        let plus = InterchangeStep::new((1, 2), (1, 2), Sign::Plus).unwrap();
        assert!(apply_interchange(&i2, &plus).is_err());
        let minus = plus.inverse();
        let swapped = apply_interchange(&i2, &minus).unwrap();
        assert_eq!(swapped, sm(&[[0, 1], [1, 0]]));
        assert_eq!(apply_interchange(&swapped, &plus).unwrap(), i2);
    }

    #[test]
    fn nonemptiness_examples() {
        assert!(pm_nonempty(&[2, 0], &[2, 0]).unwrap());
        assert!(pm_nonempty(&[1, 1, 1], &[1, 1, 1]).unwrap());
        assert!(!pm_nonempty(&[3, 0], &[2, 1]).unwrap());
        assert!(a012_nonempty(&[3, 1], &[3, 1]).unwrap());
        assert!(a012_nonempty(&[2], &[2]).unwrap());
        assert!(a012_nonempty(&[4, 4], &[4, 4]).unwrap());
        assert!(a012_nonempty(&[4, 0], &[1, 1, 1, 1]).unwrap());
        assert!(!a012_nonempty(&[5, 0], &[3, 2]).unwrap());
        assert!(matches!(pm_nonempty(&[1], &[2]), Err(Error::SumMismatch { .. })));
    }

    #[test]
    fn class_equality_examples() {
        assert!(class_equality(&[8, 7, 7, 5, 7, 7], &[6, 6, 5, 5, 5, 5, 5, 4]).unwrap());
        assert!(!class_equality(&[1, 1, 2], &[2, 1, 1]).unwrap());
        assert!(class_equality(&[1, 1], &[2, 0]).unwrap());
        assert!(class_equality_exhaustive(&[1, 1], &[2, 0], 20).unwrap());
        assert_eq!(class_equality(&[2, 0], &[2, 0]), Err(Error::EmptyClass));
    }
}
