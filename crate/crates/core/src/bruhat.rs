//! The Bruhat order: `A ≤_B B` iff `Σ(A) ≥ Σ(B)` entrywise.
//!
//! On all SRMs of a fixed shape this order is a distributive lattice whose
//! meet and join act entrywise on sum-matrices.

use std::fmt;

use log::warn;
use serde::Serialize;

use crate::enumerate::{enumerate_srms_capped, ClassFilter, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::matrix::{inverse_sum_matrix, sum_matrix, IntMatrix, SignMatrix, SumMatrix};
use crate::srm::{validate_srm, Srm};

fn require_plus(a: &SignMatrix) -> Result<()> {
    match a.first_negative() {
        Some((row, col)) => Err(Error::HasNegativeEntry { row: row + 1, col: col + 1 }),
        None => Ok(()),
    }
}

pub fn bruhat_leq(a: &Srm, b: &Srm) -> Result<bool> {
    a.ensure_same_shape(b)?;
    Ok(a.sum_matrix().dominates(&b.sum_matrix()))
}

/// Greatest lower bound: the SRM whose sum-matrix is `max(Σ(A), Σ(B))`.
pub fn bruhat_meet(a: &Srm, b: &Srm) -> Result<Srm> {
    let t = a.sum_matrix().entrywise_max(&b.sum_matrix())?;
    let c = inverse_sum_matrix(&t).to_sign()?;
    validate_srm(&c).map_err(|v| Error::Internal(format!("meet is not an SRM: {v}")))
}

/// Least upper bound. Computed as the SRM whose sum-matrix is
/// `min(Σ(A), Σ(B))`; if that reconstruction were ever not an SRM, the least
/// element among enumerated upper bounds is returned instead.
pub fn bruhat_join(a: &Srm, b: &Srm) -> Result<Srm> {
    let t = a.sum_matrix().entrywise_min(&b.sum_matrix())?;
    let candidate = inverse_sum_matrix(&t).to_sign().ok().and_then(|c| validate_srm(&c).ok());
    if let Some(c) = candidate {
        return Ok(c);
    }
    warn!("entrywise-min reconstruction of a join is not an SRM; searching upper bounds");
    join_by_search(a, b)
}

fn join_by_search(a: &Srm, b: &Srm) -> Result<Srm> {
    let (sa, sb) = (a.sum_matrix(), b.sum_matrix());
    let bounds: Vec<(Srm, SumMatrix)> = enumerate_srms_capped(a.rows(), a.cols(), &ClassFilter::all(), DEFAULT_MAX_CELLS)?
        .map(|u| {
            let s = u.sum_matrix();
            (u, s)
        })
        .filter(|(_, s)| sa.dominates(s) && sb.dominates(s))
        .collect();
    bounds
        .iter()
        .find(|(_, s)| bounds.iter().all(|(_, other)| s.dominates(other)))
        .map(|(u, _)| u.clone())
        .ok_or_else(|| Error::Internal("no least upper bound".into()))
}

/// `A^(1), ..., A^(m)`: `A^(i)` is zero outside row `i`, and row `i` has a 1
/// in column `j` exactly when row `i` of `Σ(A)` increases at `j`. Their meet
/// is `A`.
pub fn meet_irreducible_decomposition(a: &Srm) -> Vec<Srm> {
    let s = a.sum_matrix();
    (0..a.rows())
        .map(|i| {
            let mut out = SignMatrix::zeros_unchecked(a.rows(), a.cols());
            for j in 0..a.cols() {
                let prev = if j == 0 { 0 } else { s.get(i, j - 1) };
                if s.get(i, j) > prev {
                    out.set_unchecked(i, j, 1);
                }
            }
            Srm::new_unchecked(out)
        })
        .collect()
}

/// Meet of a nonempty list.
pub fn bruhat_meet_all(items: &[Srm]) -> Result<Srm> {
    let (first, rest) = items
        .split_first()
        .ok_or_else(|| Error::Precondition("meet of an empty list".into()))?;
    rest.iter().try_fold(first.clone(), |acc, x| bruhat_meet(&acc, x))
}

/// Is `S` the sum-matrix of a (0,1)-SRM? With phantom zeros `s_{0j} = s_{i0} = 0`:
/// `s_{i,j-1} + s_{i-1,j} - s_{i-1,j-1} ≤ s_{ij}` everywhere and
/// `s_{mj} ≤ s_{m,j-1} + 1` along the last row.
pub fn is_plus_sum_matrix(s: &IntMatrix) -> bool {
    let (m, n) = s.shape();
    if s.as_slice().iter().any(|&x| x < 0) {
        return false;
    }
    for i in 1..=m {
        for j in 1..=n {
            if s.at(i, j - 1) + s.at(i - 1, j) - s.at(i - 1, j - 1) > s.at(i, j) {
                return false;
            }
        }
    }
    (1..=n).all(|j| s.at(m, j) <= s.at(m, j - 1) + 1)
}

/// Replace a `[[0,1],[1,0]]` submatrix by the identity. Indices are 1-based
/// with `rows.0 < rows.1` and `cols.0 < cols.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BruhatInterchange {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

impl BruhatInterchange {
    pub fn apply(&self, m: &SignMatrix) -> Result<SignMatrix> {
        let (i, k, j, l) = (self.rows.0, self.rows.1, self.cols.0, self.cols.1);
        if !(1 <= i && i < k && k <= m.rows() && 1 <= j && j < l && l <= m.cols()) {
            return Err(Error::InvalidBruhatOp(format!("{self} is outside a {}x{} matrix", m.rows(), m.cols())));
        }
        let (i, k, j, l) = (i - 1, k - 1, j - 1, l - 1);
        if [m.get(i, j), m.get(i, l), m.get(k, j), m.get(k, l)] != [0, 1, 1, 0] {
            return Err(Error::InvalidBruhatOp(format!("{self}: submatrix is not [[0,1],[1,0]]")));
        }
        let mut out = m.clone();
        out.set_unchecked(i, j, 1);
        out.set_unchecked(i, l, 0);
        out.set_unchecked(k, j, 0);
        out.set_unchecked(k, l, 1);
        Ok(out)
    }
}

impl fmt::Display for BruhatInterchange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows ({},{}) x columns ({},{})",
            self.rows.0, self.rows.1, self.cols.0, self.cols.1
        )
    }
}

fn column_one(m: &SignMatrix, j: usize) -> Option<usize> {
    (0..m.rows()).find(|&i| m.get(i, j) == 1)
}

fn check_unit_columns(m: &SignMatrix, name: &str) -> Result<()> {
    for j in 0..m.cols() {
        let col = m.column(j);
        if col.iter().any(|&v| v != 0 && v != 1) || col.iter().filter(|&&v| v == 1).count() != 1 {
            return Err(Error::Precondition(format!("column {} of {name} is not a unit vector", j + 1)));
        }
    }
    Ok(())
}

/// Bruhat interchanges turning `c` into `a`, where both are (0,1)-matrices
/// with every column sum 1, equal row sums, and `Σ(A) ≥ Σ(C)`.
///
/// Works upward from `a` by column swaps that each undo one Bruhat
/// interchange and keep `Σ ≥ Σ(C)`. At the first entry (row-major) where the
/// current matrix differs from `c`, say `(k, l)`, column `l` is swapped with
/// the column right of `l` whose 1 is uppermost below row `k` (then leftmost)
/// among those keeping the bound; if no such column exists, the first valid
/// column pair in lexicographic order is used. The reversed swaps are the
/// answer.
pub fn bruhat_interchange_sequence(c: &SignMatrix, a: &SignMatrix) -> Result<Vec<BruhatInterchange>> {
    c.ensure_same_shape(a)?;
    check_unit_columns(c, "C")?;
    check_unit_columns(a, "A")?;
    if c.row_sums() != a.row_sums() {
        return Err(Error::Precondition("row sums of A and C differ".into()));
    }
    let sc = sum_matrix(c);
    if !sum_matrix(a).dominates(&sc) {
        return Err(Error::Precondition("Σ(A) ≥ Σ(C) fails".into()));
    }
    let (m, n) = a.shape();
    let target: Vec<usize> = (0..n).map(|j| column_one(c, j).expect("unit column")).collect();
    let mut word: Vec<usize> = (0..n).map(|j| column_one(a, j).expect("unit column")).collect();
    // Σ ≥ Σ(C) for the word with positions j < l swapped
    let keeps_bound = |word: &[usize], j: usize, l: usize| -> bool {
        let mut w = word.to_vec();
        w.swap(j, l);
        let mut counts = vec![0i64; m];
        for (col, &r) in w.iter().enumerate() {
            counts[r] += 1;
            let mut acc = 0;
            for (i, &cnt) in counts.iter().enumerate() {
                acc += cnt;
                if acc < sc.get(i, col) {
                    return false;
                }
            }
        }
        true
    };
    let mut ups = Vec::new();
    while word != target {
        let l = (0..n).find(|&j| word[j] != target[j]).expect("words differ");
        let k = word[l];
        let mut partners: Vec<usize> = (l + 1..n).filter(|&j| word[j] > k).collect();
        partners.sort_by_key(|&j| (word[j], j));
        let pair = partners
            .into_iter()
            .find(|&j| keeps_bound(&word, l, j))
            .map(|j| (l, j))
            .or_else(|| {
                (0..n)
                    .flat_map(|j| (j + 1..n).map(move |t| (j, t)))
                    .find(|&(j, t)| word[j] < word[t] && keeps_bound(&word, j, t))
            })
            .ok_or_else(|| Error::Internal("no swap stays above C".into()))?;
        let (j, t) = pair;
        ups.push(BruhatInterchange {
            rows: (word[j] + 1, word[t] + 1),
            cols: (j + 1, t + 1),
        });
        word.swap(j, t);
    }
    ups.reverse();
    Ok(ups)
}

/// The four moves that generate the Bruhat order on (0,1)-SRMs. Each moves
/// down the order. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BruhatOp {
    /// `[[0,1],[1,0]]` on the given rows and columns becomes the identity.
    BruhatInterchange { rows: (usize, usize), cols: (usize, usize) },
    /// A zero column becomes `e_row`.
    ZeroColumnToUnit { col: usize, row: usize },
    /// Column `col` equal to `e_from` becomes `e_to` with `to < from`.
    RaiseUnitColumn { col: usize, from: usize, to: usize },
    /// Nonzero column `col` trades places with the zero column `zero_col < col`.
    SwapWithEarlierZeroColumn { col: usize, zero_col: usize },
}

impl BruhatOp {
    pub fn apply(&self, m: &SignMatrix) -> Result<SignMatrix> {
        let bad = |msg: String| Err(Error::InvalidBruhatOp(format!("{self}: {msg}")));
        let col_ok = |c: usize| (1..=m.cols()).contains(&c);
        let row_ok = |r: usize| (1..=m.rows()).contains(&r);
        match *self {
            BruhatOp::BruhatInterchange { rows, cols } => BruhatInterchange { rows, cols }.apply(m),
            BruhatOp::ZeroColumnToUnit { col, row } => {
                if !col_ok(col) || !row_ok(row) {
                    return bad("index out of range".into());
                }
                if m.column(col - 1).iter().any(|&v| v != 0) {
                    return bad("column is not zero".into());
                }
                let mut out = m.clone();
                out.set_unchecked(row - 1, col - 1, 1);
                Ok(out)
            }
            BruhatOp::RaiseUnitColumn { col, from, to } => {
                if !col_ok(col) || !row_ok(from) || to == 0 || to >= from {
                    return bad("indices out of range".into());
                }
                let unit = m.column(col - 1).iter().enumerate().all(|(i, &v)| v == i8::from(i + 1 == from));
                if !unit {
                    return bad(format!("column is not e_{from}"));
                }
                let mut out = m.clone();
                out.set_unchecked(from - 1, col - 1, 0);
                out.set_unchecked(to - 1, col - 1, 1);
                Ok(out)
            }
            BruhatOp::SwapWithEarlierZeroColumn { col, zero_col } => {
                if !col_ok(col) || zero_col == 0 || zero_col >= col {
                    return bad("indices out of range".into());
                }
                if m.column(zero_col - 1).iter().any(|&v| v != 0) || m.column(col - 1).iter().all(|&v| v == 0) {
                    return bad("needs a zero column before a nonzero one".into());
                }
                let mut out = m.clone();
                for i in 0..m.rows() {
                    out.set_unchecked(i, zero_col - 1, m.get(i, col - 1));
                    out.set_unchecked(i, col - 1, 0);
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for BruhatOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BruhatOp::BruhatInterchange { rows, cols } => {
                write!(f, "bruhat-interchange {}", BruhatInterchange { rows, cols })
            }
            BruhatOp::ZeroColumnToUnit { col, row } => write!(f, "zero column {col} -> e_{row}"),
            BruhatOp::RaiseUnitColumn { col, from, to } => write!(f, "column {col}: e_{from} -> e_{to}"),
            BruhatOp::SwapWithEarlierZeroColumn { col, zero_col } => {
                write!(f, "swap column {col} with zero column {zero_col}")
            }
        }
    }
}

/// Appends row `m + 1` holding a 1 under every zero column.
fn complete_columns(x: &SignMatrix) -> SignMatrix {
    let (m, n) = x.shape();
    let mut out = SignMatrix::zeros_unchecked(m + 1, n);
    for i in 0..m {
        for j in 0..n {
            out.set_unchecked(i, j, x.get(i, j));
        }
    }
    for j in 0..n {
        if column_one(x, j).is_none() {
            out.set_unchecked(m, j, 1);
        }
    }
    out
}

/// Appends `extra.iter().sum()` unit columns, giving row `i` the next
/// `extra[i]` of them going down the rows.
fn pad_columns(x: &SignMatrix, extra: &[i64]) -> SignMatrix {
    let t: i64 = extra.iter().sum();
    let (m, n) = x.shape();
    let mut out = SignMatrix::zeros_unchecked(m, n + t as usize);
    for i in 0..m {
        for j in 0..n {
            out.set_unchecked(i, j, x.get(i, j));
        }
    }
    let mut col = n;
    for (i, &e) in extra.iter().enumerate() {
        for _ in 0..e {
            out.set_unchecked(i, col, 1);
            col += 1;
        }
    }
    out
}

/// Moves turning `c` into `a` for (0,1)-SRMs with `a ≤_B c`.
///
/// Both matrices get an extra last row making every column sum 1, then unit
/// columns equalizing the row sums; the Bruhat interchanges between the padded
/// matrices are translated back by where they fall: inside the original
/// block, across the padding columns, across the extra row, or both.
pub fn bruhat_op_sequence(c: &Srm, a: &Srm) -> Result<Vec<BruhatOp>> {
    c.ensure_same_shape(a)?;
    require_plus(c)?;
    require_plus(a)?;
    if !bruhat_leq(a, c)? {
        return Err(Error::NotComparable);
    }
    let (m, n) = c.shape();
    let (c1, a1) = (complete_columns(c), complete_columns(a));
    let (p, q) = (a1.row_sums(), c1.row_sums());
    let extra_a: Vec<i64> = p.iter().zip(&q).map(|(&pi, &qi)| (qi - pi).max(0)).collect();
    let extra_c: Vec<i64> = p.iter().zip(&q).map(|(&pi, &qi)| (pi - qi).max(0)).collect();
    let (c2, a2) = (pad_columns(&c1, &extra_c), pad_columns(&a1, &extra_a));
    let mut ops = Vec::new();
    for bi in bruhat_interchange_sequence(&c2, &a2)? {
        let (r1, r2) = (bi.rows.0 - 1, bi.rows.1 - 1);
        let (k1, k2) = (bi.cols.0 - 1, bi.cols.1 - 1);
        let op = if k1 >= n {
            continue;
        } else if r2 < m && k2 < n {
            BruhatOp::BruhatInterchange {
                rows: bi.rows,
                cols: bi.cols,
            }
        } else if r2 == m && k2 >= n {
            BruhatOp::ZeroColumnToUnit { col: k1 + 1, row: r1 + 1 }
        } else if r2 < m {
            BruhatOp::RaiseUnitColumn {
                col: k1 + 1,
                from: r2 + 1,
                to: r1 + 1,
            }
        } else {
            BruhatOp::SwapWithEarlierZeroColumn {
                col: k2 + 1,
                zero_col: k1 + 1,
            }
        };
        ops.push(op);
    }
    let replayed = replay_ops(c, &ops)?;
    if &replayed != a.matrix() {
        return Err(Error::Internal("translated moves do not reach A".into()));
    }
    Ok(ops)
}

pub fn replay_ops(start: &SignMatrix, ops: &[BruhatOp]) -> Result<SignMatrix> {
    ops.iter().try_fold(start.clone(), |cur, op| op.apply(&cur))
}

/// The local moves from a (0,1)-SRM `A` to elements it covers: a Bruhat
/// interchange in consecutive rows and columns; in the last column, a zero
/// column gaining a 1 in the last row or a 1 moving up one row; and a column
/// whose 1 is in the last row trading places with a zero column just before
/// it. Each raises the total of `Σ` by exactly 1.
pub fn local_cover_moves(a: &Srm) -> Result<Vec<BruhatOp>> {
    require_plus(a)?;
    let (m, n) = a.shape();
    let mut out = Vec::new();
    for i in 0..m.saturating_sub(1) {
        for j in 0..n.saturating_sub(1) {
            if [a.get(i, j), a.get(i, j + 1), a.get(i + 1, j), a.get(i + 1, j + 1)] == [0, 1, 1, 0] {
                out.push(BruhatOp::BruhatInterchange {
                    rows: (i + 1, i + 2),
                    cols: (j + 1, j + 2),
                });
            }
        }
    }
    match column_one(a, n - 1) {
        None => out.push(BruhatOp::ZeroColumnToUnit { col: n, row: m }),
        Some(r) if r > 0 => out.push(BruhatOp::RaiseUnitColumn {
            col: n,
            from: r + 1,
            to: r,
        }),
        Some(_) => {}
    }
    for j in 1..n {
        if column_one(a, j) == Some(m - 1) && column_one(a, j - 1).is_none() {
            out.push(BruhatOp::SwapWithEarlierZeroColumn { col: j + 1, zero_col: j });
        }
    }
    Ok(out)
}

/// Does `b` cover `a` among the (0,1)-SRMs, i.e. `a <_B b` with nothing in
/// between?
pub fn covers(a: &Srm, b: &Srm) -> Result<bool> {
    a.ensure_same_shape(b)?;
    require_plus(a)?;
    require_plus(b)?;
    if a == b || !bruhat_leq(a, b)? {
        return Ok(false);
    }
    Ok(count_plus_interval(&a.sum_matrix(), &b.sum_matrix(), 3) == 2)
}

/// Number of (0,1)-SRMs `z` with `hi ≥ Σ(z) ≥ lo`, counting at most `limit`.
fn count_plus_interval(hi: &SumMatrix, lo: &SumMatrix, limit: usize) -> usize {
    // column-by-column: each column is zero or e_r; prev is column j-1 of Σ(z)
    fn go(j: usize, prev: &[i64], hi: &SumMatrix, lo: &SumMatrix, limit: usize, found: &mut usize) {
        let (m, n) = hi.shape();
        if *found >= limit {
            return;
        }
        if j == n {
            *found += 1;
            return;
        }
        for r in 0..=m {
            // r == m means a zero column
            let col: Vec<i64> = (0..m).map(|i| prev[i] + i64::from(r < m && i >= r)).collect();
            if (0..m).all(|i| lo.get(i, j) <= col[i] && col[i] <= hi.get(i, j)) {
                go(j + 1, &col, hi, lo, limit, found);
            }
        }
    }
    let mut found = 0;
    go(0, &vec![0; hi.rows()], hi, lo, limit, &mut found);
    found
}

/// Nodes in column-major lexicographic order and cover edges `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub nodes: Vec<Srm>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// DOT text; node labels are row-major entries, commas within a row and
    /// semicolons between rows. Edges point from lower to upper.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (k, a) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{}\"];\n", a.flat_label()));
        }
        for &(x, y) in &self.edges {
            out.push_str(&format!("  n{x} -> n{y};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A finite piece of the Bruhat order: all SRMs (or all (0,1)-SRMs) of one
/// shape with the order relation and its covers.
#[derive(Debug, Clone)]
pub struct BruhatPoset {
    nodes: Vec<Srm>,
    leq: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

/// Join- and meet-irreducibles relative to one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleProfile {
    /// Over [`BruhatPoset::join_irreducibles`]: which lie below the element.
    pub join_below: Vec<bool>,
    /// Over [`BruhatPoset::meet_irreducibles`]: which lie above the element.
    pub meet_above: Vec<bool>,
}

impl BruhatPoset {
    pub fn new(m: usize, n: usize, plus_only: bool) -> Result<Self> {
        Self::with_cap(m, n, plus_only, DEFAULT_MAX_CELLS)
    }

    pub fn with_cap(m: usize, n: usize, plus_only: bool, max_cells: usize) -> Result<Self> {
        let filter = if plus_only { ClassFilter::plus() } else { ClassFilter::all() };
        let nodes: Vec<Srm> = enumerate_srms_capped(m, n, &filter, max_cells)?.collect();
        let sums: Vec<SumMatrix> = nodes.iter().map(|a| a.sum_matrix()).collect();
        let len = nodes.len();
        let leq: Vec<Vec<bool>> = (0..len)
            .map(|x| (0..len).map(|y| sums[x].dominates(&sums[y])).collect())
            .collect();
        let mut edges = Vec::new();
        for x in 0..len {
            for y in 0..len {
                if x != y && leq[x][y] && !(0..len).any(|z| z != x && z != y && leq[x][z] && leq[z][y]) {
                    edges.push((x, y));
                }
            }
        }
        Ok(BruhatPoset { nodes, leq, edges })
    }

    pub fn nodes(&self) -> &[Srm] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, a: &SignMatrix) -> Option<usize> {
        self.nodes.iter().position(|x| x.matrix() == a)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn hasse_diagram(&self) -> HasseDiagram {
        HasseDiagram {
            nodes: self.nodes.clone(),
            edges: self.edges.clone(),
        }
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.1 == x).map(|e| e.0).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == x).map(|e| e.1).collect()
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers(x).len() == 1).collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers(x).len() == 1).collect()
    }

    pub fn profile(&self, x: usize) -> IrreducibleProfile {
        IrreducibleProfile {
            join_below: self.join_irreducibles().into_iter().map(|u| self.leq(u, x)).collect(),
            meet_above: self.meet_irreducibles().into_iter().map(|u| self.leq(x, u)).collect(),
        }
    }
}

/// Cover edges of the Bruhat order on `m x n` SRMs, or (0,1)-SRMs when
/// `plus_only`.
pub fn hasse_diagram(m: usize, n: usize, plus_only: bool) -> Result<HasseDiagram> {
    Ok(BruhatPoset::new(m, n, plus_only)?.hasse_diagram())
}

/// The row of the Birkhoff representation tables for `a`.
pub fn irreducible_profile(a: &Srm) -> Result<IrreducibleProfile> {
    let poset = BruhatPoset::new(a.rows(), a.cols(), false)?;
    let x = poset
        .index_of(a)
        .ok_or_else(|| Error::Internal("element missing from enumeration".into()))?;
    Ok(poset.profile(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn srm<R: AsRef<[i8]>>(rows: &[R]) -> Srm {
        validate_srm(&SignMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn example_fourteen_meet_and_join() {
        let c = srm(&[[0, 1], [0, 0]]);
        let d = srm(&[[0, 0], [1, 0]]);
        let b = srm(&[[1, 0], [0, 0]]);
        let g = srm(&[[0, 1], [1, 0]]);
        let p = srm(&[[0, 1], [1, -1]]);
        assert_eq!(bruhat_meet(&c, &d).unwrap(), p);
        assert_eq!(bruhat_join(&b, &g).unwrap(), p);
        assert!(!bruhat_leq(&b, &g).unwrap() && !bruhat_leq(&g, &b).unwrap());
        let f = srm(&[[1, 0], [0, 1]]);
        assert!(bruhat_leq(&f, &b).unwrap());
    }

    #[test]
    fn lemma_seventeen_examples() {
        assert!(is_plus_sum_matrix(&IntMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap()));
        assert!(!is_plus_sum_matrix(&IntMatrix::from_rows(&[[0, 1], [1, 1]]).unwrap()));
        assert!(is_plus_sum_matrix(&IntMatrix::zeros(2, 3)));
    }

    #[test]
    fn decomposition_of_p() {
        let p = srm(&[[0, 1], [1, -1]]);
        let parts = meet_irreducible_decomposition(&p);
        assert_eq!(parts[0].to_rows(), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(parts[1].to_rows(), vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(bruhat_meet_all(&parts).unwrap(), p);
    }

    #[test]
    fn antidiagonal_to_identity() {
        let anti = SignMatrix::from_rows(&[[0, 0, 1], [0, 1, 0], [1, 0, 0]]).unwrap();
        let id = SignMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        let seq = bruhat_interchange_sequence(&anti, &id).unwrap();
        assert_eq!(seq.len(), 3);
        let mut cur = anti.clone();
        for s in &seq {
            let next = s.apply(&cur).unwrap();
            assert!(sum_matrix(&next).dominates(&sum_matrix(&cur)) && next != cur);
            cur = next;
        }
        assert_eq!(cur, id);
        let two = SignMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        let i2 = SignMatrix::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert_eq!(bruhat_interchange_sequence(&two, &i2).unwrap().len(), 1);
        assert!(bruhat_interchange_sequence(&i2, &i2).unwrap().is_empty());
    }

    #[test]
    fn op_sequences_on_two_by_two() {
        let b = srm(&[[1, 0], [0, 0]]);
        let f = srm(&[[1, 0], [0, 1]]);
        assert_eq!(
            bruhat_op_sequence(&b, &f).unwrap(),
            vec![BruhatOp::ZeroColumnToUnit { col: 2, row: 2 }]
        );
        let a = srm(&[[0, 0], [0, 0]]);
        let e = srm(&[[0, 0], [0, 1]]);
        assert_eq!(
            bruhat_op_sequence(&a, &e).unwrap(),
            vec![BruhatOp::ZeroColumnToUnit { col: 2, row: 2 }]
        );
        assert!(bruhat_op_sequence(&f, &f).unwrap().is_empty());
        assert_eq!(bruhat_op_sequence(&f, &b), Err(Error::NotComparable));
    }

    #[test]
    fn covers_examples() {
        let h = srm(&[[1, 1], [0, 0]]);
        let f = srm(&[[1, 0], [0, 1]]);
        let b = srm(&[[1, 0], [0, 0]]);
        assert!(covers(&h, &f).unwrap());
        assert!(!covers(&h, &b).unwrap());
        assert!(!covers(&h, &h).unwrap());
    }

    #[test]
    fn one_by_one_diagram() {
        let d = hasse_diagram(1, 1, false).unwrap();
        assert_eq!(d.nodes.len(), 2);
        assert_eq!(d.edges, vec![(1, 0)]);
        assert!(d.to_dot().contains("n1 -> n0"));
    }
}
