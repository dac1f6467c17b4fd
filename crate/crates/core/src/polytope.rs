//! Exact membership and vertex tests for two polytopes:
//!
//! * the c-SRM polytope: real `m x n` matrices with nonnegative row prefix
//!   sums, column prefix sums in `[0, 1]`, and row sums at most `c`;
//! * the hull of `A^±(R,S)`: real `n x n` matrices with row sums `R`, column
//!   sums `S` and entries in `[-1, 1]`.
//!
//! All arithmetic is over arbitrary-precision rationals.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::enumerate::{count_srms_capped, enumerate_pm_class_capped, ClassFilter, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::margins::MarginPair;
use crate::matrix::SignMatrix;

/// Largest `m * n` for which integral points are found by scanning all of
/// `{-1,0,1}^{m x n}`.
pub const SCAN_MAX_CELLS: usize = 12;

/// Largest `m * n` for which every basic solution is enumerated.
pub const VERTEX_SCAN_MAX_CELLS: usize = 6;

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyShape { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    /// Entries as strings, `"p/q"` or integers.
    pub fn from_strs<R: AsRef<[S]>, S: AsRef<str>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            if r.as_ref().len() != cols {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "ragged rows".into(),
                });
            }
            for s in r.as_ref() {
                data.push(parse_rational(s.as_ref()).map_err(|message| Error::Parse { line: i + 1, message })?);
            }
        }
        RationalMatrix::new(rows.len(), cols, data)
    }

    pub fn from_sign(m: &SignMatrix) -> Self {
        RationalMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m.as_slice().iter().map(|&v| rat(v.into())).collect(),
        }
    }

    /// Arithmetic mean of same-shape matrices.
    pub fn average(items: &[RationalMatrix]) -> Result<Self> {
        let first = items
            .first()
            .ok_or_else(|| Error::Precondition("average of nothing".into()))?;
        let mut data = vec![BigRational::zero(); first.data.len()];
        for x in items {
            if x.shape() != first.shape() {
                return Err(mismatch(first.shape(), x.shape()));
            }
            for (d, v) in data.iter_mut().zip(&x.data) {
                *d += v;
            }
        }
        let k = rat(items.len() as i64);
        for d in &mut data {
            *d /= &k;
        }
        RationalMatrix::new(first.rows, first.cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.data
    }

    /// The sign matrix with the same entries, if every entry is -1, 0 or 1.
    pub fn to_sign(&self) -> Option<SignMatrix> {
        let mut out = Vec::with_capacity(self.data.len());
        for v in &self.data {
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer().to_i64()?);
        }
        SignMatrix::from_i64(self.rows, self.cols, &out).ok()
    }
}

fn mismatch(left: (usize, usize), right: (usize, usize)) -> Error {
    Error::DimensionMismatch {
        left_rows: left.0,
        left_cols: left.1,
        right_rows: right.0,
        right_cols: right.1,
    }
}

pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|_| format!("bad rational {s:?}"))
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolytopeSpec {
    /// Nonnegative row prefix sums, column prefix sums in `[0,1]`, row sums `≤ c`.
    CSrm { rows: usize, cols: usize, c: i64 },
    /// Square matrices with the given margins and entries in `[-1,1]`.
    PmHull { row_sums: Vec<i64>, col_sums: Vec<i64> },
}

impl PolytopeSpec {
    pub fn c_srm(rows: usize, cols: usize, c: i64) -> Result<Self> {
        if c < 0 {
            return Err(Error::Precondition(format!("row-sum cap {c} is negative")));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyShape { rows, cols });
        }
        Ok(PolytopeSpec::CSrm { rows, cols, c })
    }

    pub fn pm_hull(row_sums: Vec<i64>, col_sums: Vec<i64>) -> Result<Self> {
        if row_sums.len() != col_sums.len() || row_sums.is_empty() {
            return Err(Error::Precondition(format!(
                "the ±1 hull needs square matrices, got {}x{}",
                row_sums.len(),
                col_sums.len()
            )));
        }
        Ok(PolytopeSpec::PmHull { row_sums, col_sums })
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            PolytopeSpec::CSrm { rows, cols, .. } => (*rows, *cols),
            PolytopeSpec::PmHull { row_sums, col_sums } => (row_sums.len(), col_sums.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

/// One constraint; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstraintKind {
    RowPrefixLower { row: usize, col: usize },
    ColumnPrefixLower { row: usize, col: usize },
    ColumnPrefixUpper { row: usize, col: usize },
    RowSumCap { row: usize },
    RowSum { row: usize },
    ColumnSum { col: usize },
    EntryLower { row: usize, col: usize },
    EntryUpper { row: usize, col: usize },
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstraintKind::RowPrefixLower { row, col } => write!(f, "row {row} prefix through column {col} ≥ 0"),
            ConstraintKind::ColumnPrefixLower { row, col } => {
                write!(f, "column {col} prefix through row {row} ≥ 0")
            }
            ConstraintKind::ColumnPrefixUpper { row, col } => {
                write!(f, "column {col} prefix through row {row} ≤ 1")
            }
            ConstraintKind::RowSumCap { row } => write!(f, "row {row} sum ≤ c"),
            ConstraintKind::RowSum { row } => write!(f, "row {row} sum"),
            ConstraintKind::ColumnSum { col } => write!(f, "column {col} sum"),
            ConstraintKind::EntryLower { row, col } => write!(f, "entry ({row},{col}) ≥ -1"),
            ConstraintKind::EntryUpper { row, col } => write!(f, "entry ({row},{col}) ≤ 1"),
        }
    }
}

/// `sum of x over cells  relation  rhs`, every coefficient being 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub cells: Vec<usize>,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    fn lhs(&self, x: &RationalMatrix) -> BigRational {
        self.cells.iter().fold(BigRational::zero(), |acc, &k| acc + &x.data[k])
    }

    fn holds(&self, lhs: &BigRational) -> bool {
        let rhs = rat(self.rhs);
        match self.relation {
            Relation::AtLeast => *lhs >= rhs,
            Relation::AtMost => *lhs <= rhs,
            Relation::Equal => *lhs == rhs,
        }
    }
}

/// The full linear system of a polytope, equalities included.
pub fn constraints(spec: &PolytopeSpec) -> Vec<Constraint> {
    let (m, n) = spec.shape();
    let idx = |i: usize, j: usize| i * n + j;
    let mut out = Vec::new();
    match spec {
        PolytopeSpec::CSrm { c, .. } => {
            for i in 0..m {
                for j in 0..n {
                    out.push(Constraint {
                        kind: ConstraintKind::RowPrefixLower { row: i + 1, col: j + 1 },
                        cells: (0..=j).map(|l| idx(i, l)).collect(),
                        relation: Relation::AtLeast,
                        rhs: 0,
                    });
                }
            }
            for j in 0..n {
                for i in 0..m {
                    let cells: Vec<usize> = (0..=i).map(|k| idx(k, j)).collect();
                    out.push(Constraint {
                        kind: ConstraintKind::ColumnPrefixLower { row: i + 1, col: j + 1 },
                        cells: cells.clone(),
                        relation: Relation::AtLeast,
                        rhs: 0,
                    });
                    out.push(Constraint {
                        kind: ConstraintKind::ColumnPrefixUpper { row: i + 1, col: j + 1 },
                        cells,
                        relation: Relation::AtMost,
                        rhs: 1,
                    });
                }
            }
            for i in 0..m {
                out.push(Constraint {
                    kind: ConstraintKind::RowSumCap { row: i + 1 },
                    cells: (0..n).map(|l| idx(i, l)).collect(),
                    relation: Relation::AtMost,
                    rhs: *c,
                });
            }
        }
        PolytopeSpec::PmHull { row_sums, col_sums } => {
            for (i, &r) in row_sums.iter().enumerate() {
                out.push(Constraint {
                    kind: ConstraintKind::RowSum { row: i + 1 },
                    cells: (0..n).map(|l| idx(i, l)).collect(),
                    relation: Relation::Equal,
                    rhs: r,
                });
            }
            for (j, &s) in col_sums.iter().enumerate() {
                out.push(Constraint {
                    kind: ConstraintKind::ColumnSum { col: j + 1 },
                    cells: (0..m).map(|k| idx(k, j)).collect(),
                    relation: Relation::Equal,
                    rhs: s,
                });
            }
            for i in 0..m {
                for j in 0..n {
                    for (kind, relation, rhs) in [
                        (ConstraintKind::EntryLower { row: i + 1, col: j + 1 }, Relation::AtLeast, -1),
                        (ConstraintKind::EntryUpper { row: i + 1, col: j + 1 }, Relation::AtMost, 1),
                    ] {
                        out.push(Constraint {
                            kind,
                            cells: vec![idx(i, j)],
                            relation,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeViolation {
    pub constraint: ConstraintKind,
    pub lhs: BigRational,
    pub rhs: i64,
}

impl fmt::Display for PolytopeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails: value {} against {}", self.constraint, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Outside(PolytopeViolation),
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside)
    }
}

fn check_shape(x: &RationalMatrix, spec: &PolytopeSpec) -> Result<()> {
    if x.shape() != spec.shape() {
        return Err(mismatch(x.shape(), spec.shape()));
    }
    Ok(())
}

/// Evaluates every constraint exactly, reporting the first that fails in
/// the order of [`constraints`].
pub fn polytope_contains(x: &RationalMatrix, spec: &PolytopeSpec) -> Result<Membership> {
    check_shape(x, spec)?;
    for con in constraints(spec) {
        let lhs = con.lhs(x);
        if !con.holds(&lhs) {
            return Ok(Membership::Outside(PolytopeViolation {
                constraint: con.kind,
                lhs,
                rhs: con.rhs,
            }));
        }
    }
    Ok(Membership::Inside)
}

pub fn pm_hull_contains(x: &RationalMatrix, row_sums: &[i64], col_sums: &[i64]) -> Result<bool> {
    let spec = PolytopeSpec::pm_hull(row_sums.to_vec(), col_sums.to_vec())?;
    Ok(polytope_contains(x, &spec)?.is_inside())
}

fn coefficient_row(con: &Constraint, vars: usize) -> Vec<BigRational> {
    let mut row = vec![BigRational::zero(); vars];
    for &k in &con.cells {
        row[k] += BigRational::one();
    }
    row
}

/// Row-reduces `rows` in place and returns the rank.
fn row_reduce(rows: &mut [Vec<BigRational>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for k in col..width {
                    let delta = &factor * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(&mut work)
}

/// The unique solution of `rows · x = rhs`, if the system is consistent and
/// of full column rank.
fn solve_unique(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let vars = rows.first()?.len();
    let mut aug: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let rank_aug = row_reduce(&mut aug);
    // a pivot in the last column means inconsistency
    if aug.iter().any(|r| r[..vars].iter().all(Zero::is_zero) && !r[vars].is_zero()) {
        return None;
    }
    if rank_aug != vars {
        return None;
    }
    Some((0..vars).map(|k| aug[k][vars].clone()).collect())
}

/// Is `x` a vertex: do the constraints tight at `x` have rank `m * n`?
pub fn is_vertex(x: &RationalMatrix, spec: &PolytopeSpec) -> Result<bool> {
    if let Membership::Outside(v) = polytope_contains(x, spec)? {
        return Err(Error::NotMember(v.to_string()));
    }
    let vars = x.rows() * x.cols();
    let tight: Vec<Vec<BigRational>> = constraints(spec)
        .iter()
        .filter(|con| con.lhs(x) == rat(con.rhs))
        .map(|con| coefficient_row(con, vars))
        .collect();
    Ok(rank(&tight) == vars)
}

fn for_each_subset(len: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for x in start..len {
            if len - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, len, k, cur, f);
            cur.pop();
        }
    }
    go(0, len, k, &mut Vec::new(), f);
}

/// Every vertex of the polytope, found by solving each choice of tight
/// inequalities together with all equalities.
pub fn enumerate_vertices(spec: &PolytopeSpec) -> Result<Vec<RationalMatrix>> {
    let (m, n) = spec.shape();
    let vars = m * n;
    if vars > VERTEX_SCAN_MAX_CELLS {
        return Err(Error::CapExceeded {
            cells: vars,
            cap: VERTEX_SCAN_MAX_CELLS,
        });
    }
    let cons = constraints(spec);
    let (eqs, ineqs): (Vec<&Constraint>, Vec<&Constraint>) =
        cons.iter().partition(|c| c.relation == Relation::Equal);
    let eq_rows: Vec<Vec<BigRational>> = eqs.iter().map(|c| coefficient_row(c, vars)).collect();
    let eq_rank = rank(&eq_rows);
    let mut found: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    for_each_subset(ineqs.len(), vars - eq_rank, &mut |pick| {
        let mut rows = eq_rows.clone();
        let mut rhs: Vec<BigRational> = eqs.iter().map(|c| rat(c.rhs)).collect();
        for &k in pick {
            rows.push(coefficient_row(ineqs[k], vars));
            rhs.push(rat(ineqs[k].rhs));
        }
        if let Some(sol) = solve_unique(&rows, &rhs) {
            found.insert(sol);
        }
    });
    let mut out = Vec::new();
    for sol in found {
        let x = RationalMatrix::new(m, n, sol)?;
        if polytope_contains(&x, spec)?.is_inside() {
            out.push(x);
        }
    }
    Ok(out)
}

/// Every matrix in `{-1,0,1}^{m x n}` satisfying the system.
pub fn integral_points(spec: &PolytopeSpec) -> Result<Vec<SignMatrix>> {
    let (m, n) = spec.shape();
    if m * n > SCAN_MAX_CELLS {
        return Err(Error::CapExceeded {
            cells: m * n,
            cap: SCAN_MAX_CELLS,
        });
    }
    let total = 3usize.pow((m * n) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let data: Vec<i8> = (0..m * n)
            .map(|_| {
                let v = (c % 3) as i8 - 1;
                c /= 3;
                v
            })
            .collect();
        let a = SignMatrix::new(m, n, data)?;
        if polytope_contains(&RationalMatrix::from_sign(&a), spec)?.is_inside() {
            out.push(a);
        }
    }
    out.sort_by_key(SignMatrix::column_major_key);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexScan {
    pub vertices: usize,
    pub all_integral: bool,
    /// The vertex set equals the set of integral points.
    pub equals_integral_points: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopeReport {
    pub rows: usize,
    pub cols: usize,
    pub c: i64,
    pub integral_points: usize,
    pub class_size: u64,
    /// Integral points coincide with the enumerated class of c-SRMs.
    pub matches_class: bool,
    pub all_vertices: bool,
    /// For `c ≥ n`: the class is the whole SRM class.
    pub equals_srm_class: Option<bool>,
    pub vertex_scan: Option<VertexScan>,
}

impl PolytopeReport {
    pub fn passed(&self) -> bool {
        self.matches_class
            && self.all_vertices
            && self.equals_srm_class.unwrap_or(true)
            && self.vertex_scan.as_ref().is_none_or(|s| s.all_integral && s.equals_integral_points)
    }
}

fn scan_vertices(spec: &PolytopeSpec, points: &[SignMatrix]) -> Result<Option<VertexScan>> {
    let (m, n) = spec.shape();
    if m * n > VERTEX_SCAN_MAX_CELLS {
        return Ok(None);
    }
    let vertices = enumerate_vertices(spec)?;
    let signs: Option<BTreeSet<SignMatrix>> = vertices.iter().map(RationalMatrix::to_sign).collect();
    let all_integral = signs.is_some();
    let equals = signs.is_some_and(|s| s == points.iter().cloned().collect());
    Ok(Some(VertexScan {
        vertices: vertices.len(),
        all_integral,
        equals_integral_points: equals,
    }))
}

/// Checks, for one `(m, n, c)`, that the integral points of the c-SRM system
/// are exactly the enumerated c-SRMs, that each is a vertex, and, when `m * n`
/// is small enough, that the polytope has no other vertex.
pub fn verify_polytope(m: usize, n: usize, c: i64) -> Result<PolytopeReport> {
    let spec = PolytopeSpec::c_srm(m, n, c)?;
    let points = integral_points(&spec)?;
    let filter = ClassFilter::with_c_bound(c);
    let class: Vec<SignMatrix> = crate::enumerate::enumerate_srms_capped(m, n, &filter, DEFAULT_MAX_CELLS)?
        .map(|s| s.into_matrix())
        .collect();
    let mut all_vertices = true;
    for a in &points {
        all_vertices &= is_vertex(&RationalMatrix::from_sign(a), &spec)?;
    }
    let equals_srm_class = if c >= n as i64 {
        Some(count_srms_capped(m, n, &ClassFilter::all(), DEFAULT_MAX_CELLS)? == class.len() as u64)
    } else {
        None
    };
    Ok(PolytopeReport {
        rows: m,
        cols: n,
        c,
        integral_points: points.len(),
        class_size: class.len() as u64,
        matches_class: points == class,
        all_vertices,
        equals_srm_class,
        vertex_scan: scan_vertices(&spec, &points)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PmHullReport {
    pub row_sums: Vec<i64>,
    pub col_sums: Vec<i64>,
    pub integral_points: usize,
    pub class_size: usize,
    pub matches_class: bool,
    pub vertex_scan: Option<VertexScan>,
}

impl PmHullReport {
    pub fn passed(&self) -> bool {
        self.matches_class && self.vertex_scan.as_ref().is_none_or(|s| s.all_integral)
    }
}

/// Integral points of the ±1 hull system against the enumerated class, and
/// integrality of every vertex when the size allows a full scan.
pub fn verify_pm_hull(row_sums: &[i64], col_sums: &[i64]) -> Result<PmHullReport> {
    let spec = PolytopeSpec::pm_hull(row_sums.to_vec(), col_sums.to_vec())?;
    let points = integral_points(&spec)?;
    let margins = MarginPair::new(row_sums.to_vec(), col_sums.to_vec());
    let mut class: Vec<SignMatrix> = enumerate_pm_class_capped(&margins, DEFAULT_MAX_CELLS)?.collect();
    class.sort_by_key(SignMatrix::column_major_key);
    let scan = scan_vertices(&spec, &points)?.map(|mut s| {
        // vertices are a subset of integral points here, not all of them
        s.equals_integral_points = s.all_integral;
        s
    });
    Ok(PmHullReport {
        row_sums: row_sums.to_vec(),
        col_sums: col_sums.to_vec(),
        integral_points: points.len(),
        class_size: class.len(),
        matches_class: points == class,
        vertex_scan: scan,
    })
}

/// Nonzero entries alternate in sign, starting with +1.
pub fn alternating_extreme_check(x: &[i8]) -> bool {
    let mut expect = 1;
    let mut seen = false;
    for &v in x {
        match v {
            0 => {}
            v if v == expect => {
                expect = -expect;
                seen = true;
            }
            _ => return false,
        }
    }
    seen
}

/// All nonzero vectors of length `n` whose nonzeros alternate starting with +1.
pub fn alternating_vectors(n: usize) -> Vec<Vec<i8>> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let v = (c % 3) as i8 - 1;
                    c /= 3;
                    v
                })
                .collect::<Vec<i8>>()
        })
        .filter(|x| alternating_extreme_check(x))
        .collect()
}

/// Is `x` a convex combination of the vectors in `others`? By Carathéodory it
/// suffices to try affinely independent subsets, where the weights are
/// unique.
pub fn in_convex_hull(x: &[i8], others: &[Vec<i8>]) -> bool {
    let n = x.len();
    let lift = |v: &[i8]| -> Vec<BigRational> {
        let mut out: Vec<BigRational> = v.iter().map(|&e| rat(e.into())).collect();
        out.push(BigRational::one());
        out
    };
    let target = lift(x);
    for k in 1..=(n + 1).min(others.len()) {
        let mut hit = false;
        for_each_subset(others.len(), k, &mut |pick| {
            if hit {
                return;
            }
            // columns are the lifted vectors; rows are coordinates
            let cols: Vec<Vec<BigRational>> = pick.iter().map(|&i| lift(&others[i])).collect();
            let rows: Vec<Vec<BigRational>> = (0..=n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            if let Some(w) = solve_unique(&rows, &target) {
                if w.iter().all(|l| !l.is_negative()) {
                    hit = true;
                }
            }
        });
        if hit {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[&str]]) -> RationalMatrix {
        RationalMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn membership_examples() {
        let spec = PolytopeSpec::c_srm(2, 2, 2).unwrap();
        let mid = q(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        assert!(polytope_contains(&mid, &spec).unwrap().is_inside());
        assert!(!is_vertex(&mid, &spec).unwrap());
        let bad = q(&[&["0", "-1"], &["0", "1"]]);
        match polytope_contains(&bad, &spec).unwrap() {
            Membership::Outside(v) => {
                assert_eq!(v.constraint, ConstraintKind::RowPrefixLower { row: 1, col: 2 });
            }
            Membership::Inside => panic!("accepted"),
        }
        let p = q(&[&["0", "1"], &["1", "-1"]]);
        assert!(is_vertex(&p, &spec).unwrap());
        let zero = q(&[&["0", "0"], &["0", "0"]]);
        assert!(is_vertex(&zero, &PolytopeSpec::c_srm(2, 2, 0).unwrap()).unwrap());
        assert!(matches!(is_vertex(&bad, &spec), Err(Error::NotMember(_))));
    }

    #[test]
    fn column_prefix_violation_is_reported() {
        let spec = PolytopeSpec::c_srm(2, 2, 2).unwrap();
        let x = q(&[&["0", "0"], &["0", "-1"]]);
        // the row prefix at (2,2) comes first in constraint order
        assert!(matches!(
            polytope_contains(&x, &spec).unwrap(),
            Membership::Outside(PolytopeViolation { constraint: ConstraintKind::RowPrefixLower { row: 2, col: 2 }, .. })
        ));
        let y = q(&[&["1", "0"], &["1", "0"]]);
        assert!(matches!(
            polytope_contains(&y, &spec).unwrap(),
            Membership::Outside(PolytopeViolation { constraint: ConstraintKind::ColumnPrefixUpper { row: 2, col: 1 }, .. })
        ));
    }

    #[test]
    fn alternation() {
        assert!(alternating_extreme_check(&[1, -1, 0, 1]));
        assert!(!alternating_extreme_check(&[-1, 1, 0, 0]));
        assert!(!alternating_extreme_check(&[1, 0, 1, -1]));
        assert!(!alternating_extreme_check(&[0, 0]));
        assert_eq!(alternating_vectors(4).len(), 15);
    }

    #[test]
    fn two_by_two_reports() {
        let r = verify_polytope(2, 2, 2).unwrap();
        assert_eq!(r.integral_points, 10);
        assert!(r.passed(), "{r:?}");
        let r1 = verify_polytope(2, 2, 1).unwrap();
        assert!(r1.passed(), "{r1:?}");
    }

    #[test]
    fn pm_hull_examples() {
        let x = q(&[&["3/2", "-1/2"], &["-1/2", "3/2"]]);
        assert!(!pm_hull_contains(&x, &[1, 1], &[1, 1]).unwrap());
        let y = q(&[&["1/2", "1/2"], &["1/2", "1/2"]]);
        assert!(pm_hull_contains(&y, &[1, 1], &[1, 1]).unwrap());
        assert!(pm_hull_contains(&y, &[1, 1, 0], &[1, 1]).is_err());
        assert!(verify_pm_hull(&[1, 1], &[1, 1]).unwrap().passed());
    }
}
