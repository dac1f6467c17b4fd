//! Generalized incidence matrices of digraphs with loops, and orderings that
//! turn them into SRMs.
//!
//! Vertices are `0..n` internally; text and display forms are 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::SignMatrix;
use crate::srm::{validate_srm, Srm};

/// A simple digraph together with a set of looped vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopedDigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    loops: Vec<usize>,
}

impl LoopedDigraph {
    /// Rejects self-pairs, out-of-range vertices and repeated edges.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, loops: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::build(vertex_count, edges, loops, false)
    }

    /// Like [`LoopedDigraph::new`] but keeps parallel edges.
    pub fn with_parallel_edges(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        Self::build(vertex_count, edges, loops, true)
    }

    fn build(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
        allow_parallel: bool,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidDigraph("no vertices".into()));
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidDigraph(format!(
                    "edge ({}, {}) leaves the vertex range 1..={vertex_count}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidDigraph(format!(
                    "edge ({}, {}) is a self-pair; use the loop set",
                    u + 1,
                    v + 1
                )));
            }
            if !seen.insert((u, v)) && !allow_parallel {
                return Err(Error::InvalidDigraph(format!("edge ({}, {}) repeated", u + 1, v + 1)));
            }
        }
        let loops: BTreeSet<usize> = loops.into_iter().collect();
        if let Some(&v) = loops.iter().find(|&&v| v >= vertex_count) {
            return Err(Error::InvalidDigraph(format!("loop vertex {} out of range", v + 1)));
        }
        Ok(LoopedDigraph {
            vertex_count,
            edges,
            loops: loops.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Looped vertices in increasing order.
    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.binary_search(&v).is_ok()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    /// Topological order by repeatedly removing the smallest-index source, or
    /// a directed cycle when none exists.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        let n = self.vertex_count;
        let mut indeg = vec![0usize; n];
        for &(_, v) in &self.edges {
            indeg[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &(a, b) in &self.edges {
                if a == u {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.insert(b);
                    }
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(self.find_cycle(&indeg))
        }
    }

    /// Walks backwards through vertices that still have unremoved in-edges.
    fn find_cycle(&self, indeg: &[usize]) -> Vec<usize> {
        let stuck = |v: usize| indeg[v] > 0;
        let start = (0..self.vertex_count).find(|&v| stuck(v)).expect("a vertex on a cycle");
        let mut walk = vec![start];
        let mut pos = vec![usize::MAX; self.vertex_count];
        pos[start] = 0;
        let mut cur = start;
        loop {
            let prev = self
                .edges
                .iter()
                .filter(|&&(a, b)| b == cur && stuck(a))
                .map(|&(a, _)| a)
                .min()
                .expect("stuck vertices have stuck predecessors");
            if pos[prev] != usize::MAX {
                let mut cycle: Vec<usize> = walk[pos[prev]..].to_vec();
                cycle.reverse();
                return cycle;
            }
            pos[prev] = walk.len();
            walk.push(prev);
            cur = prev;
        }
    }
}

impl fmt::Display for LoopedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.vertex_count)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        let loops: Vec<String> = self.loops.iter().map(|v| (v + 1).to_string()).collect();
        if loops.is_empty() {
            writeln!(f, "loops:")
        } else {
            writeln!(f, "loops: {}", loops.join(" "))
        }
    }
}

/// Why a digraph admits no SRM ordering. Vertices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Refusal {
    /// The digraph has a directed cycle.
    Cyclic { cycle: Vec<usize> },
    /// `d⁻(v) - d⁺(v) ≥ 2`.
    InDegreeExcess { vertex: usize, in_degree: usize, out_degree: usize },
    /// `d⁻(v) = d⁺(v) + 1` but `v` carries no loop.
    MissingLoop { vertex: usize },
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::Cyclic { cycle } => {
                let path: Vec<String> = cycle.iter().map(|v| format!("v{v}")).collect();
                write!(f, "condition (i) fails: directed cycle {} -> v{}", path.join(" -> "), cycle[0])
            }
            Refusal::InDegreeExcess {
                vertex,
                in_degree,
                out_degree,
            } => write!(
                f,
                "condition (ii) fails: v{vertex} has in-degree {in_degree} and out-degree {out_degree}"
            ),
            Refusal::MissingLoop { vertex } => {
                write!(f, "condition (ii) fails: v{vertex} has in-degree one above its out-degree but no loop")
            }
        }
    }
}

fn check_permutation(order: &[usize], len: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; len];
    if order.len() != len {
        return Err(Error::InvalidOrdering(format!("{what} order has {} items, expected {len}", order.len())));
    }
    for &x in order {
        if x >= len || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidOrdering(format!("{what} order is not a permutation of 1..={len}")));
        }
    }
    Ok(())
}

/// `M(S)`: row `r` is vertex `vertex_order[r]`; looped vertices give unit
/// columns first (in row order), then edge `edge_order[c]` gives a column
/// with `+1` at its tail and `-1` at its head.
pub fn generalized_incidence(d: &LoopedDigraph, vertex_order: &[usize], edge_order: &[usize]) -> Result<SignMatrix> {
    check_permutation(vertex_order, d.vertex_count, "vertex")?;
    check_permutation(edge_order, d.edges.len(), "edge")?;
    let mut row_of = vec![0; d.vertex_count];
    for (r, &v) in vertex_order.iter().enumerate() {
        row_of[v] = r;
    }
    let loop_rows: Vec<usize> = {
        let mut rows: Vec<usize> = d.loops.iter().map(|&v| row_of[v]).collect();
        rows.sort_unstable();
        rows
    };
    let cols = loop_rows.len() + d.edges.len();
    if cols == 0 {
        return Err(Error::EmptyShape {
            rows: d.vertex_count,
            cols,
        });
    }
    let mut out = SignMatrix::zeros_unchecked(d.vertex_count, cols);
    for (c, &r) in loop_rows.iter().enumerate() {
        out.set_unchecked(r, c, 1);
    }
    for (k, &e) in edge_order.iter().enumerate() {
        let (u, v) = d.edges[e];
        out.set_unchecked(row_of[u], loop_rows.len() + k, 1);
        out.set_unchecked(row_of[v], loop_rows.len() + k, -1);
    }
    Ok(out)
}

/// The first violated orderability condition, if any.
pub fn orderability_refusal(d: &LoopedDigraph) -> Result<Option<Refusal>> {
    if d.edges.is_empty() {
        return Err(Error::Edgeless);
    }
    if let Err(cycle) = d.topological_order() {
        return Ok(Some(Refusal::Cyclic {
            cycle: cycle.into_iter().map(|v| v + 1).collect(),
        }));
    }
    for v in 0..d.vertex_count {
        let (din, dout) = (d.in_degree(v), d.out_degree(v));
        if din >= dout + 2 {
            return Ok(Some(Refusal::InDegreeExcess {
                vertex: v + 1,
                in_degree: din,
                out_degree: dout,
            }));
        }
        if din == dout + 1 && !d.has_loop(v) {
            return Ok(Some(Refusal::MissingLoop { vertex: v + 1 }));
        }
    }
    Ok(None)
}

/// True iff some row and column reordering (loop columns first) makes the
/// generalized incidence matrix an SRM.
pub fn srm_orderable(d: &LoopedDigraph) -> Result<bool> {
    Ok(orderability_refusal(d)?.is_none())
}

/// Orders and the resulting SRM.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SrmOrdering {
    pub vertex_order: Vec<usize>,
    pub edge_order: Vec<usize>,
    pub matrix: Srm,
}

/// Builds an ordering by path peeling: rows follow a topological order; the
/// edge columns come in blocks, one per peeled path. Each block is a longest
/// path ending at the last (in row order) vertex with out-degree 0 and
/// in-degree 1, listed from its final edge backwards.
pub fn srm_ordering(d: &LoopedDigraph) -> Result<SrmOrdering> {
    if let Some(refusal) = orderability_refusal(d)? {
        return Err(Error::NotOrderable(refusal));
    }
    let vertex_order = d.topological_order().expect("acyclic");
    let n = d.vertex_count;
    let mut rank = vec![0; n];
    for (r, &v) in vertex_order.iter().enumerate() {
        rank[v] = r;
    }
    let mut alive = vec![true; d.edges.len()];
    let mut edge_order = Vec::with_capacity(d.edges.len());
    while alive.iter().any(|&a| a) {
        let deg = |v: usize, head: bool| {
            d.edges
                .iter()
                .zip(&alive)
                .filter(|&(&(a, b), &live)| live && if head { b == v } else { a == v })
                .count()
        };
        let terminal = vertex_order
            .iter()
            .rev()
            .copied()
            .find(|&v| deg(v, false) == 0 && deg(v, true) == 1)
            .ok_or_else(|| Error::Internal("no vertex with out-degree 0 and in-degree 1".into()))?;
        for e in longest_path_into(d, &alive, &vertex_order, terminal).into_iter().rev() {
            alive[e] = false;
            edge_order.push(e);
        }
    }
    let m = generalized_incidence(d, &vertex_order, &edge_order)?;
    let matrix = validate_srm(&m).map_err(|v| Error::Internal(format!("peeled ordering is not an SRM: {v}")))?;
    Ok(SrmOrdering {
        vertex_order,
        edge_order,
        matrix,
    })
}

/// Edge indices of a longest live path ending at `target`, in path order,
/// choosing the lexicographically smallest vertex sequence among ties.
fn longest_path_into(d: &LoopedDigraph, alive: &[bool], topo: &[usize], target: usize) -> Vec<usize> {
    let n = d.vertex_count;
    // dist[v]: edges on a longest live path v -> target
    let mut dist: Vec<Option<usize>> = vec![None; n];
    dist[target] = Some(0);
    for &v in topo.iter().rev() {
        for (e, &(a, b)) in d.edges.iter().enumerate() {
            if alive[e] && a == v {
                if let Some(db) = dist[b] {
                    dist[v] = Some(dist[v].map_or(db + 1, |dv: usize| dv.max(db + 1)));
                }
            }
        }
    }
    let best = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut cur = (0..n).find(|&v| dist[v] == Some(best)).expect("target reaches itself");
    let mut path = Vec::with_capacity(best);
    while cur != target {
        let need = dist[cur].expect("on path") - 1;
        let (e, next) = d
            .edges
            .iter()
            .enumerate()
            .filter(|&(e, &(a, b))| alive[e] && a == cur && dist[b] == Some(need))
            .map(|(e, &(_, b))| (e, b))
            .min_by_key(|&(_, b)| b)
            .expect("a successor on a longest path");
        path.push(e);
        cur = next;
    }
    path
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Searches every vertex and edge order for one giving an SRM.
pub fn exhaustive_srm_ordering(d: &LoopedDigraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut vertices: Vec<usize> = (0..d.vertex_count).collect();
    loop {
        let mut edges: Vec<usize> = (0..d.edges.len()).collect();
        loop {
            if let Ok(m) = generalized_incidence(d, &vertices, &edges) {
                if validate_srm(&m).is_ok() {
                    return Some((vertices, edges));
                }
            }
            if !next_permutation(&mut edges) {
                break;
            }
        }
        if !next_permutation(&mut vertices) {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_four() -> LoopedDigraph {
        LoopedDigraph::new(4, vec![(0, 1), (1, 2), (1, 3)], [2, 3]).unwrap()
    }

    #[test]
    fn example_four_matrix() {
        let d = example_four();
        let m = generalized_incidence(&d, &[0, 1, 2, 3], &[1, 0, 2]).unwrap();
        let expected = SignMatrix::from_rows(&[
            [0, 0, 0, 1, 0],
            [0, 0, 1, -1, 1],
            [1, 0, -1, 0, 0],
            [0, 1, 0, 0, -1],
        ])
        .unwrap();
        assert_eq!(m, expected);
        assert!(validate_srm(&m).is_ok());
    }

    #[test]
    fn example_four_orderable() {
        let d = example_four();
        assert!(srm_orderable(&d).unwrap());
        let o = srm_ordering(&d).unwrap();
        assert_eq!(o.vertex_order, vec![0, 1, 2, 3]);
        assert_eq!(o.matrix.cols(), 5);
    }

    #[test]
    fn single_edge() {
        let bare = LoopedDigraph::new(2, vec![(0, 1)], []).unwrap();
        assert_eq!(
            generalized_incidence(&bare, &[0, 1], &[0]).unwrap(),
            SignMatrix::from_rows(&[[1], [-1]]).unwrap()
        );
        assert_eq!(
            orderability_refusal(&bare).unwrap(),
            Some(Refusal::MissingLoop { vertex: 2 })
        );
        let looped = LoopedDigraph::new(2, vec![(0, 1)], [1]).unwrap();
        let o = srm_ordering(&looped).unwrap();
        assert_eq!(o.matrix.to_rows(), vec![vec![0, 1], vec![1, -1]]);
    }

    #[test]
    fn path_and_cycle() {
        let path = LoopedDigraph::new(3, vec![(0, 1), (1, 2)], [2]).unwrap();
        let o = srm_ordering(&path).unwrap();
        assert_eq!(o.matrix.shape(), (3, 3));
        assert_eq!(o.edge_order, vec![1, 0]);
        let cyc = LoopedDigraph::new(2, vec![(0, 1), (1, 0)], [0, 1]).unwrap();
        assert!(matches!(
            orderability_refusal(&cyc).unwrap(),
            Some(Refusal::Cyclic { .. })
        ));
        assert!(matches!(srm_ordering(&cyc), Err(Error::NotOrderable(_))));
    }

    #[test]
    fn rejects_malformed() {
        assert!(LoopedDigraph::new(2, vec![(0, 0)], []).is_err());
        assert!(LoopedDigraph::new(2, vec![(0, 1), (0, 1)], []).is_err());
        assert!(LoopedDigraph::with_parallel_edges(2, vec![(0, 1), (0, 1)], []).is_ok());
        let edgeless = LoopedDigraph::new(2, vec![], [0]).unwrap();
        assert_eq!(srm_orderable(&edgeless), Err(Error::Edgeless));
    }

    #[test]
    fn in_degree_excess() {
        let d = LoopedDigraph::new(3, vec![(0, 2), (1, 2)], [0, 1, 2]).unwrap();
        assert_eq!(
            orderability_refusal(&d).unwrap(),
            Some(Refusal::InDegreeExcess {
                vertex: 3,
                in_degree: 2,
                out_degree: 0
            })
        );
        assert!(exhaustive_srm_ordering(&d).is_none());
    }
}
