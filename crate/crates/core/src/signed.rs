//! Signed intervals and the graphs they realize.
//!
//! `[l, r]` is positive when `l <= r` and negative otherwise. Two intervals
//! are adjacent iff `l_u <= r_v` and `l_v <= r_u`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ferrers::staircase_violation;
use crate::graph::{Bigraph, Graph};
use crate::matrix::BinaryMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedInterval {
    pub l: i64,
    pub r: i64,
}

impl SignedInterval {
    pub fn new(l: i64, r: i64) -> Self {
        Self { l, r }
    }

    pub fn is_positive(&self) -> bool {
        self.l <= self.r
    }

    pub fn sign(&self) -> Sign {
        if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for SignedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]{}", self.l, self.r, self.sign())
    }
}

/// Negative `[a, b]` sits inside positive `p` when `[b, a]` does.
fn reversed_within(neg: SignedInterval, pos: SignedInterval) -> bool {
    pos.l <= neg.r && neg.l <= pos.r
}

/// Signed adjacency. The closed form is checked against the case split:
/// two positives meet, a negative lies inside a positive, two negatives never.
pub fn adjacent(a: SignedInterval, b: SignedInterval) -> bool {
    let closed = a.l <= b.r && b.l <= a.r;
    debug_assert_eq!(
        closed,
        match (a.is_positive(), b.is_positive()) {
            (true, true) => a.l.max(b.l) <= a.r.min(b.r),
            (false, true) => reversed_within(a, b),
            (true, false) => reversed_within(b, a),
            (false, false) => false,
        }
    );
    closed
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepresentationKind {
    /// Every pair of vertices is compared.
    Graph,
    /// The first `nx` intervals belong to `X`, the rest to `Y`; only cross
    /// pairs are compared.
    Bigraph { nx: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    kind: RepresentationKind,
    labels: Vec<String>,
    intervals: Vec<SignedInterval>,
}

impl Representation {
    pub fn graph(labels: Vec<String>, intervals: Vec<SignedInterval>) -> Self {
        assert_eq!(labels.len(), intervals.len());
        Self {
            kind: RepresentationKind::Graph,
            labels,
            intervals,
        }
    }

    /// Labels are taken as given; the usual convention is `x1.., y1..`.
    pub fn bigraph(
        x: Vec<SignedInterval>,
        y: Vec<SignedInterval>,
        x_labels: Vec<String>,
        y_labels: Vec<String>,
    ) -> Self {
        assert_eq!(x.len(), x_labels.len());
        assert_eq!(y.len(), y_labels.len());
        let nx = x.len();
        Self {
            kind: RepresentationKind::Bigraph { nx },
            labels: x_labels.into_iter().chain(y_labels).collect(),
            intervals: x.into_iter().chain(y).collect(),
        }
    }

    pub fn kind(&self) -> RepresentationKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn intervals(&self) -> &[SignedInterval] {
        &self.intervals
    }

    pub fn is_all_positive(&self) -> bool {
        self.intervals.iter().all(|i| i.is_positive())
    }

    fn compared(&self, u: usize, v: usize) -> bool {
        match self.kind {
            RepresentationKind::Graph => u != v,
            RepresentationKind::Bigraph { nx } => (u < nx) != (v < nx),
        }
    }

    /// The realized graph; loops carry the signs.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::with_labels(self.labels.clone());
        for u in 0..self.len() {
            for v in u + 1..self.len() {
                if self.compared(u, v) && adjacent(self.intervals[u], self.intervals[v]) {
                    g.add_edge(u, v);
                }
            }
        }
        g.set_loops(Some(self.intervals.iter().map(|i| i.is_positive()).collect()));
        g
    }

    /// Biadjacency matrix of a bigraph representation.
    pub fn to_matrix(&self) -> Option<BinaryMatrix> {
        let RepresentationKind::Bigraph { nx } = self.kind else {
            return None;
        };
        let ny = self.len() - nx;
        Some(BinaryMatrix::from_fn(nx, ny, |x, y| {
            adjacent(self.intervals[x], self.intervals[nx + y])
        }))
    }

    pub fn to_bigraph(&self) -> Option<Bigraph> {
        let RepresentationKind::Bigraph { nx } = self.kind else {
            return None;
        };
        let m = self.to_matrix()?;
        let mut b = Bigraph::with_labels(
            self.labels[..nx].to_vec(),
            self.labels[nx..].to_vec(),
        );
        for (x, y) in crate::graph::matrix_to_bigraph(&m).edges() {
            b.add_edge(x, y);
        }
        Some(b)
    }

    /// Smallest endpoints `>= 1` preserving every comparison `l_u <= r_v`
    /// that matters: compared pairs plus each interval's own sign.
    pub fn compacted(&self) -> Self {
        let n = self.len();
        // Variables: 2v is l_v, 2v+1 is r_v. Constraint (a, b, w): x_a >= x_b + w.
        let mut cons = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && !self.compared(u, v) {
                    continue;
                }
                let (lu, rv) = (self.intervals[u].l, self.intervals[v].r);
                if lu <= rv {
                    cons.push((2 * v + 1, 2 * u, 0));
                } else {
                    cons.push((2 * u, 2 * v + 1, 1));
                }
            }
        }
        let mut x = vec![1i64; 2 * n];
        loop {
            let mut changed = false;
            for &(a, b, w) in &cons {
                if x[a] < x[b] + w {
                    x[a] = x[b] + w;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let intervals = (0..n)
            .map(|v| SignedInterval::new(x[2 * v], x[2 * v + 1]))
            .collect();
        let out = Self {
            kind: self.kind,
            labels: self.labels.clone(),
            intervals,
        };
        debug_assert!(out.to_graph().same_structure(&self.to_graph()));
        out
    }
}

/// Default labels for bigraph representations.
pub fn side_labels(b: &Bigraph) -> (Vec<String>, Vec<String>) {
    (
        b.x_labels().iter().map(|l| format!("x{l}")).collect(),
        b.y_labels().iter().map(|l| format!("y{l}")).collect(),
    )
}

/// Row `i` becomes `[i, k]` with `k` the column of its last 1 (0 if none),
/// column `j` becomes `[j, k]` with `k` the row of its last 1. Requires the
/// staircase condition; the result is checked against `m`.
pub fn build_representation_bigraph(m: &BinaryMatrix) -> Result<Representation> {
    if let Some((row, col)) = staircase_violation(m) {
        return Err(Error::NotStaircase { row, col });
    }
    let x = (0..m.rows())
        .map(|i| SignedInterval::new(i as i64 + 1, m.last_one_in_row(i).map_or(0, |k| k as i64 + 1)))
        .collect();
    let y = (0..m.cols())
        .map(|j| SignedInterval::new(j as i64 + 1, m.last_one_in_col(j).map_or(0, |k| k as i64 + 1)))
        .collect();
    let b = crate::graph::matrix_to_bigraph(m);
    let (xl, yl) = side_labels(&b);
    let rep = Representation::bigraph(x, y, xl, yl);
    if rep.to_matrix().as_ref() != Some(m) {
        return Err(Error::RoundTrip("bigraph matrix differs".into()));
    }
    Ok(rep)
}

/// Symmetric staircase matrix to a graph representation; the diagonal fixes
/// the signs.
pub fn build_representation_graph(m: &BinaryMatrix) -> Result<Representation> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if let Some((row, col)) = staircase_violation(m) {
        return Err(Error::NotStaircase { row, col });
    }
    let n = m.rows();
    let intervals = (0..n)
        .map(|i| SignedInterval::new(i as i64 + 1, m.last_one_in_row(i).map_or(0, |k| k as i64 + 1)))
        .collect();
    let rep = Representation::graph((1..=n).map(|i| i.to_string()).collect(), intervals);
    let g = rep.to_graph();
    let diag: Vec<bool> = (0..n).map(|i| m.get(i, i)).collect();
    if g.adjacency_matrix(&diag) != *m || g.loops() != Some(&diag[..]) {
        return Err(Error::RoundTrip("adjacency matrix differs".into()));
    }
    Ok(rep)
}

/// Checks that `rep` realizes `g` up to the labels, including loops when
/// `g` declares them.
pub fn realizes_graph(rep: &Representation, g: &Graph) -> bool {
    if rep.kind() != RepresentationKind::Graph || rep.len() != g.n() {
        return false;
    }
    let h = rep.to_graph();
    let edges_ok = (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(u, v)));
    edges_ok && g.loops().is_none_or(|l| Some(l) == h.loops())
}

pub fn realizes_bigraph(rep: &Representation, b: &Bigraph) -> bool {
    rep.kind() == (RepresentationKind::Bigraph { nx: b.nx() })
        && rep.to_matrix().as_ref() == Some(b.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(l: i64, r: i64) -> SignedInterval {
        SignedInterval::new(l, r)
    }

    #[test]
    fn adjacency_cases() {
        assert!(adjacent(iv(1, 3), iv(3, 5)));
        assert!(!adjacent(iv(1, 2), iv(3, 5)));
        assert!(adjacent(iv(3, 2), iv(1, 5)));
        assert!(!adjacent(iv(6, 2), iv(1, 5)));
        assert!(!adjacent(iv(3, 2), iv(5, 4)));
    }

    #[test]
    fn staircase_rows_and_columns() {
        let m = BinaryMatrix::from_rows(&[[1, 1, 0], [1, 0, 0], [0, 0, 0]]);
        let rep = build_representation_bigraph(&m).unwrap();
        let iv: Vec<_> = rep.intervals().to_vec();
        assert_eq!(iv[0], SignedInterval::new(1, 2));
        assert_eq!(iv[1], SignedInterval::new(2, 1));
        assert_eq!(iv[2], SignedInterval::new(3, 0));
        assert_eq!(iv[3], SignedInterval::new(1, 2));
        assert_eq!(iv[4], SignedInterval::new(2, 1));
    }

    #[test]
    fn non_staircase_is_rejected() {
        let m = BinaryMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(
            build_representation_bigraph(&m),
            Err(Error::NotStaircase { row: 0, col: 0 })
        );
    }

    #[test]
    fn compaction_collapses_clique() {
        let rep = Representation::graph(
            vec!["a".into(), "b".into(), "c".into()],
            vec![iv(1, 9), iv(2, 7), iv(3, 8)],
        );
        assert!(rep.compacted().intervals().iter().all(|&i| i == iv(1, 1)));
    }
}
