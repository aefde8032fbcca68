//! Ferrers matrices, the associated graph `H(B)` and Ferrers dimension two.

use crate::bipartite::{is_bipartite, TwoColoring};
use crate::decision::Decision;
use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::{BinaryMatrix, Permutation};
use crate::order_search::{OrderProblem, Placement};

/// True iff rows `i, k` and columns `j, l` carry a 2x2 permutation matrix.
fn is_permutation_block(m: &BinaryMatrix, i: usize, k: usize, j: usize, l: usize) -> bool {
    m.get(i, j) == m.get(k, l) && m.get(i, l) == m.get(k, j) && m.get(i, j) != m.get(i, l)
}

fn has_permutation_block(m: &BinaryMatrix) -> bool {
    let (r, c) = m.shape();
    (0..r).any(|i| {
        (i + 1..r).any(|k| (0..c).any(|j| (j + 1..c).any(|l| is_permutation_block(m, i, k, j, l))))
    })
}

fn rows_form_chain(m: &BinaryMatrix) -> bool {
    let r = m.rows();
    let subset = |a: usize, b: usize| m.row(a).iter().zip(m.row(b)).all(|(&x, &y)| !x || y);
    (0..r).all(|a| (a + 1..r).all(|b| subset(a, b) || subset(b, a)))
}

/// No 2x2 permutation submatrix. Asserts agreement with the row-inclusion
/// chain characterization.
pub fn is_ferrers(m: &BinaryMatrix) -> bool {
    let ferrers = !has_permutation_block(m);
    assert_eq!(ferrers, rows_form_chain(m), "Ferrers characterizations disagree on\n{m}");
    ferrers
}

/// The graph on the zeros of a matrix; two zeros are adjacent when they are
/// the zeros of a 2x2 permutation submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedGraph {
    /// Zero cells in row-major order; node `k` is `cells[k]`.
    pub cells: Vec<(usize, usize)>,
    pub graph: Graph,
}

pub fn associated_graph(m: &BinaryMatrix) -> AssociatedGraph {
    let cells = m.zero_cells();
    let mut graph = Graph::with_labels(
        cells.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect(),
    );
    for a in 0..cells.len() {
        let (i, j) = cells[a];
        for b in a + 1..cells.len() {
            let (k, l) = cells[b];
            if i != k && j != l && m.get(i, l) && m.get(k, j) {
                graph.add_edge(a, b);
            }
        }
    }
    AssociatedGraph { cells, graph }
}

/// Independent row and column orders; row `i` of the arranged matrix is
/// row `rows[i]` of the original.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    pub rows: Permutation,
    pub cols: Permutation,
}

impl Arrangement {
    pub fn identity(rows: usize, cols: usize) -> Self {
        Self {
            rows: Permutation::identity(rows),
            cols: Permutation::identity(cols),
        }
    }

    pub fn apply(&self, m: &BinaryMatrix) -> Result<BinaryMatrix> {
        m.permuted(&self.rows, &self.cols)
    }
}

/// First zero (row-major) with a 1 somewhere below and a 1 somewhere to its
/// right, if any.
pub fn staircase_violation(m: &BinaryMatrix) -> Option<(usize, usize)> {
    let (r, c) = m.shape();
    // last_right[i]: column of the last 1 in row i; last_below[j]: row of the last 1 in column j.
    let last_right: Vec<Option<usize>> = (0..r).map(|i| m.last_one_in_row(i)).collect();
    let last_below: Vec<Option<usize>> = (0..c).map(|j| m.last_one_in_col(j)).collect();
    (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).find(|&(i, j)| {
        !m.get(i, j)
            && last_right[i].is_some_and(|l| l > j)
            && last_below[j].is_some_and(|k| k > i)
    })
}

pub fn is_staircase(m: &BinaryMatrix) -> bool {
    staircase_violation(m).is_none()
}

pub fn check_staircase(m: &BinaryMatrix, a: &Arrangement) -> Result<bool> {
    Ok(is_staircase(&a.apply(m)?))
}

/// Two Ferrers matrices whose entrywise AND is the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersCover {
    pub f1: BinaryMatrix,
    pub f2: BinaryMatrix,
    pub union_complete: bool,
}

impl FerrersCover {
    pub fn verify(&self, m: &BinaryMatrix) -> bool {
        self.f1.shape() == m.shape()
            && self.f2.shape() == m.shape()
            && is_ferrers(&self.f1)
            && is_ferrers(&self.f2)
            && self.f1.and(&self.f2) == *m
            && self.union_complete == self.f1.or(&self.f2).is_all_ones()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fdim2Certificate {
    pub arrangement: Arrangement,
    pub cover: FerrersCover,
}

impl Fdim2Certificate {
    pub fn verify(&self, m: &BinaryMatrix) -> bool {
        check_staircase(m, &self.arrangement).unwrap_or(false) && self.cover.verify(m)
    }
}

/// An odd cycle of zero cells in `H(B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle {
    pub cells: Vec<(usize, usize)>,
}

impl OddCycle {
    pub fn verify(&self, m: &BinaryMatrix) -> bool {
        let n = self.cells.len();
        n % 2 == 1
            && self.cells.iter().all(|&(i, j)| i < m.rows() && j < m.cols() && !m.get(i, j))
            && (0..n).all(|t| {
                let (i, j) = self.cells[t];
                let (k, l) = self.cells[(t + 1) % n];
                i != k && j != l && m.get(i, l) && m.get(k, j)
            })
    }
}

/// Search outcome for `fdim <= 2` on a matrix, with rows placed before columns.
pub(crate) fn bigraph_placement(m: &BinaryMatrix, positive: bool) -> Option<Placement> {
    OrderProblem::for_matrix(m, positive).solve()
}

/// Rows and columns each sorted by left endpoint, ties by index.
pub(crate) fn arrangement_from_placement(m: &BinaryMatrix, p: &Placement) -> Arrangement {
    let r = m.rows();
    let mut rows: Vec<usize> = (0..r).collect();
    rows.sort_by_key(|&x| (p.l[x], x));
    let mut cols: Vec<usize> = (0..m.cols()).collect();
    cols.sort_by_key(|&y| (p.l[r + y], y));
    Arrangement {
        rows: Permutation::new(rows).unwrap(),
        cols: Permutation::new(cols).unwrap(),
    }
}

/// `f1 = [l_x <= r_y]`, `f2 = [l_y <= r_x]`.
pub(crate) fn cover_from_placement(m: &BinaryMatrix, p: &Placement) -> FerrersCover {
    let r = m.rows();
    let f1 = BinaryMatrix::from_fn(r, m.cols(), |x, y| p.l[x] <= p.r[r + y]);
    let f2 = BinaryMatrix::from_fn(r, m.cols(), |x, y| p.l[r + y] <= p.r[x]);
    let union_complete = f1.or(&f2).is_all_ones();
    FerrersCover { f1, f2, union_complete }
}

/// Decides `fdim <= 2` by bipartiteness of `H(B)`. A YES carries a
/// staircase arrangement and a Ferrers cover.
pub fn fdim_at_most_2(m: &BinaryMatrix) -> Decision<Fdim2Certificate, OddCycle> {
    let h = associated_graph(m);
    if let TwoColoring::OddCycle(cycle) = is_bipartite(&h.graph) {
        let w = OddCycle {
            cells: cycle.iter().map(|&k| h.cells[k]).collect(),
        };
        debug_assert!(w.verify(m));
        return Decision::No(w);
    }
    let p = bigraph_placement(m, false)
        .expect("H(B) is bipartite but no staircase order exists");
    let cert = Fdim2Certificate {
        arrangement: arrangement_from_placement(m, &p),
        cover: ferrers_cover(m, false).unwrap_or_else(|| cover_from_placement(m, &p)),
    };
    assert!(cert.verify(m), "invalid fdim-2 certificate for\n{m}");
    Decision::Yes(cert)
}

pub fn find_staircase(m: &BinaryMatrix) -> Option<Arrangement> {
    let a = arrangement_from_placement(m, &bigraph_placement(m, false)?);
    assert!(check_staircase(m, &a).unwrap());
    Some(a)
}

/// Zero cells grouped into the connected components of `H(B)` with a base
/// 2-coloring, or `None` when `H(B)` has an odd cycle.
fn colored_components(m: &BinaryMatrix) -> Option<(Vec<(usize, usize)>, Vec<usize>, Vec<bool>)> {
    let h = associated_graph(m);
    let TwoColoring::Bipartite(color) = is_bipartite(&h.graph) else {
        return None;
    };
    let n = h.cells.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in h.graph.neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = next;
                    stack.push(u);
                }
            }
        }
        next += 1;
    }
    Some((h.cells, comp, color))
}

/// Ferrers cover from a 2-coloring of `H(B)`: zeros of class 1 stay zero in
/// `f1` and become 1 in `f2`, class 2 the other way round. Components are
/// flipped by backtracking until both parts are Ferrers.
///
/// Such covers always have a complete union, so they exist only for interval
/// bigraphs. Without `require_complete_union` the search falls back to a cover
/// read off a staircase order, which exists whenever `fdim <= 2`.
pub fn ferrers_cover(m: &BinaryMatrix, require_complete_union: bool) -> Option<FerrersCover> {
    let (cells, comp, base) = colored_components(m)?;
    if let Some(cover) = complete_union_cover(m, &cells, &comp, &base) {
        debug_assert!(cover.verify(m));
        return Some(cover);
    }
    if require_complete_union {
        return None;
    }
    let p = bigraph_placement(m, false)?;
    let cover = cover_from_placement(m, &p);
    debug_assert!(cover.verify(m));
    Some(cover)
}

fn complete_union_cover(
    m: &BinaryMatrix,
    cells: &[(usize, usize)],
    comp: &[usize],
    base: &[bool],
) -> Option<FerrersCover> {
    let (r, c) = m.shape();
    let ncomp = comp.iter().map(|&k| k + 1).max().unwrap_or(0);
    let mut members = vec![Vec::new(); ncomp];
    for (k, &cp) in comp.iter().enumerate() {
        members[cp].push(k);
    }
    // state per cell: Some(true) = 1 in f1 (zero of f2), Some(false) = 0 in f1.
    let mut f1_bit: Vec<Option<bool>> = (0..r * c)
        .map(|p| if m.get(p / c, p % c) { Some(true) } else { None })
        .collect();

    fn blocks_ok(
        f: &[Option<bool>],
        c: usize,
        r: usize,
        cells: &[usize],
        cells_pos: &[(usize, usize)],
        invert: bool,
        m: &BinaryMatrix,
    ) -> bool {
        let val = |i: usize, j: usize| -> Option<bool> {
            if m.get(i, j) {
                Some(true)
            } else {
                f[i * c + j].map(|b| b ^ invert)
            }
        };
        for &k in cells {
            let (i, j) = cells_pos[k];
            for k2 in 0..r {
                if k2 == i {
                    continue;
                }
                for l in 0..c {
                    if l == j {
                        continue;
                    }
                    let (a, b, d, e) = (val(i, j), val(i, l), val(k2, j), val(k2, l));
                    if let (Some(a), Some(b), Some(d), Some(e)) = (a, b, d, e) {
                        if a == e && b == d && a != b {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn go(
        t: usize,
        members: &[Vec<usize>],
        cells: &[(usize, usize)],
        base: &[bool],
        f1_bit: &mut Vec<Option<bool>>,
        r: usize,
        c: usize,
        m: &BinaryMatrix,
    ) -> bool {
        if t == members.len() {
            return true;
        }
        for flip in [false, true] {
            for &k in &members[t] {
                let (i, j) = cells[k];
                f1_bit[i * c + j] = Some(base[k] ^ flip);
            }
            if blocks_ok(f1_bit, c, r, &members[t], cells, false, m)
                && blocks_ok(f1_bit, c, r, &members[t], cells, true, m)
                && go(t + 1, members, cells, base, f1_bit, r, c, m)
            {
                return true;
            }
        }
        for &k in &members[t] {
            let (i, j) = cells[k];
            f1_bit[i * c + j] = None;
        }
        false
    }

    if !go(0, &members, cells, base, &mut f1_bit, r, c, m) {
        return None;
    }
    let f1 = BinaryMatrix::from_fn(r, c, |i, j| f1_bit[i * c + j].unwrap());
    let f2 = BinaryMatrix::from_fn(r, c, |i, j| m.get(i, j) || !f1_bit[i * c + j].unwrap());
    Some(FerrersCover {
        union_complete: f1.or(&f2).is_all_ones(),
        f1,
        f2,
    })
}
