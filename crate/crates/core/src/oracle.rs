//! Brute-force reference deciders.
//!
//! Deliberately plain and independent of the fast paths: they only share the
//! data types, so a disagreement points at a bug rather than a shared blind spot.

use crate::error::{Error, Result};
use crate::ferrers::Arrangement;
use crate::graph::{Bigraph, Graph};
use crate::matrix::{BinaryMatrix, Permutation};
use crate::signed::{Representation, SignedInterval};

pub const STAIRCASE_CAP: usize = 7;
pub const SIGNED_BIGRAPH_CAP: usize = 8;
pub const COTT_GRID_CAP: usize = 6;
pub const COTT_CAP: usize = 7;
pub const INTERVAL_BIGRAPH_CAP: usize = 6;

fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// No zero with a 1 below it and a 1 to its right, under the given orders.
fn staircase_under(m: &BinaryMatrix, rows: &[usize], cols: &[usize]) -> bool {
    for i in 0..rows.len() {
        for j in 0..cols.len() {
            if m.get(rows[i], cols[j]) {
                continue;
            }
            let right = (j + 1..cols.len()).any(|l| m.get(rows[i], cols[l]));
            let below = (i + 1..rows.len()).any(|k| m.get(rows[k], cols[j]));
            if right && below {
                return false;
            }
        }
    }
    true
}

/// First staircase arrangement in lexicographic order (rows, then columns).
pub fn oracle_staircase(m: &BinaryMatrix) -> Result<Option<Arrangement>> {
    cap("matrix rows", m.rows(), STAIRCASE_CAP)?;
    cap("matrix columns", m.cols(), STAIRCASE_CAP)?;
    let col_perms = all_permutations(m.cols());
    for rows in all_permutations(m.rows()) {
        for cols in &col_perms {
            if staircase_under(m, &rows, cols) {
                return Ok(Some(Arrangement {
                    rows: Permutation::new(rows).unwrap(),
                    cols: Permutation::new(cols.clone()).unwrap(),
                }));
            }
        }
    }
    Ok(None)
}

fn meets(a: (i64, i64), b: (i64, i64)) -> bool {
    a.0 <= b.1 && b.0 <= a.1
}

/// Exhaustive over endpoints in `0..=|X|+|Y|`, vertices assigned in the order
/// `x1, y1, x2, y2, ..` and each pair checked once both ends are set.
pub fn oracle_signed_interval_bigraph(b: &Bigraph) -> Result<Option<Representation>> {
    let (nx, ny) = (b.nx(), b.ny());
    let n = nx + ny;
    cap("vertex count", n, SIGNED_BIGRAPH_CAP)?;
    let mut order = Vec::new();
    for k in 0..nx.max(ny) {
        if k < nx {
            order.push(k);
        }
        if k < ny {
            order.push(nx + k);
        }
    }
    let related = |u: usize, v: usize| -> Option<bool> {
        match (u < nx, v < nx) {
            (true, false) => Some(b.has_edge(u, v - nx)),
            (false, true) => Some(b.has_edge(v, u - nx)),
            _ => None,
        }
    };
    let found = grid_search(n, n as i64, &order, &related)?;
    Ok(found.map(|iv| {
        let iv: Vec<SignedInterval> = iv.into_iter().map(|(l, r)| SignedInterval::new(l, r)).collect();
        Representation::bigraph(
            iv[..nx].to_vec(),
            iv[nx..].to_vec(),
            b.x_labels().iter().map(|l| format!("x{l}")).collect(),
            b.y_labels().iter().map(|l| format!("y{l}")).collect(),
        )
    }))
}

/// Backtracking over `(l, r)` in `0..=top` for each vertex in `order`.
/// `related(u, v)` says whether the pair must meet, or `None` if unconstrained.
fn grid_search(
    n: usize,
    top: i64,
    order: &[usize],
    related: &dyn Fn(usize, usize) -> Option<bool>,
) -> Result<Option<Vec<(i64, i64)>>> {
    fn go(
        k: usize,
        top: i64,
        order: &[usize],
        related: &dyn Fn(usize, usize) -> Option<bool>,
        iv: &mut Vec<(i64, i64)>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for l in 0..=top {
            for r in 0..=top {
                iv[v] = (l, r);
                let ok = order[..k]
                    .iter()
                    .all(|&u| related(u, v).is_none_or(|want| meets(iv[u], iv[v]) == want));
                if ok && go(k + 1, top, order, related, iv) {
                    return true;
                }
            }
        }
        false
    }
    let mut iv = vec![(0, 0); n];
    Ok(go(0, top, order, related, &mut iv).then_some(iv))
}

/// Signed interval graph by grid search up to six vertices, by every vertex
/// order and diagonal at seven.
pub fn oracle_cott(g: &Graph) -> Result<Option<Representation>> {
    let n = g.n();
    cap("vertex count", n, COTT_CAP)?;
    let iv = if n <= COTT_GRID_CAP {
        let order: Vec<usize> = (0..n).collect();
        let related = |u: usize, v: usize| Some(g.has_edge(u, v));
        grid_search(n, n as i64, &order, &related)?
    } else {
        order_and_diagonal(g)
    };
    Ok(iv.map(|iv| {
        Representation::graph(
            g.labels().to_vec(),
            iv.into_iter().map(|(l, r)| SignedInterval::new(l, r)).collect(),
        )
    }))
}

/// Every vertex order and diagonal; a staircase symmetric arrangement gives
/// vertex at position `i` the interval `[i, k]`, `k` its last 1 (0 if none).
fn order_and_diagonal(g: &Graph) -> Option<Vec<(i64, i64)>> {
    let n = g.n();
    for perm in all_permutations(n) {
        for d in 0..1u32 << n {
            let m = BinaryMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    d >> perm[i] & 1 == 1
                } else {
                    g.has_edge(perm[i], perm[j])
                }
            });
            let id: Vec<usize> = (0..n).collect();
            if !staircase_under(&m, &id, &id) {
                continue;
            }
            let mut iv = vec![(0, 0); n];
            for i in 0..n {
                let last = (0..n).rev().find(|&j| m.get(i, j)).map_or(0, |j| j as i64 + 1);
                iv[perm[i]] = (i as i64 + 1, last);
            }
            let ok = (0..n).all(|u| (u + 1..n).all(|v| meets(iv[u], iv[v]) == g.has_edge(u, v)));
            if ok {
                return Some(iv);
            }
        }
    }
    None
}

/// Every row and column order, each tried with every choice of `R` suffixes.
pub fn oracle_interval_bigraph(b: &Bigraph) -> Result<bool> {
    cap("bigraph side", b.nx().max(b.ny()), INTERVAL_BIGRAPH_CAP)?;
    let m = b.matrix();
    let col_perms = all_permutations(m.cols());
    for rows in all_permutations(m.rows()) {
        for cols in &col_perms {
            let a = BinaryMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(rows[i], cols[j]));
            if has_zero_partition(&a) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// In each row the `R` zeros form a suffix of the trailing zero run; every
/// other zero is `C` and must see only `C` zeros below it.
fn has_zero_partition(a: &BinaryMatrix) -> bool {
    let (r, c) = a.shape();
    let runs: Vec<usize> = (0..r)
        .map(|i| (0..c).rev().take_while(|&j| !a.get(i, j)).count())
        .collect();
    let mut cut = vec![0usize; r];
    loop {
        // Cell (i, j) is R iff j >= c - cut[i].
        let is_r = |i: usize, j: usize| j + cut[i] >= c;
        let ok = (0..r).all(|i| {
            (0..c).all(|j| {
                a.get(i, j) || is_r(i, j) || (i + 1..r).all(|k| !a.get(k, j) && !is_r(k, j))
            })
        });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < r && cut[i] == runs[i] {
            cut[i] = 0;
            i += 1;
        }
        if i == r {
            return false;
        }
        cut[i] += 1;
    }
}
