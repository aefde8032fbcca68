//! Chordality, suns and minimum chordal completions within one side.

use std::collections::VecDeque;

use crate::embed::{contains_induced_capped, Embedding};
use crate::error::{Error, Result};
use crate::families::gen_sun;
use crate::graph::{Bigraph, Graph, Side};
use crate::iso::find_isomorphism;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Perfect elimination ordering.
    Chordal(Vec<usize>),
    /// Chordless cycle on at least four vertices, in cycle order.
    Hole(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search; returns vertices in visit order.
fn mcs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Shortest `a`-`b` path avoiding the closed neighbourhood of `v` except `a`, `b`.
fn path_around(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let blocked: Vec<bool> = (0..n)
        .map(|u| (u == v || g.has_edge(u, v)) && u != a && u != b)
        .collect();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut y = b;
            while y != a {
                y = parent[y];
                path.push(y);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX && !(x == a && y == b) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let visit = mcs(g);
    let mut pos = vec![0; g.n()];
    for (p, &v) in visit.iter().enumerate() {
        pos[v] = p;
    }
    let peo_ok = visit.iter().all(|&v| {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] < pos[v]).collect();
        match earlier.iter().max_by_key(|&&u| pos[u]) {
            None => true,
            Some(&p) => earlier.iter().all(|&u| u == p || g.has_edge(u, p)),
        }
    });
    if peo_ok {
        return Chordality::Chordal(visit.into_iter().rev().collect());
    }
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                if let Some(path) = path_around(g, v, a, b) {
                    let mut hole = vec![v];
                    hole.extend(path);
                    debug_assert!(is_hole(g, &hole));
                    return Chordality::Hole(hole);
                }
            }
        }
    }
    unreachable!("elimination check failed but no hole exists")
}

/// Cycle of length at least four without chords.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    n >= 4
        && (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                cycle[i] != cycle[j] && g.has_edge(cycle[i], cycle[j]) == consecutive
            })
        })
}

/// An induced `k`-sun for some `3 <= k <= kmax`, smallest `k` first.
pub fn find_sun(g: &Graph, kmax: usize, cap: usize) -> Result<Option<(usize, Embedding)>> {
    for k in 3..=kmax {
        if 2 * k > g.n() {
            break;
        }
        if let Some(e) = contains_induced_capped(g, &gen_sun(k)?, cap)? {
            return Ok(Some((k, e)));
        }
    }
    Ok(None)
}

pub fn sun_free(g: &Graph, kmax: usize) -> Result<bool> {
    Ok(find_sun(g, kmax, crate::embed::DEFAULT_PATTERN_CAP)?.is_none())
}

/// Default bound on the side size for [`chordal_augmentations`].
pub const DEFAULT_AUGMENT_CAP: usize = 8;

/// Every minimum set of edges inside `side` that makes `b` chordal, as
/// graphs up to isomorphism.
pub fn chordal_augmentations(b: &Bigraph, side: Side, cap: usize) -> Result<Vec<Graph>> {
    let members: Vec<usize> = match side {
        Side::X => (0..b.nx()).collect(),
        Side::Y => (b.nx()..b.nx() + b.ny()).collect(),
    };
    if members.len() > cap {
        return Err(Error::CapExceeded {
            what: "side size",
            size: members.len(),
            cap,
        });
    }
    let base = b.to_graph();
    let candidates: Vec<(usize, usize)> = members
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
        .collect();
    for size in 0..=candidates.len() {
        let mut found: Vec<Graph> = Vec::new();
        for_each_subset(candidates.len(), size, &mut |subset| {
            let mut g = base.clone();
            for &k in subset {
                g.add_edge(candidates[k].0, candidates[k].1);
            }
            if is_chordal(&g).is_chordal() {
                let colors = vec![0; g.n()];
                if !found.iter().any(|h| find_isomorphism(h, &g, &colors, &colors).is_some()) {
                    found.push(g);
                }
            }
        });
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("a clique on one side always leaves a chordal graph")
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), f);
    }
}
