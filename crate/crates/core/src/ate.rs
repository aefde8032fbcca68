//! Asteroidal triples of edges.
//!
//! Edges `e1, e2, e3` form an ATE when every two of them are joined by a path
//! that avoids the closed neighbourhood of the third. Both joined edges must
//! themselves survive the deletion.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Bigraph, Graph};

/// Default bound on the number of edges examined.
pub const DEFAULT_ATE_CAP: usize = 64;

/// Edges are pairs of vertex indices of [`Bigraph::to_graph`]. `paths[k]`
/// joins the two edges other than `edges[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ate {
    pub edges: [(usize, usize); 3],
    pub paths: [Vec<usize>; 3],
}

impl Ate {
    pub fn verify(&self, g: &Graph) -> bool {
        (0..3).all(|k| {
            let (a, b) = self.edges[k];
            let (e1, e2) = (self.edges[(k + 1) % 3], self.edges[(k + 2) % 3]);
            let blocked = closed_edge_neighbourhood(g, a, b);
            let p = &self.paths[k];
            let touches = |e: (usize, usize), v: usize| v == e.0 || v == e.1;
            !p.is_empty()
                && [e1.0, e1.1, e2.0, e2.1].iter().all(|&v| !blocked[v])
                && p.iter().all(|&v| !blocked[v])
                && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && touches(e1, p[0])
                && touches(e2, *p.last().unwrap())
        })
    }
}

fn closed_edge_neighbourhood(g: &Graph, a: usize, b: usize) -> Vec<bool> {
    (0..g.n())
        .map(|v| v == a || v == b || g.has_edge(v, a) || g.has_edge(v, b))
        .collect()
}

/// Path from an endpoint of `e1` to an endpoint of `e2` outside `blocked`.
fn join(g: &Graph, e1: (usize, usize), e2: (usize, usize), blocked: &[bool]) -> Option<Vec<usize>> {
    if [e1.0, e1.1, e2.0, e2.1].iter().any(|&v| blocked[v]) {
        return None;
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in [e1.0, e1.1] {
        parent[s] = s;
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        if x == e2.0 || x == e2.1 {
            let mut path = vec![x];
            let mut y = x;
            while parent[y] != y {
                y = parent[y];
                path.push(y);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

pub fn has_ate(b: &Bigraph) -> Result<Option<Ate>> {
    has_ate_capped(b, DEFAULT_ATE_CAP)
}

/// Exhaustive over edge triples.
pub fn has_ate_capped(b: &Bigraph, cap: usize) -> Result<Option<Ate>> {
    let g = b.to_graph();
    let edges: Vec<(usize, usize)> = b.edges().into_iter().map(|(x, y)| (x, b.nx() + y)).collect();
    if edges.len() > cap {
        return Err(Error::CapExceeded {
            what: "edge count",
            size: edges.len(),
            cap,
        });
    }
    let blocked: Vec<Vec<bool>> = edges
        .iter()
        .map(|&(a, c)| closed_edge_neighbourhood(&g, a, c))
        .collect();
    let m = edges.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let Some(pk) = join(&g, edges[i], edges[j], &blocked[k]) else {
                    continue;
                };
                let Some(pi) = join(&g, edges[j], edges[k], &blocked[i]) else {
                    continue;
                };
                let Some(pj) = join(&g, edges[k], edges[i], &blocked[j]) else {
                    continue;
                };
                let ate = Ate {
                    edges: [edges[i], edges[j], edges[k]],
                    paths: [pi, pj, pk],
                };
                debug_assert!(ate.verify(&g));
                return Ok(Some(ate));
            }
        }
    }
    Ok(None)
}
