use std::collections::VecDeque;

use crate::graph::Graph;

/// Outcome of a 2-colouring attempt: exactly one of the two is produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoColoring {
    /// `colors[v]` is the class of `v`; every edge joins different classes.
    Bipartite(Vec<bool>),
    /// Vertices of a cycle of odd length, in cycle order.
    OddCycle(Vec<usize>),
}

impl TwoColoring {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, TwoColoring::Bipartite(_))
    }

    /// Checks the outcome against `g` edge by edge.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            TwoColoring::Bipartite(c) => {
                c.len() == g.n() && g.edges().iter().all(|&(u, v)| c[u] != c[v])
            }
            TwoColoring::OddCycle(cyc) => {
                let k = cyc.len();
                let mut distinct = cyc.clone();
                distinct.sort_unstable();
                distinct.dedup();
                k % 2 == 1
                    && k >= 3
                    && distinct.len() == k
                    && (0..k).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % k]))
            }
        }
    }
}

/// BFS 2-colouring; returns an odd cycle when none exists.
///
/// Components are coloured in index order starting with `false`, so the
/// colouring is deterministic.
pub fn is_bipartite(g: &Graph) -> TwoColoring {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return TwoColoring::OddCycle(close_cycle(u, v, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    TwoColoring::Bipartite(color.into_iter().map(|c| c.unwrap()).collect())
}

/// Joins the tree paths from `u` and `v` to their lowest common ancestor.
fn close_cycle(mut u: usize, mut v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![v];
    while depth[u] > depth[v] {
        u = parent[u];
        left.push(u);
    }
    while depth[v] > depth[u] {
        v = parent[v];
        right.push(v);
    }
    while u != v {
        u = parent[u];
        v = parent[v];
        left.push(u);
        right.push(v);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_is_bipartite() {
        let g = Graph::cycle(4);
        let out = is_bipartite(&g);
        assert!(out.verify(&g));
        let TwoColoring::Bipartite(c) = out else { panic!() };
        assert_eq!(c.iter().filter(|&&b| b).count(), 2);
    }

    #[test]
    fn triangle_gives_triangle() {
        let g = Graph::complete(3);
        let out = is_bipartite(&g);
        assert!(out.verify(&g));
        let TwoColoring::OddCycle(c) = out else { panic!() };
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn long_odd_cycle_with_tail() {
        let mut g = Graph::new(9);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2), (7, 8)] {
            g.add_edge(u, v);
        }
        let out = is_bipartite(&g);
        assert!(out.verify(&g), "{out:?}");
        let TwoColoring::OddCycle(c) = out else { panic!() };
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn exhaustive_small_graphs() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges);
                assert!(is_bipartite(&g).verify(&g));
            }
        }
    }
}
