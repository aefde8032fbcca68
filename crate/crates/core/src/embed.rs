//! Induced-subgraph containment by backtracking.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default bound on the pattern size for exhaustive containment.
pub const DEFAULT_PATTERN_CAP: usize = 12;

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    /// True iff the map is injective and preserves adjacency and non-adjacency.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.0;
        if m.len() != pattern.n() || m.iter().any(|&h| h >= host.n()) {
            return false;
        }
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if m[a] == m[b] || pattern.has_edge(a, b) != host.has_edge(m[a], m[b]) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>> {
    contains_induced_capped(host, pattern, DEFAULT_PATTERN_CAP)
}

/// Finds an induced copy of `pattern` in `host`. Exhaustive, so `None` is definitive.
pub fn contains_induced_capped(
    host: &Graph,
    pattern: &Graph,
    cap: usize,
) -> Result<Option<Embedding>> {
    if pattern.n() > cap {
        return Err(Error::CapExceeded {
            what: "pattern size",
            size: pattern.n(),
            cap,
        });
    }
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let order = search_order(pattern);
    let host_deg: Vec<usize> = (0..host.n()).map(|v| host.degree(v)).collect();
    let pat_deg: Vec<usize> = (0..pattern.n()).map(|v| pattern.degree(v)).collect();
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    let found = extend(host, pattern, &order, 0, &host_deg, &pat_deg, &mut map, &mut used);
    Ok(found.then_some(Embedding(map)))
}

/// Pattern vertices in BFS order from the highest-degree vertex of each
/// component, so each new vertex is constrained by earlier ones.
fn search_order(p: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(p.n());
    let mut seen = vec![false; p.n()];
    while order.len() < p.n() {
        let root = (0..p.n())
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (p.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut k = start;
        while k < order.len() {
            let u = order[k];
            let mut next: Vec<usize> = p.neighbors(u).filter(|&v| !seen[v]).collect();
            next.sort_by_key(|&v| std::cmp::Reverse(p.degree(v)));
            for v in next {
                seen[v] = true;
                order.push(v);
            }
            k += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    host_deg: &[usize],
    pat_deg: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..host.n() {
        if used[h] || host_deg[h] < pat_deg[p] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if extend(host, pattern, order, depth + 1, host_deg, pat_deg, map, used) {
            return true;
        }
        used[h] = false;
        map[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tries every injective map; only for tiny hosts.
    fn naive(host: &Graph, pattern: &Graph) -> bool {
        fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
            if map.len() == pattern.n() {
                return Embedding(map.clone()).verify(host, pattern);
            }
            for h in 0..host.n() {
                if !map.contains(&h) {
                    map.push(h);
                    if rec(host, pattern, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        rec(host, pattern, &mut Vec::new())
    }

    #[test]
    fn p3_in_c4() {
        let e = contains_induced(&Graph::cycle(4), &Graph::path(3)).unwrap().unwrap();
        assert!(e.verify(&Graph::cycle(4), &Graph::path(3)));
    }

    #[test]
    fn c4_not_in_k4() {
        assert_eq!(contains_induced(&Graph::complete(4), &Graph::cycle(4)).unwrap(), None);
    }

    #[test]
    fn pattern_cap() {
        let big = Graph::path(13);
        assert!(matches!(
            contains_induced(&big, &big),
            Err(Error::CapExceeded { .. })
        ));
        assert!(contains_induced_capped(&big, &big, 13).unwrap().is_some());
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let patterns = [
            Graph::path(3),
            Graph::path(4),
            Graph::cycle(4),
            Graph::complete(3),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]),
            Graph::from_edges(4, &[(0, 1), (2, 3)]),
            Graph::new(3),
        ];
        for _ in 0..300 {
            let n = rng.gen_range(3..=7);
            let mut host = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        host.add_edge(u, v);
                    }
                }
            }
            for p in &patterns {
                let fast = contains_induced(&host, p).unwrap();
                if let Some(e) = &fast {
                    assert!(e.verify(&host, p));
                }
                assert_eq!(fast.is_some(), naive(&host, p));
            }
        }
    }
}
