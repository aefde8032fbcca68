//! Exact isomorphism for small graphs by refined backtracking.

use crate::error::{Error, Result};
use crate::graph::{Bigraph, Graph};

/// Default bound on the vertex count for isomorphism tests.
pub const DEFAULT_ISO_CAP: usize = 12;

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    is_isomorphic_capped(a, b, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_capped(a: &Graph, b: &Graph, cap: usize) -> Result<bool> {
    check_cap(a.n().max(b.n()), cap)?;
    Ok(find_isomorphism(a, b, &vec![0; a.n()], &vec![0; b.n()]).is_some())
}

/// Isomorphism of bigraphs: sides are kept, or swapped wholesale.
pub fn bigraphs_isomorphic(a: &Bigraph, b: &Bigraph) -> Result<bool> {
    bigraphs_isomorphic_capped(a, b, DEFAULT_ISO_CAP)
}

pub fn bigraphs_isomorphic_capped(a: &Bigraph, b: &Bigraph, cap: usize) -> Result<bool> {
    check_cap((a.nx() + a.ny()).max(b.nx() + b.ny()), cap)?;
    let ga = a.to_graph();
    let gb = b.to_graph();
    let sides = |x: usize, y: usize, flip: bool| -> Vec<u32> {
        std::iter::repeat_n(flip as u32, x)
            .chain(std::iter::repeat_n(!flip as u32, y))
            .collect()
    };
    let ca = sides(a.nx(), a.ny(), false);
    Ok(find_isomorphism(&ga, &gb, &ca, &sides(b.nx(), b.ny(), false)).is_some()
        || find_isomorphism(&ga, &gb, &ca, &sides(b.nx(), b.ny(), true)).is_some())
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded {
            what: "vertex count",
            size,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Colour-preserving isomorphism `a -> b`, as `map[va] = vb`.
pub fn find_isomorphism(a: &Graph, b: &Graph, color_a: &[u32], color_b: &[u32]) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let inv_a = invariants(a, color_a);
    let inv_b = invariants(b, color_b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // most constrained classes first, BFS-ish through neighbours
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| a.has_edge(u, v)).count();
                let class = inv_a.iter().filter(|x| **x == inv_a[v]).count();
                (linked, std::cmp::Reverse(class), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &Graph,
        b: &Graph,
        inv_a: &[Vec<u64>],
        inv_b: &[Vec<u64>],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let va = order[depth];
        for vb in 0..b.n() {
            if used[vb] || inv_a[va] != inv_b[vb] {
                continue;
            }
            if order[..depth]
                .iter()
                .any(|&u| a.has_edge(va, u) != b.has_edge(vb, map[u]))
            {
                continue;
            }
            map[va] = vb;
            used[vb] = true;
            if rec(a, b, inv_a, inv_b, order, depth + 1, map, used) {
                return true;
            }
            used[vb] = false;
        }
        false
    }
    rec(a, b, &inv_a, &inv_b, &order, 0, &mut map, &mut used).then_some(map)
}

/// Colour, degree, loop flag, then two rounds of sorted neighbour signatures.
fn invariants(g: &Graph, colors: &[u32]) -> Vec<Vec<u64>> {
    let n = g.n();
    let loops = g.loops();
    let mut sig: Vec<u64> = (0..n)
        .map(|v| {
            let l = loops.map_or(0, |l| l[v] as u64);
            (colors[v] as u64) << 40 | l << 32 | g.degree(v) as u64
        })
        .collect();
    for _ in 0..2 {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut ns: Vec<u64> = g.neighbors(v).map(|u| sig[u]).collect();
                ns.sort_unstable();
                let mut h = sig[v].wrapping_mul(0x9e37_79b9_7f4a_7c15);
                for x in ns {
                    h = (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(17);
                }
                h
            })
            .collect();
        sig = next;
    }
    (0..n)
        .map(|v| {
            let mut ns: Vec<u64> = g.neighbors(v).map(|u| sig[u]).collect();
            ns.sort_unstable();
            let mut out = vec![sig[v]];
            out.extend(ns);
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Permutation;
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    #[test]
    fn k3_vs_p3() {
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)).unwrap());
    }

    #[test]
    fn relabelled_copies_are_isomorphic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let h = g.permuted(&Permutation::new(p).unwrap());
            assert!(is_isomorphic(&g, &h).unwrap());
        }
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices
        let two_k3 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&Graph::cycle(6), &two_k3).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(13);
        assert!(matches!(is_isomorphic(&g, &g), Err(Error::CapExceeded { .. })));
        assert!(is_isomorphic_capped(&g, &g, 13).unwrap());
    }

    #[test]
    fn bigraph_sides_may_swap() {
        let a = Bigraph::from_edges(1, 2, &[(0, 0), (0, 1)]);
        let b = Bigraph::from_edges(2, 1, &[(0, 0), (1, 0)]);
        assert!(bigraphs_isomorphic(&a, &b).unwrap());
        let c = Bigraph::from_edges(2, 2, &[(0, 0), (1, 0)]);
        assert!(!bigraphs_isomorphic(&a, &c).unwrap());
    }
}
