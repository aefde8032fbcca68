//! Instance generators for exhaustive and sampled checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::matrix::BinaryMatrix;

/// All `2^(r*c)` matrices of the given shape, in mask order.
pub fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = BinaryMatrix> {
    assert!(rows * cols < 32, "too many matrices to enumerate");
    (0..1u64 << (rows * cols)).map(move |mask| BinaryMatrix::from_mask(rows, cols, mask))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> BinaryMatrix {
    BinaryMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
}

/// `(i, j)` is 1 iff `j <= b_i` and `i <= a_j` for random thresholds. Every
/// such matrix satisfies the staircase condition, and every staircase matrix
/// arises this way.
pub fn random_staircase(rng: &mut impl Rng, rows: usize, cols: usize) -> BinaryMatrix {
    let b: Vec<usize> = (0..rows).map(|_| rng.gen_range(0..=cols)).collect();
    let a: Vec<usize> = (0..cols).map(|_| rng.gen_range(0..=rows)).collect();
    BinaryMatrix::from_fn(rows, cols, |i, j| j < b[i] && i < a[j])
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Upper-triangle adjacency bits, row by row.
fn code(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> u64 {
    let mut c = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            c = c << 1 | adj(u, v) as u64;
        }
    }
    c
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class on exactly `n` vertices,
/// `n <= 6`. Classes are identified by their smallest adjacency code.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "canonical forms by full permutation only scale to 6 vertices");
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs {
        let mut g = Graph::new(n);
        let mut bit = pairs;
        for u in 0..n {
            for v in u + 1..n {
                bit -= 1;
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        let canon = perms
            .iter()
            .map(|p| code(n, &|u, v| g.has_edge(p[u], p[v])))
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}
