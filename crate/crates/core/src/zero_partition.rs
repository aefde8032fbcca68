//! R/C colorings of the zeros of an arranged matrix.
//!
//! An `R` zero may only have zeros colored `R` to its right, a `C` zero only
//! zeros colored `C` below it. For a fixed arrangement this is a 2-SAT
//! instance over one variable per zero, solved exactly.

use std::fmt;

use crate::matrix::BinaryMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ZeroColor {
    R,
    C,
}

impl fmt::Display for ZeroColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeroColor::R => "R",
            ZeroColor::C => "C",
        })
    }
}

/// Colors of all zero cells, in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroPartition {
    pub cells: Vec<((usize, usize), ZeroColor)>,
}

impl ZeroPartition {
    pub fn color(&self, i: usize, j: usize) -> Option<ZeroColor> {
        self.cells
            .binary_search_by_key(&(i, j), |&(p, _)| p)
            .ok()
            .map(|k| self.cells[k].1)
    }

    /// Cell-by-cell check of both rules; every zero must be colored.
    pub fn is_valid_for(&self, m: &BinaryMatrix) -> bool {
        let (r, c) = m.shape();
        let zeros = m.zero_cells();
        if zeros.len() != self.cells.len() || zeros.iter().zip(&self.cells).any(|(z, (p, _))| z != p) {
            return false;
        }
        self.cells.iter().all(|&((i, j), color)| match color {
            ZeroColor::R => (j + 1..c).all(|l| self.color(i, l) == Some(ZeroColor::R)),
            ZeroColor::C => (i + 1..r).all(|k| self.color(k, j) == Some(ZeroColor::C)),
        })
    }
}

/// A valid zero partition of `m` as arranged, if one exists.
pub fn zero_partition(m: &BinaryMatrix) -> Option<ZeroPartition> {
    let (r, c) = m.shape();
    let zeros = m.zero_cells();
    let mut index = vec![usize::MAX; r * c];
    for (k, &(i, j)) in zeros.iter().enumerate() {
        index[i * c + j] = k;
    }
    // Literal 2k means "zero k is R", 2k+1 means "zero k is C".
    let mut sat = TwoSat::new(zeros.len());
    for (k, &(i, j)) in zeros.iter().enumerate() {
        if j + 1 < c {
            match index[i * c + j + 1] {
                usize::MAX => sat.implies(2 * k, 2 * k + 1),
                z => sat.implies(2 * k, 2 * z),
            }
        }
        if i + 1 < r {
            match index[(i + 1) * c + j] {
                usize::MAX => sat.implies(2 * k + 1, 2 * k),
                z => sat.implies(2 * k + 1, 2 * z + 1),
            }
        }
    }
    let values = sat.solve()?;
    let zp = ZeroPartition {
        cells: zeros
            .into_iter()
            .zip(values)
            .map(|(p, is_r)| (p, if is_r { ZeroColor::R } else { ZeroColor::C }))
            .collect(),
    };
    assert!(zp.is_valid_for(m), "2-SAT produced an invalid zero partition");
    Some(zp)
}

/// Implication graph over literals `2v` (true) and `2v+1` (false).
struct TwoSat {
    adj: Vec<Vec<usize>>,
}

impl TwoSat {
    fn new(vars: usize) -> Self {
        Self {
            adj: vec![Vec::new(); 2 * vars],
        }
    }

    /// Adds `a -> b` and its contrapositive.
    fn implies(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b ^ 1].push(a ^ 1);
    }

    fn solve(&self) -> Option<Vec<bool>> {
        let comp = tarjan(&self.adj);
        (0..self.adj.len() / 2)
            .map(|v| {
                let (t, f) = (comp[2 * v], comp[2 * v + 1]);
                // Tarjan numbers components in reverse topological order.
                (t != f).then_some(t < f)
            })
            .collect()
    }
}

fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut next_index = 0;
    let mut next_comp = 0;
    for s in 0..n {
        if index[s] != usize::MAX {
            continue;
        }
        let mut work = vec![(s, 0usize)];
        index[s] = next_index;
        low[s] = next_index;
        next_index += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&(v, e)) = work.last() {
            if e < adj[v].len() {
                let w = adj[v][e];
                work.last_mut().unwrap().1 += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(p, _)) = work.last() {
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(zero_partition(&BinaryMatrix::ones(2, 2)).unwrap().cells, vec![]);
        let zp = zero_partition(&BinaryMatrix::from_rows(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(
            zp.cells,
            vec![((0, 1), ZeroColor::R), ((1, 0), ZeroColor::C)]
        );
        assert!(zero_partition(&BinaryMatrix::from_rows(&[[0, 1], [1, 1]])).is_none());
    }

    fn brute(m: &BinaryMatrix) -> bool {
        let z = m.zero_cells();
        (0..1u32 << z.len()).any(|mask| {
            ZeroPartition {
                cells: z
                    .iter()
                    .enumerate()
                    .map(|(k, &p)| (p, if mask >> k & 1 == 1 { ZeroColor::R } else { ZeroColor::C }))
                    .collect(),
            }
            .is_valid_for(m)
        })
    }

    #[test]
    fn agrees_with_brute_force_on_3x3() {
        for mask in 0..512u64 {
            let m = BinaryMatrix::from_mask(3, 3, mask);
            assert_eq!(zero_partition(&m).is_some(), brute(&m), "{m}");
        }
    }
}
