//! Backtracking over left-endpoint orders.
//!
//! A signed interval representation only depends on the order of the left
//! endpoints: once that order is fixed, the smallest admissible right endpoint
//! of `v` is the largest position among the vertices `v` must reach, and
//! smaller right endpoints can only remove adjacencies. So a representation
//! exists iff some placement order leaves every non-adjacent constrained pair
//! `u` before `v` with `r(u) < l(v)` or `r(v) < l(u)`.
//!
//! When `v` is placed the first alternative is "every vertex `u` reaches is
//! already placed" and the second is "every vertex `v` reaches sits before
//! `u`". Both are settled at that moment, so each pair is checked exactly once.

use std::collections::HashSet;

/// Vertices are `0..n` with `n <= 64`.
#[derive(Clone, Debug)]
pub(crate) struct OrderProblem {
    /// Vertices whose left endpoint `r(v)` must reach; contains `v` itself
    /// when `v` must get a positive interval.
    pub reach: Vec<u64>,
    /// Non-adjacent vertices `v` must be separated from.
    pub separate: Vec<u64>,
    /// Vertices that must get a negative interval.
    pub negative: u64,
}

/// Endpoints read off a placement order: `l` is the 1-based position,
/// `r` the largest position `v` reaches, or 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Placement {
    pub order: Vec<usize>,
    pub l: Vec<i64>,
    pub r: Vec<i64>,
}

impl OrderProblem {
    pub fn n(&self) -> usize {
        self.reach.len()
    }

    /// Graph problem with all pairs constrained. Vertices in `positive` and
    /// `negative` get intervals of that sign, the rest are free.
    pub fn for_graph(masks: &[u64], positive: u64, negative: u64) -> Self {
        let n = masks.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self {
            reach: (0..n).map(|v| masks[v] | (positive & 1 << v)).collect(),
            separate: (0..n).map(|v| all & !masks[v] & !(1 << v)).collect(),
            negative,
        }
    }

    /// Bigraph problem on rows `0..r` followed by columns `r..r+c`.
    pub fn for_matrix(m: &crate::matrix::BinaryMatrix, positive: bool) -> Self {
        let (rows, cols) = m.shape();
        let n = rows + cols;
        assert!(n <= 64);
        let mut reach = vec![0u64; n];
        let mut separate = vec![0u64; n];
        for x in 0..rows {
            for y in 0..cols {
                let yv = rows + y;
                if m.get(x, y) {
                    reach[x] |= 1 << yv;
                    reach[yv] |= 1 << x;
                } else {
                    separate[x] |= 1 << yv;
                    separate[yv] |= 1 << x;
                }
            }
        }
        if positive {
            for (v, r) in reach.iter_mut().enumerate() {
                *r |= 1 << v;
            }
        }
        Self {
            reach,
            separate,
            negative: 0,
        }
    }

    pub fn solve(&self) -> Option<Placement> {
        let n = self.n();
        let mut st = State {
            order: Vec::with_capacity(n),
            pos: vec![usize::MAX; n],
            prefix: vec![0],
            placed: 0,
            failed: HashSet::new(),
        };
        if self.extend(&mut st) {
            Some(self.placement(st.order))
        } else {
            None
        }
    }

    fn placement(&self, order: Vec<usize>) -> Placement {
        let n = self.n();
        let mut l = vec![0i64; n];
        for (p, &v) in order.iter().enumerate() {
            l[v] = p as i64 + 1;
        }
        let r = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| self.reach[v] >> u & 1 == 1)
                    .map(|u| l[u])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Placement { order, l, r }
    }

    fn extend(&self, st: &mut State) -> bool {
        let n = self.n();
        if st.order.len() == n {
            return true;
        }
        let key = st.key(self);
        if st.failed.contains(&key) {
            return false;
        }
        for v in 0..n {
            if st.placed >> v & 1 == 1 || !self.can_place(st, v) {
                continue;
            }
            st.push(v);
            if self.extend(st) {
                return true;
            }
            st.pop();
        }
        st.failed.insert(key);
        false
    }

    fn can_place(&self, st: &State, v: usize) -> bool {
        if self.negative >> v & 1 == 1 && self.reach[v] & !st.placed != 0 {
            return false;
        }
        let mut blocking = self.separate[v] & st.placed;
        let mut earliest = usize::MAX;
        while blocking != 0 {
            let u = blocking.trailing_zeros() as usize;
            blocking &= blocking - 1;
            if self.reach[u] & !st.placed != 0 {
                earliest = earliest.min(st.pos[u]);
            }
        }
        earliest == usize::MAX || self.reach[v] & !st.prefix[earliest] == 0
    }
}

struct State {
    order: Vec<usize>,
    pos: Vec<usize>,
    /// `prefix[p]` is the set of vertices at positions `< p`.
    prefix: Vec<u64>,
    placed: u64,
    failed: HashSet<Vec<u64>>,
}

impl State {
    fn push(&mut self, v: usize) {
        self.pos[v] = self.order.len();
        self.order.push(v);
        self.placed |= 1 << v;
        self.prefix.push(self.placed);
    }

    fn pop(&mut self) {
        let v = self.order.pop().unwrap();
        self.pos[v] = usize::MAX;
        self.placed &= !(1 << v);
        self.prefix.pop();
    }

    /// Placed set plus, for every placed vertex that still reaches an
    /// unplaced one, its prefix. Nothing else influences the future.
    fn key(&self, p: &OrderProblem) -> Vec<u64> {
        let mut key = vec![self.placed];
        for &u in &self.order {
            if p.reach[u] & !self.placed != 0 {
                key.push(u as u64);
                key.push(self.prefix[self.pos[u]]);
            }
        }
        key
    }
}
