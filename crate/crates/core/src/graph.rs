//! Simple graphs and bigraphs with 1-based string labels over dense indices.

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, Permutation};

/// A simple undirected graph.
///
/// Loops are not edges. They live in a separate optional per-vertex flag
/// that carries the diagonal of an adjacency matrix when one is prescribed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
    loops: Option<Vec<bool>>,
}

impl Graph {
    /// Edgeless graph on vertices labelled `1..=n`.
    pub fn new(n: usize) -> Self {
        Self::with_labels((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self {
            labels,
            adj: vec![vec![false; n]; n],
            loops: None,
        }
    }

    /// Graph on `n` vertices with the given 0-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Panics on a self-edge; loops go through [`Graph::set_loops`].
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-edges are stored as loop flags");
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v] = false;
        self.adj[v][u] = false;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .enumerate()
            .filter_map(|(u, &e)| e.then_some(u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&e| e).count()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn loops(&self) -> Option<&[bool]> {
        self.loops.as_deref()
    }

    pub fn set_loops(&mut self, loops: Option<Vec<bool>>) {
        if let Some(l) = &loops {
            assert_eq!(l.len(), self.n());
        }
        self.loops = loops;
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::with_labels(self.labels.clone());
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.adj[u][v] {
                    g.add_edge(u, v);
                }
            }
        }
        g.loops = self.loops.as_ref().map(|l| l.iter().map(|b| !b).collect());
        g
    }

    /// The subgraph induced by `keep`, vertices in ascending index order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::UnknownVertex((bad + 1).to_string()));
        }
        let mut g = Graph::with_labels(keep.iter().map(|&v| self.labels[v].clone()).collect());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.adj[u][v] {
                    g.add_edge(a, b);
                }
            }
        }
        g.loops = self
            .loops
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v]).collect());
        Ok(g)
    }

    pub fn induced_by_labels(&self, keep: &[&str]) -> Result<Graph> {
        let idx = keep
            .iter()
            .map(|l| self.index_of(l).ok_or_else(|| Error::UnknownVertex(l.to_string())))
            .collect::<Result<Vec<_>>>()?;
        self.induced_subgraph(&idx)
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).expect("indices in range")
    }

    /// Relabelled copy where new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::with_labels((0..self.n()).map(|i| self.labels[perm[i]].clone()).collect());
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                if self.adj[perm[a]][perm[b]] {
                    g.add_edge(a, b);
                }
            }
        }
        g.loops = self
            .loops
            .as_ref()
            .map(|l| (0..self.n()).map(|i| l[perm[i]]).collect());
        g
    }

    /// Adjacency matrix with the given diagonal.
    pub fn adjacency_matrix(&self, diagonal: &[bool]) -> BinaryMatrix {
        assert_eq!(diagonal.len(), self.n());
        BinaryMatrix::from_fn(self.n(), self.n(), |i, j| {
            if i == j {
                diagonal[i]
            } else {
                self.adj[i][j]
            }
        })
    }

    /// Neighbourhoods as bitmasks. Requires `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask routines take at most 64 vertices");
        (0..self.n())
            .map(|v| self.neighbors(v).fold(0u64, |m, u| m | 1 << u))
            .collect()
    }

    /// Structural equality ignoring labels.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.adj == other.adj && self.loops == other.loops
    }
}

/// Which partite set of a bigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Side {
    X,
    Y,
}

/// A bipartite graph `B = (X, Y, E)` stored as its biadjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    matrix: BinaryMatrix,
}

impl Bigraph {
    pub fn new(nx: usize, ny: usize) -> Self {
        Self::from_matrix(BinaryMatrix::zeros(nx, ny))
    }

    /// Rows become `X`, columns `Y`; labels are `1..`.
    pub fn from_matrix(matrix: BinaryMatrix) -> Self {
        Self {
            x_labels: (1..=matrix.rows()).map(|i| i.to_string()).collect(),
            y_labels: (1..=matrix.cols()).map(|i| i.to_string()).collect(),
            matrix,
        }
    }

    pub fn with_labels(x_labels: Vec<String>, y_labels: Vec<String>) -> Self {
        let matrix = BinaryMatrix::zeros(x_labels.len(), y_labels.len());
        Self {
            x_labels,
            y_labels,
            matrix,
        }
    }

    pub fn from_edges(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Self {
        let mut b = Self::new(nx, ny);
        for &(x, y) in edges {
            b.add_edge(x, y);
        }
        b
    }

    pub fn complete(nx: usize, ny: usize) -> Self {
        Self::from_matrix(BinaryMatrix::ones(nx, ny))
    }

    pub fn nx(&self) -> usize {
        self.x_labels.len()
    }

    pub fn ny(&self) -> usize {
        self.y_labels.len()
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        self.matrix.set(x, y, true);
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.matrix.get(x, y)
    }

    /// Edges `(x, y)` sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.nx() {
            for y in 0..self.ny() {
                if self.matrix.get(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.matrix.count_ones()
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    pub fn induced_subgraph(&self, keep_x: &[usize], keep_y: &[usize]) -> Result<Bigraph> {
        let norm = |keep: &[usize], n: usize, side: &str| -> Result<Vec<usize>> {
            let mut k = keep.to_vec();
            k.sort_unstable();
            k.dedup();
            match k.iter().find(|&&v| v >= n) {
                Some(&bad) => Err(Error::UnknownVertex(format!("{side}{}", bad + 1))),
                None => Ok(k),
            }
        };
        let kx = norm(keep_x, self.nx(), "x")?;
        let ky = norm(keep_y, self.ny(), "y")?;
        let mut b = Bigraph::with_labels(
            kx.iter().map(|&i| self.x_labels[i].clone()).collect(),
            ky.iter().map(|&j| self.y_labels[j].clone()).collect(),
        );
        for (a, &i) in kx.iter().enumerate() {
            for (c, &j) in ky.iter().enumerate() {
                if self.matrix.get(i, j) {
                    b.add_edge(a, c);
                }
            }
        }
        Ok(b)
    }

    /// The underlying graph: `X` first as `x1..`, then `Y` as `y1..`.
    pub fn to_graph(&self) -> Graph {
        let labels = self
            .x_labels
            .iter()
            .map(|l| format!("x{l}"))
            .chain(self.y_labels.iter().map(|l| format!("y{l}")))
            .collect();
        let mut g = Graph::with_labels(labels);
        for (x, y) in self.edges() {
            g.add_edge(x, self.nx() + y);
        }
        g
    }
}

/// `A(B)`: entry (i, j) is 1 iff `x_i y_j` is an edge.
pub fn biadjacency(b: &Bigraph) -> BinaryMatrix {
    b.matrix.clone()
}

pub fn matrix_to_bigraph(m: &BinaryMatrix) -> Bigraph {
    Bigraph::from_matrix(m.clone())
}
