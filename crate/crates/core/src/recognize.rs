//! Signed interval bigraphs and signed interval (co-TT) graphs.

use std::collections::HashMap;

use crate::chordal::{find_sun, is_chordal, Chordality};
use crate::decision::Decision;
use crate::embed::{contains_induced_capped, Embedding, DEFAULT_PATTERN_CAP};
use crate::error::{Error, Result};
use crate::families::{gen_p, gen_pi, gen_t, gen_t0};
use crate::ferrers::{fdim_at_most_2, OddCycle};
use crate::graph::{Bigraph, Graph};
use crate::matrix::BinaryMatrix;
use crate::order_search::{OrderProblem, Placement};
use crate::signed::{
    build_representation_bigraph, build_representation_graph, realizes_bigraph, realizes_graph,
    side_labels, Representation, SignedInterval,
};

/// Signed interval bigraph iff `fdim <= 2`. The representation is built from
/// the staircase arrangement, row `i` as `[i, k]` with `k` its last 1.
pub fn recognize_signed_interval_bigraph(b: &Bigraph) -> Decision<Representation, OddCycle> {
    let m = b.matrix();
    let cert = match fdim_at_most_2(m) {
        Decision::Yes(c) => c,
        Decision::No(w) => return Decision::No(w),
    };
    let a = &cert.arrangement;
    let arranged = a.apply(m).expect("arrangement matches the matrix");
    let built = build_representation_bigraph(&arranged).expect("certified staircase");
    let nx = b.nx();
    let mut x = vec![SignedInterval::new(0, 0); nx];
    for i in 0..nx {
        x[a.rows[i]] = built.intervals()[i];
    }
    let mut y = vec![SignedInterval::new(0, 0); b.ny()];
    for j in 0..b.ny() {
        y[a.cols[j]] = built.intervals()[nx + j];
    }
    let (xl, yl) = side_labels(b);
    let rep = Representation::bigraph(x, y, xl, yl);
    assert!(realizes_bigraph(&rep, b), "signed bigraph representation does not round-trip");
    Decision::Yes(rep)
}

/// Bounds for the co-TT search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CottOptions {
    pub max_vertices: usize,
    pub pattern_cap: usize,
    /// Reject non-chordal graphs and graphs containing the 3-sun up front.
    pub prefilter: bool,
    /// On an exhaustive NO, look for a known forbidden induced subgraph.
    pub explain: bool,
}

/// Default bound on the vertex count for co-TT recognition.
pub const DEFAULT_MAX_VERTICES: usize = 16;

impl Default for CottOptions {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            pattern_cap: DEFAULT_PATTERN_CAP,
            prefilter: true,
            explain: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CottWitness {
    /// Chordless cycle on four or more vertices.
    Hole(Vec<usize>),
    /// Induced 3-sun.
    Sun(Embedding),
    /// Every left-endpoint order fails; optionally a named forbidden graph found inside.
    Exhausted(Option<(String, Embedding)>),
}

/// Signed interval graph recognition; any loops on `g` are ignored.
pub fn recognize_cott(g: &Graph) -> Result<Decision<Representation, CottWitness>> {
    recognize_cott_with(g, &CottOptions::default())
}

pub fn recognize_cott_with(g: &Graph, opts: &CottOptions) -> Result<Decision<Representation, CottWitness>> {
    check_size(g, opts.max_vertices)?;
    if opts.prefilter {
        if let Chordality::Hole(h) = is_chordal(g) {
            return Ok(Decision::No(CottWitness::Hole(h)));
        }
        if let Some((_, e)) = find_sun(g, 3, opts.pattern_cap)? {
            return Ok(Decision::No(CottWitness::Sun(e)));
        }
    }
    let masks = g.masks();
    let found = OrderProblem::for_graph(&masks, u64::MAX, 0)
        .solve()
        .or_else(|| OrderProblem::for_graph(&masks, 0, 0).solve());
    match found {
        Some(p) => Ok(Decision::Yes(graph_representation(g, &p)?)),
        None => {
            let named = if opts.explain { named_obstruction(g, opts.pattern_cap)? } else { None };
            Ok(Decision::No(CottWitness::Exhausted(named)))
        }
    }
}

/// Prescribed signs: vertex `v` must be positive iff `diagonal[v]`.
pub fn recognize_with_diagonal(
    g: &Graph,
    diagonal: &[bool],
    max_vertices: usize,
) -> Result<Option<Representation>> {
    check_size(g, max_vertices)?;
    if diagonal.len() != g.n() {
        return Err(Error::Shape(format!("{} diagonal entries for {} vertices", diagonal.len(), g.n())));
    }
    let pos: u64 = (0..g.n()).filter(|&v| diagonal[v]).map(|v| 1u64 << v).sum();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    OrderProblem::for_graph(&g.masks(), pos, all & !pos)
        .solve()
        .map(|p| graph_representation(g, &p))
        .transpose()
}

fn check_size(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap || g.n() > 64 {
        return Err(Error::CapExceeded {
            what: "vertex count",
            size: g.n(),
            cap: cap.min(64),
        });
    }
    Ok(())
}

/// Arranges `A(G)` plus diagonal by the placement order, builds the
/// staircase representation and maps it back to the vertices of `g`.
fn graph_representation(g: &Graph, p: &Placement) -> Result<Representation> {
    let n = g.n();
    let order = &p.order;
    let arranged = BinaryMatrix::from_fn(n, n, |i, j| {
        let (u, v) = (order[i], order[j]);
        if u == v {
            p.l[u] <= p.r[u]
        } else {
            g.has_edge(u, v)
        }
    });
    let built = build_representation_graph(&arranged)?;
    let mut back = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        back[v] = i;
    }
    let rep = Representation::graph(
        g.labels().to_vec(),
        back.iter().map(|&i| built.intervals()[i]).collect(),
    )
    .compacted();
    let mut plain = g.clone();
    plain.set_loops(None);
    if !realizes_graph(&rep, &plain) {
        return Err(Error::RoundTrip("co-TT representation".into()));
    }
    Ok(rep)
}

/// Known minimal non-co-TT graphs small enough to search for.
fn named_obstruction(g: &Graph, cap: usize) -> Result<Option<(String, Embedding)>> {
    let mut named = vec![("T".to_string(), gen_t()), ("T0".to_string(), gen_t0()), ("P".to_string(), gen_p())];
    for i in 2..=4 {
        named.push((format!("P{i}"), gen_pi(i)?));
    }
    for (name, h) in named {
        if h.n() > cap || h.n() > g.n() {
            continue;
        }
        if let Some(e) = contains_induced_capped(g, &h, cap)? {
            return Ok(Some((name, e)));
        }
    }
    Ok(None)
}

/// Whether `uv` is an edge exactly when `a_u <= b_v` and `a_v <= b_u`, for
/// every pair of distinct vertices. `pairs` is keyed by vertex label.
pub fn check_condition1(g: &Graph, pairs: &HashMap<String, (i64, i64)>) -> Result<bool> {
    let ab: Vec<(i64, i64)> = g
        .labels()
        .iter()
        .map(|l| pairs.get(l).copied().ok_or_else(|| Error::UnknownVertex(l.clone())))
        .collect::<Result<_>>()?;
    Ok((0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| g.has_edge(u, v) == (ab[u].0 <= ab[v].1 && ab[v].0 <= ab[u].1))
    }))
}

/// `(l, r)` per vertex label.
pub fn representation_pairs(rep: &Representation) -> HashMap<String, (i64, i64)> {
    rep.labels()
        .iter()
        .zip(rep.intervals())
        .map(|(l, i)| (l.clone(), (i.l, i.r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_are_unit_positive() {
        for n in 1..6 {
            let rep = recognize_cott(&Graph::complete(n)).unwrap().into_certificate().unwrap();
            assert!(rep.intervals().iter().all(|&i| i == SignedInterval::new(1, 1)));
        }
    }

    #[test]
    fn small_rejections() {
        assert!(!recognize_cott(&gen_t()).unwrap().is_yes());
        assert!(matches!(
            recognize_cott(&Graph::cycle(4)).unwrap(),
            Decision::No(CottWitness::Hole(_))
        ));
        let opts = CottOptions {
            prefilter: false,
            ..CottOptions::default()
        };
        assert!(!recognize_cott_with(&Graph::cycle(4), &opts).unwrap().is_yes());
    }

    #[test]
    fn condition1_examples() {
        let k2 = Graph::complete(2);
        let pairs: HashMap<_, _> = [("1".to_string(), (1, 2)), ("2".to_string(), (1, 2))].into();
        assert!(check_condition1(&k2, &pairs).unwrap());
        let e2 = Graph::new(2);
        let pairs: HashMap<_, _> = [("1".to_string(), (1, 2)), ("2".to_string(), (3, 4))].into();
        assert!(check_condition1(&e2, &pairs).unwrap());
        assert!(check_condition1(&e2, &HashMap::new()).is_err());
    }

    #[test]
    fn bigraph_examples() {
        let c6 = Bigraph::from_matrix(BinaryMatrix::from_rows(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]));
        assert!(!recognize_signed_interval_bigraph(&c6).is_yes());
        assert!(recognize_signed_interval_bigraph(&Bigraph::complete(2, 3)).is_yes());
    }
}
