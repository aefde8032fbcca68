//! Recognizers against oracles on enumerated and sampled instances.

use std::fmt::Write;

use rayon::prelude::*;

use crate::enumerate::{all_matrices, graphs_up_to_iso, random_graph, random_matrix, rng};
use crate::error::{Error, Result};
use crate::ferrers::{fdim_at_most_2, ferrers_cover, find_staircase};
use crate::format::{serialize_graph, serialize_matrix};
use crate::graph::{Bigraph, Graph};
use crate::interval_bigraph::is_interval_bigraph;
use crate::matrix::BinaryMatrix;
use crate::oracle::{oracle_cott, oracle_interval_bigraph, oracle_signed_interval_bigraph, oracle_staircase};
use crate::recognize::{recognize_cott, recognize_signed_interval_bigraph};

/// Largest `max_n` the oracles can arbitrate.
pub const MAX_N: usize = 6;
/// Sample count when the space is too large to enumerate.
pub const SAMPLES: usize = 200;
/// The endpoint-grid oracle is only run up to this many vertices.
pub const SIGNED_ORACLE_VERTICES: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub check: &'static str,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub max_n: usize,
    pub seed: u64,
    pub matrix_instances: usize,
    pub graph_instances: usize,
    pub exhaustive: bool,
    pub divergence: Option<Divergence>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.divergence.is_none()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let mode = if self.exhaustive { "exhaustive" } else { "sampled" };
        writeln!(s, "crosscheck max_n={} seed={} ({mode})", self.max_n, self.seed).unwrap();
        writeln!(s, "matrices checked: {}", self.matrix_instances).unwrap();
        writeln!(s, "graphs checked: {}", self.graph_instances).unwrap();
        match &self.divergence {
            None => writeln!(s, "result: PASS").unwrap(),
            Some(d) => {
                writeln!(s, "result: DIVERGENCE in {}: {}", d.check, d.detail).unwrap();
                writeln!(s, "counterexample:\n{}", d.instance.trim_end()).unwrap();
            }
        }
        s
    }
}

fn check_matrix(m: &BinaryMatrix) -> Result<Option<Divergence>> {
    let div = |check, detail: String| {
        Ok(Some(Divergence {
            check,
            instance: serialize_matrix(m),
            detail,
        }))
    };
    let fdim = fdim_at_most_2(m).is_yes();
    let staircase = oracle_staircase(m)?.is_some();
    if fdim != staircase {
        return div("fdim2-vs-staircase-oracle", format!("recognizer {fdim}, oracle {staircase}"));
    }
    if find_staircase(m).is_some() != fdim || ferrers_cover(m, false).is_some() != fdim {
        return div("fdim2-certificates", "staircase or cover search disagrees".into());
    }
    let b = Bigraph::from_matrix(m.clone());
    if recognize_signed_interval_bigraph(&b).is_yes() != fdim {
        return div("signed-bigraph-vs-fdim2", format!("fdim2 {fdim}"));
    }
    if m.rows() + m.cols() <= SIGNED_ORACLE_VERTICES {
        let grid = oracle_signed_interval_bigraph(&b)?.is_some();
        if grid != fdim {
            return div("signed-bigraph-grid-oracle", format!("recognizer {fdim}, oracle {grid}"));
        }
    }
    let interval = is_interval_bigraph(&b)?.is_yes();
    let oracle = oracle_interval_bigraph(&b)?;
    if interval != oracle {
        return div("interval-bigraph-oracle", format!("recognizer {interval}, oracle {oracle}"));
    }
    if ferrers_cover(m, true).is_some() != interval {
        return div("interval-bigraph-cover", format!("recognizer {interval}"));
    }
    Ok(None)
}

fn check_graph(g: &Graph) -> Result<Option<Divergence>> {
    let fast = recognize_cott(g)?.is_yes();
    let slow = oracle_cott(g)?.is_some();
    Ok((fast != slow).then(|| Divergence {
        check: "cott-oracle",
        instance: serialize_graph(g),
        detail: format!("recognizer {fast}, oracle {slow}"),
    }))
}

/// First failing instance in generation order, found in parallel.
fn first_divergence<T: Sync + Send>(
    items: &[T],
    check: impl Fn(&T) -> Result<Option<Divergence>> + Sync + Send,
) -> Result<Option<Divergence>> {
    let results: Vec<Result<Option<Divergence>>> = items.par_iter().map(check).collect();
    for r in results {
        if let Some(d) = r? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Matrices of every shape up to `max_n` x `max_n` and graphs on up to
/// `max_n` vertices; exhaustive for `max_n <= 3`, seeded samples otherwise
/// (graphs stay exhaustive up to 5 vertices).
pub fn crosscheck(max_n: usize, seed: u64) -> Result<CrosscheckReport> {
    if max_n > MAX_N {
        return Err(Error::CapExceeded {
            what: "crosscheck size",
            size: max_n,
            cap: MAX_N,
        });
    }
    let exhaustive = max_n <= 3;
    let matrices: Vec<BinaryMatrix> = if exhaustive {
        (1..=max_n)
            .flat_map(|r| (1..=max_n).map(move |c| (r, c)))
            .flat_map(|(r, c)| all_matrices(r, c))
            .collect()
    } else {
        let mut r = rng(seed);
        (0..SAMPLES).map(|_| random_matrix(&mut r, max_n, max_n)).collect()
    };
    let graphs: Vec<Graph> = if max_n <= 5 {
        (1..=max_n).flat_map(graphs_up_to_iso).collect()
    } else {
        let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
        (0..SAMPLES).map(|_| random_graph(&mut r, max_n, 0.5)).collect()
    };
    let mut divergence = first_divergence(&matrices, check_matrix)?;
    if divergence.is_none() {
        divergence = first_divergence(&graphs, check_graph)?;
    }
    Ok(CrosscheckReport {
        max_n,
        seed,
        matrix_instances: matrices.len(),
        graph_instances: graphs.len(),
        exhaustive,
        divergence,
    })
}
