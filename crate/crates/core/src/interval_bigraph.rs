//! Interval bigraph recognition.

use crate::decision::Decision;
use crate::error::{Error, Result};
use crate::ferrers::{
    arrangement_from_placement, associated_graph, bigraph_placement, Arrangement, OddCycle,
};
use crate::bipartite::{is_bipartite, TwoColoring};
use crate::graph::Bigraph;
use crate::signed::{side_labels, Representation, SignedInterval};
use crate::zero_partition::{zero_partition, ZeroPartition};

/// Default bound on each side for the exhaustive searches.
pub const DEFAULT_MAX_SIDE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCertificate {
    pub arrangement: Arrangement,
    /// Zero partition of the arranged matrix.
    pub zero_partition: ZeroPartition,
    /// All intervals positive.
    pub representation: Representation,
}

impl IntervalCertificate {
    pub fn verify(&self, b: &Bigraph) -> bool {
        let Ok(arranged) = self.arrangement.apply(b.matrix()) else {
            return false;
        };
        self.zero_partition.is_valid_for(&arranged)
            && self.representation.is_all_positive()
            && crate::signed::realizes_bigraph(&self.representation, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotInterval {
    /// Ferrers dimension already exceeds two.
    OddCycle(OddCycle),
    /// No row and column order admits a zero partition.
    Exhausted,
}

pub fn is_interval_bigraph(b: &Bigraph) -> Result<Decision<IntervalCertificate, NotInterval>> {
    is_interval_bigraph_capped(b, DEFAULT_MAX_SIDE)
}

pub fn is_interval_bigraph_capped(
    b: &Bigraph,
    max_side: usize,
) -> Result<Decision<IntervalCertificate, NotInterval>> {
    let side = b.nx().max(b.ny());
    if side > max_side {
        return Err(Error::CapExceeded {
            what: "bigraph side",
            size: side,
            cap: max_side,
        });
    }
    let m = b.matrix();
    let h = associated_graph(m);
    if let TwoColoring::OddCycle(c) = is_bipartite(&h.graph) {
        return Ok(Decision::No(NotInterval::OddCycle(OddCycle {
            cells: c.iter().map(|&k| h.cells[k]).collect(),
        })));
    }
    let Some(p) = bigraph_placement(m, true) else {
        return Ok(Decision::No(NotInterval::Exhausted));
    };
    let arrangement = arrangement_from_placement(m, &p);
    let zp = zero_partition(&arrangement.apply(m)?)
        .expect("left-endpoint order of a positive representation has a zero partition");
    let nx = b.nx();
    let iv = |v: usize| SignedInterval::new(p.l[v], p.r[v]);
    let (xl, yl) = side_labels(b);
    let representation = Representation::bigraph(
        (0..nx).map(iv).collect(),
        (nx..nx + b.ny()).map(iv).collect(),
        xl,
        yl,
    )
    .compacted();
    let cert = IntervalCertificate {
        arrangement,
        zero_partition: zp,
        representation,
    };
    if !cert.verify(b) {
        return Err(Error::RoundTrip("interval bigraph certificate".into()));
    }
    Ok(Decision::Yes(cert))
}
