//! JSON encodings of certificates, witnesses and representations.
//!
//! Row, column and vertex indices are 1-based throughout.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ferrers::{Arrangement, Fdim2Certificate, FerrersCover, OddCycle};
use crate::graph::Graph;
use crate::interval_bigraph::{IntervalCertificate, NotInterval};
use crate::matrix::{BinaryMatrix, Permutation};
use crate::recognize::CottWitness;
use crate::signed::{Representation, RepresentationKind, SignedInterval};
use crate::zero_partition::ZeroPartition;

pub const SCHEMA: &str = "ferrerslab.report";
pub const SCHEMA_VERSION: u32 = 1;

/// Report skeleton with the schema header.
pub fn header(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m
}

fn one_based(p: &Permutation) -> Vec<usize> {
    p.as_slice().iter().map(|&i| i + 1).collect()
}

fn cell(c: (usize, usize)) -> Value {
    json!([c.0 + 1, c.1 + 1])
}

pub fn matrix(m: &BinaryMatrix) -> Value {
    json!((0..m.rows())
        .map(|i| m.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect::<String>())
        .collect::<Vec<_>>())
}

pub fn arrangement(a: &Arrangement) -> Value {
    json!({ "rows": one_based(&a.rows), "cols": one_based(&a.cols) })
}

pub fn cover(c: &FerrersCover) -> Value {
    json!({ "f1": matrix(&c.f1), "f2": matrix(&c.f2), "union_complete": c.union_complete })
}

pub fn zero_partition(z: &ZeroPartition) -> Value {
    json!(z
        .cells
        .iter()
        .map(|&((i, j), c)| json!([i + 1, j + 1, c.to_string()]))
        .collect::<Vec<_>>())
}

pub fn odd_cycle(w: &OddCycle) -> Value {
    json!({
        "type": "odd_cycle",
        "length": w.cells.len(),
        "cells": w.cells.iter().map(|&c| cell(c)).collect::<Vec<_>>(),
    })
}

pub fn fdim2_certificate(c: &Fdim2Certificate) -> Value {
    json!({ "arrangement": arrangement(&c.arrangement), "cover": cover(&c.cover) })
}

pub fn interval_certificate(c: &IntervalCertificate) -> Value {
    json!({
        "arrangement": arrangement(&c.arrangement),
        "zero_partition": zero_partition(&c.zero_partition),
        "representation": representation(&c.representation),
    })
}

pub fn not_interval(w: &NotInterval) -> Value {
    match w {
        NotInterval::OddCycle(c) => odd_cycle(c),
        NotInterval::Exhausted => json!({
            "type": "exhausted",
            "detail": "no row and column order admits a zero partition",
        }),
    }
}

pub fn cott_witness(w: &CottWitness, g: &Graph) -> Value {
    let names = |vs: &[usize]| vs.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>();
    match w {
        CottWitness::Hole(h) => json!({ "type": "hole", "length": h.len(), "vertices": names(h) }),
        CottWitness::Sun(e) => json!({ "type": "sun", "k": 3, "vertices": names(&e.0) }),
        CottWitness::Exhausted(named) => {
            let mut v = json!({
                "type": "exhausted",
                "detail": "no signed interval representation exists",
            });
            if let Some((name, e)) = named {
                v["forbidden_subgraph"] = json!({ "name": name, "vertices": names(&e.0) });
            }
            v
        }
    }
}

pub fn representation(rep: &Representation) -> Value {
    let kind = match rep.kind() {
        RepresentationKind::Graph => "graph",
        RepresentationKind::Bigraph { .. } => "bigraph",
    };
    let intervals: Vec<Value> = rep
        .labels()
        .iter()
        .zip(rep.intervals())
        .map(|(v, i)| json!({ "vertex": v, "l": i.l, "r": i.r, "sign": i.sign() }))
        .collect();
    json!({ "kind": kind, "intervals": intervals })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

/// Reads the output of [`representation`], or a bare list of intervals
/// (taken as graph kind). Bigraph vertices must be named `x..` then `y..`.
pub fn parse_representation(text: &str) -> Result<Representation> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let (kind, list) = match &v {
        Value::Array(list) => ("graph", list),
        Value::Object(o) => (
            o.get("kind").and_then(Value::as_str).unwrap_or("graph"),
            o.get("intervals")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"intervals\" array"))?,
        ),
        _ => return Err(bad("expected an object or an array")),
    };
    let mut labels = Vec::new();
    let mut intervals = Vec::new();
    for item in list {
        let vertex = match item.get("vertex") {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Number(n)) => n.to_string(),
            _ => return Err(bad("interval without a vertex")),
        };
        let end = |k: &str| {
            item.get(k)
                .and_then(Value::as_i64)
                .ok_or_else(|| bad(format!("vertex {vertex}: missing integer {k}")))
        };
        let iv = SignedInterval::new(end("l")?, end("r")?);
        if let Some(sign) = item.get("sign").and_then(Value::as_str) {
            let allowed = if iv.is_positive() { ["+", "positive"] } else { ["-", "negative"] };
            if !allowed.contains(&sign) {
                return Err(bad(format!("vertex {vertex}: sign {sign} contradicts endpoints")));
            }
        }
        labels.push(vertex);
        intervals.push(iv);
    }
    match kind {
        "graph" => Ok(Representation::graph(labels, intervals)),
        "bigraph" => {
            let nx = labels.iter().take_while(|l| l.starts_with('x')).count();
            if labels[nx..].iter().any(|l| !l.starts_with('y')) {
                return Err(bad("bigraph vertices must be x.. followed by y.."));
            }
            Ok(Representation::bigraph(
                intervals[..nx].to_vec(),
                intervals[nx..].to_vec(),
                labels[..nx].to_vec(),
                labels[nx..].to_vec(),
            ))
        }
        other => Err(bad(format!("unknown representation kind {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representation_round_trip() {
        let rep = Representation::graph(
            vec!["a".into(), "b".into()],
            vec![SignedInterval::new(1, 2), SignedInterval::new(3, 1)],
        );
        let text = representation(&rep).to_string();
        assert_eq!(parse_representation(&text).unwrap(), rep);
        let bare = r#"[{"vertex": "a", "l": 1, "r": 2}, {"vertex": "b", "l": 3, "r": 1}]"#;
        assert_eq!(parse_representation(bare).unwrap(), rep);
    }

    #[test]
    fn contradictory_sign_is_rejected() {
        let bad = r#"[{"vertex": "a", "l": 3, "r": 2, "sign": "positive"}]"#;
        assert!(parse_representation(bad).is_err());
    }
}
