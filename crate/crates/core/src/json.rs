//! Canonical JSON documents for groups, rings and spectrum reports.
//!
//! Output has sorted keys and no insignificant whitespace, so equal
//! structures always serialize to identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructions::catalog::Structure;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;
use crate::spectrum::{gate_check_32, GateReason, Spectrum};

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Document {
    Group {
        n: usize,
        identity: usize,
        table: Vec<Vec<usize>>,
    },
    Ring {
        invariants: Vec<u64>,
        sc: Vec<Vec<Vec<u64>>>,
    },
}

pub fn group_value(g: &FiniteGroup) -> Value {
    json!({
        "type": "group",
        "n": g.order(),
        "identity": g.identity(),
        "table": g.table_rows(),
    })
}

pub fn ring_value(r: &FiniteRing) -> Value {
    json!({
        "type": "ring",
        "invariants": r.invariants(),
        "sc": r.structure_constants(),
    })
}

pub fn structure_value(s: &Structure) -> Value {
    match s {
        Structure::Group(g) => group_value(g),
        Structure::Ring(r) => ring_value(r),
    }
}

/// Canonical text of a structure document.
pub fn to_canonical_json(s: &Structure) -> String {
    structure_value(s).to_string()
}

/// Parses and validates a structure document.
///
/// A ring with no invariants and an empty tensor is the ring of order 1.
pub fn from_json(text: &str) -> Result<Structure> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    match doc {
        Document::Group { n, identity, table } => Ok(Structure::Group(FiniteGroup::validate(
            n, &table, identity,
        )?)),
        Document::Ring { invariants, sc } if invariants.is_empty() && sc.is_empty() => {
            Ok(Structure::Ring(FiniteRing::zero()))
        }
        Document::Ring { invariants, sc } => {
            Ok(Structure::Ring(FiniteRing::validate(invariants, sc)?))
        }
    }
}

pub fn save(path: &std::path::Path, s: &Structure) -> Result<()> {
    std::fs::write(path, to_canonical_json(s) + "\n")
        .map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

pub fn load(path: &std::path::Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

/// `{"family", "poly", "values": [{"p_over_q", "count"}], "gate32": {...}}`
pub fn spectrum_value(s: &Spectrum) -> Value {
    let gate = gate_check_32(s);
    let violations: Vec<Value> = gate
        .violations
        .iter()
        .map(|v| {
            json!({
                "p_over_q": v.value.to_string(),
                "reason": match v.reason {
                    GateReason::OneHalf => "one-half",
                    GateReason::NotInList => "not-in-list",
                },
                "witness": v.witness.as_ref().map(ring_value),
            })
        })
        .collect();
    json!({
        "family": s.family,
        "poly": s.poly.to_string(),
        "values": s.entries().map(|e| json!({"p_over_q": e.value.to_string(), "count": e.count})).collect::<Vec<_>>(),
        "gate32": {"pass": gate.pass, "violations": violations},
    })
}
