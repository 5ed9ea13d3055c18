use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verify::FailureWitness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// missing prerequisite or inadmissible parameters; not a verdict on the identity
    Error,
}

/// Outcome of one suite at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub trial: usize,
    pub params: BTreeMap<String, String>,
    pub n: usize,
    pub m_max: usize,
    pub arena: String,
    pub status: Status,
    /// sub-identities compared
    pub checks: usize,
    /// basis vectors or scalars compared
    pub vectors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_block: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<FailureWitness>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub notes: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

pub fn to_json_lines(reports: &[Report]) -> Result<String> {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?);
        out.push('\n');
    }
    Ok(out)
}

/// trials, passes, deepest block, summed wall time
type Row = (usize, usize, Option<usize>, Option<u64>);

/// One row per suite: id, trials, passes, deepest block, summed wall time (or `-`).
pub fn to_tsv(reports: &[Report]) -> String {
    let mut order: Vec<&str> = Vec::new();
    let mut rows: BTreeMap<&str, Row> = BTreeMap::new();
    for r in reports {
        let e = rows.entry(r.suite.as_str()).or_insert_with(|| {
            order.push(r.suite.as_str());
            (0, 0, None, Some(0))
        });
        e.0 += 1;
        e.1 += usize::from(r.status == Status::Pass);
        if let Some(b) = r.max_block {
            e.2 = Some(e.2.map_or(b, |x| x.max(b)));
        }
        e.3 = match (e.3, r.wall_ms) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
    }
    let mut out = String::from("suite\ttrials\tpassed\tmax_block\twall_ms\n");
    for id in order {
        let (t, p, b, w) = rows[id];
        let b = b.map_or("-".to_string(), |b| b.to_string());
        let w = w.map_or("-".to_string(), |w| w.to_string());
        writeln!(out, "{id}\t{t}\t{p}\t{b}\t{w}").expect("string write");
    }
    out
}
