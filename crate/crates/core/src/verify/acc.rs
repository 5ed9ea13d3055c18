use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactq::Scalar;
use crate::fock::{Agreement, FockOp, Witness};
use crate::linalg::Matrix;
use crate::reps::RelationReport;

/// First point where the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub check: String,
    pub input: String,
    pub charge: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

fn show(v: &[(String, Scalar)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(l, c)| format!("({c}) {l}")).collect::<Vec<_>>().join(" + ")
}

impl FailureWitness {
    fn from_witness(check: &str, w: Witness) -> Self {
        FailureWitness { check: check.into(), input: w.input, charge: Some(w.charge), lhs: show(&w.lhs), rhs: show(&w.rhs) }
    }
}

/// Running tally of one suite: sub-checks, vectors compared, first failure, notes.
#[derive(Clone, Debug, Default)]
pub struct Acc {
    pub checks: usize,
    pub vectors: usize,
    pub max_block: Option<usize>,
    pub failure: Option<FailureWitness>,
    pub notes: BTreeMap<String, String>,
}

impl Acc {
    pub fn new() -> Self {
        Acc::default()
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(&mut self, w: FailureWitness) {
        if self.failure.is_none() {
            self.failure = Some(w);
        }
    }

    fn record(&mut self, check: &str, a: Agreement) {
        self.checks += 1;
        match a {
            Agreement::Equal { checked } => self.vectors += checked,
            Agreement::Differ(w) => self.fail(FailureWitness::from_witness(check, w)),
        }
    }

    /// Compare on the intersection of both exactness windows.
    pub fn window(&mut self, check: &str, lhs: &FockOp, rhs: &FockOp) -> Result<()> {
        let a = lhs.agree_on_window(rhs)?;
        self.record(check, a);
        Ok(())
    }

    /// Compare on charge blocks `0..=m`.
    pub fn blocks(&mut self, check: &str, lhs: &FockOp, rhs: &FockOp, m: usize) -> Result<()> {
        let a = lhs.agree_on_blocks(rhs, m)?;
        self.record(check, a);
        self.max_block = Some(self.max_block.map_or(m, |b| b.max(m)));
        Ok(())
    }

    pub fn scalars(&mut self, check: &str, lhs: &Scalar, rhs: &Scalar) {
        self.checks += 1;
        self.vectors += 1;
        if lhs != rhs {
            self.fail(FailureWitness {
                check: check.into(),
                input: "scalar".into(),
                charge: None,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn matrices(&mut self, check: &str, lhs: &Matrix, rhs: &Matrix) {
        self.checks += 1;
        self.vectors += lhs.cols();
        if let Some((i, j)) = lhs.first_difference(rhs) {
            let at = |m: &Matrix| if i < m.rows() && j < m.cols() { m.get(i, j).to_string() } else { "shape".into() };
            self.fail(FailureWitness {
                check: check.into(),
                input: format!("entry ({i}, {j})"),
                charge: None,
                lhs: at(lhs),
                rhs: at(rhs),
            });
        }
    }

    /// A yes/no property with a description of what went wrong.
    pub fn truth(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(FailureWitness {
                check: check.into(),
                input: detail(),
                charge: None,
                lhs: String::new(),
                rhs: String::new(),
            });
        }
    }

    /// Fold in a representation self-check.
    pub fn relations(&mut self, prefix: &str, r: &RelationReport) {
        self.checks += r.checked.len();
        if let Some(f) = r.failures.first() {
            self.fail(FailureWitness::from_witness(&format!("{prefix}: {}", f.relation), f.witness.clone()));
        }
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        self.notes.insert(key.into(), value.to_string());
    }
}
