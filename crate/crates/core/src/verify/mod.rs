//! Identity-suite registry and runner.
//!
//! Every suite is an exact check: a report passes only if both sides of every
//! identity agree entry by entry on the declared arena.

mod acc;
mod report;
mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

pub use acc::{Acc, FailureWitness};
pub use report::{to_json_lines, to_tsv, Report, Status};
pub use suites::{registry, FUSION_DIM, ORACLE_BLOCKS};

use crate::error::{Error, Result};
use crate::exactq::{sample_params, Admissibility, ParamPoint, Scalar};
use crate::par;

/// Where a suite compares operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arena {
    /// exactness windows of the truncated operators
    Window,
    /// charge blocks `0..=m_max`
    Blocks,
    /// scalar or dense-matrix identities, independent of the truncation
    Scalars,
}

impl Arena {
    pub fn as_str(self) -> &'static str {
        match self {
            Arena::Window => "window",
            Arena::Blocks => "blocks",
            Arena::Scalars => "scalars",
        }
    }
}

/// Inputs shared by every check of one suite run.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub params: ParamPoint,
    pub n: usize,
    pub m_max: usize,
    /// seed for auxiliary random data (diagonal tables, test matrices, operator words)
    pub seed: u64,
    /// replace `xi` by `xi + 1` on one side of the boundary identities
    pub tamper: bool,
}

pub type SuiteFn = fn(&Ctx) -> Result<Acc>;

/// One registered identity check.
#[derive(Clone, Copy)]
pub struct SuiteSpec {
    pub id: &'static str,
    /// the identity being checked, in formula form
    pub anchor: &'static str,
    pub arena: Arena,
    pub objects: &'static [&'static str],
    /// spectral values consumed
    pub spectral: &'static [&'static str],
    pub run: SuiteFn,
}

impl std::fmt::Debug for SuiteSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SuiteSpec").field("id", &self.id).field("arena", &self.arena).finish()
    }
}

pub fn find_suite(id: &str) -> Result<SuiteSpec> {
    registry()
        .iter()
        .find(|s| s.id == id)
        .copied()
        .ok_or_else(|| Error::Unknown(format!("suite {id:?}")))
}

/// Run one suite on one context; errors become `Status::Error` reports.
pub fn run_spec(spec: &SuiteSpec, ctx: &Ctx, trial: usize, timing: bool) -> Report {
    let start = Instant::now();
    let out = (spec.run)(ctx);
    let wall_ms = timing.then(|| start.elapsed().as_millis() as u64);
    let mut rep = Report {
        suite: spec.id.to_string(),
        trial,
        params: ctx.params.to_map().into_iter().map(|(k, v)| (k, v.to_string())).collect(),
        n: ctx.n,
        m_max: ctx.m_max,
        arena: spec.arena.as_str().to_string(),
        status: Status::Pass,
        checks: 0,
        vectors: 0,
        max_block: None,
        witness: None,
        notes: BTreeMap::new(),
        error: None,
        wall_ms,
    };
    match out {
        Ok(acc) => {
            rep.checks = acc.checks;
            rep.vectors = acc.vectors;
            rep.max_block = acc.max_block;
            rep.notes = acc.notes;
            if let Some(w) = acc.failure {
                rep.status = Status::Fail;
                rep.witness = Some(w);
            } else if acc.checks == 0 {
                rep.status = Status::Error;
                rep.error = Some("suite performed no checks".into());
            }
        }
        Err(e) => {
            rep.status = Status::Error;
            rep.error = Some(e.to_string());
        }
    }
    rep
}

/// Run suite `id` at one parameter point.
pub fn run_suite(id: &str, params: &ParamPoint, n: usize, m_max: usize) -> Result<Report> {
    let spec = find_suite(id)?;
    check_truncation(n, m_max)?;
    let ctx = Ctx { params: params.clone(), n, m_max, seed: params.digest(), tamper: false };
    Ok(run_spec(&spec, &ctx, 0, false))
}

/// Boundary factorization with `xi -> xi + 1` on the right-hand side only.
pub fn run_tampered(params: &ParamPoint, n: usize, m_max: usize) -> Result<Report> {
    let spec = find_suite("boundary-factorization-right")?;
    check_truncation(n, m_max)?;
    let ctx = Ctx { params: params.clone(), n, m_max, seed: params.digest(), tamper: true };
    Ok(run_spec(&spec, &ctx, 0, false))
}

fn check_truncation(n: usize, m_max: usize) -> Result<()> {
    if m_max > n {
        return Err(Error::Config(format!("block bound {m_max} exceeds the truncation {n}")));
    }
    Ok(())
}

/// Settings for a batch run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub suites: Vec<String>,
    pub n: usize,
    pub m_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub overrides: BTreeMap<String, Scalar>,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: vec!["all".into()],
            n: 10,
            m_max: 10,
            trials: 5,
            seed: 0,
            overrides: BTreeMap::new(),
            timing: false,
        }
    }
}

impl RunConfig {
    /// Resolve suite ids; `all` selects the whole registry in registry order.
    pub fn selected(&self) -> Result<Vec<SuiteSpec>> {
        if self.suites.iter().any(|s| s == "all") {
            return Ok(registry().to_vec());
        }
        let mut out: Vec<SuiteSpec> = Vec::new();
        for id in &self.suites {
            let s = find_suite(id)?;
            if !out.iter().any(|o| o.id == s.id) {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Parameter point of trial `t`; every suite of a trial shares it.
    pub fn trial_params(&self, t: usize) -> Result<ParamPoint> {
        let adm = Admissibility { n_max: self.n.max(16), overrides: self.overrides.clone(), ..Default::default() };
        sample_params(trial_seed(self.seed, t), &adm)
    }
}

/// Seed of trial `t` derived from the run seed.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(t as u64)
}

/// Every selected suite at `trials` parameter points; reports ordered by registry position, then trial.
pub fn run_with(specs: &[SuiteSpec], cfg: &RunConfig) -> Result<Vec<Report>> {
    if cfg.trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    check_truncation(cfg.n, cfg.m_max)?;
    let points = (0..cfg.trials).map(|t| cfg.trial_params(t)).collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize)> = (0..specs.len()).flat_map(|s| (0..cfg.trials).map(move |t| (s, t))).collect();
    let reports = par::map(jobs, |(s, t)| {
        let ctx = Ctx {
            params: points[t].clone(),
            n: cfg.n,
            m_max: cfg.m_max,
            seed: trial_seed(cfg.seed, t),
            tamper: false,
        };
        run_spec(&specs[s], &ctx, t, cfg.timing)
    });
    Ok(reports)
}

pub fn run_config(cfg: &RunConfig) -> Result<Vec<Report>> {
    run_with(&cfg.selected()?, cfg)
}

/// The whole registry at `trials` points derived from `seed`.
pub fn run_all(seed: u64, trials: usize, n: usize, m_max: usize) -> Result<Vec<Report>> {
    run_config(&RunConfig { seed, trials, n, m_max, ..Default::default() })
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.status == Status::Pass)
}
