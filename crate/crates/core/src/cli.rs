//! Command-line front end for the suite runner.
//!
//! Exit status: 0 if every selected suite passes at every trial, 1 if any
//! fails (or errors inside a suite), 2 on a configuration problem.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};

use crate::exactq::Scalar;
use crate::par::{set_execution, Execution};
use crate::verify::{all_passed, registry, run_with, to_json_lines, to_tsv, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "qkfact", version, about = "Exact identity checks for oscillator-algebra K- and R-operators")]
pub struct Args {
    /// Suite id to run (repeatable); `all` runs the whole registry
    #[arg(long = "suite", default_value = "all")]
    pub suites: Vec<String>,
    /// Fock truncation N
    #[arg(long = "fock-dim", default_value_t = 10)]
    pub fock_dim: usize,
    /// Largest charge block compared by block suites
    #[arg(long = "block-max", default_value_t = 10)]
    pub block_max: usize,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fix a parameter, e.g. `--param q=2/3` (repeatable)
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    /// Output file; standard output if absent
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Record wall-clock times (makes the output run-dependent)
    #[arg(long)]
    pub timing: bool,
    /// Disable the thread pool
    #[arg(long)]
    pub sequential: bool,
    /// Print the suite registry and exit
    #[arg(long)]
    pub list: bool,
}

struct Usage(String);

fn parse_overrides(raw: &[String]) -> Result<BTreeMap<String, Scalar>, Usage> {
    let mut out = BTreeMap::new();
    for kv in raw {
        let (k, v) = kv.split_once('=').ok_or_else(|| Usage(format!("--param {kv:?}: expected KEY=VALUE")))?;
        let v: Scalar = v.parse().map_err(|e| Usage(format!("--param {kv:?}: {e}")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn config(args: &Args) -> Result<RunConfig, Usage> {
    Ok(RunConfig {
        suites: args.suites.clone(),
        n: args.fock_dim,
        m_max: args.block_max,
        trials: args.trials,
        seed: args.seed,
        overrides: parse_overrides(&args.params)?,
        timing: args.timing,
    })
}

fn execute(args: &Args, stdout: &mut dyn Write) -> Result<i32, Usage> {
    if args.list {
        for s in registry() {
            writeln!(stdout, "{}\t{}\t{}", s.id, s.arena.as_str(), s.anchor).map_err(|e| Usage(e.to_string()))?;
        }
        return Ok(0);
    }
    let cfg = config(args)?;
    let specs = cfg.selected().map_err(|e| Usage(format!("--suite: {e}")))?;
    if cfg.trials == 0 {
        return Err(Usage("--trials: must be at least 1".into()));
    }
    if cfg.m_max > cfg.n {
        return Err(Usage(format!("--block-max: {} exceeds --fock-dim {}", cfg.m_max, cfg.n)));
    }
    for t in 0..cfg.trials {
        cfg.trial_params(t).map_err(|e| Usage(format!("--param: {e}")))?;
    }
    set_execution(if args.sequential { Execution::Sequential } else { Execution::Parallel });
    let reports = run_with(&specs, &cfg).map_err(|e| Usage(e.to_string()))?;
    let text = match args.format {
        Format::Json => to_json_lines(&reports).map_err(|e| Usage(e.to_string()))?,
        Format::Tsv => to_tsv(&reports),
    };
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Usage(format!("--out {}: {e}", path.display())))?,
        None => stdout.write_all(text.as_bytes()).map_err(|e| Usage(e.to_string()))?,
    }
    Ok(if all_passed(&reports) { 0 } else { 1 })
}

/// Parse `argv` (program name first), run, and return the exit status.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match execute(&args, stdout) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

pub fn parse_and_run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
