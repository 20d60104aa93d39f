//! The `lsha-prove` command.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::engine::{self, refute, EngineError, MergeMode, SaturationConfig, Strategy};
use crate::frontend::parse_problem;
use crate::oracle::{max_reliability_agrees, OracleLimits};

pub const EXIT_UNSAT: i32 = 0;
pub const EXIT_SATURATED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_RESOURCE_LIMIT: i32 = 3;
pub const EXIT_ORACLE_DISAGREES: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Refute a set of clauses labelled with linguistic truth values.
///
/// Exit status: 0 refutation found, 1 saturated without one, 2 bad input or
/// options, 3 resource limit, 4 oracle disagreement.
#[derive(Clone, Debug, Parser)]
#[command(name = "lsha-prove", version)]
pub struct RunConfig {
    /// Problem file.
    #[arg(long, short)]
    pub input: PathBuf,

    /// Saturation strategy: alpha or naive. Overrides the file's option.
    #[arg(long)]
    pub strategy: Option<Strategy>,

    /// Merge same-atom literals in resolvents (off or max_label; bare flag
    /// means max_label). Overrides the file's option.
    #[arg(long, num_args = 0..=1, default_missing_value = "max_label")]
    pub merge_duplicates: Option<MergeMode>,

    /// Cap on clauses derived. Overrides the file's option.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_steps: Option<u64>,

    /// Output format for the proof.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cross-check the result with the brute-force oracles.
    #[arg(long)]
    pub check_oracle: bool,

    /// Cap on interpretations enumerated by the oracle.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 200_000)]
    pub max_interpretations: u64,
}

/// Parses `args` (program name first) and runs. Usage errors exit with 2.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                EXIT_INPUT_ERROR
            }
        }
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let text = match std::fs::read_to_string(&config.input) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", config.input.display())?;
            return Ok(EXIT_INPUT_ERROR);
        }
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            writeln!(err, "{}:{e}", config.input.display())?;
            return Ok(EXIT_INPUT_ERROR);
        }
    };
    let sig = &problem.signature;
    let defaults = SaturationConfig::default();
    let saturation = SaturationConfig {
        strategy: config
            .strategy
            .or(problem.directives.strategy)
            .unwrap_or(defaults.strategy),
        merge: config
            .merge_duplicates
            .or(problem.directives.merge)
            .unwrap_or(defaults.merge),
        max_steps: config
            .max_steps
            .map(|n| usize::try_from(n).unwrap_or(usize::MAX))
            .or(problem.directives.max_steps)
            .unwrap_or(defaults.max_steps),
    };

    let seed = problem.seed();
    let store = match engine::prove(seed.iter().cloned(), &saturation) {
        Ok((store, _)) => store,
        Err((_, EngineError::ResourceLimit { max_steps })) => {
            writeln!(err, "resource limit: {max_steps} derivation steps without saturation")?;
            return Ok(EXIT_RESOURCE_LIMIT);
        }
        Err((_, e)) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_INPUT_ERROR);
        }
    };

    let mut code = match refute(&store) {
        Some(proof) => {
            writeln!(out, "UNSAT reliability={}", sig.show(proof.reliability()))?;
            match config.format {
                Format::Text => write!(out, "{}", proof.to_text(sig))?,
                Format::Json => writeln!(out, "{}", proof.to_json(sig))?,
                Format::Dot => write!(out, "{}", proof.to_dot(sig))?,
            }
            EXIT_UNSAT
        }
        None => {
            writeln!(out, "SATURATED (no refutation)")?;
            EXIT_SATURATED
        }
    };

    if config.check_oracle {
        let limits = OracleLimits {
            max_interpretations: config.max_interpretations,
            max_steps: saturation.max_steps,
            ..OracleLimits::default()
        };
        match max_reliability_agrees(sig, &seed, saturation.merge, &limits) {
            Ok(agreement) => {
                writeln!(out, "ORACLE {}", if agreement.agrees() { "agree" } else { "DISAGREE" })?;
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&agreement.to_json_value(sig)).expect("json values serialize")
                )?;
                if !agreement.agrees() {
                    code = EXIT_ORACLE_DISAGREES;
                }
            }
            Err(e) => {
                writeln!(err, "resource limit: oracle: {e}")?;
                code = EXIT_RESOURCE_LIMIT;
            }
        }
    }
    Ok(code)
}
