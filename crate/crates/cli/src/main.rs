// SPDX-License-Identifier: Apache-2.0

//! `renorm`: evaluate and verify the analytic and smooth renormings.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 domain or convergence error.

mod args;
mod commands;
mod config;
mod input;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, NormArgs, OutArgs, SamplingArgs};
use commands::Outcome;
use config::{parse_plane, FileConfig, RunConfig};

/// Malformed input: exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InputError>() || cause.is::<serde_json::Error>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<renorm_core::Error>() {
            return if e.is_input_error() { 2 } else { 3 };
        }
    }
    3
}

fn run(cli: Cli) -> Result<(Outcome, Option<std::path::PathBuf>)> {
    let file = FileConfig::load(cli.config.as_deref())?;
    let none = SamplingArgs::default();
    let resolve =
        |norm: &NormArgs, sampling: &SamplingArgs, out: &OutArgs| RunConfig::resolve(&file, norm, sampling, out);
    let (outcome, cfg) = match &cli.command {
        Command::Eval { input, norm, out } => {
            let cfg = resolve(norm, &none, out)?;
            (commands::eval(&cfg, input)?, cfg)
        }
        Command::Verify { suite, norm, sampling, k, m, out } => {
            let cfg = resolve(norm, sampling, out)?;
            let suite = suite.clone().or_else(|| file.suite.clone()).unwrap_or_else(|| "all".into());
            (commands::verify(&cfg, &suite, k.or(file.k), m.or(file.m))?, cfg)
        }
        Command::Sphere { plane, resolution, norm, out } => {
            let cfg = resolve(norm, &none, out)?;
            let plane = match plane {
                Some(s) => parse_plane(s)?,
                None => file.plane.unwrap_or((1, 2)),
            };
            let resolution = resolution.or(file.resolution).unwrap_or(360);
            (commands::sphere(&cfg, plane, resolution)?, cfg)
        }
        Command::Schedule { k, p, out } => {
            let norm = NormArgs { p: *p, ..NormArgs::default() };
            let cfg = resolve(&norm, &none, out)?;
            (commands::schedule(k.or(file.k).unwrap_or(20), cfg.p)?, cfg)
        }
        Command::EmbedL1 { input, m, norm, out } => {
            let cfg = resolve(norm, &none, out)?;
            (commands::embed(&cfg, input, m.or(file.m))?, cfg)
        }
    };
    Ok((outcome, cfg.out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, out)) => {
            let written = match out {
                Some(path) => std::fs::write(&path, &outcome.text),
                None => std::io::stdout().write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(3);
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
