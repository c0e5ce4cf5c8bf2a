// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Parser, Debug)]
#[command(name = "renorm", version, about = "Evaluate and verify analytic and smooth equivalent norms")]
pub struct Cli {
    /// JSON file with default option values; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a norm on a vector file.
    Eval {
        /// Vector in `{"entries": ...}` or `{"prefix": ..., "tail_period": ...}` form.
        input: PathBuf,
        #[command(flatten)]
        norm: NormArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run verification suites and emit a JSON report.
    Verify {
        /// One of axioms, sandwich, fd, locality, embedding, schedule, bump, roots, all.
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        norm: NormArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Upper index for schedule checks.
        #[arg(long)]
        k: Option<usize>,
        /// Largest embedding dimension.
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sample a planar section of the unit sphere as `angle,radius` CSV.
    Sphere {
        /// Two distinct labels, e.g. `1,2`.
        #[arg(long)]
        plane: Option<String>,
        #[arg(long)]
        resolution: Option<usize>,
        #[command(flatten)]
        norm: NormArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tabulate the smooth-norm schedule.
    Schedule {
        #[arg(long)]
        k: Option<usize>,
        /// Base exponent used for the `q` column.
        #[arg(long)]
        p: Option<u32>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Embed `ℓ₁^m` coefficients into a finitely valued sequence.
    #[command(name = "embed-l1")]
    EmbedL1 {
        /// Coefficients in `{"entries": ...}` form over labels `1..=m`.
        input: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        norm: NormArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(ValueEnum, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum NormSel {
    LinfAnalytic,
    LpSmooth,
    LpF,
    Base,
}

#[derive(Args, Debug, Default)]
pub struct NormArgs {
    #[arg(long, value_enum)]
    pub norm: Option<NormSel>,
    /// Analytic exponent for linf-analytic, base exponent otherwise.
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub eps1: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub max_support: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct SamplingArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct OutArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
