// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};

use anyhow::Result;
use renorm_core::verify::suites::NormKind;
use serde::Deserialize;

use crate::args::{NormArgs, NormSel, OutArgs, SamplingArgs};
use crate::InputError;

/// Option defaults read from `--config`.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub norm: Option<NormSel>,
    pub p: Option<u32>,
    pub eps1: Option<f64>,
    pub tol: Option<f64>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub plane: Option<(u64, u64)>,
    pub resolution: Option<usize>,
    pub max_support: Option<usize>,
    pub out: Option<PathBuf>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub suite: Option<String>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else { return Ok(Self::default()) };
        let text = std::fs::read_to_string(path)
            .map_err(|e| InputError(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| InputError(format!("bad config {}: {e}", path.display())).into())
    }
}

/// Fully resolved options for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// `None` lets `verify` cover both constructions.
    pub norm: Option<NormSel>,
    pub p: Option<u32>,
    pub eps1: f64,
    pub tol: f64,
    pub seed: u64,
    pub samples: Option<usize>,
    pub max_support: usize,
    pub out: Option<PathBuf>,
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(InputError(format!("--{name} must be positive, got {v}")).into())
    }
}

impl RunConfig {
    pub fn resolve(file: &FileConfig, norm: &NormArgs, sampling: &SamplingArgs, out: &OutArgs) -> Result<Self> {
        let samples = sampling.samples.or(file.samples);
        if samples == Some(0) {
            return Err(InputError("--samples must be at least 1".into()).into());
        }
        let eps1 = norm.eps1.or(file.eps1).unwrap_or(0.1);
        if !(eps1 > 0.0 && eps1 < 1.0) {
            return Err(InputError(format!("--eps1 must lie in (0, 1), got {eps1}")).into());
        }
        let max_support = norm.max_support.or(file.max_support).unwrap_or(renorm_core::smooth::DEFAULT_MAX_SUPPORT);
        Ok(Self {
            norm: norm.norm.or(file.norm),
            p: norm.p.or(file.p),
            eps1,
            tol: positive("tol", norm.tol.or(file.tol).unwrap_or(1e-10))?,
            seed: sampling.seed.or(file.seed).unwrap_or(0),
            samples,
            max_support,
            out: out.out.clone().or_else(|| file.out.clone()),
        })
    }
}

pub fn norm_kind(sel: NormSel) -> NormKind {
    match sel {
        NormSel::LinfAnalytic => NormKind::LinfAnalytic,
        NormSel::LpSmooth => NormKind::LpSmooth,
        NormSel::LpF => NormKind::LpF,
        NormSel::Base => NormKind::Base,
    }
}

pub fn parse_plane(s: &str) -> Result<(u64, u64)> {
    let bad = || InputError(format!("--plane expects two labels `i,j`, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let i = a.trim().parse().map_err(|_| bad())?;
    let j = b.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())).into())
}
