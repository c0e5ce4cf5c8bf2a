// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::path::Path;

use anyhow::Result;
use renorm_core::analytic::{geometric_eps, min_even_p};
use renorm_core::verify::suites::{run_suites, Suite, SuiteConfig};
use renorm_core::{
    analytic_norm, base_norm, embed_l1, l1_pullback_norm, q_select, sup_norm, validate_schedule, AnalyticParams,
    BaseNorm, FinValSeq, GaugeResult, SmoothNorm, SmoothSchedule, SparseVec,
};
use serde::Serialize;

use crate::args::NormSel;
use crate::config::{norm_kind, read, RunConfig};
use crate::input::{parse_vector, SeqFile, VectorInput};
use crate::InputError;

/// Rendered output and the process exit code.
pub struct Outcome {
    pub text: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, exit: 0 }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn analytic_params(cfg: &RunConfig) -> Result<AnalyticParams<f64>> {
    match cfg.p {
        None => Ok(AnalyticParams::with_eps1(cfg.eps1)?),
        Some(p) => {
            let params = AnalyticParams::relaxed(p, geometric_eps(cfg.eps1))?;
            if !params.is_large_enough() {
                eprintln!(
                    "warning: p = {p} is below the smallest admissible exponent {} for eps1 = {}; \
                     the sandwich bound is not guaranteed",
                    min_even_p(cfg.eps1)?,
                    cfg.eps1
                );
            }
            Ok(params)
        }
    }
}

fn base(cfg: &RunConfig) -> Result<BaseNorm> {
    Ok(BaseNorm::new(cfg.p.unwrap_or(1))?)
}

fn smooth(cfg: &RunConfig) -> Result<SmoothNorm<f64>> {
    Ok(SmoothNorm::new(SmoothSchedule::default(), base(cfg)?, cfg.max_support)?)
}

/// A closed-form value with its floating-point rounding bound.
fn rounded(value: f64, ops: usize) -> GaugeResult<f64> {
    let e = (2 * ops + 8) as f64 * f64::EPSILON * value;
    GaugeResult { value, bracket: (value - e, value + e), iterations: 0, certified_error: e }
}

/// Evaluates the selected norm; built once, applied to many vectors.
enum Norm {
    Analytic(AnalyticParams<f64>),
    Smooth(SmoothNorm<f64>),
    F(SmoothNorm<f64>),
    Base(BaseNorm),
}

impl Norm {
    fn new(cfg: &RunConfig) -> Result<Self> {
        Ok(match cfg.norm.unwrap_or(NormSel::LinfAnalytic) {
            NormSel::LinfAnalytic => Norm::Analytic(analytic_params(cfg)?),
            NormSel::LpSmooth => Norm::Smooth(smooth(cfg)?),
            NormSel::LpF => Norm::F(smooth(cfg)?),
            NormSel::Base => Norm::Base(base(cfg)?),
        })
    }

    fn eval(&self, x: VectorInput, tol: f64) -> Result<GaugeResult<f64>> {
        Ok(match self {
            Norm::Analytic(params) => analytic_norm(&x.into_seq()?, params, tol)?,
            Norm::Smooth(n) => n.norm(&x.into_sparse()?, tol)?,
            Norm::F(n) => {
                let x = x.into_sparse()?;
                rounded(n.f_norm(&x), x.support_size())
            }
            Norm::Base(b) => {
                let x = x.into_sparse()?;
                rounded(base_norm(&x, *b), x.support_size())
            }
        })
    }
}

pub fn eval(cfg: &RunConfig, input: &Path) -> Result<Outcome> {
    let x = parse_vector(&read(input)?)?;
    let r = Norm::new(cfg)?.eval(x, cfg.tol)?;
    Ok(Outcome::ok(json(&r)?))
}

pub fn verify(cfg: &RunConfig, suite: &str, k: Option<usize>, m: Option<usize>) -> Result<Outcome> {
    let suites = Suite::parse_list(suite)?;
    let analytic = matches!(cfg.norm, None | Some(NormSel::LinfAnalytic));
    let defaults = SuiteConfig::default();
    let sc = SuiteConfig {
        norm: cfg.norm.map(norm_kind),
        analytic_p: if analytic { cfg.p } else { None },
        eps1: cfg.eps1,
        base: if analytic { BaseNorm::L1 } else { base(cfg)? },
        tol: cfg.tol,
        seed: cfg.seed,
        samples: cfg.samples,
        max_support: cfg.max_support,
        schedule_bound: k.unwrap_or(defaults.schedule_bound),
        m_max: m.unwrap_or(defaults.m_max),
    };
    let report = run_suites(&suites, &sc)?;
    Ok(Outcome { text: json(&report)?, exit: if report.pass { 0 } else { 1 } })
}

pub fn sphere(cfg: &RunConfig, plane: (u64, u64), resolution: usize) -> Result<Outcome> {
    let (i, j) = plane;
    if i == j || i == 0 || j == 0 {
        return Err(InputError(format!("--plane needs two distinct labels >= 1, got {i},{j}")).into());
    }
    if resolution < 8 {
        return Err(InputError(format!("--resolution must be at least 8, got {resolution}")).into());
    }
    let norm = Norm::new(cfg)?;
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["angle", "radius"])?;
    for k in 0..resolution {
        let angle = 2.0 * PI * k as f64 / resolution as f64;
        let x = SparseVec::from_entries([(i, angle.cos()), (j, angle.sin())])?;
        let nu = norm.eval(VectorInput::Sparse(x), cfg.tol)?.value;
        w.write_record([angle.to_string(), (1.0 / nu).to_string()])?;
    }
    Ok(Outcome::ok(String::from_utf8(w.into_inner()?)?))
}

#[derive(Serialize)]
struct ScheduleRow {
    k: usize,
    eps: f64,
    theta: f64,
    ratio: f64,
    gap_bound: f64,
    /// Exponent of the smooth surrogate on `k` coordinates; absent for `k = 0`.
    q: Option<u32>,
}

#[derive(Serialize)]
struct ScheduleTable {
    base_p: u32,
    rows: Vec<ScheduleRow>,
    validation: renorm_core::schedule::ScheduleReport,
}

pub fn schedule(k: usize, p: Option<u32>) -> Result<Outcome> {
    let base = BaseNorm::new(p.unwrap_or(1))?;
    let s = SmoothSchedule::<f64>::default();
    let rows = (0..=k)
        .map(|n| {
            let q = if n == 0 { None } else { Some(q_select(n, s.theta(n), base)?) };
            Ok(ScheduleRow { k: n, eps: s.eps(n), theta: s.theta(n), ratio: s.ratio(n), gap_bound: s.gap_bound(n), q })
        })
        .collect::<Result<Vec<_>>>()?;
    let validation = validate_schedule(&s, k.max(1));
    let exit = if validation.holds() { 0 } else { 1 };
    Ok(Outcome { text: json(&ScheduleTable { base_p: base.exponent(), rows, validation })?, exit })
}

#[derive(Serialize)]
struct EmbedReport {
    m: usize,
    embedded: SeqFile,
    sup_norm: f64,
    l1_norm: f64,
    isometry_error: f64,
    pullback: GaugeResult<f64>,
}

pub fn embed(cfg: &RunConfig, input: &Path, m: Option<usize>) -> Result<Outcome> {
    let d = parse_vector(&read(input)?)?.into_sparse()?;
    let m = m.unwrap_or_else(|| d.max_label().unwrap_or(1).max(1) as usize);
    let x: FinValSeq<f64> = embed_l1(&d, m)?;
    let sup = sup_norm(&x);
    let l1 = base_norm(&d, BaseNorm::L1);
    let pullback = l1_pullback_norm(&d, m, &analytic_params(cfg)?, cfg.tol)?;
    let report = EmbedReport {
        m,
        embedded: SeqFile::from(&x),
        sup_norm: sup,
        l1_norm: l1,
        isometry_error: (sup - l1).abs(),
        pullback,
    };
    Ok(Outcome::ok(json(&report)?))
}
