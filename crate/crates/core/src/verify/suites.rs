// SPDX-License-Identifier: Apache-2.0

//! Named verification suites over `f64`, each a list of pass/fail checks with
//! worst-case margins.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::sampling::{axioms_sample, convexity_sample, trial_rng, SampleReport, VectorSampler};
use super::{
    analytic_evaluator, euler_residual, fd_gradient, nested_gauge_check, scan_oracle, smooth_evaluator, Evaluator,
};
use crate::analytic::{analytic_norm, geometric_eps, psi, weighted_sup_norm, AnalyticParams};
use crate::bump::BumpSpec;
use crate::embed::{embed_l1, l1_pullback_norm};
use crate::error::{Error, Result};
use crate::scalar::Certified;
use crate::schedule::{validate_schedule, SmoothSchedule};
use crate::smooth::SmoothNorm;
use crate::vectors::{base_norm, sup_norm, BaseNorm, FinValSeq, SparseVec};

pub const NOTE: &str = "finite-difference checks are consistent with smoothness; they do not prove it";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormKind {
    LinfAnalytic,
    LpSmooth,
    LpF,
    Base,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    Sandwich,
    Fd,
    Locality,
    Embedding,
    Schedule,
    Bump,
    Roots,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Schedule,
        Suite::Bump,
        Suite::Sandwich,
        Suite::Locality,
        Suite::Embedding,
        Suite::Roots,
        Suite::Fd,
        Suite::Axioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Sandwich => "sandwich",
            Suite::Fd => "fd",
            Suite::Locality => "locality",
            Suite::Embedding => "embedding",
            Suite::Schedule => "schedule",
            Suite::Bump => "bump",
            Suite::Roots => "roots",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Self::ALL
            .iter()
            .find(|s| s.name() == name)
            .map(|s| vec![*s])
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {name:?}")))
    }

    fn stream(self) -> u64 {
        (self as u64 + 1) << 40
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    /// Restricts norm-specific suites; `None` runs both constructions.
    pub norm: Option<NormKind>,
    /// Exponent of the analytic norm; `None` picks the smallest admissible one.
    pub analytic_p: Option<u32>,
    pub eps1: f64,
    pub base: BaseNorm,
    pub tol: f64,
    pub seed: u64,
    /// Overrides the per-suite sample count.
    pub samples: Option<usize>,
    pub max_support: usize,
    pub schedule_bound: usize,
    pub m_max: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            norm: None,
            analytic_p: None,
            eps1: 0.1,
            base: BaseNorm::L1,
            tol: 1e-10,
            seed: 0,
            samples: None,
            max_support: crate::smooth::DEFAULT_MAX_SUPPORT,
            schedule_bound: 10_000,
            m_max: 10,
        }
    }
}

impl SuiteConfig {
    pub fn analytic_params(&self) -> Result<AnalyticParams<f64>> {
        match self.analytic_p {
            None => AnalyticParams::with_eps1(self.eps1),
            Some(p) => AnalyticParams::relaxed(p, geometric_eps(self.eps1)),
        }
    }

    pub fn smooth_norm(&self) -> Result<SmoothNorm<f64>> {
        SmoothNorm::new(SmoothSchedule::default(), self.base, self.max_support)
    }

    fn analytic_selected(&self) -> bool {
        matches!(self.norm, None | Some(NormKind::LinfAnalytic))
    }

    fn smooth_selected(&self) -> bool {
        matches!(self.norm, None | Some(NormKind::LpSmooth) | Some(NormKind::LpF))
    }

    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default).max(1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Worst observed margin, in the units of `threshold`.
    pub worst: Option<f64>,
    pub threshold: Option<f64>,
    pub detail: String,
}

impl Check {
    /// Passes when `worst ≤ threshold`.
    fn at_most(name: &str, worst: f64, threshold: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass: worst <= threshold,
            worst: worst.is_finite().then_some(worst),
            threshold: Some(threshold),
            detail: detail.into(),
        }
    }

    fn flag(name: &str, pass: bool, worst: Option<f64>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), pass, worst: worst.filter(|w| w.is_finite()), threshold: None, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub note: &'static str,
}

pub fn run_suites(suites: &[Suite], cfg: &SuiteConfig) -> Result<VerifyReport> {
    let suites = suites.iter().map(|&s| run_suite(s, cfg)).collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { pass: suites.iter().all(|s| s.pass), seed: cfg.seed, suites, note: NOTE })
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Schedule => schedule(cfg),
        Suite::Bump => bump(),
        Suite::Sandwich => sandwich(cfg)?,
        Suite::Locality => locality(cfg)?,
        Suite::Embedding => embedding(cfg)?,
        Suite::Roots => roots(cfg)?,
        Suite::Fd => fd(cfg)?,
        Suite::Axioms => axioms(cfg)?,
    };
    Ok(SuiteReport { suite, pass: checks.iter().all(|c| c.pass), checks })
}

/// Runs `f` on trials `0..n` with per-trial generators, keeping trial order.
fn par_trials<R, F>(cfg: &SuiteConfig, suite: Suite, n: usize, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(&mut rand_chacha::ChaCha8Rng, usize) -> Result<R> + Sync,
{
    (0..n).into_par_iter().map(|t| f(&mut trial_rng(cfg.seed, suite.stream() + t as u64), t)).collect()
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

fn schedule(cfg: &SuiteConfig) -> Vec<Check> {
    let r = validate_schedule(&SmoothSchedule::<f64>::default(), cfg.schedule_bound.max(1));
    let detail = match &r.first_violation {
        None => format!("both conditions hold strictly for k <= {}", r.checked_up_to),
        Some(v) => format!("{:?} fails at k = {}: {}", v.condition, v.k, v.reason),
    };
    vec![Check::flag("schedule-conditions", r.holds(), Some(r.min_gap), detail)]
}

fn bump() -> Vec<Check> {
    let schedule = SmoothSchedule::<f64>::default();
    let mut dead = 0.0f64;
    let mut at_one = 0.0f64;
    let mut second = f64::INFINITY;
    let mut increasing = true;
    for n in 0..=20 {
        let b = BumpSpec::new(n, schedule.theta(n));
        let a = b.activation;
        let w = 1.0 - a;
        dead = dead.max(b.eval(a).abs()).max(b.eval(-a).abs()).max(b.eval(0.0).abs());
        at_one = at_one.max((b.eval(1.0) - 1.0).abs()).max((b.eval(-1.0) - 1.0).abs());
        let fine = (a - w, 1.0 + w, 2000usize);
        let coarse = (-1.5, 1.5, 3000usize);
        for (lo, hi, k) in [fine, coarse] {
            let h = (hi - lo) / k as f64;
            let mut prev = f64::NEG_INFINITY;
            for i in 1..k {
                let t = lo + i as f64 * h;
                second = second.min(b.eval(t + h) - 2.0 * b.eval(t) + b.eval(t - h));
                let v = b.eval(t);
                // Values that underflow to zero just past the activation point are skipped.
                if t > a && v > 0.0 {
                    increasing &= v > prev;
                    prev = v;
                }
            }
        }
    }
    vec![
        Check::at_most("dead-zone", dead, 0.0, "|rho_n(t)| for |t| <= 1 - theta_n^2, n <= 20"),
        Check::at_most("normalization", at_one, 1e-9, "|rho_n(+-1) - 1|"),
        Check::at_most("convexity", -second, 1e-7, "negated minimum central second difference"),
        Check::flag("strictly-increasing", increasing, None, "rho_n increases past the activation point"),
    ]
}

fn analytic_sparse(rng: &mut impl Rng) -> Result<FinValSeq<f64>> {
    let dense: Vec<f64> = VectorSampler::new(32, 16, (-2.0, 2.0))?.sample(rng);
    FinValSeq::finite(dense)
}

/// Probes along which `{ψ ≤ 1}` must contain `(1 − ε₁)` times the weighted unit cube.
pub fn minkowski_probes(params: &AnalyticParams<f64>, count: usize) -> Vec<Vec<f64>> {
    let e1 = params.eps1();
    (1..=count).map(|n| (1..=n).map(|i| (1.0 - e1) / (1.0 + params.eps(i))).collect()).collect()
}

fn sandwich(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if cfg.analytic_selected() {
        let params = cfg.analytic_params()?;
        let c = params.sandwich_constant();
        let n = cfg.samples_or(1000);
        let rows = par_trials(cfg, Suite::Sandwich, n, |rng, _| {
            let x = analytic_sparse(rng)?;
            let r = analytic_norm(&x, &params, cfg.tol)?;
            let sup = sup_norm(&x);
            let slack = r.certified_error + 4.0 * f64::EPSILON * r.value;
            Ok(((sup - r.value - slack) / r.value, (r.value - c * sup - slack) / r.value, r.certified_error / r.value))
        })?;
        checks.push(Check::at_most(
            "analytic-lower",
            max_of(rows.iter().map(|r| r.0)),
            0.0,
            format!("max (sup - nu - err)/nu over {n} vectors"),
        ));
        checks.push(Check::at_most(
            "analytic-upper",
            max_of(rows.iter().map(|r| r.1)),
            0.0,
            format!("max (nu - {c:.6}*sup - err)/nu"),
        ));
        checks.push(Check::at_most(
            "analytic-certified-error",
            max_of(rows.iter().map(|r| r.2)),
            1e-9,
            "max certified_error/nu",
        ));

        let mut closed = 0.0f64;
        for k in 1..=30usize {
            for e in -2..=2 {
                for sign in [1.0, -1.0] {
                    let cval = sign * 10f64.powi(e);
                    let x = SparseVec::basis(k as u64, cval).and_then(|v| FinValSeq::from_sparse(&v))?;
                    let expect = (1.0 + params.eps(k)) * cval.abs();
                    let got = analytic_norm(&x, &params, cfg.tol)?.value;
                    closed = closed.max((got - expect).abs() / expect);
                }
            }
        }
        checks.push(Check::at_most(
            "closed-form",
            closed,
            1e-9,
            "max |nu(c e_k) - (1+eps_k)|c||/((1+eps_k)|c|), k <= 30",
        ));

        let inner = analytic_evaluator(&params, cfg.tol);
        let outer = |x: &[f64]| -> Result<Certified<f64>> {
            let w = weighted_sup_norm(&FinValSeq::finite(x.to_vec())?, &params);
            Ok(Certified { value: w, error: 4.0 * f64::EPSILON * w })
        };
        let delta = params.eps1() / (1.0 - params.eps1());
        let probes = minkowski_probes(&params, 64);
        let nested = nested_gauge_check(&inner, &outer, delta, &probes, 1e-12)?;
        let detail = match nested.first_failure {
            None => format!("(1 - eps1) B_Z inside {{psi <= 1}} inside B_Z on {} probes", nested.rays_checked),
            Some(i) => {
                format!("lower inclusion fails from probe N = {} (p = {}, eps1 = {})", i + 1, params.p(), params.eps1())
            }
        };
        checks.push(Check::flag(
            "minkowski-inclusion",
            nested.holds,
            Some(nested.worst_lower.max(nested.worst_upper)),
            detail,
        ));
    }
    if cfg.smooth_selected() {
        let norm = cfg.smooth_norm()?;
        let e1 = norm.schedule().eps(1);
        let c = norm.sandwich_constant();
        let n = cfg.samples_or(500);
        let support = cfg.max_support.min(10);
        let sampler = VectorSampler::new(20, support, (-2.0, 2.0))?;
        let rows = par_trials(cfg, Suite::Sandwich, n, |rng, _| {
            let x = SparseVec::from_dense(&sampler.sample::<f64, _>(rng))?;
            let b = base_norm(&x, cfg.base);
            let f = norm.f_norm(&x);
            let r = norm.norm(&x, cfg.tol)?;
            let slack = r.certified_error / f;
            Ok(((b - f) / f, (f - (1.0 + e1) * b) / f, (f - r.value) / f - slack, (r.value - c * f) / f - slack))
        })?;
        let detail = format!("{n} vectors, support <= {support}, relative");
        checks.push(Check::at_most("f-lower", max_of(rows.iter().map(|r| r.0)), 1e-8, &detail));
        checks.push(Check::at_most("f-upper", max_of(rows.iter().map(|r| r.1)), 1e-8, &detail));
        checks.push(Check::at_most("smooth-lower", max_of(rows.iter().map(|r| r.2)), 1e-8, &detail));
        checks.push(Check::at_most("smooth-upper", max_of(rows.iter().map(|r| r.3)), 1e-8, &detail));

        let n = cfg.samples_or(1000);
        let support = cfg.max_support.min(12);
        let sampler = VectorSampler::new(24, support, (-2.0, 2.0))?;
        let devs = par_trials(cfg, Suite::Sandwich, n, |rng, _| {
            let _ = rng.gen::<u64>();
            let x = SparseVec::from_dense(&sampler.sample::<f64, _>(rng))?;
            let fast = norm.f_norm(&x);
            Ok((norm.f_norm_brute(&x)? - fast).abs() / fast)
        })?;
        checks.push(Check::at_most(
            "f-norm-oracle",
            max_of(devs),
            1e-12,
            format!("brute force vs top-k on {n} vectors, support <= {support}"),
        ));
    }
    Ok(checks)
}

fn locality(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let norm = cfg.smooth_norm()?;
    let n = cfg.samples_or(100);
    let support = cfg.max_support.min(6);
    let sampler = VectorSampler::new(12, support, (-1.0, 1.0))?;
    let rows = par_trials(cfg, Suite::Locality, n, |rng, t| {
        let x = SparseVec::from_dense(&sampler.sample::<f64, _>(rng))?;
        let target = if t % 4 == 0 { 1.0 } else { rng.gen_range(0.5..1.0) };
        let x = x.scaled(target / norm.f_norm(&x));
        let x = if norm.f_norm(&x) > 1.0 { x.scaled(1.0 - f64::EPSILON) } else { x };
        let extra_count = rng.gen_range(1..=3usize);
        let extras: Vec<u64> =
            rand::seq::index::sample(rng, 8, extra_count).into_iter().map(|i| 13 + i as u64).collect();
        norm.locality_check(&x, &extras)
    })?;
    let holds = rows.iter().all(|r| r.holds);
    let margin = rows.iter().map(|r| r.min_margin).fold(f64::INFINITY, f64::min);
    let sets: usize = rows.iter().map(|r| r.sets_checked).sum();
    Ok(vec![Check::flag(
        "off-support-terms-vanish",
        holds,
        Some(margin),
        format!("{n} pairs, {sets} off-support sets, worst dead-zone margin reported"),
    )])
}

fn embedding(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let params = cfg.analytic_params()?;
    let c = params.sandwich_constant();
    let n = cfg.samples_or(500);
    let m_max = cfg.m_max.clamp(1, crate::embed::MAX_M);
    let rows = par_trials(cfg, Suite::Embedding, n, |rng, t| {
        let m = rng.gen_range(1..=m_max);
        let sampler = VectorSampler::new(m, m, (-2.0, 2.0))?;
        let d = SparseVec::from_dense(&sampler.sample::<f64, _>(rng))?;
        let l1 = base_norm(&d, BaseNorm::L1);
        let iso = (sup_norm(&embed_l1(&d, m)?) - l1).abs();
        let r = l1_pullback_norm(&d, m, &params, cfg.tol)?;
        let slack = r.certified_error + 4.0 * f64::EPSILON * r.value;
        let sandwich = ((l1 - r.value - slack) / r.value).max((r.value - c * l1 - slack) / r.value);
        // Dyadic data keeps every sum exact.
        let dyadic = |rng: &mut rand_chacha::ChaCha8Rng| -> Result<SparseVec<f64>> {
            SparseVec::from_entries((1..=m as u64).map(|l| (l, rng.gen_range(-64i32..=64) as f64 / 8.0)))
        };
        let (a, b) = (dyadic(rng)?, dyadic(rng)?);
        let (alpha, beta) = (rng.gen_range(-8i32..=8) as f64 / 4.0, rng.gen_range(-8i32..=8) as f64 / 4.0);
        let lhs = embed_l1(&SparseVec::lin_comb(&[alpha, beta], &[&a, &b])?, m)?;
        let rhs = FinValSeq::lin_comb(&[alpha, beta], &[&embed_l1(&a, m)?, &embed_l1(&b, m)?])?;
        let linear = (0..1usize << m)
            .all(|i| lhs.prefix().get(i).copied().unwrap_or(0.0) == rhs.prefix().get(i).copied().unwrap_or(0.0));
        let _ = t;
        Ok((iso, sandwich, linear))
    })?;
    Ok(vec![
        Check::at_most(
            "isometry",
            max_of(rows.iter().map(|r| r.0)),
            1e-12,
            format!("max |sup(embed d) - |d|_1| over {n} vectors, m <= {m_max}"),
        ),
        Check::at_most(
            "pullback-sandwich",
            max_of(rows.iter().map(|r| r.1)),
            0.0,
            "relative excess beyond certified error",
        ),
        Check::flag("linearity", rows.iter().all(|r| r.2), None, "exact on dyadic data"),
    ])
}

fn roots(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    const STEP: f64 = 1e-4;
    let n = cfg.samples_or(100);
    let mut checks = Vec::new();
    if cfg.analytic_selected() {
        let params = cfg.analytic_params()?;
        let e1 = params.eps1();
        let rows = par_trials(cfg, Suite::Roots, n, |rng, _| {
            let x = analytic_sparse(rng)?;
            let x = x.scaled(1.0 / sup_norm(&x));
            let r = analytic_norm(&x, &params, cfg.tol)?;
            let lo = 0.5 * (1.0 - e1) / (1.0 + e1);
            let (a, b) =
                scan_oracle(|s| Ok(psi(&x.scaled(s), &params, f64::EPSILON)?.value), 1.0, lo, 1.0 + STEP, STEP)?;
            Ok(bracket_excess(r.value, r.certified_error, a, b))
        })?;
        checks.push(Check::at_most(
            "analytic-in-scan-bracket",
            max_of(rows),
            0.0,
            format!("{n} rays, grid {STEP:e}, excess of 1/nu outside the scan bracket"),
        ));
    }
    if cfg.smooth_selected() {
        let norm = cfg.smooth_norm()?;
        let theta1 = norm.schedule().theta(1);
        let support = cfg.max_support.min(10);
        let sampler = VectorSampler::new(20, support, (-2.0, 2.0))?;
        let rows = par_trials(cfg, Suite::Roots, n, |rng, _| {
            let _ = rng.gen::<u64>();
            let x = SparseVec::from_dense(&sampler.sample::<f64, _>(rng))?;
            let x = x.scaled(1.0 / norm.f_norm(&x));
            let r = norm.norm(&x, cfg.tol)?;
            let ray = norm.psi_ray(&x)?;
            let lo = (1.0 - theta1) / (1.0 + theta1) - 1e-3;
            let (a, b) = scan_oracle(|s| Ok(ray(s)), 1.0 - theta1, lo, 1.0 + STEP, STEP)?;
            Ok(bracket_excess(r.value, r.certified_error, a, b))
        })?;
        checks.push(Check::at_most(
            "smooth-in-scan-bracket",
            max_of(rows),
            0.0,
            format!("{n} rays, grid {STEP:e}, excess of 1/nu outside the scan bracket"),
        ));
    }
    Ok(checks)
}

/// How far `s* = 1/value` falls outside `[a, b]`, beyond its certified error.
fn bracket_excess(value: f64, err: f64, a: f64, b: f64) -> f64 {
    let s = 1.0 / value;
    let s_err = err / (value * value) + 2.0 * f64::EPSILON * s;
    (a - s - s_err).max(s - b - s_err)
}

/// Dense test point with norm uniform in `[0.5, 2]`.
fn fd_point<E: Evaluator<f64> + ?Sized>(
    eval: &E,
    sampler: &VectorSampler,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Result<Vec<f64>> {
    let x: Vec<f64> = sampler.sample(rng);
    let target = rng.gen_range(0.5..2.0);
    let scale = target / eval.eval(&x)?.value;
    Ok(x.into_iter().map(|c| c * scale).collect())
}

fn fd(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    const FD_TOL: f64 = 1e-15;
    const REL_STEP: f64 = 1e-7;
    let n = cfg.samples_or(100);
    let mut checks = Vec::new();
    let mut run = |label: &str, eval: &dyn Evaluator<f64>, sampler: VectorSampler| -> Result<()> {
        let rows = par_trials(cfg, Suite::Fd, n, |rng, _| {
            let x = fd_point(eval, &sampler, rng)?;
            let h = REL_STEP * x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let g = fd_gradient(eval, &x, h)?;
            let e = euler_residual(eval, &x, h)?;
            Ok((g.stability, e.relative_error))
        })?;
        checks.push(Check::at_most(
            &format!("{label}-gradient-stability"),
            max_of(rows.iter().map(|r| r.0)),
            1e-5,
            format!("{n} points with norm in [0.5, 2], steps h, h/2, h/4 with h = {REL_STEP:e}*|x|_inf"),
        ));
        checks.push(Check::at_most(
            &format!("{label}-euler-identity"),
            max_of(rows.iter().map(|r| r.1)),
            1e-6,
            "max |<grad nu(x), x> - nu(x)|/nu(x)",
        ));
        Ok(())
    };
    if cfg.analytic_selected() {
        let params = cfg.analytic_params()?;
        run("analytic", &analytic_evaluator(&params, FD_TOL), VectorSampler::new(12, 6, (-1.0, 0.5))?)?;
    }
    if cfg.smooth_selected() {
        let norm = cfg.smooth_norm()?;
        let support = cfg.max_support.min(4);
        run("smooth", &smooth_evaluator(&norm, FD_TOL), VectorSampler::new(8, support, (-1.0, 0.5))?)?;
    }
    Ok(checks)
}

fn sample_checks(label: &str, reports: [SampleReport<f64>; 2]) -> Vec<Check> {
    reports
        .iter()
        .flat_map(|r| r.checks.iter().map(move |c| (r.trials, c)))
        .map(|(trials, c)| {
            let mut check = Check::at_most(
                &format!("{label}-{}", c.name),
                c.count as f64,
                0.0,
                format!(
                    "violations beyond certified slack over {trials} trials; max defect {:.3e}, max excess {:.3e}",
                    c.max_defect, c.max_excess
                ),
            );
            check.worst = Some(c.count as f64);
            check
        })
        .collect()
}

fn axioms(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let n = cfg.samples_or(10_000);
    let seed = cfg.seed ^ Suite::Axioms.stream();
    let mut checks = Vec::new();
    if cfg.analytic_selected() {
        let params = cfg.analytic_params()?;
        let eval = analytic_evaluator(&params, cfg.tol);
        let sampler = VectorSampler::new(12, 6, (-1.0, 1.0))?;
        let reports = [convexity_sample(&eval, &sampler, n, seed)?, axioms_sample(&eval, &sampler, n, seed)?];
        checks.extend(sample_checks("analytic", reports));
    }
    if cfg.smooth_selected() {
        let norm = cfg.smooth_norm()?;
        let eval = smooth_evaluator(&norm, cfg.tol);
        let support = (cfg.max_support / 2).clamp(1, 4);
        let sampler = VectorSampler::new(8, support, (-1.0, 1.0))?;
        let reports = [convexity_sample(&eval, &sampler, n, seed)?, axioms_sample(&eval, &sampler, n, seed)?];
        checks.extend(sample_checks("smooth", reports));
    }
    Ok(checks)
}
