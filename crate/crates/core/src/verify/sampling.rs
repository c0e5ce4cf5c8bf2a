// SPDX-License-Identifier: Apache-2.0

//! Seeded samplers for convexity and the norm axioms.
//!
//! Trial `t` draws from `ChaCha8` seeded with the master seed on stream `t`, so
//! reports do not depend on how trials are spread over threads. Per-trial
//! results are merged by max and by count, both order independent.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{axpy, Evaluator};
use crate::error::{Error, Result};
use crate::scalar::{rounding, Real};

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Random dense vectors with a bounded random support and log-uniform magnitudes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VectorSampler {
    /// Number of coordinates.
    pub dim: usize,
    /// Support size is uniform in `1..=max_support`.
    pub max_support: usize,
    /// Magnitudes are `10^u` with `u` uniform in this range.
    pub log10_range: (f64, f64),
}

impl VectorSampler {
    pub fn new(dim: usize, max_support: usize, log10_range: (f64, f64)) -> Result<Self> {
        if dim == 0 || max_support == 0 || max_support > dim || !(log10_range.0 <= log10_range.1) {
            return Err(Error::InvalidParameter(format!(
                "bad sampler: dim {dim}, support {max_support}, range {log10_range:?}"
            )));
        }
        Ok(Self { dim, max_support, log10_range })
    }

    pub fn sample<T: Real, R: Rng>(&self, rng: &mut R) -> Vec<T> {
        let size = rng.gen_range(1..=self.max_support);
        let mut x = vec![T::zero(); self.dim];
        for idx in rand::seq::index::sample(rng, self.dim, size) {
            let (lo, hi) = self.log10_range;
            let mag = 10f64.powf(if lo < hi { rng.gen_range(lo..hi) } else { lo });
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            x[idx] = T::lit(sign * mag);
        }
        x
    }
}

/// Violations of one inequality over all trials.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violations<T> {
    pub name: String,
    /// Trials whose defect exceeded the certified slack.
    pub count: usize,
    /// Largest raw defect.
    pub max_defect: T,
    /// Largest `defect − slack`; nonpositive when nothing is violated.
    pub max_excess: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleReport<T> {
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Violations<T>>,
}

impl<T: Real> SampleReport<T> {
    pub fn violations(&self) -> usize {
        self.checks.iter().map(|c| c.count).sum()
    }
}

#[derive(Clone, Copy)]
struct Acc<T> {
    count: usize,
    max_defect: T,
    max_excess: T,
}

impl<T: Real> Acc<T> {
    fn empty() -> Self {
        Self { count: 0, max_defect: T::neg_infinity(), max_excess: T::neg_infinity() }
    }

    fn single(defect: T, slack: T) -> Self {
        let excess = defect - slack;
        Self { count: usize::from(!(excess <= T::zero())), max_defect: defect, max_excess: excess }
    }

    fn merge(self, o: Self) -> Self {
        Self {
            count: self.count + o.count,
            max_defect: self.max_defect.max(o.max_defect),
            max_excess: self.max_excess.max(o.max_excess),
        }
    }
}

fn run<T, const K: usize, F>(names: [&str; K], trials: usize, seed: u64, trial: F) -> Result<SampleReport<T>>
where
    T: Real,
    F: Fn(&mut ChaCha8Rng) -> Result<[(T, T); K]> + Sync,
{
    let acc = (0..trials as u64)
        .into_par_iter()
        .map(|t| trial(&mut trial_rng(seed, t)).map(|r| r.map(|(d, s)| Acc::single(d, s))))
        .try_reduce(|| [Acc::empty(); K], |a, b| Ok(std::array::from_fn(|i| a[i].merge(b[i]))))?;
    let checks = names
        .iter()
        .zip(acc)
        .map(|(n, a)| Violations {
            name: (*n).into(),
            count: a.count,
            max_defect: a.max_defect,
            max_excess: a.max_excess,
        })
        .collect();
    Ok(SampleReport { trials, seed, checks })
}

/// Midpoint convexity `ν((x+y)/2) ≤ (ν(x)+ν(y))/2` on seeded random pairs.
pub fn convexity_sample<T, E>(eval: &E, sampler: &VectorSampler, trials: usize, seed: u64) -> Result<SampleReport<T>>
where
    T: Real,
    E: Evaluator<T> + ?Sized,
{
    let half = T::lit(0.5);
    run(["convexity"], trials, seed, |rng| {
        let x: Vec<T> = sampler.sample(rng);
        let y: Vec<T> = sampler.sample(rng);
        let z: Vec<T> = axpy(&x, T::one(), &y).into_iter().map(|c| c * half).collect();
        let (a, b, m) = (eval.eval(&x)?, eval.eval(&y)?, eval.eval(&z)?);
        let defect = m.value - half * (a.value + b.value);
        let slack = m.error + half * (a.error + b.error) + rounding::<T>(16) * (a.value + b.value + m.value);
        Ok([(defect, slack)])
    })
}

/// Homogeneity, symmetry and the triangle inequality on seeded random data.
pub fn axioms_sample<T, E>(eval: &E, sampler: &VectorSampler, trials: usize, seed: u64) -> Result<SampleReport<T>>
where
    T: Real,
    E: Evaluator<T> + ?Sized,
{
    run(["homogeneity", "symmetry", "triangle"], trials, seed, |rng| {
        let x: Vec<T> = sampler.sample(rng);
        let y: Vec<T> = sampler.sample(rng);
        let lambda = T::lit(rng.gen_range(-4.0..4.0));
        let fx = eval.eval(&x)?;
        let fy = eval.eval(&y)?;
        let scaled = eval.eval(&x.iter().map(|&c| lambda * c).collect::<Vec<_>>())?;
        let neg = eval.eval(&x.iter().map(|&c| -c).collect::<Vec<_>>())?;
        let sum = eval.eval(&axpy(&x, T::one(), &y))?;
        let fudge = rounding::<T>(16);
        let la = lambda.abs();
        let homog = (
            (scaled.value - la * fx.value).abs(),
            scaled.error + la * fx.error + fudge * (scaled.value + la * fx.value),
        );
        let symm = ((neg.value - fx.value).abs(), neg.error + fx.error + fudge * fx.value);
        let tri = (
            sum.value - fx.value - fy.value,
            sum.error + fx.error + fy.error + fudge * (sum.value + fx.value + fy.value),
        );
        Ok([homog, symm, tri])
    })
}
