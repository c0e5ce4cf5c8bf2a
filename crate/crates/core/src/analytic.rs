// SPDX-License-Identifier: Apache-2.0

//! The analytic norm on finitely-valued sequences.
//!
//! With weights `1 + ε_i` and an even exponent `p`,
//!
//! ```text
//! φ(x) = Σ_{i≥1} x(i)^{2i+p},      ψ(x) = φ(((1+ε_i)·x(i))_i),
//! ```
//!
//! and the norm of `x` is the gauge of `{ψ ≤ 1}` evaluated at `x`. It satisfies
//! `‖x‖∞ ≤ ν(x) ≤ (1+ε₁)/(1−ε₁)·‖x‖∞` as soon as `p` is large enough for
//! `Σ_i (1−ε₁)^{2i+p} ≤ 1`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gauge::{solve_ray, GaugeResult, RayEval, SolverOptions};
use crate::scalar::{rounding, Certified, Real};
use crate::vectors::FinValSeq;

/// Upper limit on the number of explicitly summed series terms.
pub const SERIES_CAP: usize = 10_000_000;

/// Number of leading weights checked when validating a weight rule.
const EPS_CHECK_PREFIX: usize = 64;

pub type EpsRule<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// Exponent `p` and weight sequence `(ε_i)_{i≥1}`.
#[derive(Clone)]
pub struct AnalyticParams<T> {
    p: u32,
    eps: EpsRule<T>,
}

impl<T: Real> fmt::Debug for AnalyticParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnalyticParams").field("p", &self.p).field("eps1", &self.eps1()).finish()
    }
}

impl<T: Real> Default for AnalyticParams<T> {
    fn default() -> Self {
        Self::with_eps1(T::lit(0.1)).expect("default parameters are valid")
    }
}

impl<T: Real> AnalyticParams<T> {
    /// `ε_i = ε₁·2^{1−i}` and the smallest admissible even `p`.
    pub fn with_eps1(eps1: T) -> Result<Self> {
        let p = min_even_p(eps1)?;
        Self::new(p, geometric_eps(eps1))
    }

    /// Validated parameters; `p` must satisfy the lower-inclusion condition.
    pub fn new(p: u32, eps: EpsRule<T>) -> Result<Self> {
        let params = Self::relaxed(p, eps)?;
        if !params.is_large_enough() {
            return Err(Error::InvalidParameter(format!(
                "p = {p} is too small for ε₁ = {}: Σ(1−ε₁)^(2i+p) exceeds 1",
                params.eps1()
            )));
        }
        Ok(params)
    }

    /// Like [`AnalyticParams::new`] but accepts a `p` that violates the
    /// lower-inclusion condition. The resulting norm is still a norm, but its
    /// upper sandwich constant no longer holds.
    pub fn relaxed(p: u32, eps: EpsRule<T>) -> Result<Self> {
        if p < 2 || !p.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("p must be an even integer ≥ 2, got {p}")));
        }
        let first = eps(1);
        if !(first > T::zero() && first < T::one()) {
            return Err(Error::InvalidParameter(format!("ε₁ must lie in (0, 1), got {first}")));
        }
        let mut prev = first;
        for i in 2..=EPS_CHECK_PREFIX {
            let e = eps(i);
            if !(e > T::zero() && e < prev) {
                return Err(Error::InvalidParameter(format!(
                    "ε_i must be positive and strictly decreasing; fails at i = {i}"
                )));
            }
            prev = e;
        }
        Ok(Self { p, eps })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn eps(&self, i: usize) -> T {
        (self.eps)(i)
    }

    pub fn eps1(&self) -> T {
        self.eps(1)
    }

    pub fn is_large_enough(&self) -> bool {
        lower_inclusion_sum(self.eps1(), self.p) <= T::one()
    }

    /// `(1+ε₁)/(1−ε₁)`, the upper sandwich constant.
    pub fn sandwich_constant(&self) -> T {
        let e = self.eps1();
        (T::one() + e) / (T::one() - e)
    }
}

/// `i ↦ ε₁·2^{1−i}`.
pub fn geometric_eps<T: Real>(eps1: T) -> EpsRule<T> {
    let half = T::lit(0.5);
    Arc::new(move |i: usize| eps1 * half.powi(i.saturating_sub(1) as i32))
}

/// `Σ_{i≥1} (1−ε₁)^{2i+p} = (1−ε₁)^{p+2} / (1−(1−ε₁)²)`.
pub fn lower_inclusion_sum<T: Real>(eps1: T, p: u32) -> T {
    let r = T::one() - eps1;
    r.powi(p as i32 + 2) / (T::one() - r * r)
}

/// Smallest even `p ≥ 2` with `(1−ε₁)^{p+2}/(1−(1−ε₁)²) ≤ 1`.
pub fn min_even_p<T: Real>(eps1: T) -> Result<u32> {
    if !(eps1 > T::zero() && eps1 < T::one()) {
        return Err(Error::InvalidParameter(format!("ε₁ must lie in (0, 1), got {eps1}")));
    }
    let r = T::one() - eps1;
    // Solve (p+2)·ln r ≤ ln(1 − r²) for a starting point, then settle exactly.
    let guess = ((T::one() - r * r).ln() / r.ln() - T::lit(2.0)).max(T::lit(2.0));
    let guess = guess.to_f64().unwrap_or(2.0);
    if guess > (u32::MAX / 2) as f64 {
        return Err(Error::InvalidParameter(format!("ε₁ = {eps1} needs an exponent beyond range")));
    }
    let mut p = (guess.ceil() as u32).max(2);
    p += p % 2;
    while lower_inclusion_sum(eps1, p) > T::one() {
        p += 2;
    }
    while p > 2 && lower_inclusion_sum(eps1, p - 2) <= T::one() {
        p -= 2;
    }
    Ok(p)
}

/// Membership in `U = {‖x‖∞ < 2 and |x(i)| < q < 1 eventually}`.
pub fn in_domain_u<T: Real>(x: &FinValSeq<T>) -> bool {
    x.sup_norm() < T::lit(2.0) && x.tail_sup() < T::one()
}

fn check_tail<T: Real>(x: &FinValSeq<T>) -> Result<()> {
    let r = x.tail_sup();
    if r >= T::one() {
        return Err(Error::Divergent { tail_sup: r.to_f64().unwrap_or(f64::NAN) });
    }
    Ok(())
}

/// `φ(x) = Σ_{i≥1} x(i)^{2i+p}`, summed in closed form.
///
/// Each residue class of the periodic tail is a geometric series. The returned
/// error is the rounding bound of the closed form and must not exceed `tol`.
pub fn phi<T: Real>(x: &FinValSeq<T>, p: u32, tol: T) -> Result<Certified<T>> {
    check_tail(x)?;
    let mut sum = T::zero();
    let mut err = T::zero();
    for (idx, &v) in x.prefix().iter().enumerate() {
        let k = 2 * (idx + 1) + p as usize;
        let term = v.abs().powi(k as i32);
        sum = sum + term;
        err = err + rounding::<T>(k + 4) * term;
    }
    let j = x.prefix_len();
    let m = x.period();
    for (c, &w) in x.tail_period().iter().enumerate() {
        let w = w.abs();
        if w.is_zero() {
            continue;
        }
        let k = 2 * (j + 1 + c) + p as usize;
        // 1 − w^{2m} without cancellation.
        let denom = -(T::from_count(2 * m) * w.ln()).exp_m1();
        let term = w.powi(k as i32) / denom;
        sum = sum + term;
        err = err + rounding::<T>(k + 2 * m + 8) * term / denom;
    }
    let count = j + m;
    err = err + rounding::<T>(count) * sum;
    if err > tol {
        return Err(Error::InvalidParameter(format!("tolerance {tol} is below the rounding floor {err} of φ")));
    }
    Ok(Certified { value: sum, error: err })
}

/// `ψ(s·x) = Σ_{i≥1} ((1+ε_i)·s·x(i))^{2i+p}` by certified truncation.
///
/// Returns [`RayEval::divergent`] when `s·x` has tail supremum ≥ 1. With a
/// `cutoff`, summation stops as soon as the partial sum exceeds it.
pub(crate) fn ray_series<T: Real>(
    x: &FinValSeq<T>,
    params: &AnalyticParams<T>,
    s: T,
    tol: T,
    cutoff: Option<T>,
) -> Result<RayEval<T>> {
    let r = s * x.tail_sup();
    if r >= T::one() {
        return Ok(RayEval::divergent());
    }
    let p = params.p() as usize;
    let j = x.prefix_len();
    let mut sum = T::zero();
    let mut slope = T::zero();
    let mut err = T::zero();
    let mut i = 1usize;
    let remainder = loop {
        let w = (T::one() + params.eps(i)) * s * x.at(i).abs();
        if !w.is_zero() {
            let k = 2 * i + p;
            let term = w.powi(k as i32);
            sum = sum + term;
            slope = slope + T::from_count(k) * term;
            err = err + rounding::<T>(3 * k + 8) * term;
            if let Some(c) = cutoff {
                if sum > c {
                    return Ok(RayEval { value: sum, error: T::zero(), slope });
                }
            }
        }
        if i >= j {
            if r.is_zero() {
                break T::zero();
            }
            let rho = (T::one() + params.eps(i + 1)) * r;
            if rho < T::one() {
                let rem = rho.powi((2 * i + 2 + p) as i32) / (T::one() - rho * rho);
                if rem <= tol {
                    break rem;
                }
            }
        }
        i += 1;
        if i > SERIES_CAP {
            return Err(Error::SeriesCap(SERIES_CAP));
        }
    };
    err = err + rounding::<T>(i) * sum + remainder;
    Ok(RayEval { value: sum + remainder / T::lit(2.0), error: err, slope })
}

/// `ψ(x) = φ(Tx)` with `T x = ((1+ε_i)·x(i))_i`, truncated with remainder ≤ `tol`.
///
/// The image `Tx` is never formed; the weights enter term by term.
pub fn psi<T: Real>(x: &FinValSeq<T>, params: &AnalyticParams<T>, tol: T) -> Result<Certified<T>> {
    check_tail(x)?;
    let e = ray_series(x, params, T::one(), tol, None)?;
    Ok(Certified { value: e.value, error: e.error })
}

/// `‖Tx‖∞ = sup_i (1+ε_i)·|x(i)|`.
pub fn weighted_sup_norm<T: Real>(x: &FinValSeq<T>, params: &AnalyticParams<T>) -> T {
    let j = x.prefix_len();
    // The weights decrease, so each tail residue attains its sup at its first slot.
    (1..=j + x.period()).fold(T::zero(), |m, i| m.max((T::one() + params.eps(i)) * x.at(i).abs()))
}

/// The analytic norm `ν(x) = μ_B(Tx)` with `B = {ψ ≤ 1}`.
///
/// Bisection starts from `s ∈ [(1−ε₁)/((1+ε₁)‖x‖∞), 1/‖x‖∞]` and stops once the
/// bracket is narrower than `tol` relative to the value.
pub fn analytic_norm<T: Real>(x: &FinValSeq<T>, params: &AnalyticParams<T>, tol: T) -> Result<GaugeResult<T>> {
    let opts = SolverOptions::new(tol)?;
    if x.is_zero() {
        return Ok(GaugeResult::zero());
    }
    let sup = x.sup_norm();
    let e1 = params.eps1();
    let lo = (T::one() - e1) / ((T::one() + e1) * sup);
    let hi = sup.recip();
    let series_tol = T::epsilon() * T::lit(0.1);
    solve_ray(|s, cutoff| ray_series(x, params, s, series_tol, cutoff), T::one(), lo, hi, opts)
}
