// SPDX-License-Identifier: Apache-2.0

//! Minkowski functionals of sublevel sets, evaluated along rays.
//!
//! For a convex even `g` with `g(0) = 0` and a sublevel body `{g ≤ c}`, the
//! gauge of `x ≠ 0` is `1/s*` where `s*` solves `g(s·x) = c`. Along the ray,
//! `s ↦ g(s·x)` is continuous and nondecreasing, strictly increasing once it
//! leaves zero, so bisection on `s` is safe from any valid bracket.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A gauge value together with a certified enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GaugeResult<T> {
    pub value: T,
    /// `bracket.0 ≤ value ≤ bracket.1`, and the true gauge lies inside.
    pub bracket: (T, T),
    pub iterations: usize,
    /// Bound on `|value − true gauge|`.
    pub certified_error: T,
}

impl<T: Real> GaugeResult<T> {
    pub fn zero() -> Self {
        Self { value: T::zero(), bracket: (T::zero(), T::zero()), iterations: 0, certified_error: T::zero() }
    }

    /// An exactly computed value.
    pub fn exact(value: T) -> Self {
        Self { value, bracket: (value, value), iterations: 0, certified_error: T::zero() }
    }

    /// Whether the certified error is within `tol` relative to the value.
    pub fn meets(&self, tol: T) -> bool {
        self.certified_error <= tol * self.value
    }
}

/// One evaluation of the ray function `s ↦ g(s·x)`.
#[derive(Clone, Copy, Debug)]
pub struct RayEval<T> {
    pub value: T,
    /// Bound on the evaluation error of `value`.
    pub error: T,
    /// `s·g'(s)`; only used to convert `error` into a root displacement.
    pub slope: T,
}

impl<T: Real> RayEval<T> {
    /// The ray has left the convergence domain; `g` is `+∞` there.
    pub fn divergent() -> Self {
        Self { value: T::infinity(), error: T::zero(), slope: T::infinity() }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions<T> {
    /// Relative width of the final `s`-bracket.
    pub tol: T,
    pub max_iter: usize,
}

impl<T: Real> SolverOptions<T> {
    pub fn new(tol: T) -> Result<Self> {
        if !(tol > T::zero() && tol.is_finite()) {
            return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
        }
        Ok(Self { tol, max_iter: 400 })
    }
}

/// Solves `g(s) = target` by bisection from `[s_lo, s_hi]` and returns the gauge `1/s*`.
///
/// `eval(s, cutoff)` may stop early once its partial value exceeds `cutoff`,
/// since only the comparison with `target` matters during bisection. Invalid
/// bracket ends are widened geometrically.
pub fn solve_ray<T, F>(mut eval: F, target: T, s_lo: T, s_hi: T, opts: SolverOptions<T>) -> Result<GaugeResult<T>>
where
    T: Real,
    F: FnMut(T, Option<T>) -> Result<RayEval<T>>,
{
    let two = T::lit(2.0);
    let mut lo = s_lo;
    let mut hi = s_hi;
    let mut iterations = 0usize;

    let mut widen = 0;
    while eval(lo, Some(target))?.value > target {
        hi = lo;
        lo = lo / two;
        widen += 1;
        if widen > 1000 || lo.is_zero() {
            return Err(Error::Bracket);
        }
    }
    widen = 0;
    while eval(hi, Some(target))?.value <= target {
        lo = hi;
        hi = hi * two;
        widen += 1;
        if widen > 1000 || !hi.is_finite() {
            return Err(Error::Bracket);
        }
    }

    while hi - lo > opts.tol * lo {
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if iterations >= opts.max_iter {
            return Err(Error::MaxIterations(opts.max_iter));
        }
        iterations += 1;
        if eval(mid, Some(target))?.value > target {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let s = lo + (hi - lo) / two;
    let at = eval(s, None)?;
    // First-order displacement of the root caused by the evaluation error.
    let shift = if at.slope > T::zero() && at.value.is_finite() { two * at.error / at.slope } else { T::infinity() };
    let s_lo_cert = lo * (T::one() - shift).max(T::zero());
    let s_hi_cert = hi * (T::one() + shift);
    let value = s.recip();
    let bracket = (s_hi_cert.recip(), s_lo_cert.recip());
    let certified_error = (value - bracket.0).max(bracket.1 - value);
    Ok(GaugeResult { value, bracket, iterations, certified_error })
}
