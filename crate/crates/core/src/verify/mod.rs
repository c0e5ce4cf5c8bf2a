// SPDX-License-Identifier: Apache-2.0

//! Numerical oracles for the constructed norms.
//!
//! Everything here works on dense coordinate vectors, with position `i` of a
//! slice standing for label `i + 1`. Smoothness is only ever checked through
//! finite-difference stability, so a passing report is consistent with
//! smoothness and proves nothing.

pub mod fd;
pub mod nested;
pub mod sampling;
pub mod scan;
pub mod suites;

use crate::analytic::{analytic_norm, AnalyticParams};
use crate::error::Result;
use crate::scalar::{rounding, Certified, Real};
use crate::smooth::SmoothNorm;
use crate::vectors::{base_norm, BaseNorm, FinValSeq, SparseVec};

pub use fd::{euler_residual, fd_directional, fd_gradient, fd_hessian_diag, EulerReport, FdReport, FdVectorReport};
pub use nested::{nested_gauge_check, NestedReport};
pub use sampling::{axioms_sample, convexity_sample, trial_rng, SampleReport, VectorSampler, Violations};
pub use scan::scan_oracle;

/// A deterministic norm-like function with an error bound per evaluation.
pub trait Evaluator<T>: Sync {
    fn eval(&self, x: &[T]) -> Result<Certified<T>>;
}

impl<T, F> Evaluator<T> for F
where
    F: Fn(&[T]) -> Result<Certified<T>> + Sync,
{
    fn eval(&self, x: &[T]) -> Result<Certified<T>> {
        self(x)
    }
}

/// `x ↦ ν(x)` on finitely supported sequences.
pub fn analytic_evaluator<T: Real>(params: &AnalyticParams<T>, tol: T) -> impl Evaluator<T> + '_ {
    move |x: &[T]| Ok(analytic_norm(&FinValSeq::finite(x.to_vec())?, params, tol)?.into())
}

/// `x ↦ |||x|||`.
pub fn smooth_evaluator<T: Real>(norm: &SmoothNorm<T>, tol: T) -> impl Evaluator<T> + '_ {
    move |x: &[T]| Ok(norm.norm(&SparseVec::from_dense(x)?, tol)?.into())
}

/// `x ↦ ‖x‖_f`.
pub fn f_evaluator<T: Real>(norm: &SmoothNorm<T>) -> impl Evaluator<T> + '_ {
    move |x: &[T]| {
        let v = norm.f_norm(&SparseVec::from_dense(x)?);
        Ok(Certified { value: v, error: rounding::<T>(2 * x.len() + 8) * v })
    }
}

/// `x ↦ ‖x‖_p`.
pub fn base_evaluator<T: Real>(base: BaseNorm) -> impl Evaluator<T> {
    move |x: &[T]| {
        let v = base_norm(&SparseVec::from_dense(x)?, base);
        Ok(Certified { value: v, error: rounding::<T>(2 * x.len() + 8) * v })
    }
}

/// `x + t·u`, padding the shorter operand with zeros.
pub(crate) fn axpy<T: Real>(x: &[T], t: T, u: &[T]) -> Vec<T> {
    let n = x.len().max(u.len());
    (0..n)
        .map(|i| {
            let a = x.get(i).copied().unwrap_or_else(T::zero);
            let b = u.get(i).copied().unwrap_or_else(T::zero);
            a + t * b
        })
        .collect()
}
