// SPDX-License-Identifier: Apache-2.0

//! Parameter sequences `(ε_k)_{k≥0}` and `(θ_k)_{k≥0}` for the smooth norm.
//!
//! The construction needs
//!
//! ```text
//! eps-ratio:  ε_k ↘ 0  and  (1+ε_{k+1})/(1+ε_k) ↗ 1,
//! theta-gap:  θ_k ↘ 0  and  (1+ε_{k+1})/(1+ε_k) < 1 − 2θ_{k+1}  for every k ≥ 0.
//! ```

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::scalar::Real;

pub type SeqRule<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

#[derive(Clone)]
pub struct SmoothSchedule<T> {
    eps: SeqRule<T>,
    theta: SeqRule<T>,
}

impl<T: Real> fmt::Debug for SmoothSchedule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothSchedule")
            .field("eps", &[self.eps(0), self.eps(1), self.eps(2)])
            .field("theta", &[self.theta(0), self.theta(1), self.theta(2)])
            .finish_non_exhaustive()
    }
}

impl<T: Real> Default for SmoothSchedule<T> {
    /// `ε_k = 1/(k+1)`, `θ_k = 1/(4(k+1)²)`.
    fn default() -> Self {
        Self::scaled(T::one(), T::one())
    }
}

impl<T: Real> SmoothSchedule<T> {
    pub fn new(eps: SeqRule<T>, theta: SeqRule<T>) -> Self {
        Self { eps, theta }
    }

    /// `ε_k = a/(k+1)`, `θ_k = b/(4(k+1)²)`.
    pub fn scaled(a: T, b: T) -> Self {
        let quarter = T::lit(0.25);
        Self {
            eps: Arc::new(move |k| a / T::from_count(k + 1)),
            theta: Arc::new(move |k| {
                let n = T::from_count(k + 1);
                b * quarter / (n * n)
            }),
        }
    }

    #[inline]
    pub fn eps(&self, k: usize) -> T {
        (self.eps)(k)
    }

    #[inline]
    pub fn theta(&self, k: usize) -> T {
        (self.theta)(k)
    }

    /// `(1+ε_{k+1})/(1+ε_k)`.
    pub fn ratio(&self, k: usize) -> T {
        (T::one() + self.eps(k + 1)) / (T::one() + self.eps(k))
    }

    /// `1 − 2θ_{k+1}`.
    pub fn gap_bound(&self, k: usize) -> T {
        T::one() - T::lit(2.0) * self.theta(k + 1)
    }

    /// The final sandwich constant `(1+θ₁)/(1−θ₁)`.
    pub fn sandwich_constant(&self) -> T {
        let t = self.theta(1);
        (T::one() + t) / (T::one() - t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    EpsRatio,
    ThetaGap,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    pub k: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScheduleReport {
    pub checked_up_to: usize,
    pub first_violation: Option<Violation>,
    /// `min_k (1 − 2θ_{k+1}) − ratio(k)` over the checked range.
    pub min_gap: f64,
}

impl ScheduleReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks both conditions strictly for every `k ≤ bound`.
pub fn validate_schedule<T: Real>(s: &SmoothSchedule<T>, bound: usize) -> ScheduleReport {
    let fail = |condition, k, reason: &str| Some(Violation { condition, k, reason: reason.to_owned() });
    let mut first_violation = None;
    let mut min_gap = f64::INFINITY;
    let mut prev_ratio = None;
    for k in 0..=bound {
        let (e0, e1) = (s.eps(k), s.eps(k + 1));
        let (t0, t1) = (s.theta(k), s.theta(k + 1));
        let ratio = s.ratio(k);
        let gap = s.gap_bound(k) - ratio;
        min_gap = min_gap.min(gap.to_f64().unwrap_or(f64::NAN));
        if first_violation.is_some() {
            continue;
        }
        first_violation = if !(e0 > T::zero() && e1 > T::zero()) {
            fail(Condition::EpsRatio, k, "ε_k must be positive")
        } else if !(e1 < e0) {
            fail(Condition::EpsRatio, k, "ε_k is not strictly decreasing")
        } else if !(ratio < T::one()) {
            fail(Condition::EpsRatio, k, "(1+ε_{k+1})/(1+ε_k) is not below 1")
        } else if prev_ratio.is_some_and(|p: T| !(ratio > p)) {
            fail(Condition::EpsRatio, k, "(1+ε_{k+1})/(1+ε_k) is not strictly increasing")
        } else if !(t0 > T::zero() && t1 > T::zero()) {
            fail(Condition::ThetaGap, k, "θ_k must be positive")
        } else if !(t1 < t0) {
            fail(Condition::ThetaGap, k, "θ_k is not strictly decreasing")
        } else if !(gap > T::zero()) {
            fail(Condition::ThetaGap, k, "(1+ε_{k+1})/(1+ε_k) < 1 − 2θ_{k+1} fails")
        } else {
            None
        };
        prev_ratio = Some(ratio);
    }
    ScheduleReport { checked_up_to: bound, first_violation, min_gap }
}
