// SPDX-License-Identifier: Apache-2.0

//! Checks `μ_B/(1+δ) ≤ μ_C ≤ μ_B` for bodies `B ⊆ C ⊆ (1+δ)B` along given rays.

use serde::Serialize;

use super::Evaluator;
use crate::error::Result;
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NestedReport<T> {
    pub holds: bool,
    pub rays_checked: usize,
    /// Largest `μ_B/(1+δ) − μ_C` beyond the certified errors, relative to `μ_B`.
    pub worst_lower: T,
    /// Largest `μ_C − μ_B` beyond the certified errors, relative to `μ_B`.
    pub worst_upper: T,
    /// First ray index where an inequality failed.
    pub first_failure: Option<usize>,
}

/// `inner` is the gauge of `B`, `outer` the gauge of `C`.
pub fn nested_gauge_check<T, B, C>(inner: &B, outer: &C, delta: T, rays: &[Vec<T>], tol: T) -> Result<NestedReport<T>>
where
    T: Real,
    B: Evaluator<T> + ?Sized,
    C: Evaluator<T> + ?Sized,
{
    let mut worst_lower = T::neg_infinity();
    let mut worst_upper = T::neg_infinity();
    let mut first_failure = None;
    for (idx, x) in rays.iter().enumerate() {
        let b = inner.eval(x)?;
        let c = outer.eval(x)?;
        if b.value.is_zero() && c.value.is_zero() {
            continue;
        }
        let slack = b.error + c.error + tol * b.value;
        let lower = (b.value / (T::one() + delta) - c.value - slack) / b.value;
        let upper = (c.value - b.value - slack) / b.value;
        if (lower > T::zero() || upper > T::zero()) && first_failure.is_none() {
            first_failure = Some(idx);
        }
        worst_lower = worst_lower.max(lower);
        worst_upper = worst_upper.max(upper);
    }
    Ok(NestedReport {
        holds: first_failure.is_none(),
        rays_checked: rays.len(),
        worst_lower,
        worst_upper,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Certified;

    fn linf(x: &[f64]) -> Result<Certified<f64>> {
        Ok(Certified::exact(x.iter().fold(0.0, |m, v| m.max(v.abs()))))
    }

    fn rays() -> Vec<Vec<f64>> {
        vec![vec![1.0, 0.0], vec![0.3, -2.0], vec![-1.0, 1.0]]
    }

    #[test]
    fn equal_bodies() {
        let r = nested_gauge_check(&linf, &linf, 0.0, &rays(), 1e-12).unwrap();
        assert!(r.holds);
        assert_eq!(r.rays_checked, 3);
    }

    #[test]
    fn scaled_body() {
        let delta = 0.25;
        let outer = move |x: &[f64]| linf(x).map(|c| Certified::exact(c.value / (1.0 + delta)));
        assert!(nested_gauge_check(&linf, &outer, delta, &rays(), 1e-12).unwrap().holds);
        let r = nested_gauge_check(&linf, &outer, 0.1, &rays(), 1e-12).unwrap();
        assert!(!r.holds);
        assert_eq!(r.first_failure, Some(0));
    }
}
