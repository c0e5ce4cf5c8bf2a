// SPDX-License-Identifier: Apache-2.0

//! Central differences on a halving step ladder with Richardson extrapolation.

use serde::Serialize;

use super::{axpy, Evaluator};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Finite-difference estimates of one directional derivative.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FdReport<T> {
    pub point: Vec<T>,
    pub direction: Vec<T>,
    /// `h, h/2, h/4`.
    pub steps: Vec<T>,
    pub estimates: Vec<T>,
    pub richardson: T,
    /// `max_i |estimate_i − richardson| / scale`, with `scale = max(|richardson|, ν(direction))`.
    pub stability: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FdVectorReport<T> {
    pub components: Vec<FdReport<T>>,
    /// Extrapolated value per coordinate.
    pub values: Vec<T>,
    /// Worst component stability.
    pub stability: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EulerReport<T> {
    pub value: T,
    /// `⟨∇ν(x), x⟩` from the extrapolated gradient.
    pub pairing: T,
    pub relative_error: T,
}

fn ladder<T: Real>(h: T) -> Result<Vec<T>> {
    if !(h > T::zero() && h.is_finite()) {
        return Err(Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    let two = T::lit(2.0);
    Ok(vec![h, h / two, h / (two * two)])
}

/// Eliminates the `h²` and `h⁴` error terms of a halving ladder.
fn extrapolate<T: Real>(d: &[T]) -> T {
    (T::lit(64.0) * d[2] - T::lit(20.0) * d[1] + d[0]) / T::lit(45.0)
}

fn report<T: Real>(x: &[T], u: &[T], steps: Vec<T>, estimates: Vec<T>, scale: T) -> FdReport<T> {
    let richardson = extrapolate(&estimates);
    let scale = richardson.abs().max(scale);
    let dev = estimates.iter().fold(T::zero(), |m, &d| m.max((d - richardson).abs()));
    let stability = if scale > T::zero() { dev / scale } else { dev };
    FdReport { point: x.to_vec(), direction: u.to_vec(), steps, estimates, richardson, stability }
}

fn nonzero_point<T: Real, E: Evaluator<T> + ?Sized>(eval: &E, x: &[T]) -> Result<T> {
    let v = eval.eval(x)?.value;
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::Precondition("finite differences need x ≠ 0".into()));
    }
    Ok(v)
}

/// `(ν(x+tu) − ν(x−tu))/(2t)` for `t = h, h/2, h/4`.
pub fn fd_directional<T: Real, E: Evaluator<T> + ?Sized>(eval: &E, x: &[T], u: &[T], h: T) -> Result<FdReport<T>> {
    nonzero_point(eval, x)?;
    let steps = ladder(h)?;
    let two = T::lit(2.0);
    let mut estimates = Vec::with_capacity(3);
    for &t in &steps {
        let plus = eval.eval(&axpy(x, t, u))?.value;
        let minus = eval.eval(&axpy(x, -t, u))?.value;
        estimates.push((plus - minus) / (two * t));
    }
    let scale = eval.eval(u)?.value;
    Ok(report(x, u, steps, estimates, scale))
}

/// `(ν(x+tu) − 2ν(x) + ν(x−tu))/t²` for `t = h, h/2, h/4`.
pub fn fd_second<T: Real, E: Evaluator<T> + ?Sized>(eval: &E, x: &[T], u: &[T], h: T) -> Result<FdReport<T>> {
    let centre = nonzero_point(eval, x)?;
    let steps = ladder(h)?;
    let two = T::lit(2.0);
    let mut estimates = Vec::with_capacity(3);
    for &t in &steps {
        let plus = eval.eval(&axpy(x, t, u))?.value;
        let minus = eval.eval(&axpy(x, -t, u))?.value;
        estimates.push((plus - two * centre + minus) / (t * t));
    }
    let scale = eval.eval(u)?.value / centre;
    Ok(report(x, u, steps, estimates, scale))
}

fn coordinate<T: Real>(n: usize, i: usize) -> Vec<T> {
    let mut e = vec![T::zero(); n];
    e[i] = T::one();
    e
}

fn collect<T: Real>(components: Vec<FdReport<T>>) -> FdVectorReport<T> {
    let values = components.iter().map(|r| r.richardson).collect();
    let stability = components.iter().fold(T::zero(), |m, r| m.max(r.stability));
    FdVectorReport { components, values, stability }
}

/// Gradient along every coordinate of `x`.
pub fn fd_gradient<T: Real, E: Evaluator<T> + ?Sized>(eval: &E, x: &[T], h: T) -> Result<FdVectorReport<T>> {
    let comps = (0..x.len()).map(|i| fd_directional(eval, x, &coordinate(x.len(), i), h)).collect::<Result<_>>()?;
    Ok(collect(comps))
}

/// Diagonal of the Hessian along every coordinate of `x`.
pub fn fd_hessian_diag<T: Real, E: Evaluator<T> + ?Sized>(eval: &E, x: &[T], h: T) -> Result<FdVectorReport<T>> {
    let comps = (0..x.len()).map(|i| fd_second(eval, x, &coordinate(x.len(), i), h)).collect::<Result<_>>()?;
    Ok(collect(comps))
}

/// Compares `⟨∇ν(x), x⟩` with `ν(x)`; the two agree for any 1-homogeneous `ν`.
pub fn euler_residual<T: Real, E: Evaluator<T> + ?Sized>(eval: &E, x: &[T], h: T) -> Result<EulerReport<T>> {
    let value = nonzero_point(eval, x)?;
    let grad = fd_gradient(eval, x, h)?;
    let pairing = grad.values.iter().zip(x).fold(T::zero(), |s, (&g, &c)| s + g * c);
    Ok(EulerReport { value, pairing, relative_error: (pairing - value).abs() / value.abs() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Certified;

    fn euclid(x: &[f64]) -> Result<Certified<f64>> {
        Ok(Certified::exact(x.iter().map(|v| v * v).sum::<f64>().sqrt()))
    }

    #[test]
    fn euclidean_gradient() {
        let g = fd_gradient(&euclid, &[3.0, 4.0], 1e-3).unwrap();
        assert!((g.values[0] - 0.6).abs() < 1e-10);
        assert!((g.values[1] - 0.8).abs() < 1e-10);
        assert!(g.stability >= 0.0 && g.stability < 1e-6);
        assert!(g.components[0].steps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn euler_identity_for_a_norm() {
        let r = euler_residual(&euclid, &[1.0, -2.0, 0.5], 1e-3).unwrap();
        assert!(r.relative_error < 1e-10, "{r:?}");
    }

    #[test]
    fn opposite_directions_give_opposite_differences() {
        let a = fd_directional(&euclid, &[3.0, 4.0], &[1.0, 0.5], 1e-3).unwrap();
        let b = fd_directional(&euclid, &[3.0, 4.0], &[-1.0, -0.5], 1e-3).unwrap();
        for (p, q) in a.estimates.iter().zip(&b.estimates) {
            assert_eq!(*p, -*q);
        }
    }

    #[test]
    fn hessian_diagonal_of_euclidean_norm() {
        let r = fd_hessian_diag(&euclid, &[3.0, 4.0], 1e-2).unwrap();
        // ∂²/∂x₁² ‖x‖₂ = x₂²/‖x‖³
        assert!((r.values[0] - 16.0 / 125.0).abs() < 1e-8);
        assert!((r.values[1] - 9.0 / 125.0).abs() < 1e-8);
    }

    #[test]
    fn rejects_origin_and_bad_steps() {
        assert!(fd_gradient(&euclid, &[0.0, 0.0], 1e-3).is_err());
        assert!(fd_gradient(&euclid, &[1.0, 0.0], 0.0).is_err());
    }
}
