// SPDX-License-Identifier: Apache-2.0

//! Even convex `C∞` bumps that vanish on a dead zone `[0, a]` and equal 1 at 1.
//!
//! `ρ(t) = C·I((|t| − a)/(1 − a))` with `I(u) = ∫₀^u exp(−1/s) ds` for `u > 0`
//! and `I = 0` otherwise. The integrand is nondecreasing, so `ρ` is convex; all
//! of its derivatives vanish at the activation point.
//!
//! `I` has the closed form `u·e^{−1/u} − E₁(1/u)`, which is what gets evaluated.

use serde::Serialize;

use crate::scalar::Real;

/// Accuracy claimed for [`integral`], relative to its value.
pub(crate) const INTEGRAL_REL_ERR: f64 = 64.0 * f64::EPSILON;

/// `e^x·E₁(x)` for `x > 1` by the continued fraction of `E₁` (modified Lentz).
fn scaled_e1_cf<T: Real>(x: T) -> T {
    let tiny = T::min_positive_value() / T::epsilon();
    let two = T::lit(2.0);
    let mut b = x + T::one();
    let mut c = tiny.recip();
    let mut d = b.recip();
    let mut h = d;
    for i in 1..10_000usize {
        let a = -T::from_count(i * i);
        b = b + two;
        d = (a * d + b).recip();
        c = b + a / c;
        let del = c * d;
        h = h * del;
        if (del - T::one()).abs() <= T::epsilon() {
            break;
        }
    }
    h
}

/// The exponential integral `E₁(x) = ∫_x^∞ e^{−w}/w dw` for `x > 0`.
pub fn exp_integral_e1<T: Real>(x: T) -> T {
    if x <= T::one() {
        // −γ − ln x + Σ_{k≥1} (−1)^{k+1} x^k/(k·k!)
        let gamma = T::lit(0.577_215_664_901_532_9);
        let mut sum = T::zero();
        let mut fact_pow = T::one();
        for k in 1..200usize {
            let kf = T::from_count(k);
            fact_pow = fact_pow * (-x) / kf;
            let term = -fact_pow / kf;
            sum = sum + term;
            if term.abs() <= T::epsilon() * sum.abs() {
                break;
            }
        }
        -gamma - x.ln() + sum
    } else {
        scaled_e1_cf(x) * (-x).exp()
    }
}

/// `I(u) = ∫₀^u exp(−1/s) ds`, zero for `u ≤ 0`.
pub fn integral<T: Real>(u: T) -> T {
    if u <= T::zero() {
        return T::zero();
    }
    let x = u.recip();
    if x <= T::one() {
        u * (-x).exp() - exp_integral_e1(x)
    } else {
        let decay = (-x).exp();
        if decay.is_zero() {
            return T::zero();
        }
        decay * (u - scaled_e1_cf(x))
    }
}

/// Level-`n` bump: dead zone `[0, a]`, normalized so that `ρ(1) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BumpSpec<T> {
    pub level: usize,
    /// Activation threshold `a = 1 − θ_n²`.
    pub activation: T,
    /// `C = 1/I(1)`.
    pub normalizer: T,
}

impl<T: Real> BumpSpec<T> {
    /// Bump whose dead zone is `[0, 1 − θ²]`.
    pub fn new(level: usize, theta: T) -> Self {
        Self { level, activation: T::one() - theta * theta, normalizer: integral(T::one()).recip() }
    }

    #[inline]
    fn width(&self) -> T {
        T::one() - self.activation
    }

    /// `ρ(t)`; exactly zero on the dead zone.
    #[inline]
    pub fn eval(&self, t: T) -> T {
        let t = t.abs();
        if t <= self.activation {
            return T::zero();
        }
        self.normalizer * integral((t - self.activation) / self.width())
    }

    /// `ρ'(t)`.
    pub fn derivative(&self, t: T) -> T {
        let a = t.abs();
        if a <= self.activation {
            return T::zero();
        }
        let u = (a - self.activation) / self.width();
        let d = self.normalizer * (-u.recip()).exp() / self.width();
        if t < T::zero() {
            -d
        } else {
            d
        }
    }
}
