// SPDX-License-Identifier: Apache-2.0

//! Scalar abstraction shared by every evaluator in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the evaluators are generic over (`f32`, `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal; every literal used in the crate is representable.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

/// Relative rounding budget for an expression built from `ops` floating-point operations.
#[inline]
pub(crate) fn rounding<T: Real>(ops: usize) -> T {
    T::from_count(ops.max(1)) * T::epsilon()
}

/// A computed value with a bound on its absolute error.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Certified<T> {
    pub value: T,
    pub error: T,
}

impl<T: Real> Certified<T> {
    pub fn exact(value: T) -> Self {
        Self { value, error: T::zero() }
    }

    pub fn contains(&self, v: T) -> bool {
        (self.value - v).abs() <= self.error
    }
}

impl<T: Real> From<crate::gauge::GaugeResult<T>> for Certified<T> {
    fn from(g: crate::gauge::GaugeResult<T>) -> Self {
        Self { value: g.value, error: g.certified_error }
    }
}
