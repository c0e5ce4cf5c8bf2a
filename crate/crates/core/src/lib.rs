// SPDX-License-Identifier: Apache-2.0

//! Equivalent norms that are analytic on `ℓ∞^F` or `C∞`-smooth on the finitely
//! supported span of an `ℓ_p` basis, computed as certified gauges.
//!
//! Every numeric routine is generic over [`Real`] (`f32` or `f64`). The aliases
//! below fix the scalar for the common cases.
//!
//! ```
//! use renorm_core::{analytic_norm, AnalyticParamsF64, FinValSeqF64};
//!
//! let x = FinValSeqF64::new(vec![1.0], vec![0.0]).unwrap();
//! let nu = analytic_norm(&x, &AnalyticParamsF64::default(), 1e-12).unwrap();
//! assert!((nu.value - 1.1).abs() < 1e-10);
//! ```

// Negated float comparisons are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod bump;
pub mod embed;
pub mod error;
pub mod gauge;
pub mod scalar;
pub mod schedule;
pub mod smooth;
pub mod vectors;
pub mod verify;

pub use analytic::{analytic_norm, min_even_p, phi, psi, AnalyticParams};
pub use bump::BumpSpec;
pub use embed::{embed_l1, l1_pullback_norm, rademacher_matrix, SignMatrix};
pub use error::{Error, Result};
pub use gauge::GaugeResult;
pub use scalar::{Certified, Real};
pub use schedule::{validate_schedule, SmoothSchedule};
pub use smooth::{f_norm, f_norm_brute, q_select, smooth_fin_norm, FinNormSpec, SmoothNorm};
pub use vectors::{base_norm, sup_norm, BaseNorm, FinValSeq, Label, SparseVec};

pub type SparseVecF64 = SparseVec<f64>;
pub type SparseVecF32 = SparseVec<f32>;
pub type FinValSeqF64 = FinValSeq<f64>;
pub type FinValSeqF32 = FinValSeq<f32>;
pub type AnalyticParamsF64 = AnalyticParams<f64>;
pub type AnalyticParamsF32 = AnalyticParams<f32>;
pub type SmoothScheduleF64 = SmoothSchedule<f64>;
pub type SmoothScheduleF32 = SmoothSchedule<f32>;
pub type SmoothNormF64 = SmoothNorm<f64>;
pub type SmoothNormF32 = SmoothNorm<f32>;
pub type GaugeResultF64 = GaugeResult<f64>;
pub type GaugeResultF32 = GaugeResult<f32>;
pub type BumpSpecF64 = BumpSpec<f64>;
