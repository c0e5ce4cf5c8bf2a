// SPDX-License-Identifier: Apache-2.0

//! Isometric copies of `ℓ₁^m` inside `ℓ∞^F`.
//!
//! Column `λ` of the sign matrix lists the `λ`-th coordinate of every pattern
//! in `{±1}^m`. Mapping `e_λ` to that column sends `d` to a finitely valued
//! sequence whose sup norm is exactly `‖d‖₁`, attained on the row that agrees
//! with the signs of `d`.

use serde::Serialize;

use crate::analytic::{analytic_norm, AnalyticParams};
use crate::error::{Error, Result};
use crate::gauge::GaugeResult;
use crate::scalar::Real;
use crate::vectors::{FinValSeq, SparseVec};

pub const MAX_M: usize = 16;

/// All `2^m` sign patterns in binary-counting order, `+1` before `−1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignMatrix {
    m: usize,
    signs: Vec<i8>,
}

impl SignMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        1 << self.m
    }

    /// Entry at row `r`, column `λ ∈ 1..=m`.
    pub fn get(&self, r: usize, lambda: usize) -> i8 {
        self.signs[r * self.m + lambda - 1]
    }

    pub fn row(&self, r: usize) -> &[i8] {
        &self.signs[r * self.m..(r + 1) * self.m]
    }

    pub fn column(&self, lambda: usize) -> Vec<i8> {
        (0..self.rows()).map(|r| self.get(r, lambda)).collect()
    }
}

pub fn rademacher_matrix(m: usize) -> Result<SignMatrix> {
    if !(1..=MAX_M).contains(&m) {
        return Err(Error::InvalidParameter(format!("m must lie in 1..={MAX_M}, got {m}")));
    }
    let mut signs = Vec::with_capacity(m << m);
    for r in 0..1usize << m {
        for lambda in 0..m {
            signs.push(if r >> (m - 1 - lambda) & 1 == 0 { 1 } else { -1 });
        }
    }
    Ok(SignMatrix { m, signs })
}

/// `Σ_λ d_λ·x_λ`: a length-`2^m` prefix followed by a zero tail.
pub fn embed_l1<T: Real>(d: &SparseVec<T>, m: usize) -> Result<FinValSeq<T>> {
    let matrix = rademacher_matrix(m)?;
    if let Some((label, _)) = d.iter().find(|&(l, _)| l == 0 || l > m as u64) {
        return Err(Error::LabelOutOfRange { label, m });
    }
    let prefix = (0..matrix.rows())
        .map(|r| d.iter().fold(T::zero(), |acc, (l, v)| if matrix.get(r, l as usize) > 0 { acc + v } else { acc - v }))
        .collect();
    FinValSeq::new(prefix, vec![T::zero()])
}

/// The analytic norm pulled back to `ℓ₁^m` through [`embed_l1`].
pub fn l1_pullback_norm<T: Real>(
    d: &SparseVec<T>,
    m: usize,
    params: &AnalyticParams<T>,
    tol: T,
) -> Result<GaugeResult<T>> {
    analytic_norm(&embed_l1(d, m)?, params, tol)
}
