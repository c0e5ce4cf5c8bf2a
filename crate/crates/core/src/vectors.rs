// SPDX-License-Identifier: Apache-2.0

//! Finitely supported vectors, eventually periodic sequences and the base
//! `ℓ_p` norms they are measured in.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Index label of a basis vector `e_γ`.
pub type Label = u64;

fn check_finite<T: Real>(v: T) -> Result<T> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(v.to_f64().unwrap_or(f64::NAN)))
    }
}

/// A finitely supported real vector `Σ c_γ e_γ`.
///
/// Zero coefficients are never stored, so the key set is exactly the support.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SparseVec<T> {
    entries: BTreeMap<Label, T>,
}

impl<T: Real> SparseVec<T> {
    pub fn zero() -> Self {
        Self { entries: BTreeMap::new() }
    }

    /// Builds a vector from `(label, coefficient)` pairs.
    ///
    /// Duplicate labels and non-finite coefficients are rejected; zeros are dropped.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, T)>,
    {
        let mut map = BTreeMap::new();
        for (label, value) in entries {
            check_finite(value)?;
            if map.insert(label, value).is_some() {
                return Err(Error::DuplicateIndex(label));
            }
        }
        map.retain(|_, v| !v.is_zero());
        Ok(Self { entries: map })
    }

    /// Dense coordinates mapped onto labels `1..=n`.
    pub fn from_dense(values: &[T]) -> Result<Self> {
        Self::from_entries(values.iter().enumerate().map(|(i, &v)| (i as Label + 1, v)))
    }

    /// `c·e_label`.
    pub fn basis(label: Label, c: T) -> Result<Self> {
        Self::from_entries([(label, c)])
    }

    pub fn get(&self, label: Label) -> T {
        self.entries.get(&label).copied().unwrap_or_else(T::zero)
    }

    pub fn support(&self) -> BTreeSet<Label> {
        self.entries.keys().copied().collect()
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending label order.
    pub fn iter(&self) -> impl Iterator<Item = (Label, T)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_label(&self) -> Option<Label> {
        self.entries.keys().next_back().copied()
    }

    /// The coordinate projection `P_A`.
    pub fn project(&self, set: &BTreeSet<Label>) -> Self {
        let entries = self.entries.iter().filter(|(k, _)| set.contains(k)).map(|(&k, &v)| (k, v)).collect();
        Self { entries }
    }

    pub fn scaled(&self, lambda: T) -> Self {
        if lambda.is_zero() {
            return Self::zero();
        }
        let mut entries: BTreeMap<Label, T> = self.entries.iter().map(|(&k, &v)| (k, lambda * v)).collect();
        entries.retain(|_, v| !v.is_zero());
        Self { entries }
    }

    /// `Σ scalars[k]·vectors[k]`, coordinatewise.
    pub fn lin_comb(scalars: &[T], vectors: &[&Self]) -> Result<Self> {
        if scalars.len() != vectors.len() {
            return Err(Error::LengthMismatch { scalars: scalars.len(), vectors: vectors.len() });
        }
        let mut acc: BTreeMap<Label, T> = BTreeMap::new();
        for (&a, v) in scalars.iter().zip(vectors) {
            for (label, c) in v.iter() {
                let slot = acc.entry(label).or_insert_with(T::zero);
                *slot = *slot + a * c;
            }
        }
        for v in acc.values() {
            check_finite(*v)?;
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Self { entries: acc })
    }

    /// Absolute values of the coefficients, largest first.
    pub fn magnitudes_desc(&self) -> Vec<T> {
        let mut mags: Vec<T> = self.entries.values().map(|v| v.abs()).collect();
        sort_desc(&mut mags);
        mags
    }

    /// Dense view over labels `1..=n`; labels beyond `n` are ignored.
    pub fn to_dense(&self, n: usize) -> Vec<T> {
        (1..=n as Label).map(|l| self.get(l)).collect()
    }
}

pub(crate) fn sort_desc<T: Real>(v: &mut [T]) {
    v.sort_by(|a, b| b.partial_cmp(a).expect("finite magnitudes"));
}

/// A bounded sequence `x(1), x(2), …` given by an explicit prefix followed by a
/// periodic tail. Every such sequence takes finitely many values.
#[derive(Clone, Debug, PartialEq)]
pub struct FinValSeq<T> {
    prefix: Vec<T>,
    tail: Vec<T>,
}

impl<T: Real> FinValSeq<T> {
    /// An empty `tail_period` is read as the zero tail.
    pub fn new(prefix: Vec<T>, tail_period: Vec<T>) -> Result<Self> {
        for &v in prefix.iter().chain(tail_period.iter()) {
            check_finite(v)?;
        }
        let tail = if tail_period.is_empty() { vec![T::zero()] } else { tail_period };
        Ok(Self { prefix, tail })
    }

    pub fn zero() -> Self {
        Self { prefix: Vec::new(), tail: vec![T::zero()] }
    }

    /// Finitely supported sequence with the given leading values.
    pub fn finite(values: Vec<T>) -> Result<Self> {
        Self::new(values, vec![T::zero()])
    }

    /// Labels are read as positions; label 0 has no position.
    pub fn from_sparse(x: &SparseVec<T>) -> Result<Self> {
        if x.entries.contains_key(&0) {
            return Err(Error::ZeroPosition);
        }
        let len = x.max_label().unwrap_or(0) as usize;
        Self::finite(x.to_dense(len))
    }

    /// The finitely supported view, when the tail is identically zero.
    pub fn to_sparse(&self) -> Option<SparseVec<T>> {
        if self.tail.iter().any(|v| !v.is_zero()) {
            return None;
        }
        SparseVec::from_dense(&self.prefix).ok()
    }

    pub fn prefix(&self) -> &[T] {
        &self.prefix
    }

    pub fn tail_period(&self) -> &[T] {
        &self.tail
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn period(&self) -> usize {
        self.tail.len()
    }

    /// Value at position `i ≥ 1`.
    pub fn value_at(&self, i: usize) -> Result<T> {
        if i == 0 {
            return Err(Error::ZeroPosition);
        }
        Ok(self.at(i))
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> T {
        let j = self.prefix.len();
        if i <= j {
            self.prefix[i - 1]
        } else {
            self.tail[(i - j - 1) % self.tail.len()]
        }
    }

    pub fn sup_norm(&self) -> T {
        self.prefix.iter().chain(self.tail.iter()).fold(T::zero(), |m, v| m.max(v.abs()))
    }

    /// `max |tail value|`, the limsup of `|x(i)|`.
    pub fn tail_sup(&self) -> T {
        self.tail.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.sup_norm().is_zero()
    }

    pub fn scaled(&self, lambda: T) -> Self {
        Self {
            prefix: self.prefix.iter().map(|&v| lambda * v).collect(),
            tail: self.tail.iter().map(|&v| lambda * v).collect(),
        }
    }

    /// `Σ scalars[k]·vectors[k]`; the result uses the longest prefix and the
    /// least common multiple of the tail periods.
    pub fn lin_comb(scalars: &[T], vectors: &[&Self]) -> Result<Self> {
        if scalars.len() != vectors.len() {
            return Err(Error::LengthMismatch { scalars: scalars.len(), vectors: vectors.len() });
        }
        let j = vectors.iter().map(|v| v.prefix.len()).max().unwrap_or(0);
        let m = vectors.iter().fold(1usize, |acc, v| lcm(acc, v.tail.len()));
        let combine = |i: usize| scalars.iter().zip(vectors).fold(T::zero(), |acc, (&a, v)| acc + a * v.at(i));
        let prefix = (1..=j).map(combine).collect();
        let tail = (j + 1..=j + m).map(combine).collect();
        Self::new(prefix, tail)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The original norm of the space: `ℓ_1` or `ℓ_p` with `p` even.
///
/// The canonical basis is suppression 1-unconditional for every variant, so
/// `‖P_A x‖ ≤ ‖x‖` for all coordinate sets `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum BaseNorm {
    L1,
    Even(u32),
}

impl BaseNorm {
    pub fn new(p: u32) -> Result<Self> {
        match p {
            1 => Ok(BaseNorm::L1),
            p if p >= 2 && p.is_multiple_of(2) => Ok(BaseNorm::Even(p)),
            p => Err(Error::InvalidParameter(format!("base exponent p = {p}: only p = 1 and even p are supported"))),
        }
    }

    pub fn exponent(self) -> u32 {
        match self {
            BaseNorm::L1 => 1,
            BaseNorm::Even(p) => p,
        }
    }

    /// Norm of a vector whose magnitudes are given largest first.
    ///
    /// The accumulation order is the slice order; callers comparing norms of
    /// different subsets rely on it being canonical.
    pub fn of_sorted_magnitudes<T: Real>(self, mags: &[T]) -> T {
        match self {
            BaseNorm::L1 => mags.iter().fold(T::zero(), |s, &v| s + v),
            BaseNorm::Even(p) => root(self, mags.iter().fold(T::zero(), |s, &v| s + v.powi(p as i32))),
        }
    }
}

/// Inverse of the power sum: `s ↦ s^{1/p}`.
#[inline]
pub(crate) fn root<T: Real>(b: BaseNorm, power_sum: T) -> T {
    match b {
        BaseNorm::L1 => power_sum,
        BaseNorm::Even(2) => power_sum.sqrt(),
        BaseNorm::Even(p) => power_sum.powf(T::from_count(p as usize).recip()),
    }
}

/// `(Σ |x_i|^p)^{1/p}`.
pub fn base_norm<T: Real>(x: &SparseVec<T>, b: BaseNorm) -> T {
    b.of_sorted_magnitudes(&x.magnitudes_desc())
}

/// `max |x(i)|` over prefix and tail.
pub fn sup_norm<T: Real>(x: &FinValSeq<T>) -> T {
    x.sup_norm()
}
