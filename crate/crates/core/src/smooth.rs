// SPDX-License-Identifier: Apache-2.0

//! The `C∞`-smooth norm on the span of the canonical `ℓ_p` basis.
//!
//! Pieces, bottom up:
//!
//! * `‖·‖_(s),n`: a smooth norm on `n` coordinates with
//!   `‖v‖/(1+θ_n) ≤ ‖v‖_(s),n ≤ ‖v‖`. For even `p` this is `‖·‖_p` itself; for
//!   `p = 1` it is the sign-averaged power norm
//!   `N_q(v) = (2^{−n} Σ_{σ∈{±1}^n} ⟨σ,v⟩^q)^{1/q}` with `q` even.
//! * the f-norm `‖x‖_f = max_{A⊆supp x} (1+ε_|A|)·‖P_A x‖`;
//! * `Ψ(x) = Σ_A ρ_|A|((1+ε_|A|)(1+θ_|A|)·‖P_A x‖_(s),|A|)`;
//! * the gauge of `{Ψ ≤ 1−θ₁}`, which satisfies
//!   `‖x‖_f ≤ |||x||| ≤ (1+θ₁)/(1−θ₁)·‖x‖_f`.
//!
//! Only subsets of `supp x` contribute to `Ψ` on the region the gauge solver
//! visits: every other term sits in its bump's dead zone.

use serde::Serialize;

use crate::bump::{BumpSpec, INTEGRAL_REL_ERR};
use crate::error::{Error, Result};
use crate::gauge::{solve_ray, GaugeResult, RayEval, SolverOptions};
use crate::scalar::{rounding, Real};
use crate::schedule::SmoothSchedule;
use crate::vectors::{root, BaseNorm, Label, SparseVec};

/// Default cap on `|supp x|` for subset enumeration.
pub const DEFAULT_MAX_SUPPORT: usize = 16;

/// Hard ceiling for the cap: evaluation cost grows like `3^{|supp x|}`.
pub const SUPPORT_CEILING: usize = 24;

/// Fresh labels considered by [`SmoothNorm::locality_check`].
pub const LOCALITY_EXTRAS: usize = 3;

/// Exponent of the smooth surrogate on `n` coordinates.
///
/// For even `p` the base norm is reused. For `p = 1` this is the smallest even
/// `q` with `2^{n/q} ≤ 1+θ` (and `q = 2` when `n = 1`).
pub fn q_select<T: Real>(n: usize, theta: T, base: BaseNorm) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    if !(theta > T::zero() && theta.is_finite()) {
        return Err(Error::InvalidParameter(format!("θ must be positive, got {theta}")));
    }
    match base {
        BaseNorm::Even(p) => Ok(p),
        BaseNorm::L1 if n == 1 => Ok(2),
        BaseNorm::L1 => {
            let nln2 = T::from_count(n) * T::LN_2();
            let log1p = theta.ln_1p();
            let fits = |q: u32| nln2 / T::from_count(q as usize) <= log1p;
            let guess = (nln2 / log1p).ceil().to_f64().unwrap_or(f64::INFINITY);
            if !(guess < (i32::MAX / 2) as f64) {
                return Err(Error::InvalidParameter(format!("θ = {theta} needs an exponent beyond range for n = {n}")));
            }
            let mut q = (guess as u32).max(2);
            q += q % 2;
            while !fits(q) {
                q += 2;
            }
            while q > 2 && fits(q - 2) {
                q -= 2;
            }
            Ok(q)
        }
    }
}

/// The smooth norm `‖·‖_(s),n` used on `n`-element coordinate sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FinNormSpec {
    pub base: BaseNorm,
    pub n: usize,
    pub q: u32,
}

impl FinNormSpec {
    pub fn new<T: Real>(base: BaseNorm, n: usize, theta: T) -> Result<Self> {
        Ok(Self { base, n, q: q_select(n, theta, base)? })
    }

    /// Norm of a vector given by the magnitudes of its nonzero coordinates.
    pub fn of_magnitudes<T: Real>(&self, mags: &[T]) -> T {
        match self.base {
            BaseNorm::L1 => sign_average_norm(mags, self.q),
            b => root(b, mags.iter().fold(T::zero(), |s, &v| s + v.powi(b.exponent() as i32))),
        }
    }
}

/// `N_q(v) = (2^{−k} Σ_{σ∈{±1}^k} ⟨σ,v⟩^q)^{1/q}` over the `k` given magnitudes.
///
/// Zero coordinates do not change `N_q`, so callers pass only the support.
/// The sum is normalized by `‖v‖₁`, which is attained by `σ = ±sign(v)`.
pub fn sign_average_norm<T: Real>(mags: &[T], q: u32) -> T {
    match mags.len() {
        0 => return T::zero(),
        1 => return mags[0],
        _ => {}
    }
    let l1 = mags.iter().fold(T::zero(), |s, &v| s + v);
    let rest = &mags[1..];
    let patterns = 1usize << rest.len();
    let mut total = T::zero();
    // σ and −σ contribute equally; fix the sign of the first coordinate.
    for signs in 0..patterns {
        let mut dot = mags[0];
        for (bit, &m) in rest.iter().enumerate() {
            if signs >> bit & 1 == 0 {
                dot = dot + m;
            } else {
                dot = dot - m;
            }
        }
        total = total + (dot.abs() / l1).powi(q as i32);
    }
    l1 * (total / T::from_count(patterns)).powf(T::from_count(q as usize).recip())
}

/// `‖v‖_(s),A` for a vector supported in an `n`-element set `A`.
pub fn smooth_fin_norm<T: Real>(v: &SparseVec<T>, spec: &FinNormSpec) -> Result<T> {
    if v.support_size() > spec.n {
        return Err(Error::Precondition(format!(
            "support of size {} does not fit in {} coordinates",
            v.support_size(),
            spec.n
        )));
    }
    Ok(spec.of_magnitudes(&v.magnitudes_desc()))
}

/// Per-size maxima `max_{|A|=k} ‖P_A x‖` are attained by the `k` largest
/// magnitudes, since the base norm is monotone in each coordinate.
fn f_norm_sorted<T: Real>(mags: &[T], schedule: &SmoothSchedule<T>, base: BaseNorm) -> T {
    let p = base.exponent() as i32;
    let mut power_sum = T::zero();
    let mut best = T::zero();
    for (idx, &m) in mags.iter().enumerate() {
        power_sum = power_sum + if p == 1 { m } else { m.powi(p) };
        let cand = (T::one() + schedule.eps(idx + 1)) * root(base, power_sum);
        best = best.max(cand);
    }
    best
}

/// `‖x‖_f = max_{A⊆supp x} (1+ε_|A|)·‖P_A x‖`, via the top-`k` magnitudes.
pub fn f_norm<T: Real>(x: &SparseVec<T>, schedule: &SmoothSchedule<T>, base: BaseNorm) -> T {
    f_norm_sorted(&x.magnitudes_desc(), schedule, base)
}

/// `‖x‖_f` by enumerating every subset of the support.
///
/// Each subset is accumulated in the same descending-magnitude order as the
/// fast path, so the two agree bit for bit.
pub fn f_norm_brute<T: Real>(
    x: &SparseVec<T>,
    schedule: &SmoothSchedule<T>,
    base: BaseNorm,
    max_support: usize,
) -> Result<T> {
    let n = x.support_size();
    check_support(n, max_support)?;
    let mags = x.magnitudes_desc();
    let p = base.exponent() as i32;
    let mut best = T::zero();
    for mask in 1usize..(1 << n) {
        let mut power_sum = T::zero();
        for (idx, &m) in mags.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                power_sum = power_sum + if p == 1 { m } else { m.powi(p) };
            }
        }
        let size = mask.count_ones() as usize;
        best = best.max((T::one() + schedule.eps(size)) * root(base, power_sum));
    }
    Ok(best)
}

fn check_support(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SupportTooLarge { size, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Level<T> {
    /// `(1+ε_n)(1+θ_n)`.
    coeff: T,
    bump: BumpSpec<T>,
    fin: FinNormSpec,
}

/// One summand of `Ψ` along a ray: `ρ_level(s·weight)`.
#[derive(Clone, Copy, Debug)]
struct Term<T> {
    level: usize,
    weight: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalityReport<T> {
    /// Every off-support bump term is exactly zero.
    pub holds: bool,
    pub sets_checked: usize,
    /// `min (1 − θ_|A|²) − argument` over the checked sets.
    pub min_margin: T,
}

/// Evaluator for the f-norm, `Ψ` and the smooth gauge, with per-level caches.
#[derive(Clone)]
pub struct SmoothNorm<T> {
    schedule: SmoothSchedule<T>,
    base: BaseNorm,
    max_support: usize,
    levels: Vec<Level<T>>,
}

impl<T: Real> std::fmt::Debug for SmoothNorm<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SmoothNorm")
            .field("schedule", &self.schedule)
            .field("base", &self.base)
            .field("max_support", &self.max_support)
            .finish_non_exhaustive()
    }
}

impl<T: Real> SmoothNorm<T> {
    pub fn new(schedule: SmoothSchedule<T>, base: BaseNorm, max_support: usize) -> Result<Self> {
        if max_support == 0 || max_support > SUPPORT_CEILING {
            return Err(Error::InvalidParameter(format!(
                "support cap must lie in 1..={SUPPORT_CEILING}, got {max_support}"
            )));
        }
        let top = max_support + LOCALITY_EXTRAS;
        let mut levels = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let (eps, theta) = (schedule.eps(n), schedule.theta(n));
            if !(eps > T::zero() && theta > T::zero() && theta < T::one()) {
                return Err(Error::InvalidParameter(format!("schedule out of range at k = {n}")));
            }
            let fin = FinNormSpec::new(base, n.max(1), theta)?;
            levels.push(Level {
                coeff: (T::one() + eps) * (T::one() + theta),
                bump: BumpSpec::new(n, theta),
                fin: FinNormSpec { n, ..fin },
            });
        }
        Ok(Self { schedule, base, max_support, levels })
    }

    /// Default schedule on `ℓ_1` with the default support cap.
    pub fn l1() -> Self {
        Self::new(SmoothSchedule::default(), BaseNorm::L1, DEFAULT_MAX_SUPPORT).expect("defaults are valid")
    }

    pub fn schedule(&self) -> &SmoothSchedule<T> {
        &self.schedule
    }

    pub fn base(&self) -> BaseNorm {
        self.base
    }

    pub fn max_support(&self) -> usize {
        self.max_support
    }

    pub fn bump(&self, n: usize) -> Option<&BumpSpec<T>> {
        self.levels.get(n).map(|l| &l.bump)
    }

    pub fn fin_spec(&self, n: usize) -> Option<&FinNormSpec> {
        self.levels.get(n).map(|l| &l.fin)
    }

    pub fn f_norm(&self, x: &SparseVec<T>) -> T {
        f_norm(x, &self.schedule, self.base)
    }

    pub fn f_norm_brute(&self, x: &SparseVec<T>) -> Result<T> {
        f_norm_brute(x, &self.schedule, self.base, self.max_support)
    }

    /// `(1+θ₁)/(1−θ₁)`.
    pub fn sandwich_constant(&self) -> T {
        self.schedule.sandwich_constant()
    }

    /// Bump arguments `(1+ε_|A|)(1+θ_|A|)·‖P_A x‖_(s),|A|` for every nonempty `A ⊆ supp x`.
    fn terms(&self, x: &SparseVec<T>) -> Result<Vec<Term<T>>> {
        let n = x.support_size();
        check_support(n, self.max_support)?;
        let mags = x.magnitudes_desc();
        let mut buf = Vec::with_capacity(n);
        let mut terms = Vec::with_capacity((1usize << n).saturating_sub(1));
        for mask in 1usize..(1 << n) {
            buf.clear();
            buf.extend(mags.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &m)| m));
            let level = buf.len();
            let lv = &self.levels[level];
            terms.push(Term { level, weight: lv.coeff * lv.fin.of_magnitudes(&buf) });
        }
        Ok(terms)
    }

    fn ray_eval(&self, terms: &[Term<T>], s: T, cutoff: Option<T>) -> RayEval<T> {
        let mut value = T::zero();
        let mut slope = T::zero();
        let mut err = T::zero();
        let integral_err = T::lit(INTEGRAL_REL_ERR);
        for t in terms {
            let bump = &self.levels[t.level].bump;
            let arg = s * t.weight;
            if arg <= bump.activation {
                continue;
            }
            let v = bump.eval(arg);
            let dv = bump.derivative(arg) * arg;
            value = value + v;
            slope = slope + dv;
            err = err + integral_err * v + rounding::<T>(2 * t.level + 12) * dv;
            if let Some(c) = cutoff {
                if value > c {
                    return RayEval { value, error: T::zero(), slope };
                }
            }
        }
        err = err + rounding::<T>(terms.len()) * value;
        RayEval { value, error: err, slope }
    }

    /// `Ψ(x)`, summed over nonempty subsets of `supp x`.
    pub fn psi(&self, x: &SparseVec<T>) -> Result<T> {
        let terms = self.terms(x)?;
        Ok(self.ray_eval(&terms, T::one(), None).value)
    }

    /// `s ↦ Ψ(s·x)`, with the subset norms computed once.
    pub fn psi_ray(&self, x: &SparseVec<T>) -> Result<impl Fn(T) -> T + '_> {
        let terms = self.terms(x)?;
        Ok(move |s: T| self.ray_eval(&terms, s, None).value)
    }

    /// The gauge `|||x|||` of `{Ψ ≤ 1 − θ₁}`.
    pub fn norm(&self, x: &SparseVec<T>, tol: T) -> Result<GaugeResult<T>> {
        let opts = SolverOptions::new(tol)?;
        if x.is_zero() {
            return Ok(GaugeResult::zero());
        }
        let terms = self.terms(x)?;
        let f = self.f_norm(x);
        let theta1 = self.schedule.theta(1);
        let target = T::one() - theta1;
        let lo = target / ((T::one() + theta1) * f);
        let hi = f.recip();
        solve_ray(|s, cutoff| Ok(self.ray_eval(&terms, s, cutoff)), target, lo, hi, opts)
    }

    /// Checks that every bump term indexed by `A = A₀ ∪ E`, with `A₀ ⊆ supp x` and
    /// `∅ ≠ E ⊆ extras`, `|E| ≤ 3`, lies in its dead zone.
    ///
    /// Requires `‖x‖_f ≤ 1` and `extras ∩ supp x = ∅`.
    pub fn locality_check(&self, x: &SparseVec<T>, extras: &[Label]) -> Result<LocalityReport<T>> {
        let f = self.f_norm(x);
        if f > T::one() + rounding::<T>(8) {
            return Err(Error::Precondition(format!("‖x‖_f = {f} exceeds 1")));
        }
        let supp = x.support();
        let mut seen = std::collections::BTreeSet::new();
        for l in extras {
            if supp.contains(l) || !seen.insert(*l) {
                return Err(Error::Precondition(format!("extra label {l} is not fresh")));
            }
        }
        let n = supp.len();
        check_support(n, self.max_support)?;
        let mags = x.magnitudes_desc();
        let max_extra = extras.len().min(LOCALITY_EXTRAS);
        let mut holds = true;
        let mut sets_checked = 0usize;
        let mut min_margin = T::infinity();
        let mut buf = Vec::with_capacity(n);
        for mask in 0usize..(1 << n) {
            buf.clear();
            buf.extend(mags.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &m)| m));
            for e in 1..=max_extra {
                let level = &self.levels[buf.len() + e];
                let arg = level.coeff * level.fin.of_magnitudes(&buf);
                if level.bump.eval(arg) != T::zero() {
                    holds = false;
                }
                min_margin = min_margin.min(level.bump.activation - arg);
                sets_checked += binomial(extras.len(), e);
            }
        }
        Ok(LocalityReport { holds, sets_checked, min_margin })
    }
}

/// `Ψ(x)` for a one-off schedule and base, with the default support cap.
pub fn psi_smooth<T: Real>(x: &SparseVec<T>, schedule: &SmoothSchedule<T>, base: BaseNorm) -> Result<T> {
    SmoothNorm::new(schedule.clone(), base, DEFAULT_MAX_SUPPORT)?.psi(x)
}

/// `|||x|||` for a one-off schedule and base, with the default support cap.
pub fn smooth_norm<T: Real>(
    x: &SparseVec<T>,
    schedule: &SmoothSchedule<T>,
    base: BaseNorm,
    tol: T,
) -> Result<GaugeResult<T>> {
    SmoothNorm::new(schedule.clone(), base, DEFAULT_MAX_SUPPORT)?.norm(x, tol)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(values: &[f64]) -> SparseVec<f64> {
        SparseVec::from_dense(values).unwrap()
    }

    #[test]
    fn q_select_examples() {
        assert_eq!(q_select(5, 0.1, BaseNorm::Even(2)).unwrap(), 2);
        assert_eq!(q_select(1, 0.01, BaseNorm::L1).unwrap(), 2);
        // ceil-to-even of 2·ln 2 / ln(37/36) ≈ 50.6
        assert_eq!(q_select(2, 1.0 / 36.0, BaseNorm::L1).unwrap(), 52);
        assert!(q_select(0, 0.1, BaseNorm::L1).is_err());
        assert!(q_select(3, 0.0, BaseNorm::L1).is_err());
    }

    #[test]
    fn q_select_is_minimal() {
        for n in 2..=16usize {
            let theta = 1.0 / (4.0 * ((n + 1) * (n + 1)) as f64);
            let q = q_select(n, theta, BaseNorm::L1).unwrap();
            assert_eq!(q % 2, 0);
            assert!(2f64.powf(n as f64 / q as f64) <= 1.0 + theta);
            assert!(2f64.powf(n as f64 / (q - 2) as f64) > 1.0 + theta);
        }
    }

    #[test]
    fn smooth_fin_norm_examples() {
        let one = FinNormSpec::new(BaseNorm::L1, 1, 0.25).unwrap();
        assert_eq!(smooth_fin_norm(&SparseVec::basis(4, -2.5).unwrap(), &one).unwrap(), 2.5);
        let e2 = FinNormSpec::new(BaseNorm::Even(2), 3, 0.1).unwrap();
        assert!((smooth_fin_norm(&sv(&[3.0, 4.0]), &e2).unwrap() - 5.0).abs() < 1e-15);
        let spec = FinNormSpec { base: BaseNorm::L1, n: 2, q: 52 };
        let v = smooth_fin_norm(&sv(&[1.0, 1.0]), &spec).unwrap();
        // Direct four-term evaluation: (¼(2^52 + 0 + 0 + 2^52))^{1/52}.
        let direct = (0.25f64 * (2f64.powi(52) * 2.0)).powf(1.0 / 52.0);
        assert!((v - direct).abs() < 1e-14);
        assert!((v - 2.0 * 2f64.powf(-1.0 / 52.0)).abs() < 1e-14);
        assert!(smooth_fin_norm(&sv(&[1.0, 1.0, 1.0]), &spec).is_err());
    }

    #[test]
    fn sign_average_matches_full_enumeration() {
        let v = [0.3, -1.2, 0.05, 2.0];
        let q = 12;
        let n = v.len();
        let total: f64 = (0..1usize << n)
            .map(|s| {
                let dot: f64 = (0..n).map(|i| if s >> i & 1 == 0 { v[i] } else { -v[i] }).sum();
                dot.powi(q)
            })
            .sum();
        let direct = (total / (1 << n) as f64).powf(1.0 / q as f64);
        let mags: Vec<f64> = v.iter().map(|x| x.abs()).collect();
        assert!((sign_average_norm(&mags, q as u32) - direct).abs() < 1e-14);
    }

    #[test]
    fn worst_case_sandwich_is_within_theta() {
        for n in 1..=12usize {
            let theta = 1.0 / (4.0 * ((n + 1) * (n + 1)) as f64);
            let spec = FinNormSpec::new(BaseNorm::L1, n, theta).unwrap();
            let ones = vec![1.0; n];
            let ratio = n as f64 / spec.of_magnitudes(&ones);
            assert!(ratio >= 1.0 && ratio <= 1.0 + theta, "n = {n}: {ratio}");
        }
    }

    #[test]
    fn f_norm_examples() {
        let s = SmoothSchedule::<f64>::default();
        let ea = SparseVec::basis(3, 1.0).unwrap();
        assert_eq!(f_norm(&ea, &s, BaseNorm::L1), 1.5);
        let eab = SparseVec::from_entries([(3, 1.0), (8, 1.0)]).unwrap();
        assert!((f_norm(&eab, &s, BaseNorm::L1) - 8.0 / 3.0).abs() < 1e-15);
        assert_eq!(f_norm(&SparseVec::zero(), &s, BaseNorm::L1), 0.0);
        assert_eq!(f_norm_brute(&eab, &s, BaseNorm::L1, 16).unwrap(), f_norm(&eab, &s, BaseNorm::L1));
    }

    #[test]
    fn support_cap_is_enforced() {
        let s = SmoothSchedule::<f64>::default();
        let x = sv(&[1.0; 5]);
        assert_eq!(f_norm_brute(&x, &s, BaseNorm::L1, 4), Err(Error::SupportTooLarge { size: 5, cap: 4 }));
        let norm = SmoothNorm::new(s, BaseNorm::L1, 4).unwrap();
        assert!(matches!(norm.norm(&x, 1e-10), Err(Error::SupportTooLarge { .. })));
        assert!(SmoothNorm::<f64>::new(SmoothSchedule::default(), BaseNorm::L1, 40).is_err());
    }

    #[test]
    fn psi_examples() {
        let norm = SmoothNorm::<f64>::l1();
        assert_eq!(norm.psi(&SparseVec::zero()).unwrap(), 0.0);
        // f_norm(x) ≤ (1−θ₁)/(1+θ₁) forces Ψ(x) = 0.
        let x = sv(&[0.2, -0.1, 0.05]);
        let x = x.scaled((15.0 / 17.0) / norm.f_norm(&x));
        assert_eq!(norm.psi(&x).unwrap(), 0.0);
        // Single active term for s·e_a.
        let b1 = *norm.bump(1).unwrap();
        for s in [0.5, 0.63, 0.7] {
            let x = SparseVec::basis(2, s).unwrap();
            let expect = b1.eval(1.5 * (17.0 / 16.0) * s);
            assert_eq!(norm.psi(&x).unwrap(), expect);
        }
    }

    #[test]
    fn smooth_norm_on_a_basis_vector() {
        let norm = SmoothNorm::<f64>::l1();
        let r = norm.norm(&SparseVec::basis(1, 1.0).unwrap(), 1e-12).unwrap();
        assert!(r.value > 1.5 && r.value < 1.6, "{r:?}");
        // Independent root of ρ₁(u) = 15/16 by bisection on u ∈ (255/256, 1).
        let b1 = *norm.bump(1).unwrap();
        let (mut lo, mut hi) = (255.0 / 256.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if b1.eval(mid) > 15.0 / 16.0 {
                hi = mid
            } else {
                lo = mid
            }
        }
        let expect = 1.5 * (17.0 / 16.0) / lo;
        assert!((r.value - expect).abs() <= 1e-11 * expect, "{} vs {expect}", r.value);
        assert!(r.bracket.0 <= expect && expect <= r.bracket.1);
        assert!(r.value > 51.0 / 32.0 && r.value < 1.6);
    }

    #[test]
    fn smooth_norm_sandwich_small_cases() {
        let norm = SmoothNorm::<f64>::l1();
        for v in [vec![1.0, 1.0], vec![3.0, -0.5, 0.25], vec![0.1, 0.2, 0.3, 0.4, -0.5]] {
            let x = sv(&v);
            let f = norm.f_norm(&x);
            let r = norm.norm(&x, 1e-10).unwrap();
            assert!(r.value >= f * (1.0 - 1e-12), "{v:?}");
            assert!(r.value <= f * 17.0 / 15.0 * (1.0 + 1e-12), "{v:?}");
        }
        assert_eq!(norm.norm(&SparseVec::zero(), 1e-10).unwrap(), GaugeResult::zero());
    }

    #[test]
    fn even_base_norm_works() {
        let norm = SmoothNorm::<f64>::new(SmoothSchedule::default(), BaseNorm::Even(2), 8).unwrap();
        let x = sv(&[3.0, 4.0]);
        let f = norm.f_norm(&x);
        assert!((f - 5.0 * (1.0 + 1.0 / 3.0)).abs() < 1e-14);
        let r = norm.norm(&x, 1e-10).unwrap();
        assert!(r.value >= f && r.value <= f * 17.0 / 15.0);
    }

    #[test]
    fn locality_examples() {
        let norm = SmoothNorm::<f64>::l1();
        let ea = SparseVec::basis(1, 1.0).unwrap();
        let x = ea.scaled(1.0 / norm.f_norm(&ea));
        let r = norm.locality_check(&x, &[2]).unwrap();
        assert!(r.holds && r.min_margin > 0.0);
        assert_eq!(r.sets_checked, 2);
        assert!(norm.locality_check(&SparseVec::zero(), &[5, 6, 7, 8]).unwrap().holds);
        assert!(norm.locality_check(&ea, &[2]).is_err());
        assert!(norm.locality_check(&x, &[1]).is_err());
    }
}
