// SPDX-License-Identifier: Apache-2.0

//! Brute-force root brackets from a uniform grid.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Returns adjacent grid points `(s_{k−1}, s_k)` of `lo + k·step` with
/// `h(s_{k−1}) ≤ target < h(s_k)`, for nondecreasing `h`.
pub fn scan_oracle<T, H>(mut h: H, target: T, lo: T, hi: T, step: T) -> Result<(T, T)>
where
    T: Real,
    H: FnMut(T) -> Result<T>,
{
    if !(step > T::zero() && lo < hi) {
        return Err(Error::InvalidParameter(format!("bad grid [{lo}, {hi}] step {step}")));
    }
    let n = ((hi - lo) / step).ceil().to_usize().unwrap_or(usize::MAX);
    if h(lo)? > target {
        return Err(Error::Precondition(format!("target {target} lies below the scanned range")));
    }
    let mut prev = lo;
    for k in 1..=n {
        let s = lo + T::from_count(k) * step;
        if h(s)? > target {
            return Ok((prev, s));
        }
        prev = s;
    }
    Err(Error::Precondition(format!("target {target} lies above the scanned range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_four() {
        let (a, b) = scan_oracle(|s: f64| Ok(s * s), 4.0, 0.0, 3.0, 1e-4).unwrap();
        assert!(a <= 2.0 && 2.0 < b && b - a < 1.1e-4);
    }

    #[test]
    fn out_of_range_targets() {
        assert!(scan_oracle(|s: f64| Ok(s), 5.0, 0.0, 3.0, 0.1).is_err());
        assert!(scan_oracle(|s: f64| Ok(s), -1.0, 0.0, 3.0, 0.1).is_err());
        assert!(scan_oracle(|s: f64| Ok(s), 1.0, 0.0, 3.0, 0.0).is_err());
    }
}
