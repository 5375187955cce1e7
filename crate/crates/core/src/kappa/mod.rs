// Copyright 2026 The zcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The prefix-width function `kappa`, its jump set, the weighted jump sum
//! `sigma`, and the closed-form diameter bounds built from them.
//!
//! `kappa(n) = max(1, ceil(log2 n - 2 log2 log2 n))` for `n >= 2` and
//! `kappa(1) = 0`. The ceiling is decided exactly: `log2 n - 2 log2 log2 n`
//! is an integer only when `n = 2^(2^b)`, which is detected with integer
//! tests; everywhere else a certified enclosure is refined until it no longer
//! straddles an integer.
//!
//! The gap `log2 n - 2 log2 log2 n` decreases on `2..=7` (where it never
//! exceeds 1) and increases strictly from `n = 8` on, so `kappa` is
//! nondecreasing and is fully described by its jump points
//! `kappa_inverse(i) = min { j : kappa(j) = i }`. Those are found once by
//! binary search and cached.

mod log2;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `jump_points()[i] = kappa_inverse(i)`: 1, 2, 80, ...
fn jump_points() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = vec![1u64, 2];
        // first n with gap > i - 1 is where kappa reaches i (i >= 2)
        for i in 2i64.. {
            let t = i - 1;
            if !log2::log_gap_exceeds(u64::MAX, t) {
                break;
            }
            let (mut lo, mut hi) = (8u64, u64::MAX);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                if log2::log_gap_exceeds(mid, t) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            table.push(lo);
        }
        table
    })
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Contract("dimension must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `kappa(n)`; errors on `n = 0`.
pub fn kappa(n: u64) -> Result<u32> {
    check_positive(n)?;
    Ok(kappa_unchecked(n))
}

pub(crate) fn kappa_unchecked(n: u64) -> u32 {
    debug_assert!(n >= 1);
    // jump_points()[0] == 1, so the count is kappa + 1
    (jump_points().partition_point(|&j| j <= n) - 1) as u32
}

/// `kappa(n)` evaluated from the defining expression for this single `n`,
/// without the cached jump table.
pub fn kappa_direct(n: u64) -> Result<u32> {
    check_positive(n)?;
    if n == 1 {
        return Ok(0);
    }
    Ok(log2::ceil_log_gap(n).max(1) as u32)
}

/// `min { j : kappa(j) = i }`, or `None` past the range of `u64`.
pub fn kappa_inverse(i: u32) -> Option<u64> {
    jump_points().get(i as usize).copied()
}

/// `S(n) = { 2 <= j <= n : kappa(j) = kappa(j-1) + 1 }`, ascending.
pub fn jump_set(n: u64) -> Result<Vec<u64>> {
    check_positive(n)?;
    Ok(jump_points()[1..]
        .iter()
        .copied()
        .take_while(|&j| j <= n)
        .collect())
}

/// `sigma_n = sum over j in S(n) of j / kappa(j)^2`, exactly.
pub fn sigma(n: u64) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for (idx, j) in jump_set(n)?.into_iter().enumerate() {
        let k = BigInt::from(idx as u64 + 1);
        acc += BigRational::new(BigInt::from(j), &k * &k);
    }
    Ok(acc)
}

/// `ceil(n / (kappa(n) + 1))`, the antipodal lower bound on the diameter.
pub fn lower_bound(n: u64) -> Result<u64> {
    let k = kappa(n)? as u64;
    Ok(n.div_ceil(k + 1))
}

/// `n / (kappa(n) + 1) + sigma_n + 2^kappa(n) + kappa(n)`, exactly.
pub fn thm1_bound_exact(n: u64) -> Result<BigRational> {
    let k = kappa(n)?;
    robust_walk_bound_exact(n, k)
}

pub fn thm1_bound(n: u64) -> Result<f64> {
    Ok(to_f64(&thm1_bound_exact(n)?))
}

/// Length bound for a `k`-robust walk in `H_n`:
/// `n / (kappa(n) + 1) + sigma_n + 2^k + k`.
pub fn robust_walk_bound_exact(n: u64, k: u32) -> Result<BigRational> {
    let kn = kappa(n)?;
    let mut b = BigRational::new(BigInt::from(n), BigInt::from(kn + 1));
    b += sigma(n)?;
    b += BigRational::from_integer(pow2(k) + BigInt::from(k));
    Ok(b)
}

/// `n / (k + 1) + 2^k`, the diameter bound for `Z_{n,k}`.
pub fn zk_bound_exact(n: u64, k: u32) -> Result<BigRational> {
    check_positive(n)?;
    if k == 0 {
        return Err(Error::Contract("k must be at least 1".into()));
    }
    Ok(BigRational::new(BigInt::from(n), BigInt::from(k + 1)) + BigRational::from_integer(pow2(k)))
}

pub fn zk_bound(n: u64, k: u32) -> Result<f64> {
    Ok(to_f64(&zk_bound_exact(n, k)?))
}

/// Closed-form bound for `Z*_n = Z_{n, kappa(n)}`:
/// `(1 + (2 log2 log2 n + 1) / (log2 n - 2 log2 log2 n - 1) + 1 / log2 n) * n / log2 n`.
///
/// `None` when the middle denominator is not positive, which happens exactly
/// when `kappa(n) < 2` (`n < 80`).
pub fn zstar_bound(n: u64) -> Result<Option<f64>> {
    if kappa(n)? < 2 {
        return Ok(None);
    }
    let (lo, hi) = log2::log2_f64_bounds(n);
    let lg = 0.5 * (lo + hi);
    let llg = lg.log2();
    let denom = lg - 2.0 * llg - 1.0;
    Ok(Some(
        (1.0 + (2.0 * llg + 1.0) / denom + 1.0 / lg) * n as f64 / lg,
    ))
}

fn pow2(k: u32) -> BigInt {
    BigInt::from(1u8) << k as usize
}

/// Nearest `f64` of an exact rational.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Text form of an exact rational: `"22"` or `"9/2"`.
pub fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One line of the bounds table.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub n: u64,
    pub kappa: u32,
    pub sigma: BigRational,
    pub lower: u64,
    pub thm1: BigRational,
    /// `(k, n/(k+1) + 2^k)` for each requested `k`.
    pub zk: Vec<(u32, BigRational)>,
    pub zstar: Option<f64>,
}

impl BoundsRow {
    pub fn compute(n: u64, ks: &[u32]) -> Result<BoundsRow> {
        Ok(BoundsRow {
            n,
            kappa: kappa(n)?,
            sigma: sigma(n)?,
            lower: lower_bound(n)?,
            thm1: thm1_bound_exact(n)?,
            zk: ks
                .iter()
                .map(|&k| zk_bound_exact(n, k).map(|b| (k, b)))
                .collect::<Result<_>>()?,
            zstar: zstar_bound(n)?,
        })
    }
}
