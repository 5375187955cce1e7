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

//! Certified enclosures of `log2` over dyadic rationals.
//!
//! A value is carried as a big-integer mantissa `m` at a fixed scale, meaning
//! `m / 2^prec`. Lower bounds are produced by a track that only ever rounds
//! down, upper bounds by a track that only ever rounds up, so the enclosure
//! holds exactly with no floating-point in the loop.
//!
//! The fractional bits of `log2(y)` for `y` in `[1, 2)` are extracted by
//! repeated squaring: if `y^2 >= 2` the next bit is 1 and `y^2 / 2` is kept,
//! otherwise the bit is 0 and `y^2` is kept. The identity
//! `log2(y) = sum(b_j 2^-j) + 2^-K log2(r_K)` holds for whatever bits a
//! track decides, as long as the true remainder `r` is halved exactly when the
//! track halves. With `1 <= lower_track <= r` and `r <= upper_track <= 2`,
//! the remainder term is in `[0, 2^-K]`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Guard bits carried beyond the requested output precision. The squaring
/// loop roughly doubles the relative rounding error each step, which costs
/// about one bit of the guard per output bit of depth; the final remainder
/// term absorbs that.
const GUARD: u32 = 32;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Round {
    Down,
    Up,
}

fn shift_round(m: &BigInt, shift: i64, round: Round) -> BigInt {
    if shift >= 0 {
        m << shift as usize
    } else {
        let d = BigInt::one() << (-shift) as usize;
        match round {
            Round::Down => m.div_floor(&d),
            Round::Up => m.div_ceil(&d),
        }
    }
}

fn bit_length(m: &BigInt) -> i64 {
    m.bits() as i64
}

/// Bound on `log2(m / 2^scale)` expressed at output scale `prec`
/// (i.e. the returned `r` satisfies `r / 2^prec <= log2(..)` for `Round::Down`,
/// `>=` for `Round::Up`). Requires `m / 2^scale >= 1`.
fn log2_bound(m: &BigInt, scale: u32, prec: u32, round: Round) -> BigInt {
    assert!(m.sign() == Sign::Plus, "log2 of a non-positive value");
    let int_part = bit_length(m) - 1 - scale as i64;
    assert!(int_part >= 0, "log2 enclosure requires an argument >= 1");
    let work = prec + GUARD;
    let one = BigInt::one() << work as usize;
    let two = &one << 1usize;

    // y = m / 2^(scale + int_part), in [1, 2), at scale `work`
    let mut y = shift_round(m, work as i64 - scale as i64 - int_part, round);
    let mut acc = BigInt::from(int_part) << prec as usize;
    for j in 1..=prec {
        let sq = &y * &y;
        y = shift_round(&sq, -(work as i64), round);
        if y >= two {
            acc += BigInt::one() << (prec - j) as usize;
            y = shift_round(&y, -1, round);
        }
    }
    match round {
        Round::Down => acc,
        Round::Up => acc + 1,
    }
}

/// Lower bound on `log2(m / 2^scale)` at output scale `prec`.
pub(crate) fn log2_lower(m: &BigInt, scale: u32, prec: u32) -> BigInt {
    log2_bound(m, scale, prec, Round::Down)
}

/// Upper bound on `log2(m / 2^scale)` at output scale `prec`.
pub(crate) fn log2_upper(m: &BigInt, scale: u32, prec: u32) -> BigInt {
    log2_bound(m, scale, prec, Round::Up)
}

/// Enclosure `[lo, hi]` (scale `2^prec`) of `log2 n - 2 log2 log2 n`, `n >= 2`.
pub(crate) fn log_gap_enclosure(n: u64, prec: u32) -> (BigInt, BigInt) {
    debug_assert!(n >= 2);
    let nn = BigInt::from(n);
    let l_lo = log2_lower(&nn, 0, prec);
    let l_hi = log2_upper(&nn, 0, prec);
    // log2 n >= 1 for n >= 2, and l_lo is exact at n = 2
    let ll_lo = log2_lower(
        &l_lo.clone().max(BigInt::one() << prec as usize),
        prec,
        prec,
    );
    let ll_hi = log2_upper(&l_hi, prec, prec);
    let lo = &l_lo - (&ll_hi << 1usize);
    let hi = &l_hi - (&ll_lo << 1usize);
    (lo, hi)
}

/// `Some(a - 2b)` when `n = 2^a` with `a = 2^b`, the only inputs for which
/// `log2 n - 2 log2 log2 n` is rational (hence an integer).
pub(crate) fn exact_log_gap(n: u64) -> Option<i64> {
    if n < 2 || !n.is_power_of_two() {
        return None;
    }
    let a = n.trailing_zeros() as u64;
    if !a.is_power_of_two() {
        return None;
    }
    let b = a.trailing_zeros() as i64;
    Some(a as i64 - 2 * b)
}

pub(crate) const START_PRECISION: u32 = 64;
const MAX_PRECISION: u32 = 1 << 16;

/// Decides `log2 n - 2 log2 log2 n > t` exactly.
pub(crate) fn log_gap_exceeds(n: u64, t: i64) -> bool {
    if let Some(v) = exact_log_gap(n) {
        return v > t;
    }
    let mut prec = START_PRECISION;
    loop {
        let (lo, hi) = log_gap_enclosure(n, prec);
        let scaled = BigInt::from(t) << prec as usize;
        if lo > scaled {
            return true;
        }
        if hi <= scaled {
            return false;
        }
        // the gap is transcendental away from the exact points, so this ends
        prec *= 2;
        assert!(
            prec <= MAX_PRECISION,
            "log-gap comparison did not separate at n = {n}"
        );
    }
}

/// `ceil(log2 n - 2 log2 log2 n)` for `n >= 2`, evaluated per input from the
/// enclosure with escalating precision.
pub(crate) fn ceil_log_gap(n: u64) -> i64 {
    if let Some(v) = exact_log_gap(n) {
        return v;
    }
    let mut prec = START_PRECISION;
    loop {
        let (lo, hi) = log_gap_enclosure(n, prec);
        let d = BigInt::one() << prec as usize;
        let c_lo = lo.div_ceil(&d);
        let c_hi = hi.div_ceil(&d);
        if c_lo == c_hi {
            return i64::try_from(c_lo).expect("log gap fits in i64");
        }
        prec *= 2;
        assert!(
            prec <= MAX_PRECISION,
            "log-gap ceiling did not separate at n = {n}"
        );
    }
}

/// Enclosure of `log2 n` as `f64` endpoints, rounded outward. Presentation
/// helper; never used for decisions.
pub(crate) fn log2_f64_bounds(n: u64) -> (f64, f64) {
    let nn = BigInt::from(n);
    let prec = 80u32;
    let lo = log2_lower(&nn, 0, prec);
    let hi = log2_upper(&nn, 0, prec);
    let scale = 2f64.powi(prec as i32);
    (to_f64(&lo) / scale, to_f64(&hi) / scale)
}

fn to_f64(m: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    if m.is_zero() {
        0.0
    } else {
        m.to_f64().unwrap_or(f64::NAN)
    }
}
