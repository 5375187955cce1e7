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

//! `k`-robust walks: walks that, for every `z` in `{0,1}^k`, pass through a
//! vertex ending in `z`.
//!
//! Recursion on the dimension `n >= k`:
//!
//! * `n = k`: any covering walk.
//! * `x`, `y` share their first bit: recurse in that half and prefix the bit.
//! * Otherwise let `w` be the width of the top-level matching (the family's
//!   permutation at length `n - 1`). When `1 <= w <= k` and `n - 1 - w >= k`,
//!   write `x = t a x'` and `y = t' b y'` with `|a| = |b| = w`, build a
//!   `k`-robust walk `W` from `x'` to `y'`, and split it at the first vertex
//!   `v` ending in `a XOR b`. Then `t a v` and `t' b v` are matched, and the
//!   result is `t a W[x'..v]` followed by `t' b W[v..y']`. Every vertex keeps
//!   its last `k` bits, so robustness carries over.
//! * Otherwise step across the level-1 edge first and recurse in the other
//!   half.
//!
//! The top-level matching of `H_n` acts on strings of length `n - 1`, so its
//! width is `kappa(n - 1)`, not `kappa(n)`; using the former keeps the
//! crossing step an actual edge.

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::kappa;
use crate::topology::{neighbor_unchecked, CubeFamily};

use super::covering::cover_index;
use super::Walk;

/// Largest robustness parameter accepted; the walk has at least `2^k - 1`
/// edges and the certificate has `2^k` entries.
pub const MAX_ROBUST_K: usize = 20;

/// For each `z` in `{0,1}^k`, the index of the first walk vertex ending in
/// `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessCertificate {
    k: usize,
    // indexed by the integer value of z
    witness: Vec<usize>,
}

fn suffix_index(v: &BitString, k: usize) -> u64 {
    let n = v.len();
    v.range(n - k, n).to_index().expect("k <= MAX_ROBUST_K")
}

impl RobustnessCertificate {
    /// Scans `walk`; `None` when some suffix is missing or `k` is out of
    /// range.
    pub fn from_walk(walk: &Walk, k: usize) -> Option<Self> {
        if k > walk.dim() || k > MAX_ROBUST_K {
            return None;
        }
        let mut witness = vec![usize::MAX; 1 << k];
        let mut missing = witness.len();
        for (idx, v) in walk.vertices().iter().enumerate() {
            let slot = &mut witness[suffix_index(v, k) as usize];
            if *slot == usize::MAX {
                *slot = idx;
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        (missing == 0).then_some(RobustnessCertificate { k, witness })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn witness(&self, z: &BitString) -> Option<usize> {
        if z.len() != self.k {
            return None;
        }
        self.witness.get(z.to_index()? as usize).copied()
    }

    /// `(z, index)` pairs in ascending `z`.
    pub fn entries(&self) -> impl Iterator<Item = (BitString, usize)> + '_ {
        self.witness.iter().enumerate().map(|(z, &idx)| {
            (
                BitString::from_index(z as u64, self.k).expect("in range"),
                idx,
            )
        })
    }

    /// Every cited vertex exists and ends in its `z`.
    pub fn validate(&self, walk: &Walk) -> bool {
        self.k <= walk.dim()
            && self.witness.len() == 1 << self.k
            && self.witness.iter().enumerate().all(|(z, &idx)| {
                walk.vertices()
                    .get(idx)
                    .is_some_and(|v| suffix_index(v, self.k) == z as u64)
            })
    }
}

fn prefixed(prefix: &BitString, walk: &[BitString]) -> Vec<BitString> {
    walk.iter().map(|v| prefix.concat(v)).collect()
}

fn robust_walk(f: CubeFamily, k: usize, x: &BitString, y: &BitString) -> Vec<BitString> {
    let n = x.len();
    if n == k {
        let (xi, yi) = (x.to_index().unwrap(), y.to_index().unwrap());
        return cover_index(f, n, xi, yi)
            .into_iter()
            .map(|v| BitString::from_index(v, n).expect("in range"))
            .collect();
    }
    // strip the shared leading bits in one go, keeping at least k
    let shared = x.first_difference(y).map_or(n, |i| i - 1).min(n - k);
    if shared > 0 {
        let head = x.range(0, shared);
        let inner = robust_walk(f, k, &x.range(shared, n), &y.range(shared, n));
        return prefixed(&head, &inner);
    }
    let w = f.matching_width(n - 1);
    if w >= 1 && w <= k && n - 1 - w >= k {
        let (pa, pb) = (x.range(0, w + 1), y.range(0, w + 1));
        let c = pa
            .range(1, w + 1)
            .xor(&pb.range(1, w + 1))
            .expect("equal widths");
        let inner = robust_walk(f, k, &x.range(w + 1, n), &y.range(w + 1, n));
        let split = inner
            .iter()
            .position(|v| v.ends_with(&c))
            .expect("a k-robust walk is w-robust for w <= k");
        let mut out = prefixed(&pa, &inner[..=split]);
        out.extend(prefixed(&pb, &inner[split..]));
        out
    } else {
        let across = neighbor_unchecked(f, x, 1);
        let inner = robust_walk(f, k, &across.range(1, n), &y.range(1, n));
        let mut out = vec![x.clone()];
        out.extend(prefixed(&y.range(0, 1), &inner));
        out
    }
}

/// A `k`-robust walk from `x` to `y` (possibly equal) with its certificate.
///
/// Family `H` requires `kappa(n) <= k <= n`; the other families accept
/// `1 <= k <= n`. The walk stays within
/// [`kappa::robust_walk_bound_exact`] for `H`, and within
/// [`kappa::zk_bound_exact`] for `Z(k)` when called with the family's own `k`.
pub fn robust_route(
    f: CubeFamily,
    k: usize,
    x: &BitString,
    y: &BitString,
) -> Result<(Walk, RobustnessCertificate)> {
    let f = f.validate()?;
    let n = super::check_pair(x, y)?;
    let min_k = match f {
        CubeFamily::H => (kappa::kappa(n as u64)? as usize).max(1),
        _ => 1,
    };
    if k < min_k || k > n {
        return Err(Error::Contract(format!(
            "robustness k = {k} out of range {min_k}..={n} for {f} at n = {n}"
        )));
    }
    if k > MAX_ROBUST_K {
        return Err(Error::CapExceeded {
            what: "robust walk",
            n: k,
            cap: MAX_ROBUST_K,
            hint: " (limit applies to k)",
        });
    }
    let walk = Walk::new(f, robust_walk(f, k, x, y))?;
    let cert = RobustnessCertificate::from_walk(&walk, k)
        .expect("the construction visits every suffix class");
    Ok((walk, cert))
}
