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

//! Walks that visit every vertex of a small cube.

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::topology::CubeFamily;

use super::hamiltonian::{ham_path_index, MAX_HAMILTONIAN_DIM};
use super::Walk;

/// Hamiltonian path of `Q_n` between vertices of opposite parity, by the
/// reflected recursion on the top bit.
pub(crate) fn q_ham_index(n: usize, x: u64, y: u64) -> Vec<u64> {
    debug_assert!((x ^ y).count_ones() % 2 == 1);
    if n == 1 {
        return vec![x, y];
    }
    let half = 1u64 << (n - 1);
    let mask = half - 1;
    let (tx, xs) = (x & half, x & mask);
    let (ty, ys) = (y & half, y & mask);
    let mut out = Vec::with_capacity(1 << n);
    if tx != ty {
        // xs and ys share parity, so w = xs ^ 1 has the other one
        let w = xs ^ 1;
        out.extend(q_ham_index(n - 1, xs, w).into_iter().map(|v| tx | v));
        out.extend(q_ham_index(n - 1, w, ys).into_iter().map(|v| ty | v));
    } else {
        let p = q_ham_index(n - 1, xs, ys);
        let z = p[1];
        out.push(x);
        out.extend(
            q_ham_index(n - 1, xs, z)
                .into_iter()
                .map(|v| (tx ^ half) | v),
        );
        out.extend(p[1..].iter().map(|&v| tx | v));
    }
    out
}

/// Covering walk of `Q_n`: a Hamiltonian path for opposite parity; otherwise
/// a Hamiltonian path to the last-bit neighbor of `y` followed by the step to
/// `y` (length `2^n`).
pub(crate) fn q_cover_index(n: usize, x: u64, y: u64) -> Vec<u64> {
    if (x ^ y).count_ones() % 2 == 1 {
        return q_ham_index(n, x, y);
    }
    let detour = y ^ 1;
    let mut out = q_ham_index(n, x, detour);
    out.push(y);
    out
}

/// Covering walk in index space for the `n`-dimensional member of `f`.
pub(crate) fn cover_index(f: CubeFamily, n: usize, x: u64, y: u64) -> Vec<u64> {
    if f.is_hypercube_at(n) {
        return q_cover_index(n, x, y);
    }
    if f == CubeFamily::H {
        // n >= 3 here
        if x != y {
            return ham_path_index(n, x, y);
        }
        let mut out = ham_path_index(n, x, x ^ 1);
        out.push(x);
        return out;
    }
    // Any other family: cover one half, cross, cover the other.
    let half = 1u64 << (n - 1);
    let mask = half - 1;
    let w = f.matching_width(n - 1);
    let perm = |s: u64| {
        if w == 0 {
            s
        } else {
            s ^ ((s & ((1 << w) - 1)) << (n - 1 - w))
        }
    };
    let (tx, xs) = (x & half, x & mask);
    let (ty, ys) = (y & half, y & mask);
    let mut out = Vec::new();
    if tx != ty {
        let a = xs ^ 1;
        out.extend(cover_index(f, n - 1, xs, a).into_iter().map(|v| tx | v));
        out.extend(
            cover_index(f, n - 1, perm(a), ys)
                .into_iter()
                .map(|v| ty | v),
        );
    } else {
        let z = xs ^ 1;
        out.push(x);
        out.extend(
            cover_index(f, n - 1, perm(xs), perm(z))
                .into_iter()
                .map(|v| (tx ^ half) | v),
        );
        out.extend(cover_index(f, n - 1, z, ys).into_iter().map(|v| tx | v));
    }
    out
}

fn to_walk(f: CubeFamily, n: usize, path: Vec<u64>) -> Result<Walk> {
    Walk::new(
        f,
        path.into_iter()
            .map(|v| BitString::from_index(v, n).expect("in range"))
            .collect(),
    )
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_HAMILTONIAN_DIM {
        return Err(Error::CapExceeded {
            what: "covering walk",
            n,
            cap: MAX_HAMILTONIAN_DIM,
            hint: "",
        });
    }
    Ok(())
}

/// Hamiltonian path of `Q_n` for opposite-parity endpoints, otherwise a
/// covering walk of length `2^n`.
pub fn qn_path(x: &BitString, y: &BitString) -> Result<Walk> {
    let n = super::check_pair(x, y)?;
    if x == y {
        return Err(Error::Contract("qn_path endpoints must differ".into()));
    }
    check_cap(n)?;
    let (xi, yi) = (x.to_index().unwrap(), y.to_index().unwrap());
    to_walk(CubeFamily::Q, n, q_cover_index(n, xi, yi))
}

/// A walk from `x` to `y` visiting every vertex of the cube at least once.
/// `x = y` yields a closed walk.
pub fn covering_walk(f: CubeFamily, x: &BitString, y: &BitString) -> Result<Walk> {
    let f = f.validate()?;
    let n = super::check_pair(x, y)?;
    check_cap(n)?;
    let (xi, yi) = (x.to_index().unwrap(), y.to_index().unwrap());
    to_walk(f, n, cover_index(f, n, xi, yi))
}
