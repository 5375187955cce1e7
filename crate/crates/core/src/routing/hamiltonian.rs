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

//! Hamiltonian paths in `H_n`, `n >= 3`.
//!
//! Recursive on the two halves. For endpoints in the same half, `0x'` and
//! `0y'`, take a path `P` from `x'` to `y'` in `H_{n-1}` and let `z'` follow
//! `x'` on it; the result is
//! `0x' -> 1 phi(x') ~> 1 phi(z') -> 0z' ~> 0y'`, using a second path from
//! `phi(x')` to `phi(z')` in the other half. For endpoints in different halves,
//! cover the first half ending at some `w'` with `w' != x'` and
//! `phi(w') != y'`, cross, and cover the second half. `H_3` is solved by
//! exhaustive search once and memoized.

use std::sync::OnceLock;

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::topology::{CubeFamily, CubeGraph};

use super::Walk;

/// Largest dimension for which a Hamiltonian path is materialized.
pub const MAX_HAMILTONIAN_DIM: usize = 24;

type H3Table = [[Option<[u8; 8]>; 8]; 8];

fn h3_table() -> &'static H3Table {
    static TABLE: OnceLock<H3Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let g = CubeGraph::new(CubeFamily::H, 3).expect("H_3");
        let mut table: H3Table = [[None; 8]; 8];
        for x in 0..8u64 {
            for y in 0..8u64 {
                if x != y {
                    let mut path = vec![x];
                    if extend(&g, &mut path, 1 << x, y) {
                        let mut arr = [0u8; 8];
                        for (slot, v) in arr.iter_mut().zip(&path) {
                            *slot = *v as u8;
                        }
                        table[x as usize][y as usize] = Some(arr);
                    }
                }
            }
        }
        table
    })
}

fn extend(g: &CubeGraph, path: &mut Vec<u64>, seen: u32, target: u64) -> bool {
    let last = *path.last().expect("non-empty");
    if path.len() == 8 {
        return last == target;
    }
    for u in g.neighbors_of(last) {
        let bit = 1u32 << u;
        // the target may only be entered as the final vertex
        if seen & bit != 0 || (u == target && path.len() != 7) {
            continue;
        }
        path.push(u);
        if extend(g, path, seen | bit, target) {
            return true;
        }
        path.pop();
    }
    false
}

fn h_matching(len: usize, s: u64) -> u64 {
    let w = CubeFamily::H.matching_width(len);
    if w == 0 {
        s
    } else {
        s ^ ((s & ((1 << w) - 1)) << (len - w))
    }
}

/// Hamiltonian path in index space, `n >= 3`, `x != y`.
pub(crate) fn ham_path_index(n: usize, x: u64, y: u64) -> Vec<u64> {
    debug_assert!(n >= 3 && x != y);
    if n == 3 {
        let row = h3_table()[x as usize][y as usize].expect("H_3 is Hamiltonian connected");
        return row.iter().map(|&v| v as u64).collect();
    }
    let half = 1u64 << (n - 1);
    let mask = half - 1;
    let (tx, xs) = (x & half, x & mask);
    let (ty, ys) = (y & half, y & mask);
    let mut out = Vec::with_capacity(1 << n);
    if tx == ty {
        let p = ham_path_index(n - 1, xs, ys);
        let z = p[1];
        let q = ham_path_index(n - 1, h_matching(n - 1, xs), h_matching(n - 1, z));
        out.push(x);
        out.extend(q.iter().map(|&v| (tx ^ half) | v));
        out.extend(p[1..].iter().map(|&v| tx | v));
    } else {
        let w = (0..half)
            .find(|&c| c != xs && h_matching(n - 1, c) != ys)
            .expect("a half of H_n has at least 4 vertices");
        out.extend(ham_path_index(n - 1, xs, w).into_iter().map(|v| tx | v));
        out.extend(
            ham_path_index(n - 1, h_matching(n - 1, w), ys)
                .into_iter()
                .map(|v| ty | v),
        );
    }
    out
}

/// A Hamiltonian path of `H_n` from `x` to `y`, `n = x.len() >= 3`.
pub fn hamiltonian_path(x: &BitString, y: &BitString) -> Result<Walk> {
    let n = super::check_pair(x, y)?;
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "H_{n} is not Hamiltonian connected (H_2 is the 4-cycle C_4); need n >= 3"
        )));
    }
    if x == y {
        return Err(Error::Contract(
            "Hamiltonian path endpoints must differ".into(),
        ));
    }
    if n > MAX_HAMILTONIAN_DIM {
        return Err(Error::CapExceeded {
            what: "Hamiltonian path",
            n,
            cap: MAX_HAMILTONIAN_DIM,
            hint: "",
        });
    }
    let xi = x.to_index().expect("n within index range");
    let yi = y.to_index().expect("n within index range");
    let vertices = ham_path_index(n, xi, yi)
        .into_iter()
        .map(|v| BitString::from_index(v, n).expect("in range"))
        .collect();
    Walk::new(CubeFamily::H, vertices)
}
