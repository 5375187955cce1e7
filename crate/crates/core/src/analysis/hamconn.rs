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

//! Hamiltonian connectivity by exhaustive subset dynamic programming.

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::routing::Walk;
use crate::topology::{Adjacency, CubeFamily, CubeGraph};

/// `2^n` vertices and `2^(2^n)` subsets: n = 4 is the last feasible size.
pub const BRUTEFORCE_MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamConnectivity {
    pub family: CubeFamily,
    pub n: usize,
    pub connected: bool,
    /// Unordered pairs examined.
    pub pairs_checked: usize,
    /// One Hamiltonian path per pair that has one, in pair order.
    pub witnesses: Vec<Walk>,
    /// The first pair without a Hamiltonian path.
    pub violation: Option<(BitString, BitString)>,
}

/// `ends[mask]`: bit `v` is set when some path from the source visits
/// exactly `mask` and ends at `v`.
fn reachable_ends(g: &CubeGraph, source: usize) -> Vec<u16> {
    let order = g.order() as usize;
    let mut ends = vec![0u16; 1 << order];
    ends[1 << source] = 1 << source;
    for mask in 1usize..1 << order {
        let mut cur = ends[mask];
        while cur != 0 {
            let v = cur.trailing_zeros() as u64;
            cur &= cur - 1;
            for u in g.neighbors_of(v) {
                if mask >> u & 1 == 0 {
                    ends[mask | 1 << u] |= 1 << u;
                }
            }
        }
    }
    ends
}

fn rebuild(g: &CubeGraph, ends: &[u16], source: u64, target: u64) -> Vec<u64> {
    let mut mask = ends.len() - 1;
    let mut path = vec![target];
    let mut v = target;
    while v != source {
        mask &= !(1 << v);
        v = g
            .neighbors_of(v)
            .find(|&u| ends[mask] >> u & 1 == 1)
            .expect("predecessor exists");
        path.push(v);
    }
    path.reverse();
    path
}

pub fn ham_connected_bruteforce(f: CubeFamily, n: usize) -> Result<HamConnectivity> {
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::CapExceeded {
            what: "brute-force Hamiltonian connectivity",
            n,
            cap: BRUTEFORCE_MAX_N,
            hint: "",
        });
    }
    let g = CubeGraph::new(f, n)?;
    let order = g.order();
    let full = (1usize << order) - 1;
    let mut report = HamConnectivity {
        family: g.family(),
        n,
        connected: true,
        pairs_checked: 0,
        witnesses: Vec::new(),
        violation: None,
    };
    for x in 0..order {
        let ends = reachable_ends(&g, x as usize);
        for y in x + 1..order {
            report.pairs_checked += 1;
            if ends[full] >> y & 1 == 1 {
                let path = rebuild(&g, &ends, x, y);
                report.witnesses.push(Walk::new(
                    report.family,
                    path.into_iter().map(|v| g.label(v)).collect(),
                )?);
            } else if report.violation.is_none() {
                report.connected = false;
                report.violation = Some((g.label(x), g.label(y)));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify_walk;

    #[test]
    fn small_cases() {
        assert!(
            ham_connected_bruteforce(CubeFamily::H, 1)
                .unwrap()
                .connected
        );
        let c4 = ham_connected_bruteforce(CubeFamily::H, 2).unwrap();
        assert!(!c4.connected);
        assert_eq!(
            c4.violation.map(|(a, b)| (a.to_string(), b.to_string())),
            Some(("00".into(), "11".into()))
        );
        let h3 = ham_connected_bruteforce(CubeFamily::H, 3).unwrap();
        assert!(h3.connected);
        assert_eq!(h3.witnesses.len(), 28);
        for w in &h3.witnesses {
            assert!(w.is_path() && w.length() == 7 && verify_walk(w, None).passed());
        }
        assert!(
            !ham_connected_bruteforce(CubeFamily::Q, 3)
                .unwrap()
                .connected
        );
        assert!(
            ham_connected_bruteforce(CubeFamily::H, 4)
                .unwrap()
                .connected
        );
        assert!(ham_connected_bruteforce(CubeFamily::H, 5).is_err());
    }
}
