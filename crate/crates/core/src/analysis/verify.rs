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

//! Structural checks for neighbor oracles, and walk validation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::routing::{RobustnessCertificate, Walk};
use crate::topology::{adjacent, Adjacency, CubeFamily, CubeGraph};

use super::{bfs_index, Limits};

/// Vertices examined per check in quick mode.
const QUICK_SAMPLES: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Seeded samples of vertices and suffixes; connectivity is still exact.
    Quick,
    /// Every vertex and every suffix.
    Full,
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Level> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::Contract(format!("unknown level {s:?} (quick|full)"))),
        }
    }
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
        }
    }
}

/// A counterexample: the vertices involved and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertices: Vec<BitString>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Number of items examined.
    pub checked: u64,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphReport {
    pub n: usize,
    pub level: Level,
    pub checks: Vec<CheckResult>,
}

impl GraphReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Checker<'a, G: ?Sized> {
    g: &'a G,
    n: usize,
    name: &'static str,
    checked: u64,
    witness: Option<Witness>,
}

impl<'a, G: Adjacency + ?Sized> Checker<'a, G> {
    fn new(g: &'a G, name: &'static str) -> Self {
        Checker {
            g,
            n: g.dim(),
            name,
            checked: 0,
            witness: None,
        }
    }

    fn label(&self, v: u64) -> BitString {
        // oracle output may be out of range; keep the low n bits for display
        BitString::from_index(v & (self.g.order() - 1), self.n).expect("n <= 64")
    }

    /// Records the outcome for one item; returns false once a witness exists.
    fn expect(&mut self, ok: bool, vertices: &[u64], detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness {
                vertices: vertices.iter().map(|&v| self.label(v)).collect(),
                detail: detail(),
            });
        }
        self.witness.is_none()
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.witness.is_none(),
            checked: self.checked,
            witness: self.witness,
        }
    }
}

fn vertex_set(order: u64, level: Level, rng: &mut ChaCha8Rng) -> Vec<u64> {
    match level {
        Level::Full => (0..order).collect(),
        Level::Quick if order <= QUICK_SAMPLES => (0..order).collect(),
        Level::Quick => (0..QUICK_SAMPLES)
            .map(|_| rng.gen_range(0..order))
            .collect(),
    }
}

/// Runs every structural check against an arbitrary oracle. The caller is
/// responsible for keeping `g.dim()` small enough to enumerate.
///
/// Checks, by name:
/// * `regularity`: each vertex has `n` distinct in-range neighbors, none itself.
/// * `symmetry`: `u` in `N(v)` implies `v` in `N(u)`.
/// * `perfect-matching`: level-1 edges pair the two halves bijectively.
/// * `involution`: every matching permutation is its own inverse.
/// * `recursive-structure`: the level-`j` neighbor keeps the first `j - 1`
///   bits, flips bit `j` and applies the matching to the remaining suffix, so
///   each prefix class induces the lower-dimensional member.
/// * `connectivity`: BFS from the all-zero vertex reaches every vertex.
pub fn verify_oracle<G: Adjacency + ?Sized>(g: &G, level: Level, seed: u64) -> GraphReport {
    let n = g.dim();
    let order = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = vertex_set(order, level, &mut rng);
    let mut checks = Vec::new();

    let mut c = Checker::new(g, "regularity");
    for &v in &sample {
        let nbrs: Vec<u64> = (1..=n).map(|i| g.neighbor(v, i)).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            let ok = u < order && u != v && !nbrs[..i].contains(&u);
            if !c.expect(ok, &[v, u], || {
                format!(
                    "neighbor at level {} is out of range, a loop, or repeated",
                    i + 1
                )
            }) {
                break;
            }
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new(g, "symmetry");
    'sym: for &v in &sample {
        for i in 1..=n {
            let u = g.neighbor(v, i);
            let ok = u < order && (1..=n).any(|j| g.neighbor(u, j) == v);
            if !c.expect(ok, &[v, u], || {
                format!("level-{i} neighbor does not list v back")
            }) {
                break 'sym;
            }
        }
    }
    checks.push(c.finish());

    let half = order >> 1;
    let mut c = Checker::new(g, "perfect-matching");
    match level {
        Level::Full => {
            let mut hit = vec![false; half as usize];
            for v in 0..half {
                let u = g.neighbor(v, 1);
                let ok = u >= half
                    && u < order
                    && !std::mem::replace(&mut hit[(u - half) as usize], true);
                if !c.expect(ok, &[v, u], || {
                    "level-1 edge is not a bijection between halves".into()
                }) {
                    break;
                }
            }
        }
        Level::Quick => {
            for &v in &sample {
                let u = g.neighbor(v, 1);
                let ok = (u ^ v) & half != 0 && u < order && g.neighbor(u, 1) == v;
                if !c.expect(ok, &[v, u], || {
                    "level-1 edge does not pair the halves".into()
                }) {
                    break;
                }
            }
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new(g, "involution");
    'inv: for len in 0..n {
        let size = 1u64 << len;
        let suffixes: Vec<u64> = match level {
            Level::Quick if size > QUICK_SAMPLES / n as u64 + 1 => (0..QUICK_SAMPLES / n as u64
                + 1)
                .map(|_| rng.gen_range(0..size))
                .collect(),
            _ => (0..size).collect(),
        };
        for s in suffixes {
            let t = g.matching(len, s);
            let ok = t < size && g.matching(len, t) == s;
            if !c.expect(ok, &[s, t], || {
                format!("matching on length {len} is not an involution")
            }) {
                break 'inv;
            }
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new(g, "recursive-structure");
    'rec: for &v in &sample {
        for j in 1..=n {
            let m = n - j;
            let low = (1u64 << m) - 1;
            let expected = (v ^ (1 << m)) & !low | g.matching(m, v & low);
            let u = g.neighbor(v, j);
            if !c.expect(u == expected, &[v, u, expected], || {
                format!("level-{j} neighbor disagrees with the recursive definition")
            }) {
                break 'rec;
            }
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new(g, "connectivity");
    let dist = bfs_index(g, 0);
    let unreached = dist.iter().position(|&d| d == u8::MAX);
    c.checked = order;
    if let Some(v) = unreached {
        c.witness = Some(Witness {
            vertices: vec![c.label(0), c.label(v as u64)],
            detail: "not reachable from the all-zero vertex".into(),
        });
    }
    checks.push(c.finish());

    GraphReport { n, level, checks }
}

/// [`verify_oracle`] on the library's own oracle, subject to caps.
pub fn verify_graph(
    f: CubeFamily,
    n: usize,
    level: Level,
    seed: u64,
    limits: &Limits,
) -> Result<GraphReport> {
    match level {
        Level::Full if n > limits.full_verify_max_n => Err(Error::CapExceeded {
            what: "full verification",
            n,
            cap: limits.full_verify_max_n,
            hint: "; use --level quick",
        }),
        _ => {
            limits.check_bfs(n)?;
            Ok(verify_oracle(&CubeGraph::new(f, n)?, level, seed))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessReport {
    pub k: usize,
    /// Suffixes of length `k` that no walk vertex ends in, ascending.
    pub missing: Vec<BitString>,
    pub certificate: Option<RobustnessCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkReport {
    pub length: usize,
    /// Smallest `i` such that vertices `i - 1` and `i` are not adjacent.
    pub first_violation: Option<usize>,
    pub robustness: Option<RobustnessReport>,
}

impl WalkReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
            && self
                .robustness
                .as_ref()
                .map_or(true, |r| r.missing.is_empty())
    }
}

/// Checks consecutive adjacency and, given `k`, that every suffix of length
/// `k` occurs. `k` larger than the dimension, or beyond
/// [`crate::routing::MAX_ROBUST_K`], reports every suffix as missing only up
/// to the cap; such calls should be rejected upstream.
pub fn verify_walk(walk: &Walk, k: Option<usize>) -> WalkReport {
    let f = walk.family();
    let first_violation = walk
        .vertices()
        .windows(2)
        .position(|p| !adjacent(f, &p[0], &p[1]).unwrap_or(false))
        .map(|i| i + 1);
    let robustness = k.map(|k| {
        let n = walk.dim();
        let k = k.min(n).min(crate::routing::MAX_ROBUST_K);
        let mut seen = vec![false; 1 << k];
        for v in walk.vertices() {
            let z = v.range(n - k, n).to_index().expect("k <= 64");
            seen[z as usize] = true;
        }
        RobustnessReport {
            k,
            missing: seen
                .iter()
                .enumerate()
                .filter(|(_, &s)| !s)
                .map(|(z, _)| BitString::from_index(z as u64, k).expect("in range"))
                .collect(),
            certificate: RobustnessCertificate::from_walk(walk, k),
        }
    });
    WalkReport {
        length: walk.length(),
        first_violation,
        robustness,
    }
}
