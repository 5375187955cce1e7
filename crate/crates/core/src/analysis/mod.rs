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

//! Exact ground truth at desk scale: BFS distances, diameters, average
//! distance, antipodal distances, structural verification, brute-force
//! Hamiltonian connectivity and walk validation.
//!
//! Vertex `v` is the bit string whose integer value (bit 1 most significant)
//! is `v`. Per-source runs own their buffers; nothing is shared across
//! sources.

mod hamconn;
mod sweep;
mod verify;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::topology::{Adjacency, CubeFamily, CubeGraph};

pub use hamconn::{ham_connected_bruteforce, HamConnectivity, BRUTEFORCE_MAX_N};
pub use sweep::{multi_source_sweep, Sweep};
pub use verify::{
    verify_graph, verify_oracle, verify_walk, CheckResult, GraphReport, Level, RobustnessReport,
    WalkReport, Witness,
};

/// Seed used whenever a caller does not supply one.
pub const DEFAULT_SEED: u64 = 42;

/// Environment variable overriding [`Limits::exact_max_n`].
pub const EXACT_CAP_ENV: &str = "ZCUBE_MAX_EXACT_N";

/// Materialization caps, all in terms of the dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Single-source BFS.
    pub bfs_max_n: usize,
    /// All-sources work: exact diameter, exact averages, all-vertex antipodal scans.
    pub exact_max_n: usize,
    /// Exhaustive structural verification.
    pub full_verify_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bfs_max_n: 24,
            exact_max_n: 14,
            full_verify_max_n: 12,
        }
    }
}

impl Limits {
    /// Defaults, with `ZCUBE_MAX_EXACT_N` applied when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(EXACT_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            limits.exact_max_n = cap.min(limits.bfs_max_n);
        }
        limits
    }

    fn check_bfs(&self, n: usize) -> Result<()> {
        if n > self.bfs_max_n {
            return Err(Error::CapExceeded {
                what: "breadth-first search",
                n,
                cap: self.bfs_max_n,
                hint: "",
            });
        }
        Ok(())
    }

    fn check_exact(&self, n: usize) -> Result<()> {
        if n > self.exact_max_n {
            return Err(Error::CapExceeded {
                what: "exact all-sources computation",
                n,
                cap: self.exact_max_n,
                hint: "; use sampled eccentricities for a lower bound",
            });
        }
        Ok(())
    }
}

/// Plain queue BFS from one source. Distances fit in `u8` because every
/// graph here has diameter at most `n`.
pub fn bfs_index<G: Adjacency + ?Sized>(g: &G, source: u64) -> Vec<u8> {
    let n = g.dim();
    let mut dist = vec![u8::MAX; g.order() as usize];
    let mut queue = std::collections::VecDeque::with_capacity(dist.len());
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize] + 1;
        for i in 1..=n {
            let u = g.neighbor(v, i);
            if dist[u as usize] == u8::MAX {
                dist[u as usize] = d;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Distances from one source to every vertex.
#[derive(Debug, Clone)]
pub struct DistanceMap {
    n: usize,
    source: BitString,
    dist: Vec<u8>,
}

impl DistanceMap {
    pub fn source(&self) -> &BitString {
        &self.source
    }

    pub fn distance(&self, v: &BitString) -> Option<u32> {
        if v.len() != self.n {
            return None;
        }
        self.dist
            .get(v.to_index()? as usize)
            .filter(|&&d| d != u8::MAX)
            .map(|&d| d as u32)
    }

    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0) as u32
    }

    /// Raw distances indexed by vertex value.
    pub fn as_slice(&self) -> &[u8] {
        &self.dist
    }
}

pub fn bfs(f: CubeFamily, source: &BitString, limits: &Limits) -> Result<DistanceMap> {
    let n = source.len();
    limits.check_bfs(n)?;
    let g = CubeGraph::new(f, n)?;
    let dist = bfs_index(&g, g.index_of(source)?);
    Ok(DistanceMap {
        n,
        source: source.clone(),
        dist,
    })
}

/// Exact diameter: maximum eccentricity over all sources.
pub fn diameter_exact(f: CubeFamily, n: usize, limits: &Limits) -> Result<u32> {
    limits.check_exact(n)?;
    let g = CubeGraph::new(f, n)?;
    Ok(multi_source_sweep(&g, &all_vertices(&g)).diameter())
}

/// `bfs distance(x, complement(x))`.
pub fn antipodal_distance(f: CubeFamily, x: &BitString, limits: &Limits) -> Result<u32> {
    let map = bfs(f, x, limits)?;
    Ok(map.distance(&x.complement()).expect("graph is connected"))
}

/// Antipodal distance for every vertex, indexed by vertex value.
pub fn antipodal_distances(f: CubeFamily, n: usize, limits: &Limits) -> Result<Vec<u32>> {
    limits.check_exact(n)?;
    let g = CubeGraph::new(f, n)?;
    Ok(multi_source_sweep(&g, &all_vertices(&g)).antipodal)
}

/// Max eccentricity over `count` seeded sample sources: a lower bound on the
/// diameter.
pub fn eccentricity_sample(
    f: CubeFamily,
    n: usize,
    count: usize,
    seed: u64,
    limits: &Limits,
) -> Result<u32> {
    limits.check_bfs(n)?;
    let g = CubeGraph::new(f, n)?;
    Ok(multi_source_sweep(&g, &sample_sources(n, count, seed)).diameter())
}

/// `count` distinct vertices drawn with a seeded generator, ascending.
/// Returns every vertex when `count >= 2^n`.
pub fn sample_sources(n: usize, count: usize, seed: u64) -> Vec<u64> {
    let order = 1usize << n;
    if count >= order {
        return (0..order as u64).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<u64> = rand::seq::index::sample(&mut rng, order, count)
        .into_iter()
        .map(|v| v as u64)
        .collect();
    picked.sort_unstable();
    picked
}

fn all_vertices<G: Adjacency + ?Sized>(g: &G) -> Vec<u64> {
    (0..g.order()).collect()
}

/// How a [`DistanceSummary`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Sampled { sources: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Exact(u32),
    /// Max eccentricity over sampled sources.
    SampledLowerBound(u32),
}

impl Diameter {
    pub fn value(self) -> u32 {
        match self {
            Diameter::Exact(d) | Diameter::SampledLowerBound(d) => d,
        }
    }
}

/// The averaging convention used by [`DistanceSummary::average_distance`].
pub const AVERAGE_CONVENTION: &str = "mean over ordered pairs (x, y) with x != y";

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSummary {
    pub family: CubeFamily,
    pub n: usize,
    pub mode: Mode,
    pub diameter: Diameter,
    /// See [`AVERAGE_CONVENTION`]. In sampled mode the pairs are restricted
    /// to sampled sources.
    pub average_distance: f64,
    /// Ordered pairs (source, target) at each distance, diagonal included.
    pub histogram: Vec<u64>,
    pub sources_used: usize,
}

pub fn distance_summary(
    f: CubeFamily,
    n: usize,
    mode: Mode,
    limits: &Limits,
) -> Result<DistanceSummary> {
    let g = CubeGraph::new(f, n)?;
    let sources = match mode {
        Mode::Exact => {
            limits.check_exact(n)?;
            all_vertices(&g)
        }
        Mode::Sampled { sources, seed } => {
            limits.check_bfs(n)?;
            if sources == 0 {
                return Err(Error::Contract(
                    "sampled mode needs at least one source".into(),
                ));
            }
            sample_sources(n, sources, seed)
        }
    };
    let sweep = multi_source_sweep(&g, &sources);
    let order = g.order();
    let pairs = sources.len() as u64 * (order - 1);
    let total: u64 = sweep
        .histogram
        .iter()
        .enumerate()
        .map(|(d, &c)| d as u64 * c)
        .sum();
    let diameter = match mode {
        Mode::Exact => Diameter::Exact(sweep.diameter()),
        Mode::Sampled { .. } if sources.len() as u64 == order => Diameter::Exact(sweep.diameter()),
        Mode::Sampled { .. } => Diameter::SampledLowerBound(sweep.diameter()),
    };
    Ok(DistanceSummary {
        family: f,
        n,
        mode,
        diameter,
        average_distance: if pairs == 0 {
            0.0
        } else {
            total as f64 / pairs as f64
        },
        histogram: sweep.histogram,
        sources_used: sources.len(),
    })
}

pub fn average_distance(f: CubeFamily, n: usize, mode: Mode, limits: &Limits) -> Result<f64> {
    Ok(distance_summary(f, n, mode, limits)?.average_distance)
}
