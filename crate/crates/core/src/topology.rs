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

//! Z-cube families as implicit graphs.
//!
//! Every family here is built the same way: the `n`-cube is two copies of
//! the `(n-1)`-cube, `0G` and `1G`, plus the matching `0x ~ 1 P(x)` where `P`
//! is an involution on `(n-1)`-bit strings. `P` always has the shape "XOR the
//! first `w` bits with the last `w` bits" for a width `w` that depends only on
//! the family and the string length:
//!
//! | family    | width at length `m`                                   |
//! |-----------|-------------------------------------------------------|
//! | `H`       | `kappa(m)`                                            |
//! | `Z(k)`    | `0` if `m <= k`, `m - k` if `m <= 2k`, `k` otherwise  |
//! | `Q`       | `0`                                                   |
//!
//! Unrolling the recursion, the neighbor of `x` across level `i` is
//! `x[1, i-1] . flip(x_i) . P(x[i+1, n])` with `P` taken at length `n - i`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::kappa;

/// Selects one of the cube families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubeFamily {
    /// The Z-cube `H_n`.
    H,
    /// `Z_{n,k}` for a fixed `k >= 1`.
    Z(u32),
    /// The hypercube `Q_n`.
    Q,
}

impl CubeFamily {
    pub fn z(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Contract("Z family requires k >= 1".into()));
        }
        Ok(CubeFamily::Z(k))
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            CubeFamily::Z(k) => CubeFamily::z(k),
            f => Ok(f),
        }
    }

    /// Width `w` of the prefix/suffix XOR performed by the matching
    /// permutation on strings of length `len`.
    pub fn matching_width(self, len: usize) -> usize {
        match self {
            CubeFamily::H => {
                if len == 0 {
                    0
                } else {
                    kappa::kappa_unchecked(len as u64) as usize
                }
            }
            CubeFamily::Z(k) => {
                let k = k as usize;
                if len <= k {
                    0
                } else if len <= 2 * k {
                    len - k
                } else {
                    k
                }
            }
            CubeFamily::Q => 0,
        }
    }

    /// Whether the `n`-dimensional member of the family is the hypercube.
    pub fn is_hypercube_at(self, n: usize) -> bool {
        (1..n).all(|m| self.matching_width(m) == 0)
    }

    /// Short name: `h`, `z3`, `q`.
    pub fn tag(self) -> String {
        match self {
            CubeFamily::H => "h".into(),
            CubeFamily::Z(k) => format!("z{k}"),
            CubeFamily::Q => "q".into(),
        }
    }
}

impl fmt::Display for CubeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeFamily::H => f.write_str("H"),
            CubeFamily::Z(k) => write!(f, "Z(k={k})"),
            CubeFamily::Q => f.write_str("Q"),
        }
    }
}

impl FromStr for CubeFamily {
    type Err = Error;

    /// Accepts `h`, `q`, and `z<k>` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "h" => Ok(CubeFamily::H),
            "q" => Ok(CubeFamily::Q),
            _ => lower
                .strip_prefix('z')
                .and_then(|k| k.parse::<u32>().ok())
                .ok_or_else(|| Error::Contract(format!("unknown family {s:?}")))
                .and_then(CubeFamily::z),
        }
    }
}

impl Serialize for CubeFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.tag())
    }
}

/// The family's matching permutation applied to `x` (at length `x.len()`).
pub fn matching(f: CubeFamily, x: &BitString) -> BitString {
    let mut out = x.clone();
    out.xor_prefix_with_suffix(f.matching_width(x.len()));
    out
}

/// `phi`: XOR the first `kappa(n)` bits with the last `kappa(n)` bits.
pub fn phi(x: &BitString) -> BitString {
    matching(CubeFamily::H, x)
}

/// `phi_k`, the three-case permutation behind `Z_{n,k}`.
pub fn phi_k(x: &BitString, k: u32) -> Result<BitString> {
    Ok(matching(CubeFamily::z(k)?, x))
}

fn check_level(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n,
        });
    }
    Ok(())
}

/// The unique neighbor of `x` across the level-`i` matching (1-based).
pub fn neighbor_at(f: CubeFamily, x: &BitString, i: usize) -> Result<BitString> {
    let n = x.len();
    check_level(n, i)?;
    Ok(neighbor_unchecked(f, x, i))
}

pub(crate) fn neighbor_unchecked(f: CubeFamily, x: &BitString, i: usize) -> BitString {
    let n = x.len();
    let w = f.matching_width(n - i);
    let mut out = x.with_flipped(i);
    // XOR bits i+1..i+w with bits n-w+1..n
    for p in 0..w {
        if x.bit(n - w + 1 + p) {
            out.toggle(i + 1 + p);
        }
    }
    out
}

/// All `n` neighbors of `x`, in ascending level order.
pub fn neighbors(f: CubeFamily, x: &BitString) -> Vec<BitString> {
    (1..=x.len()).map(|i| neighbor_unchecked(f, x, i)).collect()
}

/// Adjacency by the first-differing-bit reduction: two distinct vertices can
/// only be joined by the matching at the level where they first differ.
pub fn adjacent(f: CubeFamily, x: &BitString, y: &BitString) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(match x.first_difference(y) {
        None => false,
        Some(i) => &neighbor_unchecked(f, x, i) == y,
    })
}

/// A neighbor oracle over vertex indices (bit 1 most significant).
///
/// `level` is 1-based. Implementations must be pure.
pub trait Adjacency: Sync {
    fn dim(&self) -> usize;

    fn neighbor(&self, v: u64, level: usize) -> u64;

    /// The matching permutation on suffixes of `len` bits.
    fn matching(&self, len: usize, s: u64) -> u64;

    fn order(&self) -> u64 {
        1u64 << self.dim()
    }
}

/// Largest dimension representable in index space.
pub const MAX_INDEX_DIM: usize = 40;

/// Index-space oracle for one member of a family. Each level reduces to two
/// XOR masks, so a neighbor costs a handful of word operations.
#[derive(Debug, Clone)]
pub struct CubeGraph {
    family: CubeFamily,
    n: usize,
    // per level i (index i-1): (flip bit, width)
    levels: Vec<(u64, usize)>,
}

impl CubeGraph {
    pub fn new(family: CubeFamily, n: usize) -> Result<Self> {
        let family = family.validate()?;
        if n == 0 {
            return Err(Error::Contract("dimension must be at least 1".into()));
        }
        if n > MAX_INDEX_DIM {
            return Err(Error::CapExceeded {
                what: "index-space graph",
                n,
                cap: MAX_INDEX_DIM,
                hint: "",
            });
        }
        let levels = (1..=n)
            .map(|i| {
                let m = n - i;
                (1u64 << m, family.matching_width(m))
            })
            .collect();
        Ok(CubeGraph { family, n, levels })
    }

    pub fn family(&self) -> CubeFamily {
        self.family
    }

    pub fn neighbors_of(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        (1..=self.n).map(move |i| self.neighbor(v, i))
    }

    pub fn label(&self, v: u64) -> BitString {
        BitString::from_index(v, self.n).expect("vertex index in range")
    }

    pub fn index_of(&self, x: &BitString) -> Result<u64> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(x.to_index().expect("dimension within index range"))
    }
}

#[inline]
fn matching_index(len: usize, w: usize, s: u64) -> u64 {
    if w == 0 {
        s
    } else {
        s ^ ((s & ((1u64 << w) - 1)) << (len - w))
    }
}

impl Adjacency for CubeGraph {
    fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn neighbor(&self, v: u64, level: usize) -> u64 {
        let (flip, w) = self.levels[level - 1];
        let m = self.n - level;
        let suffix = v & (flip - 1);
        v ^ flip ^ (matching_index(m, w, suffix) ^ suffix)
    }

    fn matching(&self, len: usize, s: u64) -> u64 {
        matching_index(len, self.family.matching_width(len), s)
    }
}

/// Output format for [`export_edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
}

pub const DEFAULT_EXPORT_CAP: usize = 20;

/// Every undirected edge once, `u v` with `u < v`, lines in lexicographic
/// order. The DOT form lists the vertices, then the same edges.
pub fn export_edges(f: CubeFamily, n: usize, format: ExportFormat, cap: usize) -> Result<String> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "edge export",
            n,
            cap,
            hint: "",
        });
    }
    let g = CubeGraph::new(f, n)?;
    let mut edges: Vec<(u64, u64)> = Vec::with_capacity((g.order() as usize * n) / 2);
    for v in 0..g.order() {
        for u in g.neighbors_of(v) {
            if v < u {
                edges.push((v, u));
            }
        }
    }
    edges.sort_unstable();
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v) in edges {
                out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
            }
        }
        ExportFormat::Dot => {
            out.push_str(&format!("graph \"{}_{}\" {{\n", f.tag(), n));
            for v in 0..g.order() {
                out.push_str(&format!("  \"{}\";\n", g.label(v)));
            }
            for (u, v) in edges {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(u), g.label(v)));
            }
            out.push_str("}\n");
        }
    }
    Ok(out)
}
