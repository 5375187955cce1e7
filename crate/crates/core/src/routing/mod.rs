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

//! Constructive routing: Hamiltonian paths in `H_n`, covering walks for the
//! small cubes at recursion bases, and `k`-robust walks whose length is
//! bounded by the closed-form diameter bounds.

mod covering;
mod hamiltonian;
mod robust;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bitstring::BitString;
use crate::error::{Error, Result};
use crate::kappa;
use crate::topology::CubeFamily;

pub use covering::{covering_walk, qn_path};
pub use hamiltonian::{hamiltonian_path, MAX_HAMILTONIAN_DIM};
pub use robust::{robust_route, RobustnessCertificate, MAX_ROBUST_K};

/// An ordered vertex sequence in one cube. Vertices may repeat; the length
/// is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    family: CubeFamily,
    vertices: Vec<BitString>,
}

impl Walk {
    /// Checks only the shape (non-empty, equal lengths). Adjacency is the job
    /// of [`crate::analysis::verify_walk`].
    pub fn new(family: CubeFamily, vertices: Vec<BitString>) -> Result<Walk> {
        let first = vertices
            .first()
            .ok_or_else(|| Error::Contract("a walk needs at least one vertex".into()))?;
        let n = first.len();
        if let Some(bad) = vertices.iter().find(|v| v.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Walk { family, vertices })
    }

    pub fn family(&self) -> CubeFamily {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[BitString] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<BitString> {
        self.vertices
    }

    /// Number of edges traversed.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> &BitString {
        &self.vertices[0]
    }

    pub fn last(&self) -> &BitString {
        self.vertices.last().expect("non-empty")
    }

    pub fn is_path(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.vertices.len());
        self.vertices.iter().all(|v| seen.insert(v))
    }

    /// Cuts out every closed sub-walk, leaving a path with the same endpoints
    /// whose consecutive vertices were consecutive in `self`.
    pub fn splice_loops(&self) -> Walk {
        let mut out: Vec<BitString> = Vec::with_capacity(self.vertices.len());
        let mut pos: HashMap<&BitString, usize> = HashMap::new();
        for v in &self.vertices {
            if let Some(&p) = pos.get(v) {
                for dropped in out.drain(p + 1..) {
                    pos.remove(&dropped);
                }
                continue;
            }
            pos.insert(v, out.len());
            out.push(v.clone());
        }
        Walk {
            family: self.family,
            vertices: out,
        }
    }
}

fn check_pair(x: &BitString, y: &BitString) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::Contract(
            "vertices must have at least one bit".into(),
        ));
    }
    Ok(x.len())
}

/// Flips the differing bits left to right. Only valid where the family
/// coincides with the hypercube.
fn bit_fixing(f: CubeFamily, x: &BitString, y: &BitString) -> Walk {
    let mut cur = x.clone();
    let mut vertices = vec![cur.clone()];
    while let Some(i) = cur.first_difference(y) {
        cur.toggle(i);
        vertices.push(cur.clone());
    }
    Walk {
        family: f,
        vertices,
    }
}

/// A walk from `x` to `y`: bit-fixing where the family is the hypercube,
/// otherwise a `k`-robust walk with `k = kappa(n)` (family `H`) or the
/// family's own `k` (family `Z`). With `compact`, loops are spliced out.
pub fn route(f: CubeFamily, x: &BitString, y: &BitString, compact: bool) -> Result<Walk> {
    let f = f.validate()?;
    let n = check_pair(x, y)?;
    let walk = if f.is_hypercube_at(n) {
        bit_fixing(f, x, y)
    } else {
        let k = match f {
            CubeFamily::H => kappa::kappa(n as u64)?.max(1),
            CubeFamily::Z(k) => k,
            CubeFamily::Q => unreachable!("Q is the hypercube at every n"),
        };
        robust_route(f, k as usize, x, y)?.0
    };
    Ok(if compact { walk.splice_loops() } else { walk })
}

/// The closed-form length bound that [`route`] honors for family `f` at
/// dimension `n`.
pub fn route_bound(f: CubeFamily, n: usize) -> Result<BigRational> {
    match f.validate()? {
        CubeFamily::H => kappa::thm1_bound_exact(n as u64),
        CubeFamily::Z(k) => kappa::zk_bound_exact(n as u64, k),
        CubeFamily::Q => Ok(BigRational::from_integer(BigInt::from(n))),
    }
}

/// `ceil(n / (c + 1))`, where `c` bounds the number of bits one edge can
/// change besides the flipped one: `kappa(n)` for `H`, `k` for `Z(k)`, 0
/// for `Q`. A vertex and its complement are at least this far apart.
pub fn distance_lower_bound(f: CubeFamily, n: usize) -> Result<u64> {
    let n64 = n as u64;
    match f.validate()? {
        CubeFamily::H => kappa::lower_bound(n64),
        CubeFamily::Z(k) => Ok(n64.div_ceil(k as u64 + 1)),
        CubeFamily::Q => Ok(n64),
    }
}
