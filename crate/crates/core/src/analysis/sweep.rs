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

//! Bit-parallel multi-source BFS.
//!
//! Up to 64 sources advance together: bit `b` of `reached[v]` says source
//! `b` of the current batch has reached `v`. One round computes, for every
//! vertex, the OR of its neighbors' frontier words; the graphs are
//! undirected, so this pulls exactly the next BFS layer for all 64 sources
//! in `O(2^n * n)` word operations.

use crate::topology::Adjacency;

/// Results of a sweep over a list of sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    /// Ordered (source, target) pairs at each distance, diagonal included.
    pub histogram: Vec<u64>,
    /// Eccentricity of each source, in the order given.
    pub eccentricity: Vec<u32>,
    /// Distance from each source to its bitwise complement.
    pub antipodal: Vec<u32>,
}

impl Sweep {
    pub fn diameter(&self) -> u32 {
        self.eccentricity.iter().copied().max().unwrap_or(0)
    }
}

pub fn multi_source_sweep<G: Adjacency + ?Sized>(g: &G, sources: &[u64]) -> Sweep {
    let n = g.dim();
    let order = g.order() as usize;
    let full = g.order() - 1;
    let mut histogram = vec![0u64; 1];
    let mut eccentricity = vec![0u32; sources.len()];
    let mut antipodal = vec![0u32; sources.len()];

    let mut reached = vec![0u64; order];
    let mut frontier = vec![0u64; order];
    let mut next = vec![0u64; order];

    for (chunk_no, chunk) in sources.chunks(64).enumerate() {
        let base = chunk_no * 64;
        reached.fill(0);
        frontier.fill(0);
        for (b, &s) in chunk.iter().enumerate() {
            reached[s as usize] |= 1 << b;
            frontier[s as usize] |= 1 << b;
        }
        histogram[0] += chunk.len() as u64;
        let mut depth = 0u32;
        loop {
            depth += 1;
            let mut any = 0u64;
            let mut count = 0u64;
            for v in 0..order {
                let mut acc = 0u64;
                for i in 1..=n {
                    acc |= frontier[g.neighbor(v as u64, i) as usize];
                }
                let fresh = acc & !reached[v];
                next[v] = fresh;
                any |= fresh;
                count += fresh.count_ones() as u64;
            }
            if any == 0 {
                break;
            }
            if histogram.len() <= depth as usize {
                histogram.push(0);
            }
            histogram[depth as usize] += count;
            let mut bits = any;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                eccentricity[base + b] = depth;
                bits &= bits - 1;
            }
            for (b, &s) in chunk.iter().enumerate() {
                if next[(!s & full) as usize] >> b & 1 == 1 {
                    antipodal[base + b] = depth;
                }
            }
            for v in 0..order {
                reached[v] |= next[v];
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }
    Sweep {
        histogram,
        eccentricity,
        antipodal,
    }
}
