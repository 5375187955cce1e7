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

//! Fixed-length binary strings used as vertex labels.
//!
//! Positions are 1-based and bit 1 is the leftmost character of the text
//! form, so `x.bit(1)` is the first bit of `"011"`. Bits are packed
//! most-significant-first into 64-bit words; for strings of equal length the
//! derived word order is therefore the lexicographic order of the text form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    // Unused trailing bits of the last word are always zero.
    words: Vec<u64>,
}

#[inline]
fn mask_at(pos: usize) -> (usize, u64) {
    (pos / WORD, 1u64 << (WORD - 1 - pos % WORD))
}

impl BitString {
    /// The all-zero string of length `len`.
    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn empty() -> Self {
        Self::zeros(0)
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut out = BitString::empty();
        for b in bits {
            out.push(b);
        }
        out
    }

    /// Parses `'0'`/`'1'` text, bit 1 first.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::Parse {
                position: 0,
                reason: "empty input".into(),
            });
        }
        let mut out = BitString::zeros(text.len());
        for (p, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => out.set_raw(p, true),
                other => {
                    return Err(Error::Parse {
                        position: p + 1,
                        reason: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Builds the `len`-bit string whose integer value (bit 1 most
    /// significant) is `value`.
    pub fn from_index(value: u64, len: usize) -> Result<Self> {
        if len > WORD {
            return Err(Error::Contract(format!(
                "from_index supports at most {WORD} bits, got {len}"
            )));
        }
        if len < WORD && value >> len != 0 {
            return Err(Error::Contract(format!(
                "value {value} does not fit in {len} bits"
            )));
        }
        let mut out = BitString::zeros(len);
        if len > 0 {
            out.words[0] = value << (WORD - len);
        }
        Ok(out)
    }

    /// Integer value with bit 1 most significant, when it fits in 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        match self.len {
            0 => Some(0),
            l if l <= WORD => Some(self.words[0] >> (WORD - l)),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    fn get_raw(&self, pos: usize) -> bool {
        let (w, m) = mask_at(pos);
        self.words[w] & m != 0
    }

    #[inline]
    fn set_raw(&mut self, pos: usize, value: bool) {
        let (w, m) = mask_at(pos);
        if value {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    fn push(&mut self, value: bool) {
        if self.len % WORD == 0 {
            self.words.push(0);
        }
        self.len += 1;
        self.set_raw(self.len - 1, value);
    }

    /// Bit `i` (1-based).
    ///
    /// Panics if `i` is 0 or greater than the length, like slice indexing.
    pub fn bit(&self, i: usize) -> bool {
        assert!(
            (1..=self.len).contains(&i),
            "bit index {i} out of range 1..={}",
            self.len
        );
        self.get_raw(i - 1)
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |p| self.get_raw(p))
    }

    /// Copy of `self` with bit `i` (1-based) inverted.
    pub fn with_flipped(&self, i: usize) -> Self {
        let mut out = self.clone();
        let value = !out.bit(i);
        out.set_raw(i - 1, value);
        out
    }

    /// In-place inversion of bit `i` (1-based).
    pub(crate) fn toggle(&mut self, i: usize) {
        let v = !self.bit(i);
        self.set_raw(i - 1, v);
    }

    pub fn xor(&self, other: &BitString) -> Result<BitString> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(BitString {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// `x[i, j]`, 1-based and inclusive. `i = j + 1` yields the empty string.
    pub fn slice(&self, i: usize, j: usize) -> Result<BitString> {
        if i == 0 || j > self.len || i > j + 1 {
            return Err(Error::IndexOutOfRange {
                index: if i == 0 || i > j + 1 { i } else { j },
                lo: 1,
                hi: self.len,
            });
        }
        Ok(self.range(i - 1, j))
    }

    /// 0-based half-open bit range; callers guarantee bounds.
    pub(crate) fn range(&self, start: usize, end: usize) -> BitString {
        let mut out = BitString::zeros(end - start);
        for p in start..end {
            if self.get_raw(p) {
                out.set_raw(p - start, true);
            }
        }
        out
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut out = BitString::zeros(self.len + other.len);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        let (base, off) = (self.len / WORD, self.len % WORD);
        for (i, &w) in other.words.iter().enumerate() {
            out.words[base + i] |= w >> off;
            if off != 0 && base + i + 1 < out.words.len() {
                out.words[base + i + 1] |= w << (WORD - off);
            }
        }
        out
    }

    pub fn complement(&self) -> BitString {
        let mut out = BitString {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_tail();
        out
    }

    /// In-place `self[1..=width] ^= self[len-width+1..=len]`, the shape shared
    /// by every matching permutation in this crate.
    pub(crate) fn xor_prefix_with_suffix(&mut self, width: usize) {
        debug_assert!(2 * width <= self.len);
        let off = self.len - width;
        for p in 0..width {
            if self.get_raw(off + p) {
                let v = !self.get_raw(p);
                self.set_raw(p, v);
            }
        }
    }

    /// Whether the last `suffix.len()` bits of `self` equal `suffix`.
    pub fn ends_with(&self, suffix: &BitString) -> bool {
        if suffix.len > self.len {
            return false;
        }
        let off = self.len - suffix.len;
        (0..suffix.len).all(|p| self.get_raw(off + p) == suffix.get_raw(p))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// First 1-based position where `self` and `other` differ.
    pub fn first_difference(&self, other: &BitString) -> Option<usize> {
        debug_assert_eq!(self.len, other.len);
        for (w, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let d = a ^ b;
            if d != 0 {
                return Some(w * WORD + d.leading_zeros() as usize + 1);
            }
        }
        None
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 << (WORD - rem);
            }
        }
    }
}

impl Ord for BitString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words.cmp(&other.words).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for BitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BitString::parse(s)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BitString::parse(&s).map_err(serde::de::Error::custom)
    }
}
