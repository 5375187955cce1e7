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

use thiserror::Error;

/// Errors produced by the zcube library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bit text contained something other than `0`/`1`, or was empty.
    /// `position` is 1-based; 0 means the input was empty.
    #[error("invalid bit string at position {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("length mismatch: expected {expected} bits, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index out of range: {index} (valid range {lo}..={hi})")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    /// A documented precondition does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The request is well formed but the construction does not exist.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The request would materialize more than the configured limit.
    #[error("{what} refused for n = {n}: limit is n <= {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
