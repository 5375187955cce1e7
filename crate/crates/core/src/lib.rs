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

//! Hypercube variants `H_n`, `Z_{n,k}` and `Q_n`: exact `kappa`, neighbor
//! oracles, bounded-length routing, Hamiltonian paths and exact analysis.

pub mod analysis;
pub mod bitstring;
pub mod cli;
pub mod error;
pub mod kappa;
pub mod routing;
pub mod topology;

pub use bitstring::BitString;
pub use error::{Error, Result};
pub use topology::{Adjacency, CubeFamily, CubeGraph};
