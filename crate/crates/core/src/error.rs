// Copyright 2026 The prefrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use crate::Label;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("column has {found} bits, database has {expected} transactions")]
    LengthMismatch { expected: usize, found: usize },

    #[error("item label {0} is already present")]
    DuplicateLabel(Label),

    #[error("unknown item label {0}")]
    UnknownLabel(Label),

    #[error("item order violation: {0}")]
    ItemOrder(String),

    #[error("tree was built with support threshold {tree}, traversal requested {requested}")]
    ThresholdMismatch { tree: u64, requested: u64 },

    #[error("tree was built over {tree} transactions, database has {database}")]
    TransactionCount { tree: usize, database: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    /// A RULE tree needed the support of a subset that is not in the prefix
    /// tree. Subsets are always mined before their supersets, so this means
    /// the tree is corrupt.
    #[error("no support recorded for subset {0:?} of a frequent itemset")]
    MissingSubset(Vec<u32>),

    #[error("tree invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code: 1 for internal invariant violations, 2 for
    /// usage, input and I/O problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MissingSubset(_) | Error::Invariant(_) => 1,
            _ => 2,
        }
    }
}
