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

//! Recursive prefix-tree mining of frequent itemsets and association rules.
//!
//! The miner works item by item: a tree holding every frequent itemset over
//! items `1..k` is extended to items `1..k+1` by a single left depth-first
//! pass ([`fim::fim_traversal`]). Because the tree is never rebuilt, new
//! items can be appended to a database after the fact, and the oldest item
//! can be evicted by cutting the root's rightmost subtree. Both operations
//! together give a moving window over items ([`window`]).
//!
//! Support counting is bit-parallel: every item is a packed column of
//! transaction bits and the support of an itemset is the population count
//! of the AND of its columns ([`bitdata`]).
//!
//! ```
//! use prefrec::bitdata::TransactionDatabase;
//! use prefrec::fim::{mine, MineConfig};
//!
//! let (db, _) = TransactionDatabase::read_horizontal("1 2\n1 2 3\n2 3\n1\n2\n".as_bytes()).unwrap();
//! let (tree, order) = mine(&db, &MineConfig::new(0.4)).unwrap();
//! assert_eq!(tree.len(), 6);
//! let all = tree.enumerate(order.labels());
//! assert_eq!(all[0], (vec![], 5));
//! ```

pub mod arm;
pub mod bitdata;
pub mod cli;
mod error;
pub mod fim;
pub mod oracle;
pub mod preftree;
pub mod rule;
pub mod synth;
pub mod window;

pub use error::{Error, Result};

/// External item label, as written in transaction files.
pub type Label = u64;

/// Internal item index: the position of an item's column in a
/// [`bitdata::TransactionDatabase`]. Trees order items by this index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemId(pub u32);

impl ItemId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ItemId {
    fn from(i: usize) -> Self {
        ItemId(i as u32)
    }
}
