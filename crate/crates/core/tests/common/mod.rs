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

//! Shared fixtures for the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use prefrec::bitdata::{BitColumn, TransactionDatabase};
use prefrec::preftree::PrefTree;
use prefrec::rule::Rule;
use prefrec::{ItemId, Label};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITE_SIZE: usize = 200;
pub const SIGMAS: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
pub const TAUS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// Database with `n` items labelled `1..=n`, each column drawn with its
/// own density.
pub fn random_db(rng: &mut ChaCha8Rng, n: usize, n_tx: usize) -> TransactionDatabase {
    let columns: Vec<(Label, BitColumn)> = (1..=n as Label)
        .map(|label| {
            let p: f64 = rng.random_range(0.05..0.95);
            let rows: Vec<usize> = (0..n_tx).filter(|_| rng.random_bool(p)).collect();
            (label, BitColumn::from_indices(n_tx, rows).unwrap())
        })
        .collect();
    TransactionDatabase::from_columns(n_tx, columns).unwrap()
}

/// The fixed random suite: n in 3..=12 items, N in 10..=200 transactions.
pub fn suite() -> Vec<TransactionDatabase> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    (0..SUITE_SIZE)
        .map(|_| {
            let n = rng.random_range(3..=12);
            let n_tx = rng.random_range(10..=200);
            random_db(&mut rng, n, n_tx)
        })
        .collect()
}

/// Itemsets with sorted labels, keyed like the oracle output.
pub fn itemsets(tree: &PrefTree, labels: &[Label]) -> BTreeMap<Vec<Label>, u64> {
    tree.enumerate(labels)
        .into_iter()
        .map(|(mut s, supp)| {
            s.sort_unstable();
            (s, supp)
        })
        .collect()
}

pub fn rule_set(rules: &[Rule], labels: &[Label]) -> BTreeSet<Rule<Label>> {
    rules
        .iter()
        .map(|r| r.labelled(labels).normalized())
        .collect()
}

fn subsets(set: &[ItemId]) -> impl Iterator<Item = Vec<ItemId>> + '_ {
    (0..(1u32 << set.len()) - 1).map(move |mask| {
        (0..set.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| set[b])
            .collect()
    })
}

/// Structural checks on a mined tree: support decreases along every edge,
/// every path is a strictly increasing itemset whose prefixes are its
/// ancestors, children decrease left to right, proper subsets are visited
/// earlier in LDFS, and the itemsets are downward closed.
pub fn check_invariants(tree: &PrefTree) -> Result<(), String> {
    tree.validate().map_err(|e| e.to_string())?;
    let order: Vec<_> = tree.ldfs().collect();
    let mut position = HashMap::new();
    for (i, &node) in order.iter().enumerate() {
        let set = tree.itemset_of(node);
        if let Some(parent) = tree.parent(node) {
            if tree.support(node) > tree.support(parent) {
                return Err(format!("support grows along the edge to {set:?}"));
            }
            if tree.itemset_of(parent) != set[..set.len() - 1] {
                return Err(format!("parent of {set:?} is not its prefix"));
            }
        }
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("path {set:?} is not strictly increasing"));
        }
        let kids: Vec<ItemId> = tree.children(node).map(|c| tree.item(c).unwrap()).collect();
        if kids.windows(2).any(|w| w[0] <= w[1]) {
            return Err(format!(
                "children of {set:?} are not decreasing left to right"
            ));
        }
        position.insert(set, i);
    }
    for (set, &i) in &position {
        for sub in subsets(set) {
            match position.get(&sub) {
                None => return Err(format!("{sub:?} missing below {set:?}")),
                Some(&j) if j >= i => {
                    return Err(format!("{sub:?} does not precede {set:?} in LDFS"))
                }
                _ => {}
            }
        }
    }
    Ok(())
}
