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

//! Property tests over small random databases.

mod common;

use std::collections::BTreeSet;

use common::{check_invariants, itemsets, rule_set};
use prefrec::arm::mine_rules;
use prefrec::bitdata::{BitColumn, TransactionDatabase};
use prefrec::fim::{mine, mine_prepared, MineConfig};
use prefrec::oracle::{brute_fim, brute_rules};
use prefrec::window::{add_item, marm, mfim, remove_first};
use prefrec::{ItemId, Label};
use proptest::prelude::*;

fn database() -> impl Strategy<Value = TransactionDatabase> {
    (1usize..=8, 1usize..=40).prop_flat_map(|(n, n_tx)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n_tx), n).prop_map(move |cols| {
            let columns: Vec<(Label, BitColumn)> = cols
                .iter()
                .enumerate()
                .map(|(j, bits)| {
                    let ones = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i);
                    (j as Label + 1, BitColumn::from_indices(n_tx, ones).unwrap())
                })
                .collect();
            TransactionDatabase::from_columns(n_tx, columns).unwrap()
        })
    })
}

fn sigma() -> impl Strategy<Value = f64> {
    (0u32..=20).prop_map(|s| s as f64 / 20.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mining_matches_brute_force(db in database(), sigma in sigma(), preprocess in any::<bool>()) {
        let mut config = MineConfig::new(sigma);
        if !preprocess {
            config = config.without_preprocessing();
        }
        let (tree, order) = mine(&db, &config).unwrap();
        prop_assert_eq!(itemsets(&tree, order.labels()), brute_fim(&db, sigma).unwrap().itemsets);
        prop_assert!(check_invariants(&tree).is_ok());
    }

    #[test]
    fn rules_match_brute_force(db in database(), sigma in sigma(), tau in 0u32..=8) {
        let tau = tau as f64 / 8.0;
        let (_, rules) = mine_rules(&db, sigma, tau).unwrap();
        let expected: BTreeSet<_> = brute_rules(&db, sigma, tau).unwrap().into_iter().collect();
        prop_assert_eq!(rule_set(&rules, db.labels()), expected);
    }

    #[test]
    fn add_and_remove_commute(db in database(), sigma in sigma()) {
        prop_assume!(db.n_items() >= 2);
        let n = db.n_items();
        let head: Vec<ItemId> = (0..n - 1).map(ItemId::from).collect();
        let base = mine_prepared(&db.select(&head), sigma).unwrap();
        let last = db.labels()[n - 1];

        let mut a = base.clone();
        let removed_a = remove_first(&mut a);
        add_item(&db, &mut a, last, sigma).unwrap();

        let mut b = base;
        add_item(&db, &mut b, last, sigma).unwrap();
        let removed_b = remove_first(&mut b);

        // removal picks the oldest frequent item; when only the new item
        // is frequent the two orders remove different items
        if removed_a.as_ref().map(|r| r.item) == removed_b.as_ref().map(|r| r.item) {
            prop_assert_eq!(itemsets(&a, db.labels()), itemsets(&b, db.labels()));
        }
    }

    #[test]
    fn window_bookkeeping(db in database(), sigma in sigma(), q in 1usize..=4, replacements in 0usize..=6) {
        let run = mfim(&db, q, replacements, sigma).unwrap();
        let mut size = 1;
        for step in &run.steps {
            size = size + step.freq_add - step.freq_del;
            prop_assert_eq!(size, step.tree_size);
        }
        prop_assert!(run.state.items().count() <= q);
        prop_assert_eq!(run.state.tree().len(), size);
        if run.complete {
            prop_assert_eq!(run.state.replacements(), replacements);
        }
    }

    #[test]
    fn window_rules_match_final_window(db in database(), sigma in sigma(), q in 1usize..=4, replacements in 0usize..=6) {
        let run = marm(&db, q, replacements, sigma, 0.5).unwrap();
        let window: Vec<ItemId> = run.state.items().collect();
        let sub = db.select(&window);
        let live: BTreeSet<_> = run.state.rules().map(|r| r.labelled(db.labels()).normalized()).collect();
        let expected: BTreeSet<_> = brute_rules(&sub, sigma, 0.5).unwrap().into_iter().collect();
        prop_assert_eq!(live, expected);
    }

    #[test]
    fn dump_round_trip(db in database(), sigma in sigma()) {
        let (tree, order) = mine(&db, &MineConfig::new(sigma)).unwrap();
        let mut buf = Vec::new();
        tree.write_dump(&mut buf, order.labels()).unwrap();
        let (back, labels) = prefrec::preftree::PrefTree::read_dump(buf.as_slice(), None).unwrap();
        prop_assert_eq!(labels.as_slice(), order.labels());
        prop_assert_eq!(back, tree);
    }
}
