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

//! Brute-force reference results: every subset of the item base is
//! enumerated and counted against the transactions directly. Shares no
//! code with the prefix-tree miner beyond the database and threshold.

use std::collections::BTreeMap;

use crate::bitdata::{check_sigma, threshold, TransactionDatabase};
use crate::rule::{Confidence, Rule};
use crate::{Error, Label, Result};

pub const MAX_ITEMS: usize = 24;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleResult {
    /// Frequent itemsets as ascending label vectors, with supports.
    pub itemsets: BTreeMap<Vec<Label>, u64>,
}

impl OracleResult {
    /// Every subset of a listed itemset is listed.
    pub fn is_downward_closed(&self) -> bool {
        self.itemsets.keys().all(|set| {
            (0..set.len()).all(|skip| {
                let sub: Vec<Label> = set
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &l)| l)
                    .collect();
                self.itemsets.contains_key(&sub)
            })
        })
    }
}

/// Support of every subset of the items, indexed by bit mask, where bit
/// `j` stands for the `j`-th smallest label. Also returns the labels in
/// that order.
fn subset_supports(db: &TransactionDatabase) -> (Vec<u64>, Vec<Label>) {
    let mut labels: Vec<Label> = db.labels().to_vec();
    labels.sort_unstable();
    let mut masks = vec![0u32; db.n_transactions()];
    for item in db.items() {
        let bit = labels
            .binary_search(&db.label(item))
            .expect("label present");
        for tid in db.column(item).iter_ones() {
            masks[tid] |= 1 << bit;
        }
    }
    let supports = (0u32..(1u32 << labels.len()))
        .map(|subset| masks.iter().filter(|&&m| m & subset == subset).count() as u64)
        .collect();
    (supports, labels)
}

fn labels_of(mask: u32, labels: &[Label]) -> Vec<Label> {
    (0..labels.len())
        .filter(|&b| mask >> b & 1 == 1)
        .map(|b| labels[b])
        .collect()
}

fn check_size(db: &TransactionDatabase) -> Result<()> {
    let n = db.n_items();
    if n > MAX_ITEMS {
        return Err(Error::ResourceLimit(format!(
            "brute force is limited to {MAX_ITEMS} items, database has {n}"
        )));
    }
    Ok(())
}

/// All frequent itemsets of `db` by exhaustive subset enumeration. An
/// empty database yields only the empty itemset, as the miner does.
pub fn brute_fim(db: &TransactionDatabase, sigma: f64) -> Result<OracleResult> {
    check_sigma(sigma, "minimum support")?;
    check_size(db)?;
    let mut result = OracleResult::default();
    if db.n_transactions() == 0 {
        result.itemsets.insert(Vec::new(), 0);
        return Ok(result);
    }
    let min = threshold(sigma, db.n_transactions());
    let (supports, labels) = subset_supports(db);
    for (subset, &support) in supports.iter().enumerate() {
        if support >= min {
            result
                .itemsets
                .insert(labels_of(subset as u32, &labels), support);
        }
    }
    Ok(result)
}

/// Every rule `A => C∖A` with `C` frequent, `∅ ≠ A ⊊ C` and confidence at
/// least `tau`, sorted. A `tau` above 1 is accepted and selects nothing.
pub fn brute_rules(db: &TransactionDatabase, sigma: f64, tau: f64) -> Result<Vec<Rule<Label>>> {
    check_sigma(sigma, "minimum support")?;
    if tau.is_nan() || tau < 0.0 {
        return Err(Error::Config(format!(
            "minimum confidence must be non-negative, got {tau}"
        )));
    }
    check_size(db)?;
    let mut rules = Vec::new();
    if db.n_transactions() == 0 {
        return Ok(rules);
    }
    let min = threshold(sigma, db.n_transactions());
    let (supports, labels) = subset_supports(db);
    for (c, &sc) in supports.iter().enumerate() {
        let c = c as u32;
        if sc < min || c.count_ones() < 2 {
            continue;
        }
        // proper non-empty subsets of c
        let mut a = (c - 1) & c;
        while a != 0 {
            let conf = Confidence::new(sc, supports[a as usize]);
            if conf.meets(tau) {
                rules.push(Rule {
                    antecedent: labels_of(a, &labels),
                    consequent: labels_of(c & !a, &labels),
                    support: sc,
                    confidence: conf,
                });
            }
            a = (a - 1) & c;
        }
    }
    rules.sort_unstable();
    Ok(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitdata::tests::d5;

    #[test]
    fn d5_itemsets() {
        let r = brute_fim(&d5(), 0.4).unwrap();
        let expected: BTreeMap<Vec<Label>, u64> = [
            (vec![], 5),
            (vec![1], 3),
            (vec![2], 4),
            (vec![3], 2),
            (vec![1, 2], 2),
            (vec![2, 3], 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(r.itemsets, expected);
        assert!(r.is_downward_closed());
        assert_eq!(brute_fim(&d5(), 1.0).unwrap().itemsets.len(), 1);
        assert_eq!(brute_fim(&d5(), 0.0).unwrap().itemsets.len(), 8);
    }

    #[test]
    fn d5_rules() {
        let rules = brute_rules(&d5(), 0.4, 0.5).unwrap();
        let got: Vec<String> = rules.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            got,
            vec![
                "1 -> 2\t2\t2/3\t0.666667",
                "2 -> 1\t2\t2/4\t0.500000",
                "2 -> 3\t2\t2/4\t0.500000",
                "3 -> 2\t2\t2/2\t1.000000",
            ]
        );
        assert!(rules.iter().all(|r| r.confidence.meets(0.5)));
        assert!(brute_rules(&d5(), 1.0, 0.0).unwrap().is_empty());
        assert!(brute_rules(&d5(), 0.4, 1.0 + 1e-9).unwrap().is_empty());
        assert!(brute_rules(&d5(), 0.4, -0.1).is_err());
        assert_eq!(brute_rules(&d5(), 0.4, 1.0).unwrap().len(), 1);
    }

    #[test]
    fn item_cap() {
        let db = TransactionDatabase::from_transactions(vec![(0..25).collect::<Vec<Label>>()]);
        assert!(matches!(brute_fim(&db, 0.5), Err(Error::ResourceLimit(_))));
    }
}
