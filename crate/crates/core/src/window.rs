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

//! Updating a mined tree by items, and moving windows over items.
//!
//! Adding an item is one traversal. Removing the oldest item cuts the
//! root's rightmost subtree, which holds exactly the itemsets containing
//! it. A [`WindowState`] combines both to keep the frequent itemsets (and
//! optionally rules) of the last `q` frequent items of a stream.

use std::collections::{HashMap, VecDeque};
use std::io::Write;
use std::time::Instant;

use crate::arm::{arm_traversal, RuleTree};
use crate::bitdata::{check_sigma, threshold, TransactionDatabase};
use crate::fim::{fim_traversal, TraversalStats};
use crate::preftree::{PrefTree, Removed};
use crate::rule::Rule;
use crate::{Error, ItemId, Label, Result};

/// Extends `tree` with the item labelled `label`, which must already be a
/// column of `db` (see [`TransactionDatabase::append_item`]).
pub fn add_item(
    db: &TransactionDatabase,
    tree: &mut PrefTree,
    label: Label,
    sigma: f64,
) -> Result<TraversalStats> {
    let item = db.item_or_err(label)?;
    fim_traversal(db, tree, item, sigma)
}

/// [`add_item`] that also returns the antecedent trees of the new itemsets.
pub fn add_item_with_rules(
    db: &TransactionDatabase,
    tree: &mut PrefTree,
    label: Label,
    sigma: f64,
    tau: f64,
) -> Result<(TraversalStats, Vec<RuleTree>)> {
    let item = db.item_or_err(label)?;
    arm_traversal(db, tree, item, sigma, tau)
}

/// Drops the oldest item and every itemset containing it. `None` when the
/// tree has no items left.
pub fn remove_first(tree: &mut PrefTree) -> Option<Removed> {
    tree.del_rightmost()
}

/// Outcome of admitting one frequent item into a window.
#[derive(Clone, Debug)]
pub struct WindowStep {
    /// 1-based count of admitted items.
    pub step: usize,
    pub admitted: ItemId,
    pub evicted: Option<ItemId>,
    pub freq_add: usize,
    pub freq_del: usize,
    pub tree_size: usize,
    pub seconds: f64,
    pub rules_added: Vec<Rule>,
    pub rules_retired: Vec<Rule>,
    /// Copy of the tree after the step, when snapshots are requested.
    pub tree: Option<PrefTree>,
}

impl WindowStep {
    pub fn is_replacement(&self) -> bool {
        self.evicted.is_some()
    }
}

/// Frequent itemsets over the last `q` frequent items seen.
#[derive(Clone, Debug)]
pub struct WindowState {
    tree: PrefTree,
    window: VecDeque<ItemId>,
    q: usize,
    sigma: f64,
    tau: Option<f64>,
    rules: HashMap<Vec<ItemId>, Vec<Rule>>,
    examined: usize,
    admitted: usize,
    replacements: usize,
    snapshots: bool,
}

impl WindowState {
    /// Empty window of capacity `q` over a database of `n_transactions`
    /// rows. With `tau`, rules are maintained too.
    pub fn new(n_transactions: usize, q: usize, sigma: f64, tau: Option<f64>) -> Result<Self> {
        check_sigma(sigma, "minimum support")?;
        if let Some(t) = tau {
            check_sigma(t, "minimum confidence")?;
        }
        if q == 0 {
            return Err(Error::Config("window size q must be at least 1".into()));
        }
        Ok(WindowState {
            tree: PrefTree::new(n_transactions, threshold(sigma, n_transactions)),
            window: VecDeque::with_capacity(q),
            q,
            sigma,
            tau,
            rules: HashMap::new(),
            examined: 0,
            admitted: 0,
            replacements: 0,
            snapshots: false,
        })
    }

    /// Attach a copy of the tree to every step.
    pub fn with_snapshots(mut self) -> Self {
        self.snapshots = true;
        self
    }

    pub fn tree(&self) -> &PrefTree {
        &self.tree
    }

    /// Window items, oldest first.
    pub fn items(&self) -> impl Iterator<Item = ItemId> + '_ {
        self.window.iter().copied()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn examined(&self) -> usize {
        self.examined
    }

    pub fn admitted(&self) -> usize {
        self.admitted
    }

    pub fn replacements(&self) -> usize {
        self.replacements
    }

    /// Current rules, grouped by itemset (maintained only with `tau`).
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.values().flatten()
    }

    /// Offers the next stream item. Infrequent items are counted and
    /// ignored. A frequent item is admitted; once the window is full, the
    /// oldest item is evicted first.
    pub fn offer(&mut self, db: &TransactionDatabase, item: ItemId) -> Result<Option<WindowStep>> {
        self.examined += 1;
        if db.support(item) < self.tree.threshold() {
            return Ok(None);
        }
        let start = Instant::now();
        let mut rules_retired = Vec::new();
        let mut freq_del = 0;
        let mut evicted = None;
        if self.window.len() == self.q {
            if self.tau.is_some() {
                let top = self
                    .tree
                    .rightmost_child(self.tree.root())
                    .expect("full window");
                for set in self.tree.subtree_itemsets(top) {
                    rules_retired.extend(self.rules.remove(&set).unwrap_or_default());
                }
            }
            let removed = self
                .tree
                .del_rightmost()
                .expect("full window has a root child");
            let oldest = self.window.pop_front();
            debug_assert_eq!(oldest, Some(removed.item));
            freq_del = removed.nodes;
            evicted = Some(removed.item);
            self.replacements += 1;
        }

        let mut rules_added = Vec::new();
        let stats = match self.tau {
            None => fim_traversal(db, &mut self.tree, item, self.sigma)?,
            Some(tau) => {
                let (stats, trees) = arm_traversal(db, &mut self.tree, item, self.sigma, tau)?;
                for rt in trees {
                    let rules = rt.rules();
                    rules_added.extend(rules.iter().cloned());
                    if !rules.is_empty() {
                        self.rules.insert(rt.itemset().to_vec(), rules);
                    }
                }
                stats
            }
        };
        let seconds = start.elapsed().as_secs_f64();
        self.window.push_back(item);
        self.admitted += 1;
        Ok(Some(WindowStep {
            step: self.admitted,
            admitted: item,
            evicted,
            freq_add: stats.inserted,
            freq_del,
            tree_size: self.tree.len(),
            seconds,
            rules_added,
            rules_retired,
            tree: self.snapshots.then(|| self.tree.clone()),
        }))
    }
}

/// Result of a moving-window run.
#[derive(Clone, Debug)]
pub struct WindowRun {
    /// Every admission, warm-up included.
    pub steps: Vec<WindowStep>,
    pub state: WindowState,
    /// False when the stream ran out before `q` items were admitted and `Q`
    /// replacements were made.
    pub complete: bool,
}

impl WindowRun {
    pub fn replacement_steps(&self) -> impl Iterator<Item = &WindowStep> {
        self.steps.iter().filter(|s| s.is_replacement())
    }
}

/// Moving FIM over the items of `db` in column order: admit the first `q`
/// frequent items, then perform `replacements` evict-and-admit steps.
/// With `tau`, rules are maintained as well (moving ARM).
pub fn run_window(
    db: &TransactionDatabase,
    q: usize,
    replacements: usize,
    sigma: f64,
    tau: Option<f64>,
    snapshots: bool,
) -> Result<WindowRun> {
    let mut state = WindowState::new(db.n_transactions(), q, sigma, tau)?;
    if snapshots {
        state = state.with_snapshots();
    }
    let mut steps = Vec::new();
    let target = q + replacements;
    for item in db.items() {
        if state.admitted() == target {
            break;
        }
        if let Some(step) = state.offer(db, item)? {
            steps.push(step);
        }
    }
    let complete = state.admitted() == target;
    if !complete {
        log::warn!(
            "item stream exhausted after {} of {} admissions ({} items examined)",
            state.admitted(),
            target,
            state.examined()
        );
    }
    Ok(WindowRun {
        steps,
        state,
        complete,
    })
}

/// Moving FIM: [`run_window`] without rules.
pub fn mfim(
    db: &TransactionDatabase,
    q: usize,
    replacements: usize,
    sigma: f64,
) -> Result<WindowRun> {
    run_window(db, q, replacements, sigma, None, false)
}

/// Moving ARM: [`run_window`] with rules at minimum confidence `tau`.
pub fn marm(
    db: &TransactionDatabase,
    q: usize,
    replacements: usize,
    sigma: f64,
    tau: f64,
) -> Result<WindowRun> {
    run_window(db, q, replacements, sigma, Some(tau), false)
}

/// CSV report, one row per admission:
/// `step,admitted_label,evicted_label,freq_add,freq_del,tree_size,step_seconds`.
/// Warm-up rows leave `evicted_label` empty.
pub fn write_window_csv<W: Write>(
    mut out: W,
    steps: &[WindowStep],
    labels: &[Label],
) -> Result<()> {
    writeln!(
        out,
        "step,admitted_label,evicted_label,freq_add,freq_del,tree_size,step_seconds"
    )?;
    for s in steps {
        let evicted = s
            .evicted
            .map(|i| labels[i.index()].to_string())
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{:.6}",
            s.step,
            labels[s.admitted.index()],
            evicted,
            s.freq_add,
            s.freq_del,
            s.tree_size,
            s.seconds
        )?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitdata::tests::d5;
    use crate::fim::mine_prepared;

    fn sets(tree: &PrefTree, db: &TransactionDatabase) -> Vec<Vec<Label>> {
        let mut v: Vec<Vec<Label>> = tree
            .enumerate(db.labels())
            .into_iter()
            .map(|(mut s, _)| {
                s.sort_unstable();
                s
            })
            .collect();
        v.sort();
        v
    }

    fn rules(rs: &[Rule], db: &TransactionDatabase) -> Vec<String> {
        let mut v: Vec<String> = rs
            .iter()
            .map(|r| r.labelled(db.labels()).normalized().to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn add_matches_full_mine() {
        let db = d5();
        let mut tree = mine_prepared(&db.select(&[ItemId(0), ItemId(1)]), 0.4).unwrap();
        add_item(&db, &mut tree, 3, 0.4).unwrap();
        assert_eq!(tree, mine_prepared(&db, 0.4).unwrap());
        assert!(matches!(
            add_item(&db, &mut tree, 99, 0.4),
            Err(Error::UnknownLabel(99))
        ));
    }

    #[test]
    fn add_infrequent_item() {
        let mut db = d5();
        let mut tree = mine_prepared(&db, 0.4).unwrap();
        let before = tree.clone();
        db.append_item(4, "00001".parse().unwrap()).unwrap();
        let stats = add_item(&db, &mut tree, 4, 0.4).unwrap();
        assert_eq!(
            stats,
            TraversalStats {
                tested: 1,
                inserted: 0
            }
        );
        assert_eq!(tree, before);

        let mut root_only = PrefTree::new(5, 2);
        add_item(&db, &mut root_only, 2, 0.4).unwrap();
        assert_eq!(sets(&root_only, &db), vec![vec![], vec![2]]);
    }

    #[test]
    fn remove_first_on_d5() {
        let db = d5();
        let mut tree = mine_prepared(&db, 0.4).unwrap();
        let removed = remove_first(&mut tree).unwrap();
        assert_eq!((removed.item, removed.nodes), (ItemId(0), 2));
        assert_eq!(sets(&tree, &db), vec![vec![], vec![2], vec![2, 3], vec![3]]);
        remove_first(&mut tree).unwrap();
        assert_eq!(sets(&tree, &db), vec![vec![], vec![3]]);
        remove_first(&mut tree).unwrap();
        assert_eq!(remove_first(&mut tree), None);
    }

    #[test]
    fn mfim_on_d5() {
        let db = d5();
        let run = run_window(&db, 2, 1, 0.4, None, true).unwrap();
        assert!(run.complete);
        assert_eq!(run.steps.len(), 3);
        let warm = run.steps[1].tree.as_ref().unwrap();
        assert_eq!(sets(warm, &db), vec![vec![], vec![1], vec![1, 2], vec![2]]);
        let last = &run.steps[2];
        assert_eq!(last.evicted, Some(ItemId(0)));
        assert_eq!((last.freq_add, last.freq_del), (2, 2));
        assert_eq!(
            sets(last.tree.as_ref().unwrap(), &db),
            vec![vec![], vec![2], vec![2, 3], vec![3]]
        );
        assert_eq!(run.replacement_steps().count(), 1);
    }

    #[test]
    fn window_of_one() {
        let db = d5();
        let run = run_window(&db, 1, 2, 0.4, None, true).unwrap();
        for (step, label) in run.steps.iter().zip([1, 2, 3]) {
            assert_eq!(
                sets(step.tree.as_ref().unwrap(), &db),
                vec![vec![], vec![label]]
            );
        }
    }

    #[test]
    fn infrequent_items_are_skipped() {
        let db =
            TransactionDatabase::from_transactions(vec![vec![1, 2, 3], vec![1, 3], vec![1, 3]]);
        let run = mfim(&db, 1, 1, 0.5).unwrap();
        assert_eq!(run.state.examined(), 3);
        assert_eq!(run.state.replacements(), 1);
        let admitted: Vec<ItemId> = run.steps.iter().map(|s| s.admitted).collect();
        assert_eq!(admitted, vec![ItemId(0), ItemId(2)]);

        let run = mfim(&db, 3, 1, 0.5).unwrap();
        assert!(!run.complete);
        assert_eq!(run.state.admitted(), 2);
    }

    #[test]
    fn marm_on_d5() {
        let db = d5();
        let run = marm(&db, 2, 1, 0.4, 0.5).unwrap();
        let added: Vec<Rule> = run.steps[..2]
            .iter()
            .flat_map(|s| s.rules_added.clone())
            .collect();
        assert_eq!(
            rules(&added, &db),
            vec!["1 -> 2\t2\t2/3\t0.666667", "2 -> 1\t2\t2/4\t0.500000"]
        );
        let last = &run.steps[2];
        assert_eq!(rules(&last.rules_retired, &db), rules(&added, &db));
        assert_eq!(
            rules(&last.rules_added, &db),
            vec!["2 -> 3\t2\t2/4\t0.500000", "3 -> 2\t2\t2/2\t1.000000"]
        );

        let run = marm(&db, 2, 1, 0.4, 1.0).unwrap();
        assert_eq!(
            rules(&run.steps[2].rules_added, &db),
            vec!["3 -> 2\t2\t2/2\t1.000000"]
        );

        let run = marm(&db, 2, 0, 0.4, 0.5).unwrap();
        assert!(run.steps.iter().all(|s| s.rules_retired.is_empty()));
        assert_eq!(run.steps.len(), 2);
    }

    #[test]
    fn csv_report() {
        let db = d5();
        let run = mfim(&db, 2, 1, 0.4).unwrap();
        let mut out = Vec::new();
        write_window_csv(&mut out, &run.steps, db.labels()).unwrap();
        let text = String::from_utf8(out).unwrap();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(
            rows[0],
            "step,admitted_label,evicted_label,freq_add,freq_del,tree_size,step_seconds"
        );
        assert!(rows[1].starts_with("1,1,,1,0,2,"));
        assert!(rows[3].starts_with("3,3,1,2,2,4,"));
    }

    #[test]
    fn bad_configuration() {
        assert!(WindowState::new(5, 0, 0.4, None).is_err());
        assert!(WindowState::new(5, 2, 1.4, None).is_err());
        assert!(WindowState::new(5, 2, 0.4, Some(-1.0)).is_err());
    }
}
