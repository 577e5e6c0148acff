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

//! Frequent itemset mining by recursive prefix-tree extension.
//!
//! [`fim_traversal`] turns the tree of frequent itemsets over items
//! `1..k-1` into the tree over `1..k`: it walks the old tree in LDFS order
//! and, at each node `a`, counts the support of `a ∪ {k}`. A frequent
//! extension becomes the leftmost child of `a`. An infrequent one proves
//! that no node below `a` extends with `k` either, so the whole subtree is
//! skipped.
//!
//! Observation vectors are not stored in the tree. The traversal keeps one
//! column per depth holding `Z(a) AND X(k)` for the current path, so the
//! count for a child `c = a ∪ {j}` is one AND with `X(j)`.

use std::borrow::Cow;

use crate::bitdata::{
    check_sigma, preprocess, threshold, BitColumn, ItemOrder, TransactionDatabase,
};
use crate::preftree::{LdfsCursor, NodeId, PrefTree};
use crate::{Error, ItemId, Result};

/// Largest number of items mined when every itemset is frequent.
pub const MAX_ITEMS_AT_ZERO_THRESHOLD: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MineConfig {
    /// Relative minimum support, in `[0, 1]`.
    pub sigma: f64,
    /// Drop infrequent items and sort the rest by decreasing support
    /// before mining. Only meaningful when the whole item set is known.
    pub preprocess: bool,
    /// Skip the subtree below a failed extension. Turning it off walks
    /// the whole tree and gives the same result, slower.
    pub prune: bool,
}

impl MineConfig {
    pub fn new(sigma: f64) -> Self {
        MineConfig {
            sigma,
            preprocess: true,
            prune: true,
        }
    }

    pub fn without_preprocessing(mut self) -> Self {
        self.preprocess = false;
        self
    }

    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }
}

/// Work done by one traversal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TraversalStats {
    /// Candidate extensions whose support was counted.
    pub tested: u64,
    /// Frequent extensions added to the tree.
    pub inserted: usize,
}

impl std::ops::AddAssign for TraversalStats {
    fn add_assign(&mut self, rhs: Self) {
        self.tested += rhs.tested;
        self.inserted += rhs.inserted;
    }
}

/// Intersects the observation vector of a node with an item column and
/// returns the result with its support.
pub fn count_support_of_extension(path: &BitColumn, item: &BitColumn) -> Result<(BitColumn, u64)> {
    let v = path.intersect(item)?;
    let s = v.count_ones();
    Ok((v, s))
}

/// Extends `tree` with every frequent itemset containing item `k`.
///
/// Only nodes present before the call are visited; each frequent `(a, k)`
/// is inserted as the leftmost child of `a`. `k` must be larger than every
/// item the tree has seen, and `sigma` must give the tree's threshold.
pub fn fim_traversal(
    db: &TransactionDatabase,
    tree: &mut PrefTree,
    k: ItemId,
    sigma: f64,
) -> Result<TraversalStats> {
    check_traversal(db, tree, k, sigma)?;
    traverse(db, tree, k, true, |_, _, _| Ok(()), |_| {})
}

pub(crate) fn check_traversal(
    db: &TransactionDatabase,
    tree: &PrefTree,
    k: ItemId,
    sigma: f64,
) -> Result<()> {
    check_sigma(sigma, "minimum support")?;
    if k.index() >= db.n_items() {
        return Err(Error::ItemOrder(format!(
            "item {} is not in the database",
            k.0
        )));
    }
    if tree.n_transactions() != db.n_transactions() {
        return Err(Error::TransactionCount {
            tree: tree.n_transactions(),
            database: db.n_transactions(),
        });
    }
    let t = threshold(sigma, db.n_transactions());
    if t != tree.threshold() {
        return Err(Error::ThresholdMismatch {
            tree: tree.threshold(),
            requested: t,
        });
    }
    if let Some(last) = tree.last_item() {
        if k <= last {
            return Err(Error::ItemOrder(format!(
                "item {} does not follow the last incorporated item {}",
                k.0, last.0
            )));
        }
    }
    Ok(())
}

/// The traversal proper. `on_insert` sees the tree right after each
/// insertion, with the new node and its itemset; `on_test` sees every node
/// whose extension is counted, in visiting order. With `prune` off,
/// subtrees below a failed extension are still walked.
pub(crate) fn traverse<F, G>(
    db: &TransactionDatabase,
    tree: &mut PrefTree,
    k: ItemId,
    prune: bool,
    mut on_insert: F,
    mut on_test: G,
) -> Result<TraversalStats>
where
    F: FnMut(&PrefTree, NodeId, &[ItemId]) -> Result<()>,
    G: FnMut(NodeId),
{
    let n = db.n_transactions();
    let min = tree.threshold();
    let item_k = db.column(k);
    // stack[d] = Z(a) AND X(k) for the path node a at depth d
    let mut stack: Vec<BitColumn> = vec![item_k.clone()];
    let mut stats = TraversalStats::default();
    let mut itemset: Vec<ItemId> = Vec::new();
    let mut cursor = LdfsCursor::new(tree);

    while let Some(visit) = cursor.advance(tree) {
        let (node, depth) = (visit.node, visit.depth);
        on_test(node);
        stats.tested += 1;
        let support = if depth == 0 {
            item_k.count_ones()
        } else {
            if stack.len() <= depth {
                stack.resize_with(depth + 1, || BitColumn::zeros(n));
            }
            let (done, rest) = stack.split_at_mut(depth);
            let item = tree.item(node).expect("non-root node");
            rest[0].assign_and(&done[depth - 1], db.column(item))
        };
        if support >= min {
            let new = tree.push_child(node, k, support);
            stats.inserted += 1;
            itemset.clear();
            itemset.extend_from_slice(cursor.path());
            itemset.push(k);
            on_insert(tree, new, &itemset)?;
        } else if prune {
            cursor.skip_subtree();
        }
    }
    tree.set_last_item(k);
    Ok(stats)
}

/// Root-only tree for mining `db` at `sigma`, after the degenerate-input
/// checks shared by all drivers.
pub(crate) fn root_tree(db: &TransactionDatabase, sigma: f64) -> Result<PrefTree> {
    check_sigma(sigma, "minimum support")?;
    let n = db.n_transactions();
    if n == 0 {
        log::warn!("database has no transactions; returning the root-only tree");
        return Ok(PrefTree::new(0, 0));
    }
    let t = threshold(sigma, n);
    if t == 0 && db.n_items() > MAX_ITEMS_AT_ZERO_THRESHOLD {
        return Err(Error::ResourceLimit(format!(
            "every itemset is frequent at this minimum support; {} items would give 2^{} nodes",
            db.n_items(),
            db.n_items()
        )));
    }
    Ok(PrefTree::new(n, t))
}

/// Mines every frequent itemset of `db` in its current item order, without
/// preprocessing.
pub fn mine_prepared(db: &TransactionDatabase, sigma: f64) -> Result<PrefTree> {
    mine_items(db, sigma, true)
}

fn mine_items(db: &TransactionDatabase, sigma: f64, prune: bool) -> Result<PrefTree> {
    let mut tree = root_tree(db, sigma)?;
    if db.n_transactions() == 0 {
        return Ok(tree);
    }
    for k in db.items() {
        check_traversal(db, &tree, k, sigma)?;
        traverse(db, &mut tree, k, prune, |_, _, _| Ok(()), |_| {})?;
    }
    Ok(tree)
}

/// Mines all frequent itemsets. With preprocessing on, the tree is built
/// over the reordered frequent items and the returned [`ItemOrder`] maps
/// its items back to `db`; otherwise the order is the identity.
pub fn mine(db: &TransactionDatabase, config: &MineConfig) -> Result<(PrefTree, ItemOrder)> {
    let (prepared, order) = prepare(db, config)?;
    let tree = mine_items(&prepared, config.sigma, config.prune)?;
    Ok((tree, order))
}

/// The database a [`mine`] call actually walks, with its item order.
pub fn prepare<'a>(
    db: &'a TransactionDatabase,
    config: &MineConfig,
) -> Result<(Cow<'a, TransactionDatabase>, ItemOrder)> {
    check_sigma(config.sigma, "minimum support")?;
    if config.preprocess {
        let (p, order) = preprocess(db, config.sigma)?;
        Ok((Cow::Owned(p), order))
    } else {
        Ok((Cow::Borrowed(db), ItemOrder::identity(db)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitdata::tests::d5;
    use crate::Label;

    fn labelled(tree: &PrefTree, db: &TransactionDatabase) -> Vec<(Vec<Label>, u64)> {
        tree.enumerate(db.labels())
    }

    #[test]
    fn extension_counts() {
        let db = d5();
        let c = |l| db.column(db.item(l).unwrap());
        let (v, s) = count_support_of_extension(&BitColumn::ones(5), c(1)).unwrap();
        assert_eq!((v.to_string().as_str(), s), ("11010", 3));
        let (v, s) = count_support_of_extension(c(1), c(2)).unwrap();
        assert_eq!((v.to_string().as_str(), s), ("11000", 2));
        let (v, s) = count_support_of_extension(c(1), c(3)).unwrap();
        assert_eq!((v.to_string().as_str(), s), ("01000", 1));
        assert!(count_support_of_extension(c(1), &BitColumn::ones(4)).is_err());
    }

    #[test]
    fn d5_traversals_step_by_step() {
        let db = d5();
        let mut tree = PrefTree::new(5, threshold(0.4, 5));
        let st = fim_traversal(&db, &mut tree, ItemId(0), 0.4).unwrap();
        assert_eq!(labelled(&tree, &db), vec![(vec![], 5), (vec![1], 3)]);
        assert_eq!(
            st,
            TraversalStats {
                tested: 1,
                inserted: 1
            }
        );

        fim_traversal(&db, &mut tree, ItemId(1), 0.4).unwrap();
        assert_eq!(
            labelled(&tree, &db),
            vec![(vec![], 5), (vec![2], 4), (vec![1], 3), (vec![1, 2], 2)]
        );

        // (1,3) fails at node (1), so (1,2) is never tested
        let mut tested = Vec::new();
        let st = traverse(
            &db,
            &mut tree,
            ItemId(2),
            true,
            |_, _, _| Ok(()),
            |n| tested.push(n),
        )
        .unwrap();
        assert_eq!(
            st,
            TraversalStats {
                tested: 3,
                inserted: 2
            }
        );
        assert_eq!(tree.lookup_support(&[ItemId(2)]), Some(2));
        assert_eq!(tree.lookup_support(&[ItemId(1), ItemId(2)]), Some(2));
        assert_eq!(tree.lookup_support(&[ItemId(0), ItemId(2)]), None);
        let visited: Vec<Vec<ItemId>> = tested.iter().map(|&n| tree.itemset_of(n)).collect();
        assert_eq!(visited, vec![vec![], vec![ItemId(1)], vec![ItemId(0)]]);
    }

    #[test]
    fn d5_full_mine() {
        let db = d5();
        let (tree, order) = mine(&db, &MineConfig::new(0.4).without_preprocessing()).unwrap();
        assert_eq!(order, ItemOrder::identity(&db));
        let mut got = tree.enumerate(order.labels());
        got.iter_mut().for_each(|(s, _)| s.sort_unstable());
        got.sort();
        assert_eq!(
            got,
            vec![
                (vec![], 5),
                (vec![1], 3),
                (vec![1, 2], 2),
                (vec![2], 4),
                (vec![2, 3], 2),
                (vec![3], 2)
            ]
        );
        tree.validate().unwrap();

        let (tree, _) = mine(&db, &MineConfig::new(1.0)).unwrap();
        assert_eq!(tree.len(), 1);
    }

    #[test]
    fn d5_with_preprocessing() {
        let db = d5();
        let (tree, order) = mine(&db, &MineConfig::new(0.4)).unwrap();
        assert_eq!(order.labels(), &[2, 1, 3]);
        assert_eq!(
            tree.enumerate(order.labels()),
            vec![
                (vec![], 5),
                (vec![3], 2),
                (vec![1], 3),
                (vec![2], 4),
                (vec![2, 3], 2),
                (vec![2, 1], 2)
            ]
        );
    }

    #[test]
    fn zero_sigma_gives_complete_tree() {
        let db = TransactionDatabase::from_transactions(vec![vec![1, 2, 3, 4, 5]]);
        let (tree, _) = mine(&db, &MineConfig::new(0.0)).unwrap();
        assert_eq!(tree.len(), 32);
        let db = TransactionDatabase::from_transactions(vec![(0..30).collect::<Vec<_>>()]);
        assert!(matches!(
            mine(&db, &MineConfig::new(0.0)),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn empty_database() {
        let db = TransactionDatabase::new(0);
        let (tree, _) = mine(&db, &MineConfig::new(0.5)).unwrap();
        assert_eq!(tree.len(), 1);
    }

    #[test]
    fn contract_violations() {
        let db = d5();
        let mut tree = mine_prepared(&db, 0.4).unwrap();
        assert!(matches!(
            fim_traversal(&db, &mut tree, ItemId(1), 0.4),
            Err(Error::ItemOrder(_))
        ));
        let mut db2 = db.clone();
        db2.append_item(9, "11111".parse().unwrap()).unwrap();
        assert!(matches!(
            fim_traversal(&db2, &mut tree, ItemId(3), 0.6),
            Err(Error::ThresholdMismatch {
                tree: 2,
                requested: 3
            })
        ));
        assert!(fim_traversal(&db2, &mut tree, ItemId(3), 0.4).is_ok());
        assert!(fim_traversal(&db2, &mut tree, ItemId(7), 0.4).is_err());
    }

    #[test]
    fn pruning_does_not_change_output() {
        let db = d5();
        let mut a = PrefTree::new(5, 2);
        let mut b = PrefTree::new(5, 2);
        let mut tested = (0, 0);
        for k in db.items() {
            tested.0 += traverse(&db, &mut a, k, true, |_, _, _| Ok(()), |_| {})
                .unwrap()
                .tested;
            tested.1 += traverse(&db, &mut b, k, false, |_, _, _| Ok(()), |_| {})
                .unwrap()
                .tested;
        }
        assert_eq!(a, b);
        assert!(tested.0 < tested.1);
    }
}
