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

//! Association rules generated alongside frequent itemsets.
//!
//! For a frequent itemset `C`, [`rule`] builds the tree of antecedents
//! `A ⊂ C` whose rule `A => C∖A` reaches the minimum confidence. Level one
//! holds the `|C| - 1`-subsets; below that, a node's children are its
//! intersections with the siblings to its left. Confidence only drops as
//! `A` shrinks, so a failing node never has a passing descendant and the
//! tree reaches every qualifying antecedent exactly once.
//!
//! [`arm_traversal`] runs this for every itemset a traversal adds. All
//! subsets of a new itemset are already in the prefix tree at that point,
//! so their supports are plain lookups.

use crate::bitdata::TransactionDatabase;
use crate::fim::{check_traversal, traverse, TraversalStats};
use crate::preftree::PrefTree;
use crate::rule::{Confidence, Rule};
use crate::{Error, ItemId, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct RuleNode {
    antecedent: Vec<ItemId>,
    support: u64,
    // left to right
    children: Vec<usize>,
}

/// Tree of confident antecedents of one frequent itemset. The root is the
/// itemset itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleTree {
    nodes: Vec<RuleNode>,
}

impl RuleTree {
    pub fn itemset(&self) -> &[ItemId] {
        &self.nodes[0].antecedent
    }

    pub fn support(&self) -> u64 {
        self.nodes[0].support
    }

    /// Number of nodes, root included.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() == 1
    }

    fn rdfs(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![0];
        while let Some(n) = stack.pop() {
            out.push(n);
            stack.extend(&self.nodes[n].children);
        }
        out
    }

    /// Antecedents with their supports, in RDFS order, root excluded.
    pub fn antecedents(&self) -> impl Iterator<Item = (&[ItemId], u64)> + '_ {
        self.rdfs()
            .into_iter()
            .skip(1)
            .map(|n| (self.nodes[n].antecedent.as_slice(), self.nodes[n].support))
    }

    /// One rule per non-root node, in RDFS order.
    pub fn rules(&self) -> Vec<Rule> {
        let c = self.itemset();
        let sc = self.support();
        self.antecedents()
            .map(|(a, sa)| Rule {
                antecedent: a.to_vec(),
                consequent: c.iter().copied().filter(|i| !a.contains(i)).collect(),
                support: sc,
                confidence: Confidence::new(sc, sa),
            })
            .collect()
    }
}

/// Builds the antecedent tree of `itemset` (strictly increasing, support
/// `support`) for minimum confidence `tau`. `lookup` returns subset
/// supports.
pub fn rule<F>(itemset: &[ItemId], support: u64, tau: f64, lookup: F) -> Result<RuleTree>
where
    F: Fn(&[ItemId]) -> Option<u64>,
{
    let get = |a: &[ItemId]| {
        lookup(a).ok_or_else(|| Error::MissingSubset(a.iter().map(|i| i.0).collect()))
    };
    let mut nodes = vec![RuleNode {
        antecedent: itemset.to_vec(),
        support,
        children: Vec::new(),
    }];
    if itemset.len() < 2 {
        return Ok(RuleTree { nodes });
    }

    // dropping the largest item gives the leftmost child
    for drop in (0..itemset.len()).rev() {
        let a: Vec<ItemId> = itemset
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != drop)
            .map(|(_, &i)| i)
            .collect();
        let sa = get(&a)?;
        if Confidence::new(support, sa).meets(tau) {
            let id = nodes.len();
            nodes.push(RuleNode {
                antecedent: a,
                support: sa,
                children: Vec::new(),
            });
            nodes[0].children.push(id);
        }
    }

    // (node, parent) pairs, rightmost on top
    let mut stack: Vec<(usize, usize)> = nodes[0].children.iter().map(|&c| (c, 0)).collect();
    while let Some((a, parent)) = stack.pop() {
        if nodes[a].antecedent.len() > 1 {
            let siblings = nodes[parent].children.clone();
            let pos = siblings
                .iter()
                .position(|&s| s == a)
                .expect("child of its parent");
            for &b in &siblings[..pos] {
                let u: Vec<ItemId> = nodes[a]
                    .antecedent
                    .iter()
                    .copied()
                    .filter(|i| nodes[b].antecedent.contains(i))
                    .collect();
                let su = get(&u)?;
                if Confidence::new(support, su).meets(tau) {
                    let id = nodes.len();
                    nodes.push(RuleNode {
                        antecedent: u,
                        support: su,
                        children: Vec::new(),
                    });
                    nodes[a].children.push(id);
                }
            }
        }
        stack.extend(nodes[a].children.iter().map(|&c| (c, a)));
    }
    Ok(RuleTree { nodes })
}

/// [`fim_traversal`](crate::fim::fim_traversal) that also returns the
/// antecedent tree of every itemset it adds, in insertion order.
pub fn arm_traversal(
    db: &TransactionDatabase,
    tree: &mut PrefTree,
    k: ItemId,
    sigma: f64,
    tau: f64,
) -> Result<(TraversalStats, Vec<RuleTree>)> {
    check_traversal(db, tree, k, sigma)?;
    crate::bitdata::check_sigma(tau, "minimum confidence")?;
    let mut out = Vec::new();
    let stats = traverse(
        db,
        tree,
        k,
        true,
        |t, node, itemset| {
            out.push(rule(itemset, t.support(node), tau, |a| {
                t.lookup_support(a)
            })?);
            Ok(())
        },
        |_| {},
    )?;
    Ok((stats, out))
}

/// Mines frequent itemsets and rules over the items of `db` in their
/// current order. Rules are grouped by itemset in discovery order.
pub fn mine_rules(db: &TransactionDatabase, sigma: f64, tau: f64) -> Result<(PrefTree, Vec<Rule>)> {
    crate::bitdata::check_sigma(tau, "minimum confidence")?;
    let mut tree = crate::fim::root_tree(db, sigma)?;
    let mut rules = Vec::new();
    if db.n_transactions() == 0 {
        return Ok((tree, rules));
    }
    for k in db.items() {
        let (_, trees) = arm_traversal(db, &mut tree, k, sigma, tau)?;
        rules.extend(trees.iter().flat_map(RuleTree::rules));
    }
    Ok((tree, rules))
}
