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

//! Planar ordered prefix tree of itemsets.
//!
//! Each node stores only its extension item and support; its itemset is
//! the sequence of extension items on the path from the root. Children of
//! a node are ordered so that reading them left to right gives strictly
//! decreasing items: a new item always becomes the leftmost child, and the
//! oldest item under the root is its rightmost child.
//!
//! With that layout, the left depth-first order (LDFS) visits every itemset
//! after all of its subsets, which is what lets a single pass extend the
//! tree with a new item.

use std::io::{BufRead, Write};

use crate::{Error, ItemId, Label, Result};

const NO_ITEM: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    #[inline]
    fn ix(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct Node {
    item: u32,
    support: u64,
    parent: u32,
    depth: u32,
    // ascending item order, i.e. right to left
    children: Vec<NodeId>,
}

/// Removed subtree summary returned by [`PrefTree::del_rightmost`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Removed {
    pub item: ItemId,
    pub nodes: usize,
}

#[derive(Clone, Debug)]
pub struct PrefTree {
    nodes: Vec<Node>,
    free: Vec<NodeId>,
    live: usize,
    n_transactions: usize,
    threshold: u64,
    last_item: Option<ItemId>,
}

impl PrefTree {
    /// Root-only tree for a database of `n_transactions` rows, whose
    /// non-root nodes must have support at least `threshold`.
    pub fn new(n_transactions: usize, threshold: u64) -> Self {
        PrefTree {
            nodes: vec![Node {
                item: NO_ITEM,
                support: n_transactions as u64,
                parent: NO_ITEM,
                depth: 0,
                children: Vec::new(),
            }],
            free: Vec::new(),
            live: 1,
            n_transactions,
            threshold,
            last_item: None,
        }
    }

    #[inline]
    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    /// Number of nodes, root included.
    pub fn len(&self) -> usize {
        self.live
    }

    /// True when only the root is left.
    pub fn is_empty(&self) -> bool {
        self.live == 1
    }

    pub fn n_transactions(&self) -> usize {
        self.n_transactions
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// Largest item a traversal has been run with.
    pub fn last_item(&self) -> Option<ItemId> {
        self.last_item
    }

    pub(crate) fn set_last_item(&mut self, item: ItemId) {
        self.last_item = Some(item);
    }

    #[inline]
    pub fn support(&self, node: NodeId) -> u64 {
        self.nodes[node.ix()].support
    }

    /// Extension item of `node`; `None` for the root.
    #[inline]
    pub fn item(&self, node: NodeId) -> Option<ItemId> {
        match self.nodes[node.ix()].item {
            NO_ITEM => None,
            i => Some(ItemId(i)),
        }
    }

    /// Depth of `node`, equal to the size of its itemset.
    #[inline]
    pub fn depth(&self, node: NodeId) -> usize {
        self.nodes[node.ix()].depth as usize
    }

    pub fn parent(&self, node: NodeId) -> Option<NodeId> {
        match self.nodes[node.ix()].parent {
            NO_ITEM => None,
            p => Some(NodeId(p)),
        }
    }

    /// Children from left to right (decreasing items).
    pub fn children(&self, node: NodeId) -> impl DoubleEndedIterator<Item = NodeId> + '_ {
        self.nodes[node.ix()].children.iter().rev().copied()
    }

    pub fn child_count(&self, node: NodeId) -> usize {
        self.nodes[node.ix()].children.len()
    }

    pub fn rightmost_child(&self, node: NodeId) -> Option<NodeId> {
        self.nodes[node.ix()].children.first().copied()
    }

    pub fn itemset_of(&self, node: NodeId) -> Vec<ItemId> {
        let mut items = Vec::with_capacity(self.depth(node));
        let mut cur = node;
        while let Some(item) = self.item(cur) {
            items.push(item);
            cur = self.parent(cur).expect("non-root node has a parent");
        }
        items.reverse();
        items
    }

    fn alloc(&mut self, node: Node) -> NodeId {
        self.live += 1;
        if let Some(id) = self.free.pop() {
            self.nodes[id.ix()] = node;
            id
        } else {
            self.nodes.push(node);
            NodeId(self.nodes.len() as u32 - 1)
        }
    }

    /// Adds `(parent, item)` as the leftmost child of `parent`.
    ///
    /// `item` must exceed the parent's extension item and every existing
    /// child's item.
    pub fn insert_leftmost_child(
        &mut self,
        parent: NodeId,
        item: ItemId,
        support: u64,
    ) -> Result<NodeId> {
        let p = &self.nodes[parent.ix()];
        if p.item != NO_ITEM && item.0 <= p.item {
            return Err(Error::ItemOrder(format!(
                "item {} cannot extend a node ending in item {}",
                item.0, p.item
            )));
        }
        if let Some(&last) = p.children.last() {
            let left = self.nodes[last.ix()].item;
            if item.0 <= left {
                return Err(Error::ItemOrder(format!(
                    "item {} is not larger than the leftmost child item {}",
                    item.0, left
                )));
            }
        }
        Ok(self.push_child(parent, item, support))
    }

    #[inline]
    pub(crate) fn push_child(&mut self, parent: NodeId, item: ItemId, support: u64) -> NodeId {
        let depth = self.nodes[parent.ix()].depth + 1;
        let id = self.alloc(Node {
            item: item.0,
            support,
            parent: parent.0,
            depth,
            children: Vec::new(),
        });
        self.nodes[parent.ix()].children.push(id);
        id
    }

    /// Removes the rightmost child of the root together with its subtree:
    /// the oldest item and every itemset containing it. Returns `None`, and
    /// changes nothing, when the root has no children.
    pub fn del_rightmost(&mut self) -> Option<Removed> {
        let root = self.root().ix();
        if self.nodes[root].children.is_empty() {
            return None;
        }
        let top = self.nodes[root].children.remove(0);
        let item = ItemId(self.nodes[top.ix()].item);
        let mut stack = vec![top];
        let mut nodes = 0;
        while let Some(id) = stack.pop() {
            let node = &mut self.nodes[id.ix()];
            stack.append(&mut node.children);
            node.item = NO_ITEM;
            node.parent = NO_ITEM;
            self.free.push(id);
            nodes += 1;
        }
        self.live -= nodes;
        Some(Removed { item, nodes })
    }

    /// Itemsets of every node in the subtree of `node`, in LDFS order.
    pub fn subtree_itemsets(&self, node: NodeId) -> Vec<Vec<ItemId>> {
        let prefix = self.itemset_of(node);
        let mut out = Vec::new();
        let mut cursor = LdfsCursor::from_node(self, node);
        while cursor.advance(self).is_some() {
            let mut set = prefix.clone();
            set.extend_from_slice(cursor.path());
            out.push(set);
        }
        out
    }

    /// Node holding `itemset` (strictly increasing), if present.
    pub fn find(&self, itemset: &[ItemId]) -> Option<NodeId> {
        let mut cur = self.root();
        for &item in itemset {
            let children = &self.nodes[cur.ix()].children;
            let pos = children
                .binary_search_by_key(&item.0, |c| self.nodes[c.ix()].item)
                .ok()?;
            cur = children[pos];
        }
        Some(cur)
    }

    /// Support of `itemset` if it is in the tree.
    pub fn lookup_support(&self, itemset: &[ItemId]) -> Option<u64> {
        self.find(itemset).map(|n| self.support(n))
    }

    pub fn ldfs(&self) -> Ldfs<'_> {
        Ldfs {
            tree: self,
            cursor: LdfsCursor::new(self),
        }
    }

    /// Right depth-first order: each node, then its children from right to
    /// left.
    pub fn rdfs(&self) -> impl Iterator<Item = NodeId> + '_ {
        let mut stack = vec![self.root()];
        std::iter::from_fn(move || {
            let node = stack.pop()?;
            // leftmost pushed first so the rightmost is on top
            stack.extend(self.children(node));
            Some(node)
        })
    }

    /// Every `(itemset, support)` in LDFS order, with items mapped through
    /// `labels` (indexed by internal item).
    pub fn enumerate(&self, labels: &[Label]) -> Vec<(Vec<Label>, u64)> {
        let mut out = Vec::with_capacity(self.len());
        let mut cursor = LdfsCursor::new(self);
        while let Some(v) = cursor.advance(self) {
            let set = cursor.path().iter().map(|i| labels[i.index()]).collect();
            out.push((set, self.support(v.node)));
        }
        out
    }

    /// Sum of itemset sizes over all nodes (the root contributes 0).
    pub fn total_itemset_size(&self) -> u64 {
        self.ldfs().map(|n| self.depth(n) as u64).sum()
    }

    /// Averaged itemset size. Excludes the empty itemset unless
    /// `include_empty`; `None` when there is nothing to average.
    pub fn average_size(&self, include_empty: bool) -> Option<f64> {
        let count = if include_empty {
            self.len()
        } else {
            self.len() - 1
        };
        (count > 0).then(|| self.total_itemset_size() as f64 / count as f64)
    }

    /// Checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Invariant(msg));
        if self.support(self.root()) != self.n_transactions as u64 {
            return bad("root support differs from the transaction count".into());
        }
        let mut seen = 0;
        for node in self.ldfs() {
            seen += 1;
            let n = &self.nodes[node.ix()];
            for w in n.children.windows(2) {
                if self.nodes[w[0].ix()].item >= self.nodes[w[1].ix()].item {
                    return bad(format!(
                        "children of {:?} are not strictly ordered",
                        self.itemset_of(node)
                    ));
                }
            }
            for &c in &n.children {
                let child = &self.nodes[c.ix()];
                if child.parent != node.0 || child.depth != n.depth + 1 {
                    return bad(format!(
                        "broken parent link below {:?}",
                        self.itemset_of(node)
                    ));
                }
                if n.item != NO_ITEM && child.item <= n.item {
                    return bad(format!(
                        "item does not increase below {:?}",
                        self.itemset_of(node)
                    ));
                }
                if child.support > n.support {
                    return bad(format!(
                        "support increases below {:?}",
                        self.itemset_of(node)
                    ));
                }
                if child.support < self.threshold {
                    return bad(format!("infrequent node {:?}", self.itemset_of(c)));
                }
                if self.last_item.is_none_or(|l| child.item > l.0) {
                    return bad(format!(
                        "node {:?} exceeds the last incorporated item",
                        self.itemset_of(c)
                    ));
                }
            }
        }
        if seen != self.live {
            return bad(format!("{} reachable nodes, {} recorded", seen, self.live));
        }
        Ok(())
    }

    /// Writes the tree as text: a small `#` header, then one node per line
    /// in LDFS order as `depth TAB label TAB support`, the root being
    /// `0 TAB - TAB N`. `labels` maps internal items to labels and is
    /// recorded in the header so the item order can be restored.
    pub fn write_dump<W: Write>(&self, mut out: W, labels: &[Label]) -> Result<()> {
        let items = self.last_item.map_or(0, |i| i.index() + 1);
        writeln!(out, "# prefrec tree")?;
        writeln!(
            out,
            "# transactions={} threshold={} items={}",
            self.n_transactions, self.threshold, items
        )?;
        let order: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        writeln!(out, "# order={}", order.join(" "))?;
        for node in self.ldfs() {
            match self.item(node) {
                None => writeln!(out, "0\t-\t{}", self.support(node))?,
                Some(item) => writeln!(
                    out,
                    "{}\t{}\t{}",
                    self.depth(node),
                    labels[item.index()],
                    self.support(node)
                )?,
            }
        }
        out.flush()?;
        Ok(())
    }

    /// Reads a dump written by [`write_dump`](Self::write_dump) and checks
    /// all invariants. Returns the tree and the item order (internal item
    /// `i` is `order[i]`). `fallback_order` is used when the dump has no
    /// order header.
    pub fn read_dump<R: BufRead>(
        reader: R,
        fallback_order: Option<&[Label]>,
    ) -> Result<(PrefTree, Vec<Label>)> {
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let mut header: Option<(usize, u64, usize)> = None;
        let mut order: Option<Vec<Label>> = fallback_order.map(<[Label]>::to_vec);
        let mut tree: Option<PrefTree> = None;
        let mut index = std::collections::HashMap::new();
        let mut path: Vec<NodeId> = Vec::new();

        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = lineno + 1;
            if let Some(meta) = line.strip_prefix('#') {
                let meta = meta.trim();
                if let Some(list) = meta.strip_prefix("order=") {
                    let labels = list
                        .split_ascii_whitespace()
                        .map(|t| {
                            t.parse::<Label>()
                                .map_err(|_| perr(lineno, format!("bad label {t:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    order = Some(labels);
                    continue;
                }
                for kv in meta.split_ascii_whitespace() {
                    let Some((key, value)) = kv.split_once('=') else {
                        continue;
                    };
                    let h = header.get_or_insert((0, 0, 0));
                    let parsed = value
                        .parse::<u64>()
                        .map_err(|_| perr(lineno, format!("bad {key}")));
                    match key {
                        "transactions" => h.0 = parsed? as usize,
                        "threshold" => h.1 = parsed?,
                        "items" => h.2 = parsed? as usize,
                        _ => {}
                    }
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(perr(lineno, "expected depth, label and support".into()));
            }
            let depth: usize = fields[0]
                .parse()
                .map_err(|_| perr(lineno, "bad depth".into()))?;
            let support: u64 = fields[2]
                .parse()
                .map_err(|_| perr(lineno, "bad support".into()))?;
            let Some(t) = tree.as_mut() else {
                if depth != 0 || fields[1] != "-" {
                    return Err(perr(lineno, "first node must be the root".into()));
                }
                let (n, thr, _) = header.unwrap_or((support as usize, 0, 0));
                if n as u64 != support {
                    return Err(perr(
                        lineno,
                        "root support differs from the transaction count".into(),
                    ));
                }
                let ord = order
                    .as_ref()
                    .ok_or_else(|| perr(lineno, "no item order available".into()))?;
                for (i, &l) in ord.iter().enumerate() {
                    if index.insert(l, ItemId::from(i)).is_some() {
                        return Err(perr(lineno, format!("label {l} repeated in item order")));
                    }
                }
                let mut t = PrefTree::new(n, thr);
                if let Some((_, _, items)) = header {
                    if items > 0 {
                        t.last_item = Some(ItemId::from(items - 1));
                    }
                }
                path.push(t.root());
                tree = Some(t);
                continue;
            };
            if depth == 0 || depth > path.len() {
                return Err(perr(
                    lineno,
                    format!("depth {depth} does not follow the previous node"),
                ));
            }
            let label: Label = fields[1]
                .parse()
                .map_err(|_| perr(lineno, "bad label".into()))?;
            let item = *index
                .get(&label)
                .ok_or_else(|| perr(lineno, format!("label {label} not in item order")))?;
            path.truncate(depth);
            let parent = *path.last().expect("root stays on the path");
            // dumps list siblings left to right; stored order is restored below
            let node = t.push_child(parent, item, support);
            path.push(node);
        }
        let mut t = tree.ok_or_else(|| perr(0, "empty tree dump".into()))?;
        for node in &mut t.nodes {
            node.children.reverse();
        }
        if header.is_none_or(|h| h.2 == 0) {
            t.last_item = t.ldfs().filter_map(|n| t.item(n)).max();
        }
        t.validate().map_err(|e| perr(0, e.to_string()))?;
        Ok((t, order.expect("order was checked at the root")))
    }
}

/// Trees compare equal when they have the same shape, child order, items
/// and supports.
impl PartialEq for PrefTree {
    fn eq(&self, other: &Self) -> bool {
        self.n_transactions == other.n_transactions
            && self.threshold == other.threshold
            && self.len() == other.len()
            && self.ldfs().zip(other.ldfs()).all(|(a, b)| {
                self.depth(a) == other.depth(b)
                    && self.item(a) == other.item(b)
                    && self.support(a) == other.support(b)
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Visit {
    pub node: NodeId,
    pub depth: usize,
}

/// Left depth-first cursor that does not borrow the tree between steps, so
/// the tree can be extended while it is being walked.
///
/// A node's children are captured when the node is visited: children added
/// afterwards are not visited by this cursor.
#[derive(Clone, Debug)]
pub struct LdfsCursor {
    stack: Vec<(NodeId, usize)>,
    pending: usize,
    path: Vec<ItemId>,
    base_depth: usize,
}

impl LdfsCursor {
    pub fn new(tree: &PrefTree) -> Self {
        Self::from_node(tree, tree.root())
    }

    /// Cursor over the subtree of `node` only.
    pub fn from_node(tree: &PrefTree, node: NodeId) -> Self {
        let d = tree.depth(node);
        LdfsCursor {
            stack: vec![(node, d)],
            pending: 0,
            path: Vec::new(),
            base_depth: d,
        }
    }

    pub fn advance(&mut self, tree: &PrefTree) -> Option<Visit> {
        let (node, depth) = self.stack.pop()?;
        let rel = depth - self.base_depth;
        self.path.truncate(rel.saturating_sub(1));
        if rel > 0 {
            self.path
                .push(tree.item(node).expect("non-root below the start node"));
        }
        let children = &tree.nodes[node.ix()].children;
        // ascending storage: the leftmost child ends on top of the stack
        self.stack.extend(children.iter().map(|&c| (c, depth + 1)));
        self.pending = children.len();
        Some(Visit { node, depth })
    }

    /// Skips the subtree of the node last returned by `advance`.
    pub fn skip_subtree(&mut self) {
        let n = self.stack.len() - self.pending;
        self.stack.truncate(n);
        self.pending = 0;
    }

    /// Extension items from the start node down to the current node.
    pub fn path(&self) -> &[ItemId] {
        &self.path
    }
}

/// Borrowing LDFS iterator with subtree skipping.
pub struct Ldfs<'a> {
    tree: &'a PrefTree,
    cursor: LdfsCursor,
}

impl Ldfs<'_> {
    /// After this call the next node yielded is the first one outside the
    /// subtree of the node just yielded.
    pub fn skip_subtree(&mut self) {
        self.cursor.skip_subtree();
    }

    pub fn path(&self) -> &[ItemId] {
        self.cursor.path()
    }
}

impl Iterator for Ldfs<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        self.cursor.advance(self.tree).map(|v| v.node)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn it(v: &[u32]) -> Vec<ItemId> {
        v.iter().map(|&i| ItemId(i)).collect()
    }

    /// Complete prefix tree over items `0..n`, built item by item the way
    /// the miner grows trees: every existing node gains `(node, k)`.
    pub(crate) fn complete(n: u32) -> PrefTree {
        let mut t = PrefTree::new(0, 0);
        for k in 0..n {
            let nodes: Vec<NodeId> = t.ldfs().collect();
            for node in nodes {
                t.insert_leftmost_child(node, ItemId(k), 0).unwrap();
            }
            t.set_last_item(ItemId(k));
        }
        t
    }

    /// Items rendered 1-based, as in the usual figures.
    fn order(t: &PrefTree, nodes: impl Iterator<Item = NodeId>) -> Vec<Vec<u32>> {
        nodes
            .map(|n| t.itemset_of(n).iter().map(|i| i.0 + 1).collect())
            .collect()
    }

    #[test]
    fn ldfs_of_complete_trees() {
        let t = complete(2);
        assert_eq!(
            order(&t, t.ldfs()),
            vec![vec![], vec![2], vec![1], vec![1, 2]]
        );
        let t = complete(3);
        assert_eq!(
            order(&t, t.ldfs()),
            vec![
                vec![],
                vec![3],
                vec![2],
                vec![2, 3],
                vec![1],
                vec![1, 3],
                vec![1, 2],
                vec![1, 2, 3]
            ]
        );
    }

    #[test]
    fn ldfs_skip() {
        let t = complete(3);
        let mut it = t.ldfs();
        let mut seen = Vec::new();
        while let Some(n) = it.next() {
            let set: Vec<u32> = t.itemset_of(n).iter().map(|i| i.0 + 1).collect();
            if set == [2] {
                it.skip_subtree();
            }
            seen.push(set);
        }
        assert_eq!(
            seen,
            vec![
                vec![],
                vec![3],
                vec![2],
                vec![1],
                vec![1, 3],
                vec![1, 2],
                vec![1, 2, 3]
            ]
        );

        let mut it = t.ldfs();
        it.next();
        it.skip_subtree();
        assert_eq!(it.next(), None);
    }

    #[test]
    fn rdfs_orders() {
        let t = complete(2);
        assert_eq!(
            order(&t, t.rdfs()),
            vec![vec![], vec![1], vec![1, 2], vec![2]]
        );
        let t = complete(3);
        assert_eq!(
            order(&t, t.rdfs()),
            vec![
                vec![],
                vec![1],
                vec![1, 2],
                vec![1, 2, 3],
                vec![1, 3],
                vec![2],
                vec![2, 3],
                vec![3]
            ]
        );
        let t = PrefTree::new(4, 0);
        assert_eq!(t.rdfs().collect::<Vec<_>>(), vec![t.root()]);
    }

    #[test]
    fn itemset_readout() {
        let mut t = PrefTree::new(5, 0);
        assert!(t.itemset_of(t.root()).is_empty());
        let a = t.insert_leftmost_child(t.root(), ItemId(1), 3).unwrap();
        let b = t.insert_leftmost_child(a, ItemId(2), 2).unwrap();
        assert_eq!(t.itemset_of(b), it(&[1, 2]));
        let t3 = complete(3);
        let left = t3.children(t3.root()).next().unwrap();
        assert_eq!(t3.itemset_of(left), it(&[2]));
    }

    #[test]
    fn insert_order_is_enforced() {
        let mut t = PrefTree::new(5, 0);
        let root = t.root();
        t.insert_leftmost_child(root, ItemId(0), 3).unwrap();
        let two = t.insert_leftmost_child(root, ItemId(1), 4).unwrap();
        let kids: Vec<_> = t.children(root).map(|c| t.item(c).unwrap()).collect();
        assert_eq!(kids, it(&[1, 0]));
        assert!(matches!(
            t.insert_leftmost_child(two, ItemId(0), 1),
            Err(Error::ItemOrder(_))
        ));
        assert!(matches!(
            t.insert_leftmost_child(root, ItemId(1), 1),
            Err(Error::ItemOrder(_))
        ));
        let leaf = t.find(&it(&[0])).unwrap();
        let n = t.insert_leftmost_child(leaf, ItemId(2), 1).unwrap();
        assert_eq!(t.child_count(leaf), 1);
        assert_eq!(t.itemset_of(n), it(&[0, 2]));
    }

    #[test]
    fn del_rightmost_on_complete_tree() {
        let mut t = complete(3);
        let removed = t.del_rightmost().unwrap();
        assert_eq!(
            removed,
            Removed {
                item: ItemId(0),
                nodes: 4
            }
        );
        assert_eq!(
            order(&t, t.ldfs()),
            vec![vec![], vec![3], vec![2], vec![2, 3]]
        );
        t.validate().unwrap();

        let mut t = PrefTree::new(3, 0);
        assert_eq!(t.del_rightmost(), None);
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn freed_slots_are_reused() {
        let mut t = complete(4);
        let before = t.nodes.len();
        t.del_rightmost();
        assert_eq!(t.len(), 8);
        let nodes: Vec<NodeId> = t.ldfs().collect();
        for n in nodes {
            t.insert_leftmost_child(n, ItemId(4), 0).unwrap();
        }
        assert_eq!(t.len(), 16);
        assert_eq!(t.nodes.len(), before);
    }

    #[test]
    fn complete_tree_properties() {
        for n in 0..=10 {
            let t = complete(n);
            assert_eq!(t.len(), 1 << n);
            for node in t.ldfs() {
                if node == t.root() {
                    continue;
                }
                let set = t.itemset_of(node);
                let is_leaf = t.child_count(node) == 0;
                let last_is_max = set.last() == Some(&ItemId(n - 1));
                let parent = t.parent(node).unwrap();
                let is_leftmost = t.children(parent).next() == Some(node);
                assert_eq!(is_leaf, last_is_max);
                assert_eq!(is_leaf, is_leftmost);
                let mut cursor = LdfsCursor::from_node(&t, node);
                let mut below = Vec::new();
                while let Some(v) = cursor.advance(&t) {
                    below.push(t.itemset_of(v.node));
                }
                assert!(below.iter().all(|sub| sub.starts_with(&set)));
                assert_eq!(t.subtree_itemsets(node), below);
            }
        }
    }

    #[test]
    fn subset_precedes_superset_in_ldfs() {
        let t = complete(6);
        let seq: Vec<Vec<ItemId>> = t.ldfs().map(|n| t.itemset_of(n)).collect();
        let pos: std::collections::HashMap<_, _> = seq
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        for (i, s) in seq.iter().enumerate() {
            for mask in 0..(1u32 << s.len()) {
                let sub: Vec<ItemId> = (0..s.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| s[b])
                    .collect();
                if sub.len() < s.len() {
                    assert!(pos[&sub] < i);
                }
            }
        }
    }

    #[test]
    fn dump_round_trip_and_validation() {
        let t = complete(4);
        let labels = [10, 20, 30, 40];
        let mut buf = Vec::new();
        t.write_dump(&mut buf, &labels).unwrap();
        let (back, order) = PrefTree::read_dump(buf.as_slice(), None).unwrap();
        assert_eq!(order, labels);
        assert_eq!(back, t);
        assert_eq!(back.last_item(), Some(ItemId(3)));

        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\n0\t-\t0\n1\t40\t0\n"));

        // child with larger support than its parent
        let bad = "0\t-\t5\n1\t2\t3\n2\t3\t4\n";
        assert!(PrefTree::read_dump(bad.as_bytes(), Some(&[1, 2, 3])).is_err());
        // siblings out of order
        let bad = "0\t-\t5\n1\t2\t3\n1\t3\t2\n";
        assert!(PrefTree::read_dump(bad.as_bytes(), Some(&[1, 2, 3])).is_err());
        // depth jump
        let bad = "0\t-\t5\n2\t2\t3\n";
        assert!(PrefTree::read_dump(bad.as_bytes(), Some(&[1, 2, 3])).is_err());
        let good = "0\t-\t5\n1\t3\t2\n1\t2\t4\n2\t3\t2\n";
        let (t, _) = PrefTree::read_dump(good.as_bytes(), Some(&[1, 2, 3])).unwrap();
        assert_eq!(t.lookup_support(&it(&[1, 2])), Some(2));
    }
}
