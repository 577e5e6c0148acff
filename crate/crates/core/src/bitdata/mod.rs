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

//! Columnar binary transaction store.
//!
//! A database of `N` transactions over `n` items is held as `n` packed
//! [`BitColumn`]s of `N` bits each. Columns are addressed by [`ItemId`];
//! the column order is the item order used by every prefix tree built over
//! the database. External labels are kept alongside for I/O.

mod column;
mod io;

use std::collections::HashMap;

pub use column::BitColumn;
pub use io::LoadStats;

use crate::{Error, ItemId, Label, Result};

/// Smallest integer support `T` with `T >= sigma * n_transactions`.
///
/// An itemset is frequent iff its support is at least this value. Products
/// within a relative `1e-9` of an integer snap to that integer, so that
/// e.g. `0.7 * 10` yields 7 rather than 8.
pub fn threshold(sigma: f64, n_transactions: usize) -> u64 {
    let x = sigma * n_transactions as f64;
    if x <= 0.0 {
        return 0;
    }
    let nearest = x.round();
    if (x - nearest).abs() <= 1e-9 * x.max(1.0) {
        nearest as u64
    } else {
        x.ceil() as u64
    }
}

pub(crate) fn check_sigma(sigma: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&sigma) {
        return Err(Error::Config(format!(
            "{what} must lie in [0, 1], got {sigma}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Default)]
pub struct TransactionDatabase {
    n_transactions: usize,
    labels: Vec<Label>,
    columns: Vec<BitColumn>,
    index: HashMap<Label, ItemId>,
}

impl TransactionDatabase {
    /// A database with `n_transactions` rows and no items yet.
    pub fn new(n_transactions: usize) -> Self {
        TransactionDatabase {
            n_transactions,
            ..Default::default()
        }
    }

    /// Builds a database from transactions given as label lists. Columns are
    /// created in ascending label order; duplicate labels in a transaction
    /// are ignored.
    pub fn from_transactions<T, I>(transactions: T) -> Self
    where
        T: IntoIterator<Item = I>,
        I: IntoIterator<Item = Label>,
    {
        let rows: Vec<Vec<Label>> = transactions
            .into_iter()
            .map(|t| t.into_iter().collect())
            .collect();
        let mut labels: Vec<Label> = rows.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let mut db = TransactionDatabase::new(rows.len());
        for &label in &labels {
            let item = ItemId::from(db.labels.len());
            db.labels.push(label);
            db.index.insert(label, item);
            db.columns.push(BitColumn::zeros(rows.len()));
        }
        for (tid, row) in rows.iter().enumerate() {
            for label in row {
                let item = db.index[label];
                db.columns[item.index()].set(tid);
            }
        }
        db
    }

    /// Builds a database from labelled columns, kept in the given order.
    pub fn from_columns<I>(n_transactions: usize, columns: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, BitColumn)>,
    {
        let mut db = TransactionDatabase::new(n_transactions);
        for (label, column) in columns {
            db.append_item(label, column)?;
        }
        Ok(db)
    }

    #[inline]
    pub fn n_transactions(&self) -> usize {
        self.n_transactions
    }

    #[inline]
    pub fn n_items(&self) -> usize {
        self.columns.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    #[inline]
    pub fn label(&self, item: ItemId) -> Label {
        self.labels[item.index()]
    }

    pub fn item(&self, label: Label) -> Option<ItemId> {
        self.index.get(&label).copied()
    }

    pub fn item_or_err(&self, label: Label) -> Result<ItemId> {
        self.item(label).ok_or(Error::UnknownLabel(label))
    }

    #[inline]
    pub fn column(&self, item: ItemId) -> &BitColumn {
        &self.columns[item.index()]
    }

    pub fn items(&self) -> impl Iterator<Item = ItemId> {
        (0..self.columns.len()).map(ItemId::from)
    }

    pub fn support(&self, item: ItemId) -> u64 {
        self.column(item).count_ones()
    }

    /// Appends a new item as the last column. Existing items keep their
    /// indices, so trees built over this database stay valid.
    pub fn append_item(&mut self, label: Label, column: BitColumn) -> Result<ItemId> {
        if column.len() != self.n_transactions {
            return Err(Error::LengthMismatch {
                expected: self.n_transactions,
                found: column.len(),
            });
        }
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let item = ItemId::from(self.columns.len());
        self.labels.push(label);
        self.columns.push(column);
        self.index.insert(label, item);
        Ok(item)
    }

    /// A new database holding only `items`, in the given order.
    pub fn select(&self, items: &[ItemId]) -> TransactionDatabase {
        let mut db = TransactionDatabase::new(self.n_transactions);
        for &item in items {
            db.append_item(self.label(item), self.column(item).clone())
                .expect("selected items come from a valid database");
        }
        db
    }

    /// Labels of transaction `tid`, in column order.
    pub fn transaction(&self, tid: usize) -> Vec<Label> {
        self.items()
            .filter(|&i| self.column(i).get(tid))
            .map(|i| self.label(i))
            .collect()
    }

    /// Total number of (transaction, item) incidences.
    pub fn total_items(&self) -> u64 {
        self.columns.iter().map(BitColumn::count_ones).sum()
    }
}

/// The item permutation chosen by [`preprocess`]: position `j` of the
/// preprocessed database holds the source item `source(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemOrder {
    source: Vec<ItemId>,
    labels: Vec<Label>,
    supports: Vec<u64>,
}

impl ItemOrder {
    /// The order that keeps every item of `db` in place.
    pub fn identity(db: &TransactionDatabase) -> Self {
        ItemOrder {
            source: db.items().collect(),
            labels: db.labels().to_vec(),
            supports: db.items().map(|i| db.support(i)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    /// Source database item at internal position `item`.
    pub fn source(&self, item: ItemId) -> ItemId {
        self.source[item.index()]
    }

    pub fn label(&self, item: ItemId) -> Label {
        self.labels[item.index()]
    }

    /// External labels indexed by internal position.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Item supports recorded when the order was built.
    pub fn supports(&self) -> &[u64] {
        &self.supports
    }
}

/// Drops items with support below `threshold(sigma, N)` and sorts the
/// survivors by decreasing support, ties broken by ascending label.
pub fn preprocess(
    db: &TransactionDatabase,
    sigma: f64,
) -> Result<(TransactionDatabase, ItemOrder)> {
    check_sigma(sigma, "minimum support")?;
    let t = threshold(sigma, db.n_transactions());
    let mut kept: Vec<(ItemId, u64)> = db
        .items()
        .map(|i| (i, db.support(i)))
        .filter(|&(_, s)| s >= t)
        .collect();
    kept.sort_by(|a, b| b.1.cmp(&a.1).then(db.label(a.0).cmp(&db.label(b.0))));
    let source: Vec<ItemId> = kept.iter().map(|&(i, _)| i).collect();
    let order = ItemOrder {
        labels: source.iter().map(|&i| db.label(i)).collect(),
        supports: kept.iter().map(|&(_, s)| s).collect(),
        source,
    };
    Ok((db.select(&order.source), order))
}
