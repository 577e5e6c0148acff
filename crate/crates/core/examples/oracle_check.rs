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

//! Cross-check the miner against brute force on random databases.
//!
//! `cargo run --release --example oracle_check -- [databases]`

use prefrec::bitdata::{BitColumn, TransactionDatabase};
use prefrec::cli::found_itemsets;
use prefrec::fim::{mine, MineConfig};
use prefrec::oracle::brute_fim;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> prefrec::Result<()> {
    let count: usize = std::env::args()
        .nth(1)
        .map_or(50, |a| a.parse().expect("integer"));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut itemsets = 0;
    for _ in 0..count {
        let n = rng.random_range(3..=12);
        let n_tx = rng.random_range(10..=200);
        let density: f64 = rng.random_range(0.1..0.9);
        let columns = (1..=n).map(|label| {
            let rows = (0..n_tx)
                .filter(|_| rng.random_bool(density))
                .collect::<Vec<_>>();
            (label, BitColumn::from_indices(n_tx, rows).unwrap())
        });
        let db = TransactionDatabase::from_columns(n_tx, columns.collect::<Vec<_>>())?;
        for step in 0..=10 {
            let sigma = step as f64 / 10.0;
            let (tree, order) = mine(&db, &MineConfig::new(sigma))?;
            let expected = brute_fim(&db, sigma)?;
            assert_eq!(
                found_itemsets(&tree, &order),
                expected.itemsets,
                "n={n} N={n_tx} sigma={sigma}"
            );
            itemsets += tree.len();
        }
    }
    println!("{count} databases x 11 thresholds agree with brute force ({itemsets} itemsets)");
    Ok(())
}
