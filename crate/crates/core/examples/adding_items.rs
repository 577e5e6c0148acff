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

//! Grow a mined base with new variables instead of re-mining it.
//!
//! `cargo run --release --example adding_items`

use std::time::Instant;

use prefrec::fim::mine_prepared;
use prefrec::synth::{bernoulli_in, GenProfile};
use prefrec::window::add_item;

fn main() -> prefrec::Result<()> {
    let sigma = 0.02;
    let n = 300;
    let mut db = GenProfile::sparse(n, 20_000, 1).generate()?;
    let start = Instant::now();
    let mut tree = mine_prepared(&db, sigma)?;
    println!(
        "mined {} items: {} itemsets in {:.3}s",
        n,
        tree.len(),
        start.elapsed().as_secs_f64()
    );

    for batch in [1u64, 10, 100] {
        let start = Instant::now();
        let before = tree.len();
        for _ in 0..batch {
            let label = db.n_items() as u64 + 1;
            let (_, column) = bernoulli_in(0.08, 0.12, label, db.n_transactions(), 99);
            db.append_item(label, column)?;
            add_item(&db, &mut tree, label, sigma)?;
        }
        println!(
            "added {batch:>3} items: +{} itemsets in {:.4}s",
            tree.len() - before,
            start.elapsed().as_secs_f64()
        );
    }
    assert_eq!(tree, mine_prepared(&db, sigma)?);
    println!("result equals a full re-mine of all {} items", db.n_items());
    Ok(())
}
