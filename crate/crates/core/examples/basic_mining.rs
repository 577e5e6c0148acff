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

//! Mine a small database and print its frequent itemsets.
//!
//! `cargo run --example basic_mining -- [minsup]`

use prefrec::bitdata::TransactionDatabase;
use prefrec::fim::{mine, MineConfig};

const DATA: &str = "\
bread milk
bread diapers beer eggs
milk diapers beer cola
bread milk diapers beer
bread milk diapers cola
";

fn main() -> prefrec::Result<()> {
    let sigma: f64 = std::env::args()
        .nth(1)
        .map_or(Ok(0.4), |s| s.parse())
        .expect("minsup is a number");

    // Labels are integers, so map words to ids first.
    let mut words: Vec<&str> = DATA.split_whitespace().collect();
    words.sort_unstable();
    words.dedup();
    let encoded: Vec<Vec<u64>> = DATA
        .lines()
        .map(|line| {
            line.split_whitespace()
                .map(|w| words.binary_search(&w).unwrap() as u64)
                .collect()
        })
        .collect();
    let db = TransactionDatabase::from_transactions(encoded);

    let (tree, order) = mine(&db, &MineConfig::new(sigma))?;
    println!(
        "{} frequent itemsets at minsup {sigma} (threshold {}):",
        tree.len(),
        tree.threshold()
    );
    for (set, support) in tree.enumerate(order.labels()) {
        let names: Vec<&str> = set.iter().map(|&l| words[l as usize]).collect();
        println!("  {{{}}}  {support}", names.join(", "));
    }
    Ok(())
}
