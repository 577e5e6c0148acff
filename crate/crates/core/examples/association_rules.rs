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

//! Confidence-pruned association rules.
//!
//! `cargo run --example association_rules -- [minsup] [minconf]`

use prefrec::arm::{mine_rules, rule};
use prefrec::bitdata::TransactionDatabase;
use prefrec::rule::{write_rules, Rule, RuleFormat};

fn main() -> prefrec::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("numeric argument"));
    let sigma = args.next().unwrap_or(0.3);
    let tau = args.next().unwrap_or(0.6);

    let (db, _) = TransactionDatabase::read_horizontal(
        "1 2 5\n2 4\n2 3\n1 2 4\n1 3\n2 3\n1 3\n1 2 3 5\n1 2 3\n".as_bytes(),
    )?;
    let (tree, rules) = mine_rules(&db, sigma, tau)?;
    println!(
        "{} itemsets, {} rules with confidence >= {tau}",
        tree.len(),
        rules.len()
    );
    let labelled: Vec<Rule<u64>> = rules
        .iter()
        .map(|r| r.labelled(db.labels()).normalized())
        .collect();
    write_rules(std::io::stdout().lock(), &labelled, RuleFormat::Text)?;

    // The antecedent tree of a single itemset, built from supports in the tree.
    let set: Vec<_> = [1, 2].iter().map(|&l| db.item(l).unwrap()).collect();
    if let Some(support) = tree.lookup_support(&set) {
        let rt = rule(&set, support, 0.0, |s| tree.lookup_support(s))?;
        println!("\nantecedents of {{1,2}} at minconf 0, in traversal order:");
        for (antecedent, supp) in rt.antecedents() {
            let labels: Vec<u64> = antecedent.iter().map(|&i| db.label(i)).collect();
            println!("  {labels:?}  support {supp}");
        }
    }
    Ok(())
}
