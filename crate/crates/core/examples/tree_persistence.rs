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

//! Save a mined tree, reload it, and keep extending it.
//!
//! `cargo run --example tree_persistence`

use std::io::BufReader;

use prefrec::bitdata::TransactionDatabase;
use prefrec::fim::mine_prepared;
use prefrec::preftree::PrefTree;
use prefrec::window::{add_item, remove_first};

fn main() -> prefrec::Result<()> {
    let (full, _) = TransactionDatabase::read_horizontal("1 2\n1 2 3\n2 3\n1\n2\n".as_bytes())?;
    let first_two = full.select(&[full.item(1).unwrap(), full.item(2).unwrap()]);
    let tree = mine_prepared(&first_two, 0.4)?;

    let path = std::env::temp_dir().join("prefrec_tree.txt");
    tree.write_dump(std::fs::File::create(&path)?, first_two.labels())?;
    print!("{}", std::fs::read_to_string(&path)?);

    let (mut restored, order) =
        PrefTree::read_dump(BufReader::new(std::fs::File::open(&path)?), None)?;
    assert_eq!(restored, tree);
    assert_eq!(order, first_two.labels());

    add_item(&full, &mut restored, 3, 0.4)?;
    println!("\nafter adding item 3:");
    for (set, support) in restored.enumerate(full.labels()) {
        println!("  {set:?} {support}");
    }
    let removed = remove_first(&mut restored).expect("tree has items");
    println!(
        "\nremoving item {} dropped {} itemsets",
        full.label(removed.item),
        removed.nodes
    );
    std::fs::remove_file(path)?;
    Ok(())
}
