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

//! The built-in generators and their density.
//!
//! `cargo run --release --example synthetic_bases -- [N]`

use prefrec::synth::{stats, GenProfile};

fn main() -> prefrec::Result<()> {
    let n_tx: usize = std::env::args()
        .nth(1)
        .map_or(20_000, |a| a.parse().expect("integer"));
    let profiles = [
        ("sparse", GenProfile::sparse(1000, n_tx, 1)),
        ("dense", GenProfile::dense(1000, n_tx, 1)),
        ("ar3 s=2.3", GenProfile::ar3(1000, n_tx, 2.3, 1)),
        ("ar3 s=1.7", GenProfile::ar3(1000, n_tx, 1.7, 1)),
    ];
    for (name, profile) in profiles {
        let db = profile.generate()?;
        let expected = profile
            .expected_mean_items()
            .map(|m| format!(" (expected {m:.2})"))
            .unwrap_or_default();
        println!("{name:<10} {}{expected}", stats(&db));
    }
    println!(
        "\nprofile file for the sparse base:\n{}",
        GenProfile::sparse(1000, n_tx, 1)
    );
    Ok(())
}
