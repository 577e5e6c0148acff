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

//! Moving window over the items of a generated base, with rules.
//!
//! `cargo run --release --example moving_window -- [q] [Q]`

use prefrec::synth::GenProfile;
use prefrec::window::{marm, write_window_csv};

fn main() -> prefrec::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let q = args.next().unwrap_or(50);
    let replacements = args.next().unwrap_or(20);

    let db = GenProfile::ar3(q + replacements + 10, 10_000, 1.7, 5).generate()?;
    let run = marm(&db, q, replacements, 0.05, 0.8)?;
    write_window_csv(std::io::stdout().lock(), &run.steps, db.labels())?;

    let (added, retired) = run.replacement_steps().fold((0, 0), |(a, r), s| {
        (a + s.rules_added.len(), r + s.rules_retired.len())
    });
    println!(
        "\n{} replacements: {added} rules added, {retired} retired, {} live",
        run.state.replacements(),
        run.state.rules().count()
    );
    let window: Vec<u64> = run.state.items().map(|i| db.label(i)).collect();
    println!(
        "window now spans items {:?}..={:?}",
        window.first(),
        window.last()
    );
    Ok(())
}
