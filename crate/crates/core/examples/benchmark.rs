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

//! Counts, sizes and times over a grid of minimum supports.
//!
//! `cargo run --release --example benchmark -- [sparse|dense|ar3] [N]`

use prefrec::cli::{bench, write_bench_csv};
use prefrec::synth::GenProfile;

fn main() -> prefrec::Result<()> {
    let kind = std::env::args().nth(1).unwrap_or_else(|| "sparse".into());
    let n_tx: usize = std::env::args()
        .nth(2)
        .map_or(20_000, |a| a.parse().expect("integer"));
    let (profile, grid) = match kind.as_str() {
        "dense" => (
            GenProfile::dense(1000, n_tx, 1),
            vec![0.06, 0.07, 0.08, 0.09, 0.1],
        ),
        "ar3" => (
            GenProfile::ar3(1000, n_tx, 2.3, 1),
            vec![0.04, 0.045, 0.05, 0.055, 0.06],
        ),
        _ => (
            GenProfile::sparse(1000, n_tx, 1),
            vec![0.015, 0.0175, 0.02, 0.0225, 0.025],
        ),
    };
    let rows = bench(&profile, &grid, 1)?;
    write_bench_csv(std::io::stdout().lock(), &rows)?;
    Ok(())
}
