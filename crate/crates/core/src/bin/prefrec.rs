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

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prefrec::cli::{self, AddOptions, InputFormat, MineOptions, RunReport, WindowOptions};
use prefrec::synth::GenProfile;
use prefrec::{Label, Result};

#[derive(Parser)]
#[command(
    name = "prefrec",
    version,
    about = "Incremental frequent itemset and association rule mining"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine frequent itemsets (and rules with --minconf) from a database file.
    Mine {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        minsup: f64,
        #[arg(long)]
        minconf: Option<f64>,
        /// Keep the file's item order and infrequent items.
        #[arg(long)]
        no_preprocess: bool,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Generate a synthetic database.
    Gen {
        #[command(flatten)]
        profile: Profile,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Add items to a stored tree.
    Add {
        #[arg(long)]
        tree: PathBuf,
        #[command(flatten)]
        input: Input,
        /// Labels to add, in order.
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<Label>,
        #[arg(long)]
        minsup: f64,
        #[arg(long)]
        minconf: Option<f64>,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Moving window over the items of a database file.
    Window {
        #[command(flatten)]
        input: Input,
        /// Window size in frequent items.
        #[arg(long)]
        q: usize,
        /// Number of replacements after warm-up.
        #[arg(long = "Q")]
        replacements: usize,
        #[arg(long)]
        minsup: f64,
        #[arg(long)]
        minconf: Option<f64>,
        #[arg(long)]
        dump_trees: bool,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Mine a generated base over a grid of minimum supports.
    Bench {
        #[command(flatten)]
        profile: Profile,
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        repetitions: usize,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Check mining against brute force on a small database.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        minsup: f64,
        #[arg(long)]
        minconf: Option<f64>,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Fimi)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Fimi,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileName {
    Sparse,
    Dense,
    Ar3,
}

#[derive(Args)]
struct Profile {
    #[arg(long, value_enum, default_value_t = ProfileName::Sparse)]
    profile: ProfileName,
    /// key=value profile file; overrides the other profile flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Number of items.
    #[arg(long = "n", default_value_t = 1000)]
    n: usize,
    /// Number of transactions.
    #[arg(long = "N", default_value_t = 100_000)]
    n_transactions: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// AR(3) threshold.
    #[arg(long, default_value_t = 2.3)]
    s: f64,
}

impl Input {
    fn format(&self) -> InputFormat {
        match self.format {
            Format::Fimi => InputFormat::Fimi,
            Format::Csv => InputFormat::Csv,
        }
    }
}

impl Profile {
    fn resolve(&self) -> Result<GenProfile> {
        if let Some(path) = &self.config {
            return std::fs::read_to_string(path)?.parse();
        }
        Ok(match self.profile {
            ProfileName::Sparse => GenProfile::sparse(self.n, self.n_transactions, self.seed),
            ProfileName::Dense => GenProfile::dense(self.n, self.n_transactions, self.seed),
            ProfileName::Ar3 => GenProfile::ar3(self.n, self.n_transactions, self.s, self.seed),
        })
    }
}

fn run(command: Command) -> Result<RunReport> {
    match command {
        Command::Mine {
            input,
            minsup,
            minconf,
            no_preprocess,
            out_dir,
        } => cli::cmd_mine(&MineOptions {
            format: input.format(),
            input: input.input,
            sigma: minsup,
            tau: minconf,
            preprocess: !no_preprocess,
            out_dir,
        }),
        Command::Gen { profile, output } => cli::cmd_gen(&profile.resolve()?, &output),
        Command::Add {
            tree,
            input,
            labels,
            minsup,
            minconf,
            out_dir,
        } => cli::cmd_add(&AddOptions {
            tree,
            format: input.format(),
            input: input.input,
            labels,
            sigma: minsup,
            tau: minconf,
            out_dir,
        }),
        Command::Window {
            input,
            q,
            replacements,
            minsup,
            minconf,
            dump_trees,
            out_dir,
        } => cli::cmd_window(&WindowOptions {
            format: input.format(),
            input: input.input,
            q,
            replacements,
            sigma: minsup,
            tau: minconf,
            dump_trees,
            out_dir,
        }),
        Command::Bench {
            profile,
            grid,
            repetitions,
            out_dir,
        } => cli::cmd_bench(&profile.resolve()?, &grid, repetitions, &out_dir),
        Command::Oracle {
            input,
            minsup,
            minconf,
        } => cli::cmd_oracle(&input.input, input.format(), minsup, minconf),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Cli::parse();
    match run(args.command) {
        Ok(report) => {
            print!("{}", report.to_text());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
