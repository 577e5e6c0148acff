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

//! Command implementations behind the `prefrec` binary.
//!
//! Each command reads its inputs, writes its artifacts into an output
//! directory and returns a [`RunReport`]. Reported times cover the mining
//! or update phase only; loading, preprocessing and writing are measured
//! separately as `io_seconds`.

use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::arm::{arm_traversal, mine_rules};
use crate::bitdata::{ItemOrder, TransactionDatabase};
use crate::fim::{fim_traversal, mine_prepared, prepare, MineConfig};
use crate::oracle::{brute_fim, brute_rules};
use crate::preftree::PrefTree;
use crate::rule::{write_rules, Rule, RuleFormat};
use crate::synth::{stats, GenProfile};
use crate::window::{run_window, write_window_csv};
use crate::{Error, Label, Result};

/// Layout of a database file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InputFormat {
    /// One transaction per line, labels separated by whitespace.
    #[default]
    Fimi,
    /// Header row of labels, then one 0/1 row per transaction.
    Csv,
}

pub fn load_database(path: &Path, format: InputFormat) -> Result<TransactionDatabase> {
    let reader = BufReader::new(File::open(path)?);
    let (db, stats) = match format {
        InputFormat::Fimi => TransactionDatabase::read_horizontal(reader)?,
        InputFormat::Csv => TransactionDatabase::read_csv_matrix(reader)?,
    };
    log::info!(
        "loaded {}: {} transactions, {} items, {} blank lines",
        path.display(),
        db.n_transactions(),
        db.n_items(),
        stats.blank_lines
    );
    Ok(db)
}

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>> {
    fs::create_dir_all(dir)?;
    Ok(BufWriter::new(File::create(dir.join(name))?))
}

/// Summary of one command run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub params: Vec<(String, String)>,
    /// Mining or update time.
    pub seconds: f64,
    /// Loading, preprocessing and writing time.
    pub io_seconds: f64,
    /// Nodes of the resulting tree, root included.
    pub frequent_count: Option<usize>,
    pub rule_count: Option<usize>,
    /// Mean itemset size over the tree, root excluded.
    pub avg_size: Option<f64>,
    /// Mean itemset size with the root counted as a set of size 0.
    pub avg_size_with_empty: Option<f64>,
    /// Files written, relative to the output directory.
    pub artifacts: Vec<PathBuf>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            ..Default::default()
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.into(), value.to_string()));
    }

    fn set_tree(&mut self, tree: &PrefTree) {
        self.frequent_count = Some(tree.len());
        self.avg_size = tree.average_size(false);
        self.avg_size_with_empty = tree.average_size(true);
    }

    /// All fields as key-value pairs, in a fixed order.
    pub fn fields(&self) -> Vec<(String, String)> {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let mut out = vec![("command".to_string(), self.command.clone())];
        out.extend(self.params.iter().cloned());
        out.push(("seconds".into(), format!("{:.6}", self.seconds)));
        out.push(("io_seconds".into(), format!("{:.6}", self.io_seconds)));
        out.push((
            "frequent_count".into(),
            opt(self.frequent_count.map(|c| c.to_string())),
        ));
        out.push((
            "rule_count".into(),
            opt(self.rule_count.map(|c| c.to_string())),
        ));
        out.push((
            "avg_size".into(),
            opt(self.avg_size.map(|a| format!("{a:.6}"))),
        ));
        out.push((
            "avg_size_with_empty".into(),
            opt(self.avg_size_with_empty.map(|a| format!("{a:.6}"))),
        ));
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(s, "{k}: {v}");
        }
        s
    }

    /// Header line and one value line.
    pub fn to_csv(&self) -> String {
        let (keys, values): (Vec<String>, Vec<String>) = self.fields().into_iter().unzip();
        format!("{}\n{}\n", keys.join(","), values.join(","))
    }

    /// Writes `report.txt` and `report.csv` into `dir`.
    pub fn write(&mut self, dir: &Path) -> Result<()> {
        for (name, body) in [
            ("report.txt", self.to_text()),
            ("report.csv", self.to_csv()),
        ] {
            let mut f = create(dir, name)?;
            f.write_all(body.as_bytes())?;
            f.flush()?;
        }
        self.artifacts.push("report.txt".into());
        self.artifacts.push("report.csv".into());
        Ok(())
    }
}

fn write_tree(
    dir: &Path,
    name: &str,
    tree: &PrefTree,
    labels: &[Label],
    report: &mut RunReport,
) -> Result<()> {
    tree.write_dump(create(dir, name)?, labels)?;
    report.artifacts.push(name.into());
    Ok(())
}

fn write_rule_file(dir: &Path, rules: &[Rule<Label>], report: &mut RunReport) -> Result<()> {
    write_rules(create(dir, "rules.txt")?, rules, RuleFormat::Text)?;
    report.artifacts.push("rules.txt".into());
    Ok(())
}

#[derive(Clone, Debug)]
pub struct MineOptions {
    pub input: PathBuf,
    pub format: InputFormat,
    pub sigma: f64,
    pub tau: Option<f64>,
    pub preprocess: bool,
    pub out_dir: PathBuf,
}

/// Mines a database file. Writes `tree.txt`, `rules.txt` when `tau` is
/// set, and the report.
pub fn cmd_mine(opts: &MineOptions) -> Result<RunReport> {
    let mut report = RunReport::new("mine");
    report.param("input", opts.input.display());
    report.param("minsup", opts.sigma);
    if let Some(tau) = opts.tau {
        report.param("minconf", tau);
    }
    let io = Instant::now();
    let db = load_database(&opts.input, opts.format)?;
    let mut config = MineConfig::new(opts.sigma);
    if !opts.preprocess {
        config = config.without_preprocessing();
    }
    let (prepared, _order) = prepare(&db, &config)?;
    let mut io_seconds = io.elapsed().as_secs_f64();

    let start = Instant::now();
    let (tree, rules) = match opts.tau {
        None => (mine_prepared(&prepared, opts.sigma)?, None),
        Some(tau) => {
            let (tree, rules) = mine_rules(&prepared, opts.sigma, tau)?;
            (tree, Some(rules))
        }
    };
    report.seconds = start.elapsed().as_secs_f64();
    report.set_tree(&tree);

    let io = Instant::now();
    write_tree(
        &opts.out_dir,
        "tree.txt",
        &tree,
        prepared.labels(),
        &mut report,
    )?;
    if let Some(rules) = rules {
        let labelled: Vec<Rule<Label>> = rules
            .iter()
            .map(|r| r.labelled(prepared.labels()))
            .collect();
        report.rule_count = Some(labelled.len());
        write_rule_file(&opts.out_dir, &labelled, &mut report)?;
    }
    io_seconds += io.elapsed().as_secs_f64();
    report.io_seconds = io_seconds;
    report.write(&opts.out_dir)?;
    Ok(report)
}

/// Generates a database and writes it in the horizontal format.
pub fn cmd_gen(profile: &GenProfile, output: &Path) -> Result<RunReport> {
    let mut report = RunReport::new("gen");
    for line in profile.to_string().lines() {
        if let Some((k, v)) = line.split_once('=') {
            report.param(k, v);
        }
    }
    let start = Instant::now();
    let db = profile.generate()?;
    report.seconds = start.elapsed().as_secs_f64();
    let s = stats(&db);
    report.param(
        "mean_items",
        s.mean_items()
            .map(|m| format!("{m:.4}"))
            .unwrap_or_default(),
    );
    let io = Instant::now();
    if let Some(parent) = output.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    db.write_horizontal(BufWriter::new(File::create(output)?))?;
    report.io_seconds = io.elapsed().as_secs_f64();
    report.artifacts.push(output.to_path_buf());
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct AddOptions {
    /// Tree dump from an earlier `mine` or `add`.
    pub tree: PathBuf,
    /// Database holding the tree's items and the new ones.
    pub input: PathBuf,
    pub format: InputFormat,
    pub labels: Vec<Label>,
    pub sigma: f64,
    pub tau: Option<f64>,
    pub out_dir: PathBuf,
}

/// Extends a stored tree with new items, in the given order. Writes the
/// updated `tree.txt`, `rules.txt` for the new itemsets when `tau` is set,
/// and the report.
pub fn cmd_add(opts: &AddOptions) -> Result<RunReport> {
    let mut report = RunReport::new("add");
    report.param("tree", opts.tree.display());
    report.param("input", opts.input.display());
    report.param("minsup", opts.sigma);
    let added: Vec<String> = opts.labels.iter().map(Label::to_string).collect();
    report.param("labels", added.join(" "));

    let io = Instant::now();
    let source = load_database(&opts.input, opts.format)?;
    let (mut tree, order) = PrefTree::read_dump(BufReader::new(File::open(&opts.tree)?), None)?;
    if tree.n_transactions() != source.n_transactions() {
        return Err(Error::TransactionCount {
            tree: tree.n_transactions(),
            database: source.n_transactions(),
        });
    }
    let mut db = TransactionDatabase::new(source.n_transactions());
    for &label in order.iter().chain(&opts.labels) {
        let column = source.column(source.item_or_err(label)?).clone();
        db.append_item(label, column)?;
    }
    let mut io_seconds = io.elapsed().as_secs_f64();

    let mut rules = Vec::new();
    for &label in &opts.labels {
        let item = db.item_or_err(label)?;
        let start = Instant::now();
        match opts.tau {
            None => {
                fim_traversal(&db, &mut tree, item, opts.sigma)?;
            }
            Some(tau) => {
                let (_, trees) = arm_traversal(&db, &mut tree, item, opts.sigma, tau)?;
                rules.extend(trees.iter().flat_map(|t| t.rules()));
            }
        }
        let secs = start.elapsed().as_secs_f64();
        log::info!(
            "added item {label} in {secs:.6}s, tree has {} nodes",
            tree.len()
        );
        report.seconds += secs;
    }
    report.set_tree(&tree);

    let io = Instant::now();
    write_tree(&opts.out_dir, "tree.txt", &tree, db.labels(), &mut report)?;
    if opts.tau.is_some() {
        let labelled: Vec<Rule<Label>> = rules.iter().map(|r| r.labelled(db.labels())).collect();
        report.rule_count = Some(labelled.len());
        write_rule_file(&opts.out_dir, &labelled, &mut report)?;
    }
    io_seconds += io.elapsed().as_secs_f64();
    report.io_seconds = io_seconds;
    report.write(&opts.out_dir)?;
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct WindowOptions {
    pub input: PathBuf,
    pub format: InputFormat,
    pub q: usize,
    pub replacements: usize,
    pub sigma: f64,
    pub tau: Option<f64>,
    /// Write the tree after every step into `trees/`.
    pub dump_trees: bool,
    pub out_dir: PathBuf,
}

/// Moving window over the items of a database file, in file label order.
/// Writes `window.csv`, `window_rules.txt` when `tau` is set (one
/// `step TAB +/- TAB rule` line per added or retired rule), optional tree
/// dumps, and the report.
pub fn cmd_window(opts: &WindowOptions) -> Result<RunReport> {
    let mut report = RunReport::new("window");
    report.param("input", opts.input.display());
    report.param("q", opts.q);
    report.param("Q", opts.replacements);
    report.param("minsup", opts.sigma);
    let io = Instant::now();
    let db = load_database(&opts.input, opts.format)?;
    let mut io_seconds = io.elapsed().as_secs_f64();

    let run = run_window(
        &db,
        opts.q,
        opts.replacements,
        opts.sigma,
        opts.tau,
        opts.dump_trees,
    )?;
    report.seconds = run.steps.iter().map(|s| s.seconds).sum();
    report.set_tree(run.state.tree());
    report.param("complete", run.complete);

    let io = Instant::now();
    write_window_csv(
        create(&opts.out_dir, "window.csv")?,
        &run.steps,
        db.labels(),
    )?;
    report.artifacts.push("window.csv".into());
    if opts.tau.is_some() {
        let mut out = create(&opts.out_dir, "window_rules.txt")?;
        for s in &run.steps {
            for (sign, rules) in [('-', &s.rules_retired), ('+', &s.rules_added)] {
                for r in rules.iter() {
                    writeln!(out, "{}\t{sign}\t{}", s.step, r.labelled(db.labels()))?;
                }
            }
        }
        out.flush()?;
        report.rule_count = Some(run.state.rules().count());
        report.artifacts.push("window_rules.txt".into());
    }
    if opts.dump_trees {
        let dir = opts.out_dir.join("trees");
        for s in &run.steps {
            let name = format!("step_{:05}.txt", s.step);
            s.tree
                .as_ref()
                .expect("snapshots requested")
                .write_dump(create(&dir, &name)?, db.labels())?;
            report.artifacts.push(Path::new("trees").join(name));
        }
    }
    io_seconds += io.elapsed().as_secs_f64();
    report.io_seconds = io_seconds;
    report.write(&opts.out_dir)?;
    Ok(report)
}

/// One line of a benchmark: averages over the repetitions.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub sigma: f64,
    pub count: usize,
    pub avg_size: Option<f64>,
    pub seconds: f64,
}

/// Generates one base from `profile` and mines it at every `sigma` in
/// `grid`, `repetitions` times each. Timing excludes generation and
/// preprocessing.
pub fn bench(profile: &GenProfile, grid: &[f64], repetitions: usize) -> Result<Vec<BenchRow>> {
    if repetitions == 0 {
        return Err(Error::Config("repetitions must be at least 1".into()));
    }
    let db = profile.generate()?;
    let mut rows = Vec::with_capacity(grid.len());
    for &sigma in grid {
        let (prepared, _) = prepare(&db, &MineConfig::new(sigma))?;
        let mut total = 0.0;
        let mut tree = None;
        for _ in 0..repetitions {
            let start = Instant::now();
            tree = Some(mine_prepared(&prepared, sigma)?);
            total += start.elapsed().as_secs_f64();
        }
        let tree = tree.expect("at least one repetition");
        log::info!(
            "sigma={sigma}: {} itemsets in {:.3}s",
            tree.len(),
            total / repetitions as f64
        );
        rows.push(BenchRow {
            sigma,
            count: tree.len(),
            avg_size: tree.average_size(false),
            seconds: total / repetitions as f64,
        });
    }
    Ok(rows)
}

pub fn write_bench_csv<W: Write>(mut out: W, rows: &[BenchRow]) -> Result<()> {
    writeln!(out, "sigma,count,avg_size,seconds")?;
    for r in rows {
        let avg = r.avg_size.map(|a| format!("{a:.6}")).unwrap_or_default();
        writeln!(out, "{},{},{},{:.6}", r.sigma, r.count, avg, r.seconds)?;
    }
    out.flush()?;
    Ok(())
}

/// [`bench`] writing `bench.csv` into `out_dir`.
pub fn cmd_bench(
    profile: &GenProfile,
    grid: &[f64],
    repetitions: usize,
    out_dir: &Path,
) -> Result<RunReport> {
    let mut report = RunReport::new("bench");
    report.param("n", profile.n);
    report.param("N", profile.n_transactions);
    report.param("seed", profile.seed);
    report.param("repetitions", repetitions);
    let rows = bench(profile, grid, repetitions)?;
    report.seconds = rows.iter().map(|r| r.seconds).sum();
    write_bench_csv(create(out_dir, "bench.csv")?, &rows)?;
    report.artifacts.push("bench.csv".into());
    report.write(out_dir)?;
    Ok(report)
}

/// Mines a database file and compares against brute force. A mismatch
/// is an [`Error::Invariant`].
pub fn cmd_oracle(
    input: &Path,
    format: InputFormat,
    sigma: f64,
    tau: Option<f64>,
) -> Result<RunReport> {
    let mut report = RunReport::new("oracle");
    report.param("input", input.display());
    report.param("minsup", sigma);
    let db = load_database(input, format)?;
    let expected = brute_fim(&db, sigma)?;
    let start = Instant::now();
    let (tree, rules) = match tau {
        None => (mine_prepared(&db, sigma)?, None),
        Some(t) => {
            let (tree, rules) = mine_rules(&db, sigma, t)?;
            (tree, Some(rules))
        }
    };
    report.seconds = start.elapsed().as_secs_f64();
    report.set_tree(&tree);
    tree.validate()?;
    let found = found_itemsets(&tree, &ItemOrder::identity(&db));
    if found != expected.itemsets {
        return Err(Error::Invariant(format!(
            "mined {} itemsets, brute force found {}",
            found.len(),
            expected.itemsets.len()
        )));
    }
    if let (Some(rules), Some(t)) = (rules, tau) {
        let mut mined: Vec<Rule<Label>> = rules
            .iter()
            .map(|r| r.labelled(db.labels()).normalized())
            .collect();
        mined.sort();
        let brute = brute_rules(&db, sigma, t)?;
        if mined != brute {
            return Err(Error::Invariant(format!(
                "mined {} rules, brute force found {}",
                mined.len(),
                brute.len()
            )));
        }
        report.param("minconf", t);
        report.rule_count = Some(mined.len());
    }
    Ok(report)
}

/// Itemsets of `tree` with sorted labels, keyed like the oracle output.
pub fn found_itemsets(
    tree: &PrefTree,
    order: &ItemOrder,
) -> std::collections::BTreeMap<Vec<Label>, u64> {
    tree.enumerate(order.labels())
        .into_iter()
        .map(|(mut set, supp)| {
            set.sort_unstable();
            (set, supp)
        })
        .collect()
}
