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

//! Synthetic transaction databases.
//!
//! Two families are provided. Bernoulli mixtures draw every variable
//! independently: a probability `p` is chosen uniformly in the interval of
//! the variable's component, then `N` Bernoulli(`p`) bits form its column.
//! The AR(3) family thresholds independent autoregressive paths, one per
//! transaction, so neighbouring items are strongly dependent.
//!
//! Generation is a fixed function of the profile. All randomness comes
//! from ChaCha8 streams keyed by the seed: variable `j` of a mixture reads
//! stream `j`, and transaction `i` of an AR(3) base reads stream `i`.
//! Growing `n` therefore leaves the earlier columns untouched.
//!
//! ```
//! use prefrec::synth::{stats, GenProfile};
//!
//! let db = GenProfile::sparse(200, 1000, 7).generate().unwrap();
//! let s = stats(&db);
//! assert_eq!((s.n_transactions, s.n_items), (1000, 200));
//! assert!((s.mean_items().unwrap() - 20.65).abs() < 3.0);
//! ```

use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::bitdata::{BitColumn, TransactionDatabase};
use crate::{Error, Label, Result};

/// Autoregressive coefficients of the dependent generator.
pub const AR3_COEFFS: [f64; 3] = [1.15, -0.06, -0.1485];
/// Default standard deviation of the AR(3) innovations.
pub const AR3_NOISE_SD: f64 = 0.5;
pub const AR3_BURN_IN: usize = 500;

const FRACTION_TOLERANCE: f64 = 1e-9;

/// One mixture component: a `fraction` of the variables with `p` in
/// `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Component {
    pub fraction: f64,
    pub lo: f64,
    pub hi: f64,
}

impl Component {
    pub const fn new(fraction: f64, lo: f64, hi: f64) -> Self {
        Component { fraction, lo, hi }
    }

    pub fn midpoint(&self) -> f64 {
        (self.lo + self.hi) / 2.0
    }
}

pub const SPARSE: [Component; 4] = [
    Component::new(0.3, 0.005, 0.08),
    Component::new(0.3, 0.08, 0.12),
    Component::new(0.3, 0.12, 0.15),
    Component::new(0.1, 0.15, 0.25),
];

pub const DENSE: [Component; 4] = [
    Component::new(0.2, 0.05, 0.13),
    Component::new(0.35, 0.13, 0.16),
    Component::new(0.35, 0.16, 0.20),
    Component::new(0.1, 0.20, 0.40),
];

#[derive(Clone, Debug, PartialEq)]
pub enum ProfileKind {
    Bernoulli(Vec<Component>),
    Ar3 {
        s: f64,
        noise_sd: f64,
        burn_in: usize,
    },
}

/// Everything needed to regenerate a database bit for bit.
#[derive(Clone, Debug, PartialEq)]
pub struct GenProfile {
    pub kind: ProfileKind,
    /// Number of items.
    pub n: usize,
    /// Number of transactions.
    pub n_transactions: usize,
    pub seed: u64,
}

impl GenProfile {
    pub fn bernoulli(
        components: Vec<Component>,
        n: usize,
        n_transactions: usize,
        seed: u64,
    ) -> Self {
        GenProfile {
            kind: ProfileKind::Bernoulli(components),
            n,
            n_transactions,
            seed,
        }
    }

    pub fn sparse(n: usize, n_transactions: usize, seed: u64) -> Self {
        Self::bernoulli(SPARSE.to_vec(), n, n_transactions, seed)
    }

    pub fn dense(n: usize, n_transactions: usize, seed: u64) -> Self {
        Self::bernoulli(DENSE.to_vec(), n, n_transactions, seed)
    }

    pub fn ar3(n: usize, n_transactions: usize, s: f64, seed: u64) -> Self {
        GenProfile {
            kind: ProfileKind::Ar3 {
                s,
                noise_sd: AR3_NOISE_SD,
                burn_in: AR3_BURN_IN,
            },
            n,
            n_transactions,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n_transactions == 0 {
            return Err(Error::Config("n and N must both be at least 1".into()));
        }
        match &self.kind {
            ProfileKind::Bernoulli(components) => {
                if components.is_empty() {
                    return Err(Error::Config("mixture has no components".into()));
                }
                for c in components {
                    if !(0.0 <= c.lo && c.lo <= c.hi && c.hi <= 1.0) {
                        return Err(Error::Config(format!(
                            "invalid interval [{}, {}]",
                            c.lo, c.hi
                        )));
                    }
                    if c.fraction.is_nan() || c.fraction < 0.0 {
                        return Err(Error::Config(format!("invalid fraction {}", c.fraction)));
                    }
                }
                let total: f64 = components.iter().map(|c| c.fraction).sum();
                if (total - 1.0).abs() > FRACTION_TOLERANCE {
                    return Err(Error::Config(format!(
                        "mixture fractions sum to {total}, not 1"
                    )));
                }
            }
            ProfileKind::Ar3 { s, noise_sd, .. } => {
                if s.is_nan() {
                    return Err(Error::Config("AR(3) threshold is NaN".into()));
                }
                if !(noise_sd.is_finite() && *noise_sd >= 0.0) {
                    return Err(Error::Config(format!(
                        "invalid noise standard deviation {noise_sd}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Mean items per transaction implied by the interval midpoints, for
    /// mixtures.
    pub fn expected_mean_items(&self) -> Option<f64> {
        match &self.kind {
            ProfileKind::Bernoulli(cs) => {
                Some(self.n as f64 * cs.iter().map(|c| c.fraction * c.midpoint()).sum::<f64>())
            }
            ProfileKind::Ar3 { .. } => None,
        }
    }

    pub fn generate(&self) -> Result<TransactionDatabase> {
        self.validate()?;
        match &self.kind {
            ProfileKind::Bernoulli(_) => gen_bernoulli(self),
            ProfileKind::Ar3 {
                s,
                noise_sd,
                burn_in,
            } => Ok(ar3_database(
                self.n,
                self.n_transactions,
                *s,
                *noise_sd,
                *burn_in,
                self.seed,
            )),
        }
    }
}

/// Key-value profile files: one `key=value` per line, `#` comments.
///
/// Keys are `kind` (`sparse`, `dense`, `bernoulli` or `ar3`), `n`, `N`,
/// `seed`, `s`, `noise_sd`, `burn_in` and, for `bernoulli`, `intervals` as
/// `fraction:lo:hi` triples separated by `;` or `,`.
impl FromStr for GenProfile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut n = None;
        let mut n_transactions = None;
        let mut seed = 0u64;
        let mut s = None;
        let mut noise_sd = AR3_NOISE_SD;
        let mut burn_in = AR3_BURN_IN;
        let mut intervals = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse { line: i + 1, msg };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{line}`")))?;
            let value = value.trim();
            let num = |v: &str| v.parse::<f64>().map_err(|e| bad(format!("{key}: {e}")));
            let int = |v: &str| v.parse::<usize>().map_err(|e| bad(format!("{key}: {e}")));
            match key.trim() {
                "kind" => kind = Some(value.to_string()),
                "n" => n = Some(int(value)?),
                "N" => n_transactions = Some(int(value)?),
                "seed" => seed = value.parse().map_err(|e| bad(format!("seed: {e}")))?,
                "s" => s = Some(num(value)?),
                "noise_sd" => noise_sd = num(value)?,
                "burn_in" => burn_in = int(value)?,
                "intervals" => {
                    let mut cs = Vec::new();
                    for part in value
                        .split([';', ','])
                        .map(str::trim)
                        .filter(|p| !p.is_empty())
                    {
                        let f: Vec<&str> = part.split(':').collect();
                        if f.len() != 3 {
                            return Err(bad(format!("interval `{part}` is not fraction:lo:hi")));
                        }
                        cs.push(Component::new(num(f[0])?, num(f[1])?, num(f[2])?));
                    }
                    intervals = Some(cs);
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Config("profile is missing n".into()))?;
        let n_transactions =
            n_transactions.ok_or_else(|| Error::Config("profile is missing N".into()))?;
        let kind = match kind.as_deref() {
            Some("sparse") => ProfileKind::Bernoulli(SPARSE.to_vec()),
            Some("dense") => ProfileKind::Bernoulli(DENSE.to_vec()),
            Some("bernoulli") => ProfileKind::Bernoulli(
                intervals
                    .ok_or_else(|| Error::Config("bernoulli profile needs intervals".into()))?,
            ),
            Some("ar3") => ProfileKind::Ar3 {
                s: s.ok_or_else(|| Error::Config("ar3 profile needs s".into()))?,
                noise_sd,
                burn_in,
            },
            Some(other) => return Err(Error::Config(format!("unknown profile kind `{other}`"))),
            None => return Err(Error::Config("profile is missing kind".into())),
        };
        let profile = GenProfile {
            kind,
            n,
            n_transactions,
            seed,
        };
        profile.validate()?;
        Ok(profile)
    }
}

impl fmt::Display for GenProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ProfileKind::Bernoulli(cs) => {
                writeln!(f, "kind=bernoulli")?;
                let parts: Vec<String> = cs
                    .iter()
                    .map(|c| format!("{}:{}:{}", c.fraction, c.lo, c.hi))
                    .collect();
                writeln!(f, "intervals={}", parts.join(";"))?;
            }
            ProfileKind::Ar3 {
                s,
                noise_sd,
                burn_in,
            } => {
                writeln!(f, "kind=ar3\ns={s}\nnoise_sd={noise_sd}\nburn_in={burn_in}")?;
            }
        }
        write!(
            f,
            "n={}\nN={}\nseed={}",
            self.n, self.n_transactions, self.seed
        )
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Component of variable `j`: the fractional part of `j` times the golden
/// ratio, located in the cumulative fractions. Assignments do not depend
/// on `n` and match the fractions closely for any prefix.
fn component_of(components: &[Component], j: usize) -> &Component {
    const PHI: f64 = 0.618_033_988_749_894_9;
    let u = (j as f64 * PHI).fract();
    let mut acc = 0.0;
    for c in components {
        acc += c.fraction;
        if u < acc {
            return c;
        }
    }
    components
        .iter()
        .rev()
        .find(|c| c.fraction > 0.0)
        .unwrap_or(&components[components.len() - 1])
}

/// Column of N Bernoulli(p) draws. A bit is set when a uniform 64-bit
/// draw falls below `p * 2^64`.
fn bernoulli_bits(rng: &mut ChaCha8Rng, p: f64, n_transactions: usize) -> BitColumn {
    if p >= 1.0 {
        return BitColumn::ones(n_transactions);
    }
    let cut = (p * 18_446_744_073_709_551_616.0) as u64;
    let mut words = vec![0u64; n_transactions.div_ceil(64)];
    for (w, word) in words.iter_mut().enumerate() {
        let bits = (n_transactions - w * 64).min(64);
        let mut acc = 0u64;
        for b in 0..bits {
            if rng.next_u64() < cut {
                acc |= 1 << b;
            }
        }
        *word = acc;
    }
    BitColumn::from_words(words, n_transactions)
}

/// Variable `j` of a mixture: its `p` and its column.
pub fn bernoulli_variable(
    components: &[Component],
    j: usize,
    n_transactions: usize,
    seed: u64,
) -> (f64, BitColumn) {
    let c = component_of(components, j);
    bernoulli_in(c.lo, c.hi, j as u64, n_transactions, seed)
}

/// A column with `p` uniform in `[lo, hi]`, read from stream `stream_id`.
/// Used to grow a generated base with extra items.
pub fn bernoulli_in(
    lo: f64,
    hi: f64,
    stream_id: u64,
    n_transactions: usize,
    seed: u64,
) -> (f64, BitColumn) {
    let mut rng = stream(seed, stream_id);
    let p = if lo < hi {
        rng.random_range(lo..=hi)
    } else {
        lo
    };
    (p, bernoulli_bits(&mut rng, p, n_transactions))
}

/// Mixture database with labels `1..=n`.
pub fn gen_bernoulli(profile: &GenProfile) -> Result<TransactionDatabase> {
    profile.validate()?;
    let ProfileKind::Bernoulli(components) = &profile.kind else {
        return Err(Error::Config("not a Bernoulli mixture profile".into()));
    };
    let columns = (0..profile.n).map(|j| {
        let (_, col) = bernoulli_variable(components, j, profile.n_transactions, profile.seed);
        (j as Label + 1, col)
    });
    TransactionDatabase::from_columns(profile.n_transactions, columns)
}

/// Thresholded AR(3) database with the default noise and burn-in.
pub fn gen_ar3(n: usize, n_transactions: usize, s: f64, seed: u64) -> TransactionDatabase {
    ar3_database(n, n_transactions, s, AR3_NOISE_SD, AR3_BURN_IN, seed)
}

/// Transaction `i` is one path started from zeros, run `burn_in` steps,
/// then observed for `n` steps; item `t` is present when `Z(t) > s`.
pub fn ar3_database(
    n: usize,
    n_transactions: usize,
    s: f64,
    noise_sd: f64,
    burn_in: usize,
    seed: u64,
) -> TransactionDatabase {
    let n_words = n_transactions.div_ceil(64);
    let mut columns = vec![vec![0u64; n_words]; n];
    for i in 0..n_transactions {
        let mut rng = stream(seed, i as u64);
        let (mut z1, mut z2, mut z3) = (0.0f64, 0.0f64, 0.0f64);
        let bit = 1u64 << (i % 64);
        for t in 0..burn_in + n {
            let eps: f64 = StandardNormal.sample(&mut rng);
            let z = AR3_COEFFS[0] * z1 + AR3_COEFFS[1] * z2 + AR3_COEFFS[2] * z3 + noise_sd * eps;
            (z3, z2, z1) = (z2, z1, z);
            if t >= burn_in && z > s {
                columns[t - burn_in][i / 64] |= bit;
            }
        }
    }
    let columns = columns
        .into_iter()
        .enumerate()
        .map(|(j, words)| (j as Label + 1, BitColumn::from_words(words, n_transactions)));
    TransactionDatabase::from_columns(n_transactions, columns).expect("labels are distinct")
}

/// Size and density summary.
#[derive(Clone, Debug, PartialEq)]
pub struct DbStats {
    pub n_transactions: usize,
    pub n_items: usize,
    /// Sum of all transaction lengths.
    pub total_items: u64,
    /// Item supports at quantiles 0, 1/4, 1/2, 3/4, 1 (nearest rank).
    /// Empty when there are no items.
    pub support_quantiles: Vec<u64>,
}

impl DbStats {
    /// Mean items per transaction, `total_items / N`; `None` when N = 0.
    pub fn mean_items(&self) -> Option<f64> {
        (self.n_transactions > 0).then(|| self.total_items as f64 / self.n_transactions as f64)
    }
}

impl fmt::Display for DbStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} n={} Me=", self.n_transactions, self.n_items)?;
        match self.mean_items() {
            Some(me) => write!(f, "{me:.3}")?,
            None => write!(f, "-")?,
        }
        let q: Vec<String> = self.support_quantiles.iter().map(u64::to_string).collect();
        write!(f, " support_quantiles={}", q.join("/"))
    }
}

pub fn stats(db: &TransactionDatabase) -> DbStats {
    let mut supports: Vec<u64> = db.items().map(|i| db.support(i)).collect();
    supports.sort_unstable();
    let support_quantiles = if supports.is_empty() {
        Vec::new()
    } else {
        let last = supports.len() - 1;
        (0..=4).map(|k| supports[(k * last).div_ceil(4)]).collect()
    };
    DbStats {
        n_transactions: db.n_transactions(),
        n_items: db.n_items(),
        total_items: db.total_items(),
        support_quantiles,
    }
}
