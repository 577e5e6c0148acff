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

//! Association rule records and their text renderings.

use std::fmt;
use std::io::Write;

use crate::{ItemId, Label, Result};

/// Exact confidence `supp(C) / supp(A)`, kept as the two supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Confidence {
    pub num: u64,
    pub den: u64,
}

impl Confidence {
    pub fn new(num: u64, den: u64) -> Self {
        Confidence { num, den }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `num / den >= tau`, evaluated as `num >= tau * den`.
    pub fn meets(self, tau: f64) -> bool {
        self.num as f64 >= tau * self.den as f64
    }
}

impl fmt::Display for Confidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Rule `antecedent => consequent`, where `antecedent ∪ consequent` is the
/// frequent itemset the rule was generated from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule<T = ItemId> {
    pub antecedent: Vec<T>,
    pub consequent: Vec<T>,
    /// Support of the whole itemset.
    pub support: u64,
    pub confidence: Confidence,
}

impl<T: Copy> Rule<T> {
    pub fn map_items<U, F: Fn(T) -> U>(&self, f: F) -> Rule<U> {
        Rule {
            antecedent: self.antecedent.iter().map(|&i| f(i)).collect(),
            consequent: self.consequent.iter().map(|&i| f(i)).collect(),
            support: self.support,
            confidence: self.confidence,
        }
    }
}

impl Rule<ItemId> {
    pub fn labelled(&self, labels: &[Label]) -> Rule<Label> {
        self.map_items(|i| labels[i.index()])
    }
}

impl<T: Ord + Copy> Rule<T> {
    /// Same rule with both sides sorted, for order-independent comparison.
    pub fn normalized(&self) -> Rule<T> {
        let mut r = self.clone();
        r.antecedent.sort_unstable();
        r.consequent.sort_unstable();
        r
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// `A1,A2 -> B1,B2 TAB support TAB num/den TAB decimal`
impl<T: fmt::Display> fmt::Display for Rule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}\t{}\t{}\t{:.6}",
            join(&self.antecedent, ","),
            join(&self.consequent, ","),
            self.support,
            self.confidence,
            self.confidence.value()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RuleFormat {
    #[default]
    Text,
    Csv,
}

pub fn write_rules<W: Write, T: fmt::Display>(
    mut out: W,
    rules: &[Rule<T>],
    format: RuleFormat,
) -> Result<()> {
    match format {
        RuleFormat::Text => {
            for r in rules {
                writeln!(out, "{r}")?;
            }
        }
        RuleFormat::Csv => {
            writeln!(
                out,
                "antecedent,consequent,support,conf_num,conf_den,confidence"
            )?;
            for r in rules {
                writeln!(
                    out,
                    "{},{},{},{},{},{:.6}",
                    join(&r.antecedent, " "),
                    join(&r.consequent, " "),
                    r.support,
                    r.confidence.num,
                    r.confidence.den,
                    r.confidence.value()
                )?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let r: Rule<Label> = Rule {
            antecedent: vec![1, 4],
            consequent: vec![2],
            support: 2,
            confidence: Confidence::new(2, 3),
        };
        assert_eq!(r.to_string(), "1,4 -> 2\t2\t2/3\t0.666667");
        let mut csv = Vec::new();
        write_rules(&mut csv, &[r], RuleFormat::Csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "antecedent,consequent,support,conf_num,conf_den,confidence\n1 4,2,2,2,3,0.666667\n"
        );
    }

    #[test]
    fn confidence_threshold() {
        assert!(Confidence::new(1, 2).meets(0.5));
        assert!(!Confidence::new(1, 2).meets(0.5000001));
        assert!(Confidence::new(3, 4).meets(0.75));
        assert!(Confidence::new(2, 2).meets(1.0));
        assert!(Confidence::new(1, 7).meets(0.0));
    }
}
