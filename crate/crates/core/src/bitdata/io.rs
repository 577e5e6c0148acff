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

use std::io::{BufRead, Write};

use super::{BitColumn, TransactionDatabase};
use crate::{Error, Label, Result};

/// Side information gathered while reading a transaction file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadStats {
    /// Blank lines skipped; they are not counted as transactions.
    pub blank_lines: usize,
}

impl TransactionDatabase {
    /// Reads the horizontal (FIMI) format: one transaction per line, item
    /// labels as non-negative decimal integers separated by spaces or tabs.
    pub fn read_horizontal<R: BufRead>(reader: R) -> Result<(Self, LoadStats)> {
        let mut stats = LoadStats::default();
        let mut rows: Vec<Vec<Label>> = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            let mut row = Vec::new();
            for token in line.split_ascii_whitespace() {
                let label = token.parse::<Label>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid item label {token:?}"),
                })?;
                row.push(label);
            }
            if row.is_empty() {
                stats.blank_lines += 1;
                continue;
            }
            rows.push(row);
        }
        if stats.blank_lines > 0 {
            log::warn!(
                "skipped {} blank line(s) in transaction input",
                stats.blank_lines
            );
        }
        Ok((TransactionDatabase::from_transactions(rows), stats))
    }

    /// Writes one line per transaction with labels in ascending order.
    /// Empty transactions become blank lines, which a reader skips.
    pub fn write_horizontal<W: Write>(&self, mut out: W) -> Result<()> {
        let mut by_label: Vec<(Label, &BitColumn)> = self
            .items()
            .map(|i| (self.label(i), self.column(i)))
            .collect();
        by_label.sort_unstable_by_key(|&(l, _)| l);
        let mut line = String::new();
        for tid in 0..self.n_transactions() {
            line.clear();
            for (label, col) in &by_label {
                if col.get(tid) {
                    if !line.is_empty() {
                        line.push(' ');
                    }
                    line.push_str(&label.to_string());
                }
            }
            line.push('\n');
            out.write_all(line.as_bytes())?;
        }
        out.flush()?;
        Ok(())
    }

    /// Reads a 0/1 matrix in CSV form. The header row holds the item
    /// labels; each following non-blank row is one transaction.
    pub fn read_csv_matrix<R: BufRead>(reader: R) -> Result<(Self, LoadStats)> {
        let mut stats = LoadStats::default();
        let mut lines = reader.lines().enumerate();
        let mut labels: Vec<Label> = Vec::new();
        for (lineno, line) in lines.by_ref() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            for field in line.split(',') {
                let field = field.trim();
                labels.push(field.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid item label {field:?} in header"),
                })?);
            }
            break;
        }
        let mut rows: Vec<Vec<bool>> = Vec::new();
        for (lineno, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                stats.blank_lines += 1;
                continue;
            }
            let row = line
                .split(',')
                .map(|f| match f.trim() {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected 0 or 1, got {other:?}"),
                    }),
                })
                .collect::<Result<Vec<bool>>>()?;
            if row.len() != labels.len() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected {} fields, got {}", labels.len(), row.len()),
                });
            }
            rows.push(row);
        }
        if stats.blank_lines > 0 {
            log::warn!(
                "skipped {} blank line(s) in matrix input",
                stats.blank_lines
            );
        }
        let n = rows.len();
        let columns = labels.iter().enumerate().map(|(j, &label)| {
            let col = BitColumn::from_indices(n, (0..n).filter(|&i| rows[i][j]))
                .expect("indices are in range");
            (label, col)
        });
        let db = TransactionDatabase::from_columns(n, columns.collect::<Vec<_>>())?;
        Ok((db, stats))
    }
}
