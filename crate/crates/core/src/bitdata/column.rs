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

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// Packed observation vector of one item (or itemset): bit `i` is set iff
/// transaction `i` contains it.
///
/// Bits past `len` in the last word are always zero, so word-wise
/// population counts never need masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitColumn {
    words: Vec<u64>,
    len: usize,
}

impl BitColumn {
    pub fn zeros(len: usize) -> Self {
        BitColumn {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    /// The all-ones vector; the observation vector of the empty itemset.
    pub fn ones(len: usize) -> Self {
        let mut c = BitColumn {
            words: vec![u64::MAX; len.div_ceil(WORD_BITS)],
            len,
        };
        c.clear_tail();
        c
    }

    /// Builds a column from the indices of its set bits.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Result<Self> {
        let mut c = BitColumn::zeros(len);
        for i in ones {
            if i >= len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    found: i + 1,
                });
            }
            c.set(i);
        }
        Ok(c)
    }

    pub(crate) fn from_words(words: Vec<u64>, len: usize) -> Self {
        debug_assert_eq!(words.len(), len.div_ceil(WORD_BITS));
        let mut c = BitColumn { words, len };
        c.clear_tail();
        c
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    /// Population count: the support of the itemset this vector observes.
    #[inline]
    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Bitwise AND, i.e. the product of the two indicator vectors.
    pub fn intersect(&self, other: &BitColumn) -> Result<BitColumn> {
        self.check_len(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(BitColumn {
            words,
            len: self.len,
        })
    }

    /// Writes `a AND b` into `self` and returns its population count.
    /// All three columns must have the same length.
    #[inline]
    pub fn assign_and(&mut self, a: &BitColumn, b: &BitColumn) -> u64 {
        debug_assert!(a.len == b.len && a.len == self.len);
        let mut count = 0u64;
        for ((o, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            let w = x & y;
            *o = w;
            count += u64::from(w.count_ones());
        }
        count
    }

    pub(crate) fn check_len(&self, other: &BitColumn) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + t)
            })
        })
    }
}

/// Renders transaction 0 first, e.g. `10110`.
impl fmt::Display for BitColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 128 {
            write!(f, "BitColumn({self})")
        } else {
            write!(f, "BitColumn(len={}, ones={})", self.len, self.count_ones())
        }
    }
}

impl FromStr for BitColumn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = BitColumn::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '1' => c.set(i),
                '0' => {}
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("invalid bit character {other:?}"),
                    })
                }
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn col(s: &str) -> BitColumn {
        s.parse().unwrap()
    }

    #[test]
    fn d5_intersection() {
        // columns of items 1, 2 and 3 in the five-row example database
        let a = col("11010");
        let b = col("11101");
        assert_eq!(a.intersect(&b).unwrap(), col("11000"));
        assert_eq!(a.intersect(&col("01100")).unwrap(), col("01000"));
        assert_eq!(b.count_ones(), 4);
    }

    #[test]
    fn identities() {
        let a = col("11010");
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&BitColumn::ones(5)).unwrap(), a);
        assert_eq!(BitColumn::zeros(5).count_ones(), 0);
        assert_eq!(BitColumn::ones(5).count_ones(), 5);
        assert_eq!(BitColumn::ones(130).count_ones(), 130);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let err = col("101").intersect(&col("1011")).unwrap_err();
        assert!(matches!(
            err,
            Error::LengthMismatch {
                expected: 3,
                found: 4
            }
        ));
    }

    #[test]
    fn iter_ones_crosses_words() {
        let c = BitColumn::from_indices(200, [0, 63, 64, 130, 199]).unwrap();
        assert_eq!(c.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 130, 199]);
        assert!(BitColumn::from_indices(10, [10]).is_err());
    }

    fn column(len: usize) -> impl Strategy<Value = BitColumn> {
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            BitColumn::from_indices(
                len,
                bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
            )
            .unwrap()
        })
    }

    fn three_columns() -> impl Strategy<Value = (BitColumn, BitColumn, BitColumn)> {
        (0usize..300).prop_flat_map(|n| (column(n), column(n), column(n)))
    }

    proptest! {
        #[test]
        fn support_is_anti_monotone((a, b, _) in three_columns()) {
            let s = a.intersect(&b).unwrap().count_ones();
            prop_assert!(s <= a.count_ones().min(b.count_ones()));
        }

        #[test]
        fn intersect_commutes_and_associates((a, b, c) in three_columns()) {
            prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
            let left = a.intersect(&b).unwrap().intersect(&c).unwrap();
            let right = a.intersect(&b.intersect(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn assign_and_matches_intersect((a, b, _) in three_columns()) {
            let mut out = BitColumn::zeros(a.len());
            let n = out.assign_and(&a, &b);
            let expected = a.intersect(&b).unwrap();
            prop_assert_eq!(n, expected.count_ones());
            prop_assert_eq!(out, expected);
        }
    }
}
