//! Words over `{0, …, m-1}` and the parameter sets that describe families of them.
//!
//! Positions are 0-based internally: the leftmost digit (`x1` in the usual
//! one-based notation) lives at index 0.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A finite sequence of digits. Ordering is lexicographic on the digits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(digits: Vec<u32>) -> Self {
        Word(digits)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word `d^n`.
    pub fn repeat(d: u32, n: usize) -> Self {
        Word(vec![d; n])
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.0
    }

    /// Sum of the digits.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    /// True when every digit is below `m`.
    pub fn fits_alphabet(&self, m: u32) -> bool {
        self.0.iter().all(|&d| d < m)
    }

    /// The first `s` digits.
    pub fn s_prefix(&self, s: usize) -> Result<Word> {
        if s > self.len() {
            return Err(Error::OverlapOutOfRange { s, n: self.len() });
        }
        Ok(Word(self.0[..s].to_vec()))
    }

    /// The last `s` digits.
    pub fn s_suffix(&self, s: usize) -> Result<Word> {
        let n = self.len();
        if s > n {
            return Err(Error::OverlapOutOfRange { s, n });
        }
        Ok(Word(self.0[n - s..].to_vec()))
    }

    /// Number of positions where two equal-length words disagree.
    ///
    /// Panics if the lengths differ.
    pub fn hamming_distance(&self, other: &Word) -> usize {
        assert_eq!(
            self.len(),
            other.len(),
            "hamming distance of unequal lengths"
        );
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    /// Render in the text form used by the CLI: concatenated digits when
    /// `m <= 10`, comma-separated decimals otherwise.
    pub fn to_text(&self, m: u32) -> String {
        if m <= 10 {
            self.0
                .iter()
                .map(|&d| char::from_digit(d, 10).unwrap_or('?'))
                .collect()
        } else {
            self.0
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parse the text form. A comma anywhere selects the comma-separated
    /// form; otherwise each character is one decimal digit.
    pub fn parse(text: &str) -> Result<Word> {
        let text = text.trim();
        let bad = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.contains(',') {
            text.split(',')
                .map(|part| part.trim().parse::<u32>().map_err(|_| bad("not a number")))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| bad("not a decimal digit")))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

impl Deref for Word {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Word {
    fn from(digits: Vec<u32>) -> Self {
        Word(digits)
    }
}

impl From<&[u32]> for Word {
    fn from(digits: &[u32]) -> Self {
        Word(digits.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0.iter().max().map_or(0, |&d| d + 1);
        f.write_str(&self.to_text(m))
    }
}

/// Which weights a word family admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightSpec {
    /// Exactly weight `k`. Any integer is accepted; out-of-range values give the empty set.
    Fixed(i64),
    /// Weights in `p..=q` with `p < q`.
    Range { p: u64, q: u64 },
}

/// Alphabet size, word length and weight restriction of a word family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenParams {
    pub m: u32,
    pub n: usize,
    pub weight: WeightSpec,
}

impl GenParams {
    /// The fixed-weight family `B_k(m,n)`.
    pub fn fixed(m: u32, n: usize, k: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams(
                "alphabet size m must be at least 1".into(),
            ));
        }
        Ok(GenParams {
            m,
            n,
            weight: WeightSpec::Fixed(k),
        })
    }

    /// The weight-range family `B_p^q(m,n)`; requires `0 <= p < q <= (m-1)n`.
    pub fn range(m: u32, n: usize, p: u64, q: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams(
                "alphabet size m must be at least 1".into(),
            ));
        }
        if p >= q {
            return Err(Error::InvalidParams(format!(
                "need p < q, got p={p}, q={q}"
            )));
        }
        let max = max_weight(m, n);
        if q > max {
            return Err(Error::InvalidParams(format!(
                "q={q} exceeds the maximum weight (m-1)n={max}"
            )));
        }
        Ok(GenParams {
            m,
            n,
            weight: WeightSpec::Range { p, q },
        })
    }

    /// Largest weight any word of this family could have.
    pub fn max_weight(&self) -> u64 {
        max_weight(self.m, self.n)
    }

    /// Does `w` belong to the family?
    pub fn contains(&self, w: &Word) -> bool {
        if w.len() != self.n || !w.fits_alphabet(self.m) {
            return false;
        }
        let wt = w.weight();
        match self.weight {
            WeightSpec::Fixed(k) => k >= 0 && wt == k as u64,
            WeightSpec::Range { p, q } => (p..=q).contains(&wt),
        }
    }
}

/// `(m-1)·n`, the weight of the all-`(m-1)` word.
pub fn max_weight(m: u32, n: usize) -> u64 {
    u64::from(m.saturating_sub(1)) * n as u64
}

/// `k = q·(m-1) + r` with `0 <= r < m-1`. For `m = 1` both parts are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub q: u64,
    pub r: u32,
}

impl WeightDecomposition {
    pub fn of(k: u64, m: u32) -> Self {
        let top = u64::from(m.saturating_sub(1));
        if top == 0 {
            return WeightDecomposition { q: 0, r: 0 };
        }
        WeightDecomposition {
            q: k / top,
            r: (k % top) as u32,
        }
    }
}

/// Weight of a word.
pub fn weight(w: &Word) -> u64 {
    w.weight()
}
