//! Reflected Gray code for fixed-weight m-ary words.
//!
//! The list for `(m, n, k)` is the concatenation, for leading digit
//! `i = 0, 1, …, min(m-1, k)`, of `i` prefixed onto the list for
//! `(m, n-1, k-i)`, where that sublist is reversed whenever `i` is odd.
//! Consecutive words differ in exactly two positions.
//!
//! Reversal is never materialized: a sublist under a prefix with odd digit
//! sum is walked backwards instead. [`fwm_list`] does this recursively and
//! [`FwmStream`] does it with an explicit per-position state, so the stream
//! needs only `O(n)` memory.

use std::fmt;

use num_bigint::BigUint;

use crate::enumerate::{check_cap, count_fixed_weight, DEFAULT_MATERIALIZATION_CAP};
use crate::error::{Error, Result};
use crate::word::{max_weight, GenParams, WeightDecomposition, Word};

/// An ordered Gray-code listing of `B_k(m,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayList {
    pub params: GenParams,
    pub words: Vec<Word>,
}

impl GrayList {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Build the full Gray-code list, refusing sets larger than the default cap.
pub fn fwm_list(m: u32, n: usize, k: i64) -> Result<GrayList> {
    fwm_list_with_cap(m, n, k, DEFAULT_MATERIALIZATION_CAP)
}

pub fn fwm_list_with_cap(m: u32, n: usize, k: i64, cap: usize) -> Result<GrayList> {
    let params = GenParams::fixed(m, n, k)?;
    let size = check_cap(&count_fixed_weight(m, n, k), cap)?;
    let mut words = Vec::with_capacity(size);
    if k >= 0 && (k as u64) <= max_weight(m, n) {
        let mut prefix = Vec::with_capacity(n);
        reflect(m, n, k as u64, false, &mut prefix, &mut words);
    }
    Ok(GrayList { params, words })
}

fn reflect(m: u32, n: usize, k: u64, reversed: bool, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
    if n == 0 {
        // guard already established k == 0 here
        out.push(Word::new(prefix.clone()));
        return;
    }
    let rest = max_weight(m, n - 1);
    let hi = u64::from(m - 1).min(k);
    let lo = k.saturating_sub(rest);
    let mut visit = |i: u64| {
        prefix.push(i as u32);
        reflect(m, n - 1, k - i, reversed ^ (i % 2 == 1), prefix, out);
        prefix.pop();
    };
    if reversed {
        (lo..=hi).rev().for_each(&mut visit);
    } else {
        (lo..=hi).for_each(&mut visit);
    }
}

/// Streaming form of [`fwm_list`]: yields the same words in the same order
/// while holding only the current word and its running prefix sums.
#[derive(Debug, Clone)]
pub struct FwmStream {
    m: u32,
    digits: Vec<u32>,
    /// `sums[j]` is the digit sum of positions `0..j`.
    sums: Vec<u64>,
    k: u64,
    state: StreamState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StreamState {
    Fresh,
    Running,
    Done,
}

/// Start a lazy Gray-code generator for `B_k(m,n)`.
pub fn fwm_stream(m: u32, n: usize, k: i64) -> FwmStream {
    let nonempty = m >= 1 && k >= 0 && (k as u64) <= max_weight(m, n);
    FwmStream {
        m,
        digits: vec![0; n],
        sums: vec![0; n + 1],
        k: k.max(0) as u64,
        state: if nonempty {
            StreamState::Fresh
        } else {
            StreamState::Done
        },
    }
}

impl FwmStream {
    /// Admissible digits at `pos` given the prefix before it.
    fn bounds(&self, pos: usize) -> (u32, u32) {
        let n = self.digits.len();
        let rem = self.k - self.sums[pos];
        let rest = max_weight(self.m, n - pos - 1);
        let hi = u64::from(self.m - 1).min(rem);
        let lo = rem.saturating_sub(rest);
        (lo as u32, hi as u32)
    }

    /// Odd prefix sum means this position is walked high-to-low.
    fn descending(&self, pos: usize) -> bool {
        self.sums[pos] % 2 == 1
    }

    /// Reset positions `from..` to the first word of their sublist.
    fn settle(&mut self, from: usize) {
        for pos in from..self.digits.len() {
            let (lo, hi) = self.bounds(pos);
            let d = if self.descending(pos) { hi } else { lo };
            self.digits[pos] = d;
            self.sums[pos + 1] = self.sums[pos] + u64::from(d);
        }
    }

    /// Move to the next word; false when the list is exhausted.
    fn advance(&mut self) -> bool {
        for pos in (0..self.digits.len()).rev() {
            let (lo, hi) = self.bounds(pos);
            let d = self.digits[pos];
            let next = if self.descending(pos) {
                (d > lo).then(|| d - 1)
            } else {
                (d < hi).then(|| d + 1)
            };
            if let Some(d) = next {
                self.digits[pos] = d;
                self.sums[pos + 1] = self.sums[pos] + u64::from(d);
                self.settle(pos + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for FwmStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        match self.state {
            StreamState::Done => return None,
            StreamState::Fresh => {
                self.settle(0);
                self.state = StreamState::Running;
            }
            StreamState::Running => {
                if !self.advance() {
                    self.state = StreamState::Done;
                    return None;
                }
            }
        }
        Some(Word::new(self.digits.clone()))
    }
}

fn check_endpoint_params(m: u32, n: usize, k: i64) -> Result<u64> {
    if m == 0 || n == 0 || k < 0 || k as u64 > max_weight(m, n) {
        return Err(Error::InvalidParams(format!(
            "B_k(m,n) is empty or degenerate for m={m}, n={n}, k={k}"
        )));
    }
    Ok(k as u64)
}

/// `0…0 r (m-1)^q` written into `out`, where `k = q(m-1) + r`.
fn min_word_into(out: &mut [u32], m: u32, k: u64) {
    out.fill(0);
    if m < 2 {
        return;
    }
    let WeightDecomposition { q, r } = WeightDecomposition::of(k, m);
    let len = out.len();
    let q = q as usize;
    for slot in &mut out[len - q..] {
        *slot = m - 1;
    }
    if r > 0 {
        out[len - q - 1] = r;
    }
}

/// Head of the Gray-code list: the lexicographically least word `0…0 r (m-1)^q`.
pub fn first_word(m: u32, n: usize, k: i64) -> Result<Word> {
    let k = check_endpoint_params(m, n, k)?;
    let mut digits = vec![0; n];
    min_word_into(&mut digits, m, k);
    Ok(Word::new(digits))
}

/// Tail of the Gray-code list.
///
/// With `u = min(m-1, k)` and `k - u = q'(m-1) + r'`, the tail is
/// `u (m-1)^q' r' 0…0` for even `u` and `u 0…0 r' (m-1)^q'` for odd `u`.
pub fn last_word(m: u32, n: usize, k: i64) -> Result<Word> {
    let k = check_endpoint_params(m, n, k)?;
    let mut digits = vec![0; n];
    let lead = u64::from(m - 1).min(k);
    digits[0] = lead as u32;
    min_word_into(&mut digits[1..], m, k - lead);
    if lead % 2 == 0 {
        digits[1..].reverse();
    }
    Ok(Word::new(digits))
}

/// What went wrong at the first bad spot of a candidate Gray list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrayViolation {
    /// The word at this index is not in `B_k(m,n)`.
    NotInSet,
    /// The word at this index already appeared earlier.
    Duplicate,
    /// Words at `index` and `index + 1` differ in this many positions.
    Distance(usize),
    /// The list ended with this many words of `B_k(m,n)` never listed.
    Missing(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayReport {
    pub ok: bool,
    pub first_violation: Option<(usize, GrayViolation)>,
}

impl fmt::Display for GrayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_violation {
            None => f.write_str("ok"),
            Some((i, GrayViolation::NotInSet)) => write!(f, "word {i} is not in the set"),
            Some((i, GrayViolation::Duplicate)) => write!(f, "word {i} is a duplicate"),
            Some((i, GrayViolation::Distance(d))) => {
                write!(f, "words {i} and {} differ in {d} positions", i + 1)
            }
            Some((_, GrayViolation::Missing(c))) => write!(f, "{c} words of the set are missing"),
        }
    }
}

/// Check that `list` enumerates `B_k(m,n)` exactly once with every adjacent
/// pair at Hamming distance exactly two. Cyclic closure is not required.
pub fn verify_gray(list: &[Word], m: u32, n: usize, k: i64) -> GrayReport {
    let fail = |i, v| GrayReport {
        ok: false,
        first_violation: Some((i, v)),
    };
    let Ok(params) = GenParams::fixed(m, n, k) else {
        return fail(0, GrayViolation::NotInSet);
    };
    let mut seen = std::collections::HashSet::with_capacity(list.len());
    for (i, w) in list.iter().enumerate() {
        if !params.contains(w) {
            return fail(i, GrayViolation::NotInSet);
        }
        if !seen.insert(w) {
            return fail(i, GrayViolation::Duplicate);
        }
        if i > 0 {
            let dist = list[i - 1].hamming_distance(w);
            if dist != 2 {
                return fail(i - 1, GrayViolation::Distance(dist));
            }
        }
    }
    let total = count_fixed_weight(m, n, k);
    let listed = BigUint::from(list.len());
    if listed < total {
        return fail(
            list.len(),
            GrayViolation::Missing((total - listed).to_string()),
        );
    }
    GrayReport {
        ok: true,
        first_violation: None,
    }
}
