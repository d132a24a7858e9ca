//! s-overlap cycles: cyclic orderings of a word set in which the last `s`
//! digits of each word are the first `s` digits of the next.

use std::collections::HashSet;
use std::fmt;

use num_integer::gcd;

use crate::digraph::build_transition_digraph;
use crate::enumerate::{enumerate_fixed_weight, enumerate_weight_range};
use crate::error::{Error, EulerFailure, Result};
use crate::word::{max_weight, GenParams, Word};

/// A verified s-overlap cycle, rotated to start at its smallest word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcycleSolution {
    pub s: usize,
    pub cycle: Vec<Word>,
}

impl OcycleSolution {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

fn canonicalize(mut cycle: Vec<Word>) -> Vec<Word> {
    if let Some(start) = (0..cycle.len()).min_by_key(|&i| &cycle[i]) {
        cycle.rotate_left(start);
    }
    cycle
}

/// Order `words` into an s-overlap cycle via an Euler tour of their
/// transition digraph.
pub fn construct_ocycle(words: &[Word], s: usize) -> Result<OcycleSolution> {
    if words.is_empty() {
        return Err(Error::EmptySet);
    }
    let graph = build_transition_digraph(words, s)?;
    if let [only] = words {
        if only.s_prefix(s)? != only.s_suffix(s)? {
            return Err(Error::SingletonMismatch(only.to_string()));
        }
    }
    let tour = graph.euler_tour()?;
    Ok(OcycleSolution {
        s,
        cycle: canonicalize(tour),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OcycleViolation {
    /// Word at this index has the wrong length.
    Length,
    /// Word at this index is not in the target set.
    NotInSet,
    /// Word at this index appeared earlier.
    Duplicate,
    /// Suffix of the word at this index does not match the next word's prefix.
    Overlap,
    /// Some words of the set never appear.
    Missing(usize),
    /// Overlap length outside `1..n`.
    BadOverlap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OcycleReport {
    pub ok: bool,
    pub first_violation: Option<(usize, OcycleViolation)>,
}

impl fmt::Display for OcycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_violation {
            None => f.write_str("ok"),
            Some((i, OcycleViolation::Length)) => write!(f, "word {i} has the wrong length"),
            Some((i, OcycleViolation::NotInSet)) => write!(f, "word {i} is not in the set"),
            Some((i, OcycleViolation::Duplicate)) => write!(f, "word {i} is a duplicate"),
            Some((i, OcycleViolation::Overlap)) => {
                write!(f, "word {i} does not overlap its successor")
            }
            Some((_, OcycleViolation::Missing(c))) => write!(f, "{c} words of the set are missing"),
            Some((_, OcycleViolation::BadOverlap)) => f.write_str("overlap length out of range"),
        }
    }
}

/// Check that `cycle` lists every word of `set` exactly once and that every
/// cyclically consecutive pair overlaps in `s` digits.
pub fn verify_ocycle(cycle: &[Word], set: &[Word], s: usize) -> OcycleReport {
    let members: HashSet<&Word> = set.iter().collect();
    check_cycle(cycle, s, Some(&members))
}

/// Like [`verify_ocycle`] with the set taken to be the cycle's own words.
pub fn verify_ocycle_self(cycle: &[Word], s: usize) -> OcycleReport {
    check_cycle(cycle, s, None)
}

fn check_cycle(cycle: &[Word], s: usize, members: Option<&HashSet<&Word>>) -> OcycleReport {
    let fail = |i, v| OcycleReport {
        ok: false,
        first_violation: Some((i, v)),
    };
    let n = match (
        cycle.first(),
        members.and_then(|m| m.iter().next().copied()),
    ) {
        (Some(w), _) | (None, Some(w)) => w.len(),
        (None, None) => {
            return OcycleReport {
                ok: true,
                first_violation: None,
            }
        }
    };
    if s == 0 || s >= n {
        return fail(0, OcycleViolation::BadOverlap);
    }
    let mut seen = HashSet::with_capacity(cycle.len());
    for (i, w) in cycle.iter().enumerate() {
        if w.len() != n {
            return fail(i, OcycleViolation::Length);
        }
        if members.is_some_and(|m| !m.contains(w)) {
            return fail(i, OcycleViolation::NotInSet);
        }
        if !seen.insert(w) {
            return fail(i, OcycleViolation::Duplicate);
        }
    }
    for i in 0..cycle.len() {
        let next = &cycle[(i + 1) % cycle.len()];
        if cycle[i][n - s..] != next[..s] {
            return fail(i, OcycleViolation::Overlap);
        }
    }
    if let Some(m) = members {
        if seen.len() < m.len() {
            return fail(cycle.len(), OcycleViolation::Missing(m.len() - seen.len()));
        }
    }
    OcycleReport {
        ok: true,
        first_violation: None,
    }
}

/// Compressed cyclic form: the first `n - s` digits of each word in turn.
/// Reading `n` digits cyclically from every multiple of `n - s` gives the
/// words back in cycle order.
pub fn compress_cycle(sol: &OcycleSolution) -> Result<Word> {
    let n = sol.cycle.first().map_or(0, |w| w.len());
    if let Some((i, _)) = verify_ocycle_self(&sol.cycle, sol.s).first_violation {
        return Err(Error::UnverifiedCycle(i));
    }
    let stride = n - sol.s;
    let mut digits = Vec::with_capacity(sol.cycle.len() * stride);
    for w in &sol.cycle {
        digits.extend_from_slice(&w[..stride]);
    }
    Ok(Word::new(digits))
}

/// Inverse of [`compress_cycle`] for words of length `n` overlapping in `s`.
pub fn decompress_cycle(text: &Word, n: usize, s: usize) -> Result<Vec<Word>> {
    if s == 0 || s >= n {
        return Err(Error::OverlapOutOfRange { s, n });
    }
    let stride = n - s;
    let len = text.len();
    if !len.is_multiple_of(stride) {
        return Err(Error::InvalidParams(format!(
            "compressed length {len} is not a multiple of n-s={stride}"
        )));
    }
    Ok((0..len / stride)
        .map(|i| Word::new((0..n).map(|j| text[(i * stride + j) % len]).collect()))
        .collect())
}

/// Why an ocycle does or does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictReason {
    GcdCondition,
    TheoremWeightRange,
    Constructed,
    DigraphDisconnected,
    DigraphUnbalanced,
    EmptySet,
    DegenerateChecked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub reason: VerdictReason,
}

impl fmt::Display for ExistenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.exists { "yes" } else { "no" };
        let why = match (self.reason, self.exists) {
            (VerdictReason::GcdCondition, true) => "n-s > gcd(n,s)",
            (VerdictReason::GcdCondition, false) => "n-s = gcd(n,s)",
            (VerdictReason::TheoremWeightRange, _) => "weight-range set",
            (VerdictReason::Constructed, _) => "constructed",
            (VerdictReason::DegenerateChecked, _) => "checked by construction",
            (VerdictReason::DigraphDisconnected, _) => "transition digraph disconnected",
            (VerdictReason::DigraphUnbalanced, _) => "transition digraph unbalanced",
            (VerdictReason::EmptySet, _) => "empty set",
        };
        write!(f, "{word} ({why})")
    }
}

/// Decide by building the ocycle.
pub fn exists_ocycle_for_set(words: &[Word], s: usize) -> Result<ExistenceVerdict> {
    let verdict = |exists, reason| Ok(ExistenceVerdict { exists, reason });
    match construct_ocycle(words, s) {
        Ok(_) => verdict(true, VerdictReason::Constructed),
        Err(Error::EmptySet) => verdict(false, VerdictReason::EmptySet),
        Err(Error::NotEulerian(EulerFailure::Disconnected)) => {
            verdict(false, VerdictReason::DigraphDisconnected)
        }
        Err(Error::NotEulerian(_)) | Err(Error::SingletonMismatch(_)) => {
            verdict(false, VerdictReason::DigraphUnbalanced)
        }
        Err(e) => Err(e),
    }
}

fn check_overlap(n: usize, s: usize) -> Result<()> {
    if s == 0 || s >= n {
        return Err(Error::OverlapOutOfRange { s, n });
    }
    Ok(())
}

/// Does `B_k(m,n)` admit an s-ocycle?
///
/// Inside `1 < k < (m-1)n - 1` the answer is `n - s > gcd(n, s)`. Outside
/// that window the set is tiny or a single permutation class, and the
/// answer comes from constructing the cycle.
pub fn exists_fixed_weight_ocycle(m: u32, n: usize, k: i64, s: usize) -> Result<ExistenceVerdict> {
    GenParams::fixed(m, n, k)?;
    check_overlap(n, s)?;
    let max = max_weight(m, n) as i64;
    if k < 0 || k > max {
        return Ok(ExistenceVerdict {
            exists: false,
            reason: VerdictReason::EmptySet,
        });
    }
    if 1 < k && k < max - 1 {
        return Ok(ExistenceVerdict {
            exists: n - s > gcd(n, s),
            reason: VerdictReason::GcdCondition,
        });
    }
    let words = enumerate_fixed_weight(m, n, k)?;
    let mut verdict = exists_ocycle_for_set(&words, s)?;
    if verdict.exists {
        verdict.reason = VerdictReason::DegenerateChecked;
    }
    Ok(verdict)
}

/// Every weight-range set `B_p^q(m,n)` with `p < q` admits an s-ocycle.
pub fn exists_weight_range_ocycle(
    m: u32,
    n: usize,
    p: u64,
    q: u64,
    s: usize,
) -> Result<ExistenceVerdict> {
    GenParams::range(m, n, p, q)?;
    check_overlap(n, s)?;
    Ok(ExistenceVerdict {
        exists: true,
        reason: VerdictReason::TheoremWeightRange,
    })
}

/// Construct an s-ocycle for `B_k(m,n)`.
pub fn fixed_weight_ocycle(m: u32, n: usize, k: i64, s: usize) -> Result<OcycleSolution> {
    check_overlap(n, s)?;
    construct_ocycle(&enumerate_fixed_weight(m, n, k)?, s)
}

/// Construct an s-ocycle for `B_p^q(m,n)`.
pub fn weight_range_ocycle(m: u32, n: usize, p: u64, q: u64, s: usize) -> Result<OcycleSolution> {
    check_overlap(n, s)?;
    construct_ocycle(&enumerate_weight_range(m, n, p, q)?, s)
}
