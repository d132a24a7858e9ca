//! Block partitions of words by `d = gcd(n, s)`.
//!
//! Shifting a word by `s` positions permutes its digits only within the
//! cyclic sequence of length-`d` blocks, so when `n - s = d` the block
//! weights of a word, read as a cyclic sequence, never change along a walk
//! in the transition digraph. Two words whose block-weight sequences are not
//! rotations of each other therefore sit in different components.

use num_integer::gcd;

use crate::error::{Error, Result};
use crate::word::{max_weight, WeightDecomposition, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    /// Block length, `gcd(n, s)`.
    pub d: usize,
    /// Weight of each consecutive block, left to right.
    pub weights: Vec<u64>,
}

/// Partition `w` into `n/d` blocks of length `d = gcd(n, s)` and sum each block.
pub fn block_profile(w: &Word, s: usize) -> Result<BlockProfile> {
    let n = w.len();
    if s == 0 || s >= n {
        return Err(Error::OverlapOutOfRange { s, n });
    }
    let d = gcd(n, s);
    let weights = w
        .chunks(d)
        .map(|block| block.iter().map(|&x| u64::from(x)).sum())
        .collect();
    Ok(BlockProfile { d, weights })
}

/// True iff `b` is `a` rotated by some offset. Empty sequences are rotations
/// of each other; sequences of different lengths never are.
pub fn is_cyclic_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    (0..n).any(|shift| (0..n).all(|i| a[(i + shift) % n] == b[i]))
}

/// Two weight-`k` words whose block profiles are not rotations of each other,
/// certifying that the transition digraph of `B_k(m,n)` is disconnected when
/// `n - s = gcd(n, s)` and `1 < k < (m-1)n - 1`.
///
/// With `k = q(m-1) + r`, the pair is
///
/// ```text
/// A = 0^(n-q-1) r (m-1)^q
/// B = 1 0^(n-q-2) r (m-1)^(q-1) (m-2)
/// ```
///
/// `A` is always well formed. When the exponents in `B` go negative
/// (`q = 0` or `q = n-1`) or its profile happens to rotate onto `A`'s, `B`
/// is instead built from the first block-weight sequence, in lexicographic
/// order, that is not a rotation of `A`'s.
pub fn witness_non_rotation(m: u32, n: usize, k: u64, s: usize) -> Result<(Word, Word)> {
    if s == 0 || s >= n {
        return Err(Error::OverlapOutOfRange { s, n });
    }
    let d = gcd(n, s);
    if n - s != d {
        return Err(Error::InvalidParams(format!(
            "witness needs n-s = gcd(n,s); got n-s={}, gcd={d}",
            n - s
        )));
    }
    let max = max_weight(m, n);
    if !(k > 1 && k + 1 < max) {
        return Err(Error::InvalidParams(format!(
            "witness needs 1 < k < (m-1)n-1 = {}",
            max.saturating_sub(1)
        )));
    }
    let top = m - 1;
    let WeightDecomposition { q, r } = WeightDecomposition::of(k, m);
    let q = q as usize;

    let mut a = vec![0u32; n];
    for slot in &mut a[n - q..] {
        *slot = top;
    }
    a[n - q - 1] = r;
    let a = Word::new(a);
    let profile_a = block_profile(&a, s)?.weights;

    if let Some(b) = formula_b(m, n, q, r) {
        if !is_cyclic_rotation(&profile_a, &block_profile(&b, s)?.weights) {
            return Ok((a, b));
        }
    }

    let cap = u64::from(top) * d as u64;
    let blocks = n / d;
    let mut seq = vec![0u64; blocks];
    let found = first_sequence(&mut seq, 0, k, cap, &mut |cand: &[u64]| {
        !is_cyclic_rotation(&profile_a, cand)
    });
    if !found {
        // unreachable for the admitted parameter window
        return Err(Error::InvalidParams(
            "every block-weight sequence is a rotation of the minimum word's".into(),
        ));
    }
    Ok((a, realize_blocks(&seq, d, top)))
}

fn formula_b(m: u32, n: usize, q: usize, r: u32) -> Option<Word> {
    if m < 2 || q == 0 || q + 2 > n {
        return None;
    }
    let mut b = Vec::with_capacity(n);
    b.push(1);
    b.extend(std::iter::repeat_n(0, n - q - 2));
    b.push(r);
    b.extend(std::iter::repeat_n(m - 1, q - 1));
    b.push(m - 2);
    Some(Word::new(b))
}

/// Fill `seq[pos..]` with the lexicographically first entries in `[0, cap]`
/// summing to `rem` that satisfy `accept`.
fn first_sequence(
    seq: &mut [u64],
    pos: usize,
    rem: u64,
    cap: u64,
    accept: &mut dyn FnMut(&[u64]) -> bool,
) -> bool {
    if pos == seq.len() {
        return rem == 0 && accept(seq);
    }
    let slots_after = (seq.len() - pos - 1) as u64;
    for w in 0..=cap.min(rem) {
        if rem - w > slots_after * cap {
            continue;
        }
        seq[pos] = w;
        if first_sequence(seq, pos + 1, rem - w, cap, accept) {
            return true;
        }
    }
    false
}

/// A word whose length-`d` blocks have the given weights, each block packed
/// to the right.
fn realize_blocks(weights: &[u64], d: usize, top: u32) -> Word {
    let mut digits = Vec::with_capacity(weights.len() * d);
    for &w in weights {
        let mut block = vec![0u32; d];
        let mut left = w;
        for slot in block.iter_mut().rev() {
            let take = left.min(u64::from(top));
            *slot = take as u32;
            left -= take;
        }
        digits.extend(block);
    }
    Word::new(digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn profiles() {
        let p = block_profile(&w("1000"), 2).unwrap();
        assert_eq!((p.d, p.weights), (2, vec![1, 0]));
        assert_eq!(block_profile(&w("0011"), 2).unwrap().weights, vec![0, 2]);
        assert_eq!(block_profile(&w("0122"), 2).unwrap().weights, vec![1, 4]);
        assert_eq!(
            block_profile(&w("012210"), 4).unwrap().weights,
            vec![1, 4, 1]
        );
        assert_eq!(
            block_profile(&w("0122"), 3).unwrap().weights,
            vec![0, 1, 2, 2]
        );
        assert!(block_profile(&w("0122"), 0).is_err());
        assert!(block_profile(&w("0122"), 4).is_err());
    }

    #[test]
    fn rotations() {
        assert!(is_cyclic_rotation(&[1, 0], &[0, 1]));
        assert!(!is_cyclic_rotation(&[0, 2], &[1, 1]));
        assert!(is_cyclic_rotation(&[1, 2, 3], &[2, 3, 1]));
        assert!(!is_cyclic_rotation(&[1, 2, 3], &[1, 3, 2]));
        assert!(is_cyclic_rotation::<u64>(&[], &[]));
        assert!(!is_cyclic_rotation(&[1], &[1, 1]));
    }

    #[test]
    fn witness_examples() {
        let (a, b) = witness_non_rotation(2, 4, 2, 2).unwrap();
        assert_eq!((a.clone(), b.clone()), (w("0011"), w("1010")));
        assert_eq!(block_profile(&a, 2).unwrap().weights, vec![0, 2]);
        assert_eq!(block_profile(&b, 2).unwrap().weights, vec![1, 1]);

        let (a, b) = witness_non_rotation(3, 6, 7, 3).unwrap();
        assert_eq!((a.clone(), b.clone()), (w("001222"), w("101221")));
        assert_eq!((a.weight(), b.weight()), (7, 7));

        let (a, b) = witness_non_rotation(2, 6, 3, 3).unwrap();
        assert_eq!((a, b), (w("000111"), w("100110")));
    }

    #[test]
    fn witness_fallback_when_formula_is_undefined() {
        // m=4, k=2: q=0 so B's (m-1)^(q-1) has a negative exponent
        let (a, b) = witness_non_rotation(4, 4, 2, 2).unwrap();
        assert_eq!(a, w("0002"));
        assert_eq!(b.weight(), 2);
        let pa = block_profile(&a, 2).unwrap().weights;
        let pb = block_profile(&b, 2).unwrap().weights;
        assert!(!is_cyclic_rotation(&pa, &pb));
    }

    #[test]
    fn witness_preconditions() {
        assert!(witness_non_rotation(2, 4, 2, 1).is_err()); // n-s=3, gcd=1
        assert!(witness_non_rotation(2, 4, 1, 2).is_err()); // k too small
        assert!(witness_non_rotation(2, 4, 3, 2).is_err()); // k = (m-1)n-1
        assert!(witness_non_rotation(2, 4, 2, 4).is_err());
    }
}
