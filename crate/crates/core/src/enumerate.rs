//! Exact enumeration and counting of fixed-weight and weight-range word sets.
//!
//! Enumeration emits words in ascending lexicographic order and is the
//! reference against which the Gray-code orderings are checked.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::word::{max_weight, GenParams, WeightSpec, Word};

/// Default upper bound on the number of words any full-list operation will build.
pub const DEFAULT_MATERIALIZATION_CAP: usize = 1_000_000;

/// `|B_k(m,n)|`, computed exactly by the recurrence
/// `C(m,n,k) = Σ_{j=0..min(m-1,k)} C(m,n-1,k-j)`.
pub fn count_fixed_weight(m: u32, n: usize, k: i64) -> BigUint {
    if m == 0 || k < 0 || k as u64 > max_weight(m, n) {
        return BigUint::zero();
    }
    let k = k as usize;
    let top = (m - 1) as usize;
    // row[j] = number of words of the current length with weight j
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::from(1u32);
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); k + 1];
        // sliding window sum over row[j-top..=j]
        let mut window = BigUint::zero();
        for j in 0..=k {
            window += &row[j];
            if j > top {
                window -= &row[j - top - 1];
            }
            next[j] = window.clone();
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Size of any word family.
pub fn count(params: &GenParams) -> BigUint {
    match params.weight {
        WeightSpec::Fixed(k) => count_fixed_weight(params.m, params.n, k),
        WeightSpec::Range { p, q } => (p..=q)
            .map(|k| count_fixed_weight(params.m, params.n, k as i64))
            .sum(),
    }
}

pub(crate) fn check_cap(count: &BigUint, cap: usize) -> Result<usize> {
    match count.to_usize() {
        Some(c) if c <= cap => Ok(c),
        _ => Err(Error::CapExceeded {
            count: count.to_string(),
            cap,
        }),
    }
}

/// All words of `B_k(m,n)` in ascending lexicographic order.
pub fn enumerate_fixed_weight(m: u32, n: usize, k: i64) -> Result<Vec<Word>> {
    enumerate_fixed_weight_with_cap(m, n, k, DEFAULT_MATERIALIZATION_CAP)
}

pub fn enumerate_fixed_weight_with_cap(m: u32, n: usize, k: i64, cap: usize) -> Result<Vec<Word>> {
    let params = GenParams::fixed(m, n, k)?;
    enumerate_with_cap(&params, cap)
}

/// All words of `B_p^q(m,n)` in ascending lexicographic order.
pub fn enumerate_weight_range(m: u32, n: usize, p: u64, q: u64) -> Result<Vec<Word>> {
    let params = GenParams::range(m, n, p, q)?;
    enumerate_with_cap(&params, DEFAULT_MATERIALIZATION_CAP)
}

pub fn enumerate(params: &GenParams) -> Result<Vec<Word>> {
    enumerate_with_cap(params, DEFAULT_MATERIALIZATION_CAP)
}

pub fn enumerate_with_cap(params: &GenParams, cap: usize) -> Result<Vec<Word>> {
    let size = check_cap(&count(params), cap)?;
    let (lo, hi) = match params.weight {
        WeightSpec::Fixed(k) if k < 0 => return Ok(Vec::new()),
        WeightSpec::Fixed(k) => (k as u64, k as u64),
        WeightSpec::Range { p, q } => (p, q),
    };
    let mut out = Vec::with_capacity(size);
    if size == 0 {
        return Ok(out);
    }
    let mut digits = Vec::with_capacity(params.n);
    lex_fill(params.m, params.n, lo, hi, 0, &mut digits, &mut out);
    debug_assert_eq!(out.len(), size);
    Ok(out)
}

fn lex_fill(
    m: u32,
    n: usize,
    lo: u64,
    hi: u64,
    sum: u64,
    digits: &mut Vec<u32>,
    out: &mut Vec<Word>,
) {
    if digits.len() == n {
        out.push(Word::new(digits.clone()));
        return;
    }
    let rest = max_weight(m, n - digits.len() - 1);
    for d in 0..m {
        let s = sum + u64::from(d);
        if s > hi {
            break;
        }
        if s + rest < lo {
            continue;
        }
        digits.push(d);
        lex_fill(m, n, lo, hi, s, digits, out);
        digits.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| Word::parse(s).unwrap()).collect()
    }

    /// Filter all m^n words by weight.
    fn brute(m: u32, n: usize, keep: impl Fn(u64) -> bool) -> Vec<Word> {
        let total = (m as usize).pow(n as u32);
        (0..total)
            .map(|mut x| {
                let mut d = vec![0; n];
                for slot in d.iter_mut().rev() {
                    *slot = (x % m as usize) as u32;
                    x /= m as usize;
                }
                Word::new(d)
            })
            .filter(|w| keep(w.weight()))
            .collect()
    }

    #[test]
    fn reference_as_a_set() {
        let got = enumerate_fixed_weight(3, 4, 5).unwrap();
        let mut reference = words(&[
            "0122", "0212", "0221", "1220", "1211", "1202", "1112", "1121", "1022", "2012", "2021",
            "2120", "2111", "2102", "2201", "2210",
        ]);
        reference.sort();
        assert_eq!(got, reference);
        assert_eq!(got.first().unwrap(), &Word::parse("0122").unwrap());
        assert_eq!(got.last().unwrap(), &Word::parse("2210").unwrap());
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            enumerate_fixed_weight(3, 5, 0).unwrap(),
            vec![Word::repeat(0, 5)]
        );
        assert_eq!(
            enumerate_fixed_weight(2, 4, 2).unwrap(),
            words(&["0011", "0101", "0110", "1001", "1010", "1100"])
        );
        assert_eq!(
            enumerate_fixed_weight(2, 0, 0).unwrap(),
            vec![Word::empty()]
        );
        assert!(enumerate_fixed_weight(2, 0, 1).unwrap().is_empty());
        assert!(enumerate_fixed_weight(3, 2, 5).unwrap().is_empty());
        assert!(enumerate_fixed_weight(3, 2, -1).unwrap().is_empty());
        assert_eq!(
            enumerate_fixed_weight(1, 3, 0).unwrap(),
            vec![Word::repeat(0, 3)]
        );
        assert!(enumerate_fixed_weight(1, 3, 1).unwrap().is_empty());
    }

    #[test]
    fn counts() {
        assert_eq!(count_fixed_weight(3, 4, 5), BigUint::from(16u32));
        assert_eq!(count_fixed_weight(7, 9, 0), BigUint::from(1u32));
        assert_eq!(count_fixed_weight(2, 6, 3), BigUint::from(20u32));
        assert_eq!(count_fixed_weight(2, 6, 7), BigUint::zero());
        assert_eq!(count_fixed_weight(2, 6, -2), BigUint::zero());
        // binomial oracle: C(200, 100) has 59 decimal digits
        let big = count_fixed_weight(2, 200, 100);
        let mut binom = BigUint::from(1u32);
        for i in 0..100u32 {
            binom = binom * BigUint::from(200 - i) / BigUint::from(i + 1);
        }
        assert_eq!(big, binom);
        assert!(big.bits() > 64);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_fixed_weight_with_cap(2, 6, 3, 19),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(
            enumerate_fixed_weight_with_cap(2, 6, 3, 20).unwrap().len(),
            20
        );
        assert!(enumerate_fixed_weight(2, 200, 100).is_err());
    }

    #[test]
    fn weight_range_matches_brute_force() {
        for m in 2..=3u32 {
            for n in 1..=5usize {
                let max = max_weight(m, n);
                for p in 0..max {
                    for q in p + 1..=max {
                        let got = enumerate_weight_range(m, n, p, q).unwrap();
                        assert_eq!(got, brute(m, n, |w| (p..=q).contains(&w)));
                        let params = GenParams::range(m, n, p, q).unwrap();
                        assert_eq!(count(&params), BigUint::from(got.len()));
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_weight_sweep_matches_brute_force() {
        for m in 2..=4u32 {
            for n in 0..=6usize {
                for k in 0..=max_weight(m, n) as i64 {
                    let got = enumerate_fixed_weight(m, n, k).unwrap();
                    assert_eq!(got, brute(m, n, |w| w == k as u64), "m={m} n={n} k={k}");
                    assert_eq!(count_fixed_weight(m, n, k), BigUint::from(got.len()));
                    assert!(got.windows(2).all(|p| p[0] < p[1]));
                    assert!(got.iter().all(|w| w.weight() == k as u64));
                }
            }
        }
    }
}
