use std::collections::BTreeMap;

use fwgray::{
    block_profile, build_transition_digraph, compress_cycle, construct_ocycle, decompress_cycle,
    enumerate_fixed_weight, enumerate_weight_range, exists_fixed_weight_ocycle, first_word,
    fwm_list, is_cyclic_rotation, last_word, witness_non_rotation, OcycleSolution, VerdictReason,
    Word,
};
use num_integer::gcd;
use proptest::prelude::*;

fn max_weight(m: u32, n: usize) -> u64 {
    u64::from(m - 1) * n as u64
}

fn word_strategy() -> impl Strategy<Value = (u32, Word)> {
    (2u32..6, 2usize..9).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0..m, n).prop_map(move |d| (m, Word::new(d)))
    })
}

proptest! {
    #[test]
    fn block_weights_sum_to_word_weight((_, w) in word_strategy(), s_seed in 0usize..100) {
        let s = 1 + s_seed % (w.len() - 1);
        let p = block_profile(&w, s).unwrap();
        prop_assert_eq!(w.len() % p.d, 0);
        prop_assert_eq!(p.weights.len(), w.len() / p.d);
        prop_assert_eq!(p.weights.iter().sum::<u64>(), w.weight());
    }

    #[test]
    fn rotation_is_an_equivalence(a in proptest::collection::vec(0u8..3, 0..7), shift in 0usize..10, other in proptest::collection::vec(0u8..3, 0..7)) {
        prop_assert!(is_cyclic_rotation(&a, &a));
        let mut r = a.clone();
        if !r.is_empty() {
            let k = shift % r.len();
            r.rotate_left(k);
        }
        prop_assert!(is_cyclic_rotation(&a, &r));
        prop_assert!(is_cyclic_rotation(&r, &a));
        prop_assert_eq!(is_cyclic_rotation(&a, &other), is_cyclic_rotation(&other, &a));
        prop_assert_eq!(is_cyclic_rotation(&r, &other), is_cyclic_rotation(&a, &other));
    }

    #[test]
    fn compression_round_trips(m in 2u32..4, n in 2usize..6, seed in any::<u64>()) {
        let s = 1 + (seed as usize) % (n - 1);
        let max = max_weight(m, n);
        let p = seed % max;
        let q = p + 1 + (seed >> 8) % (max - p);
        let set = enumerate_weight_range(m, n, p, q).unwrap();
        let sol = construct_ocycle(&set, s).unwrap();
        let packed = compress_cycle(&sol).unwrap();
        prop_assert_eq!(packed.len(), sol.len() * (n - s));
        prop_assert_eq!(decompress_cycle(&packed, n, s).unwrap(), sol.cycle);
    }
}

#[test]
fn witness_is_valid_for_every_admissible_tuple() {
    let mut checked = 0;
    for m in 2..=5u32 {
        for n in 2..=10usize {
            for d in (1..n).filter(|d| n % d == 0) {
                let s = n - d;
                for k in 2..max_weight(m, n).saturating_sub(1) {
                    let (a, b) = witness_non_rotation(m, n, k, s).unwrap();
                    assert_eq!((a.len(), b.len()), (n, n));
                    assert!(a.fits_alphabet(m) && b.fits_alphabet(m));
                    assert_eq!((a.weight(), b.weight()), (k, k), "m={m} n={n} k={k} s={s}");
                    let pa = block_profile(&a, s).unwrap().weights;
                    let pb = block_profile(&b, s).unwrap().weights;
                    assert!(!is_cyclic_rotation(&pa, &pb), "m={m} n={n} k={k} s={s}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn witness_words_sit_in_different_components() {
    for m in 2..=3u32 {
        for n in 2..=7usize {
            for d in (1..n).filter(|d| n % d == 0) {
                let s = n - d;
                for k in 2..max_weight(m, n).saturating_sub(1) {
                    let set = enumerate_fixed_weight(m, n, k as i64).unwrap();
                    let g = build_transition_digraph(&set, s).unwrap();
                    let (a, b) = witness_non_rotation(m, n, k, s).unwrap();
                    let ca = g.component_of(&a.s_prefix(s).unwrap()).unwrap();
                    let cb = g.component_of(&b.s_prefix(s).unwrap()).unwrap();
                    assert_ne!(ca, cb, "m={m} n={n} k={k} s={s}");
                }
            }
        }
    }
}

#[test]
fn fixed_weight_digraphs_are_balanced() {
    for m in 2..=4u32 {
        for n in 2..=6usize {
            for k in 0..=max_weight(m, n) as i64 {
                let set = enumerate_fixed_weight(m, n, k).unwrap();
                for s in 1..n {
                    assert!(build_transition_digraph(&set, s).unwrap().is_balanced());
                }
            }
        }
    }
}

#[test]
fn degenerate_weights_are_decided_by_construction() {
    for m in 2..=4u32 {
        for n in 2..=7usize {
            let max = max_weight(m, n) as i64;
            for k in [0, 1, max - 1, max] {
                for s in 1..n {
                    let v = exists_fixed_weight_ocycle(m, n, k, s).unwrap();
                    let set = enumerate_fixed_weight(m, n, k).unwrap();
                    let built = construct_ocycle(&set, s);
                    assert_eq!(v.exists, built.is_ok(), "m={m} n={n} k={k} s={s}");
                    if 1 < k && k < max - 1 {
                        assert_eq!(v.reason, VerdictReason::GcdCondition);
                    } else if v.exists {
                        assert_eq!(v.reason, VerdictReason::DegenerateChecked);
                    }
                }
            }
        }
    }
}

#[test]
fn euler_tours_use_every_edge_once() {
    for (m, n, p, q) in [(2, 5, 1, 3), (3, 4, 2, 5), (3, 3, 0, 6), (4, 3, 3, 4)] {
        let set = enumerate_weight_range(m, n, p, q).unwrap();
        for s in 1..n {
            let g = build_transition_digraph(&set, s).unwrap();
            let tour = g.euler_tour().unwrap();
            let mut present: BTreeMap<(Word, Word), usize> = BTreeMap::new();
            for (a, b, _) in g.edges() {
                *present.entry((a.clone(), b.clone())).or_default() += 1;
            }
            let mut walked: BTreeMap<(Word, Word), usize> = BTreeMap::new();
            for w in &tour {
                *walked
                    .entry((w.s_prefix(s).unwrap(), w.s_suffix(s).unwrap()))
                    .or_default() += 1;
            }
            assert_eq!(present, walked);
            for i in 0..tour.len() {
                let next = &tour[(i + 1) % tour.len()];
                assert_eq!(tour[i].s_suffix(s).unwrap(), next.s_prefix(s).unwrap());
            }
        }
    }
}

#[test]
fn construction_is_deterministic() {
    let set = enumerate_fixed_weight(3, 6, 5).unwrap();
    let first = construct_ocycle(&set, 2).unwrap();
    let mut shuffled = set.clone();
    shuffled.reverse();
    shuffled.rotate_left(7);
    for _ in 0..3 {
        assert_eq!(construct_ocycle(&set, 2).unwrap(), first);
        assert_eq!(construct_ocycle(&shuffled, 2).unwrap(), first);
    }
    assert_eq!(first.cycle[0], set[0]);
}

#[test]
fn gray_steps_move_weight_between_two_positions() {
    for m in 2..=4u32 {
        for n in 1..=6usize {
            for k in 0..=max_weight(m, n) as i64 {
                let list = fwm_list(m, n, k).unwrap().words;
                for pair in list.windows(2) {
                    let diffs: Vec<i64> = pair[0]
                        .iter()
                        .zip(pair[1].iter())
                        .filter(|(a, b)| a != b)
                        .map(|(&a, &b)| i64::from(b) - i64::from(a))
                        .collect();
                    assert_eq!(diffs.len(), 2);
                    assert_eq!(diffs[0], -diffs[1]);
                }
                // leading digits form contiguous increasing runs
                let leads: Vec<u32> = list.iter().map(|w| w[0]).collect();
                assert!(leads.windows(2).all(|p| p[0] <= p[1]), "m={m} n={n} k={k}");
            }
        }
    }
}

#[test]
fn endpoints_track_the_list() {
    for m in 2..=5u32 {
        for n in 1..=6usize {
            for k in 0..=max_weight(m, n) as i64 {
                let list = fwm_list(m, n, k).unwrap().words;
                assert_eq!(list.first(), Some(&first_word(m, n, k).unwrap()));
                assert_eq!(list.last(), Some(&last_word(m, n, k).unwrap()));
            }
        }
    }
}

#[test]
fn gcd_predicate_matches_construction_beyond_desk_sweep() {
    // m = 4 is outside the acceptance sweep
    for n in 2..=5usize {
        for s in 1..n {
            for k in 2..(3 * n as i64 - 1) {
                let set = enumerate_fixed_weight(4, n, k).unwrap();
                let built = construct_ocycle(&set, s);
                assert_eq!(built.is_ok(), n - s > gcd(n, s), "n={n} k={k} s={s}");
                if let Ok(OcycleSolution { cycle, .. }) = built {
                    assert_eq!(cycle.len(), set.len());
                }
            }
        }
    }
}
