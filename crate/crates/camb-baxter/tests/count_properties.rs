//! Counting checks for twin pairs: the gap matrix recursion against direct
//! enumeration, the table of per-signature values, symmetries of the count,
//! switch set monotonicity, bounds, and canopy tallies.

use camb_baxter::matrix::{
    baxter_number, bc_census, bc_number, bc_number_brute, interior_switch_set, signature_orbit,
};
use camb_baxter::twin::{baxter_p_symbol, canopy_tally, twin_pairs};
use camb_core::notation::parse_signature;
use camb_core::perm::permutations_with_signature;
use camb_core::sign::{
    all_signatures, alternating_signature, constant_signature, format_signature,
    negate_signature, reverse_signature, Sign, Signature,
};
use std::collections::BTreeSet;

fn sig(s: &str) -> Signature {
    parse_signature(s).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut v = 1u64;
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    v
}

#[test]
fn recursion_matches_enumeration_for_every_signature() {
    for n in 0..=6 {
        for s in all_signatures(n) {
            let by_matrix = bc_number(&s);
            let by_maximal_words = bc_number_brute(&s);
            let by_fibers = permutations_with_signature(&s)
                .iter()
                .map(baxter_p_symbol)
                .collect::<BTreeSet<_>>()
                .len() as u64;
            let by_pairs = twin_pairs(&s).len() as u64;
            assert_eq!(by_matrix, by_maximal_words, "{}", format_signature(&s));
            assert_eq!(by_matrix, by_fibers, "{}", format_signature(&s));
            assert_eq!(by_matrix, by_pairs, "{}", format_signature(&s));
        }
    }
}

#[test]
fn constant_signatures_count_baxter_numbers() {
    let expected = [1, 2, 6, 22, 92, 422, 2074];
    for (n, &v) in (1..=7).zip(&expected) {
        assert_eq!(bc_number(&constant_signature(n, Sign::Pos)), v);
    }
    for n in 0..=10 {
        let b = baxter_number(n);
        assert_eq!(bc_number(&constant_signature(n, Sign::Pos)), b);
        assert_eq!(bc_number(&constant_signature(n, Sign::Neg)), b);
    }
}

#[test]
fn alternating_signatures_count_central_binomials() {
    for n in 1..=10 {
        let expected = binomial(2 * n as u64 - 2, n as u64 - 1);
        assert_eq!(bc_number(&alternating_signature(n, Sign::Pos)), expected);
        assert_eq!(bc_number(&alternating_signature(n, Sign::Neg)), expected);
    }
}

#[test]
fn table_of_values_per_signature() {
    let table = [
        ("++++", 22),
        ("++-+", 20),
        ("+++++", 92),
        ("+++-+", 78),
        ("++-++", 70),
        ("++++++", 422),
        ("++++-+", 342),
        ("+++--+", 316),
        ("++--++", 284),
        ("+++-++", 282),
        ("++-+-+", 252),
        ("+++++++", 2074),
        ("+++++-+", 1628),
        ("++++--+", 1428),
        ("++---++", 1298),
        ("++++-++", 1270),
        ("+++--++", 1172),
        ("+++-+++", 1162),
        ("++-++-+", 1044),
        ("+++-+-+", 1036),
        ("++-+-++", 924),
    ];
    for (s, v) in table {
        assert_eq!(bc_number(&sig(s)), v, "{s}");
    }
}

#[test]
fn census_of_values_and_orbits() {
    let expected: [&[(u64, usize)]; 4] = [
        &[(22, 1), (20, 1)],
        &[(92, 1), (78, 2), (70, 1)],
        &[(422, 1), (342, 2), (316, 1), (284, 1), (282, 2), (252, 1)],
        &[
            (2074, 1),
            (1628, 2),
            (1428, 2),
            (1298, 1),
            (1270, 2),
            (1172, 2),
            (1162, 1),
            (1044, 2),
            (1036, 2),
            (924, 1),
        ],
    ];
    for (n, rows) in (4..=7).zip(&expected) {
        let census = bc_census(n);
        let orbits: Vec<(u64, usize)> =
            census.iter().rev().map(|(&v, &(_, orbits))| (v, orbits)).collect();
        assert_eq!(orbits, *rows, "n = {n}");
        let signatures: usize = census.values().map(|&(sigs, _)| sigs).sum();
        assert_eq!(signatures, 1 << n, "n = {n}");
    }
    let at_five = bc_census(5);
    assert_eq!(at_five[&92].0, 8);
    assert_eq!(at_five[&78].0, 16);
    assert_eq!(at_five[&70].0, 8);
}

#[test]
fn count_is_invariant_under_the_four_symmetries() {
    for n in 1..=7 {
        for s in all_signatures(n) {
            let v = bc_number(&s);
            let mut first = s.clone();
            first[0] = first[0].flip();
            let mut last = s.clone();
            last[n - 1] = last[n - 1].flip();
            assert_eq!(bc_number(&first), v, "{}", format_signature(&s));
            assert_eq!(bc_number(&last), v, "{}", format_signature(&s));
            assert_eq!(bc_number(&negate_signature(&s)), v, "{}", format_signature(&s));
            assert_eq!(bc_number(&reverse_signature(&s)), v, "{}", format_signature(&s));
            for t in signature_orbit(&s) {
                assert_eq!(bc_number(&t), v, "{}", format_signature(&s));
            }
        }
    }
}

#[test]
fn interior_switch_gaps_determine_and_order_the_counts() {
    for n in 2..=7 {
        let data: Vec<(BTreeSet<usize>, u64)> = all_signatures(n)
            .map(|s| (interior_switch_set(&s), bc_number(&s)))
            .collect();
        for (sw_a, v_a) in &data {
            for (sw_b, v_b) in &data {
                if sw_a == sw_b {
                    assert_eq!(v_a, v_b, "{sw_a:?}");
                } else if sw_a.is_subset(sw_b) {
                    assert!(v_a > v_b, "{sw_a:?} < {sw_b:?} but {v_a} <= {v_b}");
                }
            }
        }
    }
}

#[test]
fn incomparable_switch_sets_can_reverse_the_trend() {
    let a = sig("+++-++---");
    let b = sig("++-+++-++");
    let sw_a = interior_switch_set(&a);
    let sw_b = interior_switch_set(&b);
    assert!(!sw_a.is_subset(&sw_b) && !sw_b.is_subset(&sw_a));
    assert!(sw_a.len() < sw_b.len());
    assert_eq!(bc_number(&a), 18376);
    assert_eq!(bc_number(&b), 18544);
}

#[test]
fn counts_sit_between_the_central_binomial_and_the_baxter_number() {
    for n in 1..=8 {
        let lo = binomial(2 * n as u64 - 2, n as u64 - 1);
        let hi = baxter_number(n);
        for s in all_signatures(n) {
            let v = bc_number(&s);
            assert!(lo <= v && v <= hi, "{}: {v}", format_signature(&s));
        }
    }
}

#[test]
fn constant_signature_twins_are_the_opposite_canopy_pairs() {
    for n in 1..=6 {
        for sign in [Sign::Neg, Sign::Pos] {
            let tally = canopy_tally(&constant_signature(n, sign));
            assert_eq!(tally.twin, tally.twin_and_opposite);
            assert_eq!(tally.opposite, tally.twin_and_opposite);
        }
    }
}

#[test]
fn canopy_tallies_reported_for_general_signatures() {
    for n in 1..=6 {
        for s in all_signatures(n) {
            let tally = canopy_tally(&s);
            assert!(tally.twin_and_opposite <= tally.twin);
            assert!(tally.twin_and_opposite <= tally.opposite);
            println!(
                "{:>8}  pairs {:>6}  twin {:>5}  opposite {:>5}  both {:>5}",
                format_signature(&s),
                tally.pairs,
                tally.twin,
                tally.opposite,
                tally.twin_and_opposite
            );
        }
    }
}
