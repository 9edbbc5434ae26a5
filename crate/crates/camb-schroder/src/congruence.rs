//! Rewriting on signed ordered partitions.
//!
//! Two adjacent parts with all labels of one below all labels of the other
//! may swap or merge, and a part may split around an absent middle value,
//! provided some witness value lies strictly between the separated groups:
//! a positive witness placed earlier, or a negative witness placed later.

use crate::insertion::p_star_symbol;
use camb_core::partition::SignedOrderedPartition;
use camb_core::sign::Sign;
use std::collections::{BTreeSet, VecDeque};

pub fn rewriting_neighbors(lambda: &SignedOrderedPartition) -> Vec<SignedOrderedPartition> {
    let parts = lambda.partition().parts();
    let k = parts.len();
    let mut out = BTreeSet::new();
    let rebuild = |pieces: &[Vec<usize>]| {
        SignedOrderedPartition::from_parts(pieces, lambda.signature().to_vec())
            .expect("rearranged parts")
    };
    let witness = |gap: std::ops::Range<usize>, before: &[Vec<usize>], after: &[Vec<usize>]| {
        gap.into_iter().any(|b| match lambda.sign_of_value(b) {
            Sign::Pos => before.iter().any(|p| p.contains(&b)),
            Sign::Neg => after.iter().any(|p| p.contains(&b)),
        })
    };

    for i in 0..k.saturating_sub(1) {
        let (a, c) = (&parts[i], &parts[i + 1]);
        let (lo, hi) = if a.last() < c.first() {
            (a, c)
        } else if c.last() < a.first() {
            (c, a)
        } else {
            continue;
        };
        let gap = lo.last().copied().expect("nonempty part") + 1
            ..hi.first().copied().expect("nonempty part");
        if witness(gap, &parts[..i], &parts[i + 2..]) {
            let mut swapped = parts.clone();
            swapped.swap(i, i + 1);
            out.insert(rebuild(&swapped));
            let mut merged = parts.clone();
            let tail = merged.remove(i + 1);
            merged[i].extend(tail);
            out.insert(rebuild(&merged));
        }
    }

    for t in 0..k {
        let m = &parts[t];
        if m.len() < 2 {
            continue;
        }
        for b in m[0] + 1..*m.last().expect("nonempty part") {
            if m.contains(&b) {
                continue;
            }
            if !witness(b..b + 1, &parts[..t], &parts[t + 1..]) {
                continue;
            }
            let lower: Vec<usize> = m.iter().copied().filter(|&x| x < b).collect();
            let upper: Vec<usize> = m.iter().copied().filter(|&x| x > b).collect();
            for halves in [[lower.clone(), upper.clone()], [upper, lower]] {
                let mut pieces = parts.clone();
                pieces.splice(t..t + 1, halves);
                out.insert(rebuild(&pieces));
            }
        }
    }

    out.into_iter().collect()
}

pub fn congruence_class(lambda: &SignedOrderedPartition) -> Vec<SignedOrderedPartition> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(current) = queue.pop_front() {
        for next in rewriting_neighbors(&current) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn schroder_congruent(a: &SignedOrderedPartition, b: &SignedOrderedPartition) -> bool {
    congruence_class(a).binary_search(b).is_ok()
}

/// The class minimum: no rewriting neighbor lies weakly below.
pub fn is_class_minimal(lambda: &SignedOrderedPartition) -> bool {
    rewriting_neighbors(lambda)
        .iter()
        .all(|m| !m.partition().weak_leq(lambda.partition()))
}

pub fn is_class_maximal(lambda: &SignedOrderedPartition) -> bool {
    rewriting_neighbors(lambda)
        .iter()
        .all(|m| !lambda.partition().weak_leq(m.partition()))
}
