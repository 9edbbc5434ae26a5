//! Ordered set partitions of `[n]`, plain and signed.

use crate::perm::SignedPermutation;
use crate::sign::{Sign, Signature};
use itertools::Itertools;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum InvalidPartition {
    #[error("value {0} out of range")]
    ValueOutOfRange(usize),
    #[error("value {0} repeated")]
    RepeatedValue(usize),
    #[error("value {0} missing")]
    MissingValue(usize),
    #[error("empty part")]
    EmptyPart,
    #[error("partition of {values} values but {signs} signs")]
    LengthMismatch { values: usize, signs: usize },
}

/// An ordered partition of `[n]` into nonempty parts, stored as the part
/// index of every value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderedPartition {
    part_of: Vec<usize>,
    parts: usize,
}

impl OrderedPartition {
    pub fn from_parts(parts: &[Vec<usize>]) -> Result<Self, InvalidPartition> {
        let n: usize = parts.iter().map(|p| p.len()).sum();
        let mut part_of = vec![usize::MAX; n];
        for (k, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(InvalidPartition::EmptyPart);
            }
            for &v in part {
                if v == 0 || v > n {
                    return Err(InvalidPartition::ValueOutOfRange(v));
                }
                if part_of[v - 1] != usize::MAX {
                    return Err(InvalidPartition::RepeatedValue(v));
                }
                part_of[v - 1] = k;
            }
        }
        if let Some(v) = part_of.iter().position(|&k| k == usize::MAX) {
            return Err(InvalidPartition::MissingValue(v + 1));
        }
        Ok(OrderedPartition { part_of, parts: parts.len() })
    }

    /// The partition into singletons read off a permutation word.
    pub fn from_permutation(perm: &SignedPermutation) -> Self {
        let mut part_of = vec![0; perm.n()];
        for (p, &v) in perm.word().iter().enumerate() {
            part_of[v - 1] = p;
        }
        OrderedPartition { part_of, parts: perm.n() }
    }

    /// The word of part indices turned back into a permutation, when all
    /// parts are singletons.
    pub fn to_word(&self) -> Option<Vec<usize>> {
        if self.parts != self.n() {
            return None;
        }
        let mut word = vec![0; self.parts];
        for v in 1..=self.n() {
            word[self.part_of[v - 1]] = v;
        }
        Some(word)
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    pub fn num_parts(&self) -> usize {
        self.parts
    }

    /// 0-indexed part containing value `v`.
    pub fn part_index(&self, v: usize) -> usize {
        self.part_of[v - 1]
    }

    /// Values of part `k` (0-indexed), sorted increasingly.
    pub fn part(&self, k: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.part_of[v - 1] == k).collect()
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.parts];
        for v in 1..=self.n() {
            out[self.part_of[v - 1]].push(v);
        }
        out
    }

    /// Coinversion table entry for values `i < j`: `-1` when the part of `i`
    /// comes first, `0` when they share a part, `1` when it comes last.
    pub fn coinv(&self, i: usize, j: usize) -> i8 {
        debug_assert!(i < j);
        match self.part_of[i - 1].cmp(&self.part_of[j - 1]) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }

    /// Weak order: entrywise comparison of coinversion tables.
    pub fn weak_leq(&self, other: &Self) -> bool {
        let n = self.n();
        (1..=n).all(|i| (i + 1..=n).all(|j| self.coinv(i, j) <= other.coinv(i, j)))
    }

    /// Weak order covers above: merge an adjacent pair of parts with
    /// `max(first) < min(second)`, or split one part into its upper values
    /// followed by its lower values.
    pub fn weak_covers_up(&self) -> Vec<Self> {
        self.weak_covers(true)
    }

    /// Weak order covers below: merges with `max(second) < min(first)` and
    /// splits into lower values followed by upper values.
    pub fn weak_covers_down(&self) -> Vec<Self> {
        self.weak_covers(false)
    }

    fn weak_covers(&self, up: bool) -> Vec<Self> {
        let parts = self.parts();
        let mut out = Vec::new();
        for k in 0..self.parts.saturating_sub(1) {
            let (a, b) = (&parts[k], &parts[k + 1]);
            let merged_up = a.last().unwrap() < b.first().unwrap();
            let merged_down = b.last().unwrap() < a.first().unwrap();
            if (up && merged_up) || (!up && merged_down) {
                let mut next = parts.clone();
                let tail = next.remove(k + 1);
                next[k].extend(tail);
                out.push(Self::from_parts(&next).expect("merge keeps validity"));
            }
        }
        for k in 0..self.parts {
            let p = &parts[k];
            for t in 1..p.len() {
                let lower: Vec<usize> = p[..t].to_vec();
                let upper: Vec<usize> = p[t..].to_vec();
                let mut next = parts.clone();
                if up {
                    next[k] = upper.clone();
                    next.insert(k + 1, lower);
                } else {
                    next[k] = lower;
                    next.insert(k + 1, upper);
                }
                out.push(Self::from_parts(&next).expect("split keeps validity"));
            }
        }
        out
    }

    /// Keeps the parts at the given 1-indexed positions and renumbers the
    /// surviving values by rank.
    pub fn restrict_to_parts(&self, rows: &[usize]) -> Self {
        let parts = self.parts();
        let kept: Vec<Vec<usize>> = rows.iter().map(|&r| parts[r - 1].clone()).collect();
        Self::standardize(&kept)
    }

    /// Keeps the given values, drops parts left empty, and renumbers the
    /// surviving values by rank.
    pub fn restrict_to_values(&self, values: &[usize]) -> Self {
        let kept: Vec<Vec<usize>> = self
            .parts()
            .iter()
            .map(|p| p.iter().copied().filter(|v| values.contains(v)).collect::<Vec<_>>())
            .filter(|p: &Vec<usize>| !p.is_empty())
            .collect();
        Self::standardize(&kept)
    }

    fn standardize(parts: &[Vec<usize>]) -> Self {
        let mut sorted: Vec<usize> = parts.iter().flatten().copied().collect();
        sorted.sort_unstable();
        let rank = |v: usize| sorted.binary_search(&v).expect("value present") + 1;
        let renamed: Vec<Vec<usize>> = parts
            .iter()
            .map(|p| p.iter().map(|&v| rank(v)).collect())
            .collect();
        Self::from_parts(&renamed).expect("standardization keeps validity")
    }
}

/// All ordered partitions of `[n]`, ordered deterministically.
pub fn all_ordered_partitions(n: usize) -> Vec<OrderedPartition> {
    let mut out = Vec::new();
    let mut prefix: Vec<Vec<usize>> = Vec::new();
    let all: Vec<usize> = (1..=n).collect();
    fill_partitions(&all, &mut prefix, &mut out);
    out
}

fn fill_partitions(rest: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedPartition>) {
    if rest.is_empty() {
        out.push(OrderedPartition::from_parts(prefix).expect("disjoint by construction"));
        return;
    }
    for size in 1..=rest.len() {
        for first in rest.iter().copied().combinations(size) {
            let remaining: Vec<usize> = rest.iter().copied().filter(|v| !first.contains(v)).collect();
            prefix.push(first);
            fill_partitions(&remaining, prefix, out);
            prefix.pop();
        }
    }
}

/// An ordered partition with a sign attached to every value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedOrderedPartition {
    partition: OrderedPartition,
    vsign: Vec<Sign>,
}

impl SignedOrderedPartition {
    pub fn new(partition: OrderedPartition, vsign: Signature) -> Result<Self, InvalidPartition> {
        if partition.n() != vsign.len() {
            return Err(InvalidPartition::LengthMismatch {
                values: partition.n(),
                signs: vsign.len(),
            });
        }
        Ok(SignedOrderedPartition { partition, vsign })
    }

    pub fn from_parts(parts: &[Vec<usize>], vsign: Signature) -> Result<Self, InvalidPartition> {
        Self::new(OrderedPartition::from_parts(parts)?, vsign)
    }

    pub fn from_permutation(perm: &SignedPermutation) -> Self {
        SignedOrderedPartition {
            partition: OrderedPartition::from_permutation(perm),
            vsign: perm.signature().to_vec(),
        }
    }

    pub fn to_permutation(&self) -> Option<SignedPermutation> {
        let word = self.partition.to_word()?;
        Some(SignedPermutation::new(word, self.vsign.clone()).expect("valid word"))
    }

    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn num_parts(&self) -> usize {
        self.partition.num_parts()
    }

    pub fn signature(&self) -> &[Sign] {
        &self.vsign
    }

    pub fn sign_of_value(&self, v: usize) -> Sign {
        self.vsign[v - 1]
    }

    fn with_ranked_signs(partition: OrderedPartition, kept_values: &[usize], vsign: &[Sign]) -> Self {
        let mut sorted = kept_values.to_vec();
        sorted.sort_unstable();
        let signs: Vec<Sign> = sorted.iter().map(|&v| vsign[v - 1]).collect();
        SignedOrderedPartition { partition, vsign: signs }
    }

    pub fn restrict_to_parts(&self, rows: &[usize]) -> Self {
        let kept: Vec<usize> = (1..=self.n())
            .filter(|&v| rows.contains(&(self.partition.part_index(v) + 1)))
            .collect();
        Self::with_ranked_signs(self.partition.restrict_to_parts(rows), &kept, &self.vsign)
    }

    pub fn restrict_to_values(&self, values: &[usize]) -> Self {
        Self::with_ranked_signs(self.partition.restrict_to_values(values), values, &self.vsign)
    }

    /// Standardizations of the first `k` parts and of the remaining parts.
    pub fn split_by_parts(&self, k: usize) -> (Self, Self) {
        let rows: Vec<usize> = (1..=k).collect();
        let rest: Vec<usize> = (k + 1..=self.num_parts()).collect();
        (self.restrict_to_parts(&rows), self.restrict_to_parts(&rest))
    }

    /// Restrictions to values `1..=k` and to values `k+1..=n`.
    pub fn split_by_value(&self, k: usize) -> (Self, Self) {
        let low: Vec<usize> = (1..=k).collect();
        let high: Vec<usize> = (k + 1..=self.n()).collect();
        (self.restrict_to_values(&low), self.restrict_to_values(&high))
    }

    /// Quasi-shuffle with the shift of `other`: parts of each operand keep
    /// their order, and a part of `self` may merge with a part of the shifted
    /// `other`. Signs travel with values. Results are sorted.
    pub fn quasi_shuffle(&self, other: &Self) -> Vec<Self> {
        let n = self.n();
        let a = self.partition.parts();
        let b: Vec<Vec<usize>> = other
            .partition
            .parts()
            .iter()
            .map(|p| p.iter().map(|&v| v + n).collect())
            .collect();
        let mut vsign = self.vsign.clone();
        vsign.extend(other.vsign.iter().copied());
        let mut out = Vec::new();
        let mut prefix: Vec<Vec<usize>> = Vec::new();
        quasi_shuffle_rec(&a, &b, &mut prefix, &mut out);
        let mut out: Vec<Self> = out
            .into_iter()
            .map(|parts| Self::from_parts(&parts, vsign.clone()).expect("valid by construction"))
            .collect();
        out.sort_unstable();
        out
    }

    /// Convolution: relabel `self` into a value set, `other` into the
    /// complement, and concatenate the part lists. Signs stay with ranks.
    /// Results are sorted.
    pub fn convolution(&self, other: &Self) -> Vec<Self> {
        let n = self.n();
        let m = other.n();
        let mut out = Vec::new();
        for chosen in (1..=n + m).combinations(n) {
            let comp: Vec<usize> = (1..=n + m).filter(|v| !chosen.contains(v)).collect();
            let mut parts: Vec<Vec<usize>> = self
                .partition
                .parts()
                .iter()
                .map(|p| p.iter().map(|&v| chosen[v - 1]).collect())
                .collect();
            parts.extend(
                other
                    .partition
                    .parts()
                    .iter()
                    .map(|p| p.iter().map(|&v| comp[v - 1]).collect::<Vec<_>>()),
            );
            let mut vsign = vec![Sign::Neg; n + m];
            for (rank, &v) in chosen.iter().enumerate() {
                vsign[v - 1] = self.vsign[rank];
            }
            for (rank, &v) in comp.iter().enumerate() {
                vsign[v - 1] = other.vsign[rank];
            }
            out.push(Self::from_parts(&parts, vsign).expect("valid by construction"));
        }
        out.sort_unstable();
        out
    }

    /// Three-valued recoil sequence: entry `i` is the coinversion table entry
    /// of `(i, i+1)`.
    pub fn recoils(&self) -> Vec<crate::sign::Trit> {
        (1..self.n())
            .map(|i| match self.partition.coinv(i, i + 1) {
                -1 => crate::sign::Trit::Pos,
                0 => crate::sign::Trit::Zero,
                _ => crate::sign::Trit::Neg,
            })
            .collect()
    }
}

fn quasi_shuffle_rec(
    a: &[Vec<usize>],
    b: &[Vec<usize>],
    prefix: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if a.is_empty() && b.is_empty() {
        out.push(prefix.clone());
        return;
    }
    if !a.is_empty() {
        prefix.push(a[0].clone());
        quasi_shuffle_rec(&a[1..], b, prefix, out);
        prefix.pop();
    }
    if !b.is_empty() {
        prefix.push(b[0].clone());
        quasi_shuffle_rec(a, &b[1..], prefix, out);
        prefix.pop();
    }
    if !a.is_empty() && !b.is_empty() {
        let mut merged = a[0].clone();
        merged.extend(b[0].iter().copied());
        prefix.push(merged);
        quasi_shuffle_rec(&a[1..], &b[1..], prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_partition, parse_signed_partition};

    #[test]
    fn recoil_sign_convention_matches_permutations() {
        let perm = crate::notation::parse_signed_permutation("2- 7+ 5- 1- 3+ 4- 6+").unwrap();
        let part = SignedOrderedPartition::from_permutation(&perm);
        let from_perm: Vec<char> = perm.recoils().iter().map(|s| s.as_char()).collect();
        let from_part: Vec<char> = part.recoils().iter().map(|t| t.as_char()).collect();
        assert_eq!(from_perm, from_part);
    }

    #[test]
    fn restrictions_follow_their_definitions() {
        let mu = parse_partition("16/27/4/35").unwrap();
        assert_eq!(mu.restrict_to_parts(&[2, 3]), parse_partition("13/2").unwrap());
        assert_eq!(mu.restrict_to_values(&[1, 3, 5]), parse_partition("1/23").unwrap());
    }

    #[test]
    fn partition_counts_are_fubini_numbers() {
        assert_eq!(all_ordered_partitions(0).len(), 1);
        assert_eq!(all_ordered_partitions(1).len(), 1);
        assert_eq!(all_ordered_partitions(2).len(), 3);
        assert_eq!(all_ordered_partitions(3).len(), 13);
        assert_eq!(all_ordered_partitions(4).len(), 75);
    }

    #[test]
    fn covers_move_one_step_in_the_weak_order() {
        for lambda in all_ordered_partitions(3) {
            for up in lambda.weak_covers_up() {
                assert!(lambda.weak_leq(&up));
                assert!(!up.weak_leq(&lambda));
            }
        }
    }

    #[test]
    fn quasi_shuffle_golden() {
        let a = parse_signed_partition("1-/2+").unwrap();
        let b = parse_signed_partition("2-/3+1-").unwrap();
        let result = a.quasi_shuffle(&b);
        assert_eq!(result.len(), 13);
        let mut words: Vec<String> = result.iter().map(|p| p.to_string()).collect();
        words.sort();
        let expect = [
            "1-/2+/4-/3-5+",
            "1-/2+4-/3-5+",
            "1-/4-/2+/3-5+",
            "1-/4-/2+3-5+",
            "1-/4-/3-5+/2+",
            "14-/2+/3-5+",
            "14-/2+3-5+",
            "14-/3-5+/2+",
            "4-/1-/2+/3-5+",
            "4-/1-/2+3-5+",
            "4-/1-/3-5+/2+",
            "4-/13-5+/2+",
            "4-/3-5+/1-/2+",
        ];
        let mut expect: Vec<String> = expect.iter().map(|s| s.to_string()).collect();
        expect.sort();
        assert_eq!(words, expect);
    }

    #[test]
    fn convolution_golden() {
        let a = parse_signed_partition("1-/2+").unwrap();
        let b = parse_signed_partition("2-/3+1-").unwrap();
        let result = a.convolution(&b);
        assert_eq!(result.len(), 10);
        assert!(result.iter().all(|p| p.num_parts() == 4));
        let mut words: Vec<String> = result.iter().map(|p| p.to_string()).collect();
        words.sort();
        let expect = [
            "1-/2+/4-/3-5+",
            "1-/3+/4-/2-5+",
            "1-/4+/3-/2-5+",
            "1-/5+/3-/2-4+",
            "2-/3+/4-/1-5+",
            "2-/4+/3-/1-5+",
            "2-/5+/3-/1-4+",
            "3-/4+/2-/1-5+",
            "3-/5+/2-/1-4+",
            "4-/5+/2-/1-3+",
        ];
        let mut expect: Vec<String> = expect.iter().map(|s| s.to_string()).collect();
        expect.sort();
        assert_eq!(words, expect);
    }
}
