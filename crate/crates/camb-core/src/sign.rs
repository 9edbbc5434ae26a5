//! Signs attached to values of permutations and partitions.

use std::fmt;

/// Sign of a single value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }

    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Pos => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Neg),
            '+' => Some(Sign::Pos),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A sequence of signs, one per value of `1..=n`.
pub type Signature = Vec<Sign>;

/// Three-valued sign used by canopies of trees with multi-value nodes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Trit {
    Neg,
    Zero,
    Pos,
}

impl Trit {
    pub fn as_char(self) -> char {
        match self {
            Trit::Neg => '-',
            Trit::Zero => '0',
            Trit::Pos => '+',
        }
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// All `2^n` signatures of length `n`, in lexicographic order with `-` first.
pub fn all_signatures(n: usize) -> impl Iterator<Item = Signature> {
    (0u64..(1u64 << n)).map(move |mask| {
        (0..n)
            .map(|i| {
                if mask >> (n - 1 - i) & 1 == 1 {
                    Sign::Pos
                } else {
                    Sign::Neg
                }
            })
            .collect()
    })
}

pub fn constant_signature(n: usize, sign: Sign) -> Signature {
    vec![sign; n]
}

/// `first, first.flip(), first, ...` of length `n`.
pub fn alternating_signature(n: usize, first: Sign) -> Signature {
    (0..n)
        .map(|i| if i % 2 == 0 { first } else { first.flip() })
        .collect()
}

pub fn negate_signature(sig: &[Sign]) -> Signature {
    sig.iter().map(|s| s.flip()).collect()
}

pub fn reverse_signature(sig: &[Sign]) -> Signature {
    sig.iter().rev().copied().collect()
}

pub fn format_signature(sig: &[Sign]) -> String {
    sig.iter().map(|s| s.as_char()).collect()
}

pub fn format_trits(trits: &[Trit]) -> String {
    trits.iter().map(|t| t.as_char()).collect()
}
