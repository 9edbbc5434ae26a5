//! Linear combinations over arbitrary ordered bases.
//!
//! Coefficients are arbitrary-precision integers; all graded components
//! computed here live in the integer span of their bases. Terms are kept
//! in a sorted map, so iteration order is deterministic and zero
//! coefficients are never stored.

use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinearCombination<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

/// An element of a tensor square, indexed by pairs.
pub type TensorCombination<A, B> = LinearCombination<(A, B)>;

impl<B: Ord + Clone> LinearCombination<B> {
    pub fn zero() -> Self {
        LinearCombination { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, BigInt::from(1))
    }

    pub fn term(b: B, coefficient: BigInt) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coefficient);
        out
    }

    pub fn add_term(&mut self, b: B, coefficient: BigInt) {
        if coefficient == BigInt::ZERO {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(entry) => {
                entry.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut entry) => {
                *entry.get_mut() += coefficient;
                if *entry.get() == BigInt::ZERO {
                    entry.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), -c);
        }
    }

    pub fn negate(&mut self) {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
    }

    pub fn scale(&mut self, factor: &BigInt) {
        if *factor == BigInt::ZERO {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    pub fn coefficient(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or(BigInt::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Applies a basis map linearly.
    pub fn map<C: Ord + Clone>(&self, f: impl Fn(&B) -> C) -> LinearCombination<C> {
        let mut out = LinearCombination::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Applies a map into combinations linearly.
    pub fn flat_map<C: Ord + Clone>(
        &self,
        f: impl Fn(&B) -> LinearCombination<C>,
    ) -> LinearCombination<C> {
        let mut out = LinearCombination::zero();
        for (b, c) in &self.terms {
            let mut image = f(b);
            image.scale(c);
            out.add_assign(&image);
        }
        out
    }
}

/// Extends a product on basis elements bilinearly.
pub fn bilinear<A: Ord + Clone, B: Ord + Clone, C: Ord + Clone>(
    x: &LinearCombination<A>,
    y: &LinearCombination<B>,
    f: impl Fn(&A, &B) -> LinearCombination<C>,
) -> LinearCombination<C> {
    let mut out = LinearCombination::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let mut image = f(a, b);
            image.scale(&(ca * cb));
            out.add_assign(&image);
        }
    }
    out
}

/// The tensor product of two combinations.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(
    x: &LinearCombination<A>,
    y: &LinearCombination<B>,
) -> TensorCombination<A, B> {
    bilinear(x, y, |a, b| LinearCombination::basis((a.clone(), b.clone())))
}
