//! The Hopf algebra of signed permutations.
//!
//! The fundamental basis multiplies by shifted shuffle and comultiplies by
//! position splits; the dual basis multiplies by convolution and
//! comultiplies by value splits. Inversion exchanges the two pictures.
//! The antipode is computed by the graded recursion available in any
//! connected graded bialgebra, and memoized per basis element.

use crate::lincomb::{bilinear, LinearCombination, TensorCombination};
use camb_core::perm::SignedPermutation;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub type Element = LinearCombination<SignedPermutation>;
pub type TensorElement = TensorCombination<SignedPermutation, SignedPermutation>;

pub fn f_product_basis(a: &SignedPermutation, b: &SignedPermutation) -> Element {
    let mut out = Element::zero();
    for word in a.shifted_shuffle(b) {
        out.add_term(word, BigInt::from(1));
    }
    out
}

pub fn f_coproduct_basis(s: &SignedPermutation) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in 0..=s.n() {
        out.add_term(s.split_by_position(k), BigInt::from(1));
    }
    out
}

pub fn g_product_basis(a: &SignedPermutation, b: &SignedPermutation) -> Element {
    let mut out = Element::zero();
    for word in a.convolution(b) {
        out.add_term(word, BigInt::from(1));
    }
    out
}

pub fn g_coproduct_basis(s: &SignedPermutation) -> TensorElement {
    let mut out = TensorElement::zero();
    for k in 0..=s.n() {
        out.add_term(s.split_by_value(k), BigInt::from(1));
    }
    out
}

pub fn f_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, f_product_basis)
}

pub fn f_coproduct(x: &Element) -> TensorElement {
    x.flat_map(f_coproduct_basis)
}

pub fn g_product(x: &Element, y: &Element) -> Element {
    bilinear(x, y, g_product_basis)
}

pub fn g_coproduct(x: &Element) -> TensorElement {
    x.flat_map(g_coproduct_basis)
}

/// The linear map sending the fundamental basis element of a permutation
/// to the dual basis element of its inverse, in either direction.
pub fn invert(x: &Element) -> Element {
    x.map(SignedPermutation::inverse)
}

/// Antipode on the fundamental basis, by the graded recursion
/// `S(x) = -x - sum S(x') x''` over the proper terms of the coproduct.
pub fn f_antipode_basis(s: &SignedPermutation) -> Element {
    static MEMO: OnceLock<Mutex<HashMap<SignedPermutation, Element>>> = OnceLock::new();
    if s.is_empty() {
        return Element::basis(s.clone());
    }
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = memo.lock().unwrap().get(s) {
        return found.clone();
    }
    let mut out = Element::basis(s.clone());
    out.negate();
    for k in 1..s.n() {
        let (left, right) = s.split_by_position(k);
        let mut term = f_product(&f_antipode_basis(&left), &Element::basis(right));
        term.negate();
        out.add_assign(&term);
    }
    memo.lock().unwrap().insert(s.clone(), out.clone());
    out
}

pub fn f_antipode(x: &Element) -> Element {
    x.flat_map(f_antipode_basis)
}
