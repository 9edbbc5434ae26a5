//! The Cambrian tree data structure.
//!
//! A Cambrian tree on `[n]` with signature `σ` is a directed tree with one
//! vertex per value. A negative vertex has two down slots (children) and one
//! up slot (parent); a positive vertex has one down slot and two up slots.
//! Edges point from child to parent. For a negative vertex `v`, the labels
//! reachable through its first down slot are smaller than `v` and those
//! through its second are larger; for a positive vertex the same holds for
//! its two up slots.

use camb_core::sign::{Sign, Signature};
use std::collections::BTreeSet;
use thiserror::Error;

/// Content of one slot: a leaf or the neighbor vertex label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Slot {
    Leaf,
    Node(usize),
}

impl Slot {
    pub fn node(self) -> Option<usize> {
        match self {
            Slot::Leaf => None,
            Slot::Node(v) => Some(v),
        }
    }
}

/// Slot tables of one vertex; the arities are determined by the sign.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    pub down: Vec<Slot>,
    pub up: Vec<Slot>,
}

impl Vertex {
    /// All-leaf vertex with the arity of the given sign.
    pub fn with_sign(sign: Sign) -> Vertex {
        match sign {
            Sign::Neg => Vertex { down: vec![Slot::Leaf; 2], up: vec![Slot::Leaf; 1] },
            Sign::Pos => Vertex { down: vec![Slot::Leaf; 1], up: vec![Slot::Leaf; 2] },
        }
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum TreeError {
    #[error("{vertices} vertices but signature of length {signs}")]
    LengthMismatch { vertices: usize, signs: usize },
    #[error("vertex {0} has slot arities not matching its sign")]
    BadArity(usize),
    #[error("slot reference to {0} out of range")]
    BadReference(usize),
    #[error("edge {0} -> {1} not mirrored in both slot tables")]
    Asymmetric(usize, usize),
    #[error("tree is not connected and acyclic")]
    NotATree,
    #[error("vertex {0} violates the label order on its constrained slots")]
    LabelOrder(usize),
}

/// A Cambrian tree; equality compares the signature and the slot tables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CambrianTree {
    pub(crate) signature: Signature,
    pub(crate) vertices: Vec<Vertex>,
}

impl CambrianTree {
    pub fn empty() -> Self {
        CambrianTree { signature: Vec::new(), vertices: Vec::new() }
    }

    pub fn from_vertices(signature: Signature, vertices: Vec<Vertex>) -> Result<Self, TreeError> {
        let tree = CambrianTree { signature, vertices };
        tree.validate()?;
        Ok(tree)
    }

    pub(crate) fn new_unchecked(signature: Signature, vertices: Vec<Vertex>) -> Self {
        let tree = CambrianTree { signature, vertices };
        debug_assert_eq!(tree.validate(), Ok(()));
        tree
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn signature(&self) -> &[Sign] {
        &self.signature
    }

    pub fn sign_of(&self, v: usize) -> Sign {
        self.signature[v - 1]
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v - 1]
    }

    /// Directed edges `(child, parent)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (idx, vertex) in self.vertices.iter().enumerate() {
            for slot in &vertex.down {
                if let Slot::Node(child) = slot {
                    out.push((*child, idx + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.vertices[v - 1].down.iter().filter_map(|s| s.node()).collect()
    }

    pub fn parents(&self, v: usize) -> Vec<usize> {
        self.vertices[v - 1].up.iter().filter_map(|s| s.node()).collect()
    }

    /// Does a directed path `u -> ... -> v` exist?
    pub fn reaches_up(&self, u: usize, v: usize) -> bool {
        let mut stack = vec![u];
        let mut seen = vec![false; self.n()];
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                continue;
            }
            stack.extend(self.parents(x));
        }
        false
    }

    /// The tree turned upside down: every edge flips direction and every
    /// vertex sign negates. The result is a valid tree on the negated
    /// signature with the same labels.
    pub fn reversed(&self) -> CambrianTree {
        let signature = self.signature.iter().map(|s| s.flip()).collect();
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { down: v.up.clone(), up: v.down.clone() })
            .collect();
        let out = CambrianTree::new_unchecked(signature, vertices);
        debug_assert!(out.validate().is_ok());
        out
    }

    /// Canopy: entry `i` is `-` when `i` lies above `i+1` and `+` when it
    /// lies below. Consecutive labels are always comparable in a valid tree.
    pub fn canopy(&self) -> Signature {
        (1..self.n())
            .map(|i| {
                if self.reaches_up(i + 1, i) {
                    Sign::Neg
                } else {
                    assert!(self.reaches_up(i, i + 1), "labels {i} and {} incomparable", i + 1);
                    Sign::Pos
                }
            })
            .collect()
    }

    /// Vertices of the component of `start` in the undirected tree with the
    /// vertex `removed` taken out.
    pub fn component_without(&self, start: usize, removed: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            if x == removed || !seen.insert(x) {
                continue;
            }
            stack.extend(self.children(x));
            stack.extend(self.parents(x));
        }
        seen
    }

    /// Vertex sets `(X, Y)` on the child and parent side of the edge.
    pub fn edge_cut(&self, child: usize, parent: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let x = self.component_without(child, parent);
        let y = self.component_without(parent, child);
        debug_assert_eq!(x.len() + y.len(), self.n());
        (x, y)
    }

    /// All sets closed under taking children, in a deterministic order.
    pub fn lower_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut order: Vec<usize> = Vec::new();
        let mut placed = vec![false; self.n()];
        while order.len() < self.n() {
            for v in 1..=self.n() {
                if !placed[v - 1] && self.children(v).iter().all(|&c| placed[c - 1]) {
                    placed[v - 1] = true;
                    order.push(v);
                }
            }
        }
        let mut out = Vec::new();
        let mut current = BTreeSet::new();
        self.lower_sets_rec(&order, 0, &mut current, &mut out);
        out.sort();
        out
    }

    fn lower_sets_rec(
        &self,
        order: &[usize],
        k: usize,
        current: &mut BTreeSet<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if k == order.len() {
            out.push(current.clone());
            return;
        }
        let v = order[k];
        self.lower_sets_rec(order, k + 1, current, out);
        if self.children(v).iter().all(|c| current.contains(c)) {
            current.insert(v);
            self.lower_sets_rec(order, k + 1, current, out);
            current.remove(&v);
        }
    }

    /// Restriction to a vertex set: edges leaving the set become leaves, and
    /// each connected component is standardized to its own size. Components
    /// are returned by increasing minimum original label.
    pub fn restricted_components(&self, set: &BTreeSet<usize>) -> Vec<CambrianTree> {
        let mut remaining: BTreeSet<usize> = set.clone();
        let mut components = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if !comp.insert(x) {
                    continue;
                }
                for y in self.children(x).into_iter().chain(self.parents(x)) {
                    if set.contains(&y) {
                        stack.push(y);
                    }
                }
            }
            for v in &comp {
                remaining.remove(v);
            }
            components.push(comp);
        }
        components.iter().map(|comp| self.standardize_component(comp)).collect()
    }

    fn standardize_component(&self, comp: &BTreeSet<usize>) -> CambrianTree {
        let labels: Vec<usize> = comp.iter().copied().collect();
        let rank = |v: usize| labels.binary_search(&v).expect("label present") + 1;
        let signature: Signature = labels.iter().map(|&v| self.signature[v - 1]).collect();
        let map_slot = |slot: &Slot| match slot {
            Slot::Node(u) if comp.contains(u) => Slot::Node(rank(*u)),
            _ => Slot::Leaf,
        };
        let vertices: Vec<Vertex> = labels
            .iter()
            .map(|&v| Vertex {
                down: self.vertices[v - 1].down.iter().map(map_slot).collect(),
                up: self.vertices[v - 1].up.iter().map(map_slot).collect(),
            })
            .collect();
        CambrianTree::new_unchecked(signature, vertices)
    }

    pub fn validate(&self) -> Result<(), TreeError> {
        let n = self.n();
        if self.signature.len() != n {
            return Err(TreeError::LengthMismatch { vertices: n, signs: self.signature.len() });
        }
        for v in 1..=n {
            let vertex = &self.vertices[v - 1];
            let (d, u) = match self.signature[v - 1] {
                Sign::Neg => (2, 1),
                Sign::Pos => (1, 2),
            };
            if vertex.down.len() != d || vertex.up.len() != u {
                return Err(TreeError::BadArity(v));
            }
            for slot in vertex.down.iter().chain(&vertex.up) {
                if let Slot::Node(w) = slot {
                    if *w == 0 || *w > n || *w == v {
                        return Err(TreeError::BadReference(*w));
                    }
                }
            }
        }
        let mut edge_count = 0;
        for v in 1..=n {
            for &child in &self.children(v) {
                edge_count += 1;
                let mirrored = self.parents(child).iter().filter(|&&p| p == v).count();
                let listed = self.children(v).iter().filter(|&&c| c == child).count();
                if mirrored != listed {
                    return Err(TreeError::Asymmetric(child, v));
                }
            }
        }
        if n > 0 {
            if edge_count != n - 1 {
                return Err(TreeError::NotATree);
            }
            if self.component_without(1, 0).len() != n {
                return Err(TreeError::NotATree);
            }
        }
        for v in 1..=n {
            let vertex = &self.vertices[v - 1];
            let constrained: &[Slot] = match self.signature[v - 1] {
                Sign::Neg => &vertex.down,
                Sign::Pos => &vertex.up,
            };
            let sides = [false, true];
            for (slot, larger) in constrained.iter().zip(sides) {
                if let Slot::Node(u) = slot {
                    let comp = self.component_without(*u, v);
                    let ok = comp.iter().all(|&w| (w > v) == larger);
                    if !ok {
                        return Err(TreeError::LabelOrder(v));
                    }
                }
            }
        }
        Ok(())
    }
}
