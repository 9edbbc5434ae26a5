//! Trees whose vertices carry the blocks of a partition of the ground set.
//!
//! A vertex with block `B` separates its lower subtrees by the negative
//! values of `B` and its upper subtrees by the positive values: each subtree
//! hanging in a slot stays inside one interval of the complement, and no two
//! subtrees share a slot. Contracting an edge merges the two blocks.

use camb_core::sign::{Sign, Signature, Trit};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvalidSchroderTree {
    #[error("node blocks do not partition the ground set")]
    NotAPartition,
    #[error("edges do not form a spanning tree on the nodes")]
    NotATree,
    #[error("a subtree of node {0} crosses one of its slot walls")]
    SlotViolation(usize),
    #[error("two subtrees of node {0} hang in the same slot")]
    SharedSlot(usize),
}

/// How contracting one edge relates the result to the original tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionKind {
    /// Child labels all smaller: the contraction lies above the tree.
    Increasing,
    /// Parent labels all smaller: the contraction lies below the tree.
    Decreasing,
    /// Interleaved labels: the contraction is order-unrelated.
    NonMonotone,
}

/// Blocks sorted by minimum, edges as `(child, parent)` index pairs with the
/// child below. The block order makes the representation canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchroderTree {
    signature: Signature,
    nodes: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl SchroderTree {
    pub fn new(
        signature: Signature,
        nodes: Vec<Vec<usize>>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, InvalidSchroderTree> {
        let mut blocks = nodes;
        for b in &mut blocks {
            b.sort_unstable();
        }
        let mut order: Vec<usize> = (0..blocks.len()).collect();
        order.sort_by_key(|&i| blocks[i].first().copied().unwrap_or(0));
        let mut rank = vec![0; blocks.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut sorted = vec![Vec::new(); blocks.len()];
        for (old, b) in blocks.into_iter().enumerate() {
            sorted[rank[old]] = b;
        }
        let edges = edges
            .into_iter()
            .map(|(c, p)| {
                if c < rank.len() && p < rank.len() {
                    (rank[c], rank[p])
                } else {
                    (usize::MAX, usize::MAX)
                }
            })
            .collect();
        let tree = SchroderTree { signature, nodes: sorted, edges };
        tree.validate()?;
        Ok(tree)
    }

    /// The unit tree on the empty ground set.
    pub fn empty() -> Self {
        SchroderTree { signature: Vec::new(), nodes: Vec::new(), edges: BTreeSet::new() }
    }

    /// The one-node tree whose block is the whole ground set.
    pub fn single_node(signature: &[Sign]) -> Self {
        if signature.is_empty() {
            return Self::empty();
        }
        SchroderTree {
            signature: signature.to_vec(),
            nodes: vec![(1..=signature.len()).collect()],
            edges: BTreeSet::new(),
        }
    }

    pub fn validate(&self) -> Result<(), InvalidSchroderTree> {
        let n = self.signature.len();
        let k = self.nodes.len();
        let mut seen = vec![false; n];
        for b in &self.nodes {
            if b.is_empty() || b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(InvalidSchroderTree::NotAPartition);
            }
            for &v in b {
                if v == 0 || v > n || seen[v - 1] {
                    return Err(InvalidSchroderTree::NotAPartition);
                }
                seen[v - 1] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(InvalidSchroderTree::NotAPartition);
        }
        if n == 0 {
            return if self.edges.is_empty() { Ok(()) } else { Err(InvalidSchroderTree::NotATree) };
        }
        if self.edges.len() + 1 != k {
            return Err(InvalidSchroderTree::NotATree);
        }
        let mut adjacent = vec![Vec::new(); k];
        let mut undirected = BTreeSet::new();
        for &(c, p) in &self.edges {
            if c >= k || p >= k || c == p || !undirected.insert((c.min(p), c.max(p))) {
                return Err(InvalidSchroderTree::NotATree);
            }
            adjacent[c].push(p);
            adjacent[p].push(c);
        }
        let mut reached = vec![false; k];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if !reached[v] {
                reached[v] = true;
                stack.extend(adjacent[v].iter().copied());
            }
        }
        if reached.iter().any(|&r| !r) {
            return Err(InvalidSchroderTree::NotATree);
        }
        for v in 0..k {
            self.check_slots(v, &self.children(v), Sign::Neg)?;
            self.check_slots(v, &self.parents(v), Sign::Pos)?;
        }
        Ok(())
    }

    /// One slot per interval between consecutive `barrier`-signed values of
    /// the block: every subtree fits in one interval, no interval is reused.
    fn check_slots(
        &self,
        v: usize,
        neighbors: &[usize],
        barrier: Sign,
    ) -> Result<(), InvalidSchroderTree> {
        let walls: Vec<usize> = self.nodes[v]
            .iter()
            .copied()
            .filter(|&x| self.signature[x - 1] == barrier)
            .collect();
        let mut used = BTreeSet::new();
        for &u in neighbors {
            let mut slots = BTreeSet::new();
            for w in self.component_without(v, u) {
                for &x in &self.nodes[w] {
                    slots.insert(walls.partition_point(|&c| c < x));
                }
            }
            if slots.len() != 1 {
                return Err(InvalidSchroderTree::SlotViolation(v));
            }
            if !used.insert(*slots.first().expect("nonempty component")) {
                return Err(InvalidSchroderTree::SharedSlot(v));
            }
        }
        Ok(())
    }

    /// Node indices of the component of `start` after deleting `v`.
    fn component_without(&self, v: usize, start: usize) -> Vec<usize> {
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            if x == v || !comp.insert(x) {
                continue;
            }
            for &(c, p) in &self.edges {
                if c == x {
                    stack.push(p);
                } else if p == x {
                    stack.push(c);
                }
            }
        }
        comp.into_iter().collect()
    }

    pub fn n(&self) -> usize {
        self.signature.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn signature(&self) -> &[Sign] {
        &self.signature
    }

    pub fn nodes(&self) -> &[Vec<usize>] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &[usize] {
        &self.nodes[i]
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// Index of the node whose block contains `value`.
    pub fn node_of(&self, value: usize) -> usize {
        self.nodes
            .iter()
            .position(|b| b.binary_search(&value).is_ok())
            .expect("value in some block")
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(_, p)| p == i).map(|&(c, _)| c).collect()
    }

    pub fn parents(&self, i: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(c, _)| c == i).map(|&(_, p)| p).collect()
    }

    /// Strict: node `i` lies below node `j`.
    pub fn below(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let mut stack = vec![i];
        let mut seen = vec![false; self.num_nodes()];
        while let Some(v) = stack.pop() {
            if v == j {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.extend(self.parents(v));
            }
        }
        false
    }

    /// Entry `i` tells how the nodes of `i` and `i + 1` relate: below, same,
    /// or above. Consecutive values never sit in incomparable nodes.
    pub fn canopy(&self) -> Vec<Trit> {
        (1..self.n())
            .map(|i| {
                let a = self.node_of(i);
                let b = self.node_of(i + 1);
                if a == b {
                    Trit::Zero
                } else if self.below(a, b) {
                    Trit::Pos
                } else if self.below(b, a) {
                    Trit::Neg
                } else {
                    panic!("consecutive values in incomparable nodes")
                }
            })
            .collect()
    }

    pub fn contraction_kind(&self, child: usize, parent: usize) -> ContractionKind {
        assert!(self.edges.contains(&(child, parent)), "contracting a non-edge");
        let c = &self.nodes[child];
        let p = &self.nodes[parent];
        if c.last() < p.first() {
            ContractionKind::Increasing
        } else if p.last() < c.first() {
            ContractionKind::Decreasing
        } else {
            ContractionKind::NonMonotone
        }
    }

    /// Merges the two endpoint blocks of an edge.
    pub fn contract(&self, child: usize, parent: usize) -> Self {
        assert!(self.edges.contains(&(child, parent)), "contracting a non-edge");
        let merged = child.min(parent);
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut remap = vec![0; self.num_nodes()];
        for (i, b) in self.nodes.iter().enumerate() {
            if i == child.max(parent) {
                remap[i] = remap[merged];
                blocks[remap[merged]].extend(b.iter().copied());
            } else {
                remap[i] = blocks.len();
                blocks.push(b.clone());
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&e| e != (child, parent))
            .map(|&(c, p)| (remap[c], remap[p]))
            .collect();
        Self::new(self.signature.clone(), blocks, edges).expect("contraction stays valid")
    }

    /// All unions of node blocks closed under taking nodes below.
    pub fn node_lower_sets(&self) -> Vec<BTreeSet<usize>> {
        let k = self.num_nodes();
        assert!(k < 32, "node count too large for subset enumeration");
        let children: Vec<Vec<usize>> = (0..k).map(|i| self.children(i)).collect();
        let mut out = Vec::new();
        'subsets: for mask in 0u32..(1 << k) {
            for v in 0..k {
                if mask >> v & 1 == 1 && children[v].iter().any(|&c| mask >> c & 1 == 0) {
                    continue 'subsets;
                }
            }
            let mut values = BTreeSet::new();
            for v in 0..k {
                if mask >> v & 1 == 1 {
                    values.extend(self.nodes[v].iter().copied());
                }
            }
            out.push(values);
        }
        out.sort();
        out
    }

    /// Restriction to a union of blocks: connected components standardized to
    /// their own size, by increasing minimum original value.
    pub fn restricted_components(&self, set: &BTreeSet<usize>) -> Vec<SchroderTree> {
        let k = self.num_nodes();
        let kept: Vec<bool> = (0..k)
            .map(|i| {
                let inside = self.nodes[i].iter().filter(|v| set.contains(v)).count();
                assert!(inside == 0 || inside == self.nodes[i].len(), "set splits a block");
                inside > 0
            })
            .collect();
        let mut assigned = vec![usize::MAX; k];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..k {
            if !kept[start] || assigned[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut comp = Vec::new();
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if assigned[x] != usize::MAX {
                    continue;
                }
                assigned[x] = id;
                comp.push(x);
                for &(c, p) in &self.edges {
                    if c == x && kept[p] {
                        stack.push(p);
                    } else if p == x && kept[c] {
                        stack.push(c);
                    }
                }
            }
            comps.push(comp);
        }
        comps.sort_by_key(|comp| comp.iter().flat_map(|&i| self.nodes[i].first()).min().copied());
        comps.iter().map(|comp| self.standardize_component(comp)).collect()
    }

    fn standardize_component(&self, comp: &[usize]) -> SchroderTree {
        let mut values: Vec<usize> = comp.iter().flat_map(|&i| self.nodes[i].iter().copied()).collect();
        values.sort_unstable();
        let rank = |v: usize| values.binary_search(&v).expect("value in component") + 1;
        let signature: Signature = values.iter().map(|&v| self.signature[v - 1]).collect();
        let local: Vec<usize> = comp.to_vec();
        let pos = |i: usize| local.iter().position(|&x| x == i).expect("node in component");
        let blocks: Vec<Vec<usize>> = local
            .iter()
            .map(|&i| self.nodes[i].iter().map(|&v| rank(v)).collect())
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(c, p)| local.contains(c) && local.contains(p))
            .map(|&(c, p)| (pos(c), pos(p)))
            .collect();
        SchroderTree::new(signature, blocks, edges).expect("component of a valid tree")
    }
}
