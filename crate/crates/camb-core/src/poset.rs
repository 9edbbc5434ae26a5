//! Finite posets given by cover relations, with lattice operations.

use std::collections::HashMap;
use std::hash::Hash;

/// One row of a reachability matrix, packed into 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn empty(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn intersection(&self, other: &BitRow) -> BitRow {
        BitRow(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(block, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| block * 64 + b)
        })
    }
}

/// A finite poset stored as a Hasse diagram together with its reflexive
/// transitive closure.
#[derive(Clone, Debug)]
pub struct HasseDiagram<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    covers_up: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
    below: Vec<BitRow>,
    above: Vec<BitRow>,
}

impl<T: Clone + Eq + Hash> HasseDiagram<T> {
    /// Builds from elements and cover pairs `(lower, upper)` given by index.
    /// The cover relation must be acyclic.
    pub fn from_covers(elements: Vec<T>, covers: &[(usize, usize)]) -> Self {
        let n = elements.len();
        let mut covers_up = vec![Vec::new(); n];
        let mut covers_down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            covers_up[lo].push(hi);
            covers_down[hi].push(lo);
        }
        for adj in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            adj.sort_unstable();
            adj.dedup();
        }
        let order = topological_order(n, &covers_up);
        let mut below = vec![BitRow::empty(n); n];
        for &i in &order {
            below[i].set(i);
            let down = covers_down[i].clone();
            for j in down {
                let row = below[j].clone();
                below[i].union_with(&row);
            }
        }
        let mut above = vec![BitRow::empty(n); n];
        for &i in order.iter().rev() {
            above[i].set(i);
            let up = covers_up[i].clone();
            for j in up {
                let row = above[j].clone();
                above[i].union_with(&row);
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        HasseDiagram { elements, index, covers_up, covers_down, below, above }
    }

    /// Builds from elements and an arbitrary order predicate, computing the
    /// transitive reduction.
    pub fn from_relation(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Self {
        let n = elements.len();
        let mut strict = vec![BitRow::empty(n); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && leq(&elements[i], &elements[j]) {
                    strict[i].set(j);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in strict[i].ones() {
                let through = (0..n).any(|k| k != i && k != j && strict[i].get(k) && strict[k].get(j));
                if !through {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers(elements, &covers)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.covers_up[i]
    }

    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.covers_down[i]
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (lo, ups) in self.covers_up.iter().enumerate() {
            for &hi in ups {
                out.push((lo, hi));
            }
        }
        out
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    /// Elements weakly below `i`, as indices.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        self.below[i].ones().collect()
    }

    /// Elements weakly above `i`, as indices.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        self.above[i].ones().collect()
    }

    /// Indices of the elements of the closed interval `[i, j]`.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        self.above[i].intersection(&self.below[j]).ones().collect()
    }

    /// Greatest lower bound of `i` and `j`, when it exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.below[i].intersection(&self.below[j]);
        let maximal: Vec<usize> = common
            .ones()
            .filter(|&k| !common.ones().any(|m| m != k && self.leq(k, m)))
            .collect();
        match maximal.as_slice() {
            [unique] => Some(*unique),
            _ => None,
        }
    }

    /// Least upper bound of `i` and `j`, when it exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.above[i].intersection(&self.above[j]);
        let minimal: Vec<usize> = common
            .ones()
            .filter(|&k| !common.ones().any(|m| m != k && self.leq(m, k)))
            .collect();
        match minimal.as_slice() {
            [unique] => Some(*unique),
            _ => None,
        }
    }

    pub fn is_lattice(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        (0..self.len()).all(|i| {
            (i + 1..self.len()).all(|j| self.meet(i, j).is_some() && self.join(i, j).is_some())
        })
    }

    pub fn minimum(&self) -> Option<usize> {
        let minima: Vec<usize> = (0..self.len()).filter(|&i| self.covers_down[i].is_empty()).collect();
        match minima.as_slice() {
            [unique] => Some(*unique),
            _ => None,
        }
    }

    pub fn maximum(&self) -> Option<usize> {
        let maxima: Vec<usize> = (0..self.len()).filter(|&i| self.covers_up[i].is_empty()).collect();
        match maxima.as_slice() {
            [unique] => Some(*unique),
            _ => None,
        }
    }

    /// Length of a longest chain from a minimal element to each element.
    pub fn depths(&self) -> Vec<usize> {
        let order = topological_order(self.len(), &self.covers_up);
        let mut depth = vec![0; self.len()];
        for &i in &order {
            for &j in &self.covers_up[i] {
                depth[j] = depth[j].max(depth[i] + 1);
            }
        }
        depth
    }

    /// Graphviz rendering with elements ranked by depth.
    pub fn to_dot(&self, label: impl Fn(&T) -> String) -> String {
        let depth = self.depths();
        let max_depth = depth.iter().copied().max().unwrap_or(0);
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for d in 0..=max_depth {
            let members: Vec<usize> = (0..self.len()).filter(|&i| depth[i] == d).collect();
            if members.is_empty() {
                continue;
            }
            out.push_str("  { rank=same;");
            for i in members {
                out.push_str(&format!(" n{i};"));
            }
            out.push_str(" }\n");
        }
        for (i, e) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, label(e).replace('"', "\\\"")));
        }
        for (lo, hi) in self.cover_pairs() {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn topological_order(n: usize, covers_up: &[Vec<usize>]) -> Vec<usize> {
    let mut indegree = vec![0usize; n];
    for ups in covers_up {
        for &j in ups {
            indegree[j] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = stack.pop() {
        order.push(i);
        for &j in &covers_up[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                stack.push(j);
            }
        }
    }
    assert_eq!(order.len(), n, "cover relation contains a cycle");
    order
}
