//! 2-trees: graphs grown from one edge by repeatedly adding a vertex
//! adjacent to both endpoints of an existing edge.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

/// One construction step: `vertex` joins, adjacent to both `parents`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attachment {
    pub vertex: usize,
    pub parents: (usize, usize),
}

/// A graph together with the construction order that witnesses it is a 2-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTree {
    vertex_count: usize,
    base: (usize, usize),
    attachments: Vec<Attachment>,
    edges: Vec<(usize, usize)>,
}

impl TwoTree {
    /// Builds the graph induced by a construction order.
    pub fn from_construction(
        vertex_count: usize,
        base: (usize, usize),
        attachments: Vec<Attachment>,
    ) -> Self {
        let mut edges = Vec::with_capacity(1 + 2 * attachments.len());
        edges.push(base);
        for a in &attachments {
            edges.push((a.parents.0, a.vertex));
            edges.push((a.parents.1, a.vertex));
        }
        TwoTree {
            vertex_count,
            base,
            attachments,
            edges,
        }
    }

    /// Takes all parts verbatim, e.g. when read from a file; nothing is
    /// checked until [`validate_two_tree`].
    pub fn from_parts(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        base: (usize, usize),
        attachments: Vec<Attachment>,
    ) -> Self {
        TwoTree {
            vertex_count,
            base,
            attachments,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn base(&self) -> (usize, usize) {
        self.base
    }

    pub fn attachments(&self) -> &[Attachment] {
        &self.attachments
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// True iff the construction order is a valid 2-tree construction of
/// exactly the stored graph.
pub fn validate_two_tree(g: &TwoTree) -> bool {
    let n = g.vertex_count;
    let (a, b) = g.base;
    if a == b || a >= n || b >= n {
        return false;
    }
    let mut present = vec![false; n];
    present[a] = true;
    present[b] = true;
    let mut built = BTreeSet::new();
    built.insert(key(a, b));
    for step in &g.attachments {
        let (p, q) = step.parents;
        let v = step.vertex;
        if v >= n || p >= n || q >= n || present[v] || p == q {
            return false;
        }
        if !present[p] || !present[q] || !built.contains(&key(p, q)) {
            return false;
        }
        present[v] = true;
        built.insert(key(v, p));
        built.insert(key(v, q));
    }
    if present.iter().any(|&seen| !seen) {
        return false;
    }
    let mut stored = BTreeSet::new();
    for &(u, v) in &g.edges {
        if u >= n || v >= n || u == v {
            return false;
        }
        stored.insert(key(u, v));
    }
    stored == built
}
