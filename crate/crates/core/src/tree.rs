//! Rooted, ordered trees and the tree families used as layout inputs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Largest tree the generators will build.
pub const MAX_GENERATED_NODES: usize = 10_000_000;

/// A rooted tree on vertices `0..n` with ordered children.
///
/// Immutable after construction. Subtree sizes are computed once and cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    subtree_size: Vec<usize>,
}

impl RootedTree {
    /// Builds a tree from ordered child lists, one per vertex.
    pub fn from_children(root: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        let n = children.len();
        if n == 0 {
            return Err(Error::MalformedTree("tree has no nodes".into()));
        }
        if root >= n {
            return Err(Error::MalformedTree(format!(
                "root {root} is not a node id (ids are 0..{n})"
            )));
        }
        let mut parent = vec![None; n];
        for (v, kids) in children.iter().enumerate() {
            for &c in kids {
                if c >= n {
                    return Err(Error::MalformedTree(format!(
                        "node {v} lists child {c}, which is not a node id"
                    )));
                }
                if c == root {
                    return Err(Error::MalformedTree(format!(
                        "root {root} is listed as a child of {v}"
                    )));
                }
                if let Some(p) = parent[c] {
                    return Err(Error::MalformedTree(format!(
                        "node {c} has two parents ({p} and {v})"
                    )));
                }
                parent[c] = Some(v);
            }
        }
        if let Some(orphan) = (0..n).find(|&v| v != root && parent[v].is_none()) {
            return Err(Error::MalformedTree(format!(
                "node {orphan} has no parent and is not the root"
            )));
        }

        // Every vertex has exactly one parent, so the structure is a tree iff
        // everything is reachable from the root.
        let order = preorder_from(root, &children);
        if order.len() != n {
            return Err(Error::MalformedTree(
                "parent links contain a cycle disconnected from the root".into(),
            ));
        }
        let mut subtree_size = vec![1usize; n];
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                subtree_size[p] += subtree_size[v];
            }
        }
        Ok(RootedTree {
            root,
            parent,
            children,
            subtree_size,
        })
    }

    /// Builds a tree from a parent array; children are ordered by id.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        let mut root = None;
        let mut children = vec![Vec::new(); n];
        for (v, p) in parents.iter().enumerate() {
            match *p {
                None if root.is_some() => {
                    return Err(Error::MalformedTree(format!(
                        "nodes {} and {v} both lack a parent",
                        root.unwrap_or_default()
                    )))
                }
                None => root = Some(v),
                Some(p) if p >= n || p == v => {
                    return Err(Error::MalformedTree(format!(
                        "node {v} has invalid parent {p}"
                    )))
                }
                Some(p) => children[p].push(v),
            }
        }
        let root = root.ok_or_else(|| Error::MalformedTree("no root found".into()))?;
        Self::from_children(root, children)
    }

    pub fn generate(family: TreeFamily) -> Result<Self> {
        family.generate()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn subtree_size(&self, v: usize) -> usize {
        self.subtree_size[v]
    }

    /// Number of incident edges: children plus the parent edge.
    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Fails with the first vertex whose degree exceeds `bound`.
    pub fn check_degree(&self, bound: usize) -> Result<()> {
        match (0..self.len()).find(|&v| self.degree(v) > bound) {
            Some(vertex) => Err(Error::DegreeViolation {
                vertex,
                degree: self.degree(vertex),
                bound,
            }),
            None => Ok(()),
        }
    }

    /// Vertices in preorder, children visited in stored order.
    pub fn preorder(&self) -> Vec<usize> {
        preorder_from(self.root, &self.children)
    }

    /// Depth of every vertex; the root has depth 0.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for v in self.preorder() {
            for &c in &self.children[v] {
                depth[c] = depth[v] + 1;
            }
        }
        depth
    }

    /// Length of the longest root-to-leaf path, in edges.
    pub fn height(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    /// Tree edges as `(parent, child)` pairs in preorder of the child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.preorder()
            .into_iter()
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect()
    }

    /// Recomputes subtree sizes bottom-up from the child lists, ignoring the
    /// cached values.
    pub fn recompute_subtree_sizes(&self) -> Vec<usize> {
        fn size(t: &RootedTree, v: usize, out: &mut [usize]) -> usize {
            // Explicit stack: generated paths can be deep.
            let mut stack = vec![(v, false)];
            while let Some((u, done)) = stack.pop() {
                if done {
                    out[u] = 1 + t.children[u].iter().map(|&c| out[c]).sum::<usize>();
                } else {
                    stack.push((u, true));
                    stack.extend(t.children[u].iter().map(|&c| (c, false)));
                }
            }
            out[v]
        }
        let mut out = vec![0; self.len()];
        size(self, self.root, &mut out);
        out
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let rebuilt = Self::from_children(self.root, self.children.clone())?;
        if rebuilt.parent != self.parent || self.recompute_subtree_sizes() != self.subtree_size {
            return Err(Error::MalformedTree(
                "cached structure is inconsistent".into(),
            ));
        }
        Ok(())
    }
}

fn preorder_from(root: usize, children: &[Vec<usize>]) -> Vec<usize> {
    let mut order = Vec::with_capacity(children.len());
    let mut seen = vec![false; children.len()];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        stack.extend(children[v].iter().rev().copied());
    }
    order
}

/// Parameterized tree families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFamily {
    /// Every internal vertex has `k` children; leaves at depth `height`.
    CompleteKary {
        k: usize,
        height: usize,
    },
    /// Random recursive tree: each new vertex attaches to a uniformly chosen
    /// earlier vertex that still has spare degree.
    Random {
        n: usize,
        max_degree: usize,
        seed: u64,
    },
    Path {
        n: usize,
    },
    /// A spine with as many pendant leaves per spine vertex as the degree
    /// bound allows.
    Caterpillar {
        n: usize,
        max_degree: usize,
    },
}

impl TreeFamily {
    pub fn generate(self) -> Result<RootedTree> {
        match self {
            TreeFamily::CompleteKary { k, height } => complete_kary(k, height),
            TreeFamily::Random {
                n,
                max_degree,
                seed,
            } => random(n, max_degree, seed),
            TreeFamily::Path { n } => path(n),
            TreeFamily::Caterpillar { n, max_degree } => caterpillar(n, max_degree),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::param("n", "a tree needs at least one node"));
    }
    if n > MAX_GENERATED_NODES {
        return Err(Error::param(
            "n",
            format!("at most {MAX_GENERATED_NODES} nodes can be generated"),
        ));
    }
    Ok(())
}

fn complete_kary(k: usize, height: usize) -> Result<RootedTree> {
    if k < 2 {
        return Err(Error::param("k", format!("need k >= 2, got {k}")));
    }
    // (k^(height+1) - 1) / (k - 1), guarding against overflow.
    let mut n: usize = 1;
    let mut level: usize = 1;
    for _ in 0..height {
        level = level
            .checked_mul(k)
            .filter(|&l| l <= MAX_GENERATED_NODES)
            .ok_or_else(|| Error::param("height", "complete tree is too large"))?;
        n += level;
    }
    check_n(n)?;
    let internal = n - level;
    let children = (0..n)
        .map(|v| {
            if v < internal {
                (k * v + 1..=k * v + k).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    RootedTree::from_children(0, children)
}

fn random(n: usize, max_degree: usize, seed: u64) -> Result<RootedTree> {
    check_n(n)?;
    if max_degree < 2 && n > 2 {
        return Err(Error::param(
            "max_degree",
            format!("degree bound {max_degree} admits at most 2 nodes"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parents = vec![None; n];
    let mut spare = vec![0usize; n];
    let mut open = Vec::with_capacity(n);
    spare[0] = max_degree.max(1);
    open.push(0);
    for v in 1..n {
        let slot = rng.gen_range(0..open.len());
        let p = open[slot];
        parents[v] = Some(p);
        spare[p] -= 1;
        if spare[p] == 0 {
            open.swap_remove(slot);
        }
        spare[v] = max_degree.saturating_sub(1);
        if spare[v] > 0 {
            open.push(v);
        }
    }
    RootedTree::from_parents(&parents)
}

fn path(n: usize) -> Result<RootedTree> {
    check_n(n)?;
    let children = (0..n)
        .map(|v| if v + 1 < n { vec![v + 1] } else { Vec::new() })
        .collect();
    RootedTree::from_children(0, children)
}

fn caterpillar(n: usize, max_degree: usize) -> Result<RootedTree> {
    check_n(n)?;
    if max_degree < 2 {
        return Err(Error::param(
            "max_degree",
            "a caterpillar needs degree bound >= 2",
        ));
    }
    let mut children = vec![Vec::new(); n];
    let mut spine = 0;
    let mut next = 1;
    while next < n {
        let capacity = if spine == 0 {
            max_degree
        } else {
            max_degree - 1
        };
        let spine_child = next;
        children[spine].push(spine_child);
        next += 1;
        for _ in 1..capacity {
            if next >= n {
                break;
            }
            children[spine].push(next);
            next += 1;
        }
        spine = spine_child;
    }
    RootedTree::from_children(0, children)
}
