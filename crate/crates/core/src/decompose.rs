//! Heavy path decomposition.
//!
//! Starting at the root, a path repeatedly steps to the child with the
//! largest subtree (ties go to the smallest child id) until it reaches a
//! leaf. Every other child starts a new path, *anchored* at the vertex whose
//! child it is. Paths form a tree of their own; a light child's subtree has
//! at most half the size of its parent's subtree, so that tree has height at
//! most `log2(n)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::tree::RootedTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyPathDecomposition {
    paths: Vec<Vec<usize>>,
    path_of: Vec<usize>,
    anchor: Vec<Option<usize>>,
    parent_path: Vec<Option<usize>>,
    level: Vec<usize>,
    anchored_paths: Vec<Vec<usize>>,
    anchored_size: Vec<usize>,
    total_height: usize,
}

/// The child with the largest subtree, smallest id on ties.
pub fn heavy_child(tree: &RootedTree, v: usize) -> Option<usize> {
    tree.children(v).iter().copied().max_by(|&a, &b| {
        tree.subtree_size(a)
            .cmp(&tree.subtree_size(b))
            .then_with(|| b.cmp(&a))
    })
}

impl HeavyPathDecomposition {
    pub fn new(tree: &RootedTree) -> Self {
        let n = tree.len();
        let mut hpd = HeavyPathDecomposition {
            paths: Vec::new(),
            path_of: vec![usize::MAX; n],
            anchor: Vec::new(),
            parent_path: Vec::new(),
            level: Vec::new(),
            anchored_paths: vec![Vec::new(); n],
            anchored_size: vec![0; n],
            total_height: 0,
        };

        // (path start, anchor vertex)
        let mut pending = vec![(tree.root(), None::<usize>)];
        while let Some((start, anchor)) = pending.pop() {
            let id = hpd.paths.len();
            let (parent_path, level) = match anchor {
                Some(a) => {
                    let pp = hpd.path_of[a];
                    hpd.anchored_paths[a].push(id);
                    (Some(pp), hpd.level[pp] + 1)
                }
                None => (None, 0),
            };
            let mut path = Vec::new();
            let mut light = Vec::new();
            let mut cur = Some(start);
            while let Some(v) = cur {
                hpd.path_of[v] = id;
                path.push(v);
                let heavy = heavy_child(tree, v);
                let heavy_size = heavy.map_or(0, |h| tree.subtree_size(h));
                hpd.anchored_size[v] = tree.subtree_size(v) - 1 - heavy_size;
                light.extend(
                    tree.children(v)
                        .iter()
                        .filter(|&&c| Some(c) != heavy)
                        .map(|&c| (c, Some(v))),
                );
                cur = heavy;
            }
            hpd.paths.push(path);
            hpd.anchor.push(anchor);
            hpd.parent_path.push(parent_path);
            hpd.level.push(level);
            hpd.total_height = hpd.total_height.max(level);
            // Reversed so that paths are discovered in child order.
            pending.extend(light.into_iter().rev());
        }
        hpd
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn path(&self, id: usize) -> &[usize] {
        &self.paths[id]
    }

    /// The path containing vertex `v`.
    pub fn path_of(&self, v: usize) -> usize {
        self.path_of[v]
    }

    /// Vertex the path hangs from; `None` for the root path.
    pub fn anchor(&self, path: usize) -> Option<usize> {
        self.anchor[path]
    }

    pub fn parent_path(&self, path: usize) -> Option<usize> {
        self.parent_path[path]
    }

    /// Depth of the path in the decomposition tree (root path: 0).
    pub fn level(&self, path: usize) -> usize {
        self.level[path]
    }

    /// Paths anchored at `v`, in the order of `v`'s children.
    pub fn anchored_paths(&self, v: usize) -> &[usize] {
        &self.anchored_paths[v]
    }

    /// Total size of the subtrees anchored at `v`.
    pub fn anchored_size(&self, v: usize) -> usize {
        self.anchored_size[v]
    }

    /// Height of the decomposition tree.
    pub fn total_height(&self) -> usize {
        self.total_height
    }

    /// Path ids ordered so that every path comes after all paths anchored on it.
    pub fn bottom_up_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.paths.len()).collect();
        order.sort_by_key(|&p| core::cmp::Reverse(self.level[p]));
        order
    }
}
