use alloc::vec::Vec;
use core::ops::Range;

use crate::two_tree::{Attachment, TwoTree};
use crate::{Error, Result};

/// Smallest `n_target` accepted by [`build_instance`].
pub const MIN_TARGET: usize = 16;

/// Apex `0` plus `m` complete binary trees of height `h`.
///
/// Tree `i` occupies the ids `1 + i s .. 1 + (i + 1) s` with
/// `s = 2^(h+1) - 1`, in heap order: local index `j` has children `2j + 1`
/// and `2j + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundInstance {
    pub n_target: usize,
    pub h: usize,
    pub m: usize,
    pub apex: usize,
    /// 2-tree containing the instance graph, with its construction order.
    pub graph: TwoTree,
}

/// Instance sized for `n_target`: `h = ceil((log2 n + log2 log2 n) / 2)`,
/// `m = ceil(sqrt(n / log2 n))`.
pub fn build_instance(n_target: usize) -> Result<LowerBoundInstance> {
    if n_target < MIN_TARGET {
        return Err(Error::param(
            "n",
            alloc::format!("need n >= {MIN_TARGET}, got {n_target}"),
        ));
    }
    let n = n_target as f64;
    let lg = libm::log2(n);
    let h = ceil_int((lg + libm::log2(lg)) / 2.0);
    let m = ceil_int(libm::sqrt(n / lg));
    let mut inst = build_instance_with(h, m)?;
    inst.n_target = n_target;
    Ok(inst)
}

/// Ceiling that ignores rounding noise just above an integer.
fn ceil_int(x: f64) -> usize {
    libm::ceil(x - 1e-9) as usize
}

/// Instance with explicit parameters; `n_target` is set to the vertex count.
pub fn build_instance_with(h: usize, m: usize) -> Result<LowerBoundInstance> {
    if h < 1 || m < 1 {
        return Err(Error::param("h, m", "both must be at least 1"));
    }
    if h > 20 || m > 1 << 20 {
        return Err(Error::param("h, m", "instance too large"));
    }
    let size = (1usize << (h + 1)) - 1;
    let count = 1 + m * size;
    let apex = 0;
    let root = |i: usize| 1 + i * size;
    let mut attachments = Vec::with_capacity(count - 2);
    for i in 0..m {
        if i > 0 {
            attachments.push(Attachment {
                vertex: root(i),
                parents: (apex, root(0)),
            });
        }
        for j in 1..size {
            attachments.push(Attachment {
                vertex: root(i) + j,
                parents: (apex, root(i) + (j - 1) / 2),
            });
        }
    }
    Ok(LowerBoundInstance {
        n_target: count,
        h,
        m,
        apex,
        graph: TwoTree::from_construction(count, (apex, root(0)), attachments),
    })
}

impl LowerBoundInstance {
    pub fn vertex_count(&self) -> usize {
        1 + self.m * self.tree_size()
    }

    /// Vertices per tree, `2^(h+1) - 1`.
    pub fn tree_size(&self) -> usize {
        (1 << (self.h + 1)) - 1
    }

    pub fn tree_vertices(&self, i: usize) -> Range<usize> {
        let s = self.tree_size();
        1 + i * s..1 + (i + 1) * s
    }

    pub fn tree_root(&self, i: usize) -> usize {
        1 + i * self.tree_size()
    }

    /// Tree containing `v`; `None` for the apex.
    pub fn tree_of(&self, v: usize) -> Option<usize> {
        (v != self.apex && v < self.vertex_count()).then(|| (v - 1) / self.tree_size())
    }

    /// Depth of `v` inside its tree (root: 0).
    pub fn level(&self, v: usize) -> usize {
        let local = (v - 1) % self.tree_size();
        (usize::BITS - 1 - (local + 1).leading_zeros()) as usize
    }

    pub fn tree_parent(&self, v: usize) -> Option<usize> {
        let local = (v - 1) % self.tree_size();
        (local > 0).then(|| v - local + (local - 1) / 2)
    }

    /// Apex edges followed by tree edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            (1..self.vertex_count()).map(|w| (self.apex, w)).collect();
        out.extend((1..self.vertex_count()).filter_map(|w| self.tree_parent(w).map(|p| (p, w))));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_tree::validate_two_tree;

    #[test]
    fn parameters() {
        for (n, h, m, count) in [
            (16, 3, 2, 31),
            (64, 5, 4, 253),
            (256, 6, 6, 763),
            (1024, 7, 11, 2806),
            (4096, 8, 19, 9710),
        ] {
            let inst = build_instance(n).unwrap();
            assert_eq!(
                (inst.h, inst.m, inst.vertex_count()),
                (h, m, count),
                "n = {n}"
            );
            assert_eq!(inst.graph.vertex_count(), count);
            assert!(validate_two_tree(&inst.graph));
        }
        assert!(build_instance(15).is_err());
    }

    #[test]
    fn smallest_instance() {
        let inst = build_instance_with(1, 1).unwrap();
        assert_eq!(inst.vertex_count(), 4);
        assert!(validate_two_tree(&inst.graph));
        assert_eq!(inst.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn numbering() {
        let inst = build_instance_with(2, 3).unwrap();
        assert_eq!(inst.tree_vertices(1), 8..15);
        assert_eq!(inst.tree_of(0), None);
        assert_eq!(inst.tree_of(14), Some(1));
        assert_eq!(inst.level(8), 0);
        assert_eq!(inst.level(10), 1);
        assert_eq!(inst.level(14), 2);
        assert_eq!(inst.tree_parent(14), Some(10));
        assert_eq!(inst.tree_parent(8), None);
    }

    #[test]
    fn graph_contains_instance_edges() {
        let inst = build_instance(64).unwrap();
        let g = inst.graph.edges();
        for (u, v) in inst.edges() {
            assert!(g.contains(&(u, v)) || g.contains(&(v, u)));
        }
    }
}
