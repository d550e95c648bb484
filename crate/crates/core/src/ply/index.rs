//! Bounding-volume hierarchy over disk bounding boxes.
//!
//! Drawings mix disks whose radii differ by many orders of magnitude, so a
//! uniform grid is a poor fit; a median-split BVH keeps point and box queries
//! close to `O(log n + k)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{Aabb, Point};

const LEAF_SIZE: usize = 4;

#[derive(Debug, Clone)]
struct Node {
    bbox: Aabb,
    start: usize,
    end: usize,
    children: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub(crate) struct DiskIndex {
    nodes: Vec<Node>,
    items: Vec<usize>,
    boxes: Vec<Aabb>,
}

impl DiskIndex {
    pub(crate) fn build(boxes: &[Aabb]) -> Self {
        let mut index = DiskIndex {
            nodes: Vec::new(),
            items: (0..boxes.len()).collect(),
            boxes: boxes.to_vec(),
        };
        if !boxes.is_empty() {
            index.build_node(boxes, 0, boxes.len());
        }
        index
    }

    fn build_node(&mut self, boxes: &[Aabb], start: usize, end: usize) -> usize {
        let bbox = self.items[start..end]
            .iter()
            .fold(Aabb::EMPTY, |acc, &i| acc.union(boxes[i]));
        let id = self.nodes.len();
        self.nodes.push(Node {
            bbox,
            start,
            end,
            children: None,
        });
        if end - start <= LEAF_SIZE {
            return id;
        }
        let center = |i: usize| {
            let b = boxes[i];
            Point::new(0.5 * (b.min.x + b.max.x), 0.5 * (b.min.y + b.max.y))
        };
        let spread = self.items[start..end]
            .iter()
            .fold(Aabb::EMPTY, |acc, &i| acc.include(center(i)));
        let split_x = spread.width() >= spread.height();
        let mid = start + (end - start) / 2;
        self.items[start..end].select_nth_unstable_by(mid - start, |&a, &b| {
            let (ca, cb) = (center(a), center(b));
            if split_x {
                ca.x.total_cmp(&cb.x).then(a.cmp(&b))
            } else {
                ca.y.total_cmp(&cb.y).then(a.cmp(&b))
            }
        });
        let left = self.build_node(boxes, start, mid);
        let right = self.build_node(boxes, mid, end);
        self.nodes[id].children = Some((left, right));
        id
    }

    /// Calls `f` for every item whose box contains `q`.
    pub(crate) fn for_each_containing(&self, q: Point, mut f: impl FnMut(usize)) {
        self.walk(|bbox| bbox.contains(q), &mut f);
    }

    /// Calls `f` for every item whose box overlaps `query`.
    pub(crate) fn for_each_overlapping(&self, query: &Aabb, mut f: impl FnMut(usize)) {
        self.walk(|bbox| bbox.overlaps(query), &mut f);
    }

    fn walk(&self, hit: impl Fn(&Aabb) -> bool, f: &mut impl FnMut(usize)) {
        if self.nodes.is_empty() {
            return;
        }
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id];
            if !hit(&node.bbox) {
                continue;
            }
            match node.children {
                Some((l, r)) => {
                    stack.push(r);
                    stack.push(l);
                }
                None => self.items[node.start..node.end]
                    .iter()
                    .filter(|&&i| hit(&self.boxes[i]))
                    .for_each(|&i| f(i)),
            }
        }
    }
}
