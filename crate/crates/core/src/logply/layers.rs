//! Concentric layers: radius ratio 3 keeps disks of distinct layers apart.
//!
//! A vertex at distance `d` from a center, whose longest edge is the one to
//! the center, has a disk of radius `d/2`, so it covers the radii
//! `(d/2, 3d/2)`. Layers at `d` and `3d` therefore only touch.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::logply::LOG_PLY_ALPHA;
use crate::tree::RootedTree;
use crate::{Error, Result};

/// Vertices per layer that keep same-layer disks disjoint.
pub const LAYER_CAPACITY: usize = 6;

/// Distances of successive layers from their center.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerSchedule {
    offsets: Vec<f64>,
}

impl LayerSchedule {
    /// `x_j = 3 n (3^j - 1)` for `j = 1..=count`.
    pub fn uniform(n: usize, count: usize) -> Self {
        let n = n as f64;
        let offsets = (1..=count)
            .map(|j| 3.0 * n * (libm::pow(3.0, j as f64) - 1.0))
            .collect();
        LayerSchedule { offsets }
    }

    /// Smallest schedule in which a body of reach `reaches[j]` around its
    /// first vertex fits in the annulus `[x_j / 2, 3 x_j / 2]`, with a small
    /// relative margin. Offsets are at least 1.
    pub fn fitted(reaches: &[f64]) -> Self {
        const MARGIN: f64 = 1e-3;
        let mut offsets: Vec<f64> = Vec::with_capacity(reaches.len());
        for &b in reaches {
            let floor = offsets.last().map_or(0.0, |&x| 3.0 * x);
            offsets.push((2.0 * b).max(floor).max(1.0) * (1.0 + MARGIN));
        }
        LayerSchedule { offsets }
    }

    pub fn from_offsets(offsets: Vec<f64>) -> Self {
        LayerSchedule { offsets }
    }

    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    /// Outer radius of the last layer; 0 without layers.
    pub fn outer_radius(&self) -> f64 {
        self.offsets.last().map_or(0.0, |&x| 1.5 * x)
    }

    /// Every layer is at least three times as far out as the previous one.
    pub fn is_separated(&self) -> bool {
        self.offsets.windows(2).all(|w| w[1] >= 3.0 * w[0])
    }
}

/// Number of layers needed for `child_count` children.
pub fn layer_count(child_count: usize) -> usize {
    child_count.div_ceil(LAYER_CAPACITY)
}

/// Children of a star around `center`, six per layer at equal angles,
/// layer `i` (from 0) at distance `base * 3^i`.
///
/// Angles are measured from `start_angle`. Returns positions and the layer
/// of each child.
pub fn layered_star_layout(
    center: Point,
    base: f64,
    child_count: usize,
    start_angle: f64,
) -> Result<Vec<(Point, usize)>> {
    if child_count == 0 {
        return Err(Error::param("child_count", "star needs at least one child"));
    }
    if !(base > 0.0 && base.is_finite()) {
        return Err(Error::param("base", "must be positive and finite"));
    }
    let mut out = Vec::with_capacity(child_count);
    for t in 0..child_count {
        let layer = t / LAYER_CAPACITY;
        let in_layer = (child_count - layer * LAYER_CAPACITY).min(LAYER_CAPACITY);
        let q = t % LAYER_CAPACITY;
        let angle = start_angle + q as f64 * 2.0 * PI / in_layer as f64;
        let radius = base * libm::pow(3.0, layer as f64);
        out.push((center + Point::polar(angle) * radius, layer));
    }
    Ok(out)
}

/// Recursive layered drawing for balanced trees.
///
/// Each vertex draws its children as a layered star; a child's own star is
/// shrunk by `3^L`, where `L` is the number of layers the widest vertex
/// needs, so the child's subtree stays inside its first-layer slot.
pub fn layered_tree_layout(tree: &RootedTree, root_base: f64) -> Result<Drawing> {
    if !(root_base > 0.0 && root_base.is_finite()) {
        return Err(Error::param("root_base", "must be positive and finite"));
    }
    let widest = (0..tree.len())
        .map(|v| tree.children(v).len())
        .max()
        .unwrap_or(0);
    let shrink = libm::pow(3.0, layer_count(widest.max(1)) as f64);
    let n = tree.len();
    let mut pos = vec![Point::ORIGIN; n];
    let mut base = vec![0.0f64; n];
    let mut heading = vec![0.0f64; n];
    base[tree.root()] = root_base;
    let mut stack = vec![tree.root()];
    while let Some(v) = stack.pop() {
        let kids = tree.children(v);
        if kids.is_empty() {
            continue;
        }
        let first = kids.len().min(LAYER_CAPACITY);
        // Keep the edge back to the parent clear of the first layer.
        let start = if v == tree.root() {
            0.0
        } else if first.is_multiple_of(2) {
            heading[v] + PI / first as f64
        } else {
            heading[v]
        };
        let placed = layered_star_layout(pos[v], base[v], kids.len(), start)?;
        for (&c, &(p, _)) in kids.iter().zip(&placed) {
            pos[c] = p;
            heading[c] = libm::atan2(p.y - pos[v].y, p.x - pos[v].x);
            base[c] = base[v] / shrink;
            if base[c] <= 0.0 {
                return Err(Error::param(
                    "root_base",
                    "tree too deep: layer scale underflows",
                ));
            }
            stack.push(c);
        }
    }
    Drawing::new(LOG_PLY_ALPHA, pos, tree.edges())
}
