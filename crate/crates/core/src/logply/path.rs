//! Collinear 2-drawings of a path hanging from an anchor vertex.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::logply::LOG_PLY_ALPHA;
use crate::{Error, Result};

/// Edge lengths of a path `v, v_1, ..., v_k` drawn on a segment.
///
/// `lengths[0]` is the anchor edge `(v, v_1)` and `lengths[i]` the edge
/// `(v_i, v_{i+1})`. `weights[i - 1]` is the radius reserved around `v_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathLayout {
    pub weights: Vec<f64>,
    pub lengths: Vec<f64>,
}

/// Lengths for a path whose vertices carry anchored subtrees of the given
/// sizes.
///
/// Starts from `l(v, v_1) = n_1` and `l(v_i, v_{i+1}) = n_i + n_{i+1}`
/// (at least 1 each), then visits edges from longest to shortest, ties by
/// index, raising both neighbours of the visited edge to at least half its
/// length. The order uses current lengths, so an edge enlarged by an earlier
/// visit is visited at its enlarged length.
pub fn draw_path(sizes: &[usize]) -> Result<PathLayout> {
    let weights: Vec<f64> = sizes.iter().map(|&s| s as f64).collect();
    draw_path_weighted(&weights)
}

/// [`draw_path`] with real-valued reserved radii.
pub fn draw_path_weighted(weights: &[f64]) -> Result<PathLayout> {
    if weights.is_empty() {
        return Err(Error::param("sizes", "path must have at least one vertex"));
    }
    if weights.iter().any(|w| !(*w >= 0.0 && w.is_finite())) {
        return Err(Error::param(
            "sizes",
            "weights must be finite and non-negative",
        ));
    }
    let k = weights.len();
    let mut lengths = vec![0.0; k];
    lengths[0] = weights[0].max(1.0);
    for i in 1..k {
        lengths[i] = (weights[i - 1] + weights[i]).max(1.0);
    }

    let mut heap: BinaryHeap<(Key, Reverse<usize>)> = lengths
        .iter()
        .enumerate()
        .map(|(i, &l)| (Key(l), Reverse(i)))
        .collect();
    let mut visited = vec![false; k];
    while let Some((Key(len), Reverse(e))) = heap.pop() {
        if visited[e] || len != lengths[e] {
            continue;
        }
        visited[e] = true;
        let half = 0.5 * len;
        for nb in [e.wrapping_sub(1), e + 1] {
            if nb < k && !visited[nb] && lengths[nb] < half {
                lengths[nb] = half;
                heap.push((Key(half), Reverse(nb)));
            }
        }
    }
    Ok(PathLayout {
        weights: weights.to_vec(),
        lengths,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Key(f64);

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl PathLayout {
    /// Number of path vertices, not counting the anchor.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn total_length(&self) -> f64 {
        self.lengths.iter().sum()
    }

    /// Adjacent edge lengths differ by at most a factor of two.
    pub fn is_two_drawing(&self) -> bool {
        self.lengths
            .windows(2)
            .all(|w| w[1] >= 0.5 * w[0] && w[1] <= 2.0 * w[0])
    }

    /// Lengths respect the reserved radii: `l(v, v_1) >= n_1` and
    /// `l(v_i, v_{i+1}) >= n_i + n_{i+1}`.
    pub fn respects_weights(&self) -> bool {
        let w = &self.weights;
        self.lengths[0] >= w[0] && (1..self.len()).all(|i| self.lengths[i] >= w[i - 1] + w[i])
    }

    /// Distance of each vertex from the anchor, anchor first.
    pub fn offsets(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut s = 0.0;
        out.push(s);
        for &l in &self.lengths {
            s += l;
            out.push(s);
        }
        out
    }

    /// The path alone on the positive x-axis with the anchor at the origin;
    /// vertex 0 is the anchor.
    pub fn drawing(&self) -> Result<Drawing> {
        let positions = self
            .offsets()
            .into_iter()
            .map(|x| Point::new(x, 0.0))
            .collect();
        let edges = (0..self.len()).map(|i| (i, i + 1)).collect();
        Drawing::new(LOG_PLY_ALPHA, positions, edges)
    }
}
