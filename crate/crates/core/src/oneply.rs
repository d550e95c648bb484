//! Fractal wedge layout: 1-ply drawings of trees with maximum degree `delta`.
//!
//! The plane around every vertex is cut into `delta` equal wedges. A child
//! edge is `f` times as long as the edge entering its parent, so a subtree
//! hanging from a child never leaves that child's wedge, and with `alpha`
//! small enough no two ply disks overlap.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::tree::RootedTree;
use crate::{Error, Result};

/// Edge shrink ratio per level.
///
/// `sin(pi/delta) / (1 + sin(pi/delta))`, or `1/2` for the axis-parallel
/// variant (which only exists for `delta = 4`).
pub fn compute_f(delta: usize, manhattan: bool) -> Result<f64> {
    check_delta(delta, manhattan)?;
    if manhattan {
        return Ok(0.5);
    }
    let s = libm::sin(PI / delta as f64);
    Ok(s / (1.0 + s))
}

/// Largest `alpha` for which the layout is guaranteed to have ply 1.
///
/// `min(f/(1+f), f sqrt(1 - 2f cos(2pi/delta) + f^2) - f^3/(1-f))`, and
/// `1/3` for the axis-parallel variant.
pub fn compute_alpha_max(delta: usize, manhattan: bool) -> Result<f64> {
    let f = compute_f(delta, manhattan)?;
    if manhattan {
        return Ok(1.0 / 3.0);
    }
    let theta = 2.0 * PI / delta as f64;
    let parent_child = f / (1.0 + f);
    let siblings = f * libm::sqrt(1.0 - 2.0 * f * libm::cos(theta) + f * f) - f * f * f / (1.0 - f);
    Ok(parent_child.min(siblings))
}

fn check_delta(delta: usize, manhattan: bool) -> Result<()> {
    if delta < 3 {
        return Err(Error::param("delta", "maximum degree must be at least 3"));
    }
    if manhattan && delta != 4 {
        return Err(Error::param(
            "manhattan",
            "the axis-parallel layout needs delta = 4",
        ));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OnePlyParams {
    pub delta: usize,
    pub f: f64,
    /// Wedge angle `2 pi / delta`.
    pub theta: f64,
    pub alpha: f64,
    pub manhattan: bool,
}

impl OnePlyParams {
    /// Parameters at the largest guaranteed `alpha`.
    pub fn new(delta: usize) -> Result<Self> {
        Self::build(delta, false)
    }

    /// Axis-parallel layout for `delta = 4`: `f = 1/2`, `alpha = 1/3`.
    pub fn manhattan() -> Self {
        Self::build(4, true).expect("delta 4 is valid")
    }

    fn build(delta: usize, manhattan: bool) -> Result<Self> {
        Ok(OnePlyParams {
            delta,
            f: compute_f(delta, manhattan)?,
            theta: 2.0 * PI / delta as f64,
            alpha: compute_alpha_max(delta, manhattan)?,
            manhattan,
        })
    }

    /// Replaces `alpha`, which must stay within the guaranteed bound.
    pub fn with_alpha(self, alpha: f64) -> Result<Self> {
        let bound = compute_alpha_max(self.delta, self.manhattan)?;
        if !(alpha > 0.0 && alpha <= bound) {
            return Err(Error::param(
                "alpha",
                alloc::format!("must lie in (0, {bound}] for delta = {}", self.delta),
            ));
        }
        Ok(OnePlyParams { alpha, ..self })
    }

    /// Replaces `alpha` without checking the bound, for probing tightness.
    pub fn with_alpha_unchecked(self, alpha: f64) -> Self {
        OnePlyParams { alpha, ..self }
    }
}

/// Lays out `tree` with its root at the origin.
///
/// Directions are multiples of `pi/delta`. The root's `j`-th child sits at
/// angle `j theta`. A non-root vertex entered along direction `phi` puts its
/// `j`-th child at `phi + pi + (j+1) theta`, skipping the wedge that holds
/// the edge back to its parent. Children of a vertex at depth `d` are at
/// distance `root_edge_length * f^d`.
pub fn layout_one_ply(
    tree: &RootedTree,
    params: &OnePlyParams,
    root_edge_length: f64,
) -> Result<Drawing> {
    check_delta(params.delta, params.manhattan)?;
    if !(root_edge_length > 0.0 && root_edge_length.is_finite()) {
        return Err(Error::param(
            "root_edge_length",
            "must be positive and finite",
        ));
    }
    tree.check_degree(params.delta)?;
    let delta = params.delta;
    let steps = 2 * delta;
    let unit: Vec<Point> = (0..steps).map(|k| snapped_polar(k, delta)).collect();

    let n = tree.len();
    let mut pos = vec![Point::ORIGIN; n];
    // Direction (in units of pi/delta) and length of the edge entering v.
    let mut dir = vec![0usize; n];
    let mut len = vec![0.0f64; n];
    let root = tree.root();
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for (j, &c) in tree.children(v).iter().enumerate() {
            let (d, l) = if v == root {
                (2 * j, root_edge_length)
            } else {
                ((dir[v] + delta + 2 * (j + 1)) % steps, len[v] * params.f)
            };
            dir[c] = d;
            len[c] = l;
            pos[c] = pos[v] + unit[d] * l;
            stack.push(c);
        }
    }
    let edges = tree.edges();
    if params.alpha <= crate::drawing::MAX_ALPHA {
        Drawing::new(params.alpha, pos, edges)
    } else {
        Drawing::new_experimental(params.alpha, pos, edges)
    }
}

/// Unit vector at angle `k pi / delta`, exact on the axes.
fn snapped_polar(k: usize, delta: usize) -> Point {
    let twice = 2 * k;
    if twice.is_multiple_of(delta) {
        // Multiple of pi/2.
        return match (twice / delta) % 4 {
            0 => Point::new(1.0, 0.0),
            1 => Point::new(0.0, 1.0),
            2 => Point::new(-1.0, 0.0),
            _ => Point::new(0.0, -1.0),
        };
    }
    Point::polar(k as f64 * PI / delta as f64)
}
