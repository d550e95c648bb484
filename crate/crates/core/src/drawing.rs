//! Straight-line drawings.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{Aabb, Point};
use crate::{Error, Result};

/// Largest ply ratio accepted by [`Drawing::new`].
pub const MAX_ALPHA: f64 = 0.5;

/// Vertex positions, an edge list and the ply ratio `alpha`.
///
/// Vertex ids are `0..positions.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    alpha: f64,
    positions: Vec<Point>,
    edges: Vec<(usize, usize)>,
}

impl Drawing {
    /// Validated drawing with `alpha` in `(0, 0.5]`.
    pub fn new(alpha: f64, positions: Vec<Point>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= MAX_ALPHA) {
            return Err(Error::param(
                "alpha",
                format!("must lie in (0, {MAX_ALPHA}], got {alpha}"),
            ));
        }
        Self::new_experimental(alpha, positions, edges)
    }

    /// Like [`Drawing::new`] but accepts any finite positive `alpha`.
    pub fn new_experimental(
        alpha: f64,
        positions: Vec<Point>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::param(
                "alpha",
                format!("must be positive, got {alpha}"),
            ));
        }
        if let Some(v) = positions.iter().position(|p| !p.is_finite()) {
            return Err(Error::MalformedDrawing(format!(
                "vertex {v} has a non-finite coordinate"
            )));
        }
        let n = positions.len();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::MalformedDrawing(format!(
                    "edge ({u}, {v}) refers to a vertex without a position"
                )));
            }
            if positions[u] == positions[v] {
                return Err(Error::MalformedDrawing(format!(
                    "edge ({u}, {v}) has zero length"
                )));
            }
        }
        Ok(Drawing {
            alpha,
            positions,
            edges,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> Point {
        self.positions[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn edge_length(&self, (u, v): (usize, usize)) -> f64 {
        self.positions[u].dist(self.positions[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Same geometry with a different ply ratio, `(0, 0.5]` enforced.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Drawing::new(alpha, self.positions.clone(), self.edges.clone())
    }

    /// Same geometry with any positive ply ratio.
    pub fn with_alpha_experimental(&self, alpha: f64) -> Result<Self> {
        Drawing::new_experimental(alpha, self.positions.clone(), self.edges.clone())
    }

    /// Uniformly scaled copy.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let positions = self.positions.iter().map(|&p| p * factor).collect();
        Drawing::new_experimental(self.alpha, positions, self.edges.clone())
    }

    /// Longest incident edge per vertex; 0 for isolated vertices.
    pub fn longest_incident(&self) -> Vec<f64> {
        let mut longest = vec![0.0f64; self.positions.len()];
        for &e in &self.edges {
            let len = self.edge_length(e);
            longest[e.0] = longest[e.0].max(len);
            longest[e.1] = longest[e.1].max(len);
        }
        longest
    }

    pub fn bounding_box(&self) -> Aabb {
        self.positions
            .iter()
            .fold(Aabb::EMPTY, |bb, &p| bb.include(p))
    }
}
