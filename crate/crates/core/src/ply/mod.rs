//! Ply disks and ply-number computation.
//!
//! Every vertex with at least one incident edge gets an *open* disk centered
//! at the vertex whose radius is `alpha` times its longest incident edge. The
//! ply number of a drawing is the largest number of these disks that share a
//! common point.
//!
//! Containment is strict with a relative tolerance: `q` is inside a disk of
//! radius `r` iff `|q - center| < r (1 - STRICT_TOLERANCE)`. Constructions in
//! this crate are tangent-tight, and tangency must count as disjoint.

mod index;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::drawing::Drawing;
use crate::geometry::{circle_intersection, Aabb, CircleIntersection, Point};
use crate::{Error, Result};

use index::DiskIndex;

/// Relative tolerance of the strict (open-disk) containment test.
pub const STRICT_TOLERANCE: f64 = 1e-9;

/// Offset of perturbed candidates around an intersection point, relative to
/// the larger of the two radii.
pub const PERTURBATION: f64 = 1e-6;

/// Default cell budget of [`ply_number_sampled`].
pub const DEFAULT_CELL_BUDGET: u64 = 200_000_000;

/// Open disk around a drawn vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlyDisk {
    pub vertex: usize,
    pub center: Point,
    pub radius: f64,
}

impl PlyDisk {
    pub fn new(vertex: usize, center: Point, radius: f64) -> Self {
        PlyDisk {
            vertex,
            center,
            radius,
        }
    }

    /// Open-disk membership under the strict tolerance policy.
    pub fn contains(&self, q: Point) -> bool {
        self.center.dist(q) < self.radius * (1.0 - STRICT_TOLERANCE)
    }

    /// Closed-disk membership, widened by the same tolerance.
    pub fn contains_closed(&self, q: Point) -> bool {
        self.center.dist(q) <= self.radius * (1.0 + STRICT_TOLERANCE)
    }

    pub fn bbox(&self) -> Aabb {
        Aabb::around(self.center, self.radius)
    }

    pub fn area(&self) -> f64 {
        core::f64::consts::PI * self.radius * self.radius
    }
}

/// Ply disks of a drawing plus the vertices that got none.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskSet {
    pub disks: Vec<PlyDisk>,
    /// Vertices without incident edges.
    pub isolated: Vec<usize>,
}

/// One disk per non-isolated vertex, radius `alpha * longest incident edge`.
pub fn ply_disks(d: &Drawing) -> DiskSet {
    let longest = d.longest_incident();
    let mut set = DiskSet {
        disks: Vec::with_capacity(longest.len()),
        isolated: Vec::new(),
    };
    for (v, &len) in longest.iter().enumerate() {
        if len > 0.0 {
            set.disks
                .push(PlyDisk::new(v, d.position(v), d.alpha() * len));
        } else {
            set.isolated.push(v);
        }
    }
    set
}

/// Number of disks strictly containing a point, and their vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Depth {
    pub count: usize,
    pub covering: Vec<usize>,
}

/// Linear-scan depth query.
pub fn depth_at(q: Point, disks: &[PlyDisk]) -> Depth {
    let covering: Vec<usize> = disks
        .iter()
        .filter(|disk| disk.contains(q))
        .map(|disk| disk.vertex)
        .collect();
    Depth {
        count: covering.len(),
        covering,
    }
}

/// Maximum depth of a drawing's disk arrangement.
#[derive(Debug, Clone, PartialEq)]
pub struct PlyResult {
    pub ply: usize,
    /// A point of maximum depth; lexicographically smallest among the
    /// candidates that reach it.
    pub witness: Point,
    /// Vertices whose disks contain the witness, ascending.
    pub covering: Vec<usize>,
    /// Maximum depth when disks are treated as closed. Differs from `ply`
    /// only when the result hinges on tangencies.
    pub closed_ply: usize,
}

/// Best candidate seen so far during an exact evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub depth: usize,
    pub witness: Point,
    pub closed_depth: usize,
}

impl Evaluation {
    /// Deterministic merge: larger depth wins, then the lexicographically
    /// smaller witness.
    pub fn merge(self, other: Evaluation) -> Evaluation {
        let closed_depth = self.closed_depth.max(other.closed_depth);
        let keep_self = match self.depth.cmp(&other.depth) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.witness.lex_cmp(&other.witness) != Ordering::Greater,
        };
        let best = if keep_self { self } else { other };
        Evaluation {
            closed_depth,
            ..best
        }
    }
}

/// A set of ply disks with a spatial index for depth queries.
#[derive(Debug, Clone)]
pub struct DiskArrangement {
    disks: Vec<PlyDisk>,
    index: DiskIndex,
}

impl DiskArrangement {
    pub fn new(disks: Vec<PlyDisk>) -> Self {
        let boxes: Vec<Aabb> = disks.iter().map(PlyDisk::bbox).collect();
        DiskArrangement {
            index: DiskIndex::build(&boxes),
            disks,
        }
    }

    pub fn from_drawing(d: &Drawing) -> Self {
        Self::new(ply_disks(d).disks)
    }

    pub fn disks(&self) -> &[PlyDisk] {
        &self.disks
    }

    pub fn depth_at(&self, q: Point) -> usize {
        let mut count = 0;
        self.index.for_each_containing(q, |i| {
            count += usize::from(self.disks[i].contains(q));
        });
        count
    }

    pub fn closed_depth_at(&self, q: Point) -> usize {
        let mut count = 0;
        self.index.for_each_containing(q, |i| {
            count += usize::from(self.disks[i].contains_closed(q));
        });
        count
    }

    /// Vertices whose disks strictly contain `q`, ascending.
    pub fn covering(&self, q: Point) -> Vec<usize> {
        let mut out = Vec::new();
        self.index.for_each_containing(q, |i| {
            if self.disks[i].contains(q) {
                out.push(self.disks[i].vertex);
            }
        });
        out.sort_unstable();
        out
    }

    /// Points at which the maximum depth is guaranteed to be attained.
    ///
    /// Every disk center, and for every pair of crossing circles each
    /// boundary intersection point, that point nudged in eight compass
    /// directions and along the bisector of the two inward normals, and the
    /// midpoint of the lens along the line of centers.
    ///
    /// A cell of maximum depth is the intersection of the disks containing
    /// it. Either the smallest of those disks lies inside all others (and its
    /// center is a candidate), or the cell has a corner where two of the
    /// circles cross; the nudged copies of that corner fall inside the cell.
    pub fn candidates(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self.disks.iter().map(|d| d.center).collect();
        for (i, a) in self.disks.iter().enumerate() {
            self.index.for_each_overlapping(&a.bbox(), |j| {
                if j <= i {
                    return;
                }
                let b = &self.disks[j];
                match circle_intersection(a.center, a.radius, b.center, b.radius) {
                    CircleIntersection::None | CircleIntersection::Coincident => {}
                    CircleIntersection::Tangent(p) => push_corner(&mut out, p, a, b),
                    CircleIntersection::Two(p, q) => {
                        push_corner(&mut out, p, a, b);
                        push_corner(&mut out, q, a, b);
                        out.push(lens_midpoint(a, b));
                    }
                }
            });
        }
        out
    }

    /// Strict and closed depth at each point, merged deterministically.
    pub fn evaluate(&self, points: &[Point]) -> Option<Evaluation> {
        points
            .iter()
            .map(|&q| Evaluation {
                depth: self.depth_at(q),
                witness: q,
                closed_depth: self.closed_depth_at(q),
            })
            .reduce(Evaluation::merge)
    }

    /// Turns the best evaluation into a full result.
    pub fn result(&self, best: Evaluation) -> PlyResult {
        PlyResult {
            ply: best.depth,
            witness: best.witness,
            covering: self.covering(best.witness),
            closed_ply: best.closed_depth,
        }
    }

    /// Exact ply number; `O(n^3)` in the worst case.
    pub fn ply_exact(&self) -> Result<PlyResult> {
        let best = self.evaluate(&self.candidates()).ok_or(Error::NoDisks)?;
        Ok(self.result(best))
    }
}

const COMPASS: [(f64, f64); 8] = [
    (1.0, 0.0),
    (
        core::f64::consts::FRAC_1_SQRT_2,
        core::f64::consts::FRAC_1_SQRT_2,
    ),
    (0.0, 1.0),
    (
        -core::f64::consts::FRAC_1_SQRT_2,
        core::f64::consts::FRAC_1_SQRT_2,
    ),
    (-1.0, 0.0),
    (
        -core::f64::consts::FRAC_1_SQRT_2,
        -core::f64::consts::FRAC_1_SQRT_2,
    ),
    (0.0, -1.0),
    (
        core::f64::consts::FRAC_1_SQRT_2,
        -core::f64::consts::FRAC_1_SQRT_2,
    ),
];

fn push_corner(out: &mut Vec<Point>, p: Point, a: &PlyDisk, b: &PlyDisk) {
    let delta = PERTURBATION * a.radius.max(b.radius);
    out.push(p);
    out.extend(
        COMPASS
            .iter()
            .map(|&(dx, dy)| p + Point::new(dx, dy) * delta),
    );
    if let (Some(na), Some(nb)) = ((a.center - p).normalized(), (b.center - p).normalized()) {
        if let Some(bisector) = (na + nb).normalized() {
            out.push(p + bisector * delta);
        }
    }
}

/// Center of the overlap of two crossing disks along their line of centers.
fn lens_midpoint(a: &PlyDisk, b: &PlyDisk) -> Point {
    let d = a.center.dist(b.center);
    let u = (b.center - a.center) * (1.0 / d);
    let lo = (d - b.radius).max(-a.radius);
    let hi = a.radius.min(d + b.radius);
    a.center + u * (0.5 * (lo + hi))
}

/// Exact ply number of a drawing.
pub fn ply_number_exact(d: &Drawing) -> Result<PlyResult> {
    DiskArrangement::from_drawing(d).ply_exact()
}

/// Result of grid sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledPly {
    pub ply: usize,
    pub witness: Point,
}

/// Maximum depth over the grid `origin + step * (i, j)` covering the disks'
/// bounding box expanded by the largest radius.
///
/// Never exceeds the exact ply number; approaches it as the step shrinks.
pub fn ply_number_sampled(d: &Drawing, grid_step: f64) -> Result<usize> {
    sample_disks(&ply_disks(d).disks, grid_step, DEFAULT_CELL_BUDGET).map(|s| s.ply)
}

/// Grid sampling over an explicit disk list with a configurable cell budget.
pub fn sample_disks(disks: &[PlyDisk], grid_step: f64, cell_budget: u64) -> Result<SampledPly> {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::param("grid_step", "must be positive and finite"));
    }
    if disks.is_empty() {
        return Err(Error::NoDisks);
    }
    let max_r = disks.iter().map(|d| d.radius).fold(0.0, f64::max);
    let bb = disks.iter().fold(Aabb::EMPTY, |acc, d| acc.union(d.bbox()));
    let origin = Point::new(bb.min.x - max_r, bb.min.y - max_r);
    let nx = libm::ceil((bb.width() + 2.0 * max_r) / grid_step);
    let ny = libm::ceil((bb.height() + 2.0 * max_r) / grid_step);
    let cells = (nx + 1.0) * (ny + 1.0);
    if cells.is_nan() || cells > cell_budget as f64 {
        return Err(Error::GridBudget {
            cells: if cells.is_finite() {
                cells as u64
            } else {
                u64::MAX
            },
            budget: cell_budget,
        });
    }
    let (nx, ny) = (nx as usize, ny as usize);
    let grid = |i: usize, j: usize| {
        Point::new(
            origin.x + i as f64 * grid_step,
            origin.y + j as f64 * grid_step,
        )
    };

    let mut best: Option<SampledPly> = None;
    let mut diff = vec![0i64; nx + 2];
    for j in 0..=ny {
        let y = grid(0, j).y;
        diff.iter_mut().for_each(|c| *c = 0);
        for disk in disks {
            let r = disk.radius * (1.0 - STRICT_TOLERANCE);
            let dy = y - disk.center.y;
            if libm::fabs(dy) >= r {
                continue;
            }
            let half = libm::sqrt(r * r - dy * dy);
            let to_index = |x: f64| (x - origin.x) / grid_step;
            let lo = libm::floor(to_index(disk.center.x - half)) - 1.0;
            let hi = libm::ceil(to_index(disk.center.x + half)) + 1.0;
            let mut lo = lo.max(0.0) as usize;
            let mut hi = (hi.min(nx as f64)) as usize;
            // The row chord is an interval; settle its ends with the same
            // predicate used everywhere else.
            while lo <= hi && !disk.contains(grid(lo, j)) {
                lo += 1;
            }
            while hi >= lo && !disk.contains(grid(hi, j)) {
                if hi == 0 {
                    break;
                }
                hi -= 1;
            }
            if lo <= hi && disk.contains(grid(lo, j)) {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut running = 0i64;
        for (i, delta) in diff.iter().take(nx + 1).enumerate() {
            running += delta;
            let depth = running as usize;
            let point = grid(i, j);
            let better = match best {
                None => true,
                Some(b) => {
                    depth > b.ply || (depth == b.ply && point.lex_cmp(&b.witness) == Ordering::Less)
                }
            };
            if better {
                best = Some(SampledPly {
                    ply: depth,
                    witness: point,
                });
            }
        }
    }
    best.ok_or(Error::NoDisks)
}

/// Total area of `disks` divided by the area of the enclosing disk.
///
/// Average depth over the enclosing disk, hence a lower bound on the ply of
/// any arrangement containing these disks. Every disk must lie inside the
/// enclosing one.
pub fn area_ratio_lower_bound(disks: &[PlyDisk], center: Point, radius: f64) -> Result<f64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::param("radius", "enclosing radius must be positive"));
    }
    if let Some(d) = disks
        .iter()
        .find(|d| d.center.dist(center) + d.radius > radius * (1.0 + 1e-12))
    {
        return Err(Error::NotContained { vertex: d.vertex });
    }
    let covered: f64 = disks.iter().map(|d| d.radius * d.radius).sum();
    Ok(covered / (radius * radius))
}
