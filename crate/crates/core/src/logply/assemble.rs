//! Heavy-path drawings with ply at most `3 (H + 1)`, `H` being the height of
//! the heavy path decomposition.
//!
//! Paths are drawn bottom-up. A path lies on a segment with its first vertex
//! at the origin. The paths anchored at a path vertex `v_i` go on layers
//! around it, one path per layer, pointing away from `v_i` perpendicular to
//! the segment and alternating sides. Layer `j` is the annulus
//! `[x_j / 2, 3 x_j / 2]` around `v_i`, and the anchored path's first vertex
//! sits at distance `x_j`. Everything hanging from `v_i` stays inside its
//! drawing disk, whose radius sets the edge lengths along the segment.

use alloc::vec;
use alloc::vec::Vec;

use crate::decompose::HeavyPathDecomposition;
use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::logply::layers::LayerSchedule;
use crate::logply::path::{draw_path, draw_path_weighted};
use crate::logply::LOG_PLY_ALPHA;
use crate::tree::RootedTree;
use crate::{Error, Result};

/// Largest scale factor [`ScalePolicy::Uniform`] accepts.
pub const MAX_SCALE: f64 = 1e300;

/// Largest ratio between edge lengths [`ScalePolicy::Uniform`] accepts.
/// Beyond it, short edges lose most of their significant bits.
pub const PRECISION_BUDGET: f64 = 1e12;

/// How the drawing of a path is scaled relative to the paths hanging off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScalePolicy {
    /// Each layer is as small as the measured extent of its path allows.
    #[default]
    Fitted,
    /// Every path at decomposition level `h` is scaled by `3^(delta (H - h))`
    /// and drawing disks have radius equal to the anchored subtree size.
    /// Coordinates grow exponentially in `delta H`; fails with
    /// [`Error::PrecisionLoss`] once double precision cannot hold them.
    Uniform,
}

/// Heavy-path drawing with [`ScalePolicy::Fitted`].
pub fn assemble_heavy_path_drawing(tree: &RootedTree) -> Result<Drawing> {
    assemble_heavy_path_drawing_with(tree, ScalePolicy::Fitted)
}

pub fn assemble_heavy_path_drawing_with(tree: &RootedTree, policy: ScalePolicy) -> Result<Drawing> {
    let hpd = HeavyPathDecomposition::new(tree);
    let delta = tree.max_degree().max(1) as f64;
    let height = hpd.total_height();
    if policy == ScalePolicy::Uniform {
        let top = libm::pow(3.0, delta * height as f64);
        if top.is_nan() || top > MAX_SCALE {
            return Err(Error::ScaleOverflow(top));
        }
        let range = top * 6.0 * tree.len() as f64;
        if range > PRECISION_BUDGET {
            return Err(Error::PrecisionLoss {
                range,
                budget: PRECISION_BUDGET,
            });
        }
    }
    let scale = |level: usize| libm::pow(3.0, delta * height.saturating_sub(level) as f64);

    let mut asm = Assembler {
        tree,
        pos: vec![Point::ORIGIN; tree.len()],
        members: vec![Vec::new(); hpd.paths().len()],
        reach: vec![0.0; hpd.paths().len()],
    };
    for p in hpd.bottom_up_order() {
        let path = hpd.path(p);
        let schedules: Vec<LayerSchedule> = path
            .iter()
            .map(|&v| {
                let anchored = hpd.anchored_paths(v);
                match policy {
                    ScalePolicy::Fitted => LayerSchedule::fitted(
                        &anchored.iter().map(|&q| asm.reach[q]).collect::<Vec<_>>(),
                    ),
                    ScalePolicy::Uniform => {
                        let s = LayerSchedule::uniform(hpd.anchored_size(v), anchored.len());
                        let child = scale(hpd.level(p) + 1);
                        LayerSchedule::from_offsets(s.offsets().iter().map(|x| x * child).collect())
                    }
                }
            })
            .collect();
        let lengths = match policy {
            ScalePolicy::Fitted => {
                let radii: Vec<f64> = schedules.iter().map(LayerSchedule::outer_radius).collect();
                draw_path_weighted(&radii)?.lengths
            }
            ScalePolicy::Uniform => {
                let sizes: Vec<usize> = path.iter().map(|&v| hpd.anchored_size(v)).collect();
                let s = scale(hpd.level(p));
                draw_path(&sizes)?
                    .lengths
                    .into_iter()
                    .map(|l| l * s)
                    .collect()
            }
        };
        asm.place_path(&hpd, p, &lengths, &schedules);
    }
    Drawing::new(LOG_PLY_ALPHA, asm.pos, tree.edges())
}

struct Assembler<'a> {
    tree: &'a RootedTree,
    pos: Vec<Point>,
    /// Vertices of each finished path body.
    members: Vec<Vec<usize>>,
    /// Largest extent of a ply disk from the body's first vertex.
    reach: Vec<f64>,
}

impl Assembler<'_> {
    fn place_path(
        &mut self,
        hpd: &HeavyPathDecomposition,
        p: usize,
        lengths: &[f64],
        schedules: &[LayerSchedule],
    ) {
        let path = hpd.path(p);
        let mut body = Vec::new();
        let mut x = 0.0;
        for (i, &v) in path.iter().enumerate() {
            if i > 0 {
                x += lengths[i];
            }
            let at = Point::new(x, 0.0);
            self.pos[v] = at;
            body.push(v);
            for (j, (&q, &offset)) in hpd
                .anchored_paths(v)
                .iter()
                .zip(schedules[i].offsets())
                .enumerate()
            {
                let up = j % 2 == 0;
                let shift = at + Point::new(0.0, if up { offset } else { -offset });
                let moved = core::mem::take(&mut self.members[q]);
                for &w in &moved {
                    let Point { x: a, y: b } = self.pos[w];
                    let turned = if up {
                        Point::new(-b, a)
                    } else {
                        Point::new(b, -a)
                    };
                    self.pos[w] = shift + turned;
                }
                body.extend(moved);
            }
        }
        let first = path[0];
        let origin = self.pos[first];
        let mut reach = 0.0f64;
        for &w in &body {
            let mut longest = 0.0f64;
            for &c in self.tree.children(w) {
                longest = longest.max(self.pos[w].dist(self.pos[c]));
            }
            if w != first {
                if let Some(parent) = self.tree.parent(w) {
                    longest = longest.max(self.pos[w].dist(self.pos[parent]));
                }
            }
            reach = reach.max(self.pos[w].dist(origin) + LOG_PLY_ALPHA * longest);
        }
        self.reach[p] = reach;
        self.members[p] = body;
    }
}
