//! Drawings of lower-bound instances, used to exercise the certificates.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::Drawing;
use crate::geometry::Point;
use crate::lowerbound::instance::LowerBoundInstance;
use crate::Result;

/// Each tree drawn as a small cluster on the unit circle around the apex.
///
/// For `alpha < 1` no tree disk reaches the apex, so certificates fall back
/// on the annulus bound.
pub fn radial_instance_layout(inst: &LowerBoundInstance, alpha: f64) -> Result<Drawing> {
    let mut pts = vec![Point::ORIGIN; inst.vertex_count()];
    let spread = 0.1 * libm::sin(PI / (inst.m as f64 + 1.0));
    for i in 0..inst.m {
        let center = Point::polar(2.0 * PI * i as f64 / inst.m as f64);
        let outward = center;
        let across = center.perp();
        let root = inst.tree_root(i);
        for w in inst.tree_vertices(i) {
            let local = w - root;
            let level = inst.level(w);
            let first = (1usize << level) - 1;
            let slot = (local - first) as f64 + 0.5;
            let t = slot / (1usize << level) as f64 - 0.5;
            let depth = level as f64 / inst.h as f64;
            pts[w] = center + across * (spread * t) + outward * (spread * depth);
        }
    }
    Drawing::new(alpha, pts, inst.edges())
}

/// Every vertex uniformly at random in the unit square.
pub fn random_instance_layout(inst: &LowerBoundInstance, alpha: f64, seed: u64) -> Result<Drawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Point> = (0..inst.vertex_count())
        .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();
    Drawing::new(alpha, pts, inst.edges())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lowerbound::instance::build_instance;

    #[test]
    fn layouts_draw_every_instance_edge() {
        let inst = build_instance(64).unwrap();
        for d in [
            radial_instance_layout(&inst, 0.3).unwrap(),
            random_instance_layout(&inst, 0.5, 7).unwrap(),
        ] {
            assert_eq!(d.vertex_count(), inst.vertex_count());
            assert_eq!(d.edges().len(), inst.edges().len());
        }
    }
}
