//! Ply lower bounds for drawings of [`LowerBoundInstance`]s.
//!
//! Apex cover: disks of distinct vertices that contain the apex give ply at
//! least their number. Annulus: when no disk of a tree covers the apex, its
//! vertices crowd into rings around the apex; the total area of disks in
//! one ring divided by the area of an enclosing disk is their average
//! depth there, hence at most the ply.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::drawing::Drawing;
use crate::lowerbound::instance::LowerBoundInstance;
use crate::ply::{area_ratio_lower_bound, ply_disks, PlyDisk};
use crate::{Error, Result};

/// Whether `dist(v, w1) > (1 + 1/alpha) dist(v, w2)` for a triangle
/// `v, w1, w2`. If so, the edge `w1 w2` is longer than `dist(v, w2) / alpha`,
/// so the disk of `w2` contains `v`.
pub fn triangle_cover_check(d: &Drawing, v: usize, w1: usize, w2: usize) -> Result<bool> {
    for (a, b) in [(v, w1), (v, w2), (w1, w2)] {
        if a >= d.vertex_count() || b >= d.vertex_count() || !d.has_edge(a, b) {
            return Err(Error::param(
                "triangle",
                format!("edge ({a}, {b}) is not in the drawing"),
            ));
        }
    }
    let c = 1.0 + 1.0 / d.alpha();
    let (p, q1, q2) = (d.position(v), d.position(w1), d.position(w2));
    Ok(p.dist(q1) > c * p.dist(q2))
}

/// Ring statistics of one tree that does not cover the apex.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnulusAnalysis {
    pub tree: usize,
    /// Distance from the apex to the tree's root; all radii are in this unit.
    pub unit: f64,
    /// Ring ratio `1 + 1/alpha`.
    pub c: f64,
    /// `counts[l + h]` vertices lie at normalized distance `[c^l, c^(l+1))`,
    /// for `-h <= l < h`.
    pub counts: Vec<usize>,
    /// Most populated ring, smallest index on ties.
    pub best_index: i64,
    /// Radius of the enclosing disk around the apex, `(alpha + 1) c^(l+1)`
    /// in drawing units.
    pub enclosing_radius: f64,
    /// Vertices of the best ring whose disks fit in the enclosing disk.
    pub contained: Vec<usize>,
    /// Vertices at level `j` outside `[c^-j, c^j]`.
    pub induction_violations: Vec<usize>,
    pub bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateCase {
    ApexCover,
    Annulus { tree: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub bound: f64,
    pub case: CertificateCase,
    /// Trees with a vertex whose disk contains the apex.
    pub covered_trees: Vec<usize>,
    pub annuli: Vec<AnnulusAnalysis>,
}

/// Lower bound on the ply of `d`, which must draw `inst` (extra edges are
/// allowed).
///
/// The apex-cover bound is the number of covered trees; it equals `m` when
/// every tree covers the apex. Each uncovered tree adds an annulus bound.
/// The larger of all bounds is returned.
pub fn certify_lower_bound(d: &Drawing, inst: &LowerBoundInstance) -> Result<Certificate> {
    check_matches(d, inst)?;
    let mut disk_of: Vec<Option<PlyDisk>> = vec![None; d.vertex_count()];
    for disk in ply_disks(d).disks {
        disk_of[disk.vertex] = Some(disk);
    }
    let apex = d.position(inst.apex);
    let covered_trees: Vec<usize> = (0..inst.m)
        .filter(|&i| {
            inst.tree_vertices(i)
                .any(|w| disk_of[w].is_some_and(|disk| disk.contains(apex)))
        })
        .collect();

    let mut best = (covered_trees.len() as f64, CertificateCase::ApexCover);
    let mut annuli = Vec::new();
    for i in (0..inst.m).filter(|i| !covered_trees.contains(i)) {
        let a = analyze_tree(d, inst, &disk_of, i)?;
        if a.bound > best.0 {
            best = (a.bound, CertificateCase::Annulus { tree: i });
        }
        annuli.push(a);
    }
    Ok(Certificate {
        bound: best.0,
        case: best.1,
        covered_trees,
        annuli,
    })
}

fn check_matches(d: &Drawing, inst: &LowerBoundInstance) -> Result<()> {
    if d.vertex_count() != inst.vertex_count() {
        return Err(Error::InstanceMismatch(format!(
            "drawing has {} vertices, instance has {}",
            d.vertex_count(),
            inst.vertex_count()
        )));
    }
    let drawn: BTreeSet<(usize, usize)> = d
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    if let Some((u, v)) = inst
        .edges()
        .into_iter()
        .find(|&(u, v)| !drawn.contains(&(u.min(v), u.max(v))))
    {
        return Err(Error::InstanceMismatch(format!(
            "edge ({u}, {v}) is not drawn"
        )));
    }
    Ok(())
}

fn analyze_tree(
    d: &Drawing,
    inst: &LowerBoundInstance,
    disk_of: &[Option<PlyDisk>],
    tree: usize,
) -> Result<AnnulusAnalysis> {
    let alpha = d.alpha();
    let c = 1.0 + 1.0 / alpha;
    let h = inst.h as i64;
    let apex = d.position(inst.apex);
    let unit = apex.dist(d.position(inst.tree_root(tree)));
    let mut counts = vec![0usize; 2 * inst.h];
    let mut ring = Vec::with_capacity(inst.tree_size());
    let mut induction_violations = Vec::new();
    for w in inst.tree_vertices(tree) {
        let rho = apex.dist(d.position(w)) / unit;
        let l = libm::floor(libm::log(rho) / libm::log(c));
        let l = if l.is_finite() { Some(l as i64) } else { None };
        let l = l.filter(|l| (-h..h).contains(l));
        if let Some(l) = l {
            counts[(l + h) as usize] += 1;
        }
        ring.push(l);
        let j = inst.level(w) as i32;
        let (lo, hi) = (libm::pow(c, -j as f64), libm::pow(c, j as f64));
        if !(rho >= lo * (1.0 - 1e-12) && rho <= hi * (1.0 + 1e-12)) {
            induction_violations.push(w);
        }
    }
    let best = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map_or(0, |(k, _)| k);
    let best_index = best as i64 - h;
    let enclosing_radius = (alpha + 1.0) * libm::pow(c, (best_index + 1) as f64) * unit;
    let first = inst.tree_root(tree);
    let contained: Vec<usize> = inst
        .tree_vertices(tree)
        .filter(|&w| ring[w - first] == Some(best_index))
        .filter(|&w| {
            disk_of[w].is_some_and(|disk| disk.center.dist(apex) + disk.radius <= enclosing_radius)
        })
        .collect();
    let disks: Vec<PlyDisk> = contained.iter().filter_map(|&w| disk_of[w]).collect();
    let bound = area_ratio_lower_bound(&disks, apex, enclosing_radius)?;
    Ok(AnnulusAnalysis {
        tree,
        unit,
        c,
        counts,
        best_index,
        enclosing_radius,
        contained,
        induction_violations,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::lowerbound::instance::build_instance_with;
    use crate::lowerbound::layouts::radial_instance_layout;
    use crate::ply::ply_number_exact;

    fn triangle(w1: f64, w2: f64) -> Drawing {
        let pts = vec![Point::ORIGIN, Point::new(w1, 0.0), Point::new(0.0, w2)];
        Drawing::new(0.5, pts, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_cover_examples() {
        let d = triangle(3.1, 1.0);
        assert!(triangle_cover_check(&d, 0, 1, 2).unwrap());
        let disk = ply_disks(&d).disks[2];
        assert!(disk.radius >= 1.05);
        assert!(disk.contains(Point::ORIGIN));
        assert!(!triangle_cover_check(&triangle(1.0, 1.0), 0, 1, 2).unwrap());
        assert!(!triangle_cover_check(&triangle(3.0, 1.0), 0, 1, 2).unwrap());
        let missing = Drawing::new(
            0.5,
            vec![Point::ORIGIN, Point::new(1.0, 0.0), Point::new(0.0, 1.0)],
            vec![(0, 1)],
        )
        .unwrap();
        assert!(triangle_cover_check(&missing, 0, 1, 2).is_err());
    }

    #[test]
    fn every_tree_covering_gives_m() {
        // Trees far from the apex are attached by long edges, so the tree
        // roots' disks reach back over the apex.
        let inst = build_instance_with(1, 3).unwrap();
        let mut pts = vec![Point::ORIGIN; inst.vertex_count()];
        for i in 0..3 {
            let base = Point::new(0.0, 0.0);
            let r = inst.tree_root(i);
            pts[r] = base + Point::new(0.1 * (i as f64 + 1.0), 0.05);
            pts[r + 1] = Point::new(10.0 + i as f64, 0.0);
            pts[r + 2] = Point::new(-10.0 - i as f64, 1.0);
        }
        let d = Drawing::new(0.5, pts, inst.edges()).unwrap();
        let cert = certify_lower_bound(&d, &inst).unwrap();
        assert_eq!(cert.case, CertificateCase::ApexCover);
        assert_eq!(cert.bound, 3.0);
        assert!(cert.bound <= ply_number_exact(&d).unwrap().ply as f64);
    }

    #[test]
    fn annulus_bound_matches_direct_ratio() {
        let inst = build_instance_with(3, 2).unwrap();
        let d = radial_instance_layout(&inst, 0.4).unwrap();
        let cert = certify_lower_bound(&d, &inst).unwrap();
        assert!(cert.covered_trees.is_empty());
        assert_eq!(cert.annuli.len(), 2);
        let a = &cert.annuli[0];
        let disks = ply_disks(&d).disks;
        let sum: f64 = a
            .contained
            .iter()
            .map(|&w| disks[w].radius * disks[w].radius)
            .sum();
        assert!((a.bound - sum / (a.enclosing_radius * a.enclosing_radius)).abs() < 1e-12);
        assert!(a.bound > 0.0);
        assert!(cert.bound <= ply_number_exact(&d).unwrap().ply as f64);
    }

    #[test]
    fn mismatched_drawing_rejected() {
        let inst = build_instance_with(1, 1).unwrap();
        let d = triangle(1.0, 2.0);
        assert!(matches!(
            certify_lower_bound(&d, &inst),
            Err(Error::InstanceMismatch(_))
        ));
    }
}
