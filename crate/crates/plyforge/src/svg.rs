//! SVG output.
//!
//! Drawing coordinates have y pointing up; SVG's point down, so y is negated.
//! Ply disks are the only `<circle>` elements; vertices are small squares and
//! overlap regions are polygons.

use std::f64::consts::PI;
use std::fmt::Write;

use plyforge_core::geometry::{circle_intersection, Aabb, CircleIntersection, Point};
use plyforge_core::ply::{ply_disks, PlyDisk};
use plyforge_core::Drawing;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub show_ply_disks: bool,
    pub show_edges: bool,
    /// Shade pairwise disk overlaps, i.e. regions of depth at least 2.
    pub highlight_overlaps: bool,
    /// Stroke width in output pixels.
    pub stroke_width: f64,
    /// Width of the longer side in output pixels.
    pub canvas_size: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_ply_disks: true,
            show_edges: true,
            highlight_overlaps: false,
            stroke_width: 1.0,
            canvas_size: 800.0,
        }
    }
}

const MARGIN: f64 = 0.05;
const ARC_STEPS: usize = 24;

pub fn render_svg(d: &Drawing, opts: &RenderOptions) -> String {
    let disks = ply_disks(d).disks;
    let mut bb = disks.iter().fold(Aabb::EMPTY, |acc, k| {
        acc.union(Aabb::around(k.center, k.radius))
    });
    bb = d.positions().iter().fold(bb, |acc, &p| acc.include(p));
    let (w, h) = if bb.is_empty() {
        (1.0, 1.0)
    } else {
        (bb.width(), bb.height())
    };
    let side = w.max(h).max(f64::MIN_POSITIVE);
    let (w, h) = (w.max(side * 1e-3), h.max(side * 1e-3));
    let (mx, my) = (w * MARGIN, h * MARGIN);
    let (x0, y0) = if bb.is_empty() {
        (-0.5, -0.5)
    } else {
        (bb.min.x, bb.min.y)
    };
    let view = (x0 - mx, -(y0 + h) - my, w + 2.0 * mx, h + 2.0 * my);
    let canvas = opts.canvas_size.max(1.0);
    let (px_w, px_h) = if view.2 >= view.3 {
        (canvas, canvas * view.3 / view.2)
    } else {
        (canvas * view.2 / view.3, canvas)
    };
    let per_px = view.2 / px_w;
    let stroke = opts.stroke_width * per_px;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{px_w:.2}" height="{px_h:.2}" viewBox="{} {} {} {}">"#,
        view.0, view.1, view.2, view.3
    );
    if opts.show_ply_disks {
        let _ = writeln!(
            out,
            r#"<g class="ply-disks" fill="steelblue" fill-opacity="0.15" stroke="steelblue" stroke-width="{stroke}">"#
        );
        for k in &disks {
            let _ = writeln!(
                out,
                r#"<circle class="ply-disk" cx="{}" cy="{}" r="{}"/>"#,
                k.center.x, -k.center.y, k.radius
            );
        }
        out.push_str("</g>\n");
    }
    if opts.highlight_overlaps {
        let _ = writeln!(
            out,
            r#"<g class="overlaps" fill="crimson" fill-opacity="0.35" stroke="none">"#
        );
        for (a, b) in overlapping_pairs(&disks) {
            if let Some(poly) = overlap_outline(&disks[a], &disks[b]) {
                out.push_str(r#"<path class="overlap" d=""#);
                for (i, p) in poly.iter().enumerate() {
                    let _ = write!(out, "{}{} {} ", if i == 0 { "M" } else { "L" }, p.x, -p.y);
                }
                out.push_str("Z\"/>\n");
            }
        }
        out.push_str("</g>\n");
    }
    if opts.show_edges {
        let _ = writeln!(
            out,
            r#"<g class="edges" stroke="black" stroke-width="{stroke}">"#
        );
        for &(u, v) in d.edges() {
            let (p, q) = (d.position(u), d.position(v));
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                p.x, -p.y, q.x, -q.y
            );
        }
        out.push_str("</g>\n");
    }
    let dot = 3.0 * stroke;
    let _ = writeln!(out, r#"<g class="vertices" fill="black">"#);
    for p in d.positions() {
        let _ = writeln!(
            out,
            r#"<rect class="vertex" x="{}" y="{}" width="{dot}" height="{dot}"/>"#,
            p.x - dot / 2.0,
            -p.y - dot / 2.0
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Index pairs of disks whose interiors meet, found by a sweep along x.
fn overlapping_pairs(disks: &[PlyDisk]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..disks.len()).collect();
    order.sort_by(|&a, &b| {
        let (ka, kb) = (&disks[a], &disks[b]);
        (ka.center.x - ka.radius).total_cmp(&(kb.center.x - kb.radius))
    });
    let mut pairs = Vec::new();
    for (i, &a) in order.iter().enumerate() {
        let ka = &disks[a];
        for &b in &order[i + 1..] {
            let kb = &disks[b];
            if kb.center.x - kb.radius >= ka.center.x + ka.radius {
                break;
            }
            if ka.center.dist(kb.center)
                < (ka.radius + kb.radius) * (1.0 - plyforge_core::ply::STRICT_TOLERANCE)
            {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Boundary of the intersection of two overlapping disks as a polygon.
fn overlap_outline(a: &PlyDisk, b: &PlyDisk) -> Option<Vec<Point>> {
    match circle_intersection(a.center, a.radius, b.center, b.radius) {
        CircleIntersection::Two(p, q) => {
            let mut poly = arc_toward(a, p, q, b.center);
            poly.extend(arc_toward(b, q, p, a.center));
            Some(poly)
        }
        CircleIntersection::Coincident => Some(circle_polygon(a)),
        CircleIntersection::None => {
            let small = if a.radius <= b.radius { a } else { b };
            Some(circle_polygon(small))
        }
        CircleIntersection::Tangent(_) => None,
    }
}

/// Arc of `k` from `from` to `to` passing through the side facing `toward`.
fn arc_toward(k: &PlyDisk, from: Point, to: Point, toward: Point) -> Vec<Point> {
    let angle = |p: Point| (p.y - k.center.y).atan2(p.x - k.center.x);
    let (start, end, mid) = (angle(from), angle(to), angle(toward));
    let ccw = |x: f64| (x - start).rem_euclid(2.0 * PI);
    let span = ccw(end);
    let sweep = if ccw(mid) < span {
        span
    } else {
        span - 2.0 * PI
    };
    (0..ARC_STEPS)
        .map(|i| k.center + Point::polar(start + sweep * i as f64 / ARC_STEPS as f64) * k.radius)
        .collect()
}

fn circle_polygon(k: &PlyDisk) -> Vec<Point> {
    (0..2 * ARC_STEPS)
        .map(|i| k.center + Point::polar(PI * i as f64 / ARC_STEPS as f64) * k.radius)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn element_counts() {
        let pts = vec![Point::ORIGIN, Point::new(1.0, 0.0), Point::new(5.0, 5.0)];
        let d = Drawing::new(0.5, pts, vec![(0, 1)]).unwrap();
        let svg = render_svg(&d, &RenderOptions::default());
        assert_eq!(count(&svg, "<circle"), 2);
        assert_eq!(count(&svg, "<line"), 1);
        assert_eq!(count(&svg, r#"class="vertex""#), 3);
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn vertices_only() {
        let d = Drawing::new(0.5, vec![Point::new(2.0, 3.0)], vec![]).unwrap();
        let svg = render_svg(&d, &RenderOptions::default());
        assert_eq!(count(&svg, "<circle"), 0);
        assert_eq!(count(&svg, r#"class="vertex""#), 1);
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }

    #[test]
    fn overlaps_drawn_as_paths() {
        let pts = vec![Point::ORIGIN, Point::new(1.0, 0.0), Point::new(0.5, 0.3)];
        let d = Drawing::new(0.5, pts, vec![(0, 1), (0, 2)]).unwrap();
        let opts = RenderOptions {
            highlight_overlaps: true,
            ..RenderOptions::default()
        };
        let svg = render_svg(&d, &opts);
        assert!(count(&svg, r#"class="overlap""#) >= 2);
        assert_eq!(count(&svg, "<circle"), 3);
    }

    #[test]
    fn lens_arc_stays_inside_other_disk() {
        let a = PlyDisk::new(0, Point::ORIGIN, 1.0);
        let b = PlyDisk::new(1, Point::new(1.5, 0.0), 1.0);
        for p in overlap_outline(&a, &b).unwrap() {
            assert!(p.dist(a.center) <= 1.0 + 1e-9 && p.dist(b.center) <= 1.0 + 1e-9);
        }
    }
}
