//! Planar points, axis-aligned boxes and circle–circle intersection.

use core::ops::{Add, Mul, Sub};

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at `angle` radians, counterclockwise from the +x axis.
    pub fn polar(angle: f64) -> Self {
        Point::new(libm::cos(angle), libm::sin(angle))
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.x * self.x + self.y * self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rotation by +90 degrees. Exact in floating point.
    pub fn perp(self) -> Self {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    /// Lexicographic comparison, x first; total over all floats.
    pub fn lex_cmp(&self, other: &Point) -> core::cmp::Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

/// Closed axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub min: Point,
    pub max: Point,
}

impl Aabb {
    pub const EMPTY: Aabb = Aabb {
        min: Point::new(f64::INFINITY, f64::INFINITY),
        max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    };

    pub fn around(center: Point, radius: f64) -> Self {
        Aabb {
            min: Point::new(center.x - radius, center.y - radius),
            max: Point::new(center.x + radius, center.y + radius),
        }
    }

    pub fn union(self, other: Aabb) -> Aabb {
        Aabb {
            min: Point::new(self.min.x.min(other.min.x), self.min.y.min(other.min.y)),
            max: Point::new(self.max.x.max(other.max.x), self.max.y.max(other.max.y)),
        }
    }

    pub fn include(self, p: Point) -> Aabb {
        self.union(Aabb { min: p, max: p })
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn overlaps(&self, other: &Aabb) -> bool {
        self.min.x <= other.max.x
            && other.min.x <= self.max.x
            && self.min.y <= other.max.y
            && other.min.y <= self.max.y
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn is_empty(&self) -> bool {
        self.min.x > self.max.x || self.min.y > self.max.y
    }
}

/// Boundary intersection of two circles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleIntersection {
    /// The circles are separate, or one lies strictly inside the other.
    None,
    /// Same center and radius.
    Coincident,
    /// Touching circles; the single common point.
    Tangent(Point),
    Two(Point, Point),
}

/// Intersects the circles `(c1, r1)` and `(c2, r2)`.
///
/// Pairs whose boundaries miss by less than a rounding error are reported
/// as tangent.
pub fn circle_intersection(c1: Point, r1: f64, c2: Point, r2: f64) -> CircleIntersection {
    let delta = c2 - c1;
    let d = delta.norm();
    if d == 0.0 {
        return if r1 == r2 {
            CircleIntersection::Coincident
        } else {
            CircleIntersection::None
        };
    }
    let slack = 4.0 * f64::EPSILON * (r1 + r2 + d);
    if d > r1 + r2 + slack || d < libm::fabs(r1 - r2) - slack {
        return CircleIntersection::None;
    }
    let u = delta * (1.0 / d);
    // Distance from c1 to the radical line, measured along u.
    let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    let h2 = r1 * r1 - a * a;
    let foot = c1 + u * a;
    if h2 <= 0.0 {
        return CircleIntersection::Tangent(foot);
    }
    let h = libm::sqrt(h2);
    if h <= slack {
        return CircleIntersection::Tangent(foot);
    }
    let offset = u.perp() * h;
    CircleIntersection::Two(foot + offset, foot - offset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Point, b: Point) -> bool {
        a.dist(b) < 1e-12
    }

    #[test]
    fn unit_circles_at_distance_one() {
        let hits = circle_intersection(Point::ORIGIN, 1.0, Point::new(1.0, 0.0), 1.0);
        let h = libm::sqrt(3.0) / 2.0;
        match hits {
            CircleIntersection::Two(p, q) => {
                assert!(close(p, Point::new(0.5, h)));
                assert!(close(q, Point::new(0.5, -h)));
            }
            other => panic!("expected two points, got {other:?}"),
        }
    }

    #[test]
    fn external_and_internal_tangency() {
        assert_eq!(
            circle_intersection(Point::ORIGIN, 0.5, Point::new(1.0, 0.0), 0.5),
            CircleIntersection::Tangent(Point::new(0.5, 0.0))
        );
        match circle_intersection(Point::ORIGIN, 2.0, Point::new(1.0, 0.0), 1.0) {
            CircleIntersection::Tangent(p) => assert!(close(p, Point::new(2.0, 0.0))),
            other => panic!("expected tangency, got {other:?}"),
        }
    }

    #[test]
    fn separate_nested_and_coincident() {
        let far = circle_intersection(Point::ORIGIN, 1.0, Point::new(3.0, 0.0), 1.0);
        assert_eq!(far, CircleIntersection::None);
        let nested = circle_intersection(Point::ORIGIN, 3.0, Point::new(0.5, 0.0), 1.0);
        assert_eq!(nested, CircleIntersection::None);
        let same = circle_intersection(Point::new(2.0, 2.0), 1.0, Point::new(2.0, 2.0), 1.0);
        assert_eq!(same, CircleIntersection::Coincident);
    }

    #[test]
    fn aabb_overlap_and_containment() {
        let a = Aabb::around(Point::ORIGIN, 1.0);
        let b = Aabb::around(Point::new(2.0, 0.0), 1.0);
        assert!(a.overlaps(&b));
        assert!(!a.overlaps(&Aabb::around(Point::new(2.5, 0.0), 1.0)));
        assert!(a.contains(Point::new(1.0, -1.0)));
        assert!(Aabb::EMPTY.is_empty());
        assert_eq!(Aabb::EMPTY.include(Point::new(3.0, 4.0)).width(), 0.0);
    }
}
