//! Size measures of a drawing.

use crate::drawing::Drawing;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaStats {
    /// Longest edge over shortest edge.
    pub edge_ratio: f64,
    /// Bounding-box area of the vertices with the shortest edge scaled to 1.
    pub area: f64,
}

/// `None` for drawings without edges.
pub fn area_stats(d: &Drawing) -> Option<AreaStats> {
    let (min, max) = d
        .edges()
        .iter()
        .map(|&e| d.edge_length(e))
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), l| {
            (lo.min(l), hi.max(l))
        });
    if d.edges().is_empty() {
        return None;
    }
    let bb = d.bounding_box();
    Some(AreaStats {
        edge_ratio: max / min,
        area: bb.width() * bb.height() / (min * min),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use alloc::vec;

    #[test]
    fn single_edge() {
        let d = Drawing::new(0.5, vec![Point::ORIGIN, Point::new(3.0, 0.0)], vec![(0, 1)]).unwrap();
        let s = area_stats(&d).unwrap();
        assert_eq!(s.edge_ratio, 1.0);
        assert_eq!(s.area, 0.0);
    }

    #[test]
    fn no_edges() {
        let d = Drawing::new(0.5, vec![Point::ORIGIN], vec![]).unwrap();
        assert!(area_stats(&d).is_none());
    }
}
