//! Drawings with logarithmic ply at `alpha = 0.5`.
//!
//! - [`layers`]: stars whose leaves sit on concentric layers with radius
//!   ratio 3, so disks of different layers never overlap.
//! - [`path`]: collinear path drawings in which adjacent edges differ by at
//!   most a factor of two.
//! - [`assemble`]: heavy-path drawings. Each heavy path lies on a segment;
//!   the paths hanging from a path vertex are placed on separate layers
//!   around it.
//! - [`stats`]: edge-length ratio and normalized area.

pub mod assemble;
pub mod layers;
pub mod path;
pub mod stats;

pub use assemble::{assemble_heavy_path_drawing, assemble_heavy_path_drawing_with, ScalePolicy};
pub use layers::{layered_star_layout, layered_tree_layout, LayerSchedule};
pub use path::{draw_path, draw_path_weighted, PathLayout};
pub use stats::{area_stats, AreaStats};

/// The ply ratio these layouts are built for.
pub const LOG_PLY_ALPHA: f64 = 0.5;
