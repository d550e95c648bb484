//! Low-ply straight-line drawings of trees.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only the
//! algorithmic core:
//!
//! - [`tree`], [`decompose`], [`two_tree`]: rooted trees, generators, heavy
//!   path decomposition and 2-tree construction witnesses.
//! - [`drawing`], [`ply`]: straight-line drawings, their ply disks, and exact
//!   and grid-sampled ply-number computation.
//! - [`oneply`]: the fractal wedge layout giving 1-ply drawings of trees with
//!   bounded degree.
//! - [`logply`]: layered and heavy-path layouts with logarithmic ply at
//!   `alpha = 0.5`.
//! - [`lowerbound`]: 2-tree instances that force large ply, and per-drawing
//!   lower-bound certificates.
//!
//! File formats, the CLI and SVG output live in the `plyforge` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decompose;
pub mod drawing;
mod error;
pub mod geometry;
pub mod logply;
pub mod lowerbound;
pub mod oneply;
pub mod ply;
pub mod tree;
pub mod two_tree;

pub use decompose::HeavyPathDecomposition;
pub use drawing::Drawing;
pub use error::{Error, Result};
pub use geometry::Point;
pub use ply::{PlyDisk, PlyResult};
pub use tree::{RootedTree, TreeFamily};
pub use two_tree::TwoTree;
