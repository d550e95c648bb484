//! File formats, SVG rendering, parallel ply evaluation and the command-line
//! interface on top of [`plyforge_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod svg;

pub use plyforge_core as core;
