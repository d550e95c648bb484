//! Graphs that force large ply, and ply lower bounds for given drawings.
//!
//! An instance is an apex joined to every vertex of `m` complete binary
//! trees of height `h`; it is a subgraph of a 2-tree. [`certify`] turns any
//! drawing of an instance into a number that provably does not exceed the
//! drawing's ply.

pub mod certify;
pub mod instance;
pub mod layouts;

pub use certify::{
    certify_lower_bound, triangle_cover_check, AnnulusAnalysis, Certificate, CertificateCase,
};
pub use instance::{build_instance, build_instance_with, LowerBoundInstance};
pub use layouts::{radial_instance_layout, random_instance_layout};
