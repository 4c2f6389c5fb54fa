//! Isolating sets and dominating sets of maximal outerplanar graphs (mops).
//!
//! A [`Mop`] is stored as a triangulated polygon: vertices `0..n` in boundary
//! order plus `n - 3` non-crossing diagonals. On top of that model the crate
//! provides constructive algorithms for `K_{1,k+1}`-isolating sets with
//! certified size bounds, exact exponential-time oracles, generators for the
//! extremal families, and a relaxed-guard placement tool for simple polygons.

pub mod coloring;
pub mod error;
pub mod families;
pub mod gallery;
pub mod io;
pub mod isolation;
pub mod mop;
pub mod oracle;
pub mod report;
pub mod rng;

pub use coloring::three_coloring;
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilySpec};
pub use gallery::{GuardCertificate, SimplePolygon};
pub use isolation::{BoundKind, BoundedSolution, TraceStep};
pub use mop::{Apex, DiagonalSplit, Isolation, Merge, Mop, SplittingChord, VertexMap, VertexSet};
pub use oracle::{ExactResult, Oracle};
pub use report::RunReport;
