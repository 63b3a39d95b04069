//! Piecewise-linear computational topology for compact manifolds with boundary.
//!
//! The crate builds triangulated manifolds (disks, solid tori, solid Klein
//! bottles and their boundary connected sums), equips them with PL maps to
//! `R` or `R^2` given by rational vertex values, classifies the boundary
//! fold structure of those maps, computes Reeb graphs and cover-nerve Reeb
//! spaces, and compares source and quotient through exact integer homology
//! and edge-path fundamental-group presentations.
//!
//! All geometry is exact: image coordinates are arbitrary-precision
//! rationals, predicates are sign computations, and homology runs over the
//! integers via Smith normal form.

pub mod algebra;
pub mod complex;
pub mod json;
pub mod num;
pub mod plmaps;
pub mod reeb;
pub mod verify;

pub use complex::{BoundaryData, ManifoldReport, SimplicialComplex};
pub use plmaps::{PLMap, VertexClassification};
pub use reeb::{Decomposition, ReebGraph, ReebNerve};
pub use verify::VerificationReport;
