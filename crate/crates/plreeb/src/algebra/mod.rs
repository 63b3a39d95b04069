//! Exact integer linear algebra for simplicial (co)homology and edge-path
//! fundamental-group presentations.

mod group;
mod homology;
mod matrix;

pub use group::{pi1_presentation_from_skeleton, tietze_simplify, Abelianization, GroupPresentation};
pub use homology::{homology_of, homology_of_complex, BettiProfile, ChainData, Ring, Variant};
pub use matrix::{rank_mod2, smith_normal_form, IntegerMatrix};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("complex is disconnected")]
    Disconnected,
    #[error("base vertex {0} is not a vertex of the complex")]
    BadBaseVertex(usize),
}
