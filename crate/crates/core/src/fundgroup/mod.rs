//! Finitely presented groups as values: constructors for free groups,
//! non-orientable surface groups and free products, abelianization via
//! Smith normal form, and the assembled fundamental-group report for the
//! cuboid and face-cuboid surfaces.

mod presentation;
mod report;
mod snf;

pub use presentation::{
    abelianization, free_group, free_product, surface_group_nonorientable, AbelianGroup,
    GroupPresentation,
};
pub use report::{assemble_pi1_report, ExtensionDescriptor, KInput, Pi1Inputs, Pi1Report};
pub use snf::{smith_normal_form, IntegerMatrix, SnfResult};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid rank {0}")]
    InvalidRank(i64),
    #[error("missing input: {0}")]
    MissingInput(String),
}
