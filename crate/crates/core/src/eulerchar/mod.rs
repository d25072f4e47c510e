//! Euler characteristics of compact real complete intersections through real
//! Milnor numbers: the generic H construction, the explicit polynomials for
//! the cuboid and face-cuboid systems, Milnor numbers by two independent
//! routes (Mora standard bases and a truncated-jet dimension count), the
//! formula variants for chi, and the derived k and k' values.

mod bruce;
mod jet;
mod milnor;
mod pipeline;

pub use bruce::{bruce_h_empty, bruce_h_generic, build_h_upsilon, build_h_v, BruceInput};
pub use jet::{jet_dimension_sequence, JetConfig, JetOutcome};
pub use milnor::{milnor_number, MilnorConfig, MilnorResult, MuValue};
pub use pipeline::{
    calibration_table, compute_k, compute_k_prime, euler_characteristic, CalibrationRow,
    EulerReport, FormulaVariant, PipelineConfig, VariantValue,
};

use crate::groebner::GroebnerError;
use crate::poly::PolyError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerError {
    #[error("input degree exceeds the declared bound d")]
    DegreeMismatch,
    #[error("polynomial does not vanish at the origin")]
    NotVanishingAtOrigin,
    #[error("formula variant produced a non-integer value")]
    NonIntegerResult,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}
