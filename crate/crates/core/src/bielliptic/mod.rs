//! The bielliptic description of the face-cuboid surface: the curves
//! E: y^2 z = x^3 - 4x z^2 and E': y^2 z = x^3 + x z^2, the explicit map
//! from E x E onto the surface, the order-2 automorphisms, conjugation
//! identities, and involution-orbit censuses over finite fields.

mod autos;
mod curve;
mod phi;
mod quotient;

pub use autos::{conjugation_check, ConjugationReport};
pub use curve::{all_points, two_torsion, two_torsion_q, CurveOps, CurvePoint, CurveSpec};
pub use phi::{phi, phi_iota_invariance, phi_sampled_check, phi_symbolic_check, PhiImage};
pub use quotient::{quotient_census, QuotientCounts, Surface};

use crate::poly::PolyError;
use crate::scalar::ScalarError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("bad prime {0} for this curve")]
    BadPrime(u64),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
