//! Groebner engine: global bases via Buchberger, local standard bases via
//! Mora's algorithm, elimination, staircases of zero-dimensional quotients,
//! and shape-position solving of zero-dimensional systems.

mod buchberger;
mod elim;
mod mora;
mod normal_form;
mod shape;
mod staircase;
mod tower;
pub mod univar;

pub use buchberger::{buchberger, is_groebner_basis, leading_monomials, GbCertificate};
pub use elim::eliminate;
pub use mora::{mora_normal_form, mora_standard_basis, mora_standard_basis_trunc, Budget, MoraOutcome};
pub use normal_form::normal_form;
pub use shape::{shape_position_solve, ShapeConfig, SolvedSystem};
pub use staircase::{quotient_dimension, truncated_staircase, Staircase};
pub use tower::{tower_splitting_evidence, StageOutcome, TowerReport};

use crate::poly::{Poly, PolyError, RingRc};
use crate::scalar::Field;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("local order rejected here; use the Mora variants")]
    LocalOrderRejected,
    #[error("global order rejected here; this entry point is local")]
    GlobalOrderRejected,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("shape position failed after {tries} random changes")]
    ShapeFailed { tries: u32 },
    #[error("reduction budget exceeded after {steps} steps")]
    BudgetExceeded { steps: u64 },
    #[error("bad prime {0}")]
    BadPrime(u64),
    #[error("degenerate coefficients: {0}")]
    DegenerateCoefficients(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ScalarError),
}

/// A finitely generated ideal: nonzero generators in one ring.
#[derive(Debug, Clone)]
pub struct Ideal<K: Field> {
    ring: RingRc<K>,
    gens: Vec<Poly<K>>,
}

impl<K: Field> Ideal<K> {
    pub fn new(ring: &RingRc<K>, gens: Vec<Poly<K>>) -> Result<Self, PolyError> {
        let gens: Vec<Poly<K>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            if !g.ring().same_ring(ring) {
                return Err(PolyError::RingMismatch("ideal generators live in different rings".into()));
            }
        }
        Ok(Ideal { ring: Arc::clone(ring), gens })
    }

    pub fn ring(&self) -> &RingRc<K> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<K>] {
        &self.gens
    }
}

/// A Groebner or standard basis together with its verification state.
///
/// `reduced` means: monic elements, no term of any element divisible by the
/// leading monomial of another. `verified` means every S-polynomial reduced
/// to zero (re-checked independently of construction).
#[derive(Debug, Clone)]
pub struct GroebnerBasis<K: Field> {
    pub elements: Vec<Poly<K>>,
    ring: RingRc<K>,
    pub reduced: bool,
    pub verified: bool,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> &RingRc<K> {
        &self.ring
    }

    pub fn order(&self) -> &crate::poly::MonomialOrder {
        &self.ring.order
    }

    pub(crate) fn new(ring: RingRc<K>, elements: Vec<Poly<K>>, reduced: bool, verified: bool) -> Self {
        GroebnerBasis { elements, ring, reduced, verified }
    }
}
