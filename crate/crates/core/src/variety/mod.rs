//! The concrete projective varieties under study: the cuboid surface (four
//! quadrics in P^6) and the face-cuboid surface (three quadrics in P^5),
//! with chart restrictions, singular-locus ideals, stratified singular
//! censuses over Q and over finite fields, ordinary-double-point
//! classification, hyperplane-section basis verification, and an integer
//! face-cuboid search.

mod census;
mod face;
pub(crate) mod fplin;
mod lemma21;
mod odp;
mod singular;

pub use census::{census, CensusConfig, SingularCensus, StratumResult};
pub use face::search_face_cuboids;
pub use lemma21::{verify_lemma_2_1, Chart, HyperplaneSpec, Lemma21Options, Lemma21Report};
pub use odp::{classify_census, fp_ring, classify_odp_system, find_splitting_prime, FpChartPoint, OdpOutcome, OdpReport};
pub use singular::{singular_locus_ideal, stratum_system, SingularSystem};

use crate::groebner::GroebnerError;
use crate::poly::{parse_poly, MonomialOrder, Poly, PolyError, PolyRing, RingRc};
use crate::scalar::QQ;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VarietyError {
    #[error("unknown variety `{0}`")]
    UnknownVariety(String),
    #[error("unknown chart variable `{0}`")]
    UnknownChart(String),
    #[error("stratum {chart} is not zero-dimensional: positive-dimensional singular locus")]
    StratumNotZeroDimensional { chart: String },
    #[error("point is not singular on the variety")]
    PointNotSingular,
    #[error("bad prime {0}")]
    BadPrime(u64),
    #[error("no splitting prime below {0}")]
    NoSplittingPrime(u64),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A named projective variety given by homogeneous equations.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    pub name: String,
    pub ring: RingRc<QQ>,
    pub equations: Vec<Poly<QQ>>,
    /// Expected codimension (the built-ins are complete intersections).
    pub codim: usize,
}

/// The built-in surfaces. `upsilon` is cut out by
/// A^2+B^2-Z^2, B^2+C^2-X^2, C^2+A^2-Y^2, A^2+X^2-U^2 in P^6;
/// `V` by A^2+C^2-Y^2, B^2+C^2-X^2, A^2+X^2-U^2 in P^5.
pub fn builtin(name: &str) -> Result<VarietySpec, VarietyError> {
    match name {
        "upsilon" => {
            let ring = PolyRing::new(
                QQ,
                &["A", "B", "C", "X", "Y", "Z", "U"],
                MonomialOrder::grevlex(7),
            )?;
            let eqs = [
                "A^2 + B^2 - Z^2",
                "B^2 + C^2 - X^2",
                "C^2 + A^2 - Y^2",
                "A^2 + X^2 - U^2",
            ]
            .iter()
            .map(|s| parse_poly(s, &ring))
            .collect::<Result<Vec<_>, _>>()?;
            Ok(VarietySpec { name: "upsilon".into(), ring, equations: eqs, codim: 4 })
        }
        "V" => {
            let ring =
                PolyRing::new(QQ, &["A", "B", "C", "X", "Y", "U"], MonomialOrder::grevlex(6))?;
            let eqs = ["A^2 + C^2 - Y^2", "B^2 + C^2 - X^2", "A^2 + X^2 - U^2"]
                .iter()
                .map(|s| parse_poly(s, &ring))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(VarietySpec { name: "V".into(), ring, equations: eqs, codim: 3 })
        }
        other => Err(VarietyError::UnknownVariety(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let u = builtin("upsilon").unwrap();
        assert_eq!(u.equations.len(), 4);
        assert_eq!(u.ring.nvars(), 7);
        assert!(u.equations.iter().all(|e| e.is_homogeneous() && e.total_degree() == 2));
        let v = builtin("V").unwrap();
        assert_eq!(v.equations.len(), 3);
        assert_eq!(v.ring.nvars(), 6);
        assert!(matches!(builtin("W"), Err(VarietyError::UnknownVariety(_))));
    }
}
