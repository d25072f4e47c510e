//! Exact computer-algebra engine for the surfaces parametrizing cuboids and
//! face cuboids: sparse multivariate polynomials over exact coefficient
//! domains, global Groebner and local standard bases, zero-dimensional
//! solving, exact real-root counting, singular-locus censuses, the bielliptic
//! parametrization of the face-cuboid surface, a Milnor-number/Euler-
//! characteristic pipeline, and finitely presented fundamental groups.
//!
//! Everything is exact: no floating point anywhere. All randomness is seeded.

pub mod scalar;
pub mod poly;
pub mod groebner;
pub mod unireal;
pub mod variety;
pub mod eulerchar;
pub mod bielliptic;
pub mod fundgroup;
pub mod report;
