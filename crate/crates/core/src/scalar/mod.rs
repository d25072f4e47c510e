//! Exact coefficient domains: arbitrary-precision rationals, prime fields of
//! machine width, and rational-function fields over a base field.
//!
//! Every domain is exposed through the [`Field`] context trait: the context
//! value carries whatever data the domain needs (nothing for Q, the modulus
//! for F_p, the parameter ring for K(A,B)) and the element type stays plain.

mod prime_field;
mod rational;
pub mod ratfunc;

pub use prime_field::{is_prime_u64, FpElt, PrimeField};
pub use rational::{rat_normalize, rat_sign, Rat, QQ};

use num_bigint::BigInt;
use std::fmt::Debug;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic 2 is excluded")]
    EvenCharacteristic,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A field presented as a context object; elements are plain values.
///
/// All operations are pure and exact. Contexts are cheap to clone and
/// compare; mixing elements of unequal contexts is a caller error.
pub trait Field: Clone + PartialEq + Debug {
    type Elt: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn is_zero(&self, a: &Self::Elt) -> bool;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg(&self, a: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    /// Multiplicative inverse; `DivisionByZero` on zero input.
    fn inv(&self, a: &Self::Elt) -> Result<Self::Elt, ScalarError>;
    fn from_bigint(&self, n: &BigInt) -> Self::Elt;
    /// Image of the exact fraction n/d; `ZeroDenominator` when d = 0.
    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<Self::Elt, ScalarError>;
    fn fmt_elt(&self, a: &Self::Elt) -> String;

    fn div(&self, a: &Self::Elt, b: &Self::Elt) -> Result<Self::Elt, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
    fn from_i64(&self, n: i64) -> Self::Elt {
        self.from_bigint(&BigInt::from(n))
    }
    fn is_one(&self, a: &Self::Elt) -> bool {
        *a == self.one()
    }
}
