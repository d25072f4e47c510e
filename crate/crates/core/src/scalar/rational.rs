//! The rational field Q on top of `num`'s arbitrary-precision `BigRational`.
//!
//! `BigRational` already maintains the canonical form this crate relies on:
//! gcd(numerator, denominator) = 1, denominator > 0, zero stored as 0/1.

use super::{Field, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Canonical reduced fraction n/d with the sign carried by the numerator.
pub fn rat_normalize(n: i64, d: i64) -> Result<Rat, ScalarError> {
    if d == 0 {
        return Err(ScalarError::ZeroDenominator);
    }
    Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// The field Q as a (zero-sized) context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QQ;

impl Field for QQ {
    type Elt = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn inv(&self, a: &Rat) -> Result<Rat, ScalarError> {
        if a.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_bigint(&self, n: &BigInt) -> Rat {
        Rat::from_integer(n.clone())
    }
    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<Rat, ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rat::new(n.clone(), d.clone()))
    }
    fn fmt_elt(&self, a: &Rat) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Sign of a rational: -1, 0 or 1. Used by the Sturm machinery.
pub fn rat_sign(a: &Rat) -> i32 {
    if a.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(rat_normalize(2, 4).unwrap(), rat_normalize(1, 2).unwrap());
        let z = rat_normalize(0, 7).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
        let x = rat_normalize(-3, -6).unwrap();
        assert_eq!(x, rat_normalize(1, 2).unwrap());
        assert_eq!(rat_normalize(5, 0), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn normalize_idempotent_and_sign() {
        let x = rat_normalize(-4, 6).unwrap();
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
        // re-normalizing the stored pair changes nothing
        let y = Rat::new(x.numer().clone(), x.denom().clone());
        assert_eq!(x, y);
    }
}
