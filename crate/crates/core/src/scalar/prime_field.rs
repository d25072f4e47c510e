//! Prime fields F_p with machine-width modulus.
//!
//! Elements are reduced u64 values; the context carries the modulus.
//! Primality is checked at construction (deterministic Miller-Rabin).

use super::{Field, ScalarError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub type FpElt = u64;

/// The prime field F_p. Construction fails on composite or even input where
/// an odd prime is required by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if !is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elt(&self, n: i64) -> FpElt {
        let m = n.rem_euclid(self.p as i64);
        m as u64
    }

    pub fn pow(&self, a: FpElt, mut e: u64) -> FpElt {
        let mut base = a % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            e >>= 1;
        }
        acc
    }

    /// Euler-criterion squareness test. Zero counts as a square.
    /// Errors with `EvenCharacteristic` when p = 2.
    pub fn is_square(&self, a: FpElt) -> Result<bool, ScalarError> {
        if self.p == 2 {
            return Err(ScalarError::EvenCharacteristic);
        }
        let a = a % self.p;
        if a == 0 {
            return Ok(true);
        }
        Ok(self.pow(a, (self.p - 1) / 2) == 1)
    }

    /// A square root of a when one exists (Tonelli-Shanks; deterministic
    /// non-residue scan). Returns None for non-squares.
    pub fn sqrt(&self, a: FpElt) -> Option<FpElt> {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if p == 2 {
            return Some(a);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow(a, (p + 1) / 4));
        }
        // Tonelli-Shanks
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while self.pow(z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mulmod(t2, t2, p);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        Some(r)
    }
}

impl Field for PrimeField {
    type Elt = FpElt;

    fn zero(&self) -> FpElt {
        0
    }
    fn one(&self) -> FpElt {
        1 % self.p
    }
    fn is_zero(&self, a: &FpElt) -> bool {
        *a % self.p == 0
    }
    fn add(&self, a: &FpElt, b: &FpElt) -> FpElt {
        let s = (*a as u128 + *b as u128) % self.p as u128;
        s as u64
    }
    fn sub(&self, a: &FpElt, b: &FpElt) -> FpElt {
        let s = (*a as u128 + (self.p - *b % self.p) as u128) % self.p as u128;
        s as u64
    }
    fn neg(&self, a: &FpElt) -> FpElt {
        if *a % self.p == 0 {
            0
        } else {
            self.p - *a % self.p
        }
    }
    fn mul(&self, a: &FpElt, b: &FpElt) -> FpElt {
        mulmod(*a, *b, self.p)
    }
    fn inv(&self, a: &FpElt) -> Result<FpElt, ScalarError> {
        let a = *a % self.p;
        if a == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }
    fn from_bigint(&self, n: &BigInt) -> FpElt {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().unwrap()
    }
    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<FpElt, ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if d.abs().mod_floor(&BigInt::from(self.p)).is_zero() {
            // denominator vanishes mod p: not representable
            return Err(ScalarError::DivisionByZero);
        }
        let nn = self.from_bigint(n);
        let dd = self.from_bigint(d);
        self.div(&nn, &dd)
    }
    fn fmt_elt(&self, a: &FpElt) -> String {
        (a % self.p).to_string()
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let f = PrimeFieldUnchecked { p: n };
        let mut x = f.pow(a % n, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

struct PrimeFieldUnchecked {
    p: u64,
}

impl PrimeFieldUnchecked {
    fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inv_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(&2).unwrap(), 3);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(&1).unwrap(), 1);
        // brute-force oracle for 4^{-1} in F_13
        let f13 = PrimeField::new(13).unwrap();
        let expected = (1..13).find(|x| (4 * x) % 13 == 1).unwrap();
        assert_eq!(f13.inv(&4).unwrap(), expected);
        assert_eq!(expected, 10);
        assert_eq!(f13.inv(&0), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn square_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert!(f7.is_square(4).unwrap());
        // brute-force oracle: squares mod 7 are {0,1,2,4}
        let squares: Vec<u64> = (0..7).map(|x| (x * x) % 7).collect();
        assert!(!squares.contains(&3));
        assert!(!f7.is_square(3).unwrap());
        assert!(f7.is_square(0).unwrap());
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.is_square(1), Err(ScalarError::EvenCharacteristic));
    }

    #[test]
    fn square_agrees_with_enumeration_small_p() {
        for p in (3..100u64).filter(|&p| is_prime_u64(p)) {
            let f = PrimeField::new(p).unwrap();
            let squares: std::collections::BTreeSet<u64> = (0..p).map(|x| (x * x) % p).collect();
            for a in 0..p {
                assert_eq!(f.is_square(a).unwrap(), squares.contains(&a), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn sqrt_roundtrip() {
        for p in [13u64, 17, 10007, 10009, 10037] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..50u64 {
                if f.is_square(a).unwrap() {
                    let r = f.sqrt(a).unwrap();
                    assert_eq!(f.mul(&r, &r), a % p);
                } else {
                    assert!(f.sqrt(a).is_none());
                }
            }
        }
    }

    #[test]
    fn primality_check() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(10007).is_ok());
    }
}
