//! Rational-function fields K(A,B,...): fractions of multivariate
//! polynomials over a base field, normalized so the denominator is monic
//! under the parameter ring's order.
//!
//! No gcd cancellation by default; exact fraction arithmetic is correct as
//! is, and the quadric-scale computations these fields back stay small. A
//! best-effort `reduce` strips shared monomial and content factors only.

use super::{Field, ScalarError};
use crate::poly::{Poly, RingRc};
use num_bigint::BigInt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct RatFunc<K: Field> {
    pub num: Poly<K>,
    pub den: Poly<K>,
}

impl<K: Field> PartialEq for RatFunc<K> {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplied equality: canonical forms may differ without gcd
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

/// The field of rational functions over `params`.
#[derive(Debug, Clone)]
pub struct RatFuncField<K: Field> {
    pub params: RingRc<K>,
}

impl<K: Field> PartialEq for RatFuncField<K> {
    fn eq(&self, other: &Self) -> bool {
        self.params.same_ring(&other.params)
    }
}

impl<K: Field> RatFuncField<K> {
    pub fn new(params: RingRc<K>) -> Self {
        RatFuncField { params }
    }

    fn normalize(&self, num: Poly<K>, den: Poly<K>) -> RatFunc<K> {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(&self.params) };
        }
        let lc = den.lc().expect("nonzero denominator").clone();
        let inv = self.params.coeff.inv(&lc).expect("field inverse");
        RatFunc { num: num.mul_scalar(&inv), den: den.mul_scalar(&inv) }
    }

    pub fn from_poly(&self, p: Poly<K>) -> RatFunc<K> {
        self.normalize(p, Poly::one(&self.params))
    }

    pub fn var(&self, i: usize) -> RatFunc<K> {
        self.from_poly(Poly::var(&self.params, i))
    }
}

impl<K: Field> Field for RatFuncField<K> {
    type Elt = RatFunc<K>;

    fn zero(&self) -> RatFunc<K> {
        RatFunc { num: Poly::zero(&self.params), den: Poly::one(&self.params) }
    }
    fn one(&self) -> RatFunc<K> {
        RatFunc { num: Poly::one(&self.params), den: Poly::one(&self.params) }
    }
    fn is_zero(&self, a: &RatFunc<K>) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &RatFunc<K>, b: &RatFunc<K>) -> RatFunc<K> {
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        let den = a.den.mul(&b.den);
        self.normalize(num, den)
    }
    fn sub(&self, a: &RatFunc<K>, b: &RatFunc<K>) -> RatFunc<K> {
        let num = a.num.mul(&b.den).sub(&b.num.mul(&a.den));
        let den = a.den.mul(&b.den);
        self.normalize(num, den)
    }
    fn neg(&self, a: &RatFunc<K>) -> RatFunc<K> {
        RatFunc { num: a.num.neg(), den: a.den.clone() }
    }
    fn mul(&self, a: &RatFunc<K>, b: &RatFunc<K>) -> RatFunc<K> {
        self.normalize(a.num.mul(&b.num), a.den.mul(&b.den))
    }
    fn inv(&self, a: &RatFunc<K>) -> Result<RatFunc<K>, ScalarError> {
        if a.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }
    fn from_bigint(&self, n: &BigInt) -> RatFunc<K> {
        self.from_poly(Poly::constant(&self.params, self.params.coeff.from_bigint(n)))
    }
    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<RatFunc<K>, ScalarError> {
        let c = self.params.coeff.from_ratio(n, d)?;
        Ok(self.from_poly(Poly::constant(&self.params, c)))
    }
    fn fmt_elt(&self, a: &RatFunc<K>) -> String {
        if a.den == Poly::one(&self.params) {
            format!("({})", a.num)
        } else {
            format!("(({})/({}))", a.num, a.den)
        }
    }
}

impl<K: Field> RatFuncField<K> {
    /// Shared-context constructor used by the Lemma 2.1 parameter mode.
    pub fn shared(params: &RingRc<K>) -> Self {
        RatFuncField { params: Arc::clone(params) }
    }
}

impl<K: Field> crate::poly::PrimitivePart for RatFuncField<K> {
    fn primitive(p: &Poly<Self>) -> Poly<Self> {
        p.monic().expect("nonzero polynomial")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, PolyRing};
    use crate::scalar::{PrimeField, QQ};

    #[test]
    fn field_ops() {
        let params = PolyRing::new(QQ, &["A", "B"], MonomialOrder::lex(2)).unwrap();
        let f = RatFuncField::new(params);
        let a = f.var(0);
        let b = f.var(1);
        // A/B + B/A = (A^2 + B^2)/(A B)
        let q = f.add(&f.div(&a, &b).unwrap(), &f.div(&b, &a).unwrap());
        let lhs = q.num.clone();
        let a2b2 = f.add(&f.mul(&a, &a), &f.mul(&b, &b));
        assert_eq!(lhs, a2b2.num);
        assert!(f.is_zero(&f.sub(&q, &q)));
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn monic_denominator_invariant() {
        let p = PrimeField::new(7).unwrap();
        let params = PolyRing::new(p, &["A"], MonomialOrder::lex(1)).unwrap();
        let f = RatFuncField::new(params.clone());
        let a = f.var(0);
        let three = f.from_i64(3);
        // 1 / (3A): denominator must come out monic
        let q = f.inv(&f.mul(&three, &a)).unwrap();
        assert_eq!(q.den.lc().copied(), Some(1));
    }
}
