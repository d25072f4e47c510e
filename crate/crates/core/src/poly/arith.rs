//! Ring arithmetic on sorted term lists. Addition and the reduction
//! work-horse `sub_scaled` are sorted merges; multiplication accumulates
//! into a map and sorts once.

use super::{Monomial, Poly};
use crate::scalar::{Field, PrimeField, Rat, ScalarError, QQ};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

impl<K: Field> Poly<K> {
    pub fn add(&self, other: &Poly<K>) -> Poly<K> {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly<K>) -> Poly<K> {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly<K>, negate: bool) -> Poly<K> {
        assert!(self.ring().same_ring(other.ring()), "ring mismatch in poly arithmetic");
        let ring = Arc::clone(self.ring());
        let k = &ring.coeff;
        let mut out = Vec::with_capacity(self.terms().len() + other.terms().len());
        let (a, b) = (self.terms(), other.terms());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match ring.order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { k.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { k.sub(&a[i].1, &b[j].1) } else { k.add(&a[i].1, &b[j].1) };
                    if !k.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for t in &a[i..] {
            out.push(t.clone());
        }
        for t in &b[j..] {
            let c = if negate { k.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly::from_sorted_unchecked(ring, out)
    }

    pub fn neg(&self) -> Poly<K> {
        let ring = Arc::clone(self.ring());
        let terms = self
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), ring.coeff.neg(c)))
            .collect();
        Poly::from_sorted_unchecked(ring, terms)
    }

    /// self - c * m * g: one reduction step. Multiplying by a monomial
    /// preserves term order, so this stays a sorted merge.
    pub fn sub_scaled(&self, c: &K::Elt, m: &Monomial, g: &Poly<K>) -> Poly<K> {
        assert!(self.ring().same_ring(g.ring()), "ring mismatch in poly arithmetic");
        let ring = Arc::clone(self.ring());
        let k = &ring.coeff;
        let scaled: Vec<(Monomial, K::Elt)> = g
            .terms()
            .iter()
            .map(|(gm, gc)| (gm.mul(m), k.mul(c, gc)))
            .collect();
        let rhs = Poly::from_sorted_unchecked(Arc::clone(&ring), scaled);
        self.merge(&rhs, true)
    }

    pub fn mul(&self, other: &Poly<K>) -> Poly<K> {
        assert!(self.ring().same_ring(other.ring()), "ring mismatch in poly arithmetic");
        let ring = self.ring();
        let k = &ring.coeff;
        let mut acc: std::collections::HashMap<Monomial, K::Elt> = std::collections::HashMap::new();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let m = ma.mul(mb);
                let c = k.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = k.add(e.get(), &c);
                        if k.is_zero(&s) {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !k.is_zero(&c) {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, K::Elt)> = acc.into_iter().collect();
        terms.sort_by(|(a, _), (b, _)| ring.order.compare(b, a));
        Poly::from_sorted_unchecked(Arc::clone(ring), terms)
    }

    pub fn mul_scalar(&self, c: &K::Elt) -> Poly<K> {
        let ring = Arc::clone(self.ring());
        let k = &ring.coeff;
        if k.is_zero(c) {
            return Poly::zero(&ring);
        }
        let terms = self.terms().iter().map(|(m, cc)| (m.clone(), k.mul(cc, c))).collect();
        Poly::from_sorted_unchecked(ring, terms)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly<K> {
        let ring = Arc::clone(self.ring());
        let terms = self.terms().iter().map(|(mm, c)| (mm.mul(m), c.clone())).collect();
        Poly::from_sorted_unchecked(ring, terms)
    }

    pub fn pow(&self, e: u32) -> Poly<K> {
        let mut acc = Poly::one(self.ring());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Result<Poly<K>, ScalarError> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(lc) => {
                let inv = self.ring().coeff.inv(lc)?;
                Ok(self.mul_scalar(&inv))
            }
        }
    }

    /// Evaluate at a point, one element per ring variable.
    pub fn evaluate(&self, point: &[K::Elt]) -> K::Elt {
        let k = &self.ring().coeff;
        assert_eq!(point.len(), self.ring().nvars());
        let mut acc = k.zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = k.mul(&t, &point[i]);
                }
            }
            acc = k.add(&acc, &t);
        }
        acc
    }
}

/// Canonical scaling for basis storage: over Q clear denominators, divide by
/// the integer content and make the leading coefficient positive; over F_p
/// (and other fields) make monic.
pub trait PrimitivePart: Field {
    fn primitive(p: &Poly<Self>) -> Poly<Self>;
}

impl PrimitivePart for QQ {
    fn primitive(p: &Poly<QQ>) -> Poly<QQ> {
        if p.is_zero() {
            return p.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for (_, c) in p.terms() {
            let n = c.numer() * (&den / c.denom());
            gcd = gcd.gcd(&n);
        }
        if gcd.is_zero() {
            gcd = BigInt::one();
        }
        let lead_neg = p.lc().map(|c| c.numer().is_negative()).unwrap_or(false);
        if lead_neg {
            gcd = -gcd;
        }
        let scale = Rat::new(den, gcd);
        p.mul_scalar(&scale)
    }
}

impl PrimitivePart for PrimeField {
    fn primitive(p: &Poly<PrimeField>) -> Poly<PrimeField> {
        p.monic().expect("nonzero polynomial")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, PolyRing};

    #[test]
    fn primitive_part_over_q() {
        let ring = PolyRing::new(QQ, &["x", "y"], MonomialOrder::lex(2)).unwrap();
        let x = Poly::var(&ring, 0);
        let y = Poly::var(&ring, 1);
        let half = Poly::constant(&ring, Rat::new(BigInt::from(-1), BigInt::from(2)));
        let f = x.mul(&half).add(&y.mul_scalar(&Rat::new(BigInt::from(3), BigInt::from(4))));
        let g = QQ::primitive(&f);
        // -1/2 x + 3/4 y -> 2x - 3y
        assert_eq!(g.lc().unwrap(), &Rat::from_integer(BigInt::from(2)));
        assert_eq!(g.terms().len(), 2);
    }
}
