//! Multivariate division: the full normal form under a global order.
//! The remainder has no term divisible by any leading monomial of the
//! divisor set, and f - result lies in the ideal they generate.

use super::GroebnerError;
use crate::poly::{Monomial, Poly};
use crate::scalar::Field;
use std::sync::Arc;

pub fn normal_form<K: Field>(f: &Poly<K>, basis: &[Poly<K>]) -> Result<Poly<K>, GroebnerError> {
    if !f.ring().order.is_global() {
        return Err(GroebnerError::LocalOrderRejected);
    }
    Ok(normal_form_unchecked(f, basis))
}

/// Division loop shared with Buchberger. Caller guarantees a global order.
pub(crate) fn normal_form_unchecked<K: Field>(f: &Poly<K>, basis: &[Poly<K>]) -> Poly<K> {
    let ring = Arc::clone(f.ring());
    let k = ring.coeff.clone();
    let mut h = f.clone();
    let mut out: Vec<(Monomial, K::Elt)> = Vec::new();
    'outer: while let Some((hm, hc)) = h.lt() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.lt().expect("nonzero divisor");
            if let Some(q) = hm.div(gm) {
                let c = k.div(hc, gc).expect("field division");
                h = h.sub_scaled(&c, &q, g);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        out.push((hm.clone(), hc.clone()));
        let lead = Poly::from_sorted_unchecked(Arc::clone(&ring), vec![(hm.clone(), hc.clone())]);
        h = h.sub(&lead);
    }
    Poly::from_sorted_unchecked(ring, out)
}

/// Full reduction that keeps coefficients small by content-stripping the
/// whole work polynomial every few steps. The result is the normal form up
/// to a nonzero scalar: zero-ness, leading monomial and term support all
/// survive scaling, which is everything Buchberger's loop needs. Reducing a
/// term only touches smaller monomials, so the already-irreducible prefix
/// stays intact and scales consistently with the rest.
pub(crate) fn reduce_scaled<K>(f: &Poly<K>, basis: &[Poly<K>]) -> Poly<K>
where
    K: Field + crate::poly::PrimitivePart,
{
    let k = f.ring().coeff.clone();
    let mut h = f.clone();
    let mut prefix = 0usize; // leading terms already known irreducible
    let mut steps = 0u32;
    'outer: loop {
        if prefix >= h.num_terms() {
            break;
        }
        let (hm, hc) = {
            let (m, c) = &h.terms()[prefix];
            (m.clone(), c.clone())
        };
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.lt().expect("nonzero divisor");
            if let Some(q) = hm.div(gm) {
                let c = k.div(&hc, gc).expect("field division");
                h = h.sub_scaled(&c, &q, g);
                steps += 1;
                if steps % 4 == 0 {
                    h = K::primitive(&h);
                }
                continue 'outer;
            }
        }
        prefix += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};
    use crate::scalar::QQ;

    #[test]
    fn nf_examples() {
        // lex x > y
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::lex(2)).unwrap();
        let f = parse_poly("x^2", &r).unwrap();
        let g = parse_poly("x - y", &r).unwrap();
        let nf = normal_form(&f, &[g]).unwrap();
        assert_eq!(nf, parse_poly("y^2", &r).unwrap());

        // empty divisor set returns f
        let nf2 = normal_form(&f, &[]).unwrap();
        assert_eq!(nf2, f);
    }

    #[test]
    fn local_order_rejected() {
        let r = PolyRing::new(QQ, &["x"], MonomialOrder::neg_graded_lex(1)).unwrap();
        let f = parse_poly("x", &r).unwrap();
        assert!(matches!(
            normal_form(&f, &[]),
            Err(GroebnerError::LocalOrderRejected)
        ));
    }
}
