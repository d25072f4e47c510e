//! Elimination of variables through a block order: the basis elements free
//! of the eliminated block generate the intersection with the subring.

use super::{buchberger, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::scalar::Field;
use crate::poly::PrimitivePart;

/// Generators of I intersected with the subring in the `keep` variables
/// (given by index into the ideal's ring). The result lives in a fresh ring
/// on the kept variables, original relative order, grevlex.
pub fn eliminate<K>(ideal: &Ideal<K>, keep: &[usize]) -> Result<Ideal<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut keep_sorted: Vec<usize> = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.iter().any(|&i| i >= n) {
        return Err(GroebnerError::Poly(crate::poly::PolyError::UnknownVariable(
            "eliminate: keep index out of range".into(),
        )));
    }
    let elim: Vec<usize> = (0..n).filter(|i| !keep_sorted.contains(i)).collect();

    let block_ring = ring.with_order(MonomialOrder::Block {
        eliminate: elim.clone(),
        keep: keep_sorted.clone(),
    })?;
    let gens: Result<Vec<Poly<K>>, _> = ideal.gens().iter().map(|g| g.into_ring(&block_ring)).collect();
    let gb = buchberger(&Ideal::new(&block_ring, gens?)?)?;

    // subring on the kept variables
    let sub_vars: Vec<&str> = keep_sorted.iter().map(|&i| ring.vars[i].as_str()).collect();
    let sub_ring = PolyRing::new(ring.coeff.clone(), &sub_vars, MonomialOrder::grevlex(sub_vars.len()))?;

    let mut out = Vec::new();
    for g in &gb.elements {
        let uses_elim = g
            .terms()
            .iter()
            .any(|(m, _)| elim.iter().any(|&i| m.exp(i) > 0));
        if uses_elim {
            continue;
        }
        let terms = g
            .terms()
            .iter()
            .map(|(m, c)| {
                let exps: Vec<u16> = keep_sorted.iter().map(|&i| m.exp(i)).collect();
                (Monomial::new(exps), c.clone())
            })
            .collect();
        out.push(Poly::from_terms(&sub_ring, terms));
    }
    Ok(Ideal::new(&sub_ring, out)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};
    use crate::scalar::QQ;

    #[test]
    fn eliminate_examples() {
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::grevlex(2)).unwrap();
        // <x^2 + y^2 - 1, x - y>, eliminate x -> <2y^2 - 1> up to scaling
        let i = Ideal::new(
            &r,
            vec![parse_poly("x^2 + y^2 - 1", &r).unwrap(), parse_poly("x - y", &r).unwrap()],
        )
        .unwrap();
        let e = eliminate(&i, &[1]).unwrap();
        assert_eq!(e.gens().len(), 1);
        let g = &e.gens()[0];
        let expect = parse_poly("y^2 - 1/2", g.ring()).unwrap();
        assert_eq!(g, &expect);

        // <x - y^2> keep x: zero ideal
        let i2 = Ideal::new(&r, vec![parse_poly("x - y^2", &r).unwrap()]).unwrap();
        let e2 = eliminate(&i2, &[0]).unwrap();
        assert!(e2.gens().is_empty());
    }
}
