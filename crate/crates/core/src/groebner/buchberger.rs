//! Buchberger's algorithm with the normal pair-selection strategy (minimal
//! lcm degree) and the coprime-lead and chain criteria, followed by
//! auto-reduction to the unique reduced basis and an independent
//! verification pass.

use super::normal_form::{normal_form_unchecked, reduce_scaled};
use super::{GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Monomial, Poly};
use crate::scalar::Field;
use crate::poly::PrimitivePart;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Why a generator set fails the Buchberger criterion.
#[derive(Debug, Clone)]
pub struct GbCertificate<K: Field> {
    /// Indices of the first S-pair whose S-polynomial has nonzero normal form.
    pub pair: (usize, usize),
    /// That nonzero normal form.
    pub residue: Poly<K>,
}

pub(crate) fn spoly<K: Field>(f: &Poly<K>, g: &Poly<K>) -> Poly<K> {
    let k = &f.ring().coeff;
    let (fm, fc) = f.lt().expect("nonzero");
    let (gm, gc) = g.lt().expect("nonzero");
    let l = fm.lcm(gm);
    let mf = l.div(fm).unwrap();
    let mg = l.div(gm).unwrap();
    // lcm/lt(f) * f - lcm/lt(g) * g, both scaled monic on the lcm term
    let finv = k.inv(fc).expect("field");
    let ginv = k.inv(gc).expect("field");
    let a = f.mul_monomial(&mf).mul_scalar(&finv);
    let b = g.mul_monomial(&mg).mul_scalar(&ginv);
    a.sub(&b)
}

/// Verified Groebner basis of `ideal`; auto-reduced to the canonical monic
/// reduced basis. Termination is guaranteed for global orders.
pub fn buchberger<K>(ideal: &Ideal<K>) -> Result<GroebnerBasis<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    if !ideal.ring().order.is_global() {
        return Err(GroebnerError::LocalOrderRejected);
    }
    let ring = Arc::clone(ideal.ring());
    let mut basis: Vec<Poly<K>> = Vec::new();
    for g in ideal.gens() {
        let g = K::primitive(g);
        if !g.is_zero() {
            basis.push(g);
        }
    }

    // queue keyed by (lcm total degree, i, j): normal strategy, deterministic
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut treated: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            queue.insert((pair_deg(&basis, i, j), i, j));
        }
    }

    while let Some(&(d, i, j)) = queue.iter().next() {
        queue.remove(&(d, i, j));
        treated.insert((i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, mj) = (fi.lm().unwrap(), fj.lm().unwrap());
        if mi.coprime(mj) {
            continue; // product criterion (global orders)
        }
        if chain_criterion(&basis, &treated, i, j) {
            continue;
        }
        let s = spoly(fi, fj);
        let r = reduce_scaled(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = K::primitive(&r);
        let n = basis.len();
        basis.push(r);
        for t in 0..n {
            queue.insert((pair_deg(&basis, t, n), t, n));
        }
    }

    let reduced = autoreduce(basis);
    let mut gb = GroebnerBasis::new(ring, reduced, true, false);
    // independent re-verification of the Buchberger criterion
    let (ok, _) = is_groebner_basis(&gb.elements)?;
    gb.verified = ok;
    debug_assert!(ok, "constructed basis failed re-verification");
    Ok(gb)
}

fn pair_deg<K: Field>(basis: &[Poly<K>], i: usize, j: usize) -> u32 {
    basis[i].lm().unwrap().lcm(basis[j].lm().unwrap()).total_degree()
}

/// Chain criterion: skip (i,j) when some k with lm(k) | lcm(lm i, lm j) has
/// both (i,k) and (k,j) already treated.
fn chain_criterion<K: Field>(
    basis: &[Poly<K>],
    treated: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
) -> bool {
    let l = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap());
    for k in 0..basis.len() {
        if k == i || k == j {
            continue;
        }
        if basis[k].lm().unwrap().divides(&l) {
            let a = (i.min(k), i.max(k));
            let b = (j.min(k), j.max(k));
            if treated.contains(&a) && treated.contains(&b) {
                return true;
            }
        }
    }
    false
}

/// Inter-reduce to the unique reduced basis: minimal leading monomials, every
/// element fully reduced against the others, all monic.
fn autoreduce<K: Field>(mut basis: Vec<Poly<K>>) -> Vec<Poly<K>> {
    // minimalize: drop elements whose lead is divisible by another lead
    let mut keep: Vec<Poly<K>> = Vec::new();
    basis.retain(|g| !g.is_zero());
    for i in 0..basis.len() {
        let mi = basis[i].lm().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if i == j {
                return false;
            }
            let mj = g.lm().unwrap();
            mj.divides(mi) && (mj != mi || j < i)
        });
        if !redundant {
            keep.push(basis[i].clone());
        }
    }
    // tail-reduce until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Poly<K>> =
                keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let r = normal_form_unchecked(&keep[i], &others);
            if r != keep[i] {
                keep[i] = r;
                changed = true;
            }
        }
        keep.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }
    for g in keep.iter_mut() {
        *g = g.monic().expect("nonzero basis element");
    }
    // deterministic order: sort by leading monomial, descending
    keep.sort_by(|a, b| {
        let ring = a.ring().clone();
        ring.order.compare(b.lm().unwrap(), a.lm().unwrap())
    });
    keep
}

/// Buchberger criterion check with certificate. Applies the coprime-lead
/// shortcut; reduces every remaining S-polynomial. Returns the first failing
/// pair when the set is not a basis.
pub fn is_groebner_basis<K>(
    gens: &[Poly<K>],
) -> Result<(bool, Option<GbCertificate<K>>), GroebnerError>
where
    K: Field + PrimitivePart,
{
    let gens: Vec<Poly<K>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let Some(first) = gens.first() else {
        return Ok((true, None));
    };
    if !first.ring().order.is_global() {
        return Err(GroebnerError::LocalOrderRejected);
    }
    for j in 1..gens.len() {
        for i in 0..j {
            let (mi, mj) = (gens[i].lm().unwrap(), gens[j].lm().unwrap());
            if mi.coprime(mj) {
                continue;
            }
            let s = spoly(&gens[i], &gens[j]);
            let r = reduce_scaled(&s, &gens);
            if !r.is_zero() {
                return Ok((false, Some(GbCertificate { pair: (i, j), residue: r })));
            }
        }
    }
    Ok((true, None))
}

/// Leading monomials of a generator set (for reporting).
pub fn leading_monomials<K: Field>(gens: &[Poly<K>]) -> Vec<Monomial> {
    gens.iter().filter_map(|g| g.lm().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};
    use crate::scalar::QQ;

    #[test]
    fn reduced_basis_of_simple_ideal() {
        // <x^2 - 1, y - x> under lex x > y gives {x - y, y^2 - 1}
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::lex(2)).unwrap();
        let i = Ideal::new(
            &r,
            vec![parse_poly("x^2 - 1", &r).unwrap(), parse_poly("y - x", &r).unwrap()],
        )
        .unwrap();
        let gb = buchberger(&i).unwrap();
        assert!(gb.verified && gb.reduced);
        let strs: Vec<String> = gb.elements.iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["x - y", "y^2 - 1"]);
    }

    #[test]
    fn groebner_input_is_idempotent() {
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::lex(2)).unwrap();
        let gens = vec![parse_poly("x - y", &r).unwrap(), parse_poly("y^2 - 1", &r).unwrap()];
        let (ok, cert) = is_groebner_basis(&gens).unwrap();
        assert!(ok && cert.is_none());
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let gb = buchberger(&i).unwrap();
        assert_eq!(gb.elements, gens);
    }

    #[test]
    fn single_monic_polynomial_is_basis() {
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::lex(2)).unwrap();
        let gens = vec![parse_poly("x^3 + y - 2", &r).unwrap()];
        let (ok, _) = is_groebner_basis(&gens).unwrap();
        assert!(ok);
    }
}
