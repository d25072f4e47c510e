//! Mora's tangent-cone algorithm: ecart-controlled weak normal forms and
//! standard bases under the local order. Every reduction step counts against
//! an explicit budget; exceeding it returns partial state instead of hanging.

use super::{GroebnerBasis, GroebnerError, Ideal};
use crate::poly::{Poly, PrimitivePart};
use crate::scalar::Field;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Reduction-step budget shared across one logical computation.
#[derive(Debug, Clone)]
pub struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.used += 1;
        if self.used > self.limit {
            Err(GroebnerError::BudgetExceeded { steps: self.used })
        } else {
            Ok(())
        }
    }
}

/// Outcome of a standard-basis run. `complete` is false when the budget ran
/// out; `basis` then holds the partial state reached so far (resumable by
/// feeding it back as generators with a larger budget).
#[derive(Debug, Clone)]
pub struct MoraOutcome<K: Field> {
    pub basis: GroebnerBasis<K>,
    pub complete: bool,
    pub steps: u64,
}

fn ecart<K: Field>(f: &Poly<K>) -> u32 {
    f.total_degree() - f.lm().map(|m| m.total_degree()).unwrap_or(0)
}

/// Ecart-based weak normal form of f against G under the ring's local
/// order. Weak normal forms are defined up to multiplication by a unit, so
/// the work polynomial is content-stripped as it goes to control swell.
pub fn mora_normal_form<K>(
    f: &Poly<K>,
    basis: &[Poly<K>],
    budget: &mut Budget,
) -> Result<Poly<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    mora_normal_form_trunc(f, basis, budget, None)
}

/// The same weak normal form computed in R/m^bound when a truncation degree
/// is given: every term of degree >= bound is dropped as it appears.
pub(crate) fn mora_normal_form_trunc<K>(
    f: &Poly<K>,
    basis: &[Poly<K>],
    budget: &mut Budget,
    trunc: Option<u32>,
) -> Result<Poly<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    if f.ring().order.is_global() {
        return Err(GroebnerError::GlobalOrderRejected);
    }
    let k = f.ring().coeff.clone();
    let cut = |p: Poly<K>| match trunc {
        Some(d) => p.truncate_above(d),
        None => p,
    };
    let mut reducers: Vec<Poly<K>> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut h = cut(f.clone());
    loop {
        let Some((hm, hc)) = h.lt() else {
            return Ok(h);
        };
        let mut pick: Option<usize> = None;
        for (i, g) in reducers.iter().enumerate() {
            if g.lm().unwrap().divides(hm) {
                if pick.map(|p| ecart(&reducers[p]) > ecart(g)).unwrap_or(true) {
                    pick = Some(i);
                }
            }
        }
        let Some(i) = pick else {
            return Ok(h);
        };
        if ecart(&reducers[i]) > ecart(&h) {
            reducers.push(h.clone());
        }
        let g = &reducers[i];
        let (gm, gc) = g.lt().unwrap();
        let q = hm.div(gm).unwrap();
        let c = k.div(hc, gc)?;
        h = K::primitive(&cut(h.sub_scaled(&c, &q, g)));
        budget.tick()?;
    }
}

/// Standard basis of the ideal in the localization at the origin.
/// Applies no pair-skipping criteria (conservative for local orders); pairs
/// are processed by ascending lcm degree.
pub fn mora_standard_basis<K>(
    ideal: &Ideal<K>,
    budget: &mut Budget,
) -> Result<MoraOutcome<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    mora_standard_basis_trunc(ideal, budget, None)
}

/// Standard basis of the ideal's image in R/m^bound when a truncation degree
/// is given (used by the Milnor pipeline with its exactness certificate).
pub fn mora_standard_basis_trunc<K>(
    ideal: &Ideal<K>,
    budget: &mut Budget,
    trunc: Option<u32>,
) -> Result<MoraOutcome<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    if ideal.ring().order.is_global() {
        return Err(GroebnerError::GlobalOrderRejected);
    }
    let ring = Arc::clone(ideal.ring());
    let mut basis: Vec<Poly<K>> = ideal
        .gens()
        .iter()
        .map(|g| {
            let g = match trunc {
                Some(d) => g.truncate_above(d),
                None => g.clone(),
            };
            K::primitive(&g)
        })
        .collect();
    basis.retain(|g| !g.is_zero());

    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            queue.insert((lcm_deg(&basis, i, j), i, j));
        }
    }

    while let Some(&(d, i, j)) = queue.iter().next() {
        queue.remove(&(d, i, j));
        let s = match trunc {
            Some(d) => super::buchberger::spoly(&basis[i], &basis[j]).truncate_above(d),
            None => super::buchberger::spoly(&basis[i], &basis[j]),
        };
        if s.is_zero() {
            continue;
        }
        match mora_normal_form_trunc(&s, &basis, budget, trunc) {
            Ok(h) => {
                if h.is_zero() {
                    continue;
                }
                let h = K::primitive(&h);
                let n = basis.len();
                basis.push(h);
                for t in 0..n {
                    queue.insert((lcm_deg(&basis, t, n), t, n));
                }
            }
            Err(GroebnerError::BudgetExceeded { steps }) => {
                let gb = GroebnerBasis::new(ring, basis, false, false);
                return Ok(MoraOutcome { basis: gb, complete: false, steps });
            }
            Err(e) => return Err(e),
        }
    }

    let steps = budget.used;
    let gb = GroebnerBasis::new(ring, basis, false, true);
    Ok(MoraOutcome { basis: gb, complete: true, steps })
}

fn lcm_deg<K: Field>(basis: &[Poly<K>], i: usize, j: usize) -> u32 {
    basis[i].lm().unwrap().lcm(basis[j].lm().unwrap()).total_degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::quotient_dimension;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing, RingRc};
    use crate::scalar::QQ;

    fn local_ring(vars: &[&str]) -> RingRc<QQ> {
        PolyRing::new(QQ, vars, MonomialOrder::neg_graded_lex(vars.len())).unwrap()
    }

    fn jacobian_dim(f: &str, vars: &[&str]) -> Option<usize> {
        let r = local_ring(vars);
        let p = parse_poly(f, &r).unwrap();
        let gens: Vec<_> = (0..vars.len()).map(|v| p.derivative(v).unwrap()).collect();
        let i = Ideal::new(&r, gens).unwrap();
        let mut budget = Budget::new(1_000_000);
        let out = mora_standard_basis(&i, &mut budget).unwrap();
        assert!(out.complete);
        quotient_dimension(&out.basis).dimension()
    }

    #[test]
    fn morse_point() {
        assert_eq!(jacobian_dim("x^2 + y^2 + z^2", &["x", "y", "z"]), Some(1));
    }

    #[test]
    fn a_k_staircases() {
        for k in [2u32, 3, 4] {
            let f = format!("x^{} + y^2", k + 1);
            assert_eq!(jacobian_dim(&f, &["x", "y"]), Some(k as usize), "A_{k}");
        }
    }

    #[test]
    fn local_unit_handling() {
        // 1 + x is a unit in the localization: ideal <(1+x) x> has the same
        // local leading ideal as <x>
        let r = local_ring(&["x", "y"]);
        let g = parse_poly("x + x^2", &r).unwrap();
        let y2 = parse_poly("y^2", &r).unwrap();
        let i = Ideal::new(&r, vec![g, y2]).unwrap();
        let mut budget = Budget::new(10_000);
        let out = mora_standard_basis(&i, &mut budget).unwrap();
        assert!(out.complete);
        assert_eq!(quotient_dimension(&out.basis).dimension(), Some(2));
    }

    #[test]
    fn budget_exceeded_is_clean() {
        let r = local_ring(&["x", "y"]);
        let a = parse_poly("x^3 + x^4 + y^5", &r).unwrap();
        let b = parse_poly("y^3 + x^5 + y^4", &r).unwrap();
        let i = Ideal::new(&r, vec![a, b]).unwrap();
        let mut budget = Budget::new(1);
        let out = mora_standard_basis(&i, &mut budget).unwrap();
        assert!(!out.complete);
        assert!(out.steps >= 1);
    }
}
