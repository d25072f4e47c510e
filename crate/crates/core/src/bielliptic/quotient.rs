//! Involution-orbit censuses over F_p for the two smooth open surfaces
//! obtained by removing 2-torsion from one factor of E x E' and quotienting
//! by (P,Q) -> (-P,-Q), together with the fiber count of the projection to
//! the second factor.

use super::curve::{all_points, two_torsion, CurveOps, CurvePoint, CurveSpec};
use super::CurveError;
use crate::scalar::PrimeField;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Surface {
    /// ((E - E[2]) x E') / inv
    S1,
    /// (E x (E' - E'[2])) / inv
    S2,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientCounts {
    pub surface: Surface,
    pub p: u64,
    pub e_points: usize,
    pub e_prime_points: usize,
    pub e_two_torsion: usize,
    pub e_prime_two_torsion: usize,
    /// Fixed points of the involution on the full product (the 2-torsion
    /// pairs).
    pub product_fixed_points: usize,
    /// Orbits on the full product: (points - fixed)/2 + fixed.
    pub product_orbits: usize,
    /// Orbits of the restricted, fixed-point-free action.
    pub surface_orbits: usize,
    /// Orbits of the base (E'-E'[2])/inv for S2, (E-E[2])/inv for S1.
    pub base_orbits: usize,
    /// Whether every base orbit's fiber had exactly |E(F_p)| (S2) or
    /// |E'(F_p)| (S1) orbit classes.
    pub fibers_uniform: bool,
    pub fiber_size: usize,
}

fn orbit_key(
    ops_l: &CurveOps<PrimeField>,
    ops_r: &CurveOps<PrimeField>,
    p: &CurvePoint<PrimeField>,
    q: &CurvePoint<PrimeField>,
) -> (CurvePoint<PrimeField>, CurvePoint<PrimeField>) {
    // canonical representative of {(P,Q), (-P,-Q)}: smaller lexicographic
    let key = |pt: &CurvePoint<PrimeField>| match pt {
        CurvePoint::Infinity => (0u64, 0u64, 0u64),
        CurvePoint::Affine(x, y) => (1, *x, *y),
    };
    let a = (p.clone(), q.clone());
    let b = (ops_l.neg(p), ops_r.neg(q));
    if (key(&a.0), key(&a.1)) <= (key(&b.0), key(&b.1)) {
        a
    } else {
        b
    }
}

pub fn quotient_census(surface: Surface, p: u64) -> Result<QuotientCounts, CurveError> {
    if !CurveSpec::E.good_prime(p) || !CurveSpec::E_PRIME.good_prime(p) {
        return Err(CurveError::BadPrime(p));
    }
    let f = PrimeField::new(p).map_err(|_| CurveError::BadPrime(p))?;
    let ops_e = CurveOps::new(f, CurveSpec::E);
    let ops_ep = CurveOps::new(f, CurveSpec::E_PRIME);
    let e_pts = all_points(&f, CurveSpec::E)?;
    let ep_pts = all_points(&f, CurveSpec::E_PRIME)?;
    let e_tors = two_torsion(&f, CurveSpec::E)?;
    let ep_tors = two_torsion(&f, CurveSpec::E_PRIME)?;

    let fixed = e_tors.len() * ep_tors.len();
    let product = e_pts.len() * ep_pts.len();
    let product_orbits = (product - fixed) / 2 + fixed;

    // restricted point sets
    let (left, right): (Vec<_>, Vec<_>) = match surface {
        Surface::S1 => (
            e_pts.iter().filter(|pt| !e_tors.contains(pt)).cloned().collect(),
            ep_pts.clone(),
        ),
        Surface::S2 => (
            e_pts.clone(),
            ep_pts.iter().filter(|pt| !ep_tors.contains(pt)).cloned().collect(),
        ),
    };
    // the involution is free here: count orbits and the fibration structure
    let mut orbits = std::collections::BTreeSet::new();
    let mut fiber_counts: std::collections::BTreeMap<_, usize> = std::collections::BTreeMap::new();
    for pl in &left {
        for pr in &right {
            let rep = orbit_key(&ops_e, &ops_ep, pl, pr);
            let fresh = orbits.insert(format!("{rep:?}"));
            if fresh {
                // base representative: the inv-orbit of the non-torsion factor
                let base = match surface {
                    Surface::S2 => {
                        let q = &rep.1;
                        let nq = ops_ep.neg(q);
                        let key = |pt: &CurvePoint<PrimeField>| match pt {
                            CurvePoint::Infinity => (0u64, 0, 0),
                            CurvePoint::Affine(x, y) => (1, *x, *y),
                        };
                        if key(q) <= key(&nq) {
                            format!("{q:?}")
                        } else {
                            format!("{nq:?}")
                        }
                    }
                    Surface::S1 => {
                        let q = &rep.0;
                        let nq = ops_e.neg(q);
                        let key = |pt: &CurvePoint<PrimeField>| match pt {
                            CurvePoint::Infinity => (0u64, 0, 0),
                            CurvePoint::Affine(x, y) => (1, *x, *y),
                        };
                        if key(q) <= key(&nq) {
                            format!("{q:?}")
                        } else {
                            format!("{nq:?}")
                        }
                    }
                };
                *fiber_counts.entry(base).or_insert(0) += 1;
            }
        }
    }
    let base_orbits = fiber_counts.len();
    let fiber_size = match surface {
        Surface::S2 => e_pts.len(),
        Surface::S1 => ep_pts.len(),
    };
    let fibers_uniform = fiber_counts.values().all(|&c| c == fiber_size);

    Ok(QuotientCounts {
        surface,
        p,
        e_points: e_pts.len(),
        e_prime_points: ep_pts.len(),
        e_two_torsion: e_tors.len(),
        e_prime_two_torsion: ep_tors.len(),
        product_fixed_points: fixed,
        product_orbits,
        surface_orbits: orbits.len(),
        base_orbits,
        fibers_uniform,
        fiber_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_census_mod_13() {
        // |E(F_13)| = |E'(F_13)| = 20, both with full rational 2-torsion
        let c = quotient_census(Surface::S2, 13).unwrap();
        assert_eq!(c.e_points, 20);
        assert_eq!(c.e_prime_points, 20);
        assert_eq!(c.e_two_torsion, 4);
        assert_eq!(c.e_prime_two_torsion, 4);
        // base orbits: (20 - 4)/2 = 8
        assert_eq!(c.base_orbits, 8);
        assert!(c.fibers_uniform);
        assert_eq!(c.fiber_size, 20);
        assert_eq!(c.surface_orbits, 8 * 20);
        // orbit formula on the full product
        assert_eq!(c.product_fixed_points, 16);
        assert_eq!(c.product_orbits, (400 - 16) / 2 + 16);
    }

    #[test]
    fn s1_census_mod_13() {
        let c = quotient_census(Surface::S1, 13).unwrap();
        assert_eq!(c.base_orbits, 8);
        assert!(c.fibers_uniform);
        assert_eq!(c.surface_orbits, 8 * 20);
    }

    #[test]
    fn bad_prime_rejected() {
        assert!(matches!(quotient_census(Surface::S2, 2), Err(CurveError::BadPrime(2))));
    }
}
