//! The order-2 automorphisms of E x E and the conjugation identities
//! alpha^{-1} iota alpha = iota and alpha^{-1} gamma alpha = tau', with
//! alpha: (P,Q) -> (P+Q, Q), iota: (P,Q) -> (-P,-Q),
//! gamma: (P,Q) -> (P+T, Q+T), tau' = id x (adding T on the right factor).
//! Verified pointwise on seeded samples; any counterexample is reported.

use super::curve::{all_points, CurveOps, CurvePoint, CurveSpec};
use super::CurveError;
use crate::scalar::PrimeField;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

type Pair = (CurvePoint<PrimeField>, CurvePoint<PrimeField>);

struct ProductOps {
    ops: CurveOps<PrimeField>,
    t: CurvePoint<PrimeField>,
}

impl ProductOps {
    fn alpha(&self, (p, q): &Pair) -> Result<Pair, CurveError> {
        Ok((self.ops.add(p, q)?, q.clone()))
    }
    fn alpha_inv(&self, (p, q): &Pair) -> Result<Pair, CurveError> {
        Ok((self.ops.add(p, &self.ops.neg(q))?, q.clone()))
    }
    fn iota(&self, (p, q): &Pair) -> Pair {
        (self.ops.neg(p), self.ops.neg(q))
    }
    fn gamma(&self, (p, q): &Pair) -> Result<Pair, CurveError> {
        Ok((self.ops.add(p, &self.t)?, self.ops.add(q, &self.t)?))
    }
    fn tau_prime(&self, (p, q): &Pair) -> Result<Pair, CurveError> {
        Ok((p.clone(), self.ops.add(q, &self.t)?))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugationReport {
    pub p: u64,
    pub samples: u32,
    pub iota_identity_failures: u32,
    pub gamma_tau_failures: u32,
    pub tau_prime_pointwise_failures: u32,
}

/// Check, on seeded samples of E(F_p) x E(F_p):
///   alpha^{-1} iota alpha = iota,
///   alpha^{-1} gamma alpha = tau',
///   tau'(P,Q) = (P, Q+T) pointwise.
pub fn conjugation_check(p: u64, samples: u32, seed: u64) -> Result<ConjugationReport, CurveError> {
    if !CurveSpec::E.good_prime(p) {
        return Err(CurveError::BadPrime(p));
    }
    let f = PrimeField::new(p).map_err(|_| CurveError::BadPrime(p))?;
    let ops = CurveOps::new(f, CurveSpec::E);
    let t = ops.torsion_t();
    let prod = ProductOps { ops, t };
    let pts = all_points(&f, CurveSpec::E)?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut iota_fail = 0;
    let mut gamma_fail = 0;
    let mut tau_fail = 0;
    for _ in 0..samples {
        let pair: Pair = (
            pts[rng.gen_range(0..pts.len())].clone(),
            pts[rng.gen_range(0..pts.len())].clone(),
        );
        let lhs = prod.alpha_inv(&prod.iota(&prod.alpha(&pair)?))?;
        if lhs != prod.iota(&pair) {
            iota_fail += 1;
        }
        let lhs2 = prod.alpha_inv(&prod.gamma(&prod.alpha(&pair)?)?)?;
        if lhs2 != prod.tau_prime(&pair)? {
            gamma_fail += 1;
        }
        let direct = (pair.0.clone(), prod.ops.add(&pair.1, &prod.t)?);
        if prod.tau_prime(&pair)? != direct {
            tau_fail += 1;
        }
    }
    Ok(ConjugationReport {
        p,
        samples,
        iota_identity_failures: iota_fail,
        gamma_tau_failures: gamma_fail,
        tau_prime_pointwise_failures: tau_fail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_on_samples() {
        for p in [13u64, 17, 10007] {
            let r = conjugation_check(p, 100, 3).unwrap();
            assert_eq!(r.iota_identity_failures, 0, "p={p}");
            assert_eq!(r.gamma_tau_failures, 0, "p={p}");
            assert_eq!(r.tau_prime_pointwise_failures, 0, "p={p}");
        }
    }

    #[test]
    fn identity_conjugated_is_identity() {
        // alpha^{-1} id alpha = id trivially; exercised via iota twice
        let p = 13u64;
        let f = PrimeField::new(p).unwrap();
        let ops = CurveOps::new(f, CurveSpec::E);
        let t = ops.torsion_t();
        let prod = ProductOps { ops, t };
        let pts = all_points(&f, CurveSpec::E).unwrap();
        for pt in pts.iter().take(6) {
            let pair = (pt.clone(), pts[1].clone());
            let once = prod.alpha_inv(&prod.alpha(&pair).unwrap()).unwrap();
            assert_eq!(once, pair);
        }
    }
}
