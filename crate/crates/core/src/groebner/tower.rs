//! Finite-field specialization evidence for the field tower
//! L_0 = K(A,B) c L_1 = L_0[C]/(C^2 - (alpha A^2 + beta B^2)/gamma)
//!       c L_2 = L_1[X]/(X^2 - (B^2 + C^2))
//!       c L_3 = L_2[Y]/(Y^2 - (C^2 + A^2))
//!       c L_4 = L_3[Z]/(Z^2 - (A^2 + B^2))
//!       c L_5 = L_4[U]/(U^2 - (A^2 + B^2 + C^2)).
//!
//! For random specializations of (A, B, alpha, beta, gamma) in F_p, each
//! stage adjoins a square root of an element that, by construction, already
//! lies in F_p; the walk records whether that element is a square in the
//! field built so far (equality) or not (proper quadratic extension). Over
//! F_p a second extension always collapses, since F_{p^2} contains every
//! square root of F_p: this is specialization evidence, not a proof.

use super::GroebnerError;
use crate::scalar::PrimeField;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StageOutcome {
    /// The adjoined element is a nonzero square in the current field.
    SquareEquality,
    /// The adjoined element is a non-square: a genuine quadratic extension.
    NonSquareExtension,
    /// The adjoined element specialized to zero (degenerate draw).
    Zero,
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerTrial {
    pub a: u64,
    pub b: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    /// Whether alpha A^2 + beta B^2 factors into linear forms mod p
    /// (equivalently, -alpha*beta is a square): the reducibility reading of
    /// the hyperplane condition. Both behaviors are reported, none enforced.
    pub alpha_beta_reducible: bool,
    /// Outcomes for the five stages adjoining C, X, Y, Z, U.
    pub stages: [StageOutcome; 5],
    /// Field degree over F_p after the walk (1 or 2).
    pub final_degree: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerReport {
    pub p: u64,
    pub trials: Vec<TowerTrial>,
    /// Per-stage tallies of (square/equality, non-square/extension, zero).
    pub tallies: [(u32, u32, u32); 5],
}

/// The adjoined elements, in stage order, for a given specialization.
/// All five lie in F_p: s1 = (alpha a^2 + beta b^2)/gamma, s2 = b^2 + s1,
/// s3 = s1 + a^2, s4 = a^2 + b^2, s5 = a^2 + b^2 + s1.
pub fn tower_elements(f: &PrimeField, a: u64, b: u64, alpha: u64, beta: u64, gamma: u64) -> [u64; 5] {
    use crate::scalar::Field;
    let a2 = f.mul(&a, &a);
    let b2 = f.mul(&b, &b);
    let s1 = f
        .div(&f.add(&f.mul(&alpha, &a2), &f.mul(&beta, &b2)), &gamma)
        .expect("gamma nonzero");
    let s2 = f.add(&b2, &s1);
    let s3 = f.add(&s1, &a2);
    let s4 = f.add(&a2, &b2);
    let s5 = f.add(&s4, &s1);
    [s1, s2, s3, s4, s5]
}

pub fn tower_splitting_evidence(
    p: u64,
    trials: u32,
    seed: u64,
) -> Result<TowerReport, GroebnerError> {
    use crate::scalar::Field;
    if p == 2 {
        return Err(GroebnerError::BadPrime(p));
    }
    let f = PrimeField::new(p).map_err(|_| GroebnerError::BadPrime(p))?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut out = TowerReport { p, trials: Vec::new(), tallies: [(0, 0, 0); 5] };
    let nonzero = |rng: &mut ChaCha20Rng| -> u64 {
        loop {
            let x = rng.gen_range(1..p);
            if x != 0 {
                return x;
            }
        }
    };
    for _ in 0..trials {
        let a = nonzero(&mut rng);
        let b = nonzero(&mut rng);
        let alpha = nonzero(&mut rng);
        let beta = nonzero(&mut rng);
        let gamma = nonzero(&mut rng);
        let elems = tower_elements(&f, a, b, alpha, beta, gamma);
        let minus_ab = f.neg(&f.mul(&alpha, &beta));
        let reducible = f.is_square(minus_ab)?;
        let mut degree = 1u32;
        let mut stages = [StageOutcome::SquareEquality; 5];
        for (i, s) in elems.iter().enumerate() {
            let outcome = if *s == 0 {
                StageOutcome::Zero
            } else if degree == 2 {
                // every element of F_p has a root in F_{p^2}
                StageOutcome::SquareEquality
            } else if f.is_square(*s)? {
                StageOutcome::SquareEquality
            } else {
                degree = 2;
                StageOutcome::NonSquareExtension
            };
            stages[i] = outcome;
            match outcome {
                StageOutcome::SquareEquality => out.tallies[i].0 += 1,
                StageOutcome::NonSquareExtension => out.tallies[i].1 += 1,
                StageOutcome::Zero => out.tallies[i].2 += 1,
            }
        }
        out.trials.push(TowerTrial {
            a,
            b,
            alpha,
            beta,
            gamma,
            alpha_beta_reducible: reducible,
            stages,
            final_degree: degree,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn bad_prime() {
        assert!(matches!(tower_splitting_evidence(2, 5, 0), Err(GroebnerError::BadPrime(2))));
        assert!(matches!(tower_splitting_evidence(9, 5, 0), Err(GroebnerError::BadPrime(9))));
    }

    #[test]
    fn empty_report() {
        let r = tower_splitting_evidence(10007, 0, 0).unwrap();
        assert!(r.trials.is_empty());
        assert_eq!(r.tallies, [(0, 0, 0); 5]);
    }

    #[test]
    fn tallies_rechecked_by_exhaustive_enumeration() {
        let p = 101u64;
        let f = PrimeField::new(p).unwrap();
        let r = tower_splitting_evidence(p, 20, 42).unwrap();
        // squares of F_p by brute force
        let squares: std::collections::BTreeSet<u64> = (0..p).map(|x| (x * x) % p).collect();
        for t in &r.trials {
            let elems = tower_elements(&f, t.a, t.b, t.alpha, t.beta, t.gamma);
            let mut degree = 1;
            for (i, s) in elems.iter().enumerate() {
                let expected = if *s == 0 {
                    StageOutcome::Zero
                } else if degree == 1 {
                    if squares.contains(s) {
                        StageOutcome::SquareEquality
                    } else {
                        degree = 2;
                        StageOutcome::NonSquareExtension
                    }
                } else {
                    // exhaustive check in the quadratic quotient F_p[w]/(w^2 - d),
                    // d the first non-square adjoined: (u + v w)^2 = u^2 + d v^2 + 2uv w
                    let d = elems[..i]
                        .iter()
                        .find(|e| **e != 0 && !squares.contains(*e))
                        .copied()
                        .expect("degree 2 implies an earlier non-square");
                    let mut found = false;
                    'search: for u in 0..p {
                        for v in 0..p {
                            let re = (u * u + d * v * v) % p;
                            let im = (2 * u * v) % p;
                            if im == 0 && re == *s {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                    assert!(found, "F_p element without root in F_p^2");
                    StageOutcome::SquareEquality
                };
                assert_eq!(t.stages[i], expected, "trial {t:?} stage {i}");
            }
            assert_eq!(t.final_degree, degree);
            // reducibility reading: -alpha*beta a square
            let m = f.neg(&f.mul(&t.alpha, &t.beta));
            assert_eq!(t.alpha_beta_reducible, squares.contains(&m));
        }
    }
}
