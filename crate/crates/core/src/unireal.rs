//! Exact univariate real-root machinery over Q: squarefree parts, Sturm
//! chains and real-root counts. No floating point: signs are evaluated in
//! exact rational arithmetic, signs at infinity via leading coefficients.

use crate::groebner::{univar, SolvedSystem};
use crate::scalar::{Rat, QQ};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnirealError {
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Dense univariate polynomial over Q, ascending coefficients.
pub type UPoly = Vec<Rat>;

/// f / gcd(f, f'), monic.
pub fn squarefree_part(f: &UPoly) -> Result<UPoly, UnirealError> {
    if f.iter().all(|c| c.is_zero()) {
        return Err(UnirealError::ZeroPolynomial);
    }
    Ok(univar::squarefree_part(&QQ, f))
}

/// Signed remainder chain starting with f and f'; consecutive remainders
/// carry flipped signs. For squarefree f the last element is a nonzero
/// constant.
#[derive(Debug, Clone)]
pub struct SturmChain {
    pub chain: Vec<UPoly>,
    /// True when the input was not squarefree and the squarefree part was
    /// taken automatically.
    pub took_squarefree_part: bool,
}

impl SturmChain {
    pub fn new(f: &UPoly) -> Result<Self, UnirealError> {
        if f.iter().all(|c| c.is_zero()) {
            return Err(UnirealError::ZeroPolynomial);
        }
        let sqf = univar::squarefree_part(&QQ, f);
        let took = univar::degree::<QQ>(&sqf) != univar::degree::<QQ>(&univar::trim(&QQ, f.clone()));
        let mut chain = vec![sqf.clone(), univar::deriv(&QQ, &sqf)];
        while let Some(last) = chain.last() {
            if last.is_empty() {
                chain.pop();
                break;
            }
            if univar::degree::<QQ>(last) == Some(0) {
                break;
            }
            let n = chain.len();
            let r = univar::rem(&QQ, &chain[n - 2], &chain[n - 1]);
            let neg: UPoly = r.iter().map(|c| -c).collect();
            if neg.is_empty() {
                break;
            }
            chain.push(neg);
        }
        Ok(SturmChain { chain, took_squarefree_part: took })
    }

    fn variations<FSign>(&self, sign_of: FSign) -> u32
    where
        FSign: Fn(&UPoly) -> i32,
    {
        let signs: Vec<i32> = self.chain.iter().map(sign_of).filter(|s| *s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count() as u32
    }

    fn variations_at(&self, x: &Rat) -> u32 {
        self.variations(|p| rat_sign(&univar::eval(&QQ, p, x)))
    }

    fn variations_at_neg_inf(&self) -> u32 {
        self.variations(|p| sign_at_infinity(p, true))
    }

    fn variations_at_pos_inf(&self) -> u32 {
        self.variations(|p| sign_at_infinity(p, false))
    }
}

fn rat_sign(a: &Rat) -> i32 {
    if a.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_infinity(p: &UPoly, negative: bool) -> i32 {
    match univar::degree::<QQ>(p) {
        None => 0,
        Some(d) => {
            let lead = rat_sign(&p[d]);
            if negative && d % 2 == 1 {
                -lead
            } else {
                lead
            }
        }
    }
}

/// Where to count roots.
#[derive(Debug, Clone, PartialEq)]
pub enum RootWindow {
    AllReals,
    /// Open interval (a, b); endpoints that happen to be roots are excluded.
    Open(Rat, Rat),
}

/// Exact number of distinct real roots via Sturm sign-variation differences.
/// Non-squarefree input is replaced by its squarefree part (reported on the
/// chain).
pub fn count_real_roots(f: &UPoly, window: &RootWindow) -> Result<u32, UnirealError> {
    let chain = SturmChain::new(f)?;
    if univar::degree::<QQ>(&chain.chain[0]) == Some(0) {
        return Ok(0);
    }
    match window {
        RootWindow::AllReals => Ok(chain.variations_at_neg_inf() - chain.variations_at_pos_inf()),
        RootWindow::Open(a, b) => {
            if a >= b {
                return Ok(0);
            }
            // V(a) - V(b) counts roots in (a, b]; drop b when it is a root
            let mut n = chain.variations_at(a) as i64 - chain.variations_at(b) as i64;
            let fb = univar::eval(&QQ, &chain.chain[0], b);
            if fb.is_zero() {
                n -= 1;
            }
            Ok(n.max(0) as u32)
        }
    }
}

/// 1 + max |a_i / a_n|: every real root lies within (-B, B).
pub fn cauchy_bound(f: &UPoly) -> Result<Rat, UnirealError> {
    let f = univar::trim(&QQ, f.clone());
    let d = univar::degree::<QQ>(&f).ok_or(UnirealError::ZeroPolynomial)?;
    let lead = f[d].clone();
    let mut best = Rat::zero();
    for c in &f[..d] {
        let q = (c / &lead).abs();
        if q > best {
            best = q;
        }
    }
    Ok(best + Rat::from_integer(1.into()))
}

/// Real-solution count of a shape-position system with a real-coefficient
/// change of variables: in shape position every coordinate is a polynomial
/// image of the eliminant variable, so a solution is real exactly when the
/// corresponding eliminant root is, and the count is the number of real
/// roots of the squarefree eliminant.
pub fn real_solution_count(sys: &SolvedSystem<QQ>) -> Result<u32, UnirealError> {
    if sys.distinct_count == 0 {
        return Ok(0);
    }
    count_real_roots(&sys.squarefree_eliminant, &RootWindow::AllReals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> UPoly {
        v.iter().map(|&n| Rat::from_integer(BigInt::from(n))).collect()
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&q(&[0, 0, 1])).unwrap(), q(&[0, 1]));
        assert_eq!(squarefree_part(&q(&[-1, 0, 1])).unwrap(), q(&[-1, 0, 1]));
        assert_eq!(squarefree_part(&q(&[])), Err(UnirealError::ZeroPolynomial));
    }

    #[test]
    fn count_examples() {
        // x^3 - x: three real roots
        assert_eq!(count_real_roots(&q(&[0, -1, 0, 1]), &RootWindow::AllReals).unwrap(), 3);
        // x^2 + 1: none
        assert_eq!(count_real_roots(&q(&[1, 0, 1]), &RootWindow::AllReals).unwrap(), 0);
        // x^2 - 2 on (0, 2): one
        let w = RootWindow::Open(Rat::zero(), Rat::from_integer(2.into()));
        assert_eq!(count_real_roots(&q(&[-2, 0, 1]), &w).unwrap(), 1);
    }

    #[test]
    fn count_within_cauchy_bound_matches_all_reals() {
        for f in [q(&[0, -1, 0, 1]), q(&[-2, 0, 1]), q(&[6, -5, -2, 1]), q(&[1, 0, 1])] {
            let b = cauchy_bound(&f).unwrap();
            let w = RootWindow::Open(-b.clone(), b.clone());
            assert_eq!(
                count_real_roots(&f, &w).unwrap(),
                count_real_roots(&f, &RootWindow::AllReals).unwrap()
            );
        }
    }

    #[test]
    fn multiplicities_do_not_inflate_count() {
        // (x-1)^3 (x+2): two distinct real roots
        let f = q(&[-2, 5, -3, -1, 1]);
        let chain = SturmChain::new(&f).unwrap();
        assert!(chain.took_squarefree_part);
        assert_eq!(count_real_roots(&f, &RootWindow::AllReals).unwrap(), 2);
    }
}
