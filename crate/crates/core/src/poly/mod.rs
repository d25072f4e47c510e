//! Sparse multivariate polynomials over any [`Field`], with the monomial
//! orders the engine needs (lex with a variable ranking, graded reverse lex,
//! the local negative-graded-lex order, and block elimination orders).
//!
//! Terms are stored sorted by the ring's active order, leading term first,
//! so leading-term access is constant time. Variable sets are fixed per
//! ring; moving between rings is always explicit.

mod arith;
mod calculus;
pub mod order;
pub mod parse;
mod ring;

pub use arith::PrimitivePart;
pub use calculus::jacobian;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use ring::{PolyRing, RingRc};

use crate::scalar::Field;
use std::cmp::Ordering;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// Exponent vector; one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial exponent overflow")
    }

    /// self / other when other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree < bound, sorted by (degree, exponents).
    pub fn all_below(nvars: usize, bound: u32) -> Vec<Monomial> {
        fn rec(v: usize, remaining: u32, exps: &mut Vec<u16>, nvars: usize, out: &mut Vec<Monomial>) {
            if v == nvars {
                out.push(Monomial::new(exps.clone()));
                return;
            }
            for e in 0..=remaining {
                exps[v] = e as u16;
                rec(v + 1, remaining - e, exps, nvars, out);
            }
            exps[v] = 0;
        }
        if bound == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut exps = vec![0u16; nvars];
        rec(0, bound - 1, &mut exps, nvars, &mut out);
        out.sort_by_key(|m| (m.total_degree(), m.exps().to_vec()));
        out
    }
}

/// Sparse polynomial: terms sorted descending by the ring's order, no zero
/// coefficients stored.
#[derive(Debug, Clone)]
pub struct Poly<K: Field> {
    ring: RingRc<K>,
    terms: Vec<(Monomial, K::Elt)>,
}

impl<K: Field> PartialEq for Poly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Poly<K> {
    pub fn zero(ring: &RingRc<K>) -> Self {
        Poly { ring: Arc::clone(ring), terms: Vec::new() }
    }

    pub fn one(ring: &RingRc<K>) -> Self {
        Self::constant(ring, ring.coeff.one())
    }

    pub fn constant(ring: &RingRc<K>, c: K::Elt) -> Self {
        if ring.coeff.is_zero(&c) {
            return Self::zero(ring);
        }
        Poly { ring: Arc::clone(ring), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn var(ring: &RingRc<K>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Poly {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.coeff.one())],
        }
    }

    /// Build from unsorted (monomial, coefficient) pairs: combines duplicates,
    /// drops zeros, sorts by the ring order.
    pub fn from_terms(ring: &RingRc<K>, pairs: Vec<(Monomial, K::Elt)>) -> Self {
        let mut map: std::collections::HashMap<Monomial, K::Elt> = std::collections::HashMap::new();
        for (m, c) in pairs {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = ring.coeff.add(e.get(), &c);
                    if ring.coeff.is_zero(&s) {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !ring.coeff.is_zero(&c) {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, K::Elt)> = map.into_iter().collect();
        terms.sort_by(|(a, _), (b, _)| ring.order.compare(b, a));
        Poly { ring: Arc::clone(ring), terms }
    }

    pub fn ring(&self) -> &RingRc<K> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, K::Elt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading monomial under the ring's order.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Leading coefficient.
    pub fn lc(&self) -> Option<&K::Elt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn lt(&self) -> Option<(&Monomial, &K::Elt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Smallest total degree among terms (the local-order side of interest).
    pub fn min_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> K::Elt {
        for (mm, c) in &self.terms {
            if mm == m {
                return c.clone();
            }
        }
        self.ring.coeff.zero()
    }

    /// Re-sorts this polynomial into a ring with the same variables (used for
    /// explicit order changes). Errors when the variable lists differ.
    pub fn into_ring(&self, target: &RingRc<K>) -> Result<Poly<K>, PolyError> {
        if target.vars != self.ring.vars || target.coeff != self.ring.coeff {
            return Err(PolyError::RingMismatch(
                "order change requires identical variables and coefficients".into(),
            ));
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|(a, _), (b, _)| target.order.compare(b, a));
        Ok(Poly { ring: Arc::clone(target), terms })
    }

    pub(crate) fn from_sorted_unchecked(ring: RingRc<K>, terms: Vec<(Monomial, K::Elt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly { ring, terms }
    }

    /// Drop every term of total degree >= bound (the image in R/m^bound for
    /// local computations).
    pub fn truncate_above(&self, bound: u32) -> Poly<K> {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.total_degree() < bound)
            .cloned()
            .collect();
        Poly { ring: Arc::clone(&self.ring), terms }
    }
}
