//! Ring descriptors: ordered variable names, a coefficient field context and
//! the active monomial order. Shared behind `Arc`; polynomials in different
//! ring values never mix silently.

use super::{MonomialOrder, PolyError};
use crate::scalar::Field;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<K: Field> {
    pub coeff: K,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

pub type RingRc<K> = Arc<PolyRing<K>>;

impl<K: Field> PolyRing<K> {
    pub fn new(coeff: K, vars: &[&str], order: MonomialOrder) -> Result<RingRc<K>, PolyError> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        if order.nvars() != vars.len() {
            return Err(PolyError::RingMismatch("order arity differs from variable count".into()));
        }
        order.validate()?;
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(PolyError::RingMismatch("duplicate variable names".into()));
        }
        Ok(Arc::new(PolyRing { coeff, vars, order }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Structural ring equality (coefficients, variables, order).
    pub fn same_ring(&self, other: &Self) -> bool {
        self.coeff == other.coeff && self.vars == other.vars && self.order == other.order
    }

    /// Same variables and coefficients, any order.
    pub fn same_vars(&self, other: &Self) -> bool {
        self.coeff == other.coeff && self.vars == other.vars
    }

    /// A copy of this ring under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRc<K>, PolyError> {
        if order.nvars() != self.nvars() {
            return Err(PolyError::RingMismatch("order arity differs from variable count".into()));
        }
        order.validate()?;
        Ok(Arc::new(PolyRing { coeff: self.coeff.clone(), vars: self.vars.clone(), order }))
    }

    /// The ring without one variable, same order kind, ranking reindexed.
    pub fn without_var(&self, idx: usize) -> Result<RingRc<K>, PolyError> {
        if idx >= self.nvars() {
            return Err(PolyError::UnknownVariable(format!("#{idx}")));
        }
        let vars: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let reindex = |ranking: &[usize]| -> Vec<usize> {
            ranking
                .iter()
                .filter(|&&i| i != idx)
                .map(|&i| if i > idx { i - 1 } else { i })
                .collect()
        };
        let order = match &self.order {
            MonomialOrder::Lex { ranking } => MonomialOrder::Lex { ranking: reindex(ranking) },
            MonomialOrder::GrevLex { ranking } => {
                MonomialOrder::GrevLex { ranking: reindex(ranking) }
            }
            MonomialOrder::NegGradedLex { ranking } => {
                MonomialOrder::NegGradedLex { ranking: reindex(ranking) }
            }
            MonomialOrder::Block { eliminate, keep } => {
                MonomialOrder::Block { eliminate: reindex(eliminate), keep: reindex(keep) }
            }
        };
        PolyRing::new(self.coeff.clone(), &vars, order)
    }
}
