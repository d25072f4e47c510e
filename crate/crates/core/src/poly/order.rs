//! Monomial orders. `compare(a, b) == Greater` means `a` is closer to the
//! leading end. Global orders have 1 smallest; the local order has 1 largest.
//!
//! Every order takes a `ranking`: variable indices from most significant to
//! least. The engine's concrete orders like C < U < X < Y < Z are expressed
//! by putting Z first in the ranking and C last.

use super::{Monomial, PolyError};
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    /// Pure lexicographic along the ranking.
    Lex { ranking: Vec<usize> },
    /// Total degree first, reverse lexicographic tie-break along the ranking.
    GrevLex { ranking: Vec<usize> },
    /// Local order: smaller total degree wins, lex tie-break. 1 is largest.
    NegGradedLex { ranking: Vec<usize> },
    /// Elimination order: grevlex on the `eliminate` block dominates, then
    /// grevlex on the `keep` block.
    Block { eliminate: Vec<usize>, keep: Vec<usize> },
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex { ranking: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder::GrevLex { ranking: (0..nvars).collect() }
    }

    pub fn neg_graded_lex(nvars: usize) -> Self {
        MonomialOrder::NegGradedLex { ranking: (0..nvars).collect() }
    }

    /// True when 1 is the smallest monomial (Buchberger territory).
    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::NegGradedLex { .. })
    }

    pub fn nvars(&self) -> usize {
        match self {
            MonomialOrder::Lex { ranking }
            | MonomialOrder::GrevLex { ranking }
            | MonomialOrder::NegGradedLex { ranking } => ranking.len(),
            MonomialOrder::Block { eliminate, keep } => eliminate.len() + keep.len(),
        }
    }

    pub fn validate(&self) -> Result<(), PolyError> {
        let n = self.nvars();
        let mut seen = vec![false; n];
        let idxs: Vec<usize> = match self {
            MonomialOrder::Lex { ranking }
            | MonomialOrder::GrevLex { ranking }
            | MonomialOrder::NegGradedLex { ranking } => ranking.clone(),
            MonomialOrder::Block { eliminate, keep } => {
                eliminate.iter().chain(keep.iter()).copied().collect()
            }
        };
        for i in idxs {
            if i >= n || seen[i] {
                return Err(PolyError::RingMismatch(
                    "order ranking is not a permutation of the variables".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(())
    }

    /// Total order on same-ring monomials; `Greater` means `a` leads.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex { ranking } => lex_cmp(a, b, ranking),
            MonomialOrder::GrevLex { ranking } => grevlex_cmp(a, b, ranking),
            MonomialOrder::NegGradedLex { ranking } => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Less => Ordering::Greater,
                    Ordering::Greater => Ordering::Less,
                    Ordering::Equal => lex_cmp(a, b, ranking),
                }
            }
            MonomialOrder::Block { eliminate, keep } => {
                match grevlex_cmp(a, b, eliminate) {
                    Ordering::Equal => grevlex_cmp(a, b, keep),
                    ord => ord,
                }
            }
        }
    }

    /// Checked comparison for callers holding monomials of unknown origin.
    pub fn compare_checked(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            return Err(PolyError::RingMismatch("monomial arity differs from order".into()));
        }
        Ok(self.compare(a, b))
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial, ranking: &[usize]) -> Ordering {
    for &i in ranking {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Graded reverse lex restricted to the listed variables: higher restricted
/// degree wins; on ties the last-ranked differing variable decides, smaller
/// exponent winning.
fn grevlex_cmp(a: &Monomial, b: &Monomial, ranking: &[usize]) -> Ordering {
    let da: u32 = ranking.iter().map(|&i| a.exp(i) as u32).sum();
    let db: u32 = ranking.iter().map(|&i| b.exp(i) as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for &i in ranking.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_with_ranking() {
        // variables (C, U, X, Y, Z) with C < U < X < Y < Z: ranking Z first
        let ord = MonomialOrder::Lex { ranking: vec![4, 3, 2, 1, 0] };
        let z2 = m(&[0, 0, 0, 0, 2]);
        let y2 = m(&[0, 0, 0, 2, 0]);
        assert_eq!(ord.compare(&z2, &y2), Ordering::Greater);
        assert_eq!(ord.compare(&y2, &y2), Ordering::Equal);
        // X^2 - B^2 - C^2 style: X^2 beats C^2
        let x2 = m(&[0, 0, 2, 0, 0]);
        let c2 = m(&[2, 0, 0, 0, 0]);
        assert_eq!(ord.compare(&x2, &c2), Ordering::Greater);
    }

    #[test]
    fn grevlex_standard() {
        // x > y > z
        let ord = MonomialOrder::grevlex(3);
        // x^2 z vs x y^2: equal degree, z-exponent differs, smaller z wins
        let x2z = m(&[2, 0, 1]);
        let xy2 = m(&[1, 2, 0]);
        assert_eq!(ord.compare(&xy2, &x2z), Ordering::Greater);
        // degree dominates
        let x3 = m(&[3, 0, 0]);
        let y = m(&[0, 1, 0]);
        assert_eq!(ord.compare(&x3, &y), Ordering::Greater);
    }

    #[test]
    fn local_order_constant_leads() {
        let ord = MonomialOrder::neg_graded_lex(2);
        let one = m(&[0, 0]);
        let x = m(&[1, 0]);
        assert_eq!(ord.compare(&one, &x), Ordering::Greater);
    }

    #[test]
    fn block_eliminates() {
        // eliminate {x}, keep {y}: any monomial with x beats any without
        let ord = MonomialOrder::Block { eliminate: vec![0], keep: vec![1] };
        let x = m(&[1, 0]);
        let y5 = m(&[0, 5]);
        assert_eq!(ord.compare(&x, &y5), Ordering::Greater);
    }

    #[test]
    fn multiplicative_compatibility() {
        let orders = vec![
            MonomialOrder::lex(3),
            MonomialOrder::grevlex(3),
            MonomialOrder::neg_graded_lex(3),
            MonomialOrder::Block { eliminate: vec![0], keep: vec![1, 2] },
        ];
        let mons: Vec<Monomial> = vec![
            m(&[0, 0, 0]),
            m(&[1, 0, 0]),
            m(&[0, 2, 1]),
            m(&[1, 1, 1]),
            m(&[3, 0, 2]),
            m(&[0, 0, 4]),
        ];
        for ord in &orders {
            for a in &mons {
                for b in &mons {
                    for c in &mons {
                        let ab = ord.compare(a, b);
                        let ac_bc = ord.compare(&a.mul(c), &b.mul(c));
                        assert_eq!(ab, ac_bc, "order {:?} not multiplicative", ord);
                    }
                }
            }
        }
    }
}
