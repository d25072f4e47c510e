//! Truncated-jet dimension oracle: dim K[x]/(J + m^N) for the Jacobian
//! ideal J, computed by exact sparse Gaussian elimination over Q on the
//! monomial multiples of the partials, truncated below degree N. When the
//! Milnor number is finite the sequence stabilizes; the oracle stops at the
//! first three equal consecutive values, at the cap, or at the size budget.

use super::EulerError;
use crate::poly::{Monomial, Poly};
use crate::scalar::{Rat, QQ};
use num_traits::Zero;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, Serialize)]
pub struct JetConfig {
    /// Hard cap on the truncation order N.
    pub cap: u32,
    /// Abort when the jet space exceeds this many monomials.
    pub max_monomials: usize,
}

impl Default for JetConfig {
    fn default() -> Self {
        JetConfig { cap: 40, max_monomials: 60_000 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JetOutcome {
    /// (N, dim of the order-N jet quotient) in increasing N.
    pub dims: Vec<(u32, usize)>,
    /// The stabilized dimension, when three consecutive values agreed.
    pub stabilized: Option<usize>,
    /// True when the cap or the size budget stopped the run first.
    pub capped: bool,
}

fn jet_dim(partials: &[Poly<QQ>], nvars: usize, n_bound: u32, cfg: &JetConfig) -> Option<usize> {
    let cols = Monomial::all_below(nvars, n_bound);
    if cols.len() > cfg.max_monomials {
        return None;
    }
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // rows: multiplier * partial truncated below degree n_bound,
    // in deterministic (partial, multiplier) order
    let mut rows: Vec<BTreeMap<usize, Rat>> = Vec::new();
    for p in partials {
        if p.is_zero() {
            continue;
        }
        let mind = p.min_degree();
        if mind >= n_bound {
            continue;
        }
        for mult in Monomial::all_below(nvars, n_bound - mind) {
            let mut row: BTreeMap<usize, Rat> = BTreeMap::new();
            for (m, c) in p.terms() {
                let tot = m.mul(&mult);
                if tot.total_degree() < n_bound {
                    let i = index[&tot];
                    let e = row.entry(i).or_insert_with(Rat::zero);
                    *e = &*e + c;
                    if e.is_zero() {
                        row.remove(&i);
                    }
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }

    // sparse elimination; pivots keyed by column
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&c, _)) = row.iter().next() else { break };
            match pivots.get(&c) {
                Some(prow) => {
                    let factor = row[&c].clone();
                    for (j, v) in prow {
                        let delta = &factor * v;
                        let e = row.entry(*j).or_insert_with(Rat::zero);
                        *e = &*e - &delta;
                        if e.is_zero() {
                            row.remove(j);
                        }
                    }
                }
                None => {
                    let inv = row[&c].recip();
                    let normalized: BTreeMap<usize, Rat> =
                        row.iter().map(|(j, v)| (*j, v * &inv)).collect();
                    pivots.insert(c, normalized);
                    break;
                }
            }
        }
    }
    Some(cols.len() - pivots.len())
}

/// Dimension sequence of the jet quotients of the Jacobian ideal of f.
pub fn jet_dimension_sequence(f: &Poly<QQ>, cfg: &JetConfig) -> Result<JetOutcome, EulerError> {
    let nvars = f.ring().nvars();
    let mut partials = Vec::with_capacity(nvars);
    for v in 0..nvars {
        partials.push(f.derivative(v)?);
    }
    let mut dims: Vec<(u32, usize)> = Vec::new();
    let mut capped = false;
    let mut stabilized = None;
    for n_bound in 2..=cfg.cap {
        match jet_dim(&partials, nvars, n_bound, cfg) {
            None => {
                capped = true;
                break;
            }
            Some(d) => {
                dims.push((n_bound, d));
                let k = dims.len();
                if k >= 3 && dims[k - 1].1 == dims[k - 2].1 && dims[k - 2].1 == dims[k - 3].1 {
                    stabilized = Some(d);
                    break;
                }
            }
        }
    }
    if stabilized.is_none() && !capped {
        capped = true; // ran out of cap without stabilizing
    }
    Ok(JetOutcome { dims, stabilized, capped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};

    fn mu_jet(f: &str, vars: &[&str]) -> Option<usize> {
        let r = PolyRing::new(QQ, vars, MonomialOrder::grevlex(vars.len())).unwrap();
        let p = parse_poly(f, &r).unwrap();
        jet_dimension_sequence(&p, &JetConfig::default()).unwrap().stabilized
    }

    #[test]
    fn morse_and_a_k() {
        assert_eq!(mu_jet("x^2 + y^2 + z^2", &["x", "y", "z"]), Some(1));
        assert_eq!(mu_jet("x^4 + y^2", &["x", "y"]), Some(3));
        assert_eq!(mu_jet("x^3 + y^3 + z^3", &["x", "y", "z"]), Some(8));
    }

    #[test]
    fn brieskorn_products() {
        for (a, b, c) in [(2u32, 3, 4), (3, 3, 3), (2, 2, 2)] {
            let f = format!("x^{a} + y^{b} + z^{c}");
            let expect = ((a - 1) * (b - 1) * (c - 1)) as usize;
            assert_eq!(mu_jet(&f, &["x", "y", "z"]), Some(expect), "{f}");
        }
    }

    #[test]
    fn infinite_mu_hits_the_cap() {
        // x^2 y has a non-isolated critical locus
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::grevlex(2)).unwrap();
        let p = parse_poly("x^2*y", &r).unwrap();
        let out =
            jet_dimension_sequence(&p, &JetConfig { cap: 12, max_monomials: 2000 }).unwrap();
        assert!(out.capped);
        assert_eq!(out.stabilized, None);
    }
}
