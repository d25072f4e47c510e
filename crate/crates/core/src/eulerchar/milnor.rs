//! Milnor numbers at the origin by two independent routes: the dimension of
//! the local Jacobian-ideal quotient via a Mora standard basis, and the
//! truncated-jet oracle. Both outcomes are recorded; when both complete
//! they must agree.

use super::jet::{jet_dimension_sequence, JetConfig, JetOutcome};
use super::EulerError;
use crate::groebner::{
    mora_standard_basis_trunc, quotient_dimension, truncated_staircase, Budget, GroebnerError,
    Ideal,
};
use crate::poly::{MonomialOrder, Poly};
use crate::scalar::{Field, QQ};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct MilnorConfig {
    /// Mora reduction-step budget.
    pub budget: u64,
    pub jet: JetConfig,
    /// Skip the jet oracle entirely (used when only Mora is wanted).
    pub run_jet: bool,
    /// Cap on the highest-corner truncation degree escalation.
    pub max_truncation: u32,
}

impl Default for MilnorConfig {
    fn default() -> Self {
        MilnorConfig {
            budget: 10_000_000,
            jet: JetConfig::default(),
            run_jet: true,
            max_truncation: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MuValue {
    Finite(usize),
    Infinite,
    /// Neither method completed within its budget.
    BudgetExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct MoraSide {
    pub complete: bool,
    pub steps: u64,
    pub basis_size: usize,
    /// Local quotient dimension when the run completed and is finite.
    pub mu: Option<usize>,
    pub finite: Option<bool>,
    /// The certified truncation degree used, when the highest-corner route
    /// settled the dimension.
    pub truncation: Option<u32>,
    /// Staircase monomials (printed) when finite and small.
    pub staircase_sample: Vec<String>,
}

/// Two-phase Mora: a short untruncated run first (settles small cases and
/// detects infinite local dimension exactly), then escalating
/// highest-corner runs: compute a standard basis of J + m^D for growing D;
/// once the staircase's maximal degree is at most D - 2, every truncated
/// leading monomial of degree below D is a true leading monomial of J, the
/// staircases coincide, and the dimension is exact.
fn run_mora_certified(
    ideal: &Ideal<QQ>,
    cfg: &MilnorConfig,
    local_ring: &crate::poly::RingRc<QQ>,
) -> Result<MoraSide, EulerError> {
    // phase 1: untruncated with a small slice of the budget (settles easy
    // cases, detects infinite dimension; pathological coefficient growth is
    // what the truncated rounds below exist for)
    let slice = (cfg.budget / 10).clamp(1, 500);
    let mut phase1 = Budget::new(slice);
    match mora_standard_basis_trunc(ideal, &mut phase1, None) {
        Err(GroebnerError::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e.into()),
        Ok(out) if !out.complete => {}
        Ok(out) => {
            let stair = quotient_dimension(&out.basis);
            let sample: Vec<String> = if stair.finite && stair.monomials.len() <= 64 {
                stair
                    .monomials
                    .iter()
                    .map(|m| {
                        let terms = vec![(m.clone(), QQ.one())];
                        Poly::from_terms(local_ring, terms).to_string()
                    })
                    .collect()
            } else {
                Vec::new()
            };
            return Ok(MoraSide {
                complete: true,
                steps: out.steps,
                basis_size: out.basis.elements.len(),
                mu: stair.dimension(),
                finite: Some(stair.finite),
                truncation: None,
                staircase_sample: sample,
            });
        }
    }

    let mut budget = Budget::new(cfg.budget);
    let min_lead: u32 = ideal
        .gens()
        .iter()
        .map(|g| g.lm().map(|m| m.total_degree()).unwrap_or(0))
        .max()
        .unwrap_or(2);
    let mut trunc = (2 * min_lead).max(6);
    let mut last: Option<MoraSide> = None;
    loop {
        match mora_standard_basis_trunc(ideal, &mut budget, Some(trunc)) {
            Err(GroebnerError::BudgetExceeded { steps }) => {
                return Ok(last.unwrap_or(MoraSide {
                    complete: false,
                    steps,
                    basis_size: 0,
                    mu: None,
                    finite: None,
                    truncation: Some(trunc),
                    staircase_sample: Vec::new(),
                }));
            }
            Err(e) => return Err(e.into()),
            Ok(out) => {
                if !out.complete {
                    return Ok(MoraSide {
                        complete: false,
                        steps: out.steps,
                        basis_size: out.basis.elements.len(),
                        mu: None,
                        finite: None,
                        truncation: Some(trunc),
                        staircase_sample: Vec::new(),
                    });
                }
                let stair = truncated_staircase(&out.basis, trunc);
                let maxdeg = stair.monomials.iter().map(|m| m.total_degree()).max().unwrap_or(0);
                if maxdeg + 2 <= trunc {
                    // certificate holds: the staircase is the true one
                    let sample: Vec<String> = if stair.monomials.len() <= 64 {
                        stair
                            .monomials
                            .iter()
                            .map(|m| {
                                let terms = vec![(m.clone(), QQ.one())];
                                Poly::from_terms(local_ring, terms).to_string()
                            })
                            .collect()
                    } else {
                        Vec::new()
                    };
                    return Ok(MoraSide {
                        complete: true,
                        steps: out.steps,
                        basis_size: out.basis.elements.len(),
                        mu: Some(stair.monomials.len()),
                        finite: Some(true),
                        truncation: Some(trunc),
                        staircase_sample: sample,
                    });
                }
                last = Some(MoraSide {
                    complete: false,
                    steps: out.steps,
                    basis_size: out.basis.elements.len(),
                    mu: None,
                    finite: None,
                    truncation: Some(trunc),
                    staircase_sample: Vec::new(),
                });
                trunc += (trunc / 2).max(4);
                if trunc > cfg.max_truncation {
                    return Ok(last.expect("at least one truncated run recorded"));
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MilnorResult {
    pub mora: MoraSide,
    pub jet: Option<JetOutcome>,
    pub mu: MuValue,
    /// Some(true/false) when both methods produced a value.
    pub methods_agree: Option<bool>,
}

/// Milnor number of f at the origin. Requires f(0) = 0.
pub fn milnor_number(f: &Poly<QQ>, cfg: &MilnorConfig) -> Result<MilnorResult, EulerError> {
    let origin = vec![QQ.zero(); f.ring().nvars()];
    if !QQ.is_zero(&f.evaluate(&origin)) {
        return Err(EulerError::NotVanishingAtOrigin);
    }
    let n = f.ring().nvars();
    let local_ring = f.ring().with_order(MonomialOrder::neg_graded_lex(n))?;
    let f_local = f.into_ring(&local_ring)?;
    let mut gens = Vec::with_capacity(n);
    for v in 0..n {
        let d = f_local.derivative(v)?;
        if !d.is_zero() {
            gens.push(d);
        }
    }
    let mora = if gens.is_empty() {
        MoraSide {
            complete: true,
            steps: 0,
            basis_size: 0,
            mu: None,
            finite: Some(false),
            truncation: None,
            staircase_sample: Vec::new(),
        }
    } else {
        let ideal = Ideal::new(&local_ring, gens)?;
        run_mora_certified(&ideal, cfg, &local_ring)?
    };

    let jet = if cfg.run_jet { Some(jet_dimension_sequence(f, &cfg.jet)?) } else { None };

    let jet_mu = jet.as_ref().and_then(|j| j.stabilized);
    let mora_mu = mora.mu;
    let methods_agree = match (mora_mu, jet_mu) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let mu = match (mora_mu, &mora.finite, jet_mu) {
        (Some(a), _, _) => MuValue::Finite(a),
        (None, Some(false), _) if mora.complete => MuValue::Infinite,
        (None, _, Some(b)) => MuValue::Finite(b),
        _ => MuValue::BudgetExceeded,
    };
    Ok(MilnorResult { mora, jet, mu, methods_agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, PolyRing};

    fn mu(f: &str, vars: &[&str]) -> MilnorResult {
        let r = PolyRing::new(QQ, vars, MonomialOrder::grevlex(vars.len())).unwrap();
        let p = parse_poly(f, &r).unwrap();
        milnor_number(&p, &MilnorConfig::default()).unwrap()
    }

    #[test]
    fn milnor_suite() {
        let m = mu("x^2 + y^2 + z^2", &["x", "y", "z"]);
        assert_eq!(m.mu, MuValue::Finite(1));
        assert_eq!(m.methods_agree, Some(true));

        let m = mu("x^4 + y^2", &["x", "y"]);
        assert_eq!(m.mu, MuValue::Finite(3));
        assert_eq!(m.methods_agree, Some(true));

        let m = mu("x^3 + y^3 + z^3", &["x", "y", "z"]);
        assert_eq!(m.mu, MuValue::Finite(8));
        assert_eq!(m.methods_agree, Some(true));
    }

    #[test]
    fn not_vanishing_rejected() {
        let r = PolyRing::new(QQ, &["x"], MonomialOrder::grevlex(1)).unwrap();
        let p = parse_poly("x + 1", &r).unwrap();
        assert!(matches!(
            milnor_number(&p, &MilnorConfig::default()),
            Err(EulerError::NotVanishingAtOrigin)
        ));
    }

    #[test]
    fn invariance_under_linear_changes() {
        // A_3: x^4 + y^2, after x -> x + y, y -> y - 2x and friends
        use std::collections::BTreeMap;
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::grevlex(2)).unwrap();
        let p = parse_poly("x^4 + y^2", &r).unwrap();
        for (sx, sy) in [("x + y", "y"), ("x - y", "2*x + y"), ("x + 2*y", "x - y")] {
            let mut bind = BTreeMap::new();
            bind.insert("x".to_string(), parse_poly(sx, &r).unwrap());
            bind.insert("y".to_string(), parse_poly(sy, &r).unwrap());
            let q = p.substitute(&bind, &r).unwrap();
            let m = milnor_number(&q, &MilnorConfig::default()).unwrap();
            assert_eq!(m.mu, MuValue::Finite(3), "change ({sx}, {sy})");
            assert_eq!(m.methods_agree, Some(true));
        }
    }
}
