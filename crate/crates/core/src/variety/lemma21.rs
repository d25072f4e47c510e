//! Verification that the hyperplane-section ideal's five-generator system is
//! a Groebner basis under the order C < U < X < Y < Z, in the main ring and
//! in every affine chart, over finite-field specializations (and optionally
//! with genuine rational-function parameters).
//!
//! The section is alpha A^2 + beta B^2 + gamma C^2 = delta with gamma != 0.
//! The five generators, with the space-diagonal equation rewritten as
//! U^2 = A^2 + B^2 + C^2, have pairwise-coprime quadratic leading monomials
//! in every chart; the check runs the full S-polynomial verification and
//! compares leading monomials against the expected list.

use super::VarietyError;
use crate::groebner::{is_groebner_basis, GroebnerError};
use crate::poly::{MonomialOrder, Poly, PolyRing, RingRc};
use crate::scalar::ratfunc::RatFuncField;
use crate::scalar::{Field, PrimeField};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

/// Coefficients of alpha A^2 + beta B^2 + gamma C^2 = delta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HyperplaneSpec {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

impl HyperplaneSpec {
    pub fn validate(&self) -> Result<(), VarietyError> {
        if self.gamma == 0 {
            return Err(VarietyError::Groebner(GroebnerError::DegenerateCoefficients(
                "gamma must be nonzero".into(),
            )));
        }
        Ok(())
    }
}

/// The restriction being checked: the full ring or one affine chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Chart {
    Main,
    A,
    B,
    C,
    X,
    Y,
    U,
    Z,
}

impl Chart {
    pub const ALL: [Chart; 8] =
        [Chart::Main, Chart::A, Chart::B, Chart::C, Chart::X, Chart::Y, Chart::U, Chart::Z];

    pub fn name(&self) -> &'static str {
        match self {
            Chart::Main => "main",
            Chart::A => "A=1",
            Chart::B => "B=1",
            Chart::C => "C=1",
            Chart::X => "X=1",
            Chart::Y => "Y=1",
            Chart::U => "U=1",
            Chart::Z => "Z=1",
        }
    }
}

/// The chart system: a ring with its variable order (listed smallest first),
/// the five generators, and the expected leading variables.
pub struct ChartSystem<K: Field> {
    pub ring: RingRc<K>,
    pub gens: Vec<Poly<K>>,
    pub expected_lead_vars: Vec<&'static str>,
}

/// Build the five-generator system for a chart. `a` and `b` are the images
/// of A and B (field constants: random specializations mimicking
/// transcendentals, rational-function variables, or 1 on the chart's own
/// variable); in charts C..Z the variable B stays a ring variable and only
/// `a` is consumed.
pub fn lemma21_system<K: Field>(
    k: &K,
    chart: Chart,
    a: &K::Elt,
    b: &K::Elt,
    alpha: &K::Elt,
    beta: &K::Elt,
    gamma: &K::Elt,
    delta: &K::Elt,
) -> Result<ChartSystem<K>, GroebnerError> {
    if k.is_zero(gamma) {
        return Err(GroebnerError::DegenerateCoefficients("gamma = 0".into()));
    }
    // smallest-to-largest variable lists per chart
    let (vars, leads): (Vec<&str>, Vec<&'static str>) = match chart {
        Chart::Main | Chart::A | Chart::B => {
            (vec!["C", "U", "X", "Y", "Z"], vec!["C", "U", "X", "Y", "Z"])
        }
        Chart::C => (vec!["B", "U", "X", "Y", "Z"], vec!["B", "U", "X", "Y", "Z"]),
        Chart::X => (vec!["B", "C", "U", "Y", "Z"], vec!["B", "C", "U", "Y", "Z"]),
        Chart::Y => (vec!["B", "C", "U", "X", "Z"], vec!["B", "C", "U", "X", "Z"]),
        Chart::U => (vec!["B", "C", "X", "Y", "Z"], vec!["B", "C", "X", "Y", "Z"]),
        Chart::Z => (vec!["B", "C", "U", "X", "Y"], vec!["B", "C", "U", "X", "Y"]),
    };
    // lex ranking: most significant first
    let ranking: Vec<usize> = (0..vars.len()).rev().collect();
    let ring = PolyRing::new(k.clone(), &vars, MonomialOrder::Lex { ranking })?;
    let var = |name: &str| -> Poly<K> { Poly::var(&ring, ring.var_index(name).unwrap()) };
    let cst = |e: &K::Elt| -> Poly<K> { Poly::constant(&ring, e.clone()) };
    let sq = |p: &Poly<K>| p.mul(p);

    let a2 = k.mul(a, a);
    let b2 = k.mul(b, b);
    let inv = |x: &K::Elt| k.inv(x);

    let gens: Vec<Poly<K>> = match chart {
        Chart::Main | Chart::A | Chart::B => {
            // variables C,U,X,Y,Z over K with A,B images a,b
            let c = var("C");
            let (u, x, y, z) = (var("U"), var("X"), var("Y"), var("Z"));
            let h = sq(&c)
                .mul_scalar(gamma)
                .add(&cst(&k.sub(&k.add(&k.mul(alpha, &a2), &k.mul(beta, &b2)), delta)));
            let f1 = sq(&z).sub(&cst(&k.add(&a2, &b2)));
            let f2 = sq(&x).sub(&sq(&c)).sub(&cst(&b2));
            let f3 = sq(&y).sub(&sq(&c)).sub(&cst(&a2));
            let f4 = sq(&u).sub(&sq(&c)).sub(&cst(&k.add(&a2, &b2)));
            vec![h, f1, f2, f3, f4]
        }
        Chart::C => {
            // C = 1: h solves for B^2; beta must not vanish
            if k.is_zero(beta) {
                return Err(GroebnerError::DegenerateCoefficients("beta = 0 in chart C".into()));
            }
            let bb = var("B");
            let (u, x, y, z) = (var("U"), var("X"), var("Y"), var("Z"));
            // beta B^2 + (alpha a^2 + gamma - delta)
            let h = sq(&bb)
                .mul_scalar(beta)
                .add(&cst(&k.sub(&k.add(&k.mul(alpha, &a2), gamma), delta)));
            let f1 = sq(&z).sub(&sq(&bb)).sub(&cst(&a2));
            let f2 = sq(&x).sub(&sq(&bb)).sub(&cst(&k.one()));
            let f3 = sq(&y).sub(&cst(&k.add(&k.one(), &a2)));
            let f4 = sq(&u).sub(&sq(&bb)).sub(&cst(&k.add(&a2, &k.one())));
            vec![h, f1, f2, f3, f4]
        }
        Chart::X => {
            // X = 1: C^2 = B^2 - 1 and B^2 = (1 + (alpha/gamma) a^2) / (1 - beta/gamma)
            let one_minus = k.sub(&k.one(), &k.div(beta, gamma)?);
            if k.is_zero(&one_minus) {
                return Err(GroebnerError::DegenerateCoefficients(
                    "1 - beta/gamma = 0 in chart X".into(),
                ));
            }
            if k.is_zero(alpha) {
                return Err(GroebnerError::DegenerateCoefficients("alpha = 0 in chart X".into()));
            }
            let bb = var("B");
            let (c, u, y, z) = (var("C"), var("U"), var("Y"), var("Z"));
            let b2val = k.mul(
                &inv(&one_minus)?,
                &k.add(&k.one(), &k.mul(&k.div(alpha, gamma)?, &a2)),
            );
            let g1 = sq(&bb).sub(&cst(&b2val));
            let g2 = sq(&c).sub(&sq(&bb)).add(&cst(&k.one()));
            let g3 = sq(&y).sub(&sq(&c)).sub(&cst(&a2));
            let g4 = sq(&z).sub(&sq(&bb)).sub(&cst(&a2));
            let g5 = sq(&u).sub(&sq(&bb)).sub(&sq(&c)).sub(&cst(&a2));
            vec![g1, g2, g3, g4, g5]
        }
        Chart::Y => {
            // Y = 1: C^2 = 1 - a^2, B^2 = (delta - alpha a^2 - gamma(1 - a^2)) / beta
            if k.is_zero(beta) {
                return Err(GroebnerError::DegenerateCoefficients("beta = 0 in chart Y".into()));
            }
            let bb = var("B");
            let (c, u, x, z) = (var("C"), var("U"), var("X"), var("Z"));
            let c2val = k.sub(&k.one(), &a2);
            let num = k.sub(&k.sub(delta, &k.mul(alpha, &a2)), &k.mul(gamma, &c2val));
            let b2val = k.div(&num, beta)?;
            let g1 = sq(&bb).sub(&cst(&b2val));
            let g2 = sq(&c).sub(&cst(&c2val));
            let g3 = sq(&x).sub(&sq(&bb)).sub(&sq(&c));
            let g4 = sq(&z).sub(&sq(&bb)).sub(&cst(&a2));
            let g5 = sq(&u).sub(&sq(&bb)).sub(&sq(&c)).sub(&cst(&a2));
            vec![g1, g2, g3, g4, g5]
        }
        Chart::U => {
            // U = 1: C^2 = 1 - a^2 - B^2, B^2 = (delta - gamma - (alpha - gamma) a^2)/(beta - gamma)
            let bg = k.sub(beta, gamma);
            if k.is_zero(&bg) {
                return Err(GroebnerError::DegenerateCoefficients(
                    "beta - gamma = 0 in chart U".into(),
                ));
            }
            let bb = var("B");
            let (c, x, y, z) = (var("C"), var("X"), var("Y"), var("Z"));
            let num = k.sub(&k.sub(delta, gamma), &k.mul(&k.sub(alpha, gamma), &a2));
            let b2val = k.div(&num, &bg)?;
            let g1 = sq(&bb).sub(&cst(&b2val));
            let g2 = sq(&c).add(&sq(&bb)).sub(&cst(&k.sub(&k.one(), &a2)));
            let g3 = sq(&x).sub(&sq(&bb)).sub(&sq(&c));
            let g4 = sq(&y).sub(&sq(&c)).sub(&cst(&a2));
            let g5 = sq(&z).sub(&sq(&bb)).sub(&cst(&a2));
            vec![g1, g2, g3, g4, g5]
        }
        Chart::Z => {
            // Z = 1: B^2 = 1 - a^2, order B < C < U < X < Y
            let bb = var("B");
            let (c, u, x, y) = (var("C"), var("U"), var("X"), var("Y"));
            let g1 = sq(&bb).sub(&cst(&k.sub(&k.one(), &a2)));
            // gamma C^2 = delta - alpha a^2 - beta(1 - a^2)
            let num = k.sub(
                &k.sub(delta, &k.mul(alpha, &a2)),
                &k.mul(beta, &k.sub(&k.one(), &a2)),
            );
            let g2 = sq(&c).sub(&cst(&k.div(&num, gamma)?));
            let g3 = sq(&x).sub(&sq(&bb)).sub(&sq(&c));
            let g4 = sq(&y).sub(&sq(&c)).sub(&cst(&a2));
            let g5 = sq(&u).sub(&sq(&bb)).sub(&sq(&c)).sub(&cst(&a2));
            vec![g1, g2, g3, g4, g5]
        }
    };
    Ok(ChartSystem { ring, gens, expected_lead_vars: leads })
}

/// One chart's verification outcome.
#[derive(Debug, Clone, Serialize)]
pub struct ChartCheck {
    pub chart: String,
    pub is_basis: bool,
    pub leads_match: bool,
    pub leading_monomials: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialResult {
    pub a: u64,
    pub b: u64,
    pub charts: Vec<ChartCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma21Report {
    pub p: u64,
    pub hyperplane: HyperplaneSpec,
    pub trials: Vec<TrialResult>,
    pub parameter_mode_checked: bool,
    pub all_passed: bool,
}

#[derive(Debug, Clone)]
pub struct Lemma21Options {
    pub trials: u32,
    pub seed: u64,
    /// Also run the main/A/B charts with genuine rational-function
    /// parameters F_p(A,B) instead of specialized values.
    pub parameter_mode: bool,
}

impl Default for Lemma21Options {
    fn default() -> Self {
        Lemma21Options { trials: 3, seed: 0, parameter_mode: false }
    }
}

fn check_system<K>(sys: &ChartSystem<K>, chart: Chart) -> Result<ChartCheck, GroebnerError>
where
    K: Field + crate::poly::PrimitivePart,
{
    let (ok, _) = is_groebner_basis(&sys.gens)?;
    // the expected leading monomials are the pure squares of the listed
    // variables, compared as a set (generator order is not significant)
    let k = &sys.ring.coeff;
    let mut seen: Vec<Option<String>> = vec![None; sys.expected_lead_vars.len()];
    let mut leads_match = sys.gens.len() == sys.expected_lead_vars.len();
    for g in &sys.gens {
        let lm = g.lm().expect("nonzero generator");
        let mut matched = false;
        for (i, v) in sys.expected_lead_vars.iter().enumerate() {
            let vi = sys.ring.var_index(v).unwrap();
            if lm.exp(vi) == 2 && lm.total_degree() == 2 && seen[i].is_none() {
                seen[i] = Some(format!("{}*{}^2", k.fmt_elt(g.lc().unwrap()), v));
                matched = true;
                break;
            }
        }
        leads_match &= matched;
    }
    leads_match &= seen.iter().all(|s| s.is_some());
    let leading_monomials = seen.into_iter().flatten().collect();
    Ok(ChartCheck {
        chart: chart.name().to_string(),
        is_basis: ok,
        leads_match,
        leading_monomials,
    })
}

/// Run the Lemma check over F_p: per trial, (A, B) are specialized to fresh
/// random nonzero values and every chart system is verified. When
/// `parameter_mode` is set, the main and A/B charts are additionally checked
/// in F_p(A,B) with A, B transcendental.
pub fn verify_lemma_2_1(
    h: &HyperplaneSpec,
    p: u64,
    opts: &Lemma21Options,
) -> Result<Lemma21Report, VarietyError> {
    h.validate()?;
    if p == 2 {
        return Err(VarietyError::BadPrime(p));
    }
    let f = PrimeField::new(p).map_err(|_| VarietyError::BadPrime(p))?;
    let alpha = f.elt(h.alpha);
    let beta = f.elt(h.beta);
    let gamma = f.elt(h.gamma);
    let delta = f.elt(h.delta);
    if gamma == 0 {
        return Err(VarietyError::Groebner(GroebnerError::DegenerateCoefficients(
            format!("gamma = {} vanishes mod {}", h.gamma, p),
        )));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(opts.seed);
    let mut trials = Vec::new();
    let mut all = true;
    for _ in 0..opts.trials {
        let a = rng.gen_range(1..p);
        let b = rng.gen_range(1..p);
        let mut charts = Vec::new();
        for chart in Chart::ALL {
            let (aa, bb) = match chart {
                Chart::A => (1u64, b),
                Chart::B => (a, 1u64),
                _ => (a, b),
            };
            let sys = lemma21_system(&f, chart, &aa, &bb, &alpha, &beta, &gamma, &delta)
                .map_err(VarietyError::Groebner)?;
            let check = check_system(&sys, chart).map_err(VarietyError::Groebner)?;
            all &= check.is_basis && check.leads_match;
            charts.push(check);
        }
        trials.push(TrialResult { a, b, charts });
    }

    let mut parameter_mode_checked = false;
    if opts.parameter_mode {
        // genuine transcendental parameters: K = F_p(A, B)
        let params = PolyRing::new(f, &["A", "B"], MonomialOrder::grevlex(2))?;
        let kf = RatFuncField::shared(&params);
        let a = kf.var(0);
        let b = kf.var(1);
        let lift = |x: u64| kf.from_poly(Poly::constant(&params, x));
        for chart in [Chart::Main, Chart::A, Chart::B] {
            let (aa, bb) = match chart {
                Chart::A => (kf.one(), b.clone()),
                Chart::B => (a.clone(), kf.one()),
                _ => (a.clone(), b.clone()),
            };
            let sys = lemma21_system(
                &kf,
                chart,
                &aa,
                &bb,
                &lift(alpha),
                &lift(beta),
                &lift(gamma),
                &lift(delta),
            )
            .map_err(VarietyError::Groebner)?;
            let check = check_system(&sys, chart).map_err(VarietyError::Groebner)?;
            all &= check.is_basis && check.leads_match;
        }
        parameter_mode_checked = true;
    }

    Ok(Lemma21Report { p, hyperplane: *h, trials, parameter_mode_checked, all_passed: all })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_hyperplane_verifies_everywhere() {
        let h = HyperplaneSpec { alpha: 2, beta: 3, gamma: 5, delta: 7 };
        let r = verify_lemma_2_1(&h, 10007, &Lemma21Options { trials: 2, seed: 1, parameter_mode: true })
            .unwrap();
        assert!(r.all_passed);
        assert!(r.parameter_mode_checked);
        assert_eq!(r.trials.len(), 2);
        for t in &r.trials {
            assert_eq!(t.charts.len(), 8);
        }
    }

    #[test]
    fn beta_equals_gamma_degenerates_chart_x() {
        let f = PrimeField::new(13).unwrap();
        let err = lemma21_system(&f, Chart::X, &3u64, &0u64, &2u64, &5u64, &5u64, &7u64);
        assert!(matches!(err, Err(GroebnerError::DegenerateCoefficients(_))));
    }

    #[test]
    fn chart_z_uses_printed_order() {
        let f = PrimeField::new(10007).unwrap();
        let sys = lemma21_system(&f, Chart::Z, &17u64, &0u64, &2u64, &3u64, &5u64, &7u64).unwrap();
        assert_eq!(sys.ring.vars, vec!["B", "C", "U", "X", "Y"]);
        let check = check_system(&sys, Chart::Z).unwrap();
        assert!(check.is_basis && check.leads_match);
    }
}

