//! Stratified singular census. Strata follow the projective dedup
//! convention: first chart variable normalized to 1, all earlier chart
//! variables pinned to 0, so every projective singular point is counted in
//! exactly one stratum. Complex counts are squarefree-eliminant degrees;
//! real counts come from Sturm chains on the same eliminants.

use super::singular::stratum_system;
use super::{VarietyError, VarietySpec};
use crate::groebner::{shape_position_solve, GroebnerError, Ideal, ShapeConfig, SolvedSystem};
use crate::groebner::univar;
use crate::poly::{Poly, RingRc};
use crate::scalar::{Field, PrimeField, Rat, QQ};
use crate::unireal::real_solution_count;
use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub seed: u64,
    /// Stratification order; defaults to the variety's projective variables.
    pub chart_order: Option<Vec<String>>,
    /// Primes for the finite-field corroboration pass (empty to skip).
    pub corroborate_primes: Vec<u64>,
    /// Symbolically re-verify that every censused point kills the system.
    pub verify_points: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            seed: 0,
            chart_order: None,
            corroborate_primes: vec![10007, 10009, 10037, 10039, 10061],
            verify_points: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct StratumResult {
    pub chart: String,
    pub zeros: Vec<String>,
    pub complex_count: usize,
    pub real_count: u32,
    pub staircase_size: usize,
    pub eliminant_degree: usize,
    pub live_ring: Option<RingRc<QQ>>,
    pub solved: Option<SolvedSystem<QQ>>,
}

#[derive(Debug, Clone)]
pub struct SingularCensus {
    pub variety: String,
    pub complex: usize,
    pub real: u32,
    pub strata: Vec<StratumResult>,
    /// (prime, complex total over the algebraic closure of F_p)
    pub fp_totals: Vec<(u64, usize)>,
    /// Symbolic point verification status (None when skipped).
    pub points_verified: Option<bool>,
}

pub fn census(spec: &VarietySpec, cfg: &CensusConfig) -> Result<SingularCensus, VarietyError> {
    let charts: Vec<String> = cfg.chart_order.clone().unwrap_or_else(|| spec.ring.vars.clone());
    let mut strata = Vec::new();
    let mut complex = 0usize;
    let mut real = 0u32;
    let mut verified = cfg.verify_points.then_some(true);

    for (j, chart) in charts.iter().enumerate() {
        let zeros: Vec<String> = charts[..j].to_vec();
        let stratum = stratum_system(spec, chart, &zeros)?;
        let mut result = StratumResult {
            chart: chart.clone(),
            zeros: zeros.clone(),
            complex_count: 0,
            real_count: 0,
            staircase_size: 0,
            eliminant_degree: 0,
            live_ring: None,
            solved: None,
        };
        if let Some((ring, gens)) = stratum {
            if gens.is_empty() {
                if ring.nvars() == 0 {
                    // the stratum is a single coordinate point and it is singular
                    result.complex_count = 1;
                    result.real_count = 1;
                } else {
                    return Err(VarietyError::StratumNotZeroDimensional { chart: chart.clone() });
                }
            } else {
                let ideal = Ideal::new(&ring, gens.clone())?;
                let shape_cfg = ShapeConfig { seed: stratum_seed(cfg.seed, j), ..Default::default() };
                let solved = match shape_position_solve(&ideal, &shape_cfg) {
                    Ok(s) => s,
                    Err(GroebnerError::NotZeroDimensional) => {
                        return Err(VarietyError::StratumNotZeroDimensional { chart: chart.clone() })
                    }
                    Err(e) => return Err(e.into()),
                };
                result.complex_count = solved.distinct_count;
                result.real_count = real_solution_count(&solved).unwrap_or(0);
                result.staircase_size = solved.staircase_size;
                result.eliminant_degree = solved.eliminant.len().saturating_sub(1);
                if let Some(v) = verified.as_mut() {
                    *v &= verify_stratum_points(&gens, &solved);
                }
                result.live_ring = Some(ring);
                result.solved = Some(solved);
            }
        }
        complex += result.complex_count;
        real += result.real_count;
        strata.push(result);
    }

    let mut fp_totals = Vec::new();
    for &p in &cfg.corroborate_primes {
        fp_totals.push((p, census_mod_p(spec, &charts, p, cfg.seed)?));
    }

    Ok(SingularCensus {
        variety: spec.name.clone(),
        complex,
        real,
        strata,
        fp_totals,
        points_verified: verified,
    })
}

fn stratum_seed(seed: u64, j: usize) -> u64 {
    seed.wrapping_add((j as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Complex-count corroboration over the algebraic closure of F_p: the same
/// strata, coefficients reduced mod p, counts via squarefree eliminant
/// degrees.
fn census_mod_p(
    spec: &VarietySpec,
    charts: &[String],
    p: u64,
    seed: u64,
) -> Result<usize, VarietyError> {
    let fp = PrimeField::new(p).map_err(|_| VarietyError::BadPrime(p))?;
    let mut total = 0usize;
    for (j, chart) in charts.iter().enumerate() {
        let zeros: Vec<String> = charts[..j].to_vec();
        let Some((ring, gens)) = stratum_system(spec, chart, &zeros)? else {
            continue;
        };
        if gens.is_empty() {
            if ring.nvars() == 0 {
                total += 1;
            }
            continue;
        }
        let fring = crate::poly::PolyRing::new(fp, &ring.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(), ring.order.clone())?;
        let mut fgens = Vec::new();
        for g in &gens {
            let fg = map_poly_mod_p(g, &fring).ok_or(VarietyError::BadPrime(p))?;
            if !fg.is_zero() {
                fgens.push(fg);
            }
        }
        let ideal = Ideal::new(&fring, fgens)?;
        let shape_cfg = ShapeConfig { seed: stratum_seed(seed, j), ..Default::default() };
        let solved = match shape_position_solve(&ideal, &shape_cfg) {
            Ok(s) => s,
            Err(GroebnerError::NotZeroDimensional) => {
                return Err(VarietyError::StratumNotZeroDimensional { chart: chart.clone() })
            }
            Err(e) => return Err(e.into()),
        };
        total += solved.distinct_count;
    }
    Ok(total)
}

pub(crate) fn map_poly_mod_p(
    g: &Poly<QQ>,
    fring: &RingRc<PrimeField>,
) -> Option<Poly<PrimeField>> {
    let mut terms = Vec::with_capacity(g.num_terms());
    for (m, c) in g.terms() {
        let e = fring.coeff.from_ratio(c.numer(), c.denom()).ok()?;
        terms.push((m.clone(), e));
    }
    Some(Poly::from_terms(fring, terms))
}

/// Exact symbolic check that the shape-position solutions kill every
/// generator: substitute the coordinate polynomials and reduce modulo the
/// squarefree eliminant.
fn verify_stratum_points(gens: &[Poly<QQ>], solved: &SolvedSystem<QQ>) -> bool {
    let m = &solved.squarefree_eliminant;
    if univar::degree::<QQ>(m).unwrap_or(0) == 0 {
        return true;
    }
    for g in gens {
        let mut acc: Vec<Rat> = Vec::new(); // zero
        for (mono, c) in g.terms() {
            let mut term: Vec<Rat> = vec![c.clone()];
            for (vi, &e) in mono.exps().iter().enumerate() {
                for _ in 0..e {
                    term = univar::rem(&QQ, &univar::mul(&QQ, &term, &solved.coords[vi]), m);
                    if term.is_empty() {
                        break;
                    }
                }
            }
            let padded = term;
            // acc += padded
            let n = acc.len().max(padded.len());
            acc.resize(n, Rat::zero());
            for (i, t) in padded.into_iter().enumerate() {
                acc[i] = &acc[i] + &t;
            }
        }
        acc = univar::trim(&QQ, acc);
        let acc = univar::rem(&QQ, &acc, m);
        if !acc.is_empty() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};
    use crate::variety::builtin;

    #[test]
    fn smooth_quadric_census_is_empty() {
        let ring = PolyRing::new(QQ, &["x", "y", "z", "w"], MonomialOrder::grevlex(4)).unwrap();
        let eq = parse_poly("x^2 + y^2 + z^2 - w^2", &ring).unwrap();
        let spec = VarietySpec { name: "quadric".into(), ring, equations: vec![eq], codim: 1 };
        let cfg = CensusConfig { corroborate_primes: vec![], ..Default::default() };
        let c = census(&spec, &cfg).unwrap();
        assert_eq!((c.complex, c.real), (0, 0));
        assert_eq!(c.points_verified, Some(true));
    }

    #[test]
    fn face_cuboid_surface_census() {
        let v = builtin("V").unwrap();
        let cfg = CensusConfig { corroborate_primes: vec![10007], ..Default::default() };
        let c = census(&v, &cfg).unwrap();
        assert_eq!(c.complex, 16);
        assert_eq!(c.real, 8);
        assert_eq!(c.fp_totals, vec![(10007, 16)]);
        assert_eq!(c.points_verified, Some(true));
        // stratification partition: strata sum to the total
        let sum: usize = c.strata.iter().map(|s| s.complex_count).sum();
        assert_eq!(sum, c.complex);
    }
}
