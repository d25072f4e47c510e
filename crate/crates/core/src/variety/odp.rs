//! Ordinary-double-point classification over finite fields, and the
//! splitting-prime search that turns censused points into explicit F_p
//! tuples.
//!
//! A singular point of a codimension-r complete intersection is an ODP when
//! the chart Jacobian has rank exactly r-1 there and the left-kernel
//! combination of the equation Hessians restricts to a rank-3 form on the
//! 3-dimensional tangent kernel.

use super::census::SingularCensus;
use super::fplin;
use super::singular::singular_locus_ideal;
use super::{VarietyError, VarietySpec};
use crate::groebner::univar;
use crate::poly::{Poly, RingRc};
use crate::scalar::{is_prime_u64, Field, PrimeField, QQ};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OdpOutcome {
    Odp,
    NotOdp(String),
}

/// Classify a point of V(eqs) in affine space over F_p.
pub fn classify_odp_system(
    f: &PrimeField,
    eqs: &[Poly<PrimeField>],
    point: &[u64],
) -> Result<OdpOutcome, VarietyError> {
    let r = eqs.len();
    let ring = eqs[0].ring();
    let nv = ring.nvars();
    for e in eqs {
        if !f.is_zero(&e.evaluate(point)) {
            return Err(VarietyError::PointNotSingular);
        }
    }
    // chart Jacobian at the point
    let mut jac = vec![vec![0u64; nv]; r];
    for (i, e) in eqs.iter().enumerate() {
        for v in 0..nv {
            jac[i][v] = e.derivative(v)?.evaluate(point);
        }
    }
    let rank = fplin::rank(f, &jac);
    if rank == r {
        return Err(VarietyError::PointNotSingular);
    }
    if rank + 1 != r {
        return Ok(OdpOutcome::NotOdp(format!("jacobian rank {rank}, expected {}", r - 1)));
    }
    let left = fplin::left_kernel(f, &jac);
    debug_assert_eq!(left.len(), 1);
    let lam = &left[0];
    // combined Hessian of the lambda-combination
    let mut hess = vec![vec![0u64; nv]; nv];
    for (i, e) in eqs.iter().enumerate() {
        if f.is_zero(&lam[i]) {
            continue;
        }
        for s in 0..nv {
            let ds = e.derivative(s)?;
            for t in s..nv {
                let v = ds.derivative(t)?.evaluate(point);
                let contrib = f.mul(&lam[i], &v);
                hess[s][t] = f.add(&hess[s][t], &contrib);
                if t != s {
                    hess[t][s] = hess[s][t];
                }
            }
        }
    }
    // restrict to the tangent kernel
    let kernel = fplin::right_kernel(f, &jac, nv);
    let kdim = kernel.len();
    if kdim != 3 {
        return Ok(OdpOutcome::NotOdp(format!("tangent kernel dimension {kdim}, expected 3")));
    }
    let mut restricted = vec![vec![0u64; kdim]; kdim];
    for a in 0..kdim {
        for b in 0..kdim {
            let mut acc = 0u64;
            for s in 0..nv {
                for t in 0..nv {
                    let m = f.mul(&kernel[a][s], &f.mul(&hess[s][t], &kernel[b][t]));
                    acc = f.add(&acc, &m);
                }
            }
            restricted[a][b] = acc;
        }
    }
    if fplin::rank(f, &restricted) == 3 {
        Ok(OdpOutcome::Odp)
    } else {
        Ok(OdpOutcome::NotOdp(format!(
            "restricted Hessian rank {}, expected 3",
            fplin::rank(f, &restricted)
        )))
    }
}

fn upoly_mod_p(f: &PrimeField, c: &[crate::scalar::Rat]) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(c.len());
    for x in c {
        out.push(f.from_ratio(x.numer(), x.denom()).ok()?);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

/// x^p mod f over F_p by repeated squaring.
fn xp_mod(f: &PrimeField, modulus: &[u64], p: u64) -> Vec<u64> {
    let x = vec![0u64, 1];
    let mut acc = vec![1u64];
    let mut base = univar::rem(f, &x, modulus);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = univar::rem(f, &univar::mul(f, &acc, &base), modulus);
        }
        base = univar::rem(f, &univar::mul(f, &base, &base), modulus);
        e >>= 1;
    }
    acc
}

/// Does the squarefree eliminant split into distinct linear factors mod p?
fn splits_linearly(f: &PrimeField, elim: &[u64], p: u64) -> bool {
    if matches!(univar::degree::<PrimeField>(elim), None | Some(0)) {
        return true;
    }
    // must stay squarefree mod p
    let der = univar::deriv(f, elim);
    if univar::degree::<PrimeField>(&univar::gcd(f, elim, &der)) != Some(0) {
        return false;
    }
    // distinct-degree test: all factors linear iff x^p = x mod f
    let xp = xp_mod(f, elim, p);
    let x = vec![0u64, 1];
    let diff_len = xp.len().max(2);
    let mut diff = vec![0u64; diff_len];
    for (i, c) in xp.iter().enumerate() {
        diff[i] = *c;
    }
    for (i, c) in x.iter().enumerate() {
        diff[i] = f.sub(&diff[i], c);
    }
    diff.iter().all(|c| *c == 0)
}

/// Scan odd primes upward until every stratum eliminant of the census
/// reduces well mod p, stays squarefree and splits into linear factors.
pub fn find_splitting_prime(census: &SingularCensus, max_p: u64) -> Result<u64, VarietyError> {
    'primes: for p in (3..max_p).step_by(2) {
        if !is_prime_u64(p) {
            continue;
        }
        let f = PrimeField::new(p).unwrap();
        for s in &census.strata {
            let Some(solved) = &s.solved else { continue };
            let d = univar::degree::<QQ>(&solved.squarefree_eliminant).unwrap_or(0);
            let Some(elim) = upoly_mod_p(&f, &solved.squarefree_eliminant) else {
                continue 'primes;
            };
            if d > 0 && univar::degree::<PrimeField>(&elim) != Some(d) {
                continue 'primes; // degree dropped: bad prime
            }
            if !splits_linearly(&f, &elim, p) {
                continue 'primes;
            }
            // coordinate polynomials must reduce too
            for c in &solved.coords {
                if upoly_mod_p(&f, c).is_none() {
                    continue 'primes;
                }
            }
        }
        return Ok(p);
    }
    Err(VarietyError::NoSplittingPrime(max_p))
}

/// One censused singular point as an explicit F_p tuple in a chart.
#[derive(Debug, Clone)]
pub struct FpChartPoint {
    pub chart: String,
    /// Coordinates in the chart ring's variable order (chart variable
    /// removed, stratum zeros included).
    pub coords: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct OdpReport {
    pub prime: u64,
    pub points: Vec<(FpChartPoint, OdpOutcome)>,
    pub all_odp: bool,
}

/// Classify every censused singular point over a splitting prime.
pub fn classify_census(
    spec: &VarietySpec,
    census: &SingularCensus,
    p: u64,
) -> Result<OdpReport, VarietyError> {
    let f = PrimeField::new(p).map_err(|_| VarietyError::BadPrime(p))?;
    let mut points = Vec::new();
    let mut all = true;
    for s in &census.strata {
        if s.complex_count == 0 {
            continue;
        }
        let (Some(solved), Some(live_ring)) = (&s.solved, &s.live_ring) else {
            // zero-variable stratum: the single coordinate point
            let pt = vec![0u64; spec.ring.nvars() - 1];
            let outcome = classify_point(&f, spec, &s.chart, &pt)?;
            all &= outcome == OdpOutcome::Odp;
            points.push((FpChartPoint { chart: s.chart.clone(), coords: pt }, outcome));
            continue;
        };
        let elim = upoly_mod_p(&f, &solved.squarefree_eliminant).ok_or(VarietyError::BadPrime(p))?;
        let coords: Vec<Vec<u64>> = solved
            .coords
            .iter()
            .map(|c| upoly_mod_p(&f, c).ok_or(VarietyError::BadPrime(p)))
            .collect::<Result<_, _>>()?;
        for t in 0..p {
            if !f.is_zero(&univar::eval(&f, &elim, &t)) {
                continue;
            }
            let live: Vec<u64> = coords.iter().map(|c| univar::eval(&f, c, &t)).collect();
            let pt = full_chart_point(spec, &s.chart, &s.zeros, &live_ring.vars, &live);
            let outcome = classify_point(&f, spec, &s.chart, &pt)?;
            all &= outcome == OdpOutcome::Odp;
            points.push((FpChartPoint { chart: s.chart.clone(), coords: pt }, outcome));
        }
    }
    Ok(OdpReport { prime: p, points, all_odp: all })
}

/// Insert stratum zeros into the chart-ring coordinate order.
fn full_chart_point(
    spec: &VarietySpec,
    chart: &str,
    zeros: &[String],
    live_vars: &[String],
    live: &[u64],
) -> Vec<u64> {
    let chart_vars: Vec<&String> = spec.ring.vars.iter().filter(|v| v.as_str() != chart).collect();
    let mut out = Vec::with_capacity(chart_vars.len());
    for v in chart_vars {
        if zeros.contains(v) {
            out.push(0);
        } else {
            let idx = live_vars.iter().position(|w| w == v).expect("live variable");
            out.push(live[idx]);
        }
    }
    out
}

fn classify_point(
    f: &PrimeField,
    spec: &VarietySpec,
    chart: &str,
    point: &[u64],
) -> Result<OdpOutcome, VarietyError> {
    let sys = singular_locus_ideal(spec, chart)?;
    let fring = crate::poly::PolyRing::new(
        *f,
        &sys.ring.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        sys.ring.order.clone(),
    )?;
    let eqs: Vec<Poly<PrimeField>> = sys
        .equations
        .iter()
        .map(|e| super::census::map_poly_mod_p(e, &fring).ok_or(VarietyError::BadPrime(f.modulus())))
        .collect::<Result<_, _>>()?;
    classify_odp_system(f, &eqs, point)
}

/// Convenience used by tests: a plain affine ring over F_p.
pub fn fp_ring(f: &PrimeField, vars: &[&str]) -> RingRc<PrimeField> {
    crate::poly::PolyRing::new(*f, vars, crate::poly::MonomialOrder::grevlex(vars.len())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn model_a1_threefold_point_is_odp() {
        let f = PrimeField::new(13).unwrap();
        let r = fp_ring(&f, &["x", "y", "z"]);
        let eq = parse_poly("x^2 + y^2 + z^2", &r).unwrap();
        let out = classify_odp_system(&f, &[eq], &[0, 0, 0]).unwrap();
        assert_eq!(out, OdpOutcome::Odp);
    }

    #[test]
    fn degenerate_quadratic_part_is_not_odp() {
        let f = PrimeField::new(13).unwrap();
        let r = fp_ring(&f, &["x", "y", "z"]);
        let eq = parse_poly("x^3 + y^2 + z^2", &r).unwrap();
        let out = classify_odp_system(&f, &[eq], &[0, 0, 0]).unwrap();
        assert!(matches!(out, OdpOutcome::NotOdp(_)));
    }

    #[test]
    fn smooth_point_is_rejected() {
        let f = PrimeField::new(13).unwrap();
        let r = fp_ring(&f, &["x", "y", "z"]);
        let eq = parse_poly("x^2 + y^2 + z^2 - 1", &r).unwrap();
        // (0,0,1) is a smooth point of the sphere
        assert!(matches!(
            classify_odp_system(&f, &[eq], &[0, 0, 1]),
            Err(VarietyError::PointNotSingular)
        ));
    }
}
