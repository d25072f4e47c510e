//! Shape-position solving of zero-dimensional ideals.
//!
//! A seeded random linear form t = lambda(v) replaces the last variable; in
//! the new coordinates the lex basis has the shape {w_1 - g_1(t), ...,
//! w_{n-1} - g_{n-1}(t), m(t)} exactly when every variable is a polynomial
//! in lambda inside the quotient algebra. That membership is solved by
//! linear algebra over the staircase instead of re-running Buchberger on a
//! dense transformed ideal. Success certifies that lambda separates the
//! solutions, so the distinct-solution count is the degree of the squarefree
//! part of m, exactly.

use super::normal_form::normal_form_unchecked;
use super::staircase::quotient_dimension;
use super::{buchberger, univar, GroebnerError, Ideal};
use crate::poly::{Monomial, Poly, PrimitivePart, RingRc};
use crate::scalar::Field;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct ShapeConfig {
    pub seed: u64,
    /// Random linear-form coefficients are drawn uniformly from
    /// [-coeff_box, coeff_box].
    pub coeff_box: i64,
    pub max_tries: u32,
}

impl Default for ShapeConfig {
    fn default() -> Self {
        ShapeConfig { seed: 0, coeff_box: 50, max_tries: 5 }
    }
}

/// A zero-dimensional system in shape position.
#[derive(Debug, Clone)]
pub struct SolvedSystem<K: Field> {
    pub ring: RingRc<K>,
    pub staircase_size: usize,
    /// Monic minimal polynomial of the separating form (ascending coefficients).
    pub eliminant: Vec<K::Elt>,
    pub squarefree_eliminant: Vec<K::Elt>,
    /// Per original variable: coefficients of g_i(t) with v_i = g_i(lambda).
    pub coords: Vec<Vec<K::Elt>>,
    /// Integer coefficients of the separating form lambda.
    pub lambda: Vec<i64>,
    /// Invertible change of variables: identity rows, last row lambda.
    pub change: Vec<Vec<i64>>,
    /// Number of distinct solutions over the algebraic closure.
    pub distinct_count: usize,
}

/// Incremental row echelon with combination tracking.
struct Echelon<K: Field> {
    k: K,
    dim: usize,
    /// (pivot column, reduced row, combination over inserted vectors)
    rows: Vec<(usize, Vec<K::Elt>, Vec<K::Elt>)>,
    inserted: usize,
}

enum Inserted<K: Field> {
    Independent,
    /// Dependency coefficients over all vectors inserted so far (the last
    /// entry, for the vector just offered, is 1).
    Dependent(Vec<K::Elt>),
}

impl<K: Field> Echelon<K> {
    fn new(k: K, dim: usize) -> Self {
        Echelon { k, dim, rows: Vec::new(), inserted: 0 }
    }

    fn offer(&mut self, v: &[K::Elt]) -> Inserted<K> {
        let k = self.k.clone();
        let mut row = v.to_vec();
        let mut combo = vec![k.zero(); self.inserted + 1];
        combo[self.inserted] = k.one();
        for (piv, r, c) in &self.rows {
            if k.is_zero(&row[*piv]) {
                continue;
            }
            let f = row[*piv].clone();
            for i in 0..self.dim {
                let t = k.mul(&f, &r[i]);
                row[i] = k.sub(&row[i], &t);
            }
            for (i, ci) in c.iter().enumerate() {
                let t = k.mul(&f, ci);
                combo[i] = k.sub(&combo[i], &t);
            }
        }
        let pivot = (0..self.dim).find(|&i| !k.is_zero(&row[i]));
        match pivot {
            None => {
                self.inserted += 1;
                Inserted::Dependent(combo)
            }
            Some(p) => {
                let inv = k.inv(&row[p]).expect("pivot nonzero");
                for i in 0..self.dim {
                    row[i] = k.mul(&row[i], &inv);
                }
                for c in combo.iter_mut() {
                    *c = k.mul(c, &inv);
                }
                self.rows.push((p, row, combo));
                self.inserted += 1;
                Inserted::Independent
            }
        }
    }
}

pub fn shape_position_solve<K>(
    ideal: &Ideal<K>,
    cfg: &ShapeConfig,
) -> Result<SolvedSystem<K>, GroebnerError>
where
    K: Field + PrimitivePart,
{
    let ring = Arc::clone(ideal.ring());
    if !ring.order.is_global() {
        return Err(GroebnerError::LocalOrderRejected);
    }
    let k = ring.coeff.clone();
    let n = ring.nvars();
    let gb = buchberger(ideal)?;
    let stair = quotient_dimension(&gb);
    if !stair.finite {
        return Err(GroebnerError::NotZeroDimensional);
    }
    let dim = stair.monomials.len();
    if dim == 0 {
        // empty variety: eliminant 1, no solutions
        return Ok(SolvedSystem {
            ring,
            staircase_size: 0,
            eliminant: vec![k.one()],
            squarefree_eliminant: vec![k.one()],
            coords: vec![Vec::new(); n],
            lambda: vec![0; n],
            change: identity_with_last_row(&vec![1; n]),
            distinct_count: 0,
        });
    }

    let index: HashMap<Monomial, usize> =
        stair.monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let nf_vec = |p: &Poly<K>| -> Vec<K::Elt> {
        let r = normal_form_unchecked(p, &gb.elements);
        let mut v = vec![k.zero(); dim];
        for (m, c) in r.terms() {
            let i = *index.get(m).expect("residue supported on the staircase");
            v[i] = c.clone();
        }
        v
    };

    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    'tries: for tries in 0..cfg.max_tries {
        // draw lambda; last coefficient nonzero so the change matrix inverts
        let mut lambda = vec![0i64; n];
        for l in lambda.iter_mut() {
            *l = rng.gen_range(-cfg.coeff_box..=cfg.coeff_box);
        }
        while lambda[n - 1] == 0 {
            lambda[n - 1] = rng.gen_range(-cfg.coeff_box..=cfg.coeff_box);
        }
        let lam_poly = {
            let mut acc = Poly::zero(&ring);
            for (i, &c) in lambda.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&Poly::var(&ring, i).mul_scalar(&k.from_i64(c)));
                }
            }
            acc
        };

        // Krylov sequence 1, lambda, lambda^2, ... until first dependency
        let mut ech = Echelon::new(k.clone(), dim);
        let mut krylov: Vec<Vec<K::Elt>> = Vec::new();
        let mut cur = nf_vec(&Poly::one(&ring));
        let eliminant: Vec<K::Elt>;
        loop {
            match ech.offer(&cur) {
                Inserted::Independent => {
                    krylov.push(cur.clone());
                    // next power: multiply the residue by lambda, renormalize
                    let as_poly = vec_to_poly(&ring, &stair.monomials, &cur);
                    cur = nf_vec(&as_poly.mul(&lam_poly));
                }
                Inserted::Dependent(combo) => {
                    eliminant = combo;
                    break;
                }
            }
            if krylov.len() > dim {
                unreachable!("Krylov sequence exceeded quotient dimension");
            }
        }
        let d = eliminant.len() - 1;

        // solve v_i = g_i(lambda) against the independent Krylov prefix
        let mut coords: Vec<Vec<K::Elt>> = Vec::with_capacity(n);
        for vi in 0..n {
            let w = nf_vec(&Poly::var(&ring, vi));
            let mut solver = Echelon::new(k.clone(), dim);
            for kv in krylov.iter().take(d) {
                match solver.offer(kv) {
                    Inserted::Independent => {}
                    Inserted::Dependent(_) => unreachable!("Krylov prefix is independent"),
                }
            }
            match solver.offer(&w) {
                Inserted::Dependent(combo) => {
                    // combo: sum a_j v_j + w = 0, so g_i = -a_j
                    let g: Vec<K::Elt> =
                        combo[..d].iter().map(|a| k.neg(a)).collect();
                    coords.push(univar::trim(&k, g));
                }
                Inserted::Independent => {
                    // variable not a polynomial in lambda: shape failed
                    continue 'tries;
                }
            }
        }
        let _ = tries;

        let sqfree = univar::squarefree_part(&k, &eliminant);
        let distinct = univar::degree::<K>(&sqfree).unwrap_or(0);
        return Ok(SolvedSystem {
            ring,
            staircase_size: dim,
            eliminant,
            squarefree_eliminant: sqfree,
            coords,
            lambda: lambda.clone(),
            change: identity_with_last_row(&lambda),
            distinct_count: distinct,
        });
    }
    Err(GroebnerError::ShapeFailed { tries: cfg.max_tries })
}

fn vec_to_poly<K: Field>(ring: &RingRc<K>, basis: &[Monomial], v: &[K::Elt]) -> Poly<K> {
    let terms: Vec<(Monomial, K::Elt)> = basis
        .iter()
        .zip(v.iter())
        .filter(|(_, c)| !ring.coeff.is_zero(c))
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Poly::from_terms(ring, terms)
}

fn identity_with_last_row(lambda: &[i64]) -> Vec<Vec<i64>> {
    let n = lambda.len();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate().take(n - 1) {
        row[i] = 1;
    }
    m[n - 1] = lambda.to_vec();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};
    use crate::scalar::QQ;

    fn solve(gens: &[&str], vars: &[&str], seed: u64) -> SolvedSystem<QQ> {
        let r = PolyRing::new(QQ, vars, MonomialOrder::grevlex(vars.len())).unwrap();
        let gens: Vec<_> = gens.iter().map(|s| parse_poly(s, &r).unwrap()).collect();
        let i = Ideal::new(&r, gens).unwrap();
        shape_position_solve(&i, &ShapeConfig { seed, ..Default::default() }).unwrap()
    }

    #[test]
    fn two_points() {
        let s = solve(&["x^2 - 1", "y - x"], &["x", "y"], 1);
        assert_eq!(s.staircase_size, 2);
        assert_eq!(s.distinct_count, 2);
    }

    #[test]
    fn fat_point() {
        // <x^2, y>: one distinct solution, multiplicity 2
        let s = solve(&["x^2", "y"], &["x", "y"], 1);
        assert_eq!(s.staircase_size, 2);
        assert_eq!(s.distinct_count, 1);
    }

    #[test]
    fn distinct_count_seed_invariant() {
        for seed in [1u64, 2, 3] {
            let s = solve(&["x^3 - x", "y - x^2"], &["x", "y"], seed);
            assert_eq!(s.distinct_count, 3, "seed {seed}");
        }
    }

    #[test]
    fn not_zero_dimensional() {
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::grevlex(2)).unwrap();
        let i = Ideal::new(&r, vec![parse_poly("x*y", &r).unwrap()]).unwrap();
        assert!(matches!(
            shape_position_solve(&i, &ShapeConfig::default()),
            Err(GroebnerError::NotZeroDimensional)
        ));
    }

    #[test]
    fn non_curvilinear_fat_point_fails_shape() {
        // the square of the maximal ideal cannot be put in shape position
        let r = PolyRing::new(QQ, &["x", "y"], MonomialOrder::grevlex(2)).unwrap();
        let gens = vec![
            parse_poly("x^2", &r).unwrap(),
            parse_poly("x*y", &r).unwrap(),
            parse_poly("y^2", &r).unwrap(),
        ];
        let i = Ideal::new(&r, gens).unwrap();
        assert!(matches!(
            shape_position_solve(&i, &ShapeConfig::default()),
            Err(GroebnerError::ShapeFailed { .. })
        ));
    }
}
