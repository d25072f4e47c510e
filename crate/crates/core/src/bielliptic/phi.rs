//! The explicit map from E x E onto the face-cuboid surface:
//!
//!   A = y1^2 y2^2 - 16 x1^2 x2^2        X = 4 (y1^2 x2^2 + y2^2 x1^2)
//!   B = 4 (y1^2 x2^2 - y2^2 x1^2)       Y = y1^2 y2^2 + 16 x1^2 x2^2
//!   C = 8 x1 x2 y1 y2                   U = (y1^2 + 8 x1 z1)(y2^2 + 8 x2 z2)
//!
//! All six coordinates are bihomogeneous of bidegree (2,2), so the map is
//! well defined on the product of projective curves. The symbolic check
//! reduces the three defining quadrics of the surface, after substitution,
//! to exact zero modulo the two curve relations.

use super::curve::{all_points, CurveOps, CurvePoint, CurveSpec};
use super::CurveError;
use crate::groebner::{is_groebner_basis, normal_form};
use crate::poly::{parse_poly, MonomialOrder, Poly, PolyRing, RingRc};
use crate::scalar::{Field, PrimeField, QQ};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Image coordinates in the order (A, B, C, X, Y, U).
#[derive(Debug, Clone, PartialEq)]
pub struct PhiImage<K: Field> {
    pub coords: [K::Elt; 6],
}

impl<K: Field> PhiImage<K> {
    /// Exact check of the three defining quadrics of the surface.
    pub fn satisfies_surface(&self, k: &K) -> bool {
        let [a, b, c, x, y, u] = &self.coords;
        let sq = |t: &K::Elt| k.mul(t, t);
        let q1 = k.sub(&k.add(&sq(a), &sq(c)), &sq(y));
        let q2 = k.sub(&k.add(&sq(b), &sq(c)), &sq(x));
        let q3 = k.sub(&k.add(&sq(a), &sq(x)), &sq(u));
        k.is_zero(&q1) && k.is_zero(&q2) && k.is_zero(&q3)
    }
}

/// Projective equality via vanishing of all 2x2 minors of the stacked
/// coordinate vectors (no division, any field).
pub fn projectively_equal<K: Field>(k: &K, a: &PhiImage<K>, b: &PhiImage<K>) -> bool {
    let nonzero_a = a.coords.iter().any(|c| !k.is_zero(c));
    let nonzero_b = b.coords.iter().any(|c| !k.is_zero(c));
    if !nonzero_a || !nonzero_b {
        return false;
    }
    for i in 0..6 {
        for j in i + 1..6 {
            let m = k.sub(&k.mul(&a.coords[i], &b.coords[j]), &k.mul(&a.coords[j], &b.coords[i]));
            if !k.is_zero(&m) {
                return false;
            }
        }
    }
    true
}

/// Evaluate the six printed formulas at a pair of projective points of E.
pub fn phi<K: Field>(
    ops: &CurveOps<K>,
    p: &CurvePoint<K>,
    q: &CurvePoint<K>,
) -> Result<PhiImage<K>, CurveError> {
    if !ops.on_curve(p) || !ops.on_curve(q) {
        return Err(CurveError::PointNotOnCurve);
    }
    let k = &ops.k;
    let proj = |pt: &CurvePoint<K>| -> (K::Elt, K::Elt, K::Elt) {
        match pt {
            CurvePoint::Infinity => (k.zero(), k.one(), k.zero()),
            CurvePoint::Affine(x, y) => (x.clone(), y.clone(), k.one()),
        }
    };
    let (x1, y1, z1) = proj(p);
    let (x2, y2, z2) = proj(q);
    let sq = |t: &K::Elt| k.mul(t, t);
    let y1s = sq(&y1);
    let y2s = sq(&y2);
    let x1s = sq(&x1);
    let x2s = sq(&x2);
    let c16 = k.from_i64(16);
    let c8 = k.from_i64(8);
    let c4 = k.from_i64(4);
    let a = k.sub(&k.mul(&y1s, &y2s), &k.mul(&c16, &k.mul(&x1s, &x2s)));
    let b = k.mul(&c4, &k.sub(&k.mul(&y1s, &x2s), &k.mul(&y2s, &x1s)));
    let c = k.mul(&c8, &k.mul(&k.mul(&x1, &x2), &k.mul(&y1, &y2)));
    let x = k.mul(&c4, &k.add(&k.mul(&y1s, &x2s), &k.mul(&y2s, &x1s)));
    let y = k.add(&k.mul(&y1s, &y2s), &k.mul(&c16, &k.mul(&x1s, &x2s)));
    let u = k.mul(
        &k.add(&y1s, &k.mul(&c8, &k.mul(&x1, &z1))),
        &k.add(&y2s, &k.mul(&c8, &k.mul(&x2, &z2))),
    );
    Ok(PhiImage { coords: [a, b, c, x, y, u] })
}

fn product_ring() -> RingRc<QQ> {
    PolyRing::new(QQ, &["x1", "y1", "z1", "x2", "y2", "z2"], MonomialOrder::grevlex(6)).unwrap()
}

fn formula_polys(ring: &RingRc<QQ>) -> [Poly<QQ>; 6] {
    let p = |s: &str| parse_poly(s, ring).unwrap();
    [
        p("y1^2*y2^2 - 16*x1^2*x2^2"),
        p("4*(y1^2*x2^2 - y2^2*x1^2)"),
        p("8*x1*x2*y1*y2"),
        p("4*(y1^2*x2^2 + y2^2*x1^2)"),
        p("y1^2*y2^2 + 16*x1^2*x2^2"),
        p("(y1^2 + 8*x1*z1)*(y2^2 + 8*x2*z2)"),
    ]
}

fn curve_relations(ring: &RingRc<QQ>) -> [Poly<QQ>; 2] {
    [
        parse_poly("y1^2*z1 - x1^3 + 4*x1*z1^2", ring).unwrap(),
        parse_poly("y2^2*z2 - x2^3 + 4*x2*z2^2", ring).unwrap(),
    ]
}

/// Exact symbolic verification: each defining quadric of the surface,
/// substituted with the formulas, reduces to zero modulo the two curve
/// relations (which form a Groebner basis: their leading monomials x1^3 and
/// x2^3 are coprime).
pub fn phi_symbolic_check() -> Result<bool, CurveError> {
    let ring = product_ring();
    let rels = curve_relations(&ring);
    let (is_gb, _) = is_groebner_basis(&rels).map_err(|_| CurveError::PointNotOnCurve)?;
    if !is_gb {
        return Ok(false);
    }
    let [a, b, c, x, y, u] = formula_polys(&ring);
    let quadrics = [
        a.mul(&a).add(&c.mul(&c)).sub(&y.mul(&y)),
        b.mul(&b).add(&c.mul(&c)).sub(&x.mul(&x)),
        a.mul(&a).add(&x.mul(&x)).sub(&u.mul(&u)),
    ];
    for q in &quadrics {
        let nf = normal_form(q, &rels).map_err(|_| CurveError::PointNotOnCurve)?;
        if !nf.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact symbolic check that the map is invariant under (P,Q) -> (-P,-Q):
/// flipping the signs of y1 and y2 fixes all six formulas.
pub fn phi_iota_invariance() -> Result<bool, CurveError> {
    let ring = product_ring();
    let mut bind = BTreeMap::new();
    bind.insert("y1".to_string(), parse_poly("-y1", &ring).unwrap());
    bind.insert("y2".to_string(), parse_poly("-y2", &ring).unwrap());
    for f in formula_polys(&ring) {
        let g = f.substitute(&bind, &ring)?;
        if g != f {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize)]
pub struct PhiSampleReport {
    pub p: u64,
    pub samples: u32,
    pub on_surface_failures: u32,
    pub gamma_invariance_failures: u32,
    /// Pairs rejected because the written formulas vanish identically there
    /// (the base locus: pairs involving T or its translates under gamma).
    pub base_locus_rejections: u32,
}

/// Sample pairs of points of E(F_p); check the image satisfies the surface
/// equations exactly and that composing with (P,Q) -> (P+T, Q+T) moves the
/// image only projectively. Pairs landing on the base locus of the written
/// formulas (image identically zero on either side) are rejected and
/// redrawn, with the rejection count reported.
pub fn phi_sampled_check(p: u64, samples: u32, seed: u64) -> Result<PhiSampleReport, CurveError> {
    let f = PrimeField::new(p).map_err(|_| CurveError::BadPrime(p))?;
    if !CurveSpec::E.good_prime(p) {
        return Err(CurveError::BadPrime(p));
    }
    let ops = CurveOps::new(f, CurveSpec::E);
    let pts = all_points(&f, CurveSpec::E)?;
    let t = ops.torsion_t();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut on_surface_failures = 0;
    let mut gamma_failures = 0;
    let mut rejections = 0u32;
    let is_zero_img =
        |img: &PhiImage<PrimeField>| img.coords.iter().all(|c| f.is_zero(c));
    let mut done = 0u32;
    while done < samples {
        let pi = rng.gen_range(0..pts.len());
        let qi = rng.gen_range(0..pts.len());
        let (pp, qq) = (&pts[pi], &pts[qi]);
        let img = phi(&ops, pp, qq)?;
        let gp = ops.add(pp, &t)?;
        let gq = ops.add(qq, &t)?;
        let img2 = phi(&ops, &gp, &gq)?;
        if is_zero_img(&img) || is_zero_img(&img2) {
            rejections += 1;
            continue;
        }
        if !img.satisfies_surface(&f) {
            on_surface_failures += 1;
        }
        if !projectively_equal(&f, &img, &img2) {
            gamma_failures += 1;
        }
        done += 1;
    }
    Ok(PhiSampleReport {
        p,
        samples,
        on_surface_failures,
        gamma_invariance_failures: gamma_failures,
        base_locus_rejections: rejections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_reduction_to_zero() {
        assert!(phi_symbolic_check().unwrap());
    }

    #[test]
    fn iota_invariance_exact() {
        assert!(phi_iota_invariance().unwrap());
    }

    #[test]
    fn sampled_images_land_on_the_surface() {
        let r = phi_sampled_check(13, 50, 7).unwrap();
        assert_eq!(r.on_surface_failures, 0);
        assert_eq!(r.gamma_invariance_failures, 0);
    }

    #[test]
    fn pointwise_image_example() {
        // P = (1, 6) on E over F_13; the image must satisfy the equations
        let f = PrimeField::new(13).unwrap();
        let ops = CurveOps::new(f, CurveSpec::E);
        let p = CurvePoint::Affine(1, 6);
        let img = phi(&ops, &p, &p).unwrap();
        assert!(img.satisfies_surface(&f));
    }
}
