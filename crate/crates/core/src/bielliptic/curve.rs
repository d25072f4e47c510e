//! Short Weierstrass curves y^2 z = x^3 + a x z^2 with the chord-tangent
//! group law, over any field of characteristic not dividing 2(-64 a^3).

use super::CurveError;
use crate::scalar::{Field, PrimeField, Rat, QQ};
use num_traits::Zero;

/// y^2 z = x^3 + a x z^2; a = -4 is the curve E, a = +1 the quotient E'.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveSpec {
    pub name: &'static str,
    pub a: i64,
}

impl CurveSpec {
    pub const E: CurveSpec = CurveSpec { name: "E", a: -4 };
    pub const E_PRIME: CurveSpec = CurveSpec { name: "E'", a: 1 };

    /// Characteristic p is good when p is odd and does not divide a
    /// (the discriminant is -64 a^3).
    pub fn good_prime(&self, p: u64) -> bool {
        p > 2 && (self.a.unsigned_abs() % p) != 0
    }
}

/// Projective point, normalized: z = 1 or the origin O = [0:1:0].
/// The 2-torsion point singled out by the construction is T = [0:0:1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePoint<K: Field> {
    Infinity,
    Affine(K::Elt, K::Elt),
}

impl<K: Field> CurvePoint<K> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

/// The group-law context for one curve over one field.
#[derive(Debug, Clone)]
pub struct CurveOps<K: Field> {
    pub k: K,
    pub curve: CurveSpec,
}

impl<K: Field> CurveOps<K> {
    pub fn new(k: K, curve: CurveSpec) -> Self {
        CurveOps { k, curve }
    }

    pub fn origin(&self) -> CurvePoint<K> {
        CurvePoint::Infinity
    }

    /// T = [0:0:1].
    pub fn torsion_t(&self) -> CurvePoint<K> {
        CurvePoint::Affine(self.k.zero(), self.k.zero())
    }

    fn a(&self) -> K::Elt {
        self.k.from_i64(self.curve.a)
    }

    pub fn on_curve(&self, p: &CurvePoint<K>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let k = &self.k;
                let rhs = k.add(&k.mul(x, &k.mul(x, x)), &k.mul(&self.a(), x));
                k.mul(y, y) == rhs
            }
        }
    }

    pub fn neg(&self, p: &CurvePoint<K>) -> CurvePoint<K> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), self.k.neg(y)),
        }
    }

    /// Chord-tangent addition with O as the identity.
    pub fn add(&self, p: &CurvePoint<K>, q: &CurvePoint<K>) -> Result<CurvePoint<K>, CurveError> {
        if !self.on_curve(p) || !self.on_curve(q) {
            return Err(CurveError::PointNotOnCurve);
        }
        let k = &self.k;
        let (x1, y1) = match p {
            CurvePoint::Infinity => return Ok(q.clone()),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return Ok(p.clone()),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let slope = if x1 == x2 {
            if *y1 != *y2 || k.is_zero(y1) {
                return Ok(CurvePoint::Infinity);
            }
            // tangent: (3 x^2 + a) / (2 y)
            let num = k.add(&k.mul(&k.from_i64(3), &k.mul(x1, x1)), &self.a());
            let den = k.mul(&k.from_i64(2), y1);
            k.div(&num, &den)?
        } else {
            let num = k.sub(y2, y1);
            let den = k.sub(x2, x1);
            k.div(&num, &den)?
        };
        let x3 = k.sub(&k.sub(&k.mul(&slope, &slope), x1), x2);
        let y3 = k.sub(&k.mul(&slope, &k.sub(x1, &x3)), y1);
        Ok(CurvePoint::Affine(x3, y3))
    }

    pub fn double(&self, p: &CurvePoint<K>) -> Result<CurvePoint<K>, CurveError> {
        self.add(p, p)
    }
}

/// All rational 2-torsion over Q: the points with y = 0 plus O.
/// x^3 + a x = x (x^2 + a): roots 0 and the square roots of -a when -a is a
/// perfect square.
pub fn two_torsion_q(curve: CurveSpec) -> Vec<CurvePoint<QQ>> {
    let mut out = vec![CurvePoint::Infinity, CurvePoint::Affine(Rat::zero(), Rat::zero())];
    let minus_a = -curve.a;
    if minus_a > 0 {
        let r = (minus_a as f64).sqrt() as i64;
        for c in [r - 1, r, r + 1] {
            if c > 0 && c * c == minus_a {
                out.push(CurvePoint::Affine(QQ.from_i64(c), Rat::zero()));
                out.push(CurvePoint::Affine(QQ.from_i64(-c), Rat::zero()));
                break;
            }
        }
    }
    out
}

/// Rational 2-torsion over F_p by scanning the roots of x^2 + a.
pub fn two_torsion(f: &PrimeField, curve: CurveSpec) -> Result<Vec<CurvePoint<PrimeField>>, CurveError> {
    if !curve.good_prime(f.modulus()) {
        return Err(CurveError::BadPrime(f.modulus()));
    }
    let mut out: Vec<CurvePoint<PrimeField>> =
        vec![CurvePoint::Infinity, CurvePoint::Affine(0, 0)];
    let minus_a = f.neg(&f.elt(curve.a));
    if let Some(r) = f.sqrt(minus_a) {
        if r != 0 {
            out.push(CurvePoint::Affine(r, 0));
            out.push(CurvePoint::Affine(f.neg(&r), 0));
        }
    }
    Ok(out)
}

/// Every affine point of the curve over F_p (plus O first), deterministic
/// order: x ascending, then the smaller square root first.
pub fn all_points(f: &PrimeField, curve: CurveSpec) -> Result<Vec<CurvePoint<PrimeField>>, CurveError> {
    if !curve.good_prime(f.modulus()) {
        return Err(CurveError::BadPrime(f.modulus()));
    }
    let p = f.modulus();
    let a = f.elt(curve.a);
    let mut out = vec![CurvePoint::Infinity];
    for x in 0..p {
        let rhs = f.add(&f.mul(&x, &f.mul(&x, &x)), &f.mul(&a, &x));
        if rhs == 0 {
            out.push(CurvePoint::Affine(x, 0));
        } else if let Some(r) = f.sqrt(rhs) {
            let r2 = f.neg(&r);
            let (lo, hi) = if r < r2 { (r, r2) } else { (r2, r) };
            out.push(CurvePoint::Affine(x, lo));
            out.push(CurvePoint::Affine(x, hi));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_two_torsion() {
        let f = PrimeField::new(13).unwrap();
        let ops = CurveOps::new(f, CurveSpec::E);
        let t = ops.torsion_t();
        assert!(ops.on_curve(&t));
        let p = CurvePoint::Affine(f.elt(1), f.elt(6)); // 1 + (-4) = -3 = 10 = 6^2 mod 13
        assert!(ops.on_curve(&p));
        assert_eq!(ops.add(&p, &ops.origin()).unwrap(), p);
        // T + T = O: y = 0 forces 2-torsion
        assert_eq!(ops.add(&t, &t).unwrap(), CurvePoint::Infinity);
    }

    #[test]
    fn two_torsion_over_q() {
        // E: x^3 - 4x = x(x-2)(x+2): full 2-torsion is rational
        let e = two_torsion_q(CurveSpec::E);
        assert_eq!(e.len(), 4);
        // E': x^3 + x = x(x^2+1): only O and (0,0)
        let ep = two_torsion_q(CurveSpec::E_PRIME);
        assert_eq!(ep.len(), 2);
    }

    #[test]
    fn e_prime_two_torsion_splits_mod_5() {
        // oracle: exhaustive root search of x^2 + 1 mod 5
        let roots: Vec<u64> = (0..5).filter(|x| (x * x + 1) % 5 == 0).collect();
        assert_eq!(roots.len(), 2);
        let f = PrimeField::new(5).unwrap();
        let t = two_torsion(&f, CurveSpec::E_PRIME).unwrap();
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn chord_law_matches_line_intersection_oracle() {
        // independent oracle: P+Q is the reflection of the third intersection
        // of the line through P and Q with the curve; verify via the cubic's
        // root sum x1 + x2 + x3 = slope^2
        let f = PrimeField::new(13).unwrap();
        let ops = CurveOps::new(f, CurveSpec::E);
        let pts = all_points(&f, CurveSpec::E).unwrap();
        for p in &pts {
            for q in &pts {
                let s = ops.add(p, q).unwrap();
                assert!(ops.on_curve(&s));
                if let (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2), CurvePoint::Affine(x3, _)) =
                    (p, q, &s)
                {
                    if x1 != x2 {
                        let slope = f.div(&f.sub(y2, y1), &f.sub(x2, x1)).unwrap();
                        let sum = f.add(&f.add(x1, x2), x3);
                        assert_eq!(sum, f.mul(&slope, &slope));
                    }
                }
            }
        }
    }

    #[test]
    fn group_axioms_sampled() {
        for p in [13u64, 17, 10007] {
            let f = PrimeField::new(p).unwrap();
            let ops = CurveOps::new(f, CurveSpec::E);
            let pts = all_points(&f, CurveSpec::E).unwrap();
            let step = (pts.len() / 7).max(1);
            let sample: Vec<_> = pts.iter().step_by(step).collect();
            for a in &sample {
                // inverse
                let na = ops.neg(a);
                assert_eq!(ops.add(a, &na).unwrap(), CurvePoint::Infinity);
                for b in &sample {
                    for c in &sample {
                        let ab_c = ops.add(&ops.add(a, b).unwrap(), c).unwrap();
                        let a_bc = ops.add(a, &ops.add(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                    }
                }
            }
        }
    }
}
