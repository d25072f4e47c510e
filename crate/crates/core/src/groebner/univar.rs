//! Dense univariate helpers over any field: division, gcd, squarefree part.
//! Coefficients ascending; empty vector is the zero polynomial.

use crate::scalar::Field;

pub fn trim<K: Field>(k: &K, mut c: Vec<K::Elt>) -> Vec<K::Elt> {
    while c.last().map(|x| k.is_zero(x)).unwrap_or(false) {
        c.pop();
    }
    c
}

pub fn degree<K: Field>(c: &[K::Elt]) -> Option<usize> {
    if c.is_empty() {
        None
    } else {
        Some(c.len() - 1)
    }
}

pub fn deriv<K: Field>(k: &K, c: &[K::Elt]) -> Vec<K::Elt> {
    let mut out = Vec::with_capacity(c.len().saturating_sub(1));
    for (i, a) in c.iter().enumerate().skip(1) {
        out.push(k.mul(a, &k.from_i64(i as i64)));
    }
    trim(k, out)
}

pub fn monic<K: Field>(k: &K, c: &[K::Elt]) -> Vec<K::Elt> {
    match c.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = k.inv(lc).expect("nonzero leading coefficient");
            c.iter().map(|a| k.mul(a, &inv)).collect()
        }
    }
}

/// Remainder of a by b (b nonzero).
pub fn rem<K: Field>(k: &K, a: &[K::Elt], b: &[K::Elt]) -> Vec<K::Elt> {
    let mut r = a.to_vec();
    let db = degree::<K>(b).expect("nonzero divisor");
    let binv = k.inv(&b[db]).expect("nonzero leading coefficient");
    while let Some(dr) = degree::<K>(&r) {
        if dr < db {
            break;
        }
        let q = k.mul(&r[dr], &binv);
        let shift = dr - db;
        for i in 0..=db {
            let t = k.mul(&q, &b[i]);
            r[i + shift] = k.sub(&r[i + shift], &t);
        }
        r = trim(k, r);
    }
    r
}

pub fn mul<K: Field>(k: &K, a: &[K::Elt], b: &[K::Elt]) -> Vec<K::Elt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, out)
}

/// Quotient of a by b when b divides a exactly (used for squarefree parts).
pub fn exact_div<K: Field>(k: &K, a: &[K::Elt], b: &[K::Elt]) -> Vec<K::Elt> {
    let mut r = a.to_vec();
    let db = degree::<K>(b).expect("nonzero divisor");
    let binv = k.inv(&b[db]).expect("nonzero leading coefficient");
    let mut q = vec![k.zero(); a.len().saturating_sub(b.len()) + 1];
    while let Some(dr) = degree::<K>(&r) {
        if dr < db {
            break;
        }
        let c = k.mul(&r[dr], &binv);
        let shift = dr - db;
        q[shift] = c.clone();
        for i in 0..=db {
            let t = k.mul(&c, &b[i]);
            r[i + shift] = k.sub(&r[i + shift], &t);
        }
        r = trim(k, r);
    }
    debug_assert!(r.is_empty(), "exact_div with nonzero remainder");
    trim(k, q)
}

/// Monic gcd via the Euclidean algorithm.
pub fn gcd<K: Field>(k: &K, a: &[K::Elt], b: &[K::Elt]) -> Vec<K::Elt> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// f / gcd(f, f'), monic: the squarefree part (characteristic-0 or large-p use).
pub fn squarefree_part<K: Field>(k: &K, f: &[K::Elt]) -> Vec<K::Elt> {
    if f.is_empty() {
        return Vec::new();
    }
    let d = deriv(k, f);
    if d.is_empty() {
        return monic(k, f);
    }
    let g = gcd(k, f, &d);
    monic(k, &exact_div(k, f, &g))
}

pub fn eval<K: Field>(k: &K, f: &[K::Elt], x: &K::Elt) -> K::Elt {
    let mut acc = k.zero();
    for c in f.iter().rev() {
        acc = k.add(&k.mul(&acc, x), c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{PrimeField, QQ, Field};

    fn q(v: &[i64]) -> Vec<<QQ as Field>::Elt> {
        v.iter().map(|&n| QQ.from_i64(n)).collect()
    }

    #[test]
    fn squarefree_examples() {
        // x^2 -> x
        assert_eq!(squarefree_part(&QQ, &q(&[0, 0, 1])), q(&[0, 1]));
        // x^2 - 1 stays
        assert_eq!(squarefree_part(&QQ, &q(&[-1, 0, 1])), q(&[-1, 0, 1]));
        // (x-1)^3 (x+2) -> (x-1)(x+2) = x^2 + x - 2
        let f = mul(&QQ, &mul(&QQ, &q(&[-1, 1]), &q(&[-1, 1])), &mul(&QQ, &q(&[-1, 1]), &q(&[2, 1])));
        assert_eq!(squarefree_part(&QQ, &f), q(&[-2, 1, 1]));
    }

    #[test]
    fn gcd_mod_p() {
        let f = PrimeField::new(13).unwrap();
        // gcd(x^2 - 1, x - 1) = x - 1 (monic)
        let a = vec![12u64, 0, 1];
        let b = vec![12u64, 1];
        assert_eq!(gcd(&f, &a, &b), vec![12u64, 1]);
    }
}
