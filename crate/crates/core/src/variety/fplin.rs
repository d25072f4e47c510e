//! Small dense linear algebra over F_p: rank, right kernel, left kernel.

use crate::scalar::{Field, PrimeField};

pub type FpMat = Vec<Vec<u64>>;

pub fn rank(f: &PrimeField, m: &FpMat) -> usize {
    echelon(f, m.clone()).len()
}

/// Reduced row echelon: returns (pivot column, final reduced row) pairs.
fn echelon(f: &PrimeField, mut m: FpMat) -> Vec<(usize, Vec<u64>)> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("pivot nonzero");
        for j in 0..cols {
            m[r][j] = f.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !f.is_zero(&m[i][c]) {
                let t = m[i][c];
                for j in 0..cols {
                    let s = f.mul(&t, &m[r][j]);
                    m[i][j] = f.sub(&m[i][j], &s);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots.into_iter().enumerate().map(|(i, c)| (c, m[i].clone())).collect()
}

/// Basis of the right kernel {v : M v = 0}.
pub fn right_kernel(f: &PrimeField, m: &FpMat, cols: usize) -> Vec<Vec<u64>> {
    let ech = echelon(f, m.clone());
    let pivots: Vec<usize> = ech.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (pc, row) in &ech {
            // pivot value = -row[free]
            v[*pc] = f.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Basis of the left kernel {l : l M = 0} = right kernel of the transpose.
pub fn left_kernel(f: &PrimeField, m: &FpMat) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut t = vec![vec![0u64; rows]; cols];
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            t[j][i] = *x;
        }
    }
    right_kernel(f, &t, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernels() {
        let f = PrimeField::new(13).unwrap();
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&f, &m), 2);
        let rk = right_kernel(&f, &m, 3);
        assert_eq!(rk.len(), 1);
        // check M v = 0
        for row in &m {
            let s: u64 = row
                .iter()
                .zip(&rk[0])
                .fold(0u64, |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            assert_eq!(s, 0);
        }
        let lk = left_kernel(&f, &m);
        assert_eq!(lk.len(), 1);
        for j in 0..3 {
            let s: u64 = (0..3).fold(0u64, |acc, i| f.add(&acc, &f.mul(&lk[0][i], &m[i][j])));
            assert_eq!(s, 0);
        }
    }
}
