//! Smith normal form of integer matrices: D = U M V with U, V unimodular
//! and the diagonal entries forming a divisibility chain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IntegerMatrix = Vec<Vec<BigInt>>;

#[derive(Debug, Clone)]
pub struct SnfResult {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

fn identity(n: usize) -> IntegerMatrix {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    m
}

fn mat_mul(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    let n = a.len();
    let m = if n == 0 { 0 } else { b[0].len() };
    let k = b.len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let prod = &a[i][t] * &b[t][j];
                out[i][j] = &out[i][j] + prod;
            }
        }
    }
    out
}

/// Smith normal form by pivoting on the least nonzero absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut d = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0usize;
    while t < rows.min(cols) {
        // find the smallest nonzero entry in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero() {
                    match &pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if d[i][j].abs() < d[*pi][*pj].abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }

        // clear the row and column; restart if a remainder shrinks the pivot
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                for j in 0..cols {
                    let delta = &q * &d[t][j];
                    d[i][j] = &d[i][j] - delta;
                }
                for j in 0..rows {
                    let delta = &q * &u[t][j];
                    u[i][j] = &u[i][j] - delta;
                }
                if !d[i][t].is_zero() {
                    d.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                for i in 0..rows {
                    let delta = &q * &d[i][t];
                    d[i][j] = &d[i][j] - delta;
                }
                for i in 0..cols {
                    let delta = &q * &v[i][t];
                    v[i][j] = &v[i][j] - delta;
                }
                if !d[t][j].is_zero() {
                    for row in d.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
        }

        // enforce the divisibility chain: fold any non-multiple into the pivot
        let mut fold = None;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    fold = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = fold {
            // add row i to row t and redo this pivot
            for j in 0..cols {
                let add = d[i][j].clone();
                d[t][j] = &d[t][j] + add;
            }
            for j in 0..rows {
                let add = u[i][j].clone();
                u[t][j] = &u[t][j] + add;
            }
            continue;
        }

        if d[t][t].is_negative() {
            for j in 0..cols {
                d[t][j] = -d[t][j].clone();
            }
            for j in 0..rows {
                u[t][j] = -u[t][j].clone();
            }
        }
        t += 1;
    }

    SnfResult { d, u, v }
}

impl SnfResult {
    /// The nontrivial diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        let rows = self.d.len();
        let cols = if rows == 0 { 0 } else { self.d[0].len() };
        for i in 0..rows.min(cols) {
            if !self.d[i][i].is_zero() {
                out.push(self.d[i][i].clone());
            }
        }
        out
    }

    /// Re-verify D = U M V by exact multiplication.
    pub fn verifies_against(&self, m: &IntegerMatrix) -> bool {
        let um = mat_mul(&self.u, m);
        let umv = mat_mul(&um, &self.v);
        umv == self.d
    }
}

pub(crate) fn det(m: &IntegerMatrix) -> BigInt {
    // Laplace expansion; fine for the small unimodular checks in tests
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: IntegerMatrix = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()
            })
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn gcd_of_entries() {
        let a = m(&[&[2, 2]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.d[0][0], BigInt::from(2));
        assert!(s.verifies_against(&a));
    }

    #[test]
    fn gcd_lcm_pairing() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
        assert!(s.verifies_against(&a));
    }

    #[test]
    fn random_matrices_verify() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(11);
        for _ in 0..25 {
            let a: IntegerMatrix = (0..4)
                .map(|_| (0..4).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect())
                .collect();
            let s = smith_normal_form(&a);
            assert!(s.verifies_against(&a));
            // divisibility chain
            let f = s.invariant_factors();
            for w in f.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "chain broken: {f:?}");
            }
            // unimodular transforms
            assert_eq!(det(&s.u).abs(), BigInt::from(1));
            assert_eq!(det(&s.v).abs(), BigInt::from(1));
        }
    }
}
