//! Presentations ⟨generators | relators⟩ with words as signed 1-based
//! generator indices, freely reduced on construction.

use super::snf::{smith_normal_form, IntegerMatrix};
use super::GroupError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    /// Words over the generators: +i means generator i, -i its inverse
    /// (1-based).
    pub relators: Vec<Vec<i32>>,
}

/// Cancel adjacent g g^{-1} pairs until stable.
pub fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &s in word {
        if s == 0 {
            continue;
        }
        if out.last().map(|&t| t == -s).unwrap_or(false) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<i32>>) -> Result<Self, GroupError> {
        let n = generators.len() as i32;
        let mut reduced = Vec::with_capacity(relators.len());
        for w in relators {
            for &s in &w {
                if s == 0 || s.abs() > n {
                    return Err(GroupError::InvalidRank(s as i64));
                }
            }
            let r = free_reduce(&w);
            if !r.is_empty() {
                reduced.push(r);
            }
        }
        Ok(GroupPresentation { generators, relators: reduced })
    }

    pub fn trivial() -> Self {
        GroupPresentation { generators: Vec::new(), relators: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Relator exponent-sum matrix: rows relators, columns generators.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        self.relators
            .iter()
            .map(|w| {
                let mut row = vec![BigInt::zero(); self.generators.len()];
                for &s in w {
                    let i = (s.unsigned_abs() as usize) - 1;
                    if s > 0 {
                        row[i] += 1;
                    } else {
                        row[i] -= 1;
                    }
                }
                row
            })
            .collect()
    }
}

fn gen_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// F_n: n generators, no relators.
pub fn free_group(n: usize) -> GroupPresentation {
    GroupPresentation { generators: gen_names("a", n), relators: Vec::new() }
}

/// pi_1 of the non-orientable closed surface of genus k:
/// ⟨a_1..a_k | a_1^2 a_2^2 ... a_k^2⟩. Requires k >= 1.
pub fn surface_group_nonorientable(k: usize) -> Result<GroupPresentation, GroupError> {
    if k < 1 {
        return Err(GroupError::InvalidRank(k as i64));
    }
    let mut rel = Vec::with_capacity(2 * k);
    for i in 1..=k as i32 {
        rel.push(i);
        rel.push(i);
    }
    Ok(GroupPresentation { generators: gen_names("a", k), relators: vec![rel] })
}

/// Free product: concatenated generators (second factor renamed) and the
/// relators of both factors with shifted indices.
pub fn free_product(g: &GroupPresentation, h: &GroupPresentation) -> GroupPresentation {
    let shift = g.generators.len() as i32;
    let mut generators = g.generators.clone();
    for (i, name) in h.generators.iter().enumerate() {
        let mut candidate = name.clone();
        if generators.contains(&candidate) {
            candidate = format!("{name}_{}", i + 1 + shift as usize);
        }
        generators.push(candidate);
    }
    let mut relators = g.relators.clone();
    for w in &h.relators {
        relators.push(w.iter().map(|&s| if s > 0 { s + shift } else { s - shift }).collect());
    }
    GroupPresentation { generators, relators }
}

/// Z^rank plus finite cyclic factors Z/d_i (d_i > 1, divisibility chain).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        torsion.sort();
        AbelianGroup { rank: self.rank + other.rank, torsion }
    }
}

/// Abelianization from the Smith normal form of the relation matrix.
pub fn abelianization(g: &GroupPresentation) -> AbelianGroup {
    let n = g.generators.len();
    if g.relators.is_empty() {
        return AbelianGroup { rank: n, torsion: Vec::new() };
    }
    let m = g.relation_matrix();
    let snf = smith_normal_form(&m);
    let factors = snf.invariant_factors();
    let rank = n - factors.len();
    let mut torsion: Vec<BigInt> =
        factors.into_iter().filter(|d| !d.is_one()).collect();
    torsion.sort();
    AbelianGroup { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let f3 = free_group(3);
        assert_eq!(f3.rank(), 3);
        assert!(f3.relators.is_empty());

        let klein = surface_group_nonorientable(2).unwrap();
        assert_eq!(klein.relators, vec![vec![1, 1, 2, 2]]);

        assert!(surface_group_nonorientable(0).is_err());

        let f5 = free_product(&free_group(2), &free_group(3));
        assert_eq!(f5.rank(), 5);
        assert!(f5.relators.is_empty());
    }

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        // idempotent and length-non-increasing
        let w = vec![1, 2, -2, 2, -1, 1, -2];
        let r = free_reduce(&w);
        assert!(r.len() <= w.len());
        assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn abelianizations() {
        // trivial presentation: H_1 = 0
        assert!(abelianization(&GroupPresentation::trivial()).is_trivial());

        // pi_1(N_k) = Z^{k-1} + Z/2 for k = 2..10: the relator row is
        // (2,...,2), and the SNF oracle itself confirms the pattern
        for k in 2..=10usize {
            let g = surface_group_nonorientable(k).unwrap();
            let ab = abelianization(&g);
            assert_eq!(ab.rank, k - 1, "k={k}");
            assert_eq!(ab.torsion, vec![BigInt::from(2)], "k={k}");
        }

        // free_product(N_2, F_24): Z^25 + Z/2 via direct-sum additivity
        let g = free_product(&surface_group_nonorientable(2).unwrap(), &free_group(24));
        let ab = abelianization(&g);
        assert_eq!(ab.rank, 25);
        assert_eq!(ab.torsion, vec![BigInt::from(2)]);
        let direct = abelianization(&surface_group_nonorientable(2).unwrap())
            .direct_sum(&abelianization(&free_group(24)));
        assert_eq!(ab, direct);
    }

    #[test]
    fn abelianization_of_free_product_is_additive() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n1 = rng.gen_range(1..4usize);
            let n2 = rng.gen_range(1..4usize);
            let mk = |n: usize, rng: &mut rand_chacha::ChaCha20Rng| {
                let rel_count = rng.gen_range(0..3usize);
                let relators: Vec<Vec<i32>> = (0..rel_count)
                    .map(|_| {
                        (0..rng.gen_range(1..6usize))
                            .map(|_| {
                                let g = rng.gen_range(1..=n as i32);
                                if rng.gen_bool(0.5) {
                                    g
                                } else {
                                    -g
                                }
                            })
                            .collect()
                    })
                    .collect();
                GroupPresentation::new(gen_names("a", n), relators).unwrap()
            };
            let g = mk(n1, &mut rng);
            let h = mk(n2, &mut rng);
            let lhs = abelianization(&free_product(&g, &h));
            let rhs = abelianization(&g).direct_sum(&abelianization(&h));
            assert_eq!(lhs, rhs);
        }
    }
}
