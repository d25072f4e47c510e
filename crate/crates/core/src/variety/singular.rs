//! Singular-locus ideals: chart-restricted equations plus all maximal minors
//! of the chart Jacobian, and the stratified variants with earlier chart
//! variables pinned to zero.

use super::{VarietyError, VarietySpec};
use crate::groebner::Ideal;
use crate::poly::{jacobian, Poly, RingRc};
use crate::scalar::{Field, QQ};
use std::collections::BTreeMap;

/// Equations and minors of a chart's singular-locus system. The minor list
/// keeps identically-zero minors so the combinatorial count is visible; the
/// ideal drops them.
#[derive(Debug, Clone)]
pub struct SingularSystem {
    pub ring: RingRc<QQ>,
    pub equations: Vec<Poly<QQ>>,
    pub minors: Vec<Poly<QQ>>,
}

impl SingularSystem {
    pub fn ideal(&self) -> Result<Ideal<QQ>, VarietyError> {
        let gens = self.equations.iter().chain(self.minors.iter()).cloned().collect();
        Ok(Ideal::new(&self.ring, gens)?)
    }

    pub fn generators(&self) -> Vec<Poly<QQ>> {
        self.equations
            .iter()
            .chain(self.minors.iter())
            .filter(|g| !g.is_zero())
            .cloned()
            .collect()
    }
}

/// Chart-restricted defining equations plus all codim x codim minors of the
/// chart Jacobian.
pub fn singular_locus_ideal(spec: &VarietySpec, chart: &str) -> Result<SingularSystem, VarietyError> {
    let chart_idx = spec
        .ring
        .var_index(chart)
        .map_err(|_| VarietyError::UnknownChart(chart.to_string()))?;
    let chart_ring = spec.ring.without_var(chart_idx)?;
    let eqs: Vec<Poly<QQ>> = spec
        .equations
        .iter()
        .map(|e| e.set_var_to_one(chart_idx, &chart_ring))
        .collect();
    let jac = jacobian(&eqs)?;
    let minors = maximal_minors(&chart_ring, &jac, spec.codim);
    Ok(SingularSystem { ring: chart_ring, equations: eqs, minors })
}

/// All r x r minors of the row-full Jacobian (column subsets enumerated in
/// lexicographic order).
fn maximal_minors(ring: &RingRc<QQ>, jac: &[Vec<Poly<QQ>>], r: usize) -> Vec<Poly<QQ>> {
    let ncols = ring.nvars();
    let mut out = Vec::new();
    let mut cols: Vec<usize> = (0..r).collect();
    if r > ncols || jac.len() < r {
        return out;
    }
    loop {
        out.push(det(ring, jac, &cols));
        // next combination
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cols[i] + 1 <= ncols - (r - i) {
                cols[i] += 1;
                for j in i + 1..r {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Cofactor-expansion determinant of the row-submatrix on all `jac` rows and
/// the given columns (row count equals column count).
fn det(ring: &RingRc<QQ>, jac: &[Vec<Poly<QQ>>], cols: &[usize]) -> Poly<QQ> {
    let n = cols.len();
    let rows: Vec<usize> = (0..n).collect();
    det_rec(ring, jac, &rows, cols)
}

fn det_rec(ring: &RingRc<QQ>, jac: &[Vec<Poly<QQ>>], rows: &[usize], cols: &[usize]) -> Poly<QQ> {
    if rows.len() == 1 {
        return jac[rows[0]][cols[0]].clone();
    }
    let mut acc = Poly::zero(ring);
    let sub_rows: Vec<usize> = rows[1..].to_vec();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &jac[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> =
            cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &cc)| cc).collect();
        let minor = det_rec(ring, jac, &sub_rows, &sub_cols);
        let term = entry.mul(&minor);
        if k % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// The stratum system: the chart singular system with the given earlier
/// variables set to zero, in the smaller ring. Returns the live ring and the
/// nonzero generators; `None` when the stratum is plainly inconsistent
/// (a nonzero constant appears).
pub fn stratum_system(
    spec: &VarietySpec,
    chart: &str,
    zeros: &[String],
) -> Result<Option<(RingRc<QQ>, Vec<Poly<QQ>>)>, VarietyError> {
    let sys = singular_locus_ideal(spec, chart)?;
    let mut ring = sys.ring.clone();
    let mut gens = sys.generators();
    for z in zeros {
        let idx = ring.var_index(z).map_err(|_| VarietyError::UnknownChart(z.clone()))?;
        let target = ring.without_var(idx)?;
        let zero_img = Poly::zero(&target);
        let mut bind = BTreeMap::new();
        bind.insert(z.clone(), zero_img);
        let mut next = Vec::new();
        for g in &gens {
            // set z -> 0 and move into the smaller ring
            let h = g.substitute(&bind, &target)?;
            if !h.is_zero() {
                next.push(h);
            }
        }
        ring = target;
        gens = next;
    }
    // a nonzero constant makes the stratum empty
    if gens.iter().any(|g| g.lm().map(|m| m.is_one()).unwrap_or(false)) {
        return Ok(None);
    }
    Ok(Some((ring, gens)))
}

/// Helper for tests and the census: evaluate the full system at a rational
/// point of the chart.
pub(crate) fn system_vanishes_at(sys: &SingularSystem, point: &[crate::scalar::Rat]) -> bool {
    sys.equations
        .iter()
        .chain(sys.minors.iter())
        .all(|g| QQ.is_zero(&g.evaluate(point)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::builtin;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};

    #[test]
    fn minor_counts_match_combinatorics() {
        // independent oracle: C(n, r) by direct computation
        fn choose(n: usize, r: usize) -> usize {
            if r > n {
                return 0;
            }
            let mut acc = 1usize;
            for i in 0..r {
                acc = acc * (n - i) / (i + 1);
            }
            acc
        }
        let u = builtin("upsilon").unwrap();
        let s = singular_locus_ideal(&u, "U").unwrap();
        assert_eq!(s.equations.len(), 4);
        assert_eq!(s.minors.len(), choose(6, 4));
        assert_eq!(s.minors.len(), 15);

        let v = builtin("V").unwrap();
        let sv = singular_locus_ideal(&v, "U").unwrap();
        assert_eq!(sv.equations.len(), 3);
        assert_eq!(sv.minors.len(), choose(5, 3));
        assert_eq!(sv.minors.len(), 10);
    }

    #[test]
    fn smooth_quadric_has_empty_singular_locus() {
        // x^2 + y^2 + z^2 - w^2 in P^3, chart w = 1
        let ring = PolyRing::new(QQ, &["x", "y", "z", "w"], MonomialOrder::grevlex(4)).unwrap();
        let eq = parse_poly("x^2 + y^2 + z^2 - w^2", &ring).unwrap();
        let spec = VarietySpec { name: "quadric".into(), ring, equations: vec![eq], codim: 1 };
        let sys = singular_locus_ideal(&spec, "w").unwrap();
        let ideal = sys.ideal().unwrap();
        let gb = crate::groebner::buchberger(&ideal).unwrap();
        // the ideal contains 1
        assert!(gb.elements.iter().any(|g| g.lm().map(|m| m.is_one()).unwrap_or(false)));
    }

    #[test]
    fn known_singular_point_kills_the_system() {
        use crate::scalar::Rat;
        // [1:0:0:0:1:1:1] normalized on chart A: (B,C,X,Y,Z,U) = (0,0,0,1,1,1)
        let u = builtin("upsilon").unwrap();
        let s = singular_locus_ideal(&u, "A").unwrap();
        let pt: Vec<Rat> = [0i64, 0, 0, 1, 1, 1].iter().map(|&n| Rat::from_integer(n.into())).collect();
        assert!(system_vanishes_at(&s, &pt));
    }
}
