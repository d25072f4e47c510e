//! Staircases: the monomials outside a leading ideal. For a verified basis
//! the staircase cardinality is the vector-space dimension of the quotient,
//! which is finite exactly when every variable shows a pure power among the
//! leading monomials.

use super::GroebnerBasis;
use crate::poly::Monomial;
use crate::scalar::Field;

#[derive(Debug, Clone)]
pub struct Staircase {
    /// Monomials outside the leading ideal, sorted by (degree, exponents).
    /// Empty when `finite` is false.
    pub monomials: Vec<Monomial>,
    pub finite: bool,
}

impl Staircase {
    pub fn dimension(&self) -> Option<usize> {
        self.finite.then_some(self.monomials.len())
    }
}

/// Staircase of the leading ideal of a verified basis. Works for global and
/// local orders alike; an infinite staircase is reported, not an error.
pub fn quotient_dimension<K: Field>(gb: &GroebnerBasis<K>) -> Staircase {
    assert!(gb.verified, "staircase requires a verified basis");
    let leads: Vec<Monomial> = gb.elements.iter().filter_map(|g| g.lm().cloned()).collect();
    staircase_of_leads(&leads, gb.ring().nvars())
}

/// Staircase of the leading ideal inside R/m^bound: monomials of degree
/// below the bound outside the leading ideal. Always finite. When the
/// maximal staircase degree is at most bound - 2, this staircase equals the
/// untruncated one and its size is the exact local dimension (any leading
/// monomial of degree below the bound survives adding m^bound).
pub fn truncated_staircase<K: Field>(gb: &GroebnerBasis<K>, bound: u32) -> Staircase {
    let leads: Vec<Monomial> = gb.elements.iter().filter_map(|g| g.lm().cloned()).collect();
    let nvars = gb.ring().nvars();
    if leads.iter().any(|m| m.is_one()) {
        return Staircase { monomials: Vec::new(), finite: true };
    }
    let monomials = Monomial::all_below(nvars, bound)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect();
    Staircase { monomials, finite: true }
}

pub(crate) fn staircase_of_leads(leads: &[Monomial], nvars: usize) -> Staircase {
    if leads.iter().any(|m| m.is_one()) {
        // unit ideal: empty staircase, dimension 0
        return Staircase { monomials: Vec::new(), finite: true };
    }
    // finite iff every variable has a pure power among the leads
    let mut bound = vec![0u16; nvars];
    for v in 0..nvars {
        let mut best: Option<u16> = None;
        for m in leads {
            let e = m.exp(v);
            if e > 0 && (0..nvars).all(|w| w == v || m.exp(w) == 0) {
                best = Some(best.map_or(e, |b: u16| b.min(e)));
            }
        }
        match best {
            Some(e) => bound[v] = e,
            None => return Staircase { monomials: Vec::new(), finite: false },
        }
    }
    // enumerate exponent boxes below the pure-power bounds, filter divisibility
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer increment
        let mut v = 0;
        loop {
            if v == nvars {
                out.sort_by(|a, b| {
                    (a.total_degree(), a.exps().to_vec()).cmp(&(b.total_degree(), b.exps().to_vec()))
                });
                return Staircase { monomials: out, finite: true };
            }
            if exps[v] + 1 < bound[v] {
                exps[v] += 1;
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, Ideal};
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};
    use crate::scalar::QQ;

    fn dim_of(gens: &[&str], vars: &[&str]) -> Option<usize> {
        let r = PolyRing::new(QQ, vars, MonomialOrder::grevlex(vars.len())).unwrap();
        let gens: Vec<_> = gens.iter().map(|s| parse_poly(s, &r).unwrap()).collect();
        let i = Ideal::new(&r, gens).unwrap();
        let gb = buchberger(&i).unwrap();
        quotient_dimension(&gb).dimension()
    }

    #[test]
    fn staircase_examples() {
        // <x^2, y^3>: staircase {1, x, y, xy, y^2, xy^2}
        assert_eq!(dim_of(&["x^2", "y^3"], &["x", "y"]), Some(6));
        // <x> in two variables: infinite
        assert_eq!(dim_of(&["x"], &["x", "y"]), None);
        // <2x, 3y^2>: size 2
        assert_eq!(dim_of(&["2*x", "3*y^2"], &["x", "y"]), Some(2));
    }

    #[test]
    fn product_of_pure_powers() {
        assert_eq!(dim_of(&["x^3", "y^2", "z^4"], &["x", "y", "z"]), Some(24));
    }
}
