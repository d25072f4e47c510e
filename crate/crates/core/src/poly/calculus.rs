//! Formal differentiation, simultaneous substitution, (de)homogenization and
//! Jacobian matrices.

use super::{Monomial, Poly, PolyError, RingRc};
use crate::scalar::Field;
use std::collections::BTreeMap;
use std::sync::Arc;

impl<K: Field> Poly<K> {
    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Result<Poly<K>, PolyError> {
        if var >= self.ring().nvars() {
            return Err(PolyError::UnknownVariable(format!("#{var}")));
        }
        let ring = Arc::clone(self.ring());
        let k = &ring.coeff;
        let mut terms = Vec::new();
        for (m, c) in self.terms() {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            let coeff = k.mul(c, &k.from_i64(e as i64));
            terms.push((Monomial::new(exps), coeff));
        }
        Ok(Poly::from_terms(&ring, terms))
    }

    pub fn derivative_named(&self, var: &str) -> Result<Poly<K>, PolyError> {
        self.derivative(self.ring().var_index(var)?)
    }

    /// Simultaneous substitution into a declared target ring. Every source
    /// variable needs either an explicit binding (a polynomial of the target
    /// ring) or a same-named variable in the target.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Poly<K>>,
        target: &RingRc<K>,
    ) -> Result<Poly<K>, PolyError> {
        for (name, img) in bindings {
            self.ring().var_index(name)?;
            if !img.ring().same_ring(target) {
                return Err(PolyError::RingMismatch(format!(
                    "binding for `{name}` lives outside the target ring"
                )));
            }
        }
        let mut images: Vec<Poly<K>> = Vec::with_capacity(self.ring().nvars());
        for name in &self.ring().vars {
            match bindings.get(name) {
                Some(img) => images.push(img.clone()),
                None => {
                    let idx = target.var_index(name).map_err(|_| {
                        PolyError::RingMismatch(format!(
                            "variable `{name}` has no binding and no target counterpart"
                        ))
                    })?;
                    images.push(Poly::var(target, idx));
                }
            }
        }
        // power cache per variable
        let mut powers: Vec<Vec<Poly<K>>> = images.iter().map(|img| vec![Poly::one(target), img.clone()]).collect();
        let mut acc = Poly::zero(target);
        for (m, c) in self.terms() {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Set a variable to 1 and drop it from the ring. Requires homogeneity.
    pub fn dehomogenize(&self, var: usize) -> Result<Poly<K>, PolyError> {
        if var >= self.ring().nvars() {
            return Err(PolyError::UnknownVariable(format!("#{var}")));
        }
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let target = self.ring().without_var(var)?;
        Ok(self.set_var_to_one(var, &target))
    }

    /// Set a variable to 1 without the homogeneity requirement (chart
    /// restrictions of affine data). Target ring must be `without_var(var)`.
    pub(crate) fn set_var_to_one(&self, var: usize, target: &RingRc<K>) -> Poly<K> {
        let mut terms = Vec::with_capacity(self.terms().len());
        for (m, c) in self.terms() {
            let exps: Vec<u16> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != var)
                .map(|(_, &e)| e)
                .collect();
            terms.push((Monomial::new(exps), c.clone()));
        }
        Poly::from_terms(target, terms)
    }

    /// Homogenize with a fresh variable appended to the ring.
    pub fn homogenize(&self, var_name: &str, target: &RingRc<K>) -> Result<Poly<K>, PolyError> {
        let hv = target.var_index(var_name)?;
        if target.nvars() != self.ring().nvars() + 1 {
            return Err(PolyError::RingMismatch("homogenization target needs one extra variable".into()));
        }
        let d = self.total_degree();
        let mut terms = Vec::with_capacity(self.terms().len());
        for (m, c) in self.terms() {
            let mut exps = vec![0u16; target.nvars()];
            let mut src = 0usize;
            for t in 0..target.nvars() {
                if t == hv {
                    continue;
                }
                exps[t] = m.exp(src);
                src += 1;
            }
            exps[hv] = (d - m.total_degree()) as u16;
            terms.push((Monomial::new(exps), c.clone()));
        }
        Ok(Poly::from_terms(target, terms))
    }
}

/// r x n matrix of partials: row order follows the input, column order the
/// ring's variables.
pub fn jacobian<K: Field>(fs: &[Poly<K>]) -> Result<Vec<Vec<Poly<K>>>, PolyError> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring();
    for f in fs {
        if !f.ring().same_ring(ring) {
            return Err(PolyError::RingMismatch("jacobian rows live in different rings".into()));
        }
    }
    let mut rows = Vec::with_capacity(fs.len());
    for f in fs {
        let mut row = Vec::with_capacity(ring.nvars());
        for v in 0..ring.nvars() {
            row.push(f.derivative(v)?);
        }
        rows.push(row);
    }
    Ok(rows)
}
