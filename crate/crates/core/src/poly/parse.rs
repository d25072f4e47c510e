//! Text format for polynomials. Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := [+|-] term ((+|-) term)*
//! term   := factor (* factor)*
//! factor := base [^ uint]
//! base   := ( expr ) | number | variable
//! number := uint [/ uint]
//! ```
//!
//! Coefficients are integers or rationals, variables must belong to the
//! ring. Printing produces the same grammar; parse(print(f)) == f.

use super::{Poly, PolyError, RingRc};
use crate::scalar::Field;
use num_bigint::BigInt;
use std::fmt::Write;

pub fn parse_poly<K: Field>(text: &str, ring: &RingRc<K>) -> Result<Poly<K>, PolyError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a, K: Field> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a RingRc<K>,
}

impl<'a, K: Field> Parser<'a, K> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::SyntaxError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<K>, PolyError> {
        self.skip_ws();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            let _ = self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<K>, PolyError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<K>, PolyError> {
        let base = self.base()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.uint()?;
            if e > u16::MAX as u64 {
                return Err(PolyError::ExponentOverflow);
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly<K>, PolyError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.bigint()?;
                self.skip_ws();
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.bigint()?;
                    let c = self
                        .ring
                        .coeff
                        .from_ratio(&n, &d)
                        .map_err(|e| self.err(&format!("bad rational coefficient: {e}")))?;
                    Ok(Poly::constant(self.ring, c))
                } else {
                    Ok(Poly::constant(self.ring, self.ring.coeff.from_bigint(&n)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|c| c.is_ascii_alphanumeric() || c == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let idx = self.ring.var_index(name)?;
                Ok(Poly::var(self.ring, idx))
            }
            _ => Err(self.err("expected `(`, number or variable")),
        }
    }

    fn uint(&mut self) -> Result<u64, PolyError> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn bigint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().parse().unwrap())
    }
}

impl<K: Field> std::fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let k = &self.ring().coeff;
        let mut out = String::new();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let cs = k.fmt_elt(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut pieces: Vec<String> = Vec::new();
            if m.is_one() || mag != "1" {
                pieces.push(mag);
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    pieces.push(self.ring().vars[v].clone());
                } else {
                    pieces.push(format!("{}^{}", self.ring().vars[v], e));
                }
            }
            write!(out, "{}", pieces.join("*")).unwrap();
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MonomialOrder, PolyRing};
    use crate::scalar::{PrimeField, QQ};

    fn qring() -> RingRc<QQ> {
        PolyRing::new(QQ, &["x", "y"], MonomialOrder::lex(2)).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = qring();
        let f = parse_poly("x*y - 2*x", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        let z = parse_poly("0", &r).unwrap();
        assert!(z.is_zero());
        let g = parse_poly("(x + y)^2 - x^2 - y^2 - 2*x*y", &r).unwrap();
        assert!(g.is_zero());
        assert!(matches!(
            parse_poly("x + w", &r),
            Err(PolyError::UnknownVariable(_))
        ));
        assert!(matches!(
            parse_poly("x + ", &r),
            Err(PolyError::SyntaxError { .. })
        ));
    }

    #[test]
    fn cuboid_equation_over_big_ring() {
        let r = PolyRing::new(QQ, &["A", "B", "C", "X", "Y", "Z", "U"], MonomialOrder::grevlex(7))
            .unwrap();
        let f = parse_poly("A^2 + B^2 - Z^2", &r).unwrap();
        assert_eq!(f.num_terms(), 3);
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), 2);
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = qring();
        for s in [
            "x*y - 2*x",
            "1/2*x^3 - 7*y + 1",
            "-x - y",
            "3",
            "0",
            "x^11*y^13 - 1/6",
        ] {
            let f = parse_poly(s, &r).unwrap();
            let printed = f.to_string();
            let g = parse_poly(&printed, &r).unwrap();
            assert_eq!(f, g, "round-trip failed for `{s}` -> `{printed}`");
        }
    }

    #[test]
    fn parse_modular() {
        let f13 = PrimeField::new(13).unwrap();
        let r = PolyRing::new(f13, &["t"], MonomialOrder::lex(1)).unwrap();
        let f = parse_poly("7/2*t + 20", &r).unwrap();
        // 7/2 = 7*inv(2) = 7*7 = 49 = 10 mod 13; 20 = 7
        assert_eq!(f.to_string(), "10*t + 7");
    }
}
