//! Reading and printing polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! A name that is not a variable is split greedily into variable names, so
//! `xy` reads as `x*y` when `x` and `y` are variables and `xy` is not.

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

pub fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1, 1)
}

/// Like [`parse_polynomial`], reporting errors relative to a position in a
/// larger document.
pub fn parse_polynomial_at(ring: &PolyRing, text: &str, line: usize, column: usize) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        chars: text.char_indices().collect(),
        pos: 0,
        line,
        column,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty polynomial"));
    }
    let f = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character {c:?}")));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column + self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_add(&t)?;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.try_mul(&f)?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    let f = self.factor()?;
                    acc = acc.try_mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            return base.pow(e.try_into().map_err(|_| self.error("exponent too large"))?);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let p = self.ring.characteristic() as u128;
                Ok(self.ring.constant((v % p) as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                self.name_product(&name, start)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => Err(self.error(format!("unexpected character {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u128> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse::<u128>().map_err(|_| Error::Parse {
            line: self.line,
            column: self.column + start,
            message: format!("integer {s} out of range"),
        })
    }

    /// Resolves an identifier: an exact variable name, or else a greedy
    /// longest-prefix split into variable names.
    fn name_product(&self, name: &str, start: usize) -> Result<Polynomial> {
        if let Some(i) = self.ring.var_index(name) {
            return Ok(self.ring.var(i));
        }
        let mut acc = self.ring.one();
        let mut rest = name;
        while !rest.is_empty() {
            let best = self
                .ring
                .names()
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    acc = acc.try_mul(&self.ring.var(i))?;
                    rest = &rest[n.len()..];
                }
                None => {
                    return Err(Error::Parse {
                        line: self.line,
                        column: self.column + start,
                        message: format!("unknown variable {name:?}"),
                    })
                }
            }
        }
        Ok(acc)
    }
}

/// Canonical text form: terms in descending order, coefficients as signed
/// representatives, factors joined by `*`.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let field = ring.field();
    let mut out = String::new();
    for (k, (c, m)) in f.terms().iter().enumerate() {
        let s = field.signed(*c);
        if k == 0 {
            if s < 0 {
                out.push('-');
            }
        } else if s < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = s.unsigned_abs();
        let mut factors: Vec<String> = Vec::new();
        if mag != 1 || m.is_one() {
            factors.push(mag.to_string());
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.names()[i].clone()),
                _ => factors.push(format!("{}^{}", ring.names()[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::with_names(5, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn reads_the_usual_notations() {
        let r = ring();
        let a = parse_polynomial(&r, "x^2*y - 3 z + 7").unwrap();
        let b = parse_polynomial(&r, "2 + x^2 y + 2z").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_polynomial(&r, "xy").unwrap(),
            parse_polynomial(&r, "x*y").unwrap()
        );
        assert_eq!(
            parse_polynomial(&r, "(x+y)^2").unwrap(),
            parse_polynomial(&r, "x^2+2xy+y^2").unwrap()
        );
        assert!(parse_polynomial(&r, "x - x").unwrap().is_zero());
    }

    #[test]
    fn round_trips() {
        let r = ring();
        for s in ["x^2*y - 3*z + 7", "-x", "0", "4*x*y*z^3 + y", "x^5 - 1"] {
            let f = parse_polynomial(&r, s).unwrap();
            let printed = format_polynomial(&f);
            assert_eq!(parse_polynomial(&r, &printed).unwrap(), f, "{s} -> {printed}");
        }
        let f = parse_polynomial(&r, "x^2 - y^2").unwrap();
        assert_eq!(format_polynomial(&f), "x^2 - y^2");
    }

    #[test]
    fn multi_letter_names() {
        let r = PolyRing::with_names(3, &["x1", "x2", "x10"]).unwrap();
        let f = parse_polynomial(&r, "x1x10 + x2^2").unwrap();
        assert_eq!(format_polynomial(&f), "x2^2 + x1*x10");
    }

    #[test]
    fn diagnostics_carry_positions() {
        let r = ring();
        match parse_polynomial_at(&r, "x + w", 3, 8) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (3, 12));
                assert!(message.contains("unknown variable"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "(x").is_err());
        assert!(parse_polynomial(&r, "").is_err());
    }
}
