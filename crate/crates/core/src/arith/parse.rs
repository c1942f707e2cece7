use std::sync::Arc;

use num_bigint::BigInt;

use super::Polynomial;
use crate::error::{GpfError, Result};
use crate::ring::PolyRing;

/// Recursive-descent reader for `+ - * ^`, parentheses, integer literals and
/// ring variables.
struct Reader<'a> {
    ring: &'a Arc<PolyRing>,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> GpfError {
        GpfError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let i =
                    self.ring.var_index(name).ok_or_else(|| GpfError::Parse(format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(self.ring, i))
            }
            _ => Err(self.err("expected a polynomial")),
        }
    }
}

/// Parses a polynomial such as `x^2*y - 3*z + 1` over `ring`.
pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let mut r = Reader { ring, src: text.as_bytes(), pos: 0 };
    let p = r.expr()?;
    if r.peek().is_some() {
        return Err(r.err("trailing input"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    #[test]
    fn reads_expressions() {
        let r = PolyRing::new(Field::Rational, &["x", "y"]).unwrap();
        let p = parse_polynomial(&r, "(x + y)*(x - y)").unwrap();
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(parse_polynomial(&r, "-2*x^3 + 4").unwrap().to_string(), "-2*x^3 + 4");
        assert!(parse_polynomial(&r, "x + w").is_err());
        assert!(parse_polynomial(&r, "x +").is_err());
    }
}
