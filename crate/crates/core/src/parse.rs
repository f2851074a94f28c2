//! Polynomial expression parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers are `[A-Za-z_][A-Za-z0-9_']*`. Juxtaposition is rejected.

use alloc::format;
use alloc::string::ToString;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use crate::rat::Rat;

/// Parse `src` as a polynomial over the variables of `ring`.
pub fn parse_poly(src: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, ring };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_' || c == b'\''
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { offset: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(c) if is_ident_start(c) || c.is_ascii_digit() || c == b'(' => {
                    return Err(self.err("implicit multiplication is not allowed"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'-') => return Err(self.err("negative exponent")),
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.err("expected exponent")),
            }
            let start = self.pos;
            let n = self.integer()?;
            let e: u32 = n
                .try_into()
                .map_err(|_| Error::Parse { offset: start, message: "exponent too large".to_string() })?;
            if self.peek() == Some(b'^') {
                return Err(self.err("chained exponent; use parentheses"));
            }
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
            return Err(self.err("expected integer"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                // no whitespace allowed inside a rational literal
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                        return Err(self.err("expected denominator"));
                    }
                    let at = self.pos;
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(Error::Parse { offset: at, message: "zero denominator".to_string() });
                    }
                    return Ok(Polynomial::constant(self.ring, Rat::from_ratio(num, den)));
                }
                Ok(Polynomial::constant(self.ring, Rat::from_big(num)))
            }
            Some(c) if is_ident_start(c) => {
                let start = self.pos;
                while self.pos < self.src.len() && is_ident_char(self.src[self.pos]) {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'/') => Err(self.err("division is only allowed inside a rational literal")),
            Some(c) => Err(self.err(&format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> Ring {
        Ring::new(&["x", "y", "z"])
    }

    #[test]
    fn precedence() {
        let ring = r();
        let a = parse_poly("1 + 2*x^2", &ring).unwrap();
        let b = parse_poly("(2*(x^2)) + 1", &ring).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("-x^2", &ring).unwrap().to_string(), "-x^2");
        assert_eq!(parse_poly("2*x*y + 1/3*z", &ring).unwrap().to_string(), "2*x*y + 1/3*z");
        assert_eq!(parse_poly("x - y - z", &ring).unwrap().to_string(), "x - y - z");
    }

    #[test]
    fn errors() {
        let ring = r();
        assert_eq!(
            parse_poly("x**2", &ring).unwrap_err(),
            Error::Parse { offset: 2, message: "unexpected `*`".into() }
        );
        assert!(matches!(parse_poly("x^-1", &ring), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_poly("2x", &ring), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_poly("x/2", &ring), Err(Error::Parse { offset: 1, .. })));
        assert_eq!(parse_poly("w + 1", &ring).unwrap_err(), Error::UnknownVariable("w".into()));
        assert!(parse_poly("(x", &ring).is_err());
        assert!(parse_poly("", &ring).is_err());
    }
}
