//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := ('+'|'-') factor | atom ['^' int]
//! atom   := int ['/' int] | ident | '(' expr ')'
//! ```
//!
//! Identifiers are a letter or `_` followed by letters, digits or `_`, so `xy`
//! is one variable; write `x*y` or `x y` for the product.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{MPoly, PolyError, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(c: u8) -> bool {
        c.is_ascii_alphanumeric() || c == b'_' || c == b'('
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            // `*` is optional between factors
            if self.eat(b'*') || self.peek().is_some_and(Self::starts_factor) {
                let f = self.factor()?;
                acc = acc.checked_mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly, PolyError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e: u32 = match u32::try_from(e) {
                Ok(e) => e,
                Err(_) => return Err(PolyError::ExponentOverflow),
            };
            return base.checked_pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, PolyError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.eat(b'/') {
                    let den = self.integer()?;
                    let at = self.pos;
                    Rational::from_bigints(num, den)
                        .map(MPoly::constant)
                        .map_err(|_| PolyError::Parse {
                            pos: at,
                            msg: "zero denominator".into(),
                        })
                } else {
                    Ok(MPoly::constant(Rational::from(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                Ok(MPoly::var(name))
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
        }
    }
}

impl FromStr for MPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(i) = s.bytes().position(|b| !b.is_ascii()) {
            return Err(PolyError::Parse {
                pos: i,
                msg: "non-ASCII character".into(),
            });
        }
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_multiplication() {
        let a: MPoly = "2x^2y".parse().unwrap();
        let b: MPoly = "2*x^2*y".parse().unwrap();
        assert_eq!(a, b);
        let c: MPoly = "3/4 a0 b".parse().unwrap();
        assert_eq!(c.to_string(), "3/4*a0*b");
    }

    #[test]
    fn parentheses_and_signs() {
        let a: MPoly = "-(x - 1)^2 + -x".parse().unwrap();
        assert_eq!(a, "-x^2 + x - 1".parse().unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        match "x^2 + * y".parse::<MPoly>() {
            Err(PolyError::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!("x)".parse::<MPoly>(), Err(PolyError::Parse { pos: 1, .. })));
        assert!(matches!("1/0".parse::<MPoly>(), Err(PolyError::Parse { .. })));
        assert!(matches!("".parse::<MPoly>(), Err(PolyError::Parse { pos: 0, .. })));
    }
}
