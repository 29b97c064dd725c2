//! Text grammar for elements:
//!
//! ```text
//! element  := term (('+'|'-') term)*
//! term     := rational ('*' monomial)? | monomial
//! monomial := gen+
//! gen      := 'E[' int ',' int ']' ('^' posint)?
//! rational := int ('/' posint)?
//! ```
//!
//! A leading sign is accepted. Generators inside a monomial may appear in any
//! order; the product is normal-ordered.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::UeaElement;
use crate::error::{Error, Result};
use crate::rational::Q;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.uint()?;
        usize::try_from(v).or_else(|_| Err(Error::Syntax { pos: at, msg: "integer too large".into() }))
    }

    fn gen(&mut self) -> Result<UeaElement> {
        self.expect(b'E')?;
        self.expect(b'[')?;
        let at = self.pos;
        let i = self.small()?;
        self.expect(b',')?;
        let j = self.small()?;
        self.expect(b']')?;
        let g = UeaElement::generator(self.n, i, j).map_err(|e| match e {
            Error::IndexOutOfRange { .. } => Error::Syntax { pos: at, msg: e.to_string() },
            other => other,
        })?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.small()?;
            if k == 0 {
                return self.err("exponent must be positive");
            }
            let mut acc = g.clone();
            for _ in 1..k {
                acc = acc.try_mul(&g)?;
            }
            return Ok(acc);
        }
        Ok(g)
    }

    fn monomial(&mut self) -> Result<UeaElement> {
        let mut acc = self.gen()?;
        while self.peek() == Some(b'E') {
            acc = acc.try_mul(&self.gen()?)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<UeaElement> {
        match self.peek() {
            Some(b'E') => self.monomial(),
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut r = Q::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.uint()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    r /= Q::from_integer(d);
                }
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        Ok(self.monomial()?.scale(&r))
                    }
                    // juxtaposition "2E[1,1]" reads as a product too
                    Some(b'E') => Ok(self.monomial()?.scale(&r)),
                    _ => Ok(UeaElement::scalar(self.n, r)),
                }
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }

    fn element(&mut self) -> Result<UeaElement> {
        let mut sign = Q::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                None => return Ok(acc),
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
        }
    }
}

/// Parses an element of U(gl_n) from text.
pub fn parse_element(text: &str, n: usize) -> Result<UeaElement> {
    if n == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    Parser { src: text.as_bytes(), pos: 0, n }.element()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn parses_products_into_normal_order() {
        let x = parse_element("E[1,2]E[2,1]", 2).unwrap();
        let e = |i, j| UeaElement::e(2, i, j);
        assert_eq!(x, e(2, 1).mul(&e(1, 2)).add(&e(1, 1)).sub(&e(2, 2)));
    }

    #[test]
    fn parses_coefficients_and_constants() {
        let x = parse_element("3/2*E[1,1]^2 - 1", 2).unwrap();
        let e11 = UeaElement::e(2, 1, 1);
        assert_eq!(x, e11.mul(&e11).scale(&qf(3, 2)).sub(&UeaElement::one(2)));
        assert_eq!(parse_element("-E[1,1] + 2", 2).unwrap(), UeaElement::scalar(2, qf(2, 1)).sub(&e11));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_element("E[1,3]", 2), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_element("E[1,2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("1/0", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("E[1,1] E", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn display_reparses() {
        for s in ["E[1,2]E[2,1] - 1/3*E[2,2]^3", "0", "-2", "E[2,1]^2E[1,1]E[1,2] + 5"] {
            let x = parse_element(s, 2).unwrap();
            assert_eq!(parse_element(&x.to_string(), 2).unwrap(), x, "{s}");
        }
    }
}
