//! Parser for sums of monomials in `x, y, v, w` over `GF(2)`.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor (['*'] factor)*
//! factor := ('x' | 'y' | 'v' | 'w' | '1') ('^' uint)?
//! ```
//!
//! Whitespace is ignored. A monomial listed an even number of times cancels.
//! The literal `0` stands for the empty sum.

use crate::error::{Error, Result};
use crate::rewrite::{Coeff, FFPoly, Gf2};
use crate::tuples::ExponentTuple;

struct Cursor<'a> {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let mut chars = Vec::new();
        let (mut line, mut col) = (1, 1);
        for ch in src.chars() {
            if !ch.is_whitespace() {
                chars.push((line, col, ch));
            }
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.2)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = match self.chars.get(self.pos) {
            Some(&(l, c, _)) => (l, c),
            None => {
                let lines: Vec<&str> = self.src.split('\n').collect();
                (lines.len(), lines.last().map_or(0, |l| l.chars().count()) + 1)
            }
        };
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.error("exponent overflows"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an exponent"));
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<ExponentTuple> {
        let base = match self.peek() {
            Some('x') => ExponentTuple::X,
            Some('y') => ExponentTuple::Y,
            Some('v') => ExponentTuple::V,
            Some('w') => ExponentTuple::W,
            Some('1') => ExponentTuple::ZERO,
            Some(c) => return Err(self.error(format!("unexpected '{c}', expected x, y, v, w or 1"))),
            None => return Err(self.error("unexpected end of input")),
        };
        self.pos += 1;
        let e = if self.peek() == Some('^') {
            self.pos += 1;
            self.uint()?
        } else {
            1
        };
        let a = base.to_array().map(|x| x * e);
        Ok(ExponentTuple::new(a[0], a[1], a[2], a[3]))
    }

    fn term(&mut self) -> Result<ExponentTuple> {
        let mut t = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    t = t + self.factor()?;
                }
                Some('x' | 'y' | 'v' | 'w' | '1') => t = t + self.factor()?,
                _ => return Ok(t),
            }
        }
    }
}

pub fn parse_expression(src: &str) -> Result<FFPoly> {
    let mut cur = Cursor::new(src);
    if cur.chars.len() == 1 && cur.peek() == Some('0') {
        return Ok(FFPoly::zero());
    }
    let mut p = FFPoly::zero();
    p.add_term(cur.term()?, Gf2::ONE);
    while cur.peek() == Some('+') {
        cur.pos += 1;
        p.add_term(cur.term()?, Gf2::ONE);
    }
    if cur.peek().is_some() {
        return Err(cur.error("expected '+' or end of input"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u64, b: u64, c: u64, d: u64) -> ExponentTuple {
        ExponentTuple::new(a, b, c, d)
    }

    #[test]
    fn parses_sums() {
        let p = parse_expression("y^2 + x v + w").unwrap();
        assert_eq!(p, FFPoly::from_monomials([t(0, 2, 0, 0), t(1, 0, 1, 0), t(0, 0, 0, 1)]));
        assert_eq!(parse_expression(" x^3y\tv^2 ").unwrap(), FFPoly::monomial(t(3, 1, 2, 0)));
        assert_eq!(parse_expression("x*x").unwrap(), FFPoly::monomial(t(2, 0, 0, 0)));
        assert_eq!(parse_expression("x + x").unwrap(), FFPoly::zero());
        assert_eq!(parse_expression("1").unwrap(), FFPoly::one());
        assert_eq!(parse_expression("0").unwrap(), FFPoly::zero());
        assert_eq!(parse_expression("x^0").unwrap(), FFPoly::one());
    }

    #[test]
    fn reports_positions() {
        match parse_expression("x + z") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        match parse_expression("x +\n  y^") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_expression("").is_err());
        assert!(parse_expression("x +").is_err());
        assert!(parse_expression("x y)").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for src in ["x v + w", "x^5 + y", "1", "0", "x^4 y + v", "y w^3 + x^2 v^3 + 1"] {
            let p = parse_expression(src).unwrap();
            assert_eq!(parse_expression(&p.to_string()).unwrap(), p);
        }
    }
}
