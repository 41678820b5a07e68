//! Textual monomial ideals.
//!
//! ```text
//! expr     := product ('&' product)*       intersection
//! product  := power ('*' power)*           ideal product
//! power    := '(' gens ')' ('^' int)?
//! gens     := monomial (',' monomial)*
//! monomial := factor ('*' factor)*
//! factor   := ('x' | 'y') ('^' int)? | int
//! ```
//!
//! So `(x^3*y^2, x^2*y^3)` and `(y^2) & (x^2) & (x,y)^5` both parse. `(0)`
//! and `(1)` are the zero and unit ideals.

use curvecount::MonomialIdeal2;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal2, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let ideal = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(ideal)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ExprError {
        ExprError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<u32, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ExprError {
                offset: start,
                message: "integer out of range".into(),
            })
    }

    fn expr(&mut self) -> Result<MonomialIdeal2, ExprError> {
        let mut acc = self.product()?;
        while self.eat(b'&') {
            acc = acc.intersect(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MonomialIdeal2, ExprError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = acc.product(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MonomialIdeal2, ExprError> {
        self.expect(b'(')?;
        let mut gens = vec![self.monomial()?];
        while self.eat(b',') {
            gens.push(self.monomial()?);
        }
        self.expect(b')')?;
        let ideal = MonomialIdeal2::new(gens.into_iter().flatten());
        if self.eat(b'^') {
            let k = self.int()?;
            Ok(ideal.pow(k))
        } else {
            Ok(ideal)
        }
    }

    /// `None` for the monomial 0.
    fn monomial(&mut self) -> Result<Option<(u32, u32)>, ExprError> {
        let mut exps = Some((0u32, 0u32));
        loop {
            match self.peek() {
                Some(b @ (b'x' | b'y')) => {
                    self.pos += 1;
                    let e = if self.eat(b'^') { self.int()? } else { 1 };
                    if let Some((a, c)) = exps.as_mut() {
                        if b == b'x' {
                            *a += e;
                        } else {
                            *c += e;
                        }
                    }
                }
                Some(b'0'..=b'9') => match self.int()? {
                    0 => exps = None,
                    1 => {}
                    _ => return Err(self.error("only 0 and 1 may appear as coefficients")),
                },
                _ => return Err(self.error("expected `x`, `y`, `0` or `1`")),
            }
            if !self.eat(b'*') {
                return Ok(exps);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generator_lists() {
        let i = parse_ideal("(x^3*y^2, x^2*y^3)").unwrap();
        assert_eq!(i.generators(), &[(2, 3), (3, 2)]);
        assert_eq!(parse_ideal(&i.to_string()).unwrap(), i);
    }

    #[test]
    fn parses_intersections_and_powers() {
        let i = parse_ideal("(y^2) & (x^2) & (x,y)^5").unwrap();
        assert_eq!(i, parse_ideal("(x^3*y^2, x^2*y^3)").unwrap());
        assert_eq!(parse_ideal("(x) * (y)").unwrap(), MonomialIdeal2::new([(1, 1)]));
        assert_eq!(parse_ideal("(x, y)^5").unwrap(), MonomialIdeal2::power_of_maximal(5));
    }

    #[test]
    fn zero_and_unit() {
        assert_eq!(parse_ideal("(0)").unwrap(), MonomialIdeal2::zero());
        assert_eq!(parse_ideal("(1)").unwrap(), MonomialIdeal2::unit());
        assert_eq!(parse_ideal("(1, x)").unwrap(), MonomialIdeal2::unit());
        assert_eq!(parse_ideal("(x*y*x)").unwrap(), MonomialIdeal2::new([(2, 1)]));
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(parse_ideal("(x, z)").unwrap_err().offset, 4);
        assert!(parse_ideal("(x").is_err());
        assert!(parse_ideal("(x) junk").is_err());
        assert!(parse_ideal("(2*x)").is_err());
        assert!(parse_ideal("").is_err());
    }
}
