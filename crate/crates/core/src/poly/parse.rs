//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' NAT)?
//! base   := NAT | NAT '/' NAT | IDENT | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{FieldSpec, PolyError, Polynomial, RingRef};

/// Non-fatal remark produced while parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseNote {
    pub pos: usize,
    pub message: String,
}

pub fn parse_poly(text: &str, ring: &RingRef) -> Result<Polynomial, PolyError> {
    parse_poly_with_notes(text, ring).map(|(p, _)| p)
}

/// Like [`parse_poly`], also returning notes such as coefficients reduced
/// modulo the field characteristic.
pub fn parse_poly_with_notes(text: &str, ring: &RingRef) -> Result<(Polynomial, Vec<ParseNote>), PolyError> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0, ring, notes: Vec::new() };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected character"));
    }
    Ok((p, parser.notes))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
    notes: Vec<ParseNote>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> PolyError {
        let message = match self.src.get(self.pos) {
            Some(c) => format!("{message} `{}`", *c as char),
            None => format!("{message} (end of input)"),
        };
        PolyError::Syntax { pos: self.pos, message }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => Err(self.error("missing `*` before")),
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let n = self.natural().ok_or_else(|| self.error("expected exponent after `^`, found"))?;
            let e = n.to_u32().ok_or(PolyError::Syntax { pos: start, message: "exponent too large".to_string() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`, found"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(PolyError::UnknownIdentifier { name: name.to_string(), pos: start }),
                }
            }
            _ => Err(self.error("expected number, variable or `(`, found")),
        }
    }

    fn natural(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Some(digits.parse().expect("decimal digits"))
    }

    fn number(&mut self) -> Result<Polynomial, PolyError> {
        let start = self.pos;
        let num = self.natural().expect("caller saw a digit");
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.natural().ok_or_else(|| self.error("expected denominator, found"))?;
            if d.is_zero() {
                return Err(PolyError::Syntax { pos: start, message: "zero denominator".to_string() });
            }
            d
        } else {
            BigInt::from(1)
        };
        let field = self.ring.field();
        if let FieldSpec::Prime(p) = field {
            let p = BigInt::from(p);
            if num >= p || den >= p {
                self.notes.push(ParseNote { pos: start, message: format!("coefficient reduced modulo {p}") });
            }
        }
        let c = field
            .from_rational(&BigRational::new(num, den))
            .map_err(|e| PolyError::Syntax { pos: start, message: e.to_string() })?;
        Ok(Polynomial::constant(self.ring, c))
    }
}
