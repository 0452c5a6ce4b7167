//! Text syntax for monomials and point lists.
//!
//! ```text
//! monomial := "1" | factor ("*" factor)*
//! factor   := "Y[" int "," int "]" ("^" nonzero-int)?
//! points   := "(" int "," int ")" ("," "(" int "," int ")")*
//! ```
//! Whitespace is ignored everywhere.

use thiserror::Error;

use crate::lattice::{LatticeConfig, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("node {node} at byte {offset} outside 1..={n}")]
    NodeOutOfRange { node: i64, n: i64, offset: usize },
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self { src: text.as_bytes(), pos: 0 }
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

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax { offset: self.pos, expected: expected.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("'{}'", c as char)))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(i64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat(b'-');
        self.skip_ws();
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("an integer"));
        }
        let text = std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii digits");
        let value: i64 = text.parse().map_err(|_| ParseError::Syntax {
            offset: digits_start,
            expected: "an integer that fits in 64 bits".into(),
        })?;
        Ok((if neg { -value } else { value }, start))
    }
}

pub fn parse_monomial(text: &str, cfg: &LatticeConfig) -> Result<Monomial, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek() == Some(b'1') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.at_end() {
            return Ok(Monomial::one());
        }
        cur.pos = save;
    }
    let mut factors = Vec::new();
    loop {
        cur.expect(b'Y')?;
        cur.expect(b'[')?;
        let (node, node_at) = cur.int()?;
        if !(1..=cfg.n).contains(&node) {
            return Err(ParseError::NodeOutOfRange { node, n: cfg.n, offset: node_at });
        }
        cur.expect(b',')?;
        let (s, _) = cur.int()?;
        cur.expect(b']')?;
        let mut e = 1;
        if cur.eat(b'^') {
            let (x, at) = cur.int()?;
            if x == 0 {
                return Err(ParseError::Syntax { offset: at, expected: "a nonzero exponent".into() });
            }
            e = x;
        }
        factors.push((node, s, e));
        if cur.at_end() {
            break;
        }
        cur.expect(b'*')?;
    }
    Ok(Monomial::from_factors(factors, cfg))
}

/// Parses `(i,k),(i,k),...`; node bounds are checked by the caller.
pub fn parse_points(text: &str) -> Result<Vec<(i64, i64)>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        cur.expect(b'(')?;
        let (i, _) = cur.int()?;
        cur.expect(b',')?;
        let (k, _) = cur.int()?;
        cur.expect(b')')?;
        out.push((i, k));
        if cur.at_end() {
            break;
        }
        cur.expect(b',')?;
    }
    Ok(out)
}
