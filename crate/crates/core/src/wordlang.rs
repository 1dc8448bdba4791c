//! Text syntax for group elements and the JSON automorphism document.
//!
//! ```text
//! element := "1" | term ("*" term)*
//! term    := gen power? | "[" gen "," gen "]" power?
//! power   := "^" signed-integer
//! gen     := "x" positive-integer
//! ```
//!
//! Whitespace between tokens is ignored. Terms are multiplied left to right
//! and the result is returned in normal form. Generators are numbered from 1
//! in text.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::autgroup::Automorphism;
use crate::error::{Error, Result};
use crate::nilcore::{pairs, Element};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Term {
    Gen { index: usize, exp: BigInt },
    Comm { i: usize, j: usize, exp: BigInt },
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    rank: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("'{c}'"))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn generator(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat('x') {
            return self.err("generator 'x<index>'");
        }
        let Some(d) = self.digits() else {
            return self.err("generator index");
        };
        let index: usize = match d.parse() {
            Ok(i) if i >= 1 => i,
            _ => {
                self.pos = start;
                return self.err("positive generator index");
            }
        };
        if index > self.rank {
            return Err(Error::IndexOutOfRank {
                index,
                rank: self.rank,
            });
        }
        Ok(index - 1)
    }

    fn power(&mut self) -> Result<BigInt> {
        if !self.eat('^') {
            return Ok(BigInt::one());
        }
        self.skip_ws();
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            if self.peek() == Some('+') {
                self.pos += 1;
            }
            false
        };
        let Some(d) = self.digits() else {
            return self.err("integer exponent");
        };
        let v: BigInt = d.parse().expect("ascii digits");
        Ok(if negative { -v } else { v })
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let i = self.generator()?;
                self.expect(',')?;
                let j = self.generator()?;
                self.expect(']')?;
                let exp = self.power()?;
                Ok(Term::Comm { i, j, exp })
            }
            Some('x') => {
                let index = self.generator()?;
                let exp = self.power()?;
                Ok(Term::Gen { index, exp })
            }
            _ => self.err("'1', generator or commutator"),
        }
    }

    fn element(&mut self) -> Result<Vec<Term>> {
        self.skip_ws();
        if self.peek() == Some('1') {
            self.pos += 1;
            self.skip_ws();
            if self.pos != self.src.len() {
                return self.err("end of input");
            }
            return Ok(Vec::new());
        }
        let mut terms = vec![self.term()?];
        while self.eat('*') {
            terms.push(self.term()?);
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("'*' or end of input");
        }
        Ok(terms)
    }
}

/// Parses element syntax for the given rank.
pub fn parse_element(text: &str, rank: usize) -> Result<Element> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    let mut p = Parser {
        src: text,
        pos: 0,
        rank,
    };
    let terms = p.element()?;
    let mut acc = Element::identity(rank);
    for t in terms {
        let factor = match t {
            Term::Gen { index, exp } => Element::generator(rank, index)?.pow(&exp),
            Term::Comm { i, j, exp } => Element::basis_commutator(rank, i, j)?.pow(&exp),
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

fn power_suffix(e: &BigInt) -> String {
    if e.is_one() {
        String::new()
    } else {
        format!("^{e}")
    }
}

/// Canonical text: generators ascending, then commutators in lexicographic
/// order, zero exponents omitted; the identity prints as `1`.
pub fn format_element(g: &Element) -> String {
    let mut parts = Vec::new();
    for (i, a) in g.abelian().iter().enumerate() {
        if !a.is_zero() {
            parts.push(format!("x{}{}", i + 1, power_suffix(a)));
        }
    }
    for ((i, j), c) in pairs(g.rank()).zip(g.comm()) {
        if !c.is_zero() {
            parts.push(format!("[x{},x{}]{}", i + 1, j + 1, power_suffix(c)));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn json_parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        position: e.column(),
        expected: format!("JSON document ({e})"),
    }
}

fn schema_error(expected: &str) -> Error {
    Error::Parse {
        position: 0,
        expected: expected.to_string(),
    }
}

/// Parses `{"rank": n, "images": [n element strings]}`.
pub fn parse_automorphism(document: &str) -> Result<Automorphism> {
    let value: Value = serde_json::from_str(document).map_err(json_parse_error)?;
    automorphism_from_json(&value)
}

pub fn automorphism_from_json(value: &Value) -> Result<Automorphism> {
    let obj = value
        .as_object()
        .ok_or_else(|| schema_error("JSON object with \"rank\" and \"images\""))?;
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| schema_error("positive integer field \"rank\""))? as usize;
    let images = obj
        .get("images")
        .and_then(Value::as_array)
        .ok_or_else(|| schema_error("array field \"images\""))?;
    if images.len() != rank {
        return Err(schema_error(&format!("{rank} images")));
    }
    let images = images
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| schema_error("element string in \"images\""))
                .and_then(|s| parse_element(s, rank))
        })
        .collect::<Result<Vec<_>>>()?;
    Automorphism::from_images(images)
}

pub fn automorphism_to_json(sigma: &Automorphism) -> Value {
    json!({
        "rank": sigma.rank(),
        "images": sigma.images().iter().map(format_element).collect::<Vec<_>>(),
    })
}

/// Compact document text, the inverse of [`parse_automorphism`].
pub fn format_automorphism(sigma: &Automorphism) -> String {
    automorphism_to_json(sigma).to_string()
}
