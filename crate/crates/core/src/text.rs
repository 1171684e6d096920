//! Text formats shared by the library and the command line.
//!
//! - Z4 scalars are single digits.
//! - Ring and field elements are comma-separated coordinates, constant term
//!   first (`α^2 + 3` in GR(4,4) is `3,0,1,0`).
//! - Polynomials are semicolon-separated coefficient tokens, constant term
//!   first; the zero polynomial is the empty string.
//! - Words are strings over `{0,1,2,3}`, position 0 leftmost.

use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};
use crate::poly::Poly;
use crate::ring::{RingDescriptor, RingElement};
use crate::scalar::{Coefficient, Z4};

pub trait Token: Coefficient {
    fn token(&self) -> String;

    /// Parses one token; `offset` is the token's character position in the
    /// enclosing input and is used for error reporting.
    fn parse_token(parent: &Self::Parent, s: &str, offset: usize) -> Result<Self>;
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn parse_digit(c: char, position: usize, radix: u32) -> Result<u8> {
    c.to_digit(radix)
        .map(|d| d as u8)
        .ok_or_else(|| parse_error(position, format!("invalid digit {c:?}")))
}

/// Parses a string of base-4 digits.
pub fn parse_digits(s: &str) -> Result<Vec<Z4>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| parse_digit(c, i, 4).map(|d| Z4::new(d as i64)))
        .collect()
}

pub fn digits_to_string(symbols: &[Z4]) -> String {
    symbols.iter().map(|s| char::from(b'0' + s.value())).collect()
}

fn parse_coordinates(s: &str, offset: usize, expected: usize, radix: u32) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(expected);
    let mut pos = offset;
    for part in s.split(',') {
        let trimmed = part.trim();
        let mut chars = trimmed.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => out.push(parse_digit(c, pos, radix)?),
            _ => return Err(parse_error(pos, format!("expected a single digit, got {part:?}"))),
        }
        pos += part.chars().count() + 1;
    }
    if out.len() != expected {
        return Err(parse_error(
            offset,
            format!("expected {expected} coordinates, got {}", out.len()),
        ));
    }
    Ok(out)
}

impl Token for Z4 {
    fn token(&self) -> String {
        self.value().to_string()
    }

    fn parse_token(_: &(), s: &str, offset: usize) -> Result<Z4> {
        let d = parse_coordinates(s, offset, 1, 4)?;
        Ok(Z4::new(d[0] as i64))
    }
}

impl Token for RingElement {
    fn token(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(u8::to_string).collect();
        parts.join(",")
    }

    fn parse_token(parent: &RingDescriptor, s: &str, offset: usize) -> Result<RingElement> {
        let digits = parse_coordinates(s, offset, parent.degree(), 4)?;
        let coeffs: Vec<i64> = digits.iter().map(|&d| d as i64).collect();
        parent.element(&coeffs)
    }
}

impl Token for FieldElement {
    fn token(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(u8::to_string).collect();
        parts.join(",")
    }

    fn parse_token(parent: &FieldDescriptor, s: &str, offset: usize) -> Result<FieldElement> {
        let digits = parse_coordinates(s, offset, parent.degree(), 2)?;
        let bits = digits
            .iter()
            .enumerate()
            .fold(0u16, |acc, (i, &d)| acc | ((d as u16) << i));
        Ok(parent.element(bits))
    }
}

pub fn poly_to_string<C: Token>(p: &Poly<C>) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(Token::token).collect();
    parts.join(";")
}

pub fn parse_poly<C: Token>(parent: &C::Parent, s: &str) -> Result<Poly<C>> {
    if s.trim().is_empty() {
        return Ok(Poly::zero());
    }
    let mut coeffs = Vec::new();
    let mut pos = 0;
    for part in s.split(';') {
        coeffs.push(C::parse_token(parent, part, pos)?);
        pos += part.chars().count() + 1;
    }
    Ok(Poly::new(coeffs))
}

impl Serialize for Z4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.value())
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.token())
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.token())
    }
}

impl<C: Token> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&poly_to_string(self))
    }
}
