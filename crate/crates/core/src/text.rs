//! Text form: `[-]d₁.d₂…d_pEk`, with `0E0` for zero.
//!
//! Input accepts an optional sign, digits with at most one decimal point,
//! and an optional `E`/`e` exponent with its own optional sign.

use std::fmt;
use std::str::FromStr;

use crate::context::Context;
use crate::decimal::DecimalFloat;
use crate::error::{Error, Result};

// Exponent literals are clamped here while scanning; anything this large
// is out of range after normalization anyway.
const EXPONENT_CLAMP: i64 = 1 << 50;

fn parse_error(offset: usize, reason: &'static str) -> Error {
    Error::Parse { offset, reason }
}

/// Parses exactly, keeping every digit of the input.
fn parse_exact<const LB: usize>(text: &str) -> Result<DecimalFloat<LB>> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(0, "empty input"));
    }
    let mut i = 0;
    let mut negative = false;
    if matches!(bytes[0], b'+' | b'-') {
        negative = bytes[0] == b'-';
        i = 1;
    }

    let mut digits = Vec::with_capacity(bytes.len());
    let mut int_len = 0usize;
    let mut point: Option<usize> = None;
    while i < bytes.len() {
        match bytes[i] {
            c @ b'0'..=b'9' => {
                digits.push(c - b'0');
                if point.is_none() {
                    int_len += 1;
                }
            }
            b'.' => {
                if point.is_some() {
                    return Err(parse_error(i, "multiple decimal points"));
                }
                point = Some(i);
            }
            b'e' | b'E' => break,
            _ => return Err(parse_error(i, "unexpected character")),
        }
        i += 1;
    }
    if digits.is_empty() {
        return Err(parse_error(i, "expected digits"));
    }

    let mut exponent = 0i64;
    if i < bytes.len() {
        // at an exponent marker
        i += 1;
        let mut exp_negative = false;
        if i < bytes.len() && matches!(bytes[i], b'+' | b'-') {
            exp_negative = bytes[i] == b'-';
            i += 1;
        }
        if i == bytes.len() {
            return Err(parse_error(i, "missing exponent digits"));
        }
        while i < bytes.len() {
            match bytes[i] {
                c @ b'0'..=b'9' => {
                    exponent = (exponent * 10 + i64::from(c - b'0')).min(EXPONENT_CLAMP);
                }
                _ => return Err(parse_error(i, "unexpected character in exponent")),
            }
            i += 1;
        }
        if exp_negative {
            exponent = -exponent;
        }
    }

    if digits.iter().all(|&d| d == 0) {
        return Ok(DecimalFloat::zero());
    }
    DecimalFloat::normalize(negative, &digits, exponent + int_len as i64 - 1)
}

/// Parses `text` and rounds it to the context when it carries more than
/// `ctx.precision()` significand digits.
pub fn parse<const LB: usize>(text: &str, ctx: &Context) -> Result<DecimalFloat<LB>> {
    parse_exact::<LB>(text)?.round(ctx)
}

impl<const LB: usize> DecimalFloat<LB> {
    /// See [`parse`].
    pub fn parse(text: &str, ctx: &Context) -> Result<Self> {
        parse(text, ctx)
    }
}

/// Exact parse: no digits are discarded.
impl<const LB: usize> FromStr for DecimalFloat<LB> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_exact(s)
    }
}

impl<const LB: usize> fmt::Display for DecimalFloat<LB> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0E0");
        }
        let digits = self.digits();
        let mut out = String::with_capacity(digits.len() + 16);
        if self.is_negative() {
            out.push('-');
        }
        out.push((b'0' + digits[0]) as char);
        if digits.len() > 1 {
            out.push('.');
            out.extend(digits[1..].iter().map(|&d| (b'0' + d) as char));
        }
        out.push('E');
        out.push_str(&self.exponent().to_string());
        f.write_str(&out)
    }
}
