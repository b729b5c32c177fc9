//! Correctly rounded add, subtract, multiply and divide.
//!
//! Each operation forms the exact result (or, for division, enough quotient
//! digits plus a sticky remainder flag) and rounds once.

use std::cmp::Ordering;

use crate::context::Context;
use crate::decimal::DecimalFloat;
use crate::error::{Error, Result};
use crate::mag;
use crate::round::round_coefficient;

/// Extra quotient digits produced beyond the target precision.
const DIVISION_GUARD_DIGITS: usize = 2;

impl<const LB: usize> DecimalFloat<LB> {
    pub fn add(&self, other: &Self, ctx: &Context) -> Result<Self> {
        add_signed(self, other, other.is_negative(), ctx)
    }

    /// `self - other`, identical to `self.add(&other.negate(), ctx)`.
    pub fn sub(&self, other: &Self, ctx: &Context) -> Result<Self> {
        add_signed(self, other, !other.is_negative() && !other.is_zero(), ctx)
    }

    pub fn mul(&self, other: &Self, ctx: &Context) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let coeff = mag::mul::<LB>(self.coefficient(), other.coefficient());
        round_coefficient(
            self.is_negative() != other.is_negative(),
            coeff,
            self.unit_exponent() + other.unit_exponent(),
            false,
            ctx.precision() as usize,
            ctx.rounding(),
        )
    }

    /// Correctly rounded quotient.
    ///
    /// The dividend is scaled so that long division yields at least
    /// `precision + 2` quotient digits; a nonzero remainder becomes the
    /// sticky flag for the final rounding.
    pub fn div(&self, other: &Self, ctx: &Context) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let precision = ctx.precision() as usize;
        let (pa, pb) = (self.digit_count(), other.digit_count());
        let shift = (precision + DIVISION_GUARD_DIGITS + pb).saturating_sub(pa);
        let dividend = mag::shl_digits::<LB>(self.coefficient(), shift)?;
        let (quotient, remainder) = mag::divrem::<LB>(&dividend, other.coefficient());
        round_coefficient(
            self.is_negative() != other.is_negative(),
            quotient,
            self.unit_exponent() - shift as i64 - other.unit_exponent(),
            !remainder.is_empty(),
            precision,
            ctx.rounding(),
        )
    }
}

/// `a + (-1)^b_negative * |b|`.
fn add_signed<const LB: usize>(
    a: &DecimalFloat<LB>,
    b: &DecimalFloat<LB>,
    b_negative: bool,
    ctx: &Context,
) -> Result<DecimalFloat<LB>> {
    let precision = ctx.precision() as usize;
    let mode = ctx.rounding();
    if b.is_zero() {
        return a.round_to(precision, mode);
    }
    if a.is_zero() {
        let b = if b_negative == b.is_negative() {
            b.clone()
        } else {
            b.negate()
        };
        return b.round_to(precision, mode);
    }

    // (negative, coefficient, unit exponent), larger exponent first
    let mut big = (
        a.is_negative(),
        a.coefficient().to_vec(),
        a.unit_exponent(),
        a.exponent(),
    );
    let mut small = (
        b_negative,
        b.coefficient().to_vec(),
        b.unit_exponent(),
        b.exponent(),
    );
    if small.3 > big.3 {
        std::mem::swap(&mut big, &mut small);
    }

    // An operand lying entirely below both the last digit of the larger
    // operand and two places under its rounding digit can only act as a
    // sticky contribution. Replace it by a one-digit stand-in of the same
    // sign so that alignment cost stays bounded by the precision.
    let limit = (i64::from(big.3) - precision as i64 - 2).min(big.2 - 1);
    if i64::from(small.3) < limit {
        small.1 = vec![1];
        small.2 = limit - 1;
    }

    let unit = big.2.min(small.2);
    let big_coeff = mag::shl_digits::<LB>(&big.1, (big.2 - unit) as usize)?;
    let small_coeff = mag::shl_digits::<LB>(&small.1, (small.2 - unit) as usize)?;

    let (negative, coeff) = if big.0 == small.0 {
        (big.0, mag::add::<LB>(&big_coeff, &small_coeff))
    } else {
        match mag::cmp(&big_coeff, &small_coeff) {
            Ordering::Equal => return Ok(DecimalFloat::zero()),
            Ordering::Greater => (big.0, mag::sub::<LB>(&big_coeff, &small_coeff)),
            Ordering::Less => (small.0, mag::sub::<LB>(&small_coeff, &big_coeff)),
        }
    };
    round_coefficient(negative, coeff, unit, false, precision, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Rounding;

    type D = DecimalFloat;

    fn d(s: &str) -> D {
        s.parse().unwrap()
    }

    fn p(n: u32) -> Context {
        Context::new(n).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(d("1").add(&d("-1"), &p(10)).unwrap(), D::zero());
        assert_eq!(d("1E0").add(&d("1E-8"), &p(4)).unwrap(), d("1.000E0"));
        let sum = d("9.999E0").add(&d("1E-3"), &p(4)).unwrap();
        assert_eq!(sum, d("1.000E1"));
        assert_eq!(sum.exponent(), 1);
    }

    #[test]
    fn sub_examples() {
        let x = d("-3.14159E-7");
        assert_eq!(x.sub(&x, &p(3)).unwrap(), D::zero());
        let ctx4 = p(4);
        let pre = d("1").add(&d("1E-8"), &ctx4).unwrap();
        assert_eq!(pre.sub(&d("1"), &ctx4).unwrap(), D::zero());
        let ctx20 = p(20);
        let pre = d("1").add(&d("1E-8"), &ctx20).unwrap();
        assert_eq!(pre.sub(&d("1"), &ctx20).unwrap(), d("1E-8"));
    }

    #[test]
    fn absorbed_operand_still_rounds_directionally() {
        let up = Context::with_rounding(4, Rounding::Up).unwrap();
        let down = Context::with_rounding(4, Rounding::Down).unwrap();
        let tiny = d("1E-1000000");
        assert_eq!(d("1").add(&tiny, &up).unwrap(), d("1.001"));
        assert_eq!(d("1").sub(&tiny, &up).unwrap(), d("1"));
        assert_eq!(d("1").sub(&tiny, &down).unwrap(), d("0.9999"));
        assert_eq!(d("1").add(&tiny, &p(4)).unwrap(), d("1"));
        assert_eq!(tiny.sub(&d("1"), &down).unwrap(), d("-1"));
    }

    #[test]
    fn mul_examples() {
        let x = d("-7.25E12");
        assert_eq!(x.mul(&D::one(), &p(5)).unwrap(), x);
        assert_eq!(x.mul(&D::zero(), &p(5)).unwrap(), D::zero());
        assert_eq!(d("1.111").mul(&d("1.111"), &p(4)).unwrap(), d("1.234"));
    }

    #[test]
    fn div_examples() {
        let x = d("6.02214076E23");
        assert_eq!(x.div(&D::one(), &p(20)).unwrap(), x);
        assert_eq!(d("1").div(&d("3"), &p(5)).unwrap(), d("3.3333E-1"));
        assert_eq!(d("2").div(&d("2"), &p(1)).unwrap(), d("1"));
        assert_eq!(d("2").div(&D::zero(), &p(1)), Err(Error::DivisionByZero));
        assert_eq!(d("2").div(&d("3"), &p(5)).unwrap(), d("6.6667E-1"));
        assert_eq!(d("-1").div(&d("8"), &p(50)).unwrap(), d("-0.125"));
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let big = d("9E2147483647");
        assert_eq!(big.mul(&d("10"), &p(5)), Err(Error::ExponentOverflow));
        assert_eq!(big.add(&big, &p(5)), Err(Error::ExponentOverflow));
        let small = d("1E-2147483648");
        assert_eq!(small.div(&d("10"), &p(5)), Err(Error::ExponentOverflow));
    }
}
