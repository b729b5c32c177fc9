//! Exact rational reference arithmetic.
//!
//! [`Rational`] holds a big-integer fraction in lowest terms. [`rat_round`]
//! turns an exact rational into the correctly rounded [`DecimalFloat`] using
//! only integer comparisons. Neither touches the limb arithmetic of `noz`;
//! the only shared surface is [`DecimalFloat::normalize`] and the digit
//! accessors, so the two implementations can be checked against each other.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use noz::{DecimalFloat, Rounding};

pub mod suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("division by zero")]
    DivisionByZero,
}

/// An exact fraction with positive denominator in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `numerator / denominator`; panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

pub fn rat_add(a: &Rational, b: &Rational) -> Rational {
    Rational(&a.0 + &b.0)
}

pub fn rat_sub(a: &Rational, b: &Rational) -> Rational {
    Rational(&a.0 - &b.0)
}

pub fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    Rational(&a.0 * &b.0)
}

pub fn rat_div(a: &Rational, b: &Rational) -> Result<Rational, OracleError> {
    if b.is_zero() {
        return Err(OracleError::DivisionByZero);
    }
    Ok(Rational(&a.0 / &b.0))
}

fn pow10(k: u64) -> BigUint {
    num_traits::pow(BigUint::from(10u32), k as usize)
}

/// Exact value of a decimal.
pub fn to_rational<const LB: usize>(x: &DecimalFloat<LB>) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let digits = x.digits();
    let coefficient = digits
        .iter()
        .fold(BigUint::zero(), |acc, &d| acc * 10u32 + u32::from(d));
    let sign = if x.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    let numerator = BigInt::from_biguint(sign, coefficient);
    // value = coefficient × 10^(exponent - p + 1)
    let scale = i64::from(x.exponent()) - (digits.len() as i64 - 1);
    if scale >= 0 {
        Rational::new(numerator * BigInt::from(pow10(scale as u64)), 1)
    } else {
        Rational::new(numerator, BigInt::from(pow10(scale.unsigned_abs())))
    }
}

/// `floor(log10(n / d))` for positive integers.
fn decimal_exponent(n: &BigUint, d: &BigUint) -> i64 {
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    // 10^e <= n/d < 10^(e+1) ⇔ d·10^e <= n < d·10^(e+1)
    let below = |e: i64| -> bool {
        if e >= 0 {
            n < &(d * pow10(e as u64))
        } else {
            &(n * pow10(e.unsigned_abs())) < d
        }
    };
    while below(e) {
        e -= 1;
    }
    while !below(e + 1) {
        e += 1;
    }
    e
}

/// The `precision`-digit decimal nearest `q` under `mode`.
///
/// With `e = floor(log10|q|)`, the scaled value `|q| · 10^(precision-1-e)`
/// is split into an integer part and an exact remainder `r / divisor`.
/// Ties are detected by comparing `2r` with the divisor.
pub fn rat_round<const LB: usize>(
    q: &Rational,
    precision: u32,
    mode: Rounding,
) -> noz::Result<DecimalFloat<LB>> {
    assert!(precision >= 1);
    if q.is_zero() {
        return Ok(DecimalFloat::zero());
    }
    let negative = q.is_negative();
    let n = q.numerator().magnitude().clone();
    let d = q.denominator().magnitude().clone();
    let e = decimal_exponent(&n, &d);
    let k = i64::from(precision) - 1 - e;
    let (num, divisor) = if k >= 0 {
        (n * pow10(k as u64), d)
    } else {
        (n, d * pow10(k.unsigned_abs()))
    };
    let (mut kept, remainder) = num.div_rem(&divisor);
    let twice = &remainder * 2u32;
    let half = twice.cmp(&divisor);
    let inexact = !remainder.is_zero();
    let odd = kept.is_odd();
    let away = inexact
        && match mode {
            Rounding::TowardZero => false,
            Rounding::Up => !negative,
            Rounding::Down => negative,
            Rounding::HalfUp => half != Ordering::Less,
            Rounding::HalfEven => half == Ordering::Greater || (half == Ordering::Equal && odd),
        };
    if away {
        kept += 1u32;
    }
    let digits: Vec<u8> = kept.to_string().bytes().map(|c| c - b'0').collect();
    // a carry out of the top digit adds one digit and one to the exponent
    let leading = e + (digits.len() as i64 - i64::from(precision));
    DecimalFloat::normalize(negative, &digits, leading)
}

/// `|a - b|` measured in units of the last place of a `precision`-digit
/// number with the exponent of `reference`.
pub fn ulp_distance<const LB: usize>(
    a: &DecimalFloat<LB>,
    b: &DecimalFloat<LB>,
    reference: &DecimalFloat<LB>,
    precision: u32,
) -> Rational {
    let diff = rat_sub(&to_rational(a), &to_rational(b)).abs();
    let e = i64::from(reference.exponent()) - i64::from(precision) + 1;
    if e >= 0 {
        Rational(diff.0 / BigRational::from_integer(BigInt::from(pow10(e as u64))))
    } else {
        Rational(diff.0 * BigRational::from_integer(BigInt::from(pow10(e.unsigned_abs()))))
    }
}

/// `|a - b| / |b|` in units of `10^(1 - precision)`, the relative spacing
/// of `precision`-digit numbers with leading digit 1. `b` must be nonzero.
pub fn relative_ulps<const LB: usize>(
    a: &DecimalFloat<LB>,
    b: &DecimalFloat<LB>,
    precision: u32,
) -> Rational {
    let exact = to_rational(b);
    assert!(!exact.is_zero(), "relative error against zero");
    let diff = rat_sub(&to_rational(a), &exact).abs();
    let scale = BigRational::from_integer(BigInt::from(pow10(u64::from(precision) - 1)));
    Rational(diff.0 / exact.abs().0 * scale)
}

/// True when `a` and `b` differ by at most `n` ulp of `reference` at
/// `precision` digits.
pub fn within_ulps<const LB: usize>(
    a: &DecimalFloat<LB>,
    b: &DecimalFloat<LB>,
    reference: &DecimalFloat<LB>,
    precision: u32,
    n: u32,
) -> bool {
    ulp_distance(a, b, reference, precision) <= Rational::from_integer(n)
}

/// Convenience: `n!` as an exact integer, computed by a plain loop.
pub fn factorial_exact(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}
