//! Precision and rounding configuration passed to every inexact operation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest accepted precision, in significand digits.
pub const MAX_PRECISION: u32 = 2_000_000_000;

/// How a result with more than `precision` digits is brought back to size.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rounding {
    /// Round to nearest, ties to an even last digit.
    #[default]
    HalfEven,
    /// Round to nearest, ties away from zero.
    HalfUp,
    /// Truncate.
    TowardZero,
    /// Toward positive infinity.
    Up,
    /// Toward negative infinity.
    Down,
}

impl Rounding {
    pub const ALL: [Rounding; 5] = [
        Rounding::HalfEven,
        Rounding::HalfUp,
        Rounding::TowardZero,
        Rounding::Up,
        Rounding::Down,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rounding::HalfEven => "half-even",
            Rounding::HalfUp => "half-up",
            Rounding::TowardZero => "toward-zero",
            Rounding::Up => "up",
            Rounding::Down => "down",
        }
    }
}

impl fmt::Display for Rounding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error returned when a rounding mode name is not recognized.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rounding mode `{0}` (expected half-even, half-up, toward-zero, up or down)")]
pub struct UnknownRounding(pub String);

impl FromStr for Rounding {
    type Err = UnknownRounding;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rounding::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownRounding(s.to_string()))
    }
}

/// Arithmetic context: significand precision in decimal digits and the
/// rounding mode applied when a result does not fit.
///
/// Contexts are small `Copy` values. Changing precision at runtime means
/// building a new context and passing it to the next operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Context {
    precision: u32,
    rounding: Rounding,
}

impl Context {
    /// Context with the given precision and half-even rounding.
    pub fn new(precision: u32) -> Result<Self> {
        Self::with_rounding(precision, Rounding::HalfEven)
    }

    pub fn with_rounding(precision: u32, rounding: Rounding) -> Result<Self> {
        Self::check(u64::from(precision))?;
        Ok(Context {
            precision,
            rounding,
        })
    }

    /// Validates a precision given as a wider integer (CLI input, for example).
    pub fn from_u64(precision: u64, rounding: Rounding) -> Result<Self> {
        Self::check(precision)?;
        Ok(Context {
            precision: precision as u32,
            rounding,
        })
    }

    fn check(precision: u64) -> Result<()> {
        if precision == 0 {
            Err(Error::PrecisionTooSmall)
        } else if precision > u64::from(MAX_PRECISION) {
            Err(Error::PrecisionTooLarge(precision))
        } else {
            Ok(())
        }
    }

    /// Internal working context; may exceed [`MAX_PRECISION`].
    pub(crate) fn working(precision: u32, rounding: Rounding) -> Self {
        debug_assert!(precision > 0);
        Context {
            precision,
            rounding,
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    /// Copy of this context with a different precision.
    pub fn set_precision(self, precision: u32) -> Result<Self> {
        Self::with_rounding(precision, self.rounding)
    }

    /// Copy of this context with a different rounding mode.
    pub fn set_rounding(self, rounding: Rounding) -> Self {
        Context { rounding, ..self }
    }
}
