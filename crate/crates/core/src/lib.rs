//! Arbitrary-precision decimal floating point.
//!
//! A [`DecimalFloat`] is a sign, a significand of decimal digits and a
//! power-of-ten exponent. Precision is not a property of a number: every
//! inexact operation takes a [`Context`] naming how many significand digits
//! to keep and how to round, and returns the correctly rounded result.
//!
//! ```
//! use noz::{Context, DecimalFloat};
//!
//! let ctx = Context::new(5)?;
//! let third = DecimalFloat::<9>::from_u64(1).div(&DecimalFloat::from_u64(3), &ctx)?;
//! assert_eq!(third.to_string(), "3.3333E-1");
//! # Ok::<(), noz::Error>(())
//! ```
//!
//! The [`functions`] module adds factorial and series evaluation of
//! `exp`, `sin` and `cos`.

mod arith;
mod context;
mod decimal;
mod error;
pub mod functions;
mod mag;
mod round;
mod text;

pub use context::{Context, Rounding, UnknownRounding, MAX_PRECISION};
pub use decimal::DecimalFloat;
pub use error::{Error, Result};
pub use functions::SeriesPolicy;
pub use text::parse;
