//! The decimal floating-point value type.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::mag::{self, Mag, Radix};

/// A finite decimal number `(-1)^sign × d₁.d₂…d_p × 10^exponent`.
///
/// The significand digits live in little-endian limbs of `LB` decimal
/// digits each (`LB = 9` by default, so one limb fits a `u32` and a limb
/// product fits a `u64`). Values are always canonical:
///
/// * the leading digit `d₁` is nonzero and the significand carries no
///   trailing zero digits, so `p` is minimal;
/// * zero is unique: no limbs, non-negative, exponent 0;
/// * the exponent fits an `i32`.
///
/// Because the form is canonical, structural equality is numeric equality.
/// The limb width never shows through the public interface: digits,
/// exponent and every arithmetic result are the same for any `LB`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecimalFloat<const LB: usize = 9> {
    negative: bool,
    limbs: Mag,
    exponent: i32,
}

impl<const LB: usize> DecimalFloat<LB> {
    pub fn zero() -> Self {
        let () = Radix::<LB>::VALID;
        DecimalFloat {
            negative: false,
            limbs: Vec::new(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    pub fn from_u64(n: u64) -> Self {
        Self::from_coefficient(false, mag::from_u64::<LB>(n), 0)
            .expect("u64 values are always in exponent range")
    }

    pub fn from_i64(n: i64) -> Self {
        let v = Self::from_u64(n.unsigned_abs());
        if n < 0 {
            v.negate()
        } else {
            v
        }
    }

    /// Canonicalizes a raw digit sequence.
    ///
    /// `digits` are decimal digit values, most significant first, and may
    /// carry leading or trailing zeros. `exponent` is the power of ten of
    /// the first raw digit, so `[0, 0, 7, 2]` with exponent 3 is
    /// `0.072 × 10³ = 7.2E1`.
    pub fn normalize(negative: bool, digits: &[u8], exponent: i64) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&d| d > 9) {
            return Err(Error::InvalidDigit(bad));
        }
        if digits.is_empty() {
            return Ok(Self::zero());
        }
        let unit_exp = exponent
            .checked_sub(digits.len() as i64 - 1)
            .ok_or(Error::ExponentOverflow)?;
        Self::from_coefficient(negative, mag::from_digits::<LB>(digits), unit_exp)
    }

    /// Builds a canonical value from an integer coefficient scaled by
    /// `10^unit_exp`.
    pub(crate) fn from_coefficient(negative: bool, mut coeff: Mag, unit_exp: i64) -> Result<Self> {
        let () = Radix::<LB>::VALID;
        mag::trim(&mut coeff);
        if coeff.is_empty() {
            return Ok(Self::zero());
        }
        let tz = mag::trailing_zeros::<LB>(&coeff);
        if tz > 0 {
            coeff = mag::shr_digits::<LB>(&coeff, tz);
        }
        let p = mag::digit_count::<LB>(&coeff) as i64;
        let exponent = unit_exp
            .checked_add(tz as i64)
            .and_then(|e| e.checked_add(p - 1))
            .ok_or(Error::ExponentOverflow)?;
        let exponent = i32::try_from(exponent).map_err(|_| Error::ExponentOverflow)?;
        Ok(DecimalFloat {
            negative,
            limbs: coeff,
            exponent,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Power of ten of the leading significand digit (0 for zero).
    pub fn exponent(&self) -> i32 {
        self.exponent
    }

    /// Significand limbs, least significant first, `LB` digits each.
    pub fn limbs(&self) -> &[u32] {
        &self.limbs
    }

    /// Number of significand digits `p`; zero has none.
    pub fn digit_count(&self) -> usize {
        mag::digit_count::<LB>(&self.limbs)
    }

    /// Significand digits, most significant first.
    pub fn digits(&self) -> Vec<u8> {
        mag::to_digits::<LB>(&self.limbs)
    }

    /// Power of ten of the last significand digit.
    pub(crate) fn unit_exponent(&self) -> i64 {
        i64::from(self.exponent) - (self.digit_count() as i64 - 1)
    }

    pub(crate) fn coefficient(&self) -> &[u32] {
        &self.limbs
    }

    pub fn negate(&self) -> Self {
        let mut v = self.clone();
        v.negative = !v.negative && !v.is_zero();
        v
    }

    pub fn abs(&self) -> Self {
        let mut v = self.clone();
        v.negative = false;
        v
    }

    /// True when the value has no fractional digits.
    pub fn is_integer(&self) -> bool {
        self.unit_exponent() >= 0
    }

    /// The value as a `u64`, if it is a non-negative integer that fits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.negative || !self.is_integer() {
            return None;
        }
        let shift = usize::try_from(self.unit_exponent()).ok()?;
        if shift > 20 {
            return None;
        }
        let scaled = mag::shl_digits::<LB>(&self.limbs, shift).ok()?;
        mag::to_u64::<LB>(&scaled)
    }

    /// Exact ordering of the two values. No context is involved.
    pub fn compare(&self, other: &Self) -> Ordering {
        let sign = |x: &Self| match (x.is_zero(), x.negative) {
            (true, _) => 0,
            (false, true) => -1,
            (false, false) => 1,
        };
        let (sa, sb) = (sign(self), sign(other));
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        let magnitude = self
            .exponent
            .cmp(&other.exponent)
            .then_with(|| self.cmp_significand(other));
        if self.negative {
            magnitude.reverse()
        } else {
            magnitude
        }
    }

    // Digit-lexicographic comparison of significands with equal exponents.
    fn cmp_significand(&self, other: &Self) -> Ordering {
        let (pa, pb) = (self.digit_count(), other.digit_count());
        for i in 0..pa.max(pb) {
            let da = if i < pa {
                mag::digit_at::<LB>(&self.limbs, pa - 1 - i)
            } else {
                0
            };
            let db = if i < pb {
                mag::digit_at::<LB>(&other.limbs, pb - 1 - i)
            } else {
                0
            };
            match da.cmp(&db) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Re-encodes the value with a different limb width.
    pub fn with_limb_width<const TO: usize>(&self) -> DecimalFloat<TO> {
        DecimalFloat::<TO>::normalize(self.negative, &self.digits(), i64::from(self.exponent))
            .expect("same value, same exponent")
    }
}

impl<const LB: usize> Default for DecimalFloat<LB> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const LB: usize> PartialOrd for DecimalFloat<LB> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const LB: usize> Ord for DecimalFloat<LB> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl<const LB: usize> fmt::Debug for DecimalFloat<LB> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DecimalFloat({})", self)
    }
}

impl<const LB: usize> From<u64> for DecimalFloat<LB> {
    fn from(n: u64) -> Self {
        Self::from_u64(n)
    }
}

impl<const LB: usize> From<i64> for DecimalFloat<LB> {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}
