//! The single rounding step shared by every inexact operation.

use crate::context::{Context, Rounding};
use crate::decimal::DecimalFloat;
use crate::error::Result;
use crate::mag::{self, Mag};

/// Where the discarded part lies relative to half a unit of the kept part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Discarded {
    Zero,
    BelowHalf,
    Half,
    AboveHalf,
}

fn round_away(mode: Rounding, negative: bool, odd: bool, rest: Discarded) -> bool {
    if rest == Discarded::Zero {
        return false;
    }
    match mode {
        Rounding::TowardZero => false,
        Rounding::Up => !negative,
        Rounding::Down => negative,
        Rounding::HalfUp => matches!(rest, Discarded::Half | Discarded::AboveHalf),
        Rounding::HalfEven => rest == Discarded::AboveHalf || (rest == Discarded::Half && odd),
    }
}

/// Rounds `(coeff + δ) × 10^unit_exp` to `precision` digits, where `δ` is
/// zero when `sticky` is false and lies strictly inside `(0, 1)` otherwise.
pub(crate) fn round_coefficient<const LB: usize>(
    negative: bool,
    mut coeff: Mag,
    mut unit_exp: i64,
    sticky: bool,
    precision: usize,
    mode: Rounding,
) -> Result<DecimalFloat<LB>> {
    let mut p = mag::digit_count::<LB>(&coeff);
    if p <= precision {
        if !sticky {
            return DecimalFloat::from_coefficient(negative, coeff, unit_exp);
        }
        // make room for one discarded digit below the last kept one
        let pad = precision + 1 - p;
        coeff = mag::shl_digits::<LB>(&coeff, pad)?;
        unit_exp -= pad as i64;
        p += pad;
    }
    let drop = p - precision;
    let first = mag::digit_at::<LB>(&coeff, drop - 1);
    let tail = sticky || mag::any_nonzero_below::<LB>(&coeff, drop - 1);
    let rest = match (first, tail) {
        (0, false) => Discarded::Zero,
        (5, false) => Discarded::Half,
        (d, _) if d < 5 => Discarded::BelowHalf,
        _ => Discarded::AboveHalf,
    };
    let mut kept = mag::shr_digits::<LB>(&coeff, drop);
    let odd = kept.first().is_some_and(|l| l % 2 == 1);
    if round_away(mode, negative, odd, rest) {
        kept = mag::add_small::<LB>(&kept, 1);
    }
    DecimalFloat::from_coefficient(negative, kept, unit_exp + drop as i64)
}

impl<const LB: usize> DecimalFloat<LB> {
    /// Rounds to the context precision. Values that already fit are
    /// returned unchanged, so rounding is idempotent.
    pub fn round(&self, ctx: &Context) -> Result<Self> {
        self.round_to(ctx.precision() as usize, ctx.rounding())
    }

    pub(crate) fn round_to(&self, precision: usize, mode: Rounding) -> Result<Self> {
        if self.digit_count() <= precision {
            return Ok(self.clone());
        }
        round_coefficient(
            self.is_negative(),
            self.coefficient().to_vec(),
            self.unit_exponent(),
            false,
            precision,
            mode,
        )
    }
}
