use crate::context::{Context, Rounding};
use crate::decimal::DecimalFloat;
use crate::error::{Error, Result};

/// Term budget and working-precision settings for series evaluation.
///
/// By default a series runs until its terms fall below the last working
/// digit of the running sum. Setting `fixed_terms` sums exactly that many
/// terms instead, which is how a hand-written loop with an explicit term
/// count behaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesPolicy {
    guard_digits: u32,
    max_terms: usize,
    fixed_terms: Option<usize>,
}

impl SeriesPolicy {
    pub const DEFAULT_MAX_TERMS: usize = 100_000;

    /// Dynamic policy with the given term cap and
    /// `max(10, ceil(log10(max_terms)))` guard digits.
    pub fn new(max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::InvalidPolicy("max_terms must be ≥ 1"));
        }
        Ok(SeriesPolicy {
            guard_digits: 10u32.max(ceil_log10(max_terms)),
            max_terms,
            fixed_terms: None,
        })
    }

    pub fn with_guard_digits(self, guard_digits: u32) -> Result<Self> {
        if guard_digits < 2 {
            return Err(Error::InvalidPolicy("guard_digits must be ≥ 2"));
        }
        Ok(SeriesPolicy {
            guard_digits,
            ..self
        })
    }

    /// Switches to fixed-term summation of `terms` terms.
    pub fn with_fixed_terms(self, terms: usize) -> Result<Self> {
        if terms == 0 || terms > self.max_terms {
            return Err(Error::InvalidPolicy("fixed_terms must be in 1..=max_terms"));
        }
        Ok(SeriesPolicy {
            fixed_terms: Some(terms),
            ..self
        })
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn fixed_terms(&self) -> Option<usize> {
        self.fixed_terms
    }
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy::new(Self::DEFAULT_MAX_TERMS).unwrap()
    }
}

fn ceil_log10(n: usize) -> u32 {
    let mut digits = 0;
    let mut p = 1usize;
    while p < n {
        digits += 1;
        p = p.saturating_mul(10);
    }
    digits
}

type NextTerm<'a, const LB: usize> =
    Box<dyn Fn(&DecimalFloat<LB>, usize, &Context) -> Result<DecimalFloat<LB>> + 'a>;

pub(super) struct Series<'a, const LB: usize> {
    pub first: DecimalFloat<LB>,
    /// Index from which terms shrink at least geometrically by one half.
    pub settle: usize,
    /// Maps term `k - 1` to term `k`.
    pub next: NextTerm<'a, LB>,
}

pub(super) struct Summed<const LB: usize> {
    /// Unrounded working sum.
    pub sum: DecimalFloat<LB>,
    pub work: Context,
    pub terms: usize,
    pub term_exponents: Vec<i32>,
}

const MAX_WIDENINGS: usize = 8;

fn working_context(precision: u64) -> Result<Context> {
    let p = u32::try_from(precision)
        .map_err(|_| Error::Resource(format!("working precision {} too large", precision)))?;
    Ok(Context::working(p, Rounding::HalfEven))
}

/// Evaluates the series at `precision + guard` digits.
///
/// In dynamic mode the result is checked for cancellation: if the largest
/// term exceeded the sum by more digits than the guard can absorb, the
/// sum is recomputed with the working precision widened by the loss.
pub(super) fn sum_series<const LB: usize>(
    series: Series<'_, LB>,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<Summed<LB>> {
    let target = u64::from(ctx.precision());
    let mut extra = u64::from(policy.guard_digits);
    if policy.fixed_terms.is_some() {
        let work = working_context(target + extra)?;
        return run(&series, &work, policy);
    }
    for _ in 0..MAX_WIDENINGS {
        let work = working_context(target + extra)?;
        let summed = run(&series, &work, policy)?;
        let largest = summed.term_exponents.iter().copied().max().unwrap_or(0);
        let lost = if summed.sum.is_zero() {
            u64::from(work.precision())
        } else {
            i64::from(largest)
                .saturating_sub(i64::from(summed.sum.exponent()))
                .max(0) as u64
        };
        let needed = lost + u64::from(ceil_log10(summed.terms)) + 2;
        if needed <= extra {
            return Ok(summed);
        }
        extra = u64::from(policy.guard_digits) + needed;
    }
    Err(Error::Resource(
        "series cancellation not resolved by widening the working precision".to_string(),
    ))
}

fn run<const LB: usize>(
    series: &Series<'_, LB>,
    work: &Context,
    policy: &SeriesPolicy,
) -> Result<Summed<LB>> {
    let precision = i64::from(work.precision());
    let mut term = series.first.round(work)?;
    let mut sum = term.clone();
    let mut term_exponents = Vec::new();
    if !term.is_zero() {
        term_exponents.push(term.exponent());
    }
    let mut k = 0usize;
    loop {
        match policy.fixed_terms {
            Some(n) => {
                if k + 1 >= n {
                    break;
                }
            }
            None => {
                if term.is_zero() {
                    break;
                }
                let below_last_digit = !sum.is_zero()
                    && i64::from(term.exponent()) < i64::from(sum.exponent()) - precision;
                if k >= series.settle && below_last_digit {
                    break;
                }
            }
        }
        k += 1;
        if k >= policy.max_terms {
            return Err(Error::MaxTermsExceeded(policy.max_terms));
        }
        term = (series.next)(&term, k, work)?;
        sum = sum.add(&term, work)?;
        if !term.is_zero() {
            term_exponents.push(term.exponent());
        }
    }
    Ok(Summed {
        sum,
        work: *work,
        terms: k + 1,
        term_exponents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policy_defaults() {
        let p = SeriesPolicy::default();
        assert_eq!(p.guard_digits(), 10);
        assert_eq!(p.max_terms(), SeriesPolicy::DEFAULT_MAX_TERMS);
        assert_eq!(p.fixed_terms(), None);
        assert_eq!(
            SeriesPolicy::new(10usize.pow(12) + 1)
                .unwrap()
                .guard_digits(),
            13
        );
    }

    #[test]
    fn policy_validation() {
        assert!(SeriesPolicy::new(0).is_err());
        let p = SeriesPolicy::new(50).unwrap();
        assert!(p.with_guard_digits(1).is_err());
        assert!(p.with_guard_digits(2).is_ok());
        assert!(p.with_fixed_terms(0).is_err());
        assert!(p.with_fixed_terms(51).is_err());
        assert_eq!(p.with_fixed_terms(50).unwrap().fixed_terms(), Some(50));
    }

    #[test]
    fn ceil_log10_values() {
        assert_eq!(ceil_log10(1), 0);
        assert_eq!(ceil_log10(10), 1);
        assert_eq!(ceil_log10(11), 2);
        assert_eq!(ceil_log10(100_000), 5);
    }
}
