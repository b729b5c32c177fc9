//! Elementary functions evaluated by power series.
//!
//! Terms come from the ratio recurrence of each series (one multiply and
//! one divide per term), are summed at `precision + guard` digits and the
//! total is rounded once to the caller's context.

mod series;

use crate::context::{Context, Rounding};
use crate::decimal::DecimalFloat;
use crate::error::{Error, Result};
use crate::mag;

pub use series::SeriesPolicy;
use series::{sum_series, Series};

/// Largest argument accepted by [`factorial`]. The product is formed
/// exactly, so this bounds both time and memory.
pub const MAX_FACTORIAL_ARGUMENT: u64 = 20_000;

/// Largest `|x|` accepted by [`exp`].
pub const EXP_DOMAIN: u32 = 100;

/// Largest `|x|` accepted by [`sin`] and [`cos`]; no range reduction is done.
pub const TRIG_DOMAIN: u32 = 10;

/// `n!`, computed as an exact integer and rounded only if it has more
/// digits than the context precision.
pub fn factorial<const LB: usize>(n: u64, ctx: &Context) -> Result<DecimalFloat<LB>> {
    if n > MAX_FACTORIAL_ARGUMENT {
        return Err(Error::Resource(format!(
            "factorial argument {} exceeds {}",
            n, MAX_FACTORIAL_ARGUMENT
        )));
    }
    let mut product = mag::from_u64::<LB>(1);
    // pack consecutive factors into one word per limb pass
    let mut chunk = 1u64;
    for k in 2..=n {
        if chunk * k > u64::from(u32::MAX) {
            product = mag::mul_small::<LB>(&product, chunk as u32);
            chunk = k;
        } else {
            chunk *= k;
        }
    }
    product = mag::mul_small::<LB>(&product, chunk as u32);
    DecimalFloat::from_coefficient(false, product, 0)?.round(ctx)
}

fn check_domain<const LB: usize>(
    x: &DecimalFloat<LB>,
    function: &'static str,
    bound: u32,
) -> Result<()> {
    if x.abs() > DecimalFloat::from_u64(u64::from(bound)) {
        Err(Error::Domain { function, bound })
    } else {
        Ok(())
    }
}

/// `factor * ceil(|x|)`: from this index on, each term is at most half
/// the previous one.
fn settle_index<const LB: usize>(x: &DecimalFloat<LB>, factor: usize) -> usize {
    let a = x.abs();
    let ceil = if a.is_zero() {
        0
    } else if a.exponent() < 0 {
        1
    } else {
        a.round_to(a.exponent() as usize + 1, Rounding::Up)
            .ok()
            .and_then(|c| c.to_u64())
            .unwrap_or(u64::MAX)
    };
    usize::try_from(ceil)
        .unwrap_or(usize::MAX)
        .saturating_mul(factor)
}

/// A function evaluated by [`evaluate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Exp,
    Sin,
    Cos,
}

impl Function {
    pub const ALL: [Function; 3] = [Function::Exp, Function::Sin, Function::Cos];

    pub fn name(self) -> &'static str {
        match self {
            Function::Exp => "exp",
            Function::Sin => "sin",
            Function::Cos => "cos",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// A series result together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation<const LB: usize = 9> {
    /// The result rounded to the caller's context.
    pub value: DecimalFloat<LB>,
    /// Number of series terms summed in the final pass.
    pub terms: usize,
    /// Digits carried while summing.
    pub working_precision: u32,
    /// Leading exponent of each nonzero term, in summation order.
    pub term_exponents: Vec<i32>,
}

impl<const LB: usize> Evaluation<LB> {
    fn constant(value: DecimalFloat<LB>, ctx: &Context) -> Self {
        let term_exponents = if value.is_zero() {
            vec![]
        } else {
            vec![value.exponent()]
        };
        Evaluation {
            value,
            terms: 1,
            working_precision: ctx.precision(),
            term_exponents,
        }
    }
}

/// Evaluates `function(x)` and reports the series statistics.
pub fn evaluate<const LB: usize>(
    function: Function,
    x: &DecimalFloat<LB>,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<Evaluation<LB>> {
    match function {
        Function::Exp => exp_series(x, ctx, policy),
        Function::Sin => {
            check_domain(x, "sin", TRIG_DOMAIN)?;
            if x.is_zero() {
                return Ok(Evaluation::constant(DecimalFloat::zero(), ctx));
            }
            let arg = x.abs();
            let mut eval = trig_series(&arg, arg.clone(), 1, ctx, policy)?;
            if x.is_negative() {
                eval.value = eval.value.negate();
            }
            Ok(eval)
        }
        Function::Cos => {
            check_domain(x, "cos", TRIG_DOMAIN)?;
            if x.is_zero() {
                return Ok(Evaluation::constant(DecimalFloat::one(), ctx));
            }
            trig_series(&x.abs(), DecimalFloat::one(), 0, ctx, policy)
        }
    }
}

/// `e^x` by its Taylor series, `|x| ≤ 100`.
///
/// With a dynamic policy, negative arguments are evaluated as `1 / e^|x|`
/// so that no cancellation occurs. A fixed-term policy sums exactly the
/// first `n` terms `x^k / k!` for any sign of `x`.
pub fn exp<const LB: usize>(
    x: &DecimalFloat<LB>,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<DecimalFloat<LB>> {
    Ok(evaluate(Function::Exp, x, ctx, policy)?.value)
}

/// `sin x` by its Maclaurin series, `|x| ≤ 10`. Odd: `sin(-x) = -sin(x)`
/// exactly.
pub fn sin<const LB: usize>(
    x: &DecimalFloat<LB>,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<DecimalFloat<LB>> {
    Ok(evaluate(Function::Sin, x, ctx, policy)?.value)
}

/// `cos x` by its Maclaurin series, `|x| ≤ 10`. Even: `cos(-x) = cos(x)`
/// exactly.
pub fn cos<const LB: usize>(
    x: &DecimalFloat<LB>,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<DecimalFloat<LB>> {
    Ok(evaluate(Function::Cos, x, ctx, policy)?.value)
}

fn exp_series<const LB: usize>(
    x: &DecimalFloat<LB>,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<Evaluation<LB>> {
    check_domain(x, "exp", EXP_DOMAIN)?;
    if x.is_zero() {
        return Ok(Evaluation::constant(DecimalFloat::one(), ctx));
    }
    let reciprocal = x.is_negative() && policy.fixed_terms().is_none();
    let arg = if reciprocal { x.abs() } else { x.clone() };
    let series = Series {
        first: DecimalFloat::one(),
        settle: settle_index(&arg, 2),
        next: Box::new(|term: &DecimalFloat<LB>, k: usize, work: &Context| {
            term.mul(&arg, work)?
                .div(&DecimalFloat::from_u64(k as u64), work)
        }),
    };
    let summed = sum_series(series, ctx, policy)?;
    let sum = if reciprocal {
        DecimalFloat::one().div(&summed.sum, &summed.work)?
    } else {
        summed.sum
    };
    Ok(Evaluation {
        value: sum.round(ctx)?,
        terms: summed.terms,
        working_precision: summed.work.precision(),
        term_exponents: summed.term_exponents,
    })
}

/// Sums `Σ (-1)^k x^(2k+offset) / (2k+offset)!` starting from `first`.
fn trig_series<const LB: usize>(
    x: &DecimalFloat<LB>,
    first: DecimalFloat<LB>,
    offset: u64,
    ctx: &Context,
    policy: &SeriesPolicy,
) -> Result<Evaluation<LB>> {
    let series = Series {
        first,
        settle: settle_index(x, 1) + 1,
        next: Box::new(move |term: &DecimalFloat<LB>, k: usize, work: &Context| {
            let k = k as u64;
            let denom = (2 * k - 1 + offset) * (2 * k + offset);
            term.mul(x, work)?
                .mul(x, work)?
                .div(&DecimalFloat::from_u64(denom), work)
                .map(|t| t.negate())
        }),
    };
    let summed = sum_series(series, ctx, policy)?;
    Ok(Evaluation {
        value: summed.sum.round(ctx)?,
        terms: summed.terms,
        working_precision: summed.work.precision(),
        term_exponents: summed.term_exponents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type D = DecimalFloat;

    const PAPER_E: &str = "2.718281828459045235360287471352662497757247093699959574966967627724076630353547594571382178525166427E0";

    fn p(n: u32) -> Context {
        Context::new(n).unwrap()
    }

    fn d(s: &str) -> D {
        s.parse().unwrap()
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial::<9>(0, &p(5)).unwrap().to_string(), "1E0");
        assert_eq!(factorial::<9>(5, &p(5)).unwrap().to_string(), "1.2E2");
        assert_eq!(
            factorial::<9>(20, &p(30)).unwrap().to_string(),
            "2.43290200817664E18"
        );
        // 20! = 2432902008176640000, 4 digits keep 2433
        assert_eq!(factorial::<9>(20, &p(4)).unwrap().to_string(), "2.433E18");
        assert!(matches!(
            factorial::<9>(MAX_FACTORIAL_ARGUMENT + 1, &p(5)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn exp_golden() {
        let ctx = p(100);
        let one = D::one();
        assert_eq!(
            exp(&one, &ctx, &SeriesPolicy::default())
                .unwrap()
                .to_string(),
            PAPER_E
        );
        let fixed = SeriesPolicy::default().with_fixed_terms(70).unwrap();
        assert_eq!(exp(&one, &ctx, &fixed).unwrap().to_string(), PAPER_E);
    }

    #[test]
    fn series_constants() {
        let pol = SeriesPolicy::default();
        assert_eq!(exp(&D::zero(), &p(20), &pol).unwrap(), D::one());
        assert_eq!(sin(&D::zero(), &p(20), &pol).unwrap(), D::zero());
        assert_eq!(cos(&D::zero(), &p(20), &pol).unwrap(), D::one());
    }

    #[test]
    fn known_values() {
        let pol = SeriesPolicy::default();
        let ctx = p(30);
        assert_eq!(
            sin(&D::one(), &ctx, &pol).unwrap().to_string(),
            "8.4147098480789650665250232163E-1"
        );
        assert_eq!(
            cos(&D::one(), &ctx, &pol).unwrap().to_string(),
            "5.40302305868139717400936607443E-1"
        );
        assert_eq!(
            exp(&d("-1"), &ctx, &pol).unwrap().to_string(),
            "3.67879441171442321595523770161E-1"
        );
        assert_eq!(
            exp(&d("100"), &ctx, &pol).unwrap().to_string(),
            "2.68811714181613544841262555158E43"
        );
        assert_eq!(
            exp(&d("-100"), &ctx, &pol).unwrap().to_string(),
            "3.72007597602083596295969580386E-44"
        );
    }

    #[test]
    fn cancellation_near_a_root_is_recovered() {
        // 3π to 12 places: terms reach ~1e3 while the result is ~4e-13
        let x = d("9.424777960769");
        let got = sin(&x, &p(20), &SeriesPolicy::default()).unwrap();
        assert_eq!(got.to_string(), "3.7971538793014983851E-13");
    }

    #[test]
    fn parity_is_exact() {
        let pol = SeriesPolicy::default();
        let ctx = p(40);
        let x = d("3.7172");
        assert_eq!(
            sin(&x.negate(), &ctx, &pol).unwrap(),
            sin(&x, &ctx, &pol).unwrap().negate()
        );
        assert_eq!(
            cos(&x.negate(), &ctx, &pol).unwrap(),
            cos(&x, &ctx, &pol).unwrap()
        );
    }

    #[test]
    fn domains() {
        let pol = SeriesPolicy::default();
        let ctx = p(10);
        assert_eq!(
            exp(&d("100.0001"), &ctx, &pol),
            Err(Error::Domain {
                function: "exp",
                bound: 100
            })
        );
        assert!(exp(&d("-100"), &ctx, &pol).is_ok());
        assert_eq!(
            sin(&d("-10.5"), &ctx, &pol),
            Err(Error::Domain {
                function: "sin",
                bound: 10
            })
        );
        assert_eq!(
            cos(&d("11"), &ctx, &pol),
            Err(Error::Domain {
                function: "cos",
                bound: 10
            })
        );
    }

    #[test]
    fn term_cap() {
        let pol = SeriesPolicy::new(5).unwrap();
        assert_eq!(exp(&d("1"), &p(50), &pol), Err(Error::MaxTermsExceeded(5)));
    }
}
