use std::fmt;

use noz::functions::{self, SeriesPolicy};
use noz::{Context, DecimalFloat};

use crate::expr::{BinOp, Expr, ExprKind};

/// A successful evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalOutcome {
    pub value: DecimalFloat,
    /// Canonical text of `value`.
    pub rendered: String,
    pub precision_used: u32,
    /// Non-fatal notes, such as literals that were rounded on input.
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    Arithmetic(noz::Error),
    FactorialOperand(String),
}

impl fmt::Display for EvalErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalErrorKind::Arithmetic(e) => e.fmt(f),
            EvalErrorKind::FactorialOperand(v) => {
                write!(f, "factorial needs a non-negative integer, got {}", v)
            }
        }
    }
}

/// An evaluation failure and the offset of the node that raised it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at offset {offset}")]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub offset: usize,
}

struct Evaluator<'a> {
    ctx: &'a Context,
    policy: &'a SeriesPolicy,
    diagnostics: Vec<String>,
    used_fixed_terms: bool,
}

impl Evaluator<'_> {
    fn eval(&mut self, e: &Expr) -> Result<DecimalFloat, EvalError> {
        let at = |kind: noz::Error| EvalError {
            kind: EvalErrorKind::Arithmetic(kind),
            offset: e.offset,
        };
        let ctx = self.ctx;
        match &e.kind {
            ExprKind::Number(text) => {
                let exact: DecimalFloat = text.parse().map_err(at)?;
                let rounded = exact.round(ctx).map_err(at)?;
                if rounded != exact {
                    self.diagnostics.push(format!(
                        "literal at offset {} has {} digits, rounded to {}",
                        e.offset,
                        exact.digit_count(),
                        ctx.precision()
                    ));
                }
                Ok(rounded)
            }
            ExprKind::Neg(inner) => Ok(self.eval(inner)?.negate()),
            ExprKind::Binary(op, l, r) => {
                let a = self.eval(l)?;
                let b = self.eval(r)?;
                match op {
                    BinOp::Add => a.add(&b, ctx),
                    BinOp::Sub => a.sub(&b, ctx),
                    BinOp::Mul => a.mul(&b, ctx),
                    BinOp::Div => a.div(&b, ctx),
                }
                .map_err(at)
            }
            ExprKind::Factorial(inner) => {
                let v = self.eval(inner)?;
                let n = v.to_u64().ok_or_else(|| EvalError {
                    kind: if v.is_integer() && !v.is_negative() {
                        EvalErrorKind::Arithmetic(noz::Error::Resource(format!(
                            "factorial argument {} exceeds {}",
                            v,
                            functions::MAX_FACTORIAL_ARGUMENT
                        )))
                    } else {
                        EvalErrorKind::FactorialOperand(v.to_string())
                    },
                    offset: e.offset,
                })?;
                functions::factorial(n, ctx).map_err(at)
            }
            ExprKind::Call(function, arg) => {
                let x = self.eval(arg)?;
                if self.policy.fixed_terms().is_some() {
                    self.used_fixed_terms = true;
                }
                functions::evaluate(*function, &x, ctx, self.policy)
                    .map(|r| r.value)
                    .map_err(at)
            }
        }
    }
}

/// Evaluates bottom-up, rounding every intermediate result to `ctx`.
pub fn evaluate(e: &Expr, ctx: &Context, policy: &SeriesPolicy) -> Result<EvalOutcome, EvalError> {
    let mut ev = Evaluator {
        ctx,
        policy,
        diagnostics: Vec::new(),
        used_fixed_terms: false,
    };
    let value = ev.eval(e)?;
    if ev.used_fixed_terms {
        ev.diagnostics.push(format!(
            "fixed-term series mode: {} terms per function call",
            policy.fixed_terms().unwrap_or_default()
        ));
    }
    Ok(EvalOutcome {
        rendered: value.to_string(),
        value,
        precision_used: ctx.precision(),
        diagnostics: ev.diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    const PAPER_E: &str = "2.718281828459045235360287471352662497757247093699959574966967627724076630353547594571382178525166427E0";

    fn run(text: &str, precision: u32) -> Result<EvalOutcome, EvalError> {
        let ctx = Context::new(precision).unwrap();
        evaluate(&parse_expr(text).unwrap(), &ctx, &SeriesPolicy::default())
    }

    #[test]
    fn golden_e() {
        let out = run("exp(1)", 100).unwrap();
        assert_eq!(out.rendered, PAPER_E);
        assert_eq!(out.precision_used, 100);
        assert!(out.diagnostics.is_empty());
    }

    #[test]
    fn cancellation_depends_on_precision() {
        assert_eq!(run("(1 + 1E-8) - 1", 4).unwrap().rendered, "0E0");
        assert_eq!(run("(1 + 1E-8) - 1", 20).unwrap().rendered, "1E-8");
    }

    #[test]
    fn errors_carry_offsets() {
        let err = run("1/0", 10).unwrap_err();
        assert_eq!(err.offset, 1);
        assert_eq!(err.to_string(), "division by zero at offset 1");
        let err = run("2.5!", 10).unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(
            err.to_string(),
            "factorial needs a non-negative integer, got 2.5E0 at offset 3"
        );
        let err = run("1 + sin(11)", 10).unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(matches!(
            err.kind,
            EvalErrorKind::Arithmetic(noz::Error::Domain { .. })
        ));
        assert!(run("(0-3)!", 10).is_err());
    }

    #[test]
    fn nested_factorial() {
        // 5!! = 120!, which rounds at 10 digits
        assert_eq!(run("5!!", 10).unwrap().rendered, "6.689502913E198");
        let err = run("5!!!", 10).unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(
            err.to_string(),
            "resource limit exceeded: factorial argument 6.689502913E198 exceeds 20000 at offset 3"
        );
    }

    #[test]
    fn long_literals_are_rounded_with_a_note() {
        let out = run("3.14159", 3).unwrap();
        assert_eq!(out.rendered, "3.14E0");
        assert_eq!(
            out.diagnostics,
            vec!["literal at offset 0 has 6 digits, rounded to 3"]
        );
    }

    #[test]
    fn fixed_terms_note() {
        let ctx = Context::new(100).unwrap();
        let pol = SeriesPolicy::default().with_fixed_terms(70).unwrap();
        let out = evaluate(&parse_expr("exp(1)").unwrap(), &ctx, &pol).unwrap();
        assert_eq!(out.rendered, PAPER_E);
        assert_eq!(
            out.diagnostics,
            vec!["fixed-term series mode: 70 terms per function call"]
        );
    }
}
