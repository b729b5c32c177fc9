//! `nozcalc`: an expression calculator over `noz` decimals.
//!
//! Expressions are parsed by [`parse_expr`] and evaluated by [`evaluate`]
//! with every intermediate result rounded to the session precision. The
//! [`repl`] module keeps that precision adjustable between lines.

pub mod demo;
pub mod eval;
pub mod expr;
pub mod repl;

pub use demo::demo_cancellation;
pub use eval::{evaluate, EvalError, EvalErrorKind, EvalOutcome};
pub use expr::{parse_expr, BinOp, Expr, ExprKind, SyntaxError};
pub use repl::{repl_session, LineOutcome, Session};
