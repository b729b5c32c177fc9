//! Line-oriented session with a mutable precision and rounding mode.

use std::io::{self, BufRead, Write};

use noz::functions::SeriesPolicy;
use noz::{Context, Rounding};

use crate::eval::evaluate;
use crate::expr::parse_expr;

/// What a single input line produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineOutcome {
    /// A result line for the output stream, plus notes for the error stream.
    Value {
        rendered: String,
        notes: Vec<String>,
    },
    /// A directive changed the session.
    Updated,
    Error(String),
    Blank,
    Quit,
}

/// Session state: the context and series policy used for every evaluation.
#[derive(Debug, Clone)]
pub struct Session {
    ctx: Context,
    policy: SeriesPolicy,
}

impl Session {
    pub fn new(ctx: Context, policy: SeriesPolicy) -> Self {
        Session { ctx, policy }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn execute(&mut self, line: &str) -> LineOutcome {
        let line = line.trim();
        if line.is_empty() {
            return LineOutcome::Blank;
        }
        if let Some(directive) = line.strip_prefix(':') {
            return self.directive(directive);
        }
        let expr = match parse_expr(line) {
            Ok(e) => e,
            Err(e) => return LineOutcome::Error(e.to_string()),
        };
        match evaluate(&expr, &self.ctx, &self.policy) {
            Ok(out) => LineOutcome::Value {
                rendered: out.rendered,
                notes: out.diagnostics,
            },
            Err(e) => LineOutcome::Error(e.to_string()),
        }
    }

    fn directive(&mut self, directive: &str) -> LineOutcome {
        let mut words = directive.split_whitespace();
        let name = words.next().unwrap_or("");
        let arg = words.next();
        if words.next().is_some() {
            return LineOutcome::Error(format!("too many arguments to :{}", name));
        }
        match (name, arg) {
            ("quit", None) => LineOutcome::Quit,
            ("prec", Some(n)) => {
                let Ok(n) = n.parse::<u64>() else {
                    return LineOutcome::Error(format!("invalid precision `{}`", n));
                };
                match Context::from_u64(n, self.ctx.rounding()) {
                    Ok(ctx) => {
                        self.ctx = ctx;
                        LineOutcome::Updated
                    }
                    Err(e) => LineOutcome::Error(e.to_string()),
                }
            }
            ("mode", Some(m)) => match m.parse::<Rounding>() {
                Ok(mode) => {
                    self.ctx = self.ctx.set_rounding(mode);
                    LineOutcome::Updated
                }
                Err(e) => LineOutcome::Error(e.to_string()),
            },
            ("prec", None) | ("mode", None) => {
                LineOutcome::Error(format!(":{} needs an argument", name))
            }
            _ => LineOutcome::Error(format!(
                "unknown directive `:{}` (expected :prec N, :mode NAME or :quit)",
                directive.trim()
            )),
        }
    }

    /// Reads lines until end of input or `:quit`. Results go to `output`,
    /// errors and notes to `errors`; only stream failures end the session
    /// early.
    pub fn run<R, W, E>(&mut self, input: R, output: &mut W, errors: &mut E) -> io::Result<()>
    where
        R: BufRead,
        W: Write,
        E: Write,
    {
        for line in input.lines() {
            match self.execute(&line?) {
                LineOutcome::Value { rendered, notes } => {
                    for note in notes {
                        writeln!(errors, "note: {}", note)?;
                    }
                    writeln!(output, "{}", rendered)?;
                }
                LineOutcome::Error(msg) => writeln!(errors, "error: {}", msg)?,
                LineOutcome::Updated | LineOutcome::Blank => {}
                LineOutcome::Quit => break,
            }
            output.flush()?;
        }
        output.flush()
    }
}

/// Runs a session over the given streams and returns the process exit
/// status: 0, or 1 if a stream failed.
pub fn repl_session<R, W, E>(
    input: R,
    output: &mut W,
    errors: &mut E,
    ctx: Context,
    policy: SeriesPolicy,
) -> i32
where
    R: BufRead,
    W: Write,
    E: Write,
{
    match Session::new(ctx, policy).run(input, output, errors) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(errors, "error: {}", e);
            1
        }
    }
}
