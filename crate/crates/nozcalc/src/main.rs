use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Parser};

use noz::functions::SeriesPolicy;
use noz::{Context, Rounding};
use nozcalc::{demo_cancellation, evaluate, parse_expr, repl_session};

const EVAL_ERROR: u8 = 1;
const USAGE_ERROR: u8 = 2;

/// Arbitrary-precision decimal calculator.
#[derive(Debug, Parser)]
#[command(name = "nozcalc", version)]
#[command(group(ArgGroup::new("action").required(true).args(["eval", "repl", "demo_cancellation"])))]
struct Args {
    /// Significant digits kept by every operation.
    #[arg(long, short, default_value_t = 100)]
    precision: u64,

    /// half-even, half-up, toward-zero, up or down.
    #[arg(long, short, default_value_t = Rounding::HalfEven)]
    mode: Rounding,

    /// Evaluate an expression and print the result; may be repeated.
    #[arg(long, short, value_name = "EXPR", allow_hyphen_values = true)]
    eval: Vec<String>,

    /// Read expressions and directives (:prec N, :mode NAME, :quit) from stdin.
    #[arg(long)]
    repl: bool,

    /// Show how precision 4 loses a small term that precision 50 keeps.
    #[arg(long)]
    demo_cancellation: bool,

    /// Sum exactly this many series terms per function call.
    #[arg(long, value_name = "N")]
    fixed_terms: Option<usize>,

    /// Upper bound on series terms.
    #[arg(long, value_name = "N", default_value_t = SeriesPolicy::DEFAULT_MAX_TERMS)]
    max_terms: usize,

    /// Extra working digits for series (default depends on --max-terms).
    #[arg(long, value_name = "N")]
    guard_digits: Option<u32>,
}

fn policy(args: &Args) -> noz::Result<SeriesPolicy> {
    let mut policy = SeriesPolicy::new(args.max_terms)?;
    if let Some(g) = args.guard_digits {
        policy = policy.with_guard_digits(g)?;
    }
    if let Some(n) = args.fixed_terms {
        policy = policy.with_fixed_terms(n)?;
    }
    Ok(policy)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(USAGE_ERROR)
}

fn run_eval(exprs: &[String], ctx: &Context, policy: &SeriesPolicy) -> ExitCode {
    let mut parsed = Vec::with_capacity(exprs.len());
    for text in exprs {
        match parse_expr(text) {
            Ok(e) => parsed.push(e),
            Err(e) => return usage(e),
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for e in &parsed {
        match evaluate(e, ctx, policy) {
            Ok(outcome) => {
                for note in &outcome.diagnostics {
                    eprintln!("note: {}", note);
                }
                if let Err(err) = writeln!(out, "{}", outcome.rendered).and_then(|_| out.flush()) {
                    eprintln!("error: {}", err);
                    return ExitCode::from(EVAL_ERROR);
                }
            }
            Err(err) => {
                eprintln!("error: {}", err);
                return ExitCode::from(EVAL_ERROR);
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let args = Args::parse();
    let ctx = match Context::from_u64(args.precision, args.mode) {
        Ok(ctx) => ctx,
        Err(e) => return usage(e),
    };
    let policy = match policy(&args) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    if args.demo_cancellation {
        return match demo_cancellation(&mut io::stdout().lock()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {}", e);
                ExitCode::from(EVAL_ERROR)
            }
        };
    }
    if args.repl {
        let stdin = io::stdin();
        if stdin.is_terminal() {
            eprintln!(
                "nozcalc: precision {}, rounding {}; :quit to exit",
                ctx.precision(),
                ctx.rounding()
            );
        }
        let status = repl_session(
            stdin.lock(),
            &mut io::stdout().lock(),
            &mut io::stderr().lock(),
            ctx,
            policy,
        );
        return ExitCode::from(status as u8);
    }
    run_eval(&args.eval, &ctx, &policy)
}
