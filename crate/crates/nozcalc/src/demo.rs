//! Side-by-side evaluation of an expression that loses everything to
//! cancellation at low precision.

use std::io::{self, Write};

use noz::functions::SeriesPolicy;
use noz::Context;

use crate::eval::evaluate;
use crate::expr::parse_expr;

pub const DEMO_EXPRESSION: &str = "(1 + 1E-8) - 1";

const EXPLANATIONS: [(u32, &str); 2] = [
    (
        4,
        "1 + 1E-8 needs 9 digits; at 4 it rounds to 1E0 and the subtraction leaves nothing.",
    ),
    (
        50,
        "1 + 1E-8 fits in 50 digits, so the subtraction returns the small term exactly.",
    ),
];

/// Writes the demonstration. The text depends on nothing but the library,
/// so repeated runs are byte-identical.
pub fn demo_cancellation<W: Write>(out: &mut W) -> io::Result<()> {
    let expr = parse_expr(DEMO_EXPRESSION).expect("demo expression parses");
    writeln!(out, "Cancellation: {}", DEMO_EXPRESSION)?;
    for (precision, why) in EXPLANATIONS {
        let ctx = Context::new(precision).expect("valid precision");
        let value = evaluate(&expr, &ctx, &SeriesPolicy::default())
            .expect("demo expression evaluates")
            .rendered;
        writeln!(out, "  precision {:>2}: {}", precision, value)?;
        writeln!(out, "    {}", why)?;
    }
    out.flush()
}
