//! Random expression trees rendered with minimal parentheses, parsed back
//! and evaluated, against the same tree evaluated on exact rationals with
//! one rounding per node.

use std::process::Command;

use noz::functions::SeriesPolicy;
use noz::{Context, DecimalFloat, Rounding};
use noz_oracle::{
    factorial_exact, rat_add, rat_div, rat_mul, rat_round, rat_sub, to_rational, Rational,
};
use nozcalc::{evaluate, parse_expr};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const PRECISION: u32 = 60;
const MAX_DEPTH: usize = 6;

#[derive(Debug, Clone)]
enum Tree {
    Int(u32),
    Neg(Box<Tree>),
    Bin(char, Box<Tree>, Box<Tree>),
    Fact(u32),
}

// binding strength: + - < * / < unary minus < postfix < literal
fn level(t: &Tree) -> u8 {
    match t {
        Tree::Bin('+' | '-', ..) => 1,
        Tree::Bin(..) => 2,
        Tree::Neg(_) => 3,
        Tree::Fact(_) => 4,
        Tree::Int(_) => 5,
    }
}

fn gen(rng: &mut StdRng, depth: usize) -> Tree {
    if depth <= 1 || rng.gen_ratio(1, 4) {
        return if rng.gen_ratio(1, 8) {
            Tree::Fact(rng.gen_range(0..=12))
        } else {
            Tree::Int(rng.gen_range(0..=20))
        };
    }
    if rng.gen_ratio(1, 8) {
        return Tree::Neg(Box::new(gen(rng, depth - 1)));
    }
    let op = ['+', '-', '*', '/'][rng.gen_range(0..4)];
    Tree::Bin(
        op,
        Box::new(gen(rng, depth - 1)),
        Box::new(gen(rng, depth - 1)),
    )
}

fn space(rng: &mut StdRng) -> &'static str {
    if rng.gen_ratio(1, 3) {
        " "
    } else {
        ""
    }
}

fn render(t: &Tree, rng: &mut StdRng) -> String {
    let wrap = |s: String, needed: bool| if needed { format!("({})", s) } else { s };
    match t {
        Tree::Int(n) => n.to_string(),
        Tree::Fact(n) => format!("{}!", n),
        Tree::Neg(inner) => {
            let s = render(inner, rng);
            format!("-{}", wrap(s, level(inner) < 3))
        }
        Tree::Bin(op, l, r) => {
            let own = level(t);
            let (ls, rs) = (render(l, rng), render(r, rng));
            let (a, b) = (space(rng), space(rng));
            format!(
                "{}{}{}{}{}",
                wrap(ls, level(l) < own),
                a,
                op,
                b,
                wrap(rs, level(r) <= own)
            )
        }
    }
}

/// Oracle evaluation: exact operations, each result rounded once to the
/// precision. `None` when a divisor is zero.
fn oracle(t: &Tree) -> Option<Rational> {
    let round = |q: Rational| -> Rational {
        to_rational(&rat_round::<9>(&q, PRECISION, Rounding::HalfEven).unwrap())
    };
    Some(match t {
        Tree::Int(n) => Rational::from_integer(*n),
        Tree::Fact(n) => round(Rational::from_integer(BigInt::from(factorial_exact(*n)))),
        Tree::Neg(inner) => rat_sub(&Rational::zero(), &oracle(inner)?),
        Tree::Bin(op, l, r) => {
            let (a, b) = (oracle(l)?, oracle(r)?);
            round(match op {
                '+' => rat_add(&a, &b),
                '-' => rat_sub(&a, &b),
                '*' => rat_mul(&a, &b),
                _ => rat_div(&a, &b).ok()?,
            })
        }
    })
}

fn cases(seed: u64, count: usize) -> Vec<(String, DecimalFloat)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let depth = rng.gen_range(1..=MAX_DEPTH);
        let tree = gen(&mut rng, depth);
        let Some(value) = oracle(&tree) else { continue };
        let expected = rat_round(&value, PRECISION, Rounding::HalfEven).unwrap();
        out.push((render(&tree, &mut rng), expected));
    }
    out
}

#[test]
fn library_matches_oracle_on_random_trees() {
    let ctx = Context::new(PRECISION).unwrap();
    let policy = SeriesPolicy::default();
    for (text, expected) in cases(2024, 1000) {
        let e = parse_expr(&text).unwrap_or_else(|err| panic!("{}: {}", text, err));
        assert!(e.depth() <= 2 * MAX_DEPTH);
        let got = evaluate(&e, &ctx, &policy).unwrap_or_else(|err| panic!("{}: {}", text, err));
        assert_eq!(got.value, expected, "{} parsed as {}", text, e);
    }
}

#[test]
fn binary_matches_oracle_on_random_trees() {
    for (text, expected) in cases(99, 40) {
        let o = Command::new(env!("CARGO_BIN_EXE_nozcalc"))
            .args(["--precision", "60", "--eval", &text])
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", text);
        assert_eq!(
            String::from_utf8(o.stdout).unwrap(),
            format!("{}\n", expected),
            "{}",
            text
        );
    }
}

#[test]
fn parsing_is_deterministic() {
    for (text, _) in cases(5, 200) {
        assert_eq!(parse_expr(&text).unwrap(), parse_expr(&text).unwrap());
    }
}
