//! Randomized comparison of `noz` arithmetic against the exact oracle.

use std::fmt;

use rand::Rng;

use noz::{Context, DecimalFloat, Rounding};

use crate::{rat_add, rat_div, rat_mul, rat_round, rat_sub, to_rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Add, Op::Sub, Op::Mul, Op::Div];
}

/// One arithmetic case: operands in canonical text form.
#[derive(Debug, Clone)]
pub struct Case {
    pub a: String,
    pub b: String,
    pub op: Op,
    pub precision: u32,
}

/// A disagreement between `noz` and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub case: String,
    pub got: String,
    pub expected: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: got {}, expected {}",
            self.case, self.got, self.expected
        )
    }
}

/// A random decimal with up to `max_digits` significand digits.
///
/// Exponents are mostly small so that operands overlap; one draw in eight
/// uses a wide exponent range so that one operand is absorbed by the other.
pub fn random_decimal<R: Rng + ?Sized>(rng: &mut R, max_digits: usize) -> String {
    if rng.gen_ratio(1, 40) {
        return "0E0".to_string();
    }
    let len = rng.gen_range(1..=max_digits);
    let mut s = String::with_capacity(len + 12);
    if rng.gen_bool(0.5) {
        s.push('-');
    }
    s.push(char::from(b'0' + rng.gen_range(1..=9u8)));
    for _ in 1..len {
        // runs of 0 and 9 make carries and exact ties more likely
        let d = match rng.gen_range(0..10) {
            0..=1 => 0,
            2..=3 => 9,
            4 => 5,
            _ => rng.gen_range(0..=9u8),
        };
        s.push(char::from(b'0' + d));
    }
    let exponent: i32 = if rng.gen_ratio(1, 8) {
        rng.gen_range(-400..=400)
    } else {
        rng.gen_range(-12..=12)
    };
    format!("{}E{}", s, exponent - (len as i32 - 1))
}

pub fn random_case<R: Rng + ?Sized>(rng: &mut R) -> Case {
    let op = Op::ALL[rng.gen_range(0..4)];
    let a = random_decimal(rng, 50);
    let mut b = random_decimal(rng, 50);
    if op == Op::Div {
        while b == "0E0" {
            b = random_decimal(rng, 50);
        }
    }
    // half the draws concentrate on precisions that force rounding
    let precision = if rng.gen_bool(0.5) {
        rng.gen_range(1..=200)
    } else {
        rng.gen_range(1..=60)
    };
    Case {
        a,
        b,
        op,
        precision,
    }
}

/// Runs `case` through `noz` with limb width `LB` and through the oracle,
/// returning the `noz` result when they agree.
pub fn check_case<const LB: usize>(
    case: &Case,
    mode: Rounding,
) -> Result<DecimalFloat<LB>, Mismatch> {
    let describe = || {
        format!(
            "{:?}({}, {}) at P={} {} (LB={})",
            case.op, case.a, case.b, case.precision, mode, LB
        )
    };
    let a: DecimalFloat<LB> = case.a.parse().expect("generated operand parses");
    let b: DecimalFloat<LB> = case.b.parse().expect("generated operand parses");
    let ctx = Context::with_rounding(case.precision, mode).expect("precision in range");
    let got = match case.op {
        Op::Add => a.add(&b, &ctx),
        Op::Sub => a.sub(&b, &ctx),
        Op::Mul => a.mul(&b, &ctx),
        Op::Div => a.div(&b, &ctx),
    };
    let (ra, rb) = (to_rational(&a), to_rational(&b));
    let exact = match case.op {
        Op::Add => Some(rat_add(&ra, &rb)),
        Op::Sub => Some(rat_sub(&ra, &rb)),
        Op::Mul => Some(rat_mul(&ra, &rb)),
        Op::Div => rat_div(&ra, &rb).ok(),
    };
    let expected = exact.map(|q| rat_round::<LB>(&q, case.precision, mode));
    let show = |r: &noz::Result<DecimalFloat<LB>>| match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {}", e),
    };
    match (got, expected) {
        (Ok(g), Some(Ok(e))) if g == e => Ok(g),
        (got, Some(expected)) => Err(Mismatch {
            case: describe(),
            got: show(&got),
            expected: show(&expected),
        }),
        (got, None) => Err(Mismatch {
            case: describe(),
            got: show(&got),
            expected: "division by zero".to_string(),
        }),
    }
}
