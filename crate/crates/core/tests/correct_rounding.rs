use noz::{Context, DecimalFloat, Rounding};
use noz_oracle::suite::{check_case, random_case, Case, Op};
use noz_oracle::{rat_round, rat_sub, to_rational};
use rand::SeedableRng;

fn case(op: Op, a: &str, b: &str, precision: u32) -> Case {
    Case {
        a: a.to_string(),
        b: b.to_string(),
        op,
        precision,
    }
}

#[test]
fn randomized_cases_match_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..1500 {
        let c = random_case(&mut rng);
        for mode in Rounding::ALL {
            let nine = check_case::<9>(&c, mode).unwrap_or_else(|m| panic!("{}", m));
            let one = check_case::<1>(&c, mode).unwrap_or_else(|m| panic!("{}", m));
            assert_eq!(nine.to_string(), one.to_string());
        }
    }
}

#[test]
fn ties_in_every_mode() {
    let cases = [
        case(Op::Add, "2", "0.5", 1),
        case(Op::Add, "3", "0.5", 1),
        case(Op::Sub, "-2", "0.5", 1),
        case(Op::Mul, "1.5", "5", 1),
        case(Op::Div, "1", "8", 2),
        case(Op::Div, "-1", "8", 2),
        case(Op::Add, "9.995", "0", 3),
        case(Op::Add, "1E-1000", "1", 3),
        case(Op::Sub, "1E-1000", "1", 3),
        case(Op::Add, "99999999999999999999", "1", 5),
    ];
    for c in &cases {
        for mode in Rounding::ALL {
            check_case::<9>(c, mode).unwrap_or_else(|m| panic!("{}", m));
            check_case::<1>(c, mode).unwrap_or_else(|m| panic!("{}", m));
            check_case::<4>(c, mode).unwrap_or_else(|m| panic!("{}", m));
        }
    }
}

#[test]
fn derived_examples_confirmed_by_oracle() {
    let d = |s: &str| s.parse::<DecimalFloat>().unwrap();
    let exact = |x: &DecimalFloat| to_rational(x);
    // 1 + 1E-8 at four digits
    let q = noz_oracle::rat_add(&exact(&d("1")), &exact(&d("1E-8")));
    let four: DecimalFloat = rat_round(&q, 4, Rounding::HalfEven).unwrap();
    assert_eq!(four.to_string(), "1E0");
    // and the cancellation that follows
    let diff = rat_sub(&exact(&four), &exact(&d("1")));
    assert!(diff.is_zero());
    let twenty: DecimalFloat = rat_round(&q, 20, Rounding::HalfEven).unwrap();
    let diff = rat_sub(&exact(&twenty), &exact(&d("1")));
    let r: DecimalFloat = rat_round(&diff, 20, Rounding::HalfEven).unwrap();
    assert_eq!(r.to_string(), "1E-8");
    // 1.111^2 at four digits
    let sq = noz_oracle::rat_mul(&exact(&d("1.111")), &exact(&d("1.111")));
    let r: DecimalFloat = rat_round(&sq, 4, Rounding::HalfEven).unwrap();
    assert_eq!(r.to_string(), "1.234E0");
    assert_eq!(
        d("1.111")
            .mul(&d("1.111"), &Context::new(4).unwrap())
            .unwrap(),
        r
    );
}
