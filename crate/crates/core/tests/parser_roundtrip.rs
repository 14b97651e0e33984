use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use monodromic::cli::parse_operator;
use monodromic::error::Error;
use monodromic::ore::{Algebra, LaurentWeylOp, OreOperator, ShiftOp, WeylOp};
use monodromic::scalars::{rat, Poly};

/// Operators that appear when working with the modules `B`, `E`, `L`, `𝔅`.
const LITERALS: &[(&str, Algebra)] = &[
    ("(s+1) - Ti*s", Algebra::Shift),
    ("1 - Ti*s", Algebra::Shift),
    ("1 - T*s", Algebra::Shift),
    ("T - 1", Algebra::Shift),
    ("s - 1/2", Algebra::Shift),
    ("Ti^3*(s-2)*(s-1)*s", Algebra::Shift),
    ("T*Ti", Algebra::Shift),
    ("s*T - T*(s+1)", Algebra::Shift),
    ("dx*(x-1)", Algebra::Weyl(1)),
    ("1 - dx", Algebra::Weyl(1)),
    ("1 - x", Algebra::Weyl(1)),
    ("x", Algebra::Weyl(1)),
    ("dx", Algebra::Weyl(1)),
    ("x*dx - 1/3", Algebra::Weyl(1)),
    ("dx*x - x*dx - 1", Algebra::Weyl(1)),
    ("x1*dx1 + x2*dx2", Algebra::Weyl(2)),
    ("x^-1*(x*dx)", Algebra::LaurentWeyl),
    ("x*dx*x^-1", Algebra::LaurentWeyl),
    ("x^-1 - 1", Algebra::LaurentWeyl),
];

fn coeff(rng: &mut ChaCha8Rng) -> monodromic::scalars::Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_op(rng: &mut ChaCha8Rng) -> OreOperator {
    match rng.gen_range(0..4) {
        0 => {
            let mut op = ShiftOp::zero();
            for _ in 0..rng.gen_range(0..5) {
                let p = Poly::new((0..rng.gen_range(1..4)).map(|_| coeff(rng)).collect());
                op.add_term(rng.gen_range(-3..=3), &p);
            }
            OreOperator::Shift(op)
        }
        k @ (1 | 2) => {
            let mut op = WeylOp::zero(k);
            for _ in 0..rng.gen_range(0..5) {
                let a = (0..k).map(|_| rng.gen_range(0..4)).collect();
                let b = (0..k).map(|_| rng.gen_range(0..4)).collect();
                op.add_term((a, b), coeff(rng));
            }
            OreOperator::Weyl(op)
        }
        _ => {
            let mut op = LaurentWeylOp::zero();
            for _ in 0..rng.gen_range(0..5) {
                op.add_term(rng.gen_range(-3..=3), rng.gen_range(0..4), coeff(rng));
            }
            OreOperator::Laurent(op)
        }
    }
}

#[test]
fn parse_print_parse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut corpus: Vec<OreOperator> =
        LITERALS.iter().map(|(t, a)| parse_operator(t, *a).unwrap_or_else(|e| panic!("{t}: {e}"))).collect();
    while corpus.len() < 200 {
        corpus.push(random_op(&mut rng));
    }
    for op in &corpus {
        let printed = op.to_string();
        let again = parse_operator(&printed, op.algebra()).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(&again, op, "{printed}");
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn whitespace_is_insignificant() {
    let a = parse_operator("(s+1)-Ti*s", Algebra::Shift).unwrap();
    let b = parse_operator("  ( s + 1 )  -  Ti * s ", Algebra::Shift).unwrap();
    assert_eq!(a, b);
}

#[test]
fn error_positions() {
    assert_eq!(
        parse_operator("s + +", Algebra::Shift),
        Err(Error::Syntax { offset: 4, message: "unexpected `+`".into() })
    );
    assert!(matches!(parse_operator("dx*T", Algebra::Weyl(1)), Err(Error::UnknownAtom { offset: 3, .. })));
    assert!(matches!(parse_operator("s*dx", Algebra::Shift), Err(Error::UnknownAtom { offset: 2, .. })));
    assert!(matches!(parse_operator("(s", Algebra::Shift), Err(Error::Syntax { offset: 2, .. })));
}
