use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::scalars::{rat, Poly, Rational};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..4).prop_map(Poly::new)
}

fn shift_op() -> impl Strategy<Value = ShiftOp> {
    prop::collection::vec((-2i64..=2, poly()), 0..4).prop_map(ShiftOp::from_terms)
}

fn weyl_op(rank: usize) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..3, rank),
            prop::collection::vec(0u32..3, rank),
            small_rat(),
        ),
        0..4,
    )
    .prop_map(move |terms| {
        let mut w = WeylOp::zero(rank);
        for (a, b, c) in terms {
            w.add_term((a, b), c);
        }
        w
    })
}

fn laurent_op() -> impl Strategy<Value = LaurentWeylOp> {
    prop::collection::vec((-2i64..=2, 0u32..3, small_rat()), 0..4).prop_map(|terms| {
        let mut w = LaurentWeylOp::zero();
        for (a, b, c) in terms {
            w.add_term(a, b, c);
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn shift_associative(a in shift_op(), b in shift_op(), c in shift_op()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn weyl_associative(a in weyl_op(1), b in weyl_op(1), c in weyl_op(1)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn fourier_squared_is_antipode(w in weyl_op(2)) {
        prop_assert_eq!(fourier_auto(&fourier_auto(&w)), antipode(&w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_product_matches_action(a in shift_op(), b in shift_op(), m in -5i64..=5) {
        let ab = &a * &b;
        let mut composed: BTreeMap<i64, Rational> = BTreeMap::new();
        for (k, v) in b.act_on_monomial(m) {
            for (k2, v2) in a.act_on_monomial(k) {
                *composed.entry(k2).or_default() += &v * v2;
            }
        }
        composed.retain(|_, v| *v != Rational::default());
        prop_assert_eq!(ab.act_on_monomial(m), composed);
    }

    #[test]
    fn weyl_rank2_associative(a in weyl_op(2), b in weyl_op(2), c in weyl_op(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mellin_round_trip(w in laurent_op(), sh in shift_op()) {
        prop_assert_eq!(inverse_mellin_op(&mellin_op(&w)), w);
        prop_assert_eq!(mellin_op(&inverse_mellin_op(&sh)), sh);
    }

    #[test]
    fn mellin_is_multiplicative(a in laurent_op(), b in laurent_op()) {
        prop_assert_eq!(mellin_op(&(&a * &b)), &mellin_op(&a) * &mellin_op(&b));
    }

    #[test]
    fn fourier_is_multiplicative(a in weyl_op(1), b in weyl_op(1)) {
        prop_assert_eq!(fourier_auto(&(&a * &b)), &fourier_auto(&a) * &fourier_auto(&b));
    }

    #[test]
    fn inversion_twist_is_multiplicative_involution(a in shift_op(), b in shift_op()) {
        for order in [InversionOrder::InvertThenNegate, InversionOrder::NegateThenInvert] {
            let tw = |x: &ShiftOp| inversion_twist_with(x, order);
            prop_assert_eq!(tw(&(&a * &b)), &tw(&a) * &tw(&b));
            prop_assert_eq!(tw(&tw(&a)), a.clone());
        }
    }

    #[test]
    fn reduction_is_a_class_invariant(a in shift_op(), g in shift_op(), h in shift_op()) {
        prop_assume!(!g.is_zero());
        let pres = CyclicPresentation::shift(g.clone());
        let lhs = right_reduce(&OreOperator::Shift(a.clone()), &pres).unwrap();
        let rhs = right_reduce(&OreOperator::Shift(&a + &(&g * &h)), &pres).unwrap();
        prop_assert_eq!(lhs.clone(), rhs);
        // idempotent
        prop_assert_eq!(right_reduce(&lhs, &pres).unwrap(), lhs);
    }

    #[test]
    fn weyl_reduction_is_a_class_invariant(
        a in weyl_op(1), h in weyl_op(1), alpha in small_rat(), beta in small_rat(), use_d in any::<bool>()
    ) {
        prop_assume!(beta != Rational::default());
        let gen = if use_d { WeylOp::d(1, 0) } else { WeylOp::x(1, 0) };
        let g = &WeylOp::constant(1, alpha) + &gen.scale(&beta);
        let pres = CyclicPresentation::weyl(g.clone());
        let lhs = right_reduce(&OreOperator::Weyl(a.clone()), &pres).unwrap();
        let rhs = right_reduce(&OreOperator::Weyl(&a + &(&g * &h)), &pres).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
