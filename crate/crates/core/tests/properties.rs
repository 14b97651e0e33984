use proptest::prelude::*;

use monodromic::groupalg::GroupAlgebraElem;
use monodromic::mellin::{embed_in_ks, b_module, e_module, EquivariantModule, SkyscraperFamily};
use monodromic::scalars::residue::ResidueRing;
use monodromic::scalars::{int, rat, FiniteField, Poly, RatFun, Rational};
use monodromic::trace::{conv_gm, four_b, four_b_dual, t_jb, FqSpace, Pairing, TraceFunction, TwistShift};

fn point() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(int(0)), Just(int(1)), Just(int(-1)), Just(rat(1, 2))]
}

/// `Π (s - a_i)^{e_i}` for up to three factors.
fn torsion_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((point(), 1u32..=3), 1..=3).prop_map(|factors| {
        factors.into_iter().fold(Poly::one(), |acc, (a, e)| {
            let lin = Poly::new(vec![-a, int(1)]);
            (0..e).fold(acc, |p, _| &p * &lin)
        })
    })
}

fn module() -> impl Strategy<Value = EquivariantModule> {
    prop_oneof![
        torsion_poly().prop_map(EquivariantModule::cyclic),
        Just(EquivariantModule::free(1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fiber_of_tensor_is_tensor_of_fibers(m1 in module(), m2 in module(), a in point(), n in 1u32..=3) {
        let lhs = m1.tensor(&m2).unwrap().fiber(&a, n);
        let rhs = m1.fiber(&a, n).tensor(&m2.fiber(&a, n));
        let nonzero = |v: Vec<u32>| v.into_iter().filter(|&e| e > 0).collect::<Vec<_>>();
        prop_assert_eq!(nonzero(lhs.invariant()), nonzero(rhs.invariant()));
    }

    #[test]
    fn skyscraper_fiber_tensor(chi in prop_oneof![Just(int(0)), Just(rat(1, 2))], n1 in 1u32..=3, n2 in 1u32..=3) {
        let a = SkyscraperFamily::principal_parts(&chi, n1, 3);
        let b = SkyscraperFamily::principal_parts(&chi, n2, 3);
        let t = a.tensor(&b).unwrap();
        for i in -3..=3 {
            let expected = a.fiber(i).unwrap().tensor(b.fiber(i).unwrap());
            prop_assert_eq!(t.fiber(i).unwrap().invariant(), expected.invariant());
        }
    }

    #[test]
    fn embedding_acceptance_is_scale_invariant(num in -4i64..=4, den in 1i64..=3, shift in -3i64..=3) {
        // 1/(s + shift) is killed by (s+1) - T^-1 s exactly when shift = 1
        let image = RatFun::new(Poly::one(), Poly::from_ints(&[shift, 1]));
        let accepted = embed_in_ks(&b_module(), &image, 5).is_ok();
        prop_assert_eq!(accepted, shift == 1);
        if num != 0 {
            let scaled = image.scale(&rat(num, den));
            prop_assert_eq!(embed_in_ks(&b_module(), &scaled, 5).is_ok(), accepted);
        }
        prop_assert!(embed_in_ks(&e_module(), &image, 5).is_err());
    }

    #[test]
    fn fourier_square_identity(q in prop_oneof![Just(2u32), Just(3), Just(4), Just(5)], vals in prop::collection::vec(-5i64..=5, 25)) {
        let field = FiniteField::of_order(q).unwrap();
        let space = FqSpace::new(&field, 2).unwrap();
        let line = FqSpace::line(&field);
        let f = TraceFunction::from_rational_fn(&space, |i| int(vals[i % vals.len()]));
        let p = Pairing::standard(2);
        let lhs = four_b_dual(&four_b(&f, &p).unwrap(), &p).unwrap();
        let rhs = conv_gm(&t_jb(&line), &f).unwrap().twist_shift(&TwistShift::new(-2, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fourier_is_linear(vals in prop::collection::vec(-5i64..=5, 14), c in -3i64..=3) {
        let field = FiniteField::of_order(7).unwrap();
        let line = FqSpace::line(&field);
        let f = TraceFunction::from_rational_fn(&line, |i| int(vals[i]));
        let g = TraceFunction::from_rational_fn(&line, |i| int(vals[i + 7]));
        let p = Pairing::standard(1);
        let lhs = four_b(&f.add(&g.scale_rational(&int(c))).unwrap(), &p).unwrap();
        let rhs = four_b(&f, &p).unwrap().add(&four_b(&g, &p).unwrap().scale_rational(&int(c))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn convolution_commutes_on_gm(vals in prop::collection::vec(-5i64..=5, 10)) {
        let field = FiniteField::of_order(5).unwrap();
        let line = FqSpace::line(&field);
        let on_gm = |off: usize| TraceFunction::from_rational_fn(&line, |i| if i == 0 { int(0) } else { int(vals[i + off]) });
        let (f, g) = (on_gm(0), on_gm(5));
        prop_assert_eq!(conv_gm(&f, &g).unwrap(), conv_gm(&g, &f).unwrap());
    }

    #[test]
    fn twist_shift_scalars_compose(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        let x = TwistShift::new(a, b);
        let y = TwistShift::new(c, d);
        prop_assert_eq!(x.compose(&y).scalar(5), x.scalar(5) * y.scalar(5));
    }

    #[test]
    fn group_algebra_maps_are_ring_maps(
        ell in prop_oneof![Just(2u64), Just(3)],
        r in 1u32..=2,
        n in 1usize..=4,
        k in 1usize..=3,
        xs in prop::collection::vec(0i64..9, 12),
        ys in prop::collection::vec(0i64..9, 12),
    ) {
        let ring = ResidueRing::new(ell, r).unwrap();
        let m = n * k;
        let x = GroupAlgebraElem::new(ring, &xs[..m]).unwrap();
        let y = GroupAlgebraElem::new(ring, &ys[..m]).unwrap();
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.transition(n).unwrap(), x.transition(n).unwrap().mul(&y.transition(n).unwrap()).unwrap());
        prop_assert_eq!(xy.augmentation(), x.augmentation() * y.augmentation() % ring.modulus());
        prop_assert_eq!(x.transition(n).unwrap().augmentation(), x.augmentation());
        // unit status is decided mod ℓ
        let reduced: Vec<i64> = x.coeffs().iter().map(|&c| (c % ell) as i64).collect();
        let base = GroupAlgebraElem::new(ResidueRing::new(ell, 1).unwrap(), &reduced).unwrap();
        prop_assert_eq!(x.is_unit(), base.is_unit());
    }
}

#[test]
fn named_tensor_examples() {
    let i0 = SkyscraperFamily::principal_parts(&int(0), 1, 4);
    let half = SkyscraperFamily::principal_parts(&rat(1, 2), 1, 4);
    assert!(i0.tensor(&half).map_or(true, |t| t.is_zero()));
    let sq = i0.tensor(&i0).unwrap();
    assert!(sq.fibers().iter().all(|f| f.invariant() == vec![1]));
    let s = Poly::from_ints(&[0, 1]);
    let a = EquivariantModule::cyclic(&s * &s);
    let b = EquivariantModule::cyclic(s);
    let t = a.tensor(&b).unwrap();
    assert_eq!(t.fiber(&int(0), 3).invariant(), vec![1]);
}
