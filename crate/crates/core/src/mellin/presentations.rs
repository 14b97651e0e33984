//! Checks on presentations: Mellin images, the `k(s)` embedding of `𝔅`,
//! the torsion test and the Weyl-side Fourier transform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::canonical::{
    b_module, b_relation, b_weyl, e_relation, exp_module, fourier_b_monodromic, fourier_presentation, mellin_module,
};
use super::equivariant::{monodromic_test, torsion_by_saturation, EquivariantModule};
use super::lattice::embed_in_ks;
use super::twisted::TwistedModel;
use crate::error::{Error, Result};
use crate::ore::{antipode, fourier_auto, CyclicPresentation, WeylOp};
use crate::scalars::{rat, Poly, PolyMatrix, RatFun, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BEmbedWitness {
    pub passed: bool,
    pub radius: i64,
    pub b_relation: String,
    pub e_relation: String,
    pub mellin_symbols_exact: bool,
    pub accepted: bool,
    pub generators: Vec<String>,
    pub window_generated: bool,
    pub shifted_image: String,
    pub control_rejected: bool,
    pub control_error: String,
}

fn reciprocal(i: i64) -> RatFun {
    RatFun::new(Poly::one(), Poly::from_ints(&[i, 1]))
}

/// Mellin images of `B` and `exp`, and `𝟏 ↦ 1/(s+1)` as a morphism
/// `𝔅 → k(s)` whose lattice contains every `1/(s+i)` in the window.
pub fn b_embed_check(radius: i64) -> Result<BEmbedWitness> {
    let b = mellin_module(&b_weyl())?;
    let e = mellin_module(&exp_module())?;
    let mellin_symbols_exact = b.single_relation().and_then(|r| r.as_shift()) == Some(&b_relation())
        && e.single_relation().and_then(|r| r.as_shift()) == Some(&e_relation());
    let image = reciprocal(1);
    let lattice = embed_in_ks(&b_module(), &image, radius);
    let (accepted, generators, window_generated) = match &lattice {
        Ok(l) => (
            true,
            l.generators().iter().map(|g| format!("{} = {}", g.label, g.value)).collect(),
            (-radius..=radius).all(|i| l.contains(&reciprocal(i))),
        ),
        Err(_) => (false, Vec::new(), false),
    };
    let shifted = TwistedModel::plain().translate(&image, -1);
    let control = embed_in_ks(&b_module(), &RatFun::one(), radius);
    let control_rejected = matches!(control, Err(Error::NotAMorphism(_)));
    Ok(BEmbedWitness {
        passed: mellin_symbols_exact && accepted && window_generated && shifted == reciprocal(0) && control_rejected,
        radius,
        b_relation: b.to_string(),
        e_relation: e.to_string(),
        mellin_symbols_exact,
        accepted,
        generators,
        window_generated,
        shifted_image: shifted.to_string(),
        control_rejected,
        control_error: control.err().map(|e| e.to_string()).unwrap_or_default(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonTestWitness {
    pub passed: bool,
    pub samples: usize,
    pub torsion: usize,
    pub disagreements: Vec<String>,
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    if rng.gen_bool(0.25) {
        return Poly::zero();
    }
    let deg = rng.gen_range(0..=2);
    Poly::new((0..=deg).map(|_| rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect())
}

/// Up to two generators and two relations, no shift data.
pub fn random_presentation(rng: &mut ChaCha8Rng) -> EquivariantModule {
    let rows = rng.gen_range(1..=2);
    let cols = rng.gen_range(0..=2);
    let data = (0..rows).map(|_| (0..cols).map(|_| random_poly(rng)).collect()).collect();
    let labels = (0..rows).map(|k| format!("e{k}")).collect();
    EquivariantModule::new(PolyMatrix::from_rows(data), labels, vec![None; rows], vec![None; rows])
        .expect("consistent sizes")
}

/// `monodromic_test` (Smith form) against the saturation oracle.
pub fn mon_test_agreement(samples: usize, seed: u64) -> MonTestWitness {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fixed = vec![
        EquivariantModule::cyclic(Poly::from_ints(&[0, 1])),
        EquivariantModule::free(1),
        EquivariantModule::principal_parts(&rat(1, 2), 2, 2),
    ];
    fixed.extend((0..samples).map(|_| random_presentation(&mut rng)));
    let mut torsion = 0;
    let mut disagreements = Vec::new();
    for m in &fixed {
        let a = monodromic_test(m);
        torsion += usize::from(a);
        if a != torsion_by_saturation(m) {
            disagreements.push(m.presentation().to_string());
        }
    }
    let expected_fixed = [true, false, true];
    let fixed_ok = fixed.iter().zip(expected_fixed).all(|(m, e)| monodromic_test(m) == e);
    MonTestWitness { passed: fixed_ok && disagreements.is_empty(), samples: fixed.len(), torsion, disagreements }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierAntipodeWitness {
    pub passed: bool,
    pub samples: usize,
    pub rank: usize,
    pub failures: Vec<String>,
    pub preserves_relation: bool,
}

pub fn random_weyl(rank: usize, rng: &mut ChaCha8Rng) -> WeylOp {
    let mut w = WeylOp::zero(rank);
    for _ in 0..rng.gen_range(0..=4) {
        let a = (0..rank).map(|_| rng.gen_range(0..3)).collect();
        let b = (0..rank).map(|_| rng.gen_range(0..3)).collect();
        w.add_term((a, b), rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
    }
    w
}

/// `F(F(w))` against `w(-x, -∂)` on random operators, and `F(∂x - x∂ - 1) = 0`.
pub fn fourier_antipode_check(samples: usize, rank: usize, seed: u64) -> FourierAntipodeWitness {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let w = random_weyl(rank, &mut rng);
        if fourier_auto(&fourier_auto(&w)) != antipode(&w) {
            failures.push(w.to_string());
        }
    }
    let (x, d) = (WeylOp::x(1, 0), WeylOp::d(1, 0));
    let relation = &(&(&d * &x) - &(&x * &d)) - &WeylOp::one(1);
    let preserves_relation = fourier_auto(&relation).is_zero();
    FourierAntipodeWitness { passed: failures.is_empty() && preserves_relation, samples, rank, failures, preserves_relation }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FbFlCase {
    pub input: String,
    pub monodromic: bool,
    pub output: Option<String>,
    pub expected_monodromic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FbFlWitness {
    pub passed: bool,
    pub radius: i64,
    pub cases: Vec<FbFlCase>,
}

/// The two Fourier transforms agree on monodromic modules; the transform is
/// only returned when the Mellin image is torsion.
pub fn fb_fl_check(chi: &Rational, radius: i64) -> Result<FbFlWitness> {
    let (x, d) = (WeylOp::x(1, 0), WeylOp::d(1, 0));
    let inputs = vec![
        (&x - &WeylOp::one(1), false),
        (&(&x * &d) - &WeylOp::constant(1, chi.clone()), true),
        (WeylOp::one(1), true),
        // restricts to zero on G_m
        (x.clone(), true),
    ];
    let mut cases = Vec::new();
    let mut passed = true;
    for (w, expected) in inputs {
        let pres = CyclicPresentation::weyl(w.clone());
        let out = match fourier_b_monodromic(&pres, radius) {
            Ok(p) => Some(p),
            Err(Error::Precondition(_)) => None,
            Err(e) => return Err(e),
        };
        if let Some(p) = &out {
            passed &= *p == fourier_presentation(&pres)?;
        }
        passed &= out.is_some() == expected;
        cases.push(FbFlCase {
            input: w.to_string(),
            monodromic: out.is_some(),
            output: out.map(|p| p.to_string()),
            expected_monodromic: expected,
        });
    }
    Ok(FbFlWitness { passed, radius, cases })
}
