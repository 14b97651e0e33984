//! The named cyclic modules and the transforms acting on presentations.

use num_traits::Zero;

use super::equivariant::{monodromic_test, EquivariantModule};
use crate::error::{Error, Result};
use crate::ore::{
    fourier_auto, inversion_twist, mellin_op, Algebra, CyclicPresentation, LaurentWeylOp, OreOperator,
    ShiftOp, WeylOp,
};
use crate::scalars::{Poly, Rational};

/// `k[x,∂]/∂(x-1)k[x,∂]`.
pub fn b_weyl() -> CyclicPresentation {
    let x = WeylOp::x(1, 0);
    let d = WeylOp::d(1, 0);
    CyclicPresentation::weyl(&d * &(&x - &WeylOp::one(1)))
}

/// `k[x,∂]/(1-∂)k[x,∂]`.
pub fn exp_module() -> CyclicPresentation {
    CyclicPresentation::weyl(&WeylOp::one(1) - &WeylOp::d(1, 0))
}

/// `D/((s+1) - T^-1 s)D`.
pub fn b_module() -> CyclicPresentation {
    CyclicPresentation::shift(b_relation())
}

pub fn b_relation() -> ShiftOp {
    &(&ShiftOp::s() + &ShiftOp::one()) - &(&ShiftOp::t_inv() * &ShiftOp::s())
}

/// `D/(1 - T^-1 s)D`.
pub fn e_module() -> CyclicPresentation {
    CyclicPresentation::shift(e_relation())
}

pub fn e_relation() -> ShiftOp {
    &ShiftOp::one() - &(&ShiftOp::t_inv() * &ShiftOp::s())
}

/// Pullback of `E` along `λ ↦ -1/λ`.
pub fn inverted_e_module() -> CyclicPresentation {
    CyclicPresentation::shift(inversion_twist(&e_relation()))
}

/// Relations mapped by `x ↦ T`, `x∂ ↦ s`. Accepts rank-1 Weyl or Laurent
/// presentations; polynomial operators restrict to `G_m` first.
pub fn mellin_module(m: &CyclicPresentation) -> Result<CyclicPresentation> {
    let mut rels = Vec::new();
    for r in m.relations() {
        let laurent = match r {
            OreOperator::Laurent(l) => l.clone(),
            OreOperator::Weyl(w) => LaurentWeylOp::from_weyl(w)?,
            OreOperator::Shift(_) => {
                return Err(Error::ParameterMismatch("presentation is already over the shift algebra".into()))
            }
        };
        rels.push(OreOperator::Shift(mellin_op(&laurent)));
    }
    CyclicPresentation::new(Algebra::Shift, rels)
}

/// Scale so the smallest monomial has coefficient 1.
pub fn normalize_weyl(w: &WeylOp) -> WeylOp {
    match w.terms().values().next() {
        Some(c) if !c.is_zero() => w.scale(&c.recip()),
        _ => w.clone(),
    }
}

/// Relations mapped by `x_i ↦ -∂_i`, `∂_i ↦ x_i`, then normalised.
pub fn fourier_presentation(m: &CyclicPresentation) -> Result<CyclicPresentation> {
    let Algebra::Weyl(_) = m.algebra() else {
        return Err(Error::ParameterMismatch(format!(
            "Fourier transform needs a Weyl presentation, got {}",
            m.algebra()
        )));
    };
    let rels = m
        .relations()
        .iter()
        .map(|r| OreOperator::Weyl(normalize_weyl(&fourier_auto(r.as_weyl().expect("Weyl relation")))))
        .collect();
    CyclicPresentation::new(m.algebra(), rels)
}

/// The windowed equivariant module of a shift presentation: one block of
/// translated relations per relation.
pub fn windowed_module(m: &CyclicPresentation, radius: i64) -> Result<EquivariantModule> {
    let blocks: Vec<EquivariantModule> = m
        .relations()
        .iter()
        .map(|r| {
            r.as_shift()
                .map(|g| EquivariantModule::windowed_shift_module(g, radius))
                .ok_or_else(|| Error::ParameterMismatch("expected shift relations".into()))
        })
        .collect::<Result<_>>()?;
    let Some(first) = blocks.first() else {
        return Ok(EquivariantModule::windowed_shift_module(&ShiftOp::zero(), radius));
    };
    let mut pres = first.presentation().clone();
    for b in &blocks[1..] {
        pres = pres.hcat(b.presentation());
    }
    let base = EquivariantModule::windowed_shift_module(&ShiftOp::zero(), radius);
    let g = base.generator_count();
    let tau = (0..g).map(|k| base.apply_tau(&unit(g, k))).collect();
    let tau_inv = (0..g).map(|k| base.apply_tau_inv(&unit(g, k))).collect();
    Ok(EquivariantModule::new(pres, base.labels().to_vec(), tau, tau_inv)?
        .with_window(Rational::zero(), radius))
}

fn unit(g: usize, k: usize) -> Vec<Poly> {
    let mut v = vec![Poly::zero(); g];
    v[k] = Poly::one();
    v
}

/// Fourier transform licensed by monodromicity of the Mellin image.
pub fn fourier_b_monodromic(m: &CyclicPresentation, radius: i64) -> Result<CyclicPresentation> {
    if m.algebra() != Algebra::Weyl(1) {
        return Err(Error::ParameterMismatch("expected a rank-1 Weyl presentation".into()));
    }
    let image = mellin_module(m)?;
    let module = windowed_module(&image, radius)?;
    if !monodromic_test(&module) {
        return Err(Error::Precondition(format!(
            "Mellin image {image} is not torsion over k[s]; the module is not monodromic"
        )));
    }
    fourier_presentation(m)
}
