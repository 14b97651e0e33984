//! Cyclic group algebras `A^0_n = (Z/ℓ^r)[Z/n]`, with `μ_n` identified with
//! `Z/n`, their transition maps `A^0_m → A^0_n` for `n | m`, and the formal
//! rank-one modules `A^i_n`.

pub mod algebra;
pub mod checks;
pub mod twisted;

pub use algebra::{kernel_mod, ElemSummary, GroupAlgebraElem};
pub use checks::{
    annihilator_image, augmentation_kernel_check, classical_grid, frobenius_scalar,
    frobenius_scalar_integral, pro_nzd_check, unit_surjectivity_check, AugmentationWitness,
    NzdWitness, UnitWitness,
};
pub use twisted::{tensor_elements, twisted_tensor, twisted_tensor_check, TensorWitness, TwistedRankOneModule};
