//! Operator algebras: the shift algebra, Weyl algebras, the maps between
//! them, and reduction in cyclic right modules.

pub mod maps;
pub mod reduce;
pub mod shift;
pub mod weyl;

pub use maps::{
    antipode, fourier_auto, inverse_mellin_op, inversion, inversion_twist, inversion_twist_with,
    mellin_op, negation, InversionOrder,
};
pub use reduce::{reduce_shift, right_reduce, Algebra, CyclicPresentation, OreOperator};
pub use shift::ShiftOp;
pub use weyl::{LaurentWeylOp, WeylOp};

#[cfg(test)]
mod proptests;
