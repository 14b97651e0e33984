//! Trace functions over finite fields.
//!
//! Functions on `F_q^d` take exact values in cyclotomic fields. Twists and
//! shifts act by scalars: `(1)` multiplies traces by `q^-1` and `[1]` by
//! `-1`. Every sign and power of `q` in the checks is derived from that
//! single convention through [`TwistShift`].

pub mod characters;
pub mod checks;
pub mod function;
pub mod space;
pub mod transforms;

pub use characters::CharacterTable;
pub use checks::{
    bl2_check, cv_check, fbneq_check, gauss_g_diagnostic, gauss_suite, keythm_check, lem_mon_shadow,
    mon_equivalence_check, p2b_check, propb3_diagnostic,
};
pub use function::{TraceFunction, TwistShift};
pub use space::{FqSpace, Pairing};
pub use transforms::{conv_gm, four_b, four_b_dual, four_psi, t_b, t_i0n, t_i1n, t_jb};
