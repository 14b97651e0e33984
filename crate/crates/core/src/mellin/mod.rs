//! Mellin engine: shift-algebra modules as `k[s]`-modules with a `Z`-action,
//! their lattice models inside `k(s)`, and fiberwise comparisons.

pub mod canonical;
pub mod checks;
pub mod equivariant;
pub mod lattice;
pub mod local;
pub mod presentations;
pub mod twisted;

pub use canonical::{
    b_module, b_relation, b_weyl, e_module, e_relation, exp_module, fourier_b_monodromic,
    fourier_presentation, inverted_e_module, mellin_module, normalize_weyl, windowed_module,
};
pub use checks::{
    dmod2_test_points, eq3_decomposition_check, exp_square_check, monodromization_check, prop_dmod1,
    prop_dmod2, prop_dmod3, skyscraper_freeness_check, window_stable, ModKind,
};
pub use equivariant::{monodromic_test, torsion_by_saturation, EquivariantModule};
pub use lattice::{
    embed_in_ks, embed_in_ks_with, hom_to_free_vanishes, localization_identity_check, HomWitness,
    LatticeGenerator, LocalizationWitness, WindowedLattice,
};
pub use local::{FiberSummary, LocalModule, SkyscraperFamily};
pub use presentations::{b_embed_check, fb_fl_check, fourier_antipode_check, mon_test_agreement};
pub use twisted::TwistedModel;
