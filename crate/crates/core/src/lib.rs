//! Exact computer-algebra workbench for monodromic Fourier transforms.
//!
//! * [`scalars`]: rationals, polynomials and rational functions in `s`,
//!   Smith normal form over `Q[s]`, finite fields, cyclotomic scalars and
//!   residue rings.
//! * [`ore`]: the shift algebra `k[s]<T, T^-1>/(sT - T(s+1))`, Weyl algebras,
//!   the Mellin identification `s = x∂`, `T = x`, and the automorphisms used
//!   by the Fourier transform and by `λ ↦ -λ^-1`.
//! * [`mellin`]: canonical difference modules, their models inside `k(s)`,
//!   windowed lattices, local fibers, skyscraper families and monodromicity.
//! * [`trace`]: trace functions over `F_q`, the kernel `t_B`, Fourier
//!   operators, multiplicative convolution, characters and Gauss sums.
//! * [`groupalg`]: the group algebras `(Z/ℓ^r)[Z/n]` and their twisted
//!   rank-one modules.
//! * [`cli`]: the operator parser, check registry and JSON reports.

pub mod cli;
pub mod error;
pub mod groupalg;
pub mod mellin;
pub mod ore;
pub mod scalars;
pub mod trace;

pub use error::{Error, Result};
