//! Exact arithmetic substrate.
//!
//! Everything here works over `k = Q`. The operator and module algorithms
//! only ever touch rational data (rational orbit base points, integer
//! shifts), so an algebraic closure is never needed; exactness is.

pub mod cyclotomic;
pub mod fq;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod residue;
pub mod smith;

pub use cyclotomic::CycScalar;
pub use fq::{FiniteField, FqElement};
pub use linalg::Field;
pub use poly::Poly;
pub use ratfun::{PartialFractions, PolePart, RatFun};
pub use residue::ResidueRingElem;
pub use smith::{smith_normal_form, PolyMatrix, SmithForm};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer part toward negative infinity.
pub fn floor(r: &Rational) -> Rational {
    r.floor()
}

/// Representative of `r + Z` in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub(crate) fn sign_power(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        <Rational as One>::one()
    } else {
        -<Rational as One>::one()
    }
}
