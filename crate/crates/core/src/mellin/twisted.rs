//! Right actions of the shift algebra on `k(s)` twisted by a cocycle.
//!
//! With cocycle `c(s)`: `f·T = c(s) f(s+1)`, `f·T^-1 = f(s-1)/c(s-1)`,
//! `f·p(s) = p f`. Any `c` is compatible with `sT = T(s+1)`, since
//! `(f·s)·T = c (s+1) f(s+1) = (f·T)·(s+1)`.

use num_traits::One;

use crate::ore::ShiftOp;
use crate::scalars::{int, Poly, RatFun, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedModel {
    name: String,
    cocycle: RatFun,
}

impl TwistedModel {
    pub fn new(name: impl Into<String>, cocycle: RatFun) -> Self {
        assert!(!cocycle.is_zero(), "cocycle must be nonzero");
        TwistedModel { name: name.into(), cocycle }
    }

    /// Untwisted action `f·T = f(s+1)`, the model of the lattice of `1/(s+1)`.
    pub fn plain() -> Self {
        TwistedModel::new("plain", RatFun::one())
    }

    /// Model for `D/(1 - T^-1 s)D` with `𝟏 ↦ 1`.
    pub fn exp() -> Self {
        TwistedModel::new("E", RatFun::from_poly(Poly::from_ints(&[1, 1])))
    }

    /// Model for the inversion-twisted exponential module with `𝟏 ↦ 1`.
    pub fn exp_inverted() -> Self {
        TwistedModel::new("iota*E", RatFun::new(Poly::one(), Poly::s()))
    }

    /// Model of a tensor product over `k[s]`: cocycles multiply.
    pub fn tensor(&self, other: &TwistedModel) -> TwistedModel {
        TwistedModel::new(format!("{} (x) {}", self.name, other.name), &self.cocycle * &other.cocycle)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cocycle(&self) -> &RatFun {
        &self.cocycle
    }

    /// `f·T^j`.
    pub fn translate(&self, f: &RatFun, j: i64) -> RatFun {
        let mut g = f.clone();
        if j >= 0 {
            for _ in 0..j {
                g = &self.cocycle * &g.shift(&int(1));
            }
        } else {
            let back = self.cocycle.shift(&int(-1)).inv().expect("nonzero cocycle");
            for _ in 0..(-j) {
                g = &g.shift(&int(-1)) * &back;
            }
        }
        g
    }

    /// `f·op` for `op = Σ T^j p_j(s)`.
    pub fn act(&self, f: &RatFun, op: &ShiftOp) -> RatFun {
        let mut out = RatFun::zero();
        for (&j, p) in op.terms() {
            let moved = self.translate(f, j);
            out = &out + &(&moved * &RatFun::from_poly(p.clone()));
        }
        out
    }

    pub fn annihilates(&self, f: &RatFun, relation: &ShiftOp) -> bool {
        self.act(f, relation).is_zero()
    }
}

/// `1 / Π_{i<k} (s - a - i)`, used for closed forms in tests and reports.
pub fn falling_reciprocal(a: &Rational, k: u32) -> RatFun {
    let mut den = Poly::one();
    for i in 0..k {
        den = &den * &Poly::linear(&(a + int(i64::from(i))));
    }
    RatFun::new(Poly::constant(Rational::one()), den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::ShiftOp;

    fn e_rel() -> ShiftOp {
        &ShiftOp::one() - &(&ShiftOp::t_inv() * &ShiftOp::s())
    }

    #[test]
    fn translate_inverse() {
        let m = TwistedModel::exp();
        let f = RatFun::new(Poly::from_ints(&[2, 1]), Poly::from_ints(&[0, 0, 1]));
        for j in -3..=3 {
            assert_eq!(m.translate(&m.translate(&f, j), -j), f);
        }
    }

    #[test]
    fn exp_models() {
        let one = RatFun::one();
        assert!(TwistedModel::exp().annihilates(&one, &e_rel()));
        let twisted = crate::ore::inversion_twist(&e_rel());
        assert!(TwistedModel::exp_inverted().annihilates(&one, &twisted));
        // 𝟏T^-k ↦ 1/(s(s-1)...(s-k+1)) in the E model
        let m = TwistedModel::exp();
        for k in 0..5u32 {
            assert_eq!(m.translate(&one, -i64::from(k)), falling_reciprocal(&int(0), k));
        }
        // 𝟏T^m ↦ 1/(s(s+1)...(s+m-1)) in the inverted model
        let m = TwistedModel::exp_inverted();
        for k in 0..5u32 {
            assert_eq!(m.translate(&one, i64::from(k)), falling_reciprocal(&int(-i64::from(k) + 1), k));
        }
    }
}
