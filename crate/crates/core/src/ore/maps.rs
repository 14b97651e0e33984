//! Algebra maps between the operator algebras: the Mellin identification
//! `x = T`, `x∂ = s`, the Fourier automorphism of the Weyl algebra, and the
//! automorphism of the shift algebra induced by `λ ↦ -1/λ` on `G_m`.

use num_traits::Zero;

use super::shift::ShiftOp;
use super::weyl::{LaurentWeylOp, WeylOp};
use crate::scalars::{int, sign_power, Poly};

/// `x^a ∂^b ↦ T^a (T^-1 s)^b`.
pub fn mellin_op(w: &LaurentWeylOp) -> ShiftOp {
    let max_b = w.terms().keys().map(|&(_, b)| b).max().unwrap_or(0);
    let step = &ShiftOp::t_inv() * &ShiftOp::s();
    let mut powers = vec![ShiftOp::one()];
    for b in 1..=max_b as usize {
        let next = &powers[b - 1] * &step;
        powers.push(next);
    }
    let mut out = ShiftOp::zero();
    for (&(a, b), c) in w.terms() {
        let term = &ShiftOp::t_pow(a) * &powers[b as usize];
        out = &out + &term.scale(c);
    }
    out
}

/// `T^j p(s) ↦ x^j p(x∂)`.
pub fn inverse_mellin_op(sh: &ShiftOp) -> LaurentWeylOp {
    let max_deg = sh.terms().values().filter_map(Poly::degree).max().unwrap_or(0);
    let euler = LaurentWeylOp::euler();
    let mut powers = vec![LaurentWeylOp::one()];
    for k in 1..=max_deg {
        let next = &powers[k - 1] * &euler;
        powers.push(next);
    }
    let mut out = LaurentWeylOp::zero();
    for (&j, p) in sh.terms() {
        let mut poly_part = LaurentWeylOp::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                poly_part = &poly_part + &powers[k].scale(c);
            }
        }
        out = &out + &(&LaurentWeylOp::x_pow(j) * &poly_part);
    }
    out
}

/// `x_i ↦ -∂_i`, `∂_i ↦ x_i`.
pub fn fourier_auto(w: &WeylOp) -> WeylOp {
    let d = w.rank();
    let mut out = WeylOp::zero(d);
    for ((a, b), c) in w.terms() {
        let sign = sign_power(a.iter().map(|&e| i64::from(e)).sum());
        let derivs = WeylOp::monomial(d, vec![0; d], a.clone(), sign * c);
        let coords = WeylOp::monomial(d, b.clone(), vec![0; d], int(1));
        out = &out + &(&derivs * &coords);
    }
    out
}

/// `x_i ↦ -x_i`, `∂_i ↦ -∂_i`.
pub fn antipode(w: &WeylOp) -> WeylOp {
    let mut out = WeylOp::zero(w.rank());
    for ((a, b), c) in w.terms() {
        let deg: u32 = a.iter().chain(b).sum();
        out.add_term((a.clone(), b.clone()), sign_power(i64::from(deg)) * c);
    }
    out
}

/// Pullback along `λ ↦ 1/λ`: `s ↦ -s`, `T ↦ T^-1`.
pub fn inversion(sh: &ShiftOp) -> ShiftOp {
    ShiftOp::from_terms(sh.terms().iter().map(|(&j, p)| (-j, p.reflect())))
}

/// Pullback along `λ ↦ -λ`: `T ↦ -T`, `s` fixed.
pub fn negation(sh: &ShiftOp) -> ShiftOp {
    ShiftOp::from_terms(sh.terms().iter().map(|(&j, p)| (j, p.scale(&sign_power(j)))))
}

/// Order in which the two factors of `λ ↦ -1/λ` are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InversionOrder {
    #[default]
    InvertThenNegate,
    NegateThenInvert,
}

/// Automorphism induced by `λ ↦ -λ^-1`: `s ↦ -s`, `T ↦ -T^-1`.
pub fn inversion_twist(sh: &ShiftOp) -> ShiftOp {
    inversion_twist_with(sh, InversionOrder::default())
}

pub fn inversion_twist_with(sh: &ShiftOp, order: InversionOrder) -> ShiftOp {
    match order {
        InversionOrder::InvertThenNegate => negation(&inversion(sh)),
        InversionOrder::NegateThenInvert => inversion(&negation(sh)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;
    use num_traits::One;

    #[test]
    fn mellin_examples() {
        // ∂(x - 1) ↦ (s + 1) - T^-1 s
        let dd = LaurentWeylOp::d();
        let rel = &dd * &(&LaurentWeylOp::x_pow(1) - &LaurentWeylOp::one());
        let expected = &(&ShiftOp::s() + &ShiftOp::one()) - &(&ShiftOp::t_inv() * &ShiftOp::s());
        assert_eq!(mellin_op(&rel), expected);
        assert_eq!(mellin_op(&LaurentWeylOp::x_pow(1)), ShiftOp::t());
        assert_eq!(mellin_op(&dd), &ShiftOp::t_inv() * &ShiftOp::s());
        assert_eq!(inverse_mellin_op(&ShiftOp::s()), LaurentWeylOp::euler());
        assert_eq!(inverse_mellin_op(&(&ShiftOp::t_inv() * &ShiftOp::s())), dd);
    }

    #[test]
    fn d_power_closed_form() {
        // ∂^b ↦ T^-b s (s-1) ... (s-b+1)
        for b in 0..6u32 {
            let img = mellin_op(&LaurentWeylOp::d().pow(b));
            let mut p = Poly::one();
            for i in 0..b {
                p = &p * &Poly::linear(&int(i64::from(i)));
            }
            assert_eq!(img, ShiftOp::term(-i64::from(b), p));
        }
    }

    #[test]
    fn fourier_examples() {
        let x = WeylOp::x(1, 0);
        let d = WeylOp::d(1, 0);
        assert_eq!(fourier_auto(&x), -&d);
        assert_eq!(fourier_auto(&d), x);
        assert_eq!(fourier_auto(&fourier_auto(&x)), -&x);
        assert_eq!(fourier_auto(&fourier_auto(&d)), -&d);
        let rel = &(&(&d * &x) - &(&x * &d)) - &WeylOp::one(1);
        assert!(rel.is_zero());
        let img = &(&(&fourier_auto(&d) * &fourier_auto(&x)) - &(&fourier_auto(&x) * &fourier_auto(&d)))
            - &WeylOp::one(1);
        assert!(img.is_zero());
    }

    #[test]
    fn inversion_twist_examples() {
        assert_eq!(inversion_twist(&ShiftOp::s()), ShiftOp::s().scale(&-Rational::one()));
        assert_eq!(inversion_twist(&ShiftOp::t()), ShiftOp::t_inv().scale(&-Rational::one()));
        let rel = &(&ShiftOp::s() * &ShiftOp::t()) - &(&ShiftOp::t() * &(&ShiftOp::s() + &ShiftOp::one()));
        let s2 = inversion_twist(&ShiftOp::s());
        let t2 = inversion_twist(&ShiftOp::t());
        let img = &(&s2 * &t2) - &(&t2 * &(&s2 + &ShiftOp::one()));
        assert!(rel.is_zero() && img.is_zero());
    }

    #[test]
    fn inversion_twist_on_e_relation() {
        // 1 - T^-1 s ↦ 1 - T s
        let e_rel = &ShiftOp::one() - &(&ShiftOp::t_inv() * &ShiftOp::s());
        let twisted = inversion_twist(&e_rel);
        assert_eq!(twisted, &ShiftOp::one() - &(&ShiftOp::t() * &ShiftOp::s()));
        assert_eq!(
            twisted,
            inversion_twist_with(&e_rel, InversionOrder::NegateThenInvert)
        );
    }
}
