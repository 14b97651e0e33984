//! The kernel `t_B`, Fourier operators and multiplicative convolution.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::characters::CharacterTable;
use super::function::TraceFunction;
use super::space::{dot, FqSpace, Pairing};
use crate::error::{Error, Result};
use crate::scalars::{int, CycScalar, Rational};

fn sign(d: usize) -> Rational {
    if d % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `t_B`: 1 away from `x = 1`, `1 - q` at `x = 1`.
pub fn t_b(line: &Arc<FqSpace>) -> TraceFunction {
    let q = line.q() as i64;
    TraceFunction::from_rational_fn(line, |i| if line.coords(i)[0] == 1 { int(1 - q) } else { int(1) })
}

/// `t_B` restricted to `F_q^×`; the value at 0 is set to 0.
pub fn t_jb(line: &Arc<FqSpace>) -> TraceFunction {
    let tb = t_b(line);
    TraceFunction::from_rational_fn(line, |i| {
        if line.coords(i)[0] == 0 {
            Rational::zero()
        } else {
            tb.value(i).as_rational().expect("rational kernel")
        }
    })
}

fn check_pairing(f: &TraceFunction, pairing: &Pairing) -> Result<()> {
    if pairing.d() != f.d() {
        return Err(Error::RankMismatch { left: f.d(), right: pairing.d() });
    }
    Ok(())
}

/// `g(ξ) = (-1)^d Σ_v f(v) t_B(⟨v, ξ⟩)`, computed as
/// `(-1)^d (Σ_v f(v) - q Σ_{⟨v,ξ⟩=1} f(v))`.
pub fn four_b(f: &TraceFunction, pairing: &Pairing) -> Result<TraceFunction> {
    check_pairing(f, pairing)?;
    let space = f.space();
    let field = space.field();
    let total = f.values().iter().fold(CycScalar::rational(Rational::zero()), |acc, v| acc.add(v));
    let q = int(space.q() as i64);
    let s = sign(space.d());
    let values = (0..space.size())
        .map(|xi| {
            let m_xi = pairing.apply(field, space.coords(xi));
            let on_hyperplane = (0..space.size())
                .filter(|&v| dot(field, space.coords(v), &m_xi) == 1)
                .fold(CycScalar::rational(Rational::zero()), |acc, v| acc.add(f.value(v)));
            total.sub(&on_hyperplane.scale(&q)).scale(&s)
        })
        .collect();
    TraceFunction::new(space, values)
}

/// Transform on the dual side, using the transposed pairing.
pub fn four_b_dual(g: &TraceFunction, pairing: &Pairing) -> Result<TraceFunction> {
    four_b(g, &pairing.transpose())
}

/// Literal double sum `(-1)^d Σ_v f(v) t_B(⟨v, ξ⟩)`.
pub fn four_b_naive(f: &TraceFunction, pairing: &Pairing) -> Result<TraceFunction> {
    check_pairing(f, pairing)?;
    let space = f.space();
    let field = space.field();
    let line = FqSpace::line(field);
    let tb = t_b(&line);
    let s = sign(space.d());
    let values = (0..space.size())
        .map(|xi| {
            (0..space.size())
                .fold(CycScalar::rational(Rational::zero()), |acc, v| {
                    let p = pairing.eval(field, space.coords(v), space.coords(xi));
                    acc.add(&f.value(v).mul(tb.value(p as usize)))
                })
                .scale(&s)
        })
        .collect();
    TraceFunction::new(space, values)
}

/// `g(ξ) = (-1)^d Σ_v f(v) ψ(⟨v, ξ⟩)`.
pub fn four_psi(f: &TraceFunction, pairing: &Pairing, chars: &CharacterTable) -> Result<TraceFunction> {
    check_pairing(f, pairing)?;
    let space = f.space();
    let field = space.field();
    if field != chars.field() {
        return Err(Error::ParameterMismatch("character table over a different field".into()));
    }
    let s = sign(space.d());
    let values = (0..space.size())
        .map(|xi| {
            let m_xi = pairing.apply(field, space.coords(xi));
            (0..space.size())
                .fold(CycScalar::rational(Rational::zero()), |acc, v| {
                    acc.add(&f.value(v).mul(chars.psi(dot(field, space.coords(v), &m_xi))))
                })
                .scale(&s)
        })
        .collect();
    TraceFunction::new(space, values)
}

/// `(g * f)(v) = Σ_{λ ∈ F_q^×} g(λ) f(λ^-1 v)` for `g` on the line (its
/// value at 0 is ignored).
pub fn conv_gm(g: &TraceFunction, f: &TraceFunction) -> Result<TraceFunction> {
    if g.d() != 1 || g.space().field() != f.space().field() {
        return Err(Error::ParameterMismatch("convolution needs a function on F_q^× of the same field".into()));
    }
    let space = f.space();
    let field = space.field();
    let values = (0..space.size())
        .map(|v| {
            (1..field.order()).fold(CycScalar::rational(Rational::zero()), |acc, lambda| {
                let w = space.scale(field.inv(lambda), v);
                acc.add(&g.value(lambda as usize).mul(f.value(w)))
            })
        })
        .collect();
    TraceFunction::new(space, values)
}

/// `x ↦ g(x^-1)` on `F_q^×`.
pub fn pull_inverse(g: &TraceFunction) -> TraceFunction {
    let field = g.space().field().clone();
    TraceFunction::from_fn(g.space(), |x| {
        if x == 0 {
            CycScalar::rational(Rational::zero())
        } else {
            g.value(field.inv(x as u32) as usize).clone()
        }
    })
}

/// `x ↦ g(-x^-1)` on `F_q^×`.
pub fn pull_neg_inverse(g: &TraceFunction) -> TraceFunction {
    let field = g.space().field().clone();
    TraceFunction::from_fn(g.space(), |x| {
        if x == 0 {
            CycScalar::rational(Rational::zero())
        } else {
            g.value(field.neg(field.inv(x as u32)) as usize).clone()
        }
    })
}

/// Zero at 0, `g` elsewhere.
pub fn restrict_gm(g: &TraceFunction) -> TraceFunction {
    TraceFunction::from_fn(g.space(), |x| {
        if x == 0 {
            CycScalar::rational(Rational::zero())
        } else {
            g.value(x).clone()
        }
    })
}

fn require_divides(line: &FqSpace, n: u64) -> Result<()> {
    let m = line.q() as u64 - 1;
    if n == 0 || m % n != 0 {
        return Err(Error::InvalidParameter(format!("n = {n} does not divide q - 1 = {m}")));
    }
    Ok(())
}

/// `t_{I^0_n}(x) = #{y : y^n = x}` on `F_q^×`.
pub fn t_i0n(line: &Arc<FqSpace>, n: u64) -> Result<TraceFunction> {
    require_divides(line, n)?;
    let field = line.field();
    let mut counts = vec![0i64; line.size()];
    for y in 1..field.order() {
        counts[field.pow(y, n) as usize] += 1;
    }
    Ok(TraceFunction::from_rational_fn(line, |x| if x == 0 { Rational::zero() } else { int(counts[x]) }))
}

/// `Σ_{χ^n = 1} χ(x)`, the character-sum form of `t_{I^0_n}`.
pub fn t_i0n_characters(line: &Arc<FqSpace>, chars: &CharacterTable, n: u64) -> Result<TraceFunction> {
    require_divides(line, n)?;
    let js = chars.characters_of_order_dividing(n)?;
    Ok(TraceFunction::from_fn(line, |x| {
        js.iter()
            .fold(CycScalar::rational(Rational::zero()), |acc, &j| acc.add(&chars.chi(j, x as u32)))
    }))
}

/// `t_{I^1_n}(x) = Tr_{A^0_n}(t^{k(x)}·u)`, where `k(x) = log x mod n` is
/// the Kummer class of `x` and `u ∈ Z[Z/n]` is the Frobenius scalar on the
/// generator. With `u = 1` this is `t_{I^0_n}`.
pub fn t_i1n(line: &Arc<FqSpace>, n: u64, u: &[i64]) -> Result<TraceFunction> {
    require_divides(line, n)?;
    if u.len() as u64 != n {
        return Err(Error::ParameterMismatch(format!("Frobenius scalar has {} coefficients, n = {n}", u.len())));
    }
    let field = line.field();
    let n_us = n as usize;
    Ok(TraceFunction::from_rational_fn(line, |x| {
        if x == 0 {
            return Rational::zero();
        }
        let k = field.log(x as u32) as usize % n_us;
        // trace of multiplication by t^k on Z[Z/n] is n·[k = 0]
        int(n as i64 * u[(n_us - k) % n_us])
    }))
}

/// `χ_j` on `F_q^×`, extended by 0.
pub fn eigenfunction(line: &Arc<FqSpace>, chars: &CharacterTable, j: u64) -> TraceFunction {
    TraceFunction::from_fn(line, |x| chars.chi(j, x as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FiniteField;

    fn line(q: u32) -> Arc<FqSpace> {
        FqSpace::line(&FiniteField::of_order(q).unwrap())
    }

    #[test]
    fn kernel_values() {
        for q in [2, 3, 4, 5, 7] {
            let l = line(q);
            let tb = t_b(&l);
            let total = tb.values().iter().fold(CycScalar::rational(Rational::zero()), |a, v| a.add(v));
            assert!(total.is_zero());
            assert_eq!(tb.value(0).as_rational(), Some(int(1)));
            assert_eq!(tb.value(1).as_rational(), Some(int(1 - q as i64)));
        }
    }

    #[test]
    fn remark_values() {
        for q in [2, 3, 5, 7] {
            let l = line(q);
            let p = Pairing::standard(1);
            let g0 = four_b(&TraceFunction::delta(&l, 0), &p).unwrap();
            assert_eq!(g0, TraceFunction::constant(&l, int(-1)));
            let g1 = four_b(&TraceFunction::delta(&l, 1), &p).unwrap();
            assert_eq!(g1, t_b(&l).neg());
            assert!(four_b(&TraceFunction::zero(&l), &p).unwrap().is_zero());
        }
    }

    #[test]
    fn fast_transform_matches_double_sum() {
        let f = FiniteField::of_order(3).unwrap();
        let v = FqSpace::new(&f, 2).unwrap();
        let p = Pairing::new(&f, vec![vec![1, 2], vec![0, 1]]).unwrap();
        let func = TraceFunction::from_rational_fn(&v, |i| int((i as i64 * 7) % 5 - 2));
        assert_eq!(four_b(&func, &p).unwrap(), four_b_naive(&func, &p).unwrap());
    }

    #[test]
    fn convolution_unit() {
        let l = line(7);
        let f = TraceFunction::from_rational_fn(&l, |i| int(i as i64 * i as i64));
        let delta1 = TraceFunction::delta(&l, 1);
        assert_eq!(conv_gm(&delta1, &f).unwrap(), f);
        // Σ_{λ≠0} t_B(λ) = -1
        let c = conv_gm(&t_jb(&l), &TraceFunction::delta(&l, 0)).unwrap();
        assert_eq!(c, TraceFunction::delta(&l, 0).scale_rational(&int(-1)));
    }

    #[test]
    fn point_counts_match_character_sums() {
        for (q, n) in [(5u32, 4u64), (7, 2), (7, 3), (7, 6), (13, 4)] {
            let l = line(q);
            let chars = CharacterTable::new(l.field(), 1).unwrap();
            assert_eq!(t_i0n(&l, n).unwrap(), t_i0n_characters(&l, &chars, n).unwrap());
            assert_eq!(t_i1n(&l, n, &{
                let mut u = vec![0; n as usize];
                u[0] = 1;
                u
            })
            .unwrap(), t_i0n(&l, n).unwrap());
        }
        let l = line(7);
        let legendre = |x: u32| -> i64 {
            if x == 0 {
                0
            } else if [1, 2, 4].contains(&x) {
                1
            } else {
                -1
            }
        };
        let t = t_i0n(&l, 2).unwrap();
        for x in 1..7u32 {
            assert_eq!(t.value(x as usize).as_rational(), Some(int(1 + legendre(x))));
        }
        assert_eq!(t_i0n(&l, 1).unwrap(), restrict_gm(&TraceFunction::constant(&l, int(1))));
        assert!(t_i0n(&l, 4).is_err());
    }
}
