//! Additive and multiplicative characters of `F_q`, and Gauss sums.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::cyclotomic::CyclotomicRing;
use crate::scalars::{int, CycScalar, FiniteField, Rational};

/// `ψ(a) = ζ_p^{Tr(b·a)}` for a fixed nonzero `b`, and
/// `χ_j(g^k) = ζ_{q-1}^{jk}` for the fixed generator `g`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    field: Arc<FiniteField>,
    psi_index: u32,
    additive: Vec<CycScalar>,
    mult_ring: Arc<CyclotomicRing>,
}

impl CharacterTable {
    pub fn new(field: &Arc<FiniteField>, psi_index: u32) -> Result<Self> {
        if psi_index == 0 || psi_index >= field.order() {
            return Err(Error::InvalidParameter(format!(
                "additive character index {psi_index} must be a nonzero element of F_{}",
                field.order()
            )));
        }
        let add_ring = CyclotomicRing::new(field.characteristic() as u64);
        let additive = field
            .elements()
            .map(|a| CycScalar::zeta_power(&add_ring, field.trace(field.mul(psi_index, a)) as i64))
            .collect();
        let mult_ring = CyclotomicRing::new(field.order() as u64 - 1);
        Ok(CharacterTable { field: field.clone(), psi_index, additive, mult_ring })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn psi_index(&self) -> u32 {
        self.psi_index
    }

    pub fn psi(&self, a: u32) -> &CycScalar {
        &self.additive[a as usize]
    }

    /// Number of multiplicative characters, `q - 1`.
    pub fn group_order(&self) -> u64 {
        self.field.order() as u64 - 1
    }

    /// `χ_j(x)`, zero at `x = 0`.
    pub fn chi(&self, j: u64, x: u32) -> CycScalar {
        if x == 0 {
            return CycScalar::zero_in(&self.mult_ring);
        }
        let k = self.field.log(x) as u64;
        CycScalar::zeta_power(&self.mult_ring, ((j % self.group_order()) * k % self.group_order()) as i64)
    }

    pub fn chi_order(&self, j: u64) -> u64 {
        let m = self.group_order();
        m / j.gcd(&m)
    }

    /// Indices `j` with `χ_j^n = 1`; requires `n | q - 1`.
    pub fn characters_of_order_dividing(&self, n: u64) -> Result<Vec<u64>> {
        let m = self.group_order();
        if n == 0 || m % n != 0 {
            return Err(Error::InvalidParameter(format!("{n} does not divide q - 1 = {m}")));
        }
        Ok((0..m).filter(|&j| (j * n) % m == 0).collect())
    }

    /// Index of `χ_j^{-1}`.
    pub fn inverse_index(&self, j: u64) -> u64 {
        (self.group_order() - j % self.group_order()) % self.group_order()
    }

    /// `g(χ_j, ψ) = Σ_{x≠0} χ_j(x) ψ(x)`.
    pub fn gauss_sum(&self, j: u64) -> CycScalar {
        (1..self.field.order()).fold(CycScalar::rational(Rational::zero()), |acc, x| {
            acc.add(&self.chi(j, x).mul(self.psi(x)))
        })
    }

    /// `ψ(a + b) = ψ(a)ψ(b)` for all pairs, and `ψ` nontrivial.
    pub fn additive_is_character(&self) -> bool {
        let f = &self.field;
        let homomorphism = f
            .elements()
            .all(|a| f.elements().all(|b| *self.psi(f.add(a, b)) == self.psi(a).mul(self.psi(b))));
        homomorphism && f.elements().any(|a| self.psi(a).as_rational() != Some(int(1)))
    }

    /// `χ_j(ab) = χ_j(a)χ_j(b)` for every `j`.
    pub fn multiplicative_are_characters(&self) -> bool {
        let f = &self.field;
        (0..self.group_order()).all(|j| {
            (1..f.order()).all(|a| (1..f.order()).all(|b| self.chi(j, f.mul(a, b)) == self.chi(j, a).mul(&self.chi(j, b))))
        })
    }

    /// `Σ_x χ_j(x) χ_k(x)^{-1} = (q-1)[j = k]` for all pairs.
    pub fn orthogonality_holds(&self) -> bool {
        let m = self.group_order();
        (0..m).all(|j| {
            (0..m).all(|k| {
                let s = (1..self.field.order()).fold(CycScalar::rational(Rational::zero()), |acc, x| {
                    acc.add(&self.chi(j, x).mul(&self.chi(self.inverse_index(k), x)))
                });
                let expected = if j == k { int(m as i64) } else { Rational::zero() };
                s.as_rational() == Some(expected)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characters_are_characters() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::of_order(q).unwrap();
            let t = CharacterTable::new(&f, 1).unwrap();
            assert!(t.additive_is_character(), "q = {q}");
            assert!(t.multiplicative_are_characters(), "q = {q}");
            assert!(t.orthogonality_holds(), "q = {q}");
        }
    }

    #[test]
    fn gauss_sum_norms() {
        // g(χ)g(χ^-1)χ(-1) = q for nontrivial χ
        for q in [5u32, 7, 9, 11] {
            let f = FiniteField::of_order(q).unwrap();
            let t = CharacterTable::new(&f, 1).unwrap();
            let minus_one = f.neg(1);
            for j in 1..t.group_order() {
                let prod = t.gauss_sum(j).mul(&t.gauss_sum(t.inverse_index(j))).mul(&t.chi(j, minus_one));
                assert_eq!(prod.as_rational(), Some(int(q as i64)), "q = {q}, j = {j}");
            }
            // trivial character: g = -1
            assert_eq!(t.gauss_sum(0).as_rational(), Some(int(-1)));
        }
    }

    #[test]
    fn order_filters() {
        let f = FiniteField::of_order(7).unwrap();
        let t = CharacterTable::new(&f, 1).unwrap();
        assert_eq!(t.characters_of_order_dividing(3).unwrap(), vec![0, 2, 4]);
        assert!(t.characters_of_order_dividing(4).is_err());
        assert_eq!(t.chi_order(2), 3);
        assert!(CharacterTable::new(&f, 0).is_err());
    }
}
