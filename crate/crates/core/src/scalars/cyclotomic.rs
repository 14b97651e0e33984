//! Exact elements of `Q(ζ_N)`, stored in the power basis of `Z[x]/Φ_N(x)`.
//!
//! Values of additive characters live in conductor `p`, multiplicative
//! characters of `F_q^×` in conductor `q - 1`; mixed arithmetic inflates both
//! operands to the least common conductor via `ζ_M ↦ ζ_N^{N/M}`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{poly_xgcd, Poly};
use super::{format_rational, Rational};

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicRing {
    conductor: u64,
    /// Φ_N, monic, ascending coefficients.
    modulus: Vec<Rational>,
}

impl CyclotomicRing {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor).coeffs().to_vec();
        Arc::new(CyclotomicRing { conductor, modulus })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `φ(N)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let base = c.len() - d;
            for (j, m) in self.modulus[..d].iter().enumerate() {
                c[base + j] -= &top * m;
            }
        }
        c.resize(d, Rational::zero());
        c
    }
}

/// `Φ_n(x)` by repeated exact division of `x^n - 1`.
pub fn cyclotomic_polynomial(n: u64) -> Poly {
    let mut p = Poly::monomial(Rational::one(), n as usize) - Poly::one();
    for d in 1..n {
        if n % d == 0 {
            p = p.div_exact(&cyclotomic_polynomial(d)).expect("Φ_d divides x^n - 1");
        }
    }
    p
}

#[derive(Clone, Debug)]
pub struct CycScalar {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn from_rational(ring: &Arc<CyclotomicRing>, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); ring.degree()];
        coeffs[0] = c;
        CycScalar { ring: ring.clone(), coeffs }
    }

    pub fn zero_in(ring: &Arc<CyclotomicRing>) -> Self {
        CycScalar::from_rational(ring, Rational::zero())
    }

    pub fn one_in(ring: &Arc<CyclotomicRing>) -> Self {
        CycScalar::from_rational(ring, Rational::one())
    }

    /// A rational number in conductor 1.
    pub fn rational(c: Rational) -> Self {
        CycScalar::from_rational(&CyclotomicRing::new(1), c)
    }

    /// `ζ_N^k`.
    pub fn zeta_power(ring: &Arc<CyclotomicRing>, k: i64) -> Self {
        let n = ring.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        CycScalar { ring: ring.clone(), coeffs: ring.reduce(c) }
    }

    pub fn from_coeffs(ring: &Arc<CyclotomicRing>, coeffs: Vec<Rational>) -> Self {
        CycScalar { ring: ring.clone(), coeffs: ring.reduce(coeffs) }
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn conductor(&self) -> u64 {
        self.ring.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Image in conductor `target`, a multiple of the current conductor.
    pub fn inflate(&self, target: &Arc<CyclotomicRing>) -> CycScalar {
        if Arc::ptr_eq(&self.ring, target) || self.ring.conductor == target.conductor {
            return CycScalar { ring: target.clone(), coeffs: self.coeffs.clone() };
        }
        assert_eq!(target.conductor % self.ring.conductor, 0, "conductor does not divide target");
        let step = (target.conductor / self.ring.conductor) as usize;
        let mut c = vec![Rational::zero(); step * self.coeffs.len().max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * step] = a.clone();
        }
        CycScalar { ring: target.clone(), coeffs: target.reduce(c) }
    }

    fn align(&self, other: &CycScalar) -> (CycScalar, CycScalar) {
        if self.ring.conductor == other.ring.conductor {
            return (self.clone(), CycScalar { ring: self.ring.clone(), coeffs: other.coeffs.clone() });
        }
        if other.ring.conductor % self.ring.conductor == 0 {
            return (self.inflate(&other.ring), other.clone());
        }
        if self.ring.conductor % other.ring.conductor == 0 {
            return (self.clone(), other.inflate(&self.ring));
        }
        let ring = CyclotomicRing::new(self.ring.conductor.lcm(&other.ring.conductor));
        (self.inflate(&ring), other.inflate(&ring))
    }

    pub fn add(&self, other: &CycScalar) -> CycScalar {
        let (a, b) = self.align(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycScalar { ring: a.ring, coeffs }
    }

    pub fn sub(&self, other: &CycScalar) -> CycScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &CycScalar) -> CycScalar {
        let (a, b) = self.align(other);
        if a.is_zero() || b.is_zero() {
            return CycScalar::zero_in(&a.ring);
        }
        let d = a.coeffs.len();
        let mut c = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        CycScalar { ring: a.ring.clone(), coeffs: a.ring.reduce(c) }
    }

    pub fn scale(&self, c: &Rational) -> CycScalar {
        CycScalar { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u64) -> CycScalar {
        let mut acc = CycScalar::one_in(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Image under the automorphism `ζ ↦ ζ^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: u64) -> CycScalar {
        let n = self.ring.conductor as usize;
        let mut c = vec![Rational::zero(); n.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[(i * k as usize) % n.max(1)] += a;
        }
        CycScalar { ring: self.ring.clone(), coeffs: self.ring.reduce(c) }
    }

    /// Product of all Galois conjugates.
    pub fn norm(&self) -> Rational {
        let n = self.ring.conductor;
        let mut acc = CycScalar::one_in(&self.ring);
        for k in 1..=n.max(1) {
            if k.gcd(&n) == 1 {
                acc = acc.mul(&self.galois(k));
            }
        }
        acc.as_rational().expect("norm is rational")
    }

    /// Complex conjugate `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycScalar {
        let n = self.ring.conductor;
        self.galois(if n <= 2 { 1 } else { n - 1 })
    }

    pub fn inverse(&self) -> Option<CycScalar> {
        if self.is_zero() {
            return None;
        }
        let a = Poly::new(self.coeffs.clone());
        let m = Poly::new(self.ring.modulus.clone());
        let (g, u, _) = poly_xgcd(&a, &m);
        debug_assert!(g.is_one(), "Φ_N is irreducible");
        Some(CycScalar::from_coeffs(&self.ring, u.coeffs().to_vec()))
    }

    pub fn format(&self) -> String {
        let p = Poly::new(self.coeffs.clone());
        if self.ring.conductor <= 2 || p.is_constant() {
            return format_rational(&p.coeff(0));
        }
        format!("{} [z=ζ_{}]", p.format_in("z"), self.ring.conductor)
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl super::linalg::Field for CycScalar {
    fn zero() -> Self {
        CycScalar::rational(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        CycScalar::rational(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CycScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        CycScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        CycScalar::mul(self, other)
    }
    fn inv(&self) -> Self {
        self.inverse().expect("inverse of zero")
    }
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::scalars::int;

    fn small_int(ring: &Arc<CyclotomicRing>, n: i64) -> CycScalar {
        CycScalar::from_rational(ring, int(n))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(9).degree(), Some(6));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2u64, 3, 5, 6, 7, 12] {
            let r = CyclotomicRing::new(n);
            let total = (0..n as i64)
                .map(|k| CycScalar::zeta_power(&r, k))
                .fold(CycScalar::zero_in(&r), |a, b| a.add(&b));
            assert!(total.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn norm_of_one_minus_zeta() {
        for p in [2u64, 3, 5, 7] {
            let r = CyclotomicRing::new(p);
            let z = CycScalar::zeta_power(&r, 1);
            let one = CycScalar::one_in(&r);
            assert_eq!(one.sub(&z).norm(), int(p as i64));
            let sign = if p == 2 { -1 } else { 1 };
            assert_eq!(z.sub(&one).norm(), int(sign * p as i64));
        }
    }

    #[test]
    fn inflation_is_consistent() {
        let r3 = CyclotomicRing::new(3);
        let r12 = CyclotomicRing::new(12);
        let z3 = CycScalar::zeta_power(&r3, 1);
        assert_eq!(z3.inflate(&r12), CycScalar::zeta_power(&r12, 4));
        let r4 = CyclotomicRing::new(4);
        let i = CycScalar::zeta_power(&r4, 1);
        // ζ_3 * i computed in conductor 12 equals ζ_12^{4+3}
        assert_eq!(z3.mul(&i), CycScalar::zeta_power(&r12, 7));
    }

    #[test]
    fn inverse_round_trip() {
        let r = CyclotomicRing::new(5);
        let z = CycScalar::zeta_power(&r, 2);
        let x = z.add(&small_int(&r, 3));
        assert_eq!(x.mul(&x.inverse().unwrap()), CycScalar::one_in(&r));
    }
}
