//! Weyl algebras in normal order (`x` powers left of `∂` powers): the
//! polynomial algebra of any rank and the rank-1 Laurent version on `G_m`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::shift::{join_pieces, monomial_piece};
use crate::error::{Error, Result};
use crate::scalars::{int, sign_power, Rational};

/// `C(n, k)` for `n >= 0`.
pub(crate) fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(i64::from(n - i)) / int(i64::from(i + 1));
    }
    acc
}

/// `c (c-1) ... (c-k+1)`, valid for negative `c`.
pub(crate) fn falling(c: i64, k: u32) -> Rational {
    (0..i64::from(k)).fold(Rational::one(), |acc, i| acc * int(c - i))
}

/// Multi-index monomial `x^α ∂^β`.
pub type WeylMonomial = (Vec<u32>, Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylOp {
    rank: usize,
    terms: BTreeMap<WeylMonomial, Rational>,
}

impl WeylOp {
    pub fn zero(rank: usize) -> Self {
        WeylOp { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        WeylOp::constant(rank, Rational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        WeylOp::monomial(rank, vec![0; rank], vec![0; rank], c)
    }

    pub fn monomial(rank: usize, alpha: Vec<u32>, beta: Vec<u32>, c: Rational) -> Self {
        assert!(alpha.len() == rank && beta.len() == rank, "multi-index length must equal rank");
        let mut out = WeylOp::zero(rank);
        out.add_term((alpha, beta), c);
        out
    }

    /// The coordinate `x_i` (0-based).
    pub fn x(rank: usize, i: usize) -> Self {
        let mut a = vec![0; rank];
        a[i] = 1;
        WeylOp::monomial(rank, a, vec![0; rank], Rational::one())
    }

    /// The derivation `∂_i` (0-based).
    pub fn d(rank: usize, i: usize) -> Self {
        let mut b = vec![0; rank];
        b[i] = 1;
        WeylOp::monomial(rank, vec![0; rank], b, Rational::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<WeylMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> WeylOp {
        let mut out = WeylOp::zero(self.rank);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn try_mul(&self, other: &WeylOp) -> Result<WeylOp> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = WeylOp::zero(self.rank);
        for ((a, b), c1) in &self.terms {
            for ((g, e), c2) in &other.terms {
                mono_product(a, b, g, e, &(c1 * c2), &mut out);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &WeylOp) -> Result<WeylOp> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> WeylOp {
        (0..e).fold(WeylOp::one(self.rank), |acc, _| &acc * self)
    }

    /// Total `x`-degree and `∂`-degree bounds.
    pub fn bidegree(&self) -> (u32, u32) {
        self.terms.keys().fold((0, 0), |(da, db), (a, b)| {
            (da.max(a.iter().sum()), db.max(b.iter().sum()))
        })
    }

    /// Action on a polynomial `Σ c_e x^e` (rank 1 only); the faithful
    /// representation used as a product oracle.
    pub fn act_on_poly(&self, p: &BTreeMap<u32, Rational>) -> BTreeMap<u32, Rational> {
        assert_eq!(self.rank, 1, "polynomial action implemented for rank 1");
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for (&e, v) in p {
                if e < b[0] {
                    continue;
                }
                let coef = c * v * falling(i64::from(e), b[0]);
                let slot = out.entry(e - b[0] + a[0]).or_insert_with(Rational::zero);
                *slot += coef;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn format(&self) -> String {
        let names = |base: &str, i: usize| {
            if self.rank == 1 {
                base.to_string()
            } else {
                format!("{base}{}", i + 1)
            }
        };
        let pieces = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let mut factors = Vec::new();
                for (i, &e) in a.iter().enumerate() {
                    push_power(&mut factors, &names("x", i), i64::from(e));
                }
                for (i, &e) in b.iter().enumerate() {
                    push_power(&mut factors, &names("dx", i), i64::from(e));
                }
                monomial_piece(c, factors)
            })
            .collect();
        join_pieces(pieces)
    }
}

pub(crate) fn push_power(factors: &mut Vec<String>, name: &str, e: i64) {
    match e {
        0 => {}
        1 => factors.push(name.to_string()),
        e => factors.push(format!("{name}^{e}")),
    }
}

/// `c · x^a ∂^b · x^g ∂^e`, using `∂^b x^g = Σ_k C(b,k) g^(k) x^{g-k} ∂^{b-k}`
/// coordinatewise.
fn mono_product(a: &[u32], b: &[u32], g: &[u32], e: &[u32], c: &Rational, out: &mut WeylOp) {
    let d = a.len();
    let mut ks = vec![0u32; d];
    loop {
        let mut coef = c.clone();
        for i in 0..d {
            coef *= binomial(b[i], ks[i]) * falling(i64::from(g[i]), ks[i]);
        }
        if !coef.is_zero() {
            let alpha = (0..d).map(|i| a[i] + g[i] - ks[i]).collect();
            let beta = (0..d).map(|i| b[i] + e[i] - ks[i]).collect();
            out.add_term((alpha, beta), coef);
        }
        // odometer over 0 <= k_i <= min(b_i, g_i)
        let mut i = 0;
        loop {
            if i == d {
                return;
            }
            if ks[i] < b[i].min(g[i]) {
                ks[i] += 1;
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// Panics on rank mismatch; use [`WeylOp::try_mul`] for checked products.
impl Mul<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        self.try_mul(rhs).expect("Weyl operators of different rank")
    }
}

impl Add<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        self.try_add(rhs).expect("Weyl operators of different rank")
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        self.scale(&-Rational::one())
    }
}

impl Sub<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self + &(-rhs)
    }
}

/// Rank-1 operators with Laurent polynomial coefficients, `Σ c_{ab} x^a ∂^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentWeylOp {
    terms: BTreeMap<(i64, u32), Rational>,
}

impl LaurentWeylOp {
    pub fn zero() -> Self {
        LaurentWeylOp::default()
    }

    pub fn one() -> Self {
        LaurentWeylOp::monomial(0, 0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentWeylOp::monomial(0, 0, c)
    }

    pub fn monomial(a: i64, b: u32, c: Rational) -> Self {
        let mut out = LaurentWeylOp::zero();
        out.add_term(a, b, c);
        out
    }

    pub fn x_pow(a: i64) -> Self {
        LaurentWeylOp::monomial(a, 0, Rational::one())
    }

    pub fn d() -> Self {
        LaurentWeylOp::monomial(0, 1, Rational::one())
    }

    /// The Euler operator `x∂`.
    pub fn euler() -> Self {
        LaurentWeylOp::monomial(1, 1, Rational::one())
    }

    pub fn from_weyl(w: &WeylOp) -> Result<Self> {
        if w.rank() != 1 {
            return Err(Error::RankMismatch { left: w.rank(), right: 1 });
        }
        let mut out = LaurentWeylOp::zero();
        for ((a, b), c) in w.terms() {
            out.add_term(i64::from(a[0]), b[0], c.clone());
        }
        Ok(out)
    }

    /// `None` if a negative power of `x` occurs.
    pub fn to_weyl(&self) -> Option<WeylOp> {
        let mut out = WeylOp::zero(1);
        for (&(a, b), c) in &self.terms {
            out.add_term((vec![u32::try_from(a).ok()?], vec![b]), c.clone());
        }
        Some(out)
    }

    pub fn terms(&self) -> &BTreeMap<(i64, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: i64, b: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn scale(&self, c: &Rational) -> LaurentWeylOp {
        let mut out = LaurentWeylOp::zero();
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> LaurentWeylOp {
        (0..e).fold(LaurentWeylOp::one(), |acc, _| &acc * self)
    }

    /// Action on a Laurent polynomial `Σ c_e x^e`.
    pub fn act_on_laurent(&self, p: &BTreeMap<i64, Rational>) -> BTreeMap<i64, Rational> {
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            for (&e, v) in p {
                let coef = c * v * falling(e, b);
                if coef.is_zero() {
                    continue;
                }
                *out.entry(e - i64::from(b) + a).or_insert_with(Rational::zero) += coef;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn format(&self) -> String {
        let pieces = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut factors = Vec::new();
                push_power(&mut factors, "x", a);
                push_power(&mut factors, "dx", i64::from(b));
                monomial_piece(c, factors)
            })
            .collect();
        join_pieces(pieces)
    }
}

impl fmt::Display for LaurentWeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Mul<&LaurentWeylOp> for &LaurentWeylOp {
    type Output = LaurentWeylOp;
    fn mul(self, rhs: &LaurentWeylOp) -> LaurentWeylOp {
        let mut out = LaurentWeylOp::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(g, e), c2) in &rhs.terms {
                let c = c1 * c2;
                for k in 0..=b {
                    let coef = &c * binomial(b, k) * falling(g, k);
                    out.add_term(a + g - i64::from(k), b + e - k, coef);
                }
            }
        }
        out
    }
}

impl Add<&LaurentWeylOp> for &LaurentWeylOp {
    type Output = LaurentWeylOp;
    fn add(self, rhs: &LaurentWeylOp) -> LaurentWeylOp {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Neg for &LaurentWeylOp {
    type Output = LaurentWeylOp;
    fn neg(self) -> LaurentWeylOp {
        self.scale(&sign_power(1))
    }
}

impl Sub<&LaurentWeylOp> for &LaurentWeylOp {
    type Output = LaurentWeylOp;
    fn sub(self, rhs: &LaurentWeylOp) -> LaurentWeylOp {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> WeylOp {
        WeylOp::x(1, 0)
    }
    fn d() -> WeylOp {
        WeylOp::d(1, 0)
    }

    #[test]
    fn commutation_examples() {
        assert_eq!((&d() * &x()).to_string(), "1 + x*dx");
        assert_eq!((&x() * &d()).to_string(), "x*dx");
        assert_eq!((&d().pow(2) * &x()).to_string(), "2*dx + x*dx^2");
    }

    #[test]
    fn distinct_coordinates_commute() {
        let x1 = WeylOp::x(2, 0);
        let d2 = WeylOp::d(2, 1);
        assert_eq!(&d2 * &x1, &x1 * &d2);
        let d1 = WeylOp::d(2, 0);
        assert_eq!((&(&d1 * &x1) - &(&x1 * &d1)), WeylOp::one(2));
        assert!(x1.try_mul(&x()).is_err());
    }

    #[test]
    fn product_agrees_with_action() {
        let a = &(&d().pow(3) + &x().pow(2)) - &WeylOp::constant(1, int(2));
        let b = &(&x().pow(2) * &d()) + &d().pow(2);
        let ab = &a * &b;
        for e in 0..6u32 {
            let p: BTreeMap<u32, Rational> = [(e, Rational::one())].into();
            assert_eq!(ab.act_on_poly(&p), a.act_on_poly(&b.act_on_poly(&p)));
        }
    }

    #[test]
    fn laurent_product_agrees_with_action() {
        let xi = LaurentWeylOp::x_pow(-1);
        let dd = LaurentWeylOp::d();
        let a = &(&dd * &xi) + &LaurentWeylOp::x_pow(2);
        let b = &(&xi.pow(2) * &dd.pow(2)) - &LaurentWeylOp::euler();
        let ab = &a * &b;
        for e in -4..5 {
            let p: BTreeMap<i64, Rational> = [(e, Rational::one())].into();
            assert_eq!(ab.act_on_laurent(&p), a.act_on_laurent(&b.act_on_laurent(&p)));
        }
        assert_eq!(&LaurentWeylOp::x_pow(1) * &xi, LaurentWeylOp::one());
        // ∂ x^-1 = x^-1 ∂ - x^-2
        assert_eq!((&dd * &xi).to_string(), "-x^-2 + x^-1*dx");
    }
}
