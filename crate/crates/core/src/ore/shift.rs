//! The shift algebra `k[s]<T, T^-1>/(sT - T(s+1))`.
//!
//! Elements are kept in the normal form `Σ_j T^j p_j(s)`: powers of `T` on
//! the left, polynomials in `s` on the right. Moving a polynomial across a
//! power of `T` uses `p(s) T^b = T^b p(s + b)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalars::{format_rational, int, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ShiftOp {
    terms: BTreeMap<i64, Poly>,
}

impl ShiftOp {
    pub fn zero() -> Self {
        ShiftOp::default()
    }

    pub fn one() -> Self {
        ShiftOp::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        ShiftOp::from_poly(Poly::constant(c))
    }

    pub fn s() -> Self {
        ShiftOp::from_poly(Poly::s())
    }

    pub fn t() -> Self {
        ShiftOp::t_pow(1)
    }

    pub fn t_inv() -> Self {
        ShiftOp::t_pow(-1)
    }

    pub fn t_pow(j: i64) -> Self {
        ShiftOp::term(j, Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        ShiftOp::term(0, p)
    }

    /// `T^j · p(s)`.
    pub fn term(j: i64, p: Poly) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(j, p);
        }
        ShiftOp { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Poly)>) -> Self {
        let mut out = ShiftOp::zero();
        for (j, p) in terms {
            out.add_term(j, &p);
        }
        out
    }

    pub fn add_term(&mut self, j: i64, p: &Poly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(j).or_insert_with(Poly::zero);
        *slot = &*slot + p;
        if slot.is_zero() {
            self.terms.remove(&j);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Poly> {
        &self.terms
    }

    pub fn coeff(&self, j: i64) -> Poly {
        self.terms.get(&j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest and highest power of `T` present.
    pub fn t_range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn scale(&self, c: &Rational) -> ShiftOp {
        ShiftOp::from_terms(self.terms.iter().map(|(&j, p)| (j, p.scale(c))))
    }

    /// Integer powers; negative exponents only for pure powers of `T`.
    pub fn pow(&self, e: i64) -> Option<ShiftOp> {
        if e < 0 {
            let (lo, hi) = self.t_range()?;
            if lo != hi || !self.terms[&lo].is_constant() {
                return None;
            }
            let c = self.terms[&lo].coeff(0);
            let inv = Rational::one() / c;
            let mut acc = ShiftOp::one();
            for _ in 0..(-e) {
                acc = &acc * &ShiftOp::term(-lo, Poly::constant(inv.clone()));
            }
            return Some(acc);
        }
        let mut acc = ShiftOp::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Some(acc)
    }

    /// Left action on the Laurent monomial `x^m` via `s = x d/dx`, `T = x`:
    /// `Σ T^j p_j(s) · x^m = Σ p_j(m) x^{m+j}`. Faithful, so it serves as an
    /// independent check of the normal-form product.
    pub fn act_on_monomial(&self, m: i64) -> BTreeMap<i64, Rational> {
        let mut out = BTreeMap::new();
        for (&j, p) in &self.terms {
            let v = p.eval(&int(m));
            if !v.is_zero() {
                out.insert(m + j, v);
            }
        }
        out
    }

    pub(crate) fn format(&self) -> String {
        let mut pieces: Vec<(bool, String)> = Vec::new();
        for (&j, p) in &self.terms {
            for (k, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut factors = Vec::new();
                match j {
                    0 => {}
                    1 => factors.push("T".to_string()),
                    -1 => factors.push("Ti".to_string()),
                    j if j > 0 => factors.push(format!("T^{j}")),
                    j => factors.push(format!("Ti^{}", -j)),
                }
                match k {
                    0 => {}
                    1 => factors.push("s".to_string()),
                    k => factors.push(format!("s^{k}")),
                }
                pieces.push(monomial_piece(c, factors));
            }
        }
        join_pieces(pieces)
    }
}

/// `(negative, magnitude text)` for one printed monomial.
pub(crate) fn monomial_piece(c: &Rational, factors: Vec<String>) -> (bool, String) {
    let neg = c < &Rational::zero();
    let mag = if neg { -c.clone() } else { c.clone() };
    let text = if factors.is_empty() {
        format_rational(&mag)
    } else if mag.is_one() {
        factors.join("*")
    } else {
        format!("{}*{}", format_rational(&mag), factors.join("*"))
    };
    (neg, text)
}

pub(crate) fn join_pieces(pieces: Vec<(bool, String)>) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, text)) in pieces.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Add<&ShiftOp> for &ShiftOp {
    type Output = ShiftOp;
    fn add(self, rhs: &ShiftOp) -> ShiftOp {
        let mut out = self.clone();
        for (&j, p) in &rhs.terms {
            out.add_term(j, p);
        }
        out
    }
}

impl Sub<&ShiftOp> for &ShiftOp {
    type Output = ShiftOp;
    fn sub(self, rhs: &ShiftOp) -> ShiftOp {
        self + &(-rhs)
    }
}

impl Neg for &ShiftOp {
    type Output = ShiftOp;
    fn neg(self) -> ShiftOp {
        ShiftOp { terms: self.terms.iter().map(|(&j, p)| (j, -p)).collect() }
    }
}

/// `(T^a p(s)) (T^b q(s)) = T^{a+b} p(s+b) q(s)`.
impl Mul<&ShiftOp> for &ShiftOp {
    type Output = ShiftOp;
    fn mul(self, rhs: &ShiftOp) -> ShiftOp {
        let mut out = ShiftOp::zero();
        for (&b, q) in &rhs.terms {
            let shift = int(b);
            for (&a, p) in &self.terms {
                out.add_term(a + b, &(&p.shift(&shift) * q));
            }
        }
        out
    }
}

macro_rules! forward_shift {
    ($tr:ident, $m:ident) => {
        impl $tr<ShiftOp> for ShiftOp {
            type Output = ShiftOp;
            fn $m(self, rhs: ShiftOp) -> ShiftOp {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ShiftOp> for ShiftOp {
            type Output = ShiftOp;
            fn $m(self, rhs: &ShiftOp) -> ShiftOp {
                (&self).$m(rhs)
            }
        }
    };
}
forward_shift!(Add, add);
forward_shift!(Sub, sub);
forward_shift!(Mul, mul);

impl Neg for ShiftOp {
    type Output = ShiftOp;
    fn neg(self) -> ShiftOp {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> ShiftOp {
        ShiftOp::s()
    }
    fn t() -> ShiftOp {
        ShiftOp::t()
    }
    fn ti() -> ShiftOp {
        ShiftOp::t_inv()
    }
    fn c(n: i64) -> ShiftOp {
        ShiftOp::constant(int(n))
    }

    #[test]
    fn defining_relation() {
        // s·T = T·(s+1)
        assert_eq!(&s() * &t(), ShiftOp::term(1, Poly::from_ints(&[1, 1])));
        assert_eq!(&s() * &t() - &t() * &(s() + c(1)), ShiftOp::zero());
        assert_eq!(&t() * &ti(), ShiftOp::one());
        assert_eq!(&ti() * &t(), ShiftOp::one());
    }

    #[test]
    fn t_inverse_conjugation() {
        // T^-1 s = (s+1) T^-1, and the latter normalises to T^-1·s
        let lhs = &ti() * &s();
        assert_eq!(lhs, ShiftOp::term(-1, Poly::s()));
        assert_eq!(&(s() + c(1)) * &ti(), lhs);
    }

    /// Independent oracle: apply letters one at a time to x^m.
    fn apply_word(word: &[ShiftOp], m: i64) -> BTreeMap<i64, Rational> {
        let mut vec: BTreeMap<i64, Rational> = [(m, Rational::one())].into();
        for letter in word.iter().rev() {
            let mut next: BTreeMap<i64, Rational> = BTreeMap::new();
            for (e, coef) in &vec {
                for (k, v) in letter.act_on_monomial(*e) {
                    *next.entry(k).or_insert_with(Rational::zero) += coef * v;
                }
            }
            next.retain(|_, v| !v.is_zero());
            vec = next;
        }
        vec
    }

    #[test]
    fn cross_product_example() {
        // (T + s)(T - s) = T^2 + T - s^2
        let prod = &(t() + s()) * &(t() - s());
        let expected = ShiftOp::from_terms([
            (2, Poly::one()),
            (1, Poly::one()),
            (0, Poly::from_ints(&[0, 0, -1])),
        ]);
        assert_eq!(prod, expected);
        assert_eq!(prod.to_string(), "-s^2 + T + T^2");
        for m in -4..=4 {
            let lhs = prod.act_on_monomial(m);
            let a = t() + s();
            let b = t() - s();
            let mut rhs: BTreeMap<i64, Rational> = BTreeMap::new();
            for (k, v) in b.act_on_monomial(m) {
                for (k2, v2) in a.act_on_monomial(k) {
                    *rhs.entry(k2).or_insert_with(Rational::zero) += &v * v2;
                }
            }
            rhs.retain(|_, v| !v.is_zero());
            assert_eq!(lhs, rhs);
            assert_eq!(lhs, apply_word(&[t() + s(), t() - s()], m));
        }
    }

    #[test]
    fn negative_power() {
        let t2 = ShiftOp::t_pow(2).scale(&int(3));
        let inv = t2.pow(-1).unwrap();
        assert_eq!(&t2 * &inv, ShiftOp::one());
        assert!(s().pow(-1).is_none());
    }
}
