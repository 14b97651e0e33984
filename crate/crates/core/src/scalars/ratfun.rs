//! Rational functions in `s` and their partial-fraction decomposition.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{poly_gcd, Poly};
use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// `numerator / denominator`, coprime, denominator monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun { num, den: Poly::one() };
        }
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading();
        let inv = Rational::one() / lc;
        RatFun { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    /// `c / (s - a)^k`.
    pub fn pole(c: Rational, a: &Rational, k: u32) -> Self {
        RatFun::new(Poly::constant(c), Poly::linear(a).pow(k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Option<RatFun> {
        (!self.is_zero()).then(|| RatFun::new(self.den.clone(), self.num.clone()))
    }

    /// `f(s + c)`.
    pub fn shift(&self, c: &Rational) -> RatFun {
        RatFun::new(self.num.shift(c), self.den.shift(c))
    }

    /// `f(-s)`.
    pub fn reflect(&self) -> RatFun {
        RatFun::new(self.num.reflect(), self.den.reflect())
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        RatFun::new(self.num.scale(c), self.den.clone())
    }

    /// Order of vanishing at `a`; negative for poles. `i64::MAX` for zero.
    pub fn valuation(&self, a: &Rational) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        self.num.root_multiplicity(a) as i64 - self.den.root_multiplicity(a) as i64
    }

    /// Value at a point that is not a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// First `n` Taylor coefficients at `a`; requires `valuation(a) >= 0`.
    pub fn taylor(&self, a: &Rational, n: usize) -> Option<Vec<Rational>> {
        if self.valuation(a) < 0 {
            return None;
        }
        let num = self.num.taylor(a);
        let den = self.den.taylor(a);
        Some(series_div(&num, &den, n))
    }

    /// Distinct rational roots of the denominator, ascending.
    pub fn poles(&self) -> Vec<Rational> {
        rational_roots(&self.den)
    }
}

/// Truncated power-series quotient `num / den`, with `den[0] != 0`.
fn series_div(num: &[Rational], den: &[Rational], n: usize) -> Vec<Rational> {
    let d0_inv = Rational::one() / &den[0];
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k {
            if let Some(dj) = den.get(j) {
                acc -= dj * &out[k - j];
            }
        }
        out.push(acc * &d0_inv);
    }
    out
}

fn integer_content(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

fn small_factorisation(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= n && d <= limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in small_factorisation(n) {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Distinct rational roots by the rational root test on the square-free part.
///
/// Constant terms are factored by trial division up to 10^6; a cofactor with
/// two large prime factors can hide a root, which callers surface as an
/// unsupported-input error.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let sqfree = p
        .div_exact(&poly_gcd(p, &p.derivative()))
        .expect("gcd with derivative divides");
    let mut q = sqfree;
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        q = q.div_exact(&Poly::s()).expect("s divides");
    }
    // peel small integer roots first so the divisor search runs on a small cofactor
    for k in (1..=64i64).flat_map(|k| [k, -k]) {
        if q.degree().unwrap_or(0) == 0 {
            break;
        }
        let c = Rational::from_integer(BigInt::from(k));
        if q.eval(&c).is_zero() {
            q = q.div_exact(&Poly::linear(&c)).expect("root divides");
            roots.push(c);
        }
    }
    if q.degree().unwrap_or(0) > 0 {
        let ints = integer_content(&q);
        let a0 = ints[0].clone();
        let an = ints.last().cloned().expect("nonzero");
        let at_one: BigInt = ints.iter().sum();
        let at_minus_one: BigInt = ints
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .sum();
        let nums = divisors(&a0);
        let dens = divisors(&an);
        for pn in &nums {
            for qd in &dens {
                if !pn.gcd(qd).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let num = pn * BigInt::from(sign);
                    // (q - p) | P(1) and (q + p) | P(-1) for a root p/q
                    let qmp = qd - &num;
                    if !qmp.is_zero() && !(&at_one % &qmp).is_zero() {
                        continue;
                    }
                    let qpp = qd + &num;
                    if !qpp.is_zero() && !(&at_minus_one % &qpp).is_zero() {
                        continue;
                    }
                    let cand = Rational::new(num, qd.clone());
                    if q.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Principal part at one pole: `sum_k coeffs[k-1] / (s - pole)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolePart {
    pub pole: Rational,
    pub coeffs: Vec<Rational>,
}

impl PolePart {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_ratfun(&self) -> RatFun {
        self.coeffs
            .iter()
            .enumerate()
            .fold(RatFun::zero(), |acc, (k, c)| {
                &acc + &RatFun::pole(c.clone(), &self.pole, k as u32 + 1)
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial: Poly,
    pub parts: Vec<PolePart>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatFun {
        self.parts
            .iter()
            .fold(RatFun::from_poly(self.polynomial.clone()), |acc, p| &acc + &p.to_ratfun())
    }
}

/// Splits `f` into polynomial part plus principal parts at its rational poles.
pub fn partial_fractions(f: &RatFun) -> Result<PartialFractions> {
    let (polynomial, _) = f.num.div_rem(&f.den);
    let poles = f.poles();
    let mut remaining = f.den.clone();
    let mut parts = Vec::with_capacity(poles.len());
    for a in poles {
        let m = f.den.root_multiplicity(&a);
        let lin_m = Poly::linear(&a).pow(m);
        remaining = remaining.div_exact(&lin_m).expect("pole factor divides");
        // f = g / ((s-a)^m h): expand g/h at a to order m
        let h = f.den.div_exact(&lin_m).expect("pole factor divides");
        let e = series_div(&f.num.taylor(&a), &h.taylor(&a), m as usize);
        let mut coeffs: Vec<Rational> = e.into_iter().rev().collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        parts.push(PolePart { pole: a, coeffs });
    }
    if !remaining.is_constant() {
        return Err(Error::Unsupported(format!(
            "denominator factor {remaining} has no rational root"
        )));
    }
    Ok(PartialFractions { polynomial, parts })
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFun> for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "rational function division by zero");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! forward_ratfun {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_ratfun!(Add, add);
forward_ratfun!(Sub, sub);
forward_ratfun!(Mul, mul);
forward_ratfun!(Div, div);

impl fmt::Display for PolePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let base = Poly::linear(&self.pole);
                if k == 0 {
                    format!("{}/({})", format_rational(c), base)
                } else {
                    format!("{}/({})^{}", format_rational(c), base, k + 1)
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
