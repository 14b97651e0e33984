//! Small finite fields `F_q`, `q = p^e`, with table-driven arithmetic.
//!
//! Elements are indexed by `0..q`: the index of `c_0 + c_1 x + ... ` is
//! `c_0 + c_1 p + ...`. The modulus is the irreducible monic polynomial of
//! degree `e` with the smallest such index, so tables are reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Guard for table sizes.
pub const MAX_FIELD_ORDER: u64 = 1024;

#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    generator: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn digits(mut x: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo monic `m` over `F_p` (ascending coefficients).
fn poly_rem_mod_p(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let top = r.pop().unwrap_or(0);
        if top == 0 {
            continue;
        }
        let base = r.len() - dm;
        for (j, &mj) in m[..dm].iter().enumerate() {
            r[base + j] = (r[base + j] + p - (top * mj) % p) % p;
        }
    }
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let e = m.len() - 1;
    for d in 1..=e / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut f = digits(idx, p, d as u32);
            f.push(1);
            let r = poly_rem_mod_p(m, &f, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u32, e: u32) -> Result<Arc<Self>> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        let q64 = (p as u64).pow(e);
        if q64 > MAX_FIELD_ORDER {
            return Err(Error::SizeGuard(format!("field order {q64} above {MAX_FIELD_ORDER}")));
        }
        let q = q64 as u32;
        let modulus = (0..q)
            .map(|idx| {
                let mut m = digits(idx, p, e);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let qu = q as usize;
        let mut add = vec![0; qu * qu];
        let mut mul = vec![0; qu * qu];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p);
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = poly_rem_mod_p(&prod, &modulus, p);
                let mut r = r;
                r.resize(e as usize, 0);
                mul[(a * q + b) as usize] = undigits(&r, p);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).expect("additive inverse"))
            .collect();
        let inv: Vec<u32> = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[(a * q + b) as usize] == 1).expect("field inverse")
                }
            })
            .collect();
        let order = |g: u32| {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = mul[(x * q + g) as usize];
                k += 1;
            }
            k
        };
        let generator = (1..q).find(|&g| order(g) == q - 1).expect("cyclic multiplicative group");
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; qu];
        let mut x = 1;
        for k in 0..q - 1 {
            exp[k as usize] = x;
            log[x as usize] = k;
            x = mul[(x * q + generator) as usize];
        }
        Ok(Arc::new(FiniteField { p, e, q, modulus, add, mul, neg, inv, generator, log, exp }))
    }

    /// `F_q` for a prime power `q`.
    pub fn of_order(q: u32) -> Result<Arc<Self>> {
        for p in 2..=q {
            if q % p == 0 {
                let mut e = 0;
                let mut r = q;
                while r % p == 0 {
                    r /= p;
                    e += 1;
                }
                if r != 1 {
                    break;
                }
                return FiniteField::new(p, e);
            }
        }
        Err(Error::InvalidParameter(format!("{q} is not a prime power")))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero element.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_q");
        self.inv[a as usize]
    }

    /// Discrete log to the base of the fixed generator.
    pub fn log(&self, a: u32) -> u32 {
        assert!(a != 0, "log of zero");
        self.log[a as usize]
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        self.exp(self.log(a) as u64 * k)
    }

    pub fn from_integer(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Absolute trace to `F_p`, returned as an integer in `0..p`.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.e {
            acc = self.add(acc, x);
            x = self.pow(x, self.p as u64);
        }
        debug_assert!(acc < self.p, "trace lies in the prime field");
        acc
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn element(self: &Arc<Self>, value: u32) -> FqElement {
        assert!(value < self.q, "element index out of range");
        FqElement { field: self.clone(), value }
    }

    pub fn format_element(&self, a: u32) -> String {
        if self.e == 1 {
            return a.to_string();
        }
        let d = digits(a, self.p, self.e);
        let terms: Vec<String> = d
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// An element together with its field.
#[derive(Clone, Debug)]
pub struct FqElement {
    field: Arc<FiniteField>,
    value: u32,
}

impl FqElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<FqElement> {
        (self.value != 0).then(|| self.field.element(self.field.inv(self.value)))
    }

    pub fn pow(&self, k: u64) -> FqElement {
        self.field.element(self.field.pow(self.value, k))
    }

    fn same_field(&self, other: &FqElement) {
        assert!(Arc::ptr_eq(&self.field, &other.field) || self.field == other.field, "field mismatch");
    }
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field.q == other.field.q
    }
}

impl Eq for FqElement {}

impl Add for &FqElement {
    type Output = FqElement;
    fn add(self, rhs: &FqElement) -> FqElement {
        self.same_field(rhs);
        self.field.element(self.field.add(self.value, rhs.value))
    }
}

impl Sub for &FqElement {
    type Output = FqElement;
    fn sub(self, rhs: &FqElement) -> FqElement {
        self.same_field(rhs);
        self.field.element(self.field.sub(self.value, rhs.value))
    }
}

impl Mul for &FqElement {
    type Output = FqElement;
    fn mul(self, rhs: &FqElement) -> FqElement {
        self.same_field(rhs);
        self.field.element(self.field.mul(self.value, rhs.value))
    }
}

impl Neg for &FqElement {
    type Output = FqElement;
    fn neg(self) -> FqElement {
        self.field.element(self.field.neg(self.value))
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_tables() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.neg(2), 5);
        assert_eq!(f.generator(), 3);
        assert_eq!(f.trace(4), 4);
    }

    #[test]
    fn extension_field_axioms() {
        for (p, e) in [(2, 2), (2, 3), (3, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            let q = f.order();
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
            // trace is additive and surjective onto F_p
            let mut hit = vec![false; p as usize];
            for a in 0..q {
                hit[f.trace(a) as usize] = true;
                for b in 0..q {
                    assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % p);
                }
            }
            assert!(hit.iter().all(|&h| h));
        }
    }

    #[test]
    fn deterministic_modulus() {
        // x^2 + 1 is the first irreducible quadratic over F_3 in index order
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // x^2 + x + 1 over F_2
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn element_wrapper() {
        let f = FiniteField::of_order(9).unwrap();
        let a = f.element(4);
        let b = a.inv().unwrap();
        assert_eq!((&a * &b).value(), 1);
        assert!(FiniteField::of_order(12).is_err());
    }
}
