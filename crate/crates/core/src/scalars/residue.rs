//! Residue rings `Z/ℓ^r`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueRing {
    ell: u64,
    r: u32,
    modulus: u64,
}

impl ResidueRing {
    pub fn new(ell: u64, r: u32) -> Result<Self> {
        if ell < 2 || !(2..ell).take_while(|d| d * d <= ell).all(|d| ell % d != 0) {
            return Err(Error::InvalidParameter(format!("ℓ = {ell} is not prime")));
        }
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        let modulus = ell
            .checked_pow(r)
            .filter(|&m| m <= u32::MAX as u64)
            .ok_or_else(|| Error::SizeGuard(format!("{ell}^{r} too large")))?;
        Ok(ResidueRing { ell, r, modulus })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elem(&self, v: i64) -> ResidueRingElem {
        ResidueRingElem { ring: *self, value: v.rem_euclid(self.modulus as i64) as u64 }
    }

    #[inline]
    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }

    /// ℓ-adic valuation of a residue, `r` for zero.
    pub fn valuation(&self, mut v: u64) -> u32 {
        v %= self.modulus;
        if v == 0 {
            return self.r;
        }
        let mut k = 0;
        while v % self.ell == 0 {
            v /= self.ell;
            k += 1;
        }
        k
    }

    pub fn is_unit(&self, v: u64) -> bool {
        v % self.ell != 0
    }

    pub fn inv(&self, v: u64) -> Option<u64> {
        if !self.is_unit(v) {
            return None;
        }
        let m = self.modulus as i128;
        let (mut a, mut b) = ((v as i128) % m, m);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Some(x0.rem_euclid(m) as u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueRingElem {
    ring: ResidueRing,
    value: u64,
}

impl ResidueRingElem {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.ring, o.ring, "residue ring mismatch");
        ResidueRingElem { ring: self.ring, value: (self.value + o.value) % self.ring.modulus }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.ring, o.ring, "residue ring mismatch");
        ResidueRingElem {
            ring: self.ring,
            value: (self.value + self.ring.modulus - o.value) % self.ring.modulus,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ring, o.ring, "residue ring mismatch");
        ResidueRingElem { ring: self.ring, value: (self.value * o.value) % self.ring.modulus }
    }

    pub fn inv(&self) -> Option<Self> {
        self.ring.inv(self.value).map(|value| ResidueRingElem { ring: self.ring, value })
    }
}

impl fmt::Display for ResidueRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.ring.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_nine() {
        let r = ResidueRing::new(3, 2).unwrap();
        let a = r.elem(7);
        assert_eq!(a.mul(&a.inv().unwrap()).value(), 1);
        assert!(r.elem(6).inv().is_none());
        assert_eq!(r.valuation(18), 2);
        assert_eq!(r.valuation(3), 1);
        assert_eq!(r.elem(-1).value(), 8);
        assert!(ResidueRing::new(4, 1).is_err());
    }
}
