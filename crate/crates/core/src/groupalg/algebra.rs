//! Elements of `(Z/ℓ^r)[Z/n]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::residue::ResidueRing;

/// `Σ_i c_i t^i` with `t^n = 1`, coefficients reduced mod `ℓ^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElem {
    ring: ResidueRing,
    coeffs: Vec<u64>,
}

impl GroupAlgebraElem {
    pub fn new(ring: ResidueRing, coeffs: &[i64]) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("group order must be positive".into()));
        }
        Ok(GroupAlgebraElem { ring, coeffs: coeffs.iter().map(|&c| ring.reduce(c)).collect() })
    }

    pub fn zero(ring: ResidueRing, n: usize) -> Self {
        assert!(n > 0, "group order must be positive");
        GroupAlgebraElem { ring, coeffs: vec![0; n] }
    }

    pub fn one(ring: ResidueRing, n: usize) -> Self {
        GroupAlgebraElem::t_pow(ring, n, 0)
    }

    /// `t^k`.
    pub fn t_pow(ring: ResidueRing, n: usize, k: i64) -> Self {
        let mut e = GroupAlgebraElem::zero(ring, n);
        e.coeffs[k.rem_euclid(n as i64) as usize] = 1 % ring.modulus();
        e
    }

    /// `Σ_{i<n} t^i`.
    pub fn norm_element(ring: ResidueRing, n: usize) -> Self {
        GroupAlgebraElem { ring, coeffs: vec![1 % ring.modulus(); n] }
    }

    /// Element with index `code` in base `ℓ^r`, coefficient of `t^0` least
    /// significant.
    pub fn from_code(ring: ResidueRing, n: usize, mut code: u64) -> Self {
        let m = ring.modulus();
        let coeffs = (0..n)
            .map(|_| {
                let c = code % m;
                code /= m;
                c
            })
            .collect();
        GroupAlgebraElem { ring, coeffs }
    }

    pub fn code(&self) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * self.ring.modulus() + c)
    }

    pub fn ring(&self) -> ResidueRing {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: i64) -> u64 {
        self.coeffs[i.rem_euclid(self.n() as i64) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.n() != other.n() {
            return Err(Error::ParameterMismatch(format!(
                "(Z/{})[Z/{}] vs (Z/{})[Z/{}]",
                self.ring.modulus(),
                self.n(),
                other.ring.modulus(),
                other.n()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.ring.modulus();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % m).collect();
        Ok(GroupAlgebraElem { ring: self.ring, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let m = self.ring.modulus();
        GroupAlgebraElem { ring: self.ring, coeffs: self.coeffs.iter().map(|&c| (m - c) % m).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        let m = self.ring.modulus();
        let c = self.ring.reduce(c);
        GroupAlgebraElem { ring: self.ring, coeffs: self.coeffs.iter().map(|&a| a * c % m).collect() }
    }

    /// Convolution on `Z/n`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (n, m) = (self.n(), self.ring.modulus());
        let mut coeffs = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                coeffs[k] = (coeffs[k] + a * b) % m;
            }
        }
        Ok(GroupAlgebraElem { ring: self.ring, coeffs })
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> u64 {
        self.coeffs.iter().fold(0, |acc, &c| (acc + c) % self.ring.modulus())
    }

    /// Image under `Z/n → Z/n_target`.
    pub fn transition(&self, n_target: usize) -> Result<Self> {
        if n_target == 0 || self.n() % n_target != 0 {
            return Err(Error::InvalidParameter(format!("{n_target} does not divide {}", self.n())));
        }
        let m = self.ring.modulus();
        let mut coeffs = vec![0u64; n_target];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n_target] = (coeffs[i % n_target] + c) % m;
        }
        Ok(GroupAlgebraElem { ring: self.ring, coeffs })
    }

    /// Matrix of multiplication by `self` in the basis `t^0, …, t^{n-1}`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        (0..n)
            .map(|row| (0..n).map(|col| self.coeffs[(row + n - col) % n]).collect())
            .collect()
    }

    /// Units are exactly the elements whose reduction mod `ℓ` is a unit of
    /// `F_ℓ[Z/n]`, detected by a nonzero determinant mod `ℓ`.
    pub fn is_unit(&self) -> bool {
        let ell = self.ring.ell();
        let mut a: Vec<Vec<u64>> = self
            .multiplication_matrix()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c % ell).collect())
            .collect();
        det_mod_prime_nonzero(&mut a, ell)
    }

    pub fn summary(&self) -> ElemSummary {
        ElemSummary { modulus: self.ring.modulus(), n: self.n(), coeffs: self.coeffs.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElemSummary {
    pub modulus: u64,
    pub n: usize,
    pub coeffs: Vec<u64>,
}

fn det_mod_prime_nonzero(a: &mut [Vec<u64>], p: u64) -> bool {
    let n = a.len();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return false;
        };
        a.swap(col, piv);
        let inv = pow_mod(a[col][col], p - 2, p);
        for r in col + 1..n {
            let f = a[r][col] * inv % p;
            if f == 0 {
                continue;
            }
            for c in col..n {
                a[r][c] = (a[r][c] + p * p - f * a[col][c] % p) % p;
            }
        }
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Generators of `{x : A x = 0}` over `Z/ℓ^r`, for `A` with `cols` columns.
///
/// `Z/ℓ^r` is a local principal ideal ring, so pivoting on an entry of
/// minimal valuation diagonalises `A`; the column operations are tracked to
/// pull the diagonal kernel back.
pub fn kernel_mod(ring: ResidueRing, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let m = ring.modulus();
    let mut a: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|c| c % m).collect()).collect();
    let rows = a.len();
    let mut v: Vec<Vec<u64>> = (0..cols).map(|i| (0..cols).map(|j| u64::from(i == j)).collect()).collect();
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, &c) in row.iter().enumerate().skip(k) {
                if c != 0 {
                    let val = ring.valuation(c);
                    if best.is_none_or(|(b, _, _)| val < b) {
                        best = Some((val, i, j));
                    }
                }
            }
        }
        let Some((val, pi, pj)) = best else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for row in v.iter_mut() {
            row.swap(k, pj);
        }
        // pivot = ℓ^val · unit; normalise the pivot column to ℓ^val
        let unit = a[k][k] / ring.ell().pow(val);
        let uinv = ring.inv(unit).expect("unit part");
        for row in a.iter_mut() {
            row[k] = row[k] * uinv % m;
        }
        for row in v.iter_mut() {
            row[k] = row[k] * uinv % m;
        }
        let piv = a[k][k];
        for i in 0..rows {
            if i != k && a[i][k] != 0 {
                let f = a[i][k] / piv;
                for j in 0..cols {
                    a[i][j] = (a[i][j] + m * m - f * a[k][j] % m) % m;
                }
            }
        }
        for j in 0..cols {
            if j != k && a[k][j] != 0 {
                let f = a[k][j] / piv;
                for i in 0..rows {
                    a[i][j] = (a[i][j] + m * m - f * a[i][k] % m) % m;
                }
                for row in v.iter_mut() {
                    row[j] = (row[j] + m * m - f * row[k] % m) % m;
                }
            }
        }
        diag.push(val);
        k += 1;
    }
    let mut gens = Vec::new();
    for j in 0..cols {
        let scale = match diag.get(j) {
            Some(&val) if val >= ring.r() => 1,
            Some(&val) => ring.ell().pow(ring.r() - val),
            None => 1,
        };
        if scale % m == 0 {
            continue;
        }
        gens.push((0..cols).map(|i| v[i][j] * scale % m).collect());
    }
    gens
}

impl fmt::Display for GroupAlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
        .and_then(|_| write!(f, " in (Z/{})[Z/{}]", self.ring.modulus(), self.n()))
    }
}
