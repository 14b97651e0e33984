//! Local fibers `M ⊗ k[s]/(s-a)^n` and families of them along an orbit
//! `χ + Z`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{format_rational, frac, int, Rational};

/// Direct sum of cyclic modules `k[s]/(s-a)^{e_j}`, `0 < e_j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalModule {
    point: Rational,
    n: u32,
    exponents: Vec<u32>,
    generators: Vec<String>,
}

impl LocalModule {
    /// Summands with exponent 0 are dropped; exponents are capped at `n`.
    pub fn new(point: Rational, n: u32, parts: impl IntoIterator<Item = (u32, String)>) -> Self {
        let (exponents, generators) = parts
            .into_iter()
            .filter(|(e, _)| *e > 0)
            .map(|(e, g)| (e.min(n), g))
            .unzip();
        LocalModule { point, n, exponents, generators }
    }

    pub fn zero(point: Rational, n: u32) -> Self {
        LocalModule { point, n, exponents: Vec::new(), generators: Vec::new() }
    }

    pub fn free_rank_one(point: Rational, n: u32, generator: String) -> Self {
        LocalModule::new(point, n, [(n, generator)])
    }

    pub fn point(&self) -> &Rational {
        &self.point
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Dimension over `k`.
    pub fn dimension(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Rank if free over `k[s]/(s-a)^n`.
    pub fn free_rank(&self) -> Option<usize> {
        self.exponents.iter().all(|&e| e == self.n).then_some(self.exponents.len())
    }

    /// Sorted exponents, the isomorphism invariant.
    pub fn invariant(&self) -> Vec<u32> {
        let mut e = self.exponents.clone();
        e.sort_unstable();
        e
    }

    /// `k[s]/(s-a)^e ⊗ k[s]/(s-a)^f = k[s]/(s-a)^{min(e,f)}`; disjoint points give 0.
    pub fn tensor(&self, other: &LocalModule) -> LocalModule {
        let n = self.n.min(other.n);
        if self.point != other.point {
            return LocalModule::zero(self.point.clone(), n);
        }
        let mut parts = Vec::new();
        for (e, g) in self.exponents.iter().zip(&self.generators) {
            for (f, h) in other.exponents.iter().zip(&other.generators) {
                parts.push(((*e).min(*f), format!("{g} (x) {h}")));
            }
        }
        LocalModule::new(self.point.clone(), n, parts)
    }

    pub fn summary(&self) -> FiberSummary {
        FiberSummary {
            point: format_rational(&self.point),
            exponents: self.exponents.clone(),
            generators: self.generators.clone(),
            free_rank: self.free_rank(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberSummary {
    pub point: String,
    pub exponents: Vec<u32>,
    pub generators: Vec<String>,
    pub free_rank: Option<usize>,
}

/// Truncated power series product in `k[[s-a]]/(s-a)^n`.
pub fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a unit in `k[[s-a]]/(s-a)^n`.
pub fn series_inv(a: &[Rational], n: usize) -> Option<Vec<Rational>> {
    let a0 = a.first().filter(|c| !c.is_zero())?;
    let inv0 = a0.recip();
    let mut out = vec![Rational::zero(); n];
    if n == 0 {
        return Some(out);
    }
    out[0] = inv0.clone();
    for k in 1..n {
        let mut acc = Rational::zero();
        for j in 1..=k {
            if let Some(c) = a.get(j) {
                acc += c * &out[k - j];
            }
        }
        out[k] = -acc * &inv0;
    }
    Some(out)
}

/// Representative of `χ + Z` in `[0, 1)`.
pub fn normalize_chi(chi: &Rational) -> Rational {
    frac(chi)
}

/// Fibers along `χ + i`, `|i| <= radius`, with shift maps from fiber `i`
/// to fiber `i+1` given by the right action of `T^-1`. On rank-1 free
/// neighbours the map sends generator `i` to `u_i` times generator `i+1`;
/// `u_i` is stored as Taylor coefficients at `χ + i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkyscraperFamily {
    chi: Rational,
    n: u32,
    radius: i64,
    fibers: Vec<LocalModule>,
    shifts: Vec<Option<Vec<Rational>>>,
}

impl SkyscraperFamily {
    pub fn new(
        chi: Rational,
        n: u32,
        radius: i64,
        fibers: Vec<LocalModule>,
        shifts: Vec<Option<Vec<Rational>>>,
    ) -> Result<Self> {
        let len = usize::try_from(2 * radius + 1)
            .map_err(|_| Error::InvalidParameter("negative window radius".into()))?;
        if fibers.len() != len || shifts.len() + 1 != len {
            return Err(Error::InvalidParameter(format!(
                "family over radius {radius} needs {len} fibers and {} shift maps",
                len - 1
            )));
        }
        Ok(SkyscraperFamily { chi, n, radius, fibers, shifts })
    }

    /// The windowed `A_{χ,n}/k[s] = ⊕ k[s]/(s-χ-i)^n`, generators `(s-χ-i)^-n`.
    pub fn principal_parts(chi: &Rational, n: u32, radius: i64) -> Self {
        let chi = normalize_chi(chi);
        let fibers = (-radius..=radius)
            .map(|i| {
                let a = &chi + int(i);
                let label = format!("(s - {})^-{n}", format_rational(&a));
                LocalModule::free_rank_one(a, n, label)
            })
            .collect();
        let mut unit = vec![Rational::zero(); n as usize];
        if n > 0 {
            unit[0] = Rational::one();
        }
        let shifts = (0..2 * radius).map(|_| Some(unit.clone())).collect();
        SkyscraperFamily { chi, n, radius, fibers, shifts }
    }

    pub fn chi(&self) -> &Rational {
        &self.chi
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn point(&self, i: i64) -> Rational {
        &self.chi + int(i)
    }

    pub fn fiber(&self, i: i64) -> Result<&LocalModule> {
        self.index(i).map(|k| &self.fibers[k])
    }

    /// Shift unit from fiber `i` to fiber `i+1`.
    pub fn shift(&self, i: i64) -> Result<Option<&Vec<Rational>>> {
        if i == self.radius {
            return Err(Error::WindowExceeded(format!("no shift map leaves the edge fiber {i}")));
        }
        self.index(i).map(|k| self.shifts[k].as_ref())
    }

    pub fn fibers(&self) -> &[LocalModule] {
        &self.fibers
    }

    fn index(&self, i: i64) -> Result<usize> {
        if i.abs() > self.radius {
            return Err(Error::WindowExceeded(format!(
                "index {i} outside window radius {}",
                self.radius
            )));
        }
        Ok((i + self.radius) as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.fibers.iter().all(LocalModule::is_zero)
    }

    /// Fiberwise tensor product; shift units multiply.
    pub fn tensor(&self, other: &SkyscraperFamily) -> Result<SkyscraperFamily> {
        if self.radius != other.radius {
            return Err(Error::WindowExceeded(format!(
                "window radii {} and {} differ",
                self.radius, other.radius
            )));
        }
        let n = self.n.min(other.n);
        if self.chi != other.chi {
            let fibers = (-self.radius..=self.radius)
                .map(|i| LocalModule::zero(self.point(i), n))
                .collect();
            let shifts = vec![None; self.shifts.len()];
            return SkyscraperFamily::new(self.chi.clone(), n, self.radius, fibers, shifts);
        }
        let fibers: Vec<LocalModule> =
            self.fibers.iter().zip(&other.fibers).map(|(a, b)| a.tensor(b)).collect();
        let shifts = self
            .shifts
            .iter()
            .zip(&other.shifts)
            .enumerate()
            .map(|(k, (u, v))| {
                let rank_one = fibers[k].free_rank() == Some(1) && fibers[k + 1].free_rank() == Some(1);
                match (u, v) {
                    (Some(u), Some(v)) if rank_one => Some(series_mul(u, v, n as usize)),
                    _ => None,
                }
            })
            .collect();
        SkyscraperFamily::new(self.chi.clone(), n, self.radius, fibers, shifts)
    }

    /// Units `v_i` with `v_{i+1} u_i = u'_i v_i` identifying `self` with
    /// `other` fiber by fiber, normalised by `v_{-radius} = 1`. Requires
    /// rank-1 free fibers with matching exponents and all shift units.
    pub fn isomorphism_to(&self, other: &SkyscraperFamily) -> std::result::Result<Vec<Vec<Rational>>, String> {
        if self.chi != other.chi || self.radius != other.radius || self.n != other.n {
            return Err("families live on different windows".into());
        }
        let n = self.n as usize;
        for (i, (a, b)) in self.fibers.iter().zip(&other.fibers).enumerate() {
            if a.invariant() != b.invariant() {
                return Err(format!(
                    "fiber {} has exponents {:?} versus {:?}",
                    i as i64 - self.radius,
                    a.invariant(),
                    b.invariant()
                ));
            }
        }
        if self.fibers.iter().all(LocalModule::is_zero) {
            return Ok(Vec::new());
        }
        if self.fibers.iter().any(|f| f.free_rank() != Some(1)) {
            return Err("isomorphism search implemented for rank-1 free families".into());
        }
        let mut v = vec![Rational::zero(); n];
        v[0] = Rational::one();
        let mut units = vec![v.clone()];
        for (k, (u, u2)) in self.shifts.iter().zip(&other.shifts).enumerate() {
            let (Some(u), Some(u2)) = (u, u2) else {
                return Err(format!("missing shift map at {}", k as i64 - self.radius));
            };
            let u_inv = series_inv(u, n).ok_or("shift map is not a unit")?;
            v = series_mul(&series_mul(u2, &v, n), &u_inv, n);
            if v[0].is_zero() {
                return Err("induced map is not a unit".into());
            }
            units.push(v.clone());
        }
        Ok(units)
    }

    pub fn summaries(&self) -> Vec<FiberSummary> {
        self.fibers.iter().map(LocalModule::summary).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn local_tensor() {
        let a = LocalModule::new(int(0), 2, [(2, "g".into())]);
        let b = LocalModule::new(int(0), 2, [(1, "h".into())]);
        assert_eq!(a.tensor(&b).exponents(), &[1]);
        let c = LocalModule::new(int(1), 2, [(1, "h".into())]);
        assert!(a.tensor(&c).is_zero());
    }

    #[test]
    fn series_inverse() {
        let a = vec![int(2), int(3), int(-1)];
        let inv = series_inv(&a, 3).unwrap();
        assert_eq!(series_mul(&a, &inv, 3), vec![int(1), int(0), int(0)]);
        assert!(series_inv(&[int(0), int(1)], 2).is_none());
    }

    #[test]
    fn principal_part_families() {
        let f = SkyscraperFamily::principal_parts(&int(0), 1, 3);
        let g = SkyscraperFamily::principal_parts(&rat(1, 2), 1, 3);
        assert!(f.tensor(&g).unwrap().is_zero());
        let ff = f.tensor(&f).unwrap();
        assert!(ff.fibers().iter().all(|x| x.free_rank() == Some(1)));
        assert!(ff.isomorphism_to(&f).is_ok());
        assert_eq!(normalize_chi(&rat(7, 2)), rat(1, 2));
        assert!(f.fiber(4).is_err());
    }
}
