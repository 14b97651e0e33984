//! Finite checks on `A^0_n = (Z/ℓ^r)[Z/n]`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use super::algebra::{kernel_mod, ElemSummary, GroupAlgebraElem};
use crate::error::{Error, Result};
use crate::scalars::residue::ResidueRing;

/// Largest ring enumerated element by element.
pub const MAX_ENUMERATION: u64 = 1 << 20;

fn t_minus_one(ring: ResidueRing, n: usize) -> GroupAlgebraElem {
    GroupAlgebraElem::t_pow(ring, n, 1)
        .sub(&GroupAlgebraElem::one(ring, n))
        .expect("same ring")
}

fn ring_size(ring: ResidueRing, n: usize) -> Option<u64> {
    ring.modulus().checked_pow(n as u32).filter(|&s| s <= MAX_ENUMERATION)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentationWitness {
    pub passed: bool,
    pub ell: u64,
    pub r: u32,
    pub n: usize,
    pub classical: bool,
    /// `t^i - 1 = (t - 1)(1 + … + t^{i-1})` for each kernel basis vector.
    pub kernel_basis_in_ideal: bool,
    /// `aug(t^i (t - 1)) = 0` for the ideal generators.
    pub ideal_in_kernel: bool,
    pub kernel_size: Option<u64>,
    pub ideal_size: Option<u64>,
    pub expected_size: String,
}

/// `ker(aug) = (t - 1)` in `(Z/ℓ^r)[Z/n]`, by basis comparison in both
/// directions and, when enumerable, by counting both sides.
pub fn augmentation_kernel_check(ell: u64, r: u32, n: usize) -> Result<AugmentationWitness> {
    let ring = ResidueRing::new(ell, r)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let tm1 = t_minus_one(ring, n);
    let kernel_basis_in_ideal = (1..n).all(|i| {
        let geometric = (0..i).fold(GroupAlgebraElem::zero(ring, n), |acc, k| {
            acc.add(&GroupAlgebraElem::t_pow(ring, n, k as i64)).expect("same ring")
        });
        let target = GroupAlgebraElem::t_pow(ring, n, i as i64)
            .sub(&GroupAlgebraElem::one(ring, n))
            .expect("same ring");
        tm1.mul(&geometric).expect("same ring") == target && target.augmentation() == 0
    });
    let ideal_in_kernel = (0..n).all(|i| {
        GroupAlgebraElem::t_pow(ring, n, i as i64).mul(&tm1).expect("same ring").augmentation() == 0
    });
    let (kernel_size, ideal_size) = match ring_size(ring, n) {
        Some(size) => {
            let mut kernel = 0u64;
            let mut ideal = BTreeSet::new();
            for code in 0..size {
                let a = GroupAlgebraElem::from_code(ring, n, code);
                if a.augmentation() == 0 {
                    kernel += 1;
                }
                ideal.insert(a.mul(&tm1).expect("same ring").code());
            }
            (Some(kernel), Some(ideal.len() as u64))
        }
        None => (None, None),
    };
    let expected = ring.modulus().pow(n as u32 - 1);
    let counts_ok = match (kernel_size, ideal_size) {
        (Some(k), Some(i)) => k == expected && i == expected,
        _ => true,
    };
    Ok(AugmentationWitness {
        passed: kernel_basis_in_ideal && ideal_in_kernel && counts_ok,
        ell,
        r,
        n,
        classical: (n as u64) % ell != 0,
        kernel_basis_in_ideal,
        ideal_in_kernel,
        kernel_size,
        ideal_size,
        expected_size: format!("{}^{}", ring.modulus(), n - 1),
    })
}

/// Annihilator of `t - 1` in `(Z/ℓ^r)[Z/m]` pushed to level `n`.
pub fn annihilator_image(ring: ResidueRing, m: usize, n: usize) -> Result<(Vec<GroupAlgebraElem>, Vec<GroupAlgebraElem>)> {
    if n == 0 || m % n != 0 {
        return Err(Error::InvalidParameter(format!("{n} does not divide {m}")));
    }
    let tm1 = t_minus_one(ring, m);
    let gens: Vec<GroupAlgebraElem> = kernel_mod(ring, &tm1.multiplication_matrix(), m)
        .into_iter()
        .map(|g| GroupAlgebraElem::new(ring, &g.iter().map(|&c| c as i64).collect::<Vec<_>>()).expect("nonempty"))
        .collect();
    let images = gens.iter().map(|g| g.transition(n)).collect::<Result<Vec<_>>>()?;
    Ok((gens, images))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NzdWitness {
    pub passed: bool,
    pub ell: u64,
    pub r: u32,
    pub n: usize,
    pub m: usize,
    pub annihilator: Vec<ElemSummary>,
    pub image_vanishes: bool,
    pub control_m: Option<usize>,
    pub control_image_vanishes: Option<bool>,
    pub classical: bool,
}

/// Finite witness that `t̃ - 1` is a non-zero-divisor in the limit: the
/// annihilator of `t - 1` at level `m` dies at level `n`. The control level
/// `n·ℓ^{r-1}` is too small and must fail.
pub fn pro_nzd_check(ell: u64, r: u32, n: usize, m: Option<usize>) -> Result<NzdWitness> {
    let ring = ResidueRing::new(ell, r)?;
    let m = m.unwrap_or(n * ring.modulus() as usize);
    let (gens, images) = annihilator_image(ring, m, n)?;
    let image_vanishes = images.iter().all(GroupAlgebraElem::is_zero);
    let control_m = n * (ring.modulus() / ell) as usize;
    let control = (control_m < m).then(|| annihilator_image(ring, control_m, n)).transpose()?;
    let control_image_vanishes = control.map(|(_, imgs)| imgs.iter().all(GroupAlgebraElem::is_zero));
    Ok(NzdWitness {
        passed: image_vanishes && control_image_vanishes != Some(true),
        ell,
        r,
        n,
        m,
        annihilator: gens.iter().map(GroupAlgebraElem::summary).collect(),
        image_vanishes,
        control_m: control_image_vanishes.map(|_| control_m),
        control_image_vanishes,
        classical: (n as u64) % ell != 0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitWitness {
    pub passed: bool,
    pub ell: u64,
    pub r: u32,
    pub n: usize,
    pub n_prime: usize,
    pub units_source: u64,
    pub units_target: u64,
    pub hit: u64,
}

/// Enumerates units of `(Z/ℓ^r)[Z/n']` and checks that their images cover
/// the units of `(Z/ℓ^r)[Z/n]`.
pub fn unit_surjectivity_check(ell: u64, r: u32, n: usize, n_prime: usize) -> Result<UnitWitness> {
    let ring = ResidueRing::new(ell, r)?;
    if n == 0 || n_prime % n != 0 {
        return Err(Error::InvalidParameter(format!("{n} does not divide {n_prime}")));
    }
    let size_src = ring_size(ring, n_prime)
        .ok_or_else(|| Error::SizeGuard(format!("(Z/{})[Z/{n_prime}] too large to enumerate", ring.modulus())))?;
    let size_tgt = ring_size(ring, n).expect("smaller than the source");
    // unit status depends only on the reduction mod ℓ
    let residue = ResidueRing::new(ell, 1)?;
    let unit_mod_ell = |a: &GroupAlgebraElem| {
        let reduced: Vec<i64> = a.coeffs().iter().map(|&c| (c % ell) as i64).collect();
        GroupAlgebraElem::new(residue, &reduced).expect("nonempty").is_unit()
    };
    let mut cache = std::collections::HashMap::new();
    let mut is_unit = |a: &GroupAlgebraElem| {
        let key: Vec<u64> = a.coeffs().iter().map(|&c| c % ell).collect();
        *cache.entry(key).or_insert_with(|| unit_mod_ell(a))
    };
    let mut units_source = 0u64;
    let mut images = BTreeSet::new();
    for code in 0..size_src {
        let a = GroupAlgebraElem::from_code(ring, n_prime, code);
        if is_unit(&a) {
            units_source += 1;
            images.insert(a.transition(n)?.code());
        }
    }
    let mut units_target = 0u64;
    let mut hit = 0u64;
    for code in 0..size_tgt {
        let b = GroupAlgebraElem::from_code(ring, n, code);
        if b.is_unit() {
            units_target += 1;
            if images.contains(&code) {
                hit += 1;
            }
        }
    }
    Ok(UnitWitness {
        passed: hit == units_target && images.len() as u64 == units_target,
        ell,
        r,
        n,
        n_prime,
        units_source,
        units_target,
        hit,
    })
}

/// `u = Σ_{a<q} t^a` in `(Z/ℓ^r)[Z/n]`, the Frobenius scalar on `g_1`.
pub fn frobenius_scalar(ring: ResidueRing, q: u64, n: usize) -> GroupAlgebraElem {
    let counts = frobenius_scalar_integral(q, n);
    GroupAlgebraElem::new(ring, &counts).expect("n positive")
}

/// Integer coefficients of `Σ_{a<q} t^a` in `Z[Z/n]`.
pub fn frobenius_scalar_integral(q: u64, n: usize) -> Vec<i64> {
    let n64 = n as u64;
    (0..n64).map(|j| (q / n64 + u64::from(j < q % n64)) as i64).collect()
}

/// Parameter grid `ℓ ∈ {2,3}`, `r ≤ 2`, `n ≤ 6`, `ℓ ∤ n`.
pub fn classical_grid() -> Vec<(u64, u32, usize)> {
    let mut out = Vec::new();
    for ell in [2u64, 3] {
        for r in 1..=2 {
            for n in 1..=6usize {
                if (n as u64).gcd(&ell) == 1 {
                    out.push((ell, r, n));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmentation_examples() {
        let w = augmentation_kernel_check(2, 2, 3).unwrap();
        assert!(w.passed);
        assert_eq!(w.kernel_size, Some(16));
        assert!(augmentation_kernel_check(2, 1, 1).unwrap().passed);
        assert!(augmentation_kernel_check(3, 1, 4).unwrap().passed);
    }

    #[test]
    fn nzd_examples() {
        let w = pro_nzd_check(2, 1, 1, None).unwrap();
        assert!(w.passed && w.image_vanishes);
        assert_eq!(w.m, 2);
        let w = pro_nzd_check(2, 2, 3, None).unwrap();
        assert_eq!(w.m, 12);
        assert!(w.passed);
        assert_eq!(w.control_image_vanishes, Some(false));
        // m = 2n with ℓ^r = 4 leaves a nonzero image
        let (_, imgs) = annihilator_image(ResidueRing::new(2, 2).unwrap(), 6, 3).unwrap();
        assert!(imgs.iter().any(|g| !g.is_zero()));
    }

    #[test]
    fn unit_examples() {
        assert!(unit_surjectivity_check(2, 1, 1, 3).unwrap().passed);
        assert!(unit_surjectivity_check(3, 1, 2, 4).unwrap().passed);
        let w = unit_surjectivity_check(3, 2, 2, 2).unwrap();
        assert!(w.passed && w.units_source == w.units_target);
        assert!(matches!(unit_surjectivity_check(3, 2, 1, 7), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn frobenius_counts() {
        assert_eq!(frobenius_scalar_integral(7, 3), vec![3, 2, 2]);
        assert_eq!(frobenius_scalar_integral(5, 1), vec![5]);
        let r = ResidueRing::new(2, 2).unwrap();
        assert_eq!(frobenius_scalar(r, 7, 3).coeffs(), &[3, 2, 2]);
    }
}
