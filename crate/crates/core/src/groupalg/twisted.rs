//! Free rank-one modules `A^i_n = A^0_n·g_i` with formal twist index.

use std::fmt;

use serde::Serialize;

use super::algebra::GroupAlgebraElem;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistedRankOneModule {
    pub n: usize,
    pub twist: i64,
}

impl TwistedRankOneModule {
    pub fn new(n: usize, twist: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("level must be positive".into()));
        }
        Ok(TwistedRankOneModule { n, twist })
    }

    pub fn generator(&self) -> String {
        format!("g_{}", self.twist)
    }

    /// Base change along `A^0_n → A^0_{n_target}`.
    pub fn transition(&self, n_target: usize) -> Result<Self> {
        if n_target == 0 || self.n % n_target != 0 {
            return Err(Error::InvalidParameter(format!("{n_target} does not divide {}", self.n)));
        }
        Ok(TwistedRankOneModule { n: n_target, twist: self.twist })
    }
}

impl fmt::Display for TwistedRankOneModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A^{}_{}", self.twist, self.n)
    }
}

/// `A^i_m ⊗_{A^0} A^j_n ≅ A^{i+j}_n` for `n | m`, with `g_i ⊗ g_j ↦ g_{i+j}`.
pub fn twisted_tensor(a: &TwistedRankOneModule, b: &TwistedRankOneModule) -> Result<TwistedRankOneModule> {
    if a.n % b.n != 0 {
        return Err(Error::ParameterMismatch(format!(
            "level {} does not divide level {}",
            b.n, a.n
        )));
    }
    TwistedRankOneModule::new(b.n, a.twist + b.twist)
}

/// `(x·g_i) ⊗ (y·g_j) ↦ (x̄·y)·g_{i+j}` with `x̄` the image of `x` at level `n`.
pub fn tensor_elements(
    a: &TwistedRankOneModule,
    x: &GroupAlgebraElem,
    b: &TwistedRankOneModule,
    y: &GroupAlgebraElem,
) -> Result<(TwistedRankOneModule, GroupAlgebraElem)> {
    if x.n() != a.n || y.n() != b.n {
        return Err(Error::ParameterMismatch("coefficient level differs from module level".into()));
    }
    let out = twisted_tensor(a, b)?;
    Ok((out, x.transition(b.n)?.mul(y)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorWitness {
    pub passed: bool,
    pub cases: usize,
    pub additive: bool,
    pub squares_commute: bool,
    pub example: String,
}

/// Index additivity, associativity and compatibility of the elementwise
/// tensor with transition maps, over the levels `n | m` with `m <= max_level`.
pub fn twisted_tensor_check(ring: crate::scalars::residue::ResidueRing, max_level: usize, seed: u64) -> Result<TensorWitness> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    let mut additive = true;
    let mut squares_commute = true;
    let m_mod = ring.modulus() as i64;
    let random_elem = |n: usize, rng: &mut rand_chacha::ChaCha8Rng| {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(0..m_mod)).collect();
        GroupAlgebraElem::new(ring, &c).expect("nonempty")
    };
    for m in 1..=max_level {
        for n in (1..=m).filter(|n| m % n == 0) {
            for k in (1..=n).filter(|k| n % k == 0) {
                let (i, j, l) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
                let a = TwistedRankOneModule::new(m, i)?;
                let b = TwistedRankOneModule::new(n, j)?;
                let c = TwistedRankOneModule::new(k, l)?;
                let ab = twisted_tensor(&a, &b)?;
                additive &= ab.twist == i + j && ab.n == n;
                additive &= twisted_tensor(&ab, &c)? == twisted_tensor(&a, &twisted_tensor(&b, &c)?)?;
                // tensor then transition = transition both factors then tensor
                let (x, y) = (random_elem(m, &mut rng), random_elem(n, &mut rng));
                let (_, xy) = tensor_elements(&a, &x, &b, &y)?;
                let (_, xy_low) =
                    tensor_elements(&a.transition(k)?, &x.transition(k)?, &b.transition(k)?, &y.transition(k)?)?;
                squares_commute &= xy.transition(k)? == xy_low;
                cases += 1;
            }
        }
    }
    let example = format!(
        "{} (x) {} = {}",
        TwistedRankOneModule::new(6, 1)?,
        TwistedRankOneModule::new(3, -1)?,
        twisted_tensor(&TwistedRankOneModule::new(6, 1)?, &TwistedRankOneModule::new(3, -1)?)?
    );
    Ok(TensorWitness { passed: additive && squares_commute, cases, additive, squares_commute, example })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::residue::ResidueRing;

    #[test]
    fn tensor_examples() {
        let a = TwistedRankOneModule::new(6, 1).unwrap();
        let b = TwistedRankOneModule::new(3, -1).unwrap();
        assert_eq!(twisted_tensor(&a, &b).unwrap(), TwistedRankOneModule::new(3, 0).unwrap());
        let u = TwistedRankOneModule::new(4, 0).unwrap();
        assert_eq!(twisted_tensor(&u, &u).unwrap().twist, 0);
        assert!(twisted_tensor(&b, &a).is_err());
        assert_eq!(a.generator(), "g_1");
    }

    #[test]
    fn tensor_check_passes() {
        let w = twisted_tensor_check(ResidueRing::new(3, 2).unwrap(), 6, 11).unwrap();
        assert!(w.passed);
        assert_eq!(w.example, "A^1_6 (x) A^-1_3 = A^0_3");
    }
}
