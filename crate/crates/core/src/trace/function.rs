//! Exact functions `F_q^d → Q(ζ_N)`.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::space::FqSpace;
use crate::error::{Error, Result};
use crate::scalars::cyclotomic::CyclotomicRing;
use crate::scalars::{int, CycScalar, Rational};

/// Tate twist `(m)` and shift `[n]`. Traces convert with
/// `(1) ↦ q^-1` and `[1] ↦ -1` (geometric Frobenius).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TwistShift {
    pub twist: i64,
    pub shift: i64,
}

impl TwistShift {
    pub fn new(twist: i64, shift: i64) -> Self {
        TwistShift { twist, shift }
    }

    /// `(-1)^shift · q^-twist`.
    pub fn scalar(&self, q: u32) -> Rational {
        let sign = if self.shift.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
        let qq = int(q as i64);
        let power = if self.twist >= 0 {
            Rational::one() / num_traits::pow(qq, self.twist as usize)
        } else {
            num_traits::pow(qq, (-self.twist) as usize)
        };
        sign * power
    }

    pub fn compose(&self, other: &TwistShift) -> TwistShift {
        TwistShift { twist: self.twist + other.twist, shift: self.shift + other.shift }
    }

    pub fn describe(&self) -> String {
        format!("({})[{}]", self.twist, self.shift)
    }
}

#[derive(Clone, Debug)]
pub struct TraceFunction {
    space: Arc<FqSpace>,
    values: Vec<CycScalar>,
}

impl TraceFunction {
    /// Values are brought to a common conductor.
    pub fn new(space: &Arc<FqSpace>, values: Vec<CycScalar>) -> Result<Self> {
        if values.len() != space.size() {
            return Err(Error::InvalidParameter(format!(
                "table has {} entries, space has {} points",
                values.len(),
                space.size()
            )));
        }
        let conductor = values.iter().fold(1u64, |acc, v| acc.lcm(&v.conductor()));
        let ring = CyclotomicRing::new(conductor);
        let values = values.iter().map(|v| v.inflate(&ring)).collect();
        Ok(TraceFunction { space: space.clone(), values })
    }

    pub fn from_fn(space: &Arc<FqSpace>, f: impl Fn(usize) -> CycScalar) -> Self {
        TraceFunction::new(space, (0..space.size()).map(f).collect()).expect("one value per point")
    }

    pub fn from_rational_fn(space: &Arc<FqSpace>, f: impl Fn(usize) -> Rational) -> Self {
        let ring = CyclotomicRing::new(1);
        let values = (0..space.size()).map(|i| CycScalar::from_rational(&ring, f(i))).collect();
        TraceFunction { space: space.clone(), values }
    }

    pub fn zero(space: &Arc<FqSpace>) -> Self {
        TraceFunction::from_rational_fn(space, |_| Rational::zero())
    }

    pub fn constant(space: &Arc<FqSpace>, c: Rational) -> Self {
        TraceFunction::from_rational_fn(space, |_| c.clone())
    }

    pub fn delta(space: &Arc<FqSpace>, idx: usize) -> Self {
        TraceFunction::from_rational_fn(space, |i| if i == idx { Rational::one() } else { Rational::zero() })
    }

    pub fn space(&self) -> &Arc<FqSpace> {
        &self.space
    }

    pub fn q(&self) -> u32 {
        self.space.q()
    }

    pub fn d(&self) -> usize {
        self.space.d()
    }

    pub fn values(&self) -> &[CycScalar] {
        &self.values
    }

    pub fn value(&self, idx: usize) -> &CycScalar {
        &self.values[idx]
    }

    pub fn at(&self, v: &[u32]) -> &CycScalar {
        &self.values[self.space.index(v)]
    }

    pub fn conductor(&self) -> u64 {
        self.values.first().map_or(1, CycScalar::conductor)
    }

    fn check(&self, other: &TraceFunction) -> Result<()> {
        if !self.space.same_as(&other.space) {
            return Err(Error::ParameterMismatch("trace functions on different spaces".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &TraceFunction) -> Result<TraceFunction> {
        self.check(other)?;
        TraceFunction::new(&self.space, self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &TraceFunction) -> Result<TraceFunction> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TraceFunction {
        TraceFunction { space: self.space.clone(), values: self.values.iter().map(CycScalar::neg).collect() }
    }

    pub fn scale(&self, c: &CycScalar) -> TraceFunction {
        TraceFunction::new(&self.space, self.values.iter().map(|v| v.mul(c)).collect()).expect("same length")
    }

    pub fn scale_rational(&self, c: &Rational) -> TraceFunction {
        TraceFunction { space: self.space.clone(), values: self.values.iter().map(|v| v.scale(c)).collect() }
    }

    /// Trace of `M(m)[n]` from the trace of `M`.
    pub fn twist_shift(&self, ts: &TwistShift) -> TraceFunction {
        self.scale_rational(&ts.scalar(self.q()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycScalar::is_zero)
    }

    pub fn as_rationals(&self) -> Option<Vec<Rational>> {
        self.values.iter().map(CycScalar::as_rational).collect()
    }

    /// `c` with `self = c·other`, if one exists.
    pub fn ratio_to(&self, other: &TraceFunction) -> Option<CycScalar> {
        let pivot = other.values.iter().position(|v| !v.is_zero());
        let Some(p) = pivot else {
            return self.is_zero().then(|| CycScalar::rational(Rational::zero()));
        };
        let c = self.values[p].mul(&other.values[p].inverse().expect("nonzero"));
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| *a == b.mul(&c))
            .then_some(c)
    }

    /// `(point, value)` rows in index order.
    pub fn table(&self) -> Vec<(String, String)> {
        (0..self.space.size())
            .map(|i| (self.space.format_point(i), self.values[i].format()))
            .collect()
    }
}

impl PartialEq for TraceFunction {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.values == other.values
    }
}
