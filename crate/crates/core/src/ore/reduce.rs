//! Cyclic right modules `D/gD` and canonical representatives of classes
//! `𝟏·a` modulo a single relation.
//!
//! For the shift algebra, write `g = Σ_{lo<=j<=hi} T^j g_j` and `w = hi - lo`.
//! Every class has a unique representative whose `T`-degrees lie in
//! `0..w` with arbitrary coefficients, and outside that window only in
//! degrees `m >= w` with `deg p_m < deg g_hi` or `m < 0` with
//! `deg p_m < deg g_lo`. The top-down and bottom-up passes below produce it.

use std::fmt;

use num_traits::{One, Zero};

use super::maps::{inverse_mellin_op, mellin_op};
use super::shift::ShiftOp;
use super::weyl::{binomial, falling, LaurentWeylOp, WeylOp};
use crate::error::{Error, Result};
use crate::scalars::{int, sign_power, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Shift,
    Weyl(usize),
    LaurentWeyl,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Shift => f.write_str("shift"),
            Algebra::Weyl(d) => write!(f, "weyl({d})"),
            Algebra::LaurentWeyl => f.write_str("laurent-weyl"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OreOperator {
    Shift(ShiftOp),
    Weyl(WeylOp),
    Laurent(LaurentWeylOp),
}

impl OreOperator {
    pub fn algebra(&self) -> Algebra {
        match self {
            OreOperator::Shift(_) => Algebra::Shift,
            OreOperator::Weyl(w) => Algebra::Weyl(w.rank()),
            OreOperator::Laurent(_) => Algebra::LaurentWeyl,
        }
    }

    pub fn zero(algebra: Algebra) -> Self {
        match algebra {
            Algebra::Shift => OreOperator::Shift(ShiftOp::zero()),
            Algebra::Weyl(d) => OreOperator::Weyl(WeylOp::zero(d)),
            Algebra::LaurentWeyl => OreOperator::Laurent(LaurentWeylOp::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            OreOperator::Shift(a) => a.is_zero(),
            OreOperator::Weyl(a) => a.is_zero(),
            OreOperator::Laurent(a) => a.is_zero(),
        }
    }

    fn mismatch(&self, other: &OreOperator) -> Error {
        Error::ParameterMismatch(format!(
            "operators from {} and {} cannot be combined",
            self.algebra(),
            other.algebra()
        ))
    }

    pub fn add(&self, other: &OreOperator) -> Result<OreOperator> {
        match (self, other) {
            (OreOperator::Shift(a), OreOperator::Shift(b)) => Ok(OreOperator::Shift(a + b)),
            (OreOperator::Weyl(a), OreOperator::Weyl(b)) => Ok(OreOperator::Weyl(a.try_add(b)?)),
            (OreOperator::Laurent(a), OreOperator::Laurent(b)) => Ok(OreOperator::Laurent(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn mul(&self, other: &OreOperator) -> Result<OreOperator> {
        match (self, other) {
            (OreOperator::Shift(a), OreOperator::Shift(b)) => Ok(OreOperator::Shift(a * b)),
            (OreOperator::Weyl(a), OreOperator::Weyl(b)) => Ok(OreOperator::Weyl(a.try_mul(b)?)),
            (OreOperator::Laurent(a), OreOperator::Laurent(b)) => Ok(OreOperator::Laurent(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn scale(&self, c: &Rational) -> OreOperator {
        match self {
            OreOperator::Shift(a) => OreOperator::Shift(a.scale(c)),
            OreOperator::Weyl(a) => OreOperator::Weyl(a.scale(c)),
            OreOperator::Laurent(a) => OreOperator::Laurent(a.scale(c)),
        }
    }

    pub fn as_shift(&self) -> Option<&ShiftOp> {
        match self {
            OreOperator::Shift(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_weyl(&self) -> Option<&WeylOp> {
        match self {
            OreOperator::Weyl(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for OreOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OreOperator::Shift(a) => a.fmt(f),
            OreOperator::Weyl(a) => a.fmt(f),
            OreOperator::Laurent(a) => a.fmt(f),
        }
    }
}

/// The right module `D/(g_1, ..., g_k)D`, generator written `𝟏`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPresentation {
    algebra: Algebra,
    relations: Vec<OreOperator>,
}

impl CyclicPresentation {
    pub fn new(algebra: Algebra, relations: Vec<OreOperator>) -> Result<Self> {
        if let Some(bad) = relations.iter().find(|r| r.algebra() != algebra) {
            return Err(Error::ParameterMismatch(format!(
                "relation in {} for a presentation over {algebra}",
                bad.algebra()
            )));
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(CyclicPresentation { algebra, relations })
    }

    pub fn shift(relation: ShiftOp) -> Self {
        CyclicPresentation { algebra: Algebra::Shift, relations: vec![OreOperator::Shift(relation)] }
            .normalized()
    }

    pub fn weyl(relation: WeylOp) -> Self {
        let algebra = Algebra::Weyl(relation.rank());
        CyclicPresentation { algebra, relations: vec![OreOperator::Weyl(relation)] }.normalized()
    }

    pub fn laurent(relation: LaurentWeylOp) -> Self {
        CyclicPresentation { algebra: Algebra::LaurentWeyl, relations: vec![OreOperator::Laurent(relation)] }
            .normalized()
    }

    fn normalized(mut self) -> Self {
        self.relations.retain(|r| !r.is_zero());
        self
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn relations(&self) -> &[OreOperator] {
        &self.relations
    }

    /// The unique relation of a cyclic presentation with one relation.
    pub fn single_relation(&self) -> Option<&OreOperator> {
        match self.relations.as_slice() {
            [g] => Some(g),
            _ => None,
        }
    }
}

impl fmt::Display for CyclicPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| format!("({r})")).collect();
        write!(f, "{}/{}", self.algebra, if rels.is_empty() { "0".into() } else { rels.join(", ") })
    }
}

/// Canonical representative of `𝟏·elem` in the presented module.
pub fn right_reduce(elem: &OreOperator, pres: &CyclicPresentation) -> Result<OreOperator> {
    if elem.algebra() != pres.algebra() {
        return Err(Error::ParameterMismatch(format!(
            "element of {} reduced in a module over {}",
            elem.algebra(),
            pres.algebra()
        )));
    }
    let g = match pres.relations() {
        [] => return Ok(elem.clone()),
        [g] => g,
        _ => {
            return Err(Error::Unsupported(
                "reduction modulo more than one relation".into(),
            ))
        }
    };
    match (elem, g) {
        (OreOperator::Shift(a), OreOperator::Shift(g)) => Ok(OreOperator::Shift(reduce_shift(a, g))),
        (OreOperator::Weyl(a), OreOperator::Weyl(g)) => Ok(OreOperator::Weyl(reduce_weyl(a, g)?)),
        (OreOperator::Laurent(a), OreOperator::Laurent(g)) => {
            let r = reduce_shift(&mellin_op(a), &mellin_op(g));
            Ok(OreOperator::Laurent(inverse_mellin_op(&r)))
        }
        _ => unreachable!("algebra tags checked above"),
    }
}

/// Reduction modulo `gD` in the shift algebra; confluent for every `g != 0`.
pub fn reduce_shift(a: &ShiftOp, g: &ShiftOp) -> ShiftOp {
    let Some((lo, hi)) = g.t_range() else {
        return a.clone();
    };
    let w = hi - lo;
    let mut r = a.clone();

    // degrees m >= w: divide by the shifted top coefficient
    while let Some(m) = r.terms().keys().rev().copied().find(|&m| m >= w && can_reduce(&r, g, m, m - hi, hi)) {
        let c = m - hi;
        let (q, _) = r.coeff(m).div_rem(&g.coeff(hi).shift(&int(c)));
        subtract_multiple(&mut r, g, c, &q);
    }
    // degrees m < 0: divide by the shifted bottom coefficient
    while let Some(m) = r.terms().keys().copied().find(|&m| m < 0 && can_reduce(&r, g, m, m - lo, lo)) {
        let c = m - lo;
        let (q, _) = r.coeff(m).div_rem(&g.coeff(lo).shift(&int(c)));
        subtract_multiple(&mut r, g, c, &q);
    }
    r
}

fn can_reduce(r: &ShiftOp, g: &ShiftOp, m: i64, c: i64, edge: i64) -> bool {
    let p = r.coeff(m);
    let lead = g.coeff(edge).shift(&int(c));
    match (p.degree(), lead.degree()) {
        (Some(dp), Some(dl)) => dp >= dl,
        _ => false,
    }
}

/// `r -= g · T^c · q`.
fn subtract_multiple(r: &mut ShiftOp, g: &ShiftOp, c: i64, q: &Poly) {
    let m = g * &ShiftOp::term(c, q.clone());
    *r = &*r - &m;
}

/// Rank-1 Weyl reduction modulo `α + β∂` or `α + βx`.
fn reduce_weyl(a: &WeylOp, g: &WeylOp) -> Result<WeylOp> {
    if g.rank() != 1 {
        return Err(Error::Unsupported(
            "Weyl reduction is implemented for rank 1 only".into(),
        ));
    }
    let mut alpha = Rational::zero();
    let mut beta_d = Rational::zero();
    let mut beta_x = Rational::zero();
    for ((x, d), c) in g.terms() {
        match (x[0], d[0]) {
            (0, 0) => alpha = c.clone(),
            (0, 1) => beta_d = c.clone(),
            (1, 0) => beta_x = c.clone(),
            _ => {
                return Err(Error::Unsupported(format!(
                    "relation {g} is not of the form a + b*dx or a + b*x"
                )))
            }
        }
    }
    match (beta_d.is_zero(), beta_x.is_zero()) {
        (false, true) => {
            // 𝟏∂ = λ𝟏: rewrite in anti-normal order, then ∂^b x^a ≡ λ^b x^a
            let lambda = -alpha / beta_d;
            let mut out = WeylOp::zero(1);
            for ((x, d), c) in a.terms() {
                let (ea, eb) = (x[0], d[0]);
                for k in 0..=ea.min(eb) {
                    let coef = c
                        * sign_power(i64::from(k))
                        * falling(i64::from(k), k)
                        * binomial(ea, k)
                        * binomial(eb, k)
                        * rpow(&lambda, eb - k);
                    out.add_term((vec![ea - k], vec![0]), coef);
                }
            }
            Ok(out)
        }
        (true, false) => {
            // 𝟏x = μ𝟏 and elements are already x-first
            let mu = -alpha / beta_x;
            let mut out = WeylOp::zero(1);
            for ((x, d), c) in a.terms() {
                out.add_term((vec![0], d.clone()), c * rpow(&mu, x[0]));
            }
            Ok(out)
        }
        (true, true) if !alpha.is_zero() => Ok(WeylOp::zero(1)),
        _ => Err(Error::Unsupported(format!(
            "relation {g} is not of the form a + b*dx or a + b*x"
        ))),
    }
}

fn rpow(r: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> ShiftOp {
        ShiftOp::s()
    }
    fn ti() -> ShiftOp {
        ShiftOp::t_inv()
    }
    fn e_pres() -> CyclicPresentation {
        CyclicPresentation::shift(&ShiftOp::one() - &(&ti() * &s()))
    }
    fn b_pres() -> CyclicPresentation {
        CyclicPresentation::shift(&(&s() + &ShiftOp::one()) - &(&ti() * &s()))
    }
    fn red(a: &ShiftOp, p: &CyclicPresentation) -> ShiftOp {
        right_reduce(&OreOperator::Shift(a.clone()), p).unwrap().as_shift().unwrap().clone()
    }

    #[test]
    fn e_module_examples() {
        assert_eq!(red(&(&ti() * &s()), &e_pres()), ShiftOp::one());
        assert_eq!(red(&ti(), &e_pres()), ti());
        // 𝟏T^-i = 𝟏T^-i-1 (s - i)
        for i in 0..5 {
            let rhs = ShiftOp::term(-i - 1, Poly::linear(&int(i)));
            assert_eq!(red(&rhs, &e_pres()), red(&ShiftOp::t_pow(-i), &e_pres()));
        }
    }

    #[test]
    fn b_relation_reduces_to_zero() {
        let g = &(&s() + &ShiftOp::one()) - &(&ti() * &s());
        assert!(red(&g, &b_pres()).is_zero());
        // 𝔅 basis: T^m (m != 0) and s^j
        assert_eq!(red(&s().pow(3).unwrap(), &b_pres()), s().pow(3).unwrap());
        assert_eq!(red(&ti(), &b_pres()), ti());
    }

    #[test]
    fn representatives_are_class_invariants() {
        let g = &(&ShiftOp::t().pow(2).unwrap() * &s()) - &(&ti() * &(&s() + &ShiftOp::constant(int(3))));
        let pres = CyclicPresentation::shift(g.clone());
        let a = &(&ShiftOp::t_pow(5) * &s().pow(2).unwrap()) + &ShiftOp::t_pow(-4);
        let h = &(&ShiftOp::t_pow(-3) * &s()) + &ShiftOp::t_pow(4);
        assert_eq!(red(&a, &pres), red(&(&a + &(&g * &h)), &pres));
    }

    #[test]
    fn weyl_reductions() {
        let x = WeylOp::x(1, 0);
        let d = WeylOp::d(1, 0);
        let exp = CyclicPresentation::weyl(&WeylOp::one(1) - &d);
        let r = right_reduce(&OreOperator::Weyl(&d * &x), &exp).unwrap();
        // 𝟏∂ = 𝟏, so 𝟏∂x = 𝟏x and 𝟏x∂ = 𝟏(∂x - 1) = 𝟏x - 𝟏
        assert_eq!(r.to_string(), "x");
        let r = right_reduce(&OreOperator::Weyl(&x * &d), &exp).unwrap();
        assert_eq!(r.to_string(), "-1 + x");
        let delta = CyclicPresentation::weyl(x.clone());
        let r = right_reduce(&OreOperator::Weyl(&(&x * &d) + &d), &delta).unwrap();
        assert_eq!(r.to_string(), "dx");
        let bad = CyclicPresentation::weyl(&x * &d);
        assert!(matches!(
            right_reduce(&OreOperator::Weyl(x.clone()), &bad),
            Err(Error::Unsupported(_))
        ));
    }
}
