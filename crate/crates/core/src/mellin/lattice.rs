//! Windowed `k[s]`-lattices inside `k(s)`.
//!
//! A lattice is the `k[s]`-span of finitely many rational functions whose
//! poles lie on `χ + [-N, N]`. Such a span is `h·k[s]` with
//! `h = gcd(numerators over a common denominator) / denominator`, so every
//! fiber is free of rank 1, generated by any element of minimal valuation.

use num_traits::Zero;
use serde::Serialize;

use super::local::{normalize_chi, LocalModule};
use super::twisted::TwistedModel;
use crate::error::{Error, Result};
use crate::ore::{CyclicPresentation, OreOperator, ShiftOp};
use crate::scalars::linalg::nullspace;
use crate::scalars::poly::{poly_gcd, poly_lcm};
use crate::scalars::{format_rational, int, is_integer, to_i64, Poly, RatFun, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeGenerator {
    pub label: String,
    pub value: RatFun,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedLattice {
    chi: Rational,
    radius: i64,
    generators: Vec<LatticeGenerator>,
    principal: RatFun,
    model: TwistedModel,
}

/// Integer offsets `p - χ` of all poles of `f`, or `None` if a pole is off
/// the orbit or the denominator does not split over `Q`.
pub fn pole_offsets(f: &RatFun, chi: &Rational) -> Option<Vec<i64>> {
    let poles = f.poles();
    let split: usize = poles.iter().map(|p| f.den().root_multiplicity(p) as usize).sum();
    if Some(split) != f.den().degree() {
        return None;
    }
    poles
        .iter()
        .map(|p| {
            let d = p - chi;
            if is_integer(&d) {
                to_i64(&d)
            } else {
                None
            }
        })
        .collect()
}

impl WindowedLattice {
    pub fn from_generators(chi: &Rational, radius: i64, generators: Vec<LatticeGenerator>) -> Result<Self> {
        WindowedLattice::with_model(chi, radius, generators, TwistedModel::plain())
    }

    fn with_model(
        chi: &Rational,
        radius: i64,
        generators: Vec<LatticeGenerator>,
        model: TwistedModel,
    ) -> Result<Self> {
        if radius < 0 {
            return Err(Error::InvalidParameter("window radius must be non-negative".into()));
        }
        let chi = normalize_chi(chi);
        for g in &generators {
            match pole_offsets(&g.value, &chi) {
                Some(offs) if offs.iter().all(|o| o.abs() <= radius) => {}
                _ => {
                    return Err(Error::WindowExceeded(format!(
                        "generator {} has poles outside {} + [-{radius}, {radius}]",
                        g.value,
                        format_rational(&chi)
                    )))
                }
            }
        }
        let principal = principal_generator(generators.iter().map(|g| &g.value));
        Ok(WindowedLattice { chi, radius, generators, principal, model })
    }

    pub fn chi(&self) -> &Rational {
        &self.chi
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn generators(&self) -> &[LatticeGenerator] {
        &self.generators
    }

    pub fn model(&self) -> &TwistedModel {
        &self.model
    }

    /// `h` with lattice `= h·k[s]`.
    pub fn principal(&self) -> &RatFun {
        &self.principal
    }

    pub fn contains(&self, f: &RatFun) -> bool {
        if f.is_zero() {
            return true;
        }
        if self.principal.is_zero() {
            return false;
        }
        (f * &self.principal.inv().expect("nonzero")).is_polynomial()
    }

    pub fn valuation(&self, a: &Rational) -> i64 {
        self.principal.valuation(a)
    }

    /// Valuations of `h` at `χ + i` for `|i| <= radius`.
    pub fn valuation_table(&self) -> Vec<(i64, i64)> {
        (-self.radius..=self.radius)
            .map(|i| (i, self.valuation(&(&self.chi + int(i)))))
            .collect()
    }

    pub fn in_window(&self, a: &Rational) -> bool {
        let d = a - &self.chi;
        !is_integer(&d) || to_i64(&d).is_some_and(|i| i.abs() <= self.radius)
    }

    /// Generator of minimal valuation at `a`, preferring the constant 1.
    pub fn local_generator(&self, a: &Rational) -> Option<LatticeGenerator> {
        if self.principal.is_zero() {
            return None;
        }
        let v = self.valuation(a);
        let one = RatFun::one();
        if v == 0 && self.contains(&one) {
            return Some(LatticeGenerator { label: "1".into(), value: one });
        }
        self.generators.iter().find(|g| g.value.valuation(a) == v).cloned()
    }

    /// `L ⊗ k[s]/(s-a)^n`.
    pub fn fiber(&self, a: &Rational, n: u32) -> Result<LocalModule> {
        if !self.in_window(a) {
            return Err(Error::WindowExceeded(format!(
                "point {} outside the window of radius {}",
                format_rational(a),
                self.radius
            )));
        }
        Ok(match self.local_generator(a) {
            Some(g) => LocalModule::free_rank_one(a.clone(), n, g.label),
            None => LocalModule::zero(a.clone(), n),
        })
    }
}

/// `gcd(f_i · D) / D` for `D` the lcm of denominators.
pub fn principal_generator<'a>(fs: impl Iterator<Item = &'a RatFun>) -> RatFun {
    let fs: Vec<&RatFun> = fs.filter(|f| !f.is_zero()).collect();
    if fs.is_empty() {
        return RatFun::zero();
    }
    let den = fs.iter().fold(Poly::one(), |acc, f| poly_lcm(&acc, f.den()));
    let num = fs.iter().fold(Poly::zero(), |acc, f| {
        let scaled = f.num() * &den.div_exact(f.den()).expect("lcm is a multiple");
        poly_gcd(&acc, &scaled)
    });
    RatFun::new(num, den)
}

/// The lattice generated by the translates `image·T^i` whose poles lie in the
/// window, after checking that `image` is killed by every relation.
pub fn embed_in_ks(pres: &CyclicPresentation, image: &RatFun, radius: i64) -> Result<WindowedLattice> {
    let chi = image.poles().first().map_or_else(Rational::zero, normalize_chi);
    embed_in_ks_with(pres, image, &TwistedModel::plain(), &chi, radius)
}

pub fn embed_in_ks_with(
    pres: &CyclicPresentation,
    image: &RatFun,
    model: &TwistedModel,
    chi: &Rational,
    radius: i64,
) -> Result<WindowedLattice> {
    for rel in pres.relations() {
        let OreOperator::Shift(g) = rel else {
            return Err(Error::ParameterMismatch(format!(
                "embedding into k(s) needs a shift-algebra presentation, got {}",
                pres.algebra()
            )));
        };
        let residue = model.act(image, g);
        if !residue.is_zero() {
            return Err(Error::NotAMorphism(format!(
                "{image} acted on by {g} gives {residue}, not 0"
            )));
        }
    }
    let chi = normalize_chi(chi);
    let reach = 2 * radius + 2 + pole_offsets(image, &chi).map_or(0, |o| o.iter().map(|x| x.abs()).max().unwrap_or(0));
    let mut generators = Vec::new();
    for i in -reach..=reach {
        let f = model.translate(image, i);
        let ok = pole_offsets(&f, &chi).is_some_and(|o| o.iter().all(|x| x.abs() <= radius));
        if ok && !f.is_zero() {
            generators.push(LatticeGenerator { label: translate_label(i), value: f });
        }
    }
    WindowedLattice::with_model(&chi, radius, generators, model.clone())
}

pub(crate) fn translate_label(i: i64) -> String {
    format!("1*{}", ShiftOp::t_pow(i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub vanishes: bool,
    pub generators: usize,
    pub unknowns: usize,
    pub equations: usize,
    pub solution_dimension: usize,
}

/// Whether every `k[s]`-linear map from the lattice to `k[s]` sending each
/// generator to a polynomial of degree `<= degree_bound` is zero.
pub fn hom_to_free_vanishes(m: &WindowedLattice, degree_bound: u32) -> Result<HomWitness> {
    if m.radius() <= i64::from(degree_bound) + 1 {
        return Err(Error::Precondition(format!(
            "window radius {} must exceed degree bound {} + 1",
            m.radius(),
            degree_bound
        )));
    }
    let gens: Vec<&RatFun> = m.generators().iter().map(|g| &g.value).filter(|f| !f.is_zero()).collect();
    let width = degree_bound as usize + 1;
    let unknowns = gens.len() * width;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // b·g_i = a·g_j with a/b = g_i/g_j reduced forces b φ_i = a φ_j
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let ratio = gens[i] * &gens[j].inv().expect("nonzero");
            let (a, b) = (ratio.num(), ratio.den());
            let deg = width + a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
            for k in 0..deg {
                let mut row = vec![Rational::zero(); unknowns];
                for t in 0..width {
                    if k >= t {
                        row[i * width + t] += b.coeff(k - t);
                        row[j * width + t] -= a.coeff(k - t);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let dim = if rows.is_empty() { unknowns } else { nullspace(&rows, unknowns).len() };
    Ok(HomWitness {
        vanishes: dim == 0,
        generators: gens.len(),
        unknowns,
        equations: rows.len(),
        solution_dimension: dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizationWitness {
    pub holds: bool,
    pub fibers: Vec<(String, Option<String>)>,
    pub one_in_localization: bool,
}

/// Away from the orbit the lattice is the unit object: each test fiber is
/// generated by 1, and 1 lies in the lattice once the window's linear
/// factors are inverted.
pub fn localization_identity_check(m: &WindowedLattice, test_points: &[Rational]) -> Result<LocalizationWitness> {
    for p in test_points {
        if is_integer(&(p - m.chi())) || m.generators().iter().any(|g| g.value.valuation(p) < 0) {
            return Err(Error::Precondition(format!(
                "test point {} lies on the orbit {} + Z",
                format_rational(p),
                format_rational(m.chi())
            )));
        }
    }
    let fibers: Vec<(String, Option<String>)> = test_points
        .iter()
        .map(|p| {
            let label = (m.valuation(p) == 0 && m.contains(&RatFun::one())).then(|| "1".to_string());
            (format_rational(p), label)
        })
        .collect();
    let mut rest = m.principal().num().clone();
    for i in -m.radius()..=m.radius() {
        let lin = Poly::linear(&(m.chi() + int(i)));
        while !rest.is_zero() && lin.divides(&rest) {
            rest = rest.div_exact(&lin).expect("divisible");
        }
    }
    let one_in_localization = !rest.is_zero() && rest.is_constant();
    let holds = one_in_localization && fibers.iter().all(|(_, g)| g.is_some());
    Ok(LocalizationWitness { holds, fibers, one_in_localization })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn b_pres() -> CyclicPresentation {
        CyclicPresentation::shift(&(&ShiftOp::s() + &ShiftOp::one()) - &(&ShiftOp::t_inv() * &ShiftOp::s()))
    }

    fn inv_lin(a: i64) -> RatFun {
        RatFun::new(Poly::one(), Poly::linear(&int(a)))
    }

    fn b_lattice(n: i64) -> WindowedLattice {
        embed_in_ks(&b_pres(), &inv_lin(-1), n).unwrap()
    }

    #[test]
    fn b_lattice_generators() {
        let l = b_lattice(10);
        let mut poles: Vec<i64> = l
            .generators()
            .iter()
            .map(|g| to_i64(&g.value.poles()[0]).unwrap())
            .collect();
        poles.sort_unstable();
        assert_eq!(poles, (-10..=10).collect::<Vec<_>>());
        assert!(l.generators().iter().all(|g| g.value.num().is_one() && g.value.den().degree() == Some(1)));
        assert!(l.contains(&RatFun::one()));
        assert!(!l.contains(&RatFun::new(Poly::one(), Poly::from_ints(&[0, 0, 1]))));
    }

    #[test]
    fn translate_of_generator() {
        assert_eq!(TwistedModel::plain().translate(&inv_lin(-1), -1), inv_lin(0));
    }

    #[test]
    fn rejects_non_annihilated_image() {
        assert!(matches!(embed_in_ks(&b_pres(), &RatFun::one(), 5), Err(Error::NotAMorphism(_))));
        // acceptance is stable under rational scaling
        let scaled = inv_lin(-1).scale(&rat(-7, 3));
        assert!(embed_in_ks(&b_pres(), &scaled, 5).is_ok());
    }

    #[test]
    fn fibers() {
        let l = b_lattice(10);
        let f = l.fiber(&int(3), 1).unwrap();
        assert_eq!(f.free_rank(), Some(1));
        assert_eq!(f.generators()[0], translate_label(-4));
        let g = l.fiber(&rat(1, 2), 1).unwrap();
        assert_eq!(g.generators()[0], "1");
        assert!(l.fiber(&int(11), 1).is_err());
    }

    #[test]
    fn hom_to_free() {
        let w = hom_to_free_vanishes(&b_lattice(10), 5).unwrap();
        assert!(w.vanishes);
        let free = WindowedLattice::from_generators(
            &int(0),
            10,
            vec![LatticeGenerator { label: "1".into(), value: RatFun::one() }],
        )
        .unwrap();
        assert!(!hom_to_free_vanishes(&free, 5).unwrap().vanishes);
        assert!(matches!(hom_to_free_vanishes(&b_lattice(5), 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn localization() {
        let pts = [rat(1, 2), rat(-3, 2), rat(1, 3)];
        assert!(localization_identity_check(&b_lattice(8), &pts).unwrap().holds);
        let half = WindowedLattice::from_generators(
            &rat(1, 2),
            3,
            vec![LatticeGenerator {
                label: "1/(s-1/2)".into(),
                value: RatFun::new(Poly::one(), Poly::linear(&rat(1, 2))),
            }],
        )
        .unwrap();
        assert!(localization_identity_check(&half, &[rat(1, 2)]).is_err());
        let free = WindowedLattice::from_generators(
            &int(0),
            3,
            vec![LatticeGenerator { label: "1".into(), value: RatFun::one() }],
        )
        .unwrap();
        assert!(localization_identity_check(&free, &[rat(1, 2)]).unwrap().holds);
    }
}
