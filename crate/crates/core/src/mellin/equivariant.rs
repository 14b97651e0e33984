//! Finitely presented `k[s]`-modules with a semilinear shift
//! `τ(p(s)·m) = p(s+1)·τ(m)`.
//!
//! A finitely presented torsion module supported on an orbit cannot carry a
//! bijective `τ`, so windowed modules leave `τ` undefined on edge generators.

use num_traits::Zero;

use super::local::{normalize_chi, LocalModule};
use crate::error::{Error, Result};
use crate::ore::ShiftOp;
use crate::scalars::linalg::solve;
use crate::scalars::poly::poly_gcd;
use crate::scalars::{format_rational, int, smith_normal_form, Poly, PolyMatrix, RatFun, Rational};

pub type PolyVector = Vec<Poly>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantModule {
    presentation: PolyMatrix,
    labels: Vec<String>,
    tau: Vec<Option<PolyVector>>,
    tau_inv: Vec<Option<PolyVector>>,
    window: Option<(Rational, i64)>,
}

fn unit_vector(len: usize, k: usize) -> PolyVector {
    let mut v = vec![Poly::zero(); len];
    v[k] = Poly::one();
    v
}

impl EquivariantModule {
    /// Columns of `presentation` are relations among the generators.
    pub fn new(
        presentation: PolyMatrix,
        labels: Vec<String>,
        tau: Vec<Option<PolyVector>>,
        tau_inv: Vec<Option<PolyVector>>,
    ) -> Result<Self> {
        let g = presentation.rows();
        if labels.len() != g || tau.len() != g || tau_inv.len() != g {
            return Err(Error::InvalidParameter(format!(
                "module with {g} generators needs {g} labels and shift images"
            )));
        }
        let bad = tau.iter().chain(&tau_inv).flatten().any(|v| v.len() != g);
        if bad {
            return Err(Error::InvalidParameter("shift image of the wrong length".into()));
        }
        Ok(EquivariantModule { presentation, labels, tau, tau_inv, window: None })
    }

    /// `k[s]^rank` with `τ` the coefficientwise translation.
    pub fn free(rank: usize) -> Self {
        let tau: Vec<Option<PolyVector>> = (0..rank).map(|k| Some(unit_vector(rank, k))).collect();
        EquivariantModule {
            presentation: PolyMatrix::zeros(rank, 0),
            labels: (0..rank).map(|k| format!("e{k}")).collect(),
            tau: tau.clone(),
            tau_inv: tau,
            window: None,
        }
    }

    /// `k[s]/(p)` with no shift data.
    pub fn cyclic(p: Poly) -> Self {
        EquivariantModule {
            presentation: PolyMatrix::from_rows(vec![vec![p]]),
            labels: vec!["e".into()],
            tau: vec![None],
            tau_inv: vec![None],
            window: None,
        }
    }

    /// The `k[s]`-module `D/gD` truncated to generators `𝟏T^m`, `|m| <= radius`,
    /// with the relations `𝟏·g·T^c` supported in the window and `τ = ·T`.
    pub fn windowed_shift_module(g: &ShiftOp, radius: i64) -> Self {
        let len = (2 * radius + 1) as usize;
        let idx = |m: i64| (m + radius) as usize;
        let mut columns = Vec::new();
        if let Some((lo, hi)) = g.t_range() {
            for c in (-radius - lo)..=(radius - hi) {
                let mut col = vec![Poly::zero(); len];
                for (&j, p) in g.terms() {
                    col[idx(c + j)] = p.shift(&int(c));
                }
                columns.push(col);
            }
        }
        let mut pres = PolyMatrix::zeros(len, columns.len());
        for (k, col) in columns.into_iter().enumerate() {
            for (r, p) in col.into_iter().enumerate() {
                pres.set(r, k, p);
            }
        }
        let tau = (-radius..=radius)
            .map(|m| (m < radius).then(|| unit_vector(len, idx(m + 1))))
            .collect();
        let tau_inv = (-radius..=radius)
            .map(|m| (m > -radius).then(|| unit_vector(len, idx(m - 1))))
            .collect();
        EquivariantModule {
            presentation: pres,
            labels: (-radius..=radius).map(|m| format!("1*{}", ShiftOp::t_pow(m))).collect(),
            tau,
            tau_inv,
            window: Some((Rational::zero(), radius)),
        }
    }

    /// `⊕_{|i|<=radius} k[s]/(s-χ-i)^n`, generator `f_i` the class of
    /// `(s-χ-i)^-n`; `τ(f_i) = f_{i-1}` since `f·T = f(s+1)`.
    pub fn principal_parts(chi: &Rational, n: u32, radius: i64) -> Self {
        let chi = normalize_chi(chi);
        let len = (2 * radius + 1) as usize;
        let mut pres = PolyMatrix::zeros(len, len);
        for (k, i) in (-radius..=radius).enumerate() {
            pres.set(k, k, Poly::linear(&(&chi + int(i))).pow(n));
        }
        let tau = (0..len).map(|k| (k > 0).then(|| unit_vector(len, k - 1))).collect();
        let tau_inv = (0..len).map(|k| (k + 1 < len).then(|| unit_vector(len, k + 1))).collect();
        EquivariantModule {
            presentation: pres,
            labels: (-radius..=radius)
                .map(|i| format!("(s - {})^-{n}", format_rational(&(&chi + int(i)))))
                .collect(),
            tau,
            tau_inv,
            window: Some((chi, radius)),
        }
    }

    pub fn with_window(mut self, chi: Rational, radius: i64) -> Self {
        self.window = Some((chi, radius));
        self
    }

    pub fn presentation(&self) -> &PolyMatrix {
        &self.presentation
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generator_count(&self) -> usize {
        self.presentation.rows()
    }

    pub fn window(&self) -> Option<&(Rational, i64)> {
        self.window.as_ref()
    }

    /// `τ(Σ v_k e_k) = Σ v_k(s+1) τ(e_k)`, if `τ` is defined on the support.
    pub fn apply_tau(&self, v: &[Poly]) -> Option<PolyVector> {
        apply_semilinear(&self.tau, v, &int(1))
    }

    pub fn apply_tau_inv(&self, v: &[Poly]) -> Option<PolyVector> {
        apply_semilinear(&self.tau_inv, v, &int(-1))
    }

    /// Cyclic decomposition `⊕ k[s]/(d_j)`, with `d_j = 0` for free summands,
    /// and the generator of each summand as a vector in the original basis.
    pub fn decomposition(&self) -> Vec<(Poly, PolyVector)> {
        let g = self.generator_count();
        let p = &self.presentation;
        let columns_are_monomial = (0..p.cols()).all(|j| (0..g).filter(|&i| !p.get(i, j).is_zero()).count() <= 1);
        if columns_are_monomial {
            return (0..g)
                .map(|i| {
                    let d = p.row(i).iter().fold(Poly::zero(), |acc, x| poly_gcd(&acc, x));
                    (d, unit_vector(g, i))
                })
                .collect();
        }
        let snf = smith_normal_form(p);
        let diag = snf.invariant_factors();
        // coker P ≅ coker D via v ↦ U v, so summand k is generated by U^-1 e_k
        let u = snf.left.to_ratfun();
        (0..g)
            .map(|k| {
                let d = diag.get(k).cloned().unwrap_or_else(Poly::zero);
                let rhs: Vec<RatFun> = (0..g)
                    .map(|i| if i == k { RatFun::one() } else { RatFun::zero() })
                    .collect();
                let x = solve(&u, &rhs).expect("unimodular");
                let v = x.into_iter().map(|f| f.num().clone()).collect();
                (d, v)
            })
            .collect()
    }

    /// Torsion over `k[s]`, read off the cyclic decomposition.
    pub fn is_torsion(&self) -> bool {
        self.decomposition().iter().all(|(d, _)| !d.is_zero())
    }

    pub fn is_zero_module(&self) -> bool {
        self.decomposition().iter().all(|(d, _)| d.is_constant() && !d.is_zero())
    }

    /// `M ⊗ k[s]/(s-a)^n`.
    pub fn fiber(&self, a: &Rational, n: u32) -> LocalModule {
        let parts = self.decomposition().into_iter().map(|(d, v)| {
            let e = if d.is_zero() { n } else { d.root_multiplicity(a).min(n) };
            (e, self.format_vector(&v))
        });
        LocalModule::new(a.clone(), n, parts)
    }

    fn format_vector(&self, v: &[Poly]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.labels)
            .filter(|(p, _)| !p.is_zero())
            .map(|(p, l)| if p.is_one() { l.clone() } else { format!("({p})*{l}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Tensor product over `k[s]` with the diagonal shift.
    pub fn tensor(&self, other: &EquivariantModule) -> Result<EquivariantModule> {
        if let (Some((_, r1)), Some((_, r2))) = (&self.window, &other.window) {
            if r1 != r2 {
                return Err(Error::WindowExceeded(format!("window radii {r1} and {r2} differ")));
            }
        }
        let (g1, g2) = (self.generator_count(), other.generator_count());
        let presentation = self
            .presentation
            .kron_identity_right(g2)
            .hcat(&other.presentation.kron_identity_left(g1));
        let combine = |a: &[Option<PolyVector>], b: &[Option<PolyVector>]| -> Vec<Option<PolyVector>> {
            let mut out = Vec::with_capacity(g1 * g2);
            for x in a {
                for y in b {
                    out.push(match (x, y) {
                        (Some(x), Some(y)) => Some(kron_vec(x, y)),
                        _ => None,
                    });
                }
            }
            out
        };
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a} (x) {b}")))
            .collect();
        Ok(EquivariantModule {
            presentation,
            labels,
            tau: combine(&self.tau, &other.tau),
            tau_inv: combine(&self.tau_inv, &other.tau_inv),
            window: self.window.clone().or_else(|| other.window.clone()),
        })
    }

    /// Whether `v` lies in the column span of the presentation over `k[s]`.
    pub fn is_relation(&self, v: &[Poly]) -> bool {
        let snf = smith_normal_form(&self.presentation);
        let diag = snf.invariant_factors();
        let col = PolyMatrix::from_rows(v.iter().map(|p| vec![p.clone()]).collect());
        let uv = snf.left.mul(&col);
        (0..uv.rows()).all(|k| match diag.get(k) {
            Some(d) if !d.is_zero() => d.divides(uv.get(k, 0)),
            _ => uv.get(k, 0).is_zero(),
        })
    }

    /// `τ` maps relations to relations and `τ^-1 τ = id` wherever both are defined.
    pub fn validate_shift(&self) -> std::result::Result<(), String> {
        for j in 0..self.presentation.cols() {
            let col = self.presentation.column(j);
            if let Some(img) = self.apply_tau(&col) {
                if !self.is_relation(&img) {
                    return Err(format!("shift of relation {j} is not a relation"));
                }
            }
        }
        let g = self.generator_count();
        for k in 0..g {
            let Some(t) = &self.tau[k] else { continue };
            let Some(back) = self.apply_tau_inv(t) else { continue };
            let diff: PolyVector = back.iter().zip(unit_vector(g, k)).map(|(a, b)| a - &b).collect();
            if !self.is_relation(&diff) {
                return Err(format!("inverse shift fails on generator {}", self.labels[k]));
            }
        }
        Ok(())
    }
}

fn apply_semilinear(images: &[Option<PolyVector>], v: &[Poly], shift: &Rational) -> Option<PolyVector> {
    let mut out = vec![Poly::zero(); v.len()];
    for (k, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let img = images[k].as_ref()?;
        let ps = p.shift(shift);
        for (o, x) in out.iter_mut().zip(img) {
            if !x.is_zero() {
                *o += &(&ps * x);
            }
        }
    }
    Some(out)
}

fn kron_vec(x: &[Poly], y: &[Poly]) -> PolyVector {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Torsion decided by the shift presentation; the free module answers false.
pub fn monodromic_test(m: &EquivariantModule) -> bool {
    m.is_torsion()
}

/// Independent oracle: every generator is killed by a nonzero polynomial,
/// i.e. lies in the `k(s)`-span of the relations.
pub fn torsion_by_saturation(m: &EquivariantModule) -> bool {
    let p = m.presentation();
    let g = p.rows();
    if p.cols() == 0 {
        return g == 0;
    }
    let a = p.to_ratfun();
    (0..g).all(|k| {
        let rhs: Vec<RatFun> = (0..g).map(|i| if i == k { RatFun::one() } else { RatFun::zero() }).collect();
        solve(&a, &rhs).is_some()
    })
}
