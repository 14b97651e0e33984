//! Named checks, their parameter grids and JSON reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groupalg::{augmentation_kernel_check, pro_nzd_check, twisted_tensor_check, unit_surjectivity_check};
use crate::mellin::{
    b_embed_check, eq3_decomposition_check, exp_square_check, fb_fl_check, fourier_antipode_check,
    mon_test_agreement, monodromization_check, prop_dmod1, prop_dmod2, prop_dmod3,
};
use crate::scalars::residue::ResidueRing;
use crate::scalars::{format_rational, parse_rational, Rational};
use crate::trace::{
    bl2_check, cv_check, fbneq_check, gauss_g_diagnostic, gauss_suite, keythm_check, lem_mon_shadow,
    mon_equivalence_check, p2b_check, propb3_diagnostic,
};

macro_rules! check_ids {
    ($($variant:ident => $name:literal, $anchor:literal, $citation:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name,)*
                }
            }

            /// Short name of the statement the check exercises.
            pub fn anchor(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $anchor,)*
                }
            }

            /// The statement itself, as embedded in reports.
            pub fn citation(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $citation,)*
                }
            }
        }
    };
}

check_ids! {
    Keythm => "keythm", "Fourier square theorem",
        "Four_B o Four_B = (j^*B * -)(-d)[1]; on traces Four_B(Four_B f) = -q^d (t_{j^*B} * f)";
    CvEquivalence => "cv-equivalence", "Fourier equivalence on C_V",
        "Four_B is an equivalence on C_V with Four_B^2 = (-d-1); on traces q^{d+1} on the scaling-sum-zero subspace";
    P2b => "p2b", "convolution square of the Artin-Schreier sheaf",
        "i^*j^*L_psi * j^*L_psi = j^*B[-1]; on traces sum_l psi(-1/l) psi(x/l) = -t_B(x)";
    Bl2 => "bl2", "Fourier_B through Fourier_psi",
        "Four_B = (i^*j^*L_psi * -)[1] o Four_psi; on traces Four_B f = -(psi(-1/l) * Four_psi f)";
    Fbneq => "fbneq", "Four_B fails to be fully faithful",
        "Four_B(delta_0) = -1 and Four_B(delta_1) = -t_B, while Hom(0_!R, 1_!R) = 0 and Hom(R, B) != 0";
    GaussSuite => "gauss-suite", "Gauss sums and Kummer point counts",
        "g(chi, psi) g(chi^-1, psi) chi(-1) = q for nontrivial chi; t_{I^0_n}(x) = #{y : y^n = x}";
    GaussGDiagnostic => "gauss-g-diagnostic", "Gauss sheaf convolution square",
        "i^*G_n * G_n against I^1_n[-2] with G_n = I^0_n * j^*L_psi (1)[1]";
    PropB3Diagnostic => "propB3-diagnostic", "I^0_n * B against I^1_n",
        "I^0_n * j^*B against I^1_n(-1)[-2], with the Frobenius scalar on I^1_n";
    MonEquivalence => "mon-equivalence", "Fourier equivalence on monodromic objects",
        "Four_B restricted to unipotently monodromic objects of finite order is an equivalence";
    LemMonShadow => "lem-mon-shadow", "I^0 * - on monodromic objects",
        "I^0_n * f = f on chi-monodromic f with chi^n = 1; at finite level the factor is q - 1";
    MellinBEmbed => "mellin-b-embed", "the Mellin image of B embeds in k(s)",
        "B|G_m has Mellin image D/((s+1) - T^-1 s)D, and 1 -> 1/(s+1) embeds it in k(s) with lattice generated by 1/(s+i)";
    PropDmod1 => "propDmod1", "no maps from B' to k[s]",
        "Hom(B', k[s]) = 0 for the k[s]-lattice B' generated by the 1/(s+i)";
    PropDmod2 => "propDmod2", "B' is invertible away from Z",
        "O(A^1 - Z) (x) B' = O(A^1 - Z)";
    PropDmod3 => "propDmod3", "B' on skyscrapers",
        "(+)_i k[s]/(s - chi - i)^n (x) B' is free with generator 1/(s-i) (x) 1 in each fiber";
    Dmodmon => "dmodmon", "monodromic modules absorb B and L",
        "I^{0,n}_chi * B = j_! I^{0,n}_chi = I^{0,n}_chi * L, via M(I) (x) B' = M(I) and M(I) (x) E = M(I)";
    ExpSquare => "exp-square", "inverted exponential squared is B",
        "i^* j^*L * L = B, realised on Mellin images as a windowed equivariant isomorphism";
    MonTest => "mon-test", "monodromic means torsion over k[s]",
        "a Mellin image is monodromic exactly when it is a torsion k[s]-module";
    Eq3Decomp => "eq3-decomp", "Mellin image of I^{0,n}_chi",
        "A_{chi,n}/k[s] = (+)_i k[s]/(s - chi - i)^n";
    FourierAntipode => "fourier-antipode", "Weyl Fourier automorphism",
        "x_i -> -d_i, d_i -> x_i squares to the antipode x -> -x, d -> -d";
    FbFlAgree => "fb-fl-agree", "Four_B = Four_L on monodromic modules",
        "Four_{V/S,B} = Four_{V/S,L} on monodromic D-modules, refused on non-monodromic input";
    AppendixAugmentation => "appendix-augmentation", "augmentation ideal of a cyclic group algebra",
        "the kernel of A^0_n -> Z/l^r is generated by t - 1";
    AppendixNzd => "appendix-nzd", "t - 1 is a non-zero-divisor in the limit",
        "t~ - 1 is a non-zero-divisor on lim A^0_m: annihilators at level n l^r die at level n";
    AppendixUnits => "appendix-units", "units surject along transition maps",
        "(A^0_{n'})^x -> (A^0_n)^x is surjective for n | n'";
    AppendixTensor => "appendix-tensor", "twisted rank-one modules",
        "A^i_m (x) A^j_n = A^{i+j}_n for n | m, compatibly with transition maps";
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL.iter().copied().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCheck(s.into()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Raw parameters; every check falls back to its own defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub q: Option<u32>,
    pub d: Option<usize>,
    pub chi: Option<Rational>,
    pub n: Option<u64>,
    pub window: Option<i64>,
    pub ell: Option<u64>,
    pub r: Option<u32>,
    pub nprime: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub degree: Option<u32>,
}

impl Params {
    pub fn parse_chi(text: &str) -> Result<Rational> {
        parse_rational(text).ok_or_else(|| Error::InvalidParameter(format!("`{text}` is not a rational number")))
    }
}

/// Parameters as resolved by a check, recorded in the report.
struct Resolved<'a> {
    raw: &'a Params,
    used: BTreeMap<String, Value>,
}

impl<'a> Resolved<'a> {
    fn get<T: Clone + Serialize>(&mut self, key: &str, raw: Option<T>, default: T) -> T {
        let v = raw.unwrap_or(default);
        self.used.insert(key.into(), serde_json::to_value(&v).expect("plain value"));
        v
    }

    fn q(&mut self, default: u32) -> u32 {
        self.get("q", self.raw.q, default)
    }

    fn d(&mut self, default: usize) -> usize {
        self.get("d", self.raw.d, default)
    }

    fn n(&mut self, default: u64) -> u64 {
        self.get("n", self.raw.n, default)
    }

    fn n32(&mut self, default: u32) -> Result<u32> {
        let n = self.n(default.into());
        u32::try_from(n).map_err(|_| Error::InvalidParameter(format!("n = {n} too large")))
    }

    fn window(&mut self, default: i64) -> i64 {
        self.get("window", self.raw.window, default)
    }

    fn seed(&mut self) -> u64 {
        self.get("seed", self.raw.seed, 0)
    }

    fn samples(&mut self, default: usize) -> usize {
        self.get("samples", self.raw.samples, default)
    }

    fn chi(&mut self, default: Rational) -> Rational {
        let c = self.raw.chi.clone().unwrap_or(default);
        self.used.insert("chi".into(), Value::String(format_rational(&c)));
        c
    }

    fn ell_r(&mut self) -> (u64, u32) {
        (self.get("ell", self.raw.ell, 2), self.get("r", self.raw.r, 2))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Diagnostic,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Diagnostic => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Diagnostic => "diagnostic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: CheckId,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub witness: Value,
    pub citation: String,
    pub wall_time_ms: f64,
}

impl CheckReport {
    /// The report with the timing zeroed, for comparisons across runs.
    pub fn without_timing(&self) -> CheckReport {
        CheckReport { wall_time_ms: 0.0, ..self.clone() }
    }
}

fn graded<W: Serialize>(passed: bool, w: W) -> (Verdict, Value) {
    let v = if passed { Verdict::Pass } else { Verdict::Fail };
    (v, serde_json::to_value(w).expect("witness serializes"))
}

fn diagnostic<W: Serialize>(w: W) -> (Verdict, Value) {
    (Verdict::Diagnostic, serde_json::to_value(w).expect("witness serializes"))
}

fn ring(p: &mut Resolved) -> Result<ResidueRing> {
    let (ell, r) = p.ell_r();
    ResidueRing::new(ell, r)
}

fn dispatch(id: CheckId, p: &mut Resolved) -> Result<(Verdict, Value)> {
    use CheckId::*;
    Ok(match id {
        Keythm => {
            let w = keythm_check(p.q(3), p.d(1), p.samples(8), p.seed())?;
            graded(w.passed && w.kernel_closed_form != Some(false), w)
        }
        CvEquivalence => {
            let w = cv_check(p.q(3), p.d(1))?;
            graded(w.passed, w)
        }
        P2b => {
            let w = p2b_check(p.q(5), 1)?;
            graded(w.passed, w)
        }
        Bl2 => {
            let w = bl2_check(p.q(5), p.d(1), p.samples(8), p.seed())?;
            graded(w.passed, w)
        }
        Fbneq => {
            let w = fbneq_check(p.q(3))?;
            graded(w.passed, w)
        }
        GaussSuite => {
            let w = gauss_suite(p.q(5), p.n(4))?;
            graded(w.passed, w)
        }
        GaussGDiagnostic => diagnostic(gauss_g_diagnostic(p.q(3), p.n(1))?),
        PropB3Diagnostic => diagnostic(propb3_diagnostic(p.q(3), p.n(1))?),
        MonEquivalence => {
            let w = mon_equivalence_check(p.q(3), p.d(1), p.n(2))?;
            graded(w.passed, w)
        }
        LemMonShadow => {
            let (q, n) = (p.q(7), p.n(3));
            let ws = (0..u64::from(q) - 1).map(|j| lem_mon_shadow(q, n, j)).collect::<Result<Vec<_>>>()?;
            let passed = ws.iter().all(|w| w.passed);
            graded(passed, json!({ "characters": ws, "pro_limit_factor": q.to_string() }))
        }
        MellinBEmbed => {
            let w = b_embed_check(p.window(10))?;
            graded(w.passed, w)
        }
        PropDmod1 => {
            let w = prop_dmod1(p.window(8), p.get("degree", p.raw.degree, 5))?;
            graded(w.passed, w)
        }
        PropDmod2 => {
            let w = prop_dmod2(&p.chi(Rational::from_integer(0.into())), p.window(8))?;
            graded(w.passed, w)
        }
        PropDmod3 => {
            let chi = p.chi(Rational::new(1.into(), 2.into()));
            let w = prop_dmod3(&chi, p.n32(2)?, p.window(6))?;
            graded(w.passed, w)
        }
        Dmodmon => {
            let chi = p.chi(Rational::from_integer(0.into()));
            let w = monodromization_check(&chi, p.n32(1)?, p.window(8))?;
            graded(w.passed, w)
        }
        ExpSquare => {
            let w = exp_square_check(p.window(6))?;
            graded(w.passed, w)
        }
        MonTest => {
            let w = mon_test_agreement(p.samples(20), p.seed());
            graded(w.passed, w)
        }
        Eq3Decomp => {
            let chi = p.chi(Rational::from_integer(0.into()));
            let (n, window, samples, seed) = (p.n32(2)?, p.window(6), p.samples(8), p.seed());
            let w = eq3_decomposition_check(&chi, n, window, samples, seed)?;
            graded(w.passed, w)
        }
        FourierAntipode => {
            let w = fourier_antipode_check(p.samples(1000), p.d(1), p.seed());
            graded(w.passed, w)
        }
        FbFlAgree => {
            let w = fb_fl_check(&p.chi(Rational::new(1.into(), 3.into())), p.window(4))?;
            graded(w.passed, w)
        }
        AppendixAugmentation => {
            let (ell, r) = p.ell_r();
            let w = augmentation_kernel_check(ell, r, p.n(3) as usize)?;
            graded(w.passed, w)
        }
        AppendixNzd => {
            let (ell, r) = p.ell_r();
            let w = pro_nzd_check(ell, r, p.n(3) as usize, None)?;
            graded(w.passed, w)
        }
        AppendixUnits => {
            let (ell, r) = p.ell_r();
            let n = p.n(2) as usize;
            let nprime = p.get("nprime", p.raw.nprime, 2 * n);
            let w = unit_surjectivity_check(ell, r, n, nprime)?;
            graded(w.passed, w)
        }
        AppendixTensor => {
            let ring = ring(p)?;
            let w = twisted_tensor_check(ring, p.n(6) as usize, p.seed())?;
            graded(w.passed, w)
        }
    })
}

/// Runs one check. Invalid parameters surface as errors, not reports.
pub fn run_check(id: CheckId, params: &Params) -> Result<CheckReport> {
    let start = Instant::now();
    let mut resolved = Resolved { raw: params, used: BTreeMap::new() };
    let (verdict, witness) = dispatch(id, &mut resolved)?;
    Ok(CheckReport {
        check: id,
        parameters: resolved.used,
        verdict,
        witness,
        citation: id.citation().into(),
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::InvalidParameter(format!("unknown profile `{s}`"))),
        }
    }
}

fn qd(q: u32, d: usize) -> Params {
    Params { q: Some(q), d: Some(d), ..Params::default() }
}

fn qn(q: u32, n: u64) -> Params {
    Params { q: Some(q), n: Some(n), ..Params::default() }
}

fn chi_n(chi: &Rational, n: u64, window: i64) -> Params {
    Params { chi: Some(chi.clone()), n: Some(n), window: Some(window), ..Params::default() }
}

fn window(w: i64) -> Params {
    Params { window: Some(w), ..Params::default() }
}

fn lrn(ell: u64, r: u32, n: u64) -> Params {
    Params { ell: Some(ell), r: Some(r), n: Some(n), ..Params::default() }
}

fn section5_chis() -> Vec<Rational> {
    vec![Rational::from_integer(0.into()), Rational::new(1.into(), 2.into()), Rational::new(1.into(), 3.into())]
}

/// Parameter grid for one check. The seed is applied afterwards.
pub fn grid(id: CheckId, profile: Profile) -> Vec<Params> {
    use CheckId::*;
    let full = profile == Profile::Full;
    let primes: &[u32] = if full { &[2, 3, 5, 7, 11] } else { &[2, 3, 5, 7] };
    let odd: Vec<u32> = primes.iter().copied().filter(|&q| q > 2).collect();
    let max_window = if full { 12 } else { 8 };
    let diag_q: &[u32] = if full { &[3, 5, 7, 11] } else { &[3, 5] };
    let mut out = Vec::new();
    match id {
        Keythm => {
            out.extend(primes.iter().map(|&q| qd(q, 1)));
            out.extend([2, 3, 5].iter().map(|&q| qd(q, 2)));
            if full {
                out.extend([qd(4, 1), qd(8, 1), qd(9, 1), qd(7, 2), qd(2, 3), qd(3, 3)]);
            }
        }
        CvEquivalence => {
            for q in [3, 5] {
                out.extend([qd(q, 1), qd(q, 2)]);
            }
            if full {
                out.extend([qd(7, 1), qd(9, 1), qd(11, 1), qd(7, 2), qd(3, 3)]);
            }
        }
        P2b => out.extend(odd.iter().map(|&q| qd(q, 1)).map(|p| Params { d: None, ..p })),
        Bl2 => out.extend(odd.iter().map(|&q| qd(q, 1))),
        Fbneq => out.extend(primes.iter().map(|&q| Params { q: Some(q), ..Params::default() })),
        GaussSuite => {
            out.extend([qn(5, 4), qn(7, 2), qn(7, 3), qn(7, 6)]);
            if full {
                out.extend([qn(9, 8), qn(11, 5), qn(11, 10), qn(13, 12)]);
            }
        }
        GaussGDiagnostic | PropB3Diagnostic => {
            for &q in diag_q {
                out.extend([qn(q, 1), qn(q, 2)]);
            }
        }
        MonEquivalence => {
            out.extend([
                Params { q: Some(3), d: Some(1), n: Some(2), ..Params::default() },
                Params { q: Some(5), d: Some(1), n: Some(4), ..Params::default() },
                Params { q: Some(5), d: Some(2), n: Some(2), ..Params::default() },
            ]);
            if full {
                out.extend([
                    Params { q: Some(7), d: Some(1), n: Some(6), ..Params::default() },
                    Params { q: Some(5), d: Some(2), n: Some(4), ..Params::default() },
                ]);
            }
        }
        LemMonShadow => {
            out.extend([qn(7, 3), qn(5, 4)]);
            if full {
                out.extend([qn(7, 6), qn(11, 5), qn(13, 4)]);
            }
        }
        MellinBEmbed => out.extend([window(10)]),
        PropDmod1 => out.extend((8..=max_window).step_by(2).map(|w| Params { degree: Some(5), ..window(w) })),
        PropDmod2 => {
            for chi in section5_chis() {
                out.push(Params { chi: Some(chi), ..window(8) });
            }
        }
        PropDmod3 | Dmodmon => {
            for chi in section5_chis() {
                for n in 1..=3 {
                    out.push(chi_n(&chi, n, 8));
                }
            }
            if full {
                out.extend(section5_chis().iter().map(|chi| chi_n(chi, 2, 12)));
            }
        }
        ExpSquare => out.extend((6..=if full { 10 } else { 6 }).step_by(2).map(window)),
        MonTest => out.push(Params { samples: Some(20), ..Params::default() }),
        Eq3Decomp => {
            for chi in section5_chis() {
                for n in 1..=2 {
                    out.push(chi_n(&chi, n, 6));
                }
            }
        }
        FourierAntipode => {
            out.push(Params { samples: Some(1000), d: Some(1), ..Params::default() });
            out.push(Params { samples: Some(if full { 1000 } else { 200 }), d: Some(2), ..Params::default() });
        }
        FbFlAgree => out.extend(section5_chis().into_iter().skip(1).map(|chi| Params { chi: Some(chi), ..window(4) })),
        AppendixAugmentation | AppendixNzd => {
            for ell in [2, 3] {
                for r in 1..=2 {
                    out.extend((1..=6).map(|n| lrn(ell, r, n)));
                }
            }
        }
        AppendixUnits => {
            for ell in [2u64, 3] {
                for r in 1..=2u32 {
                    for n in 1..=6u64 {
                        // largest multiple of n up to 6, or n itself
                        let nprime = (6 / n) * n;
                        out.push(Params { nprime: Some(nprime as usize), ..lrn(ell, r, n) });
                    }
                }
            }
        }
        AppendixTensor => {
            for ell in [2, 3] {
                for r in 1..=2 {
                    out.push(lrn(ell, r, if full { 12 } else { 6 }));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AggregateReport {
    pub profile: Profile,
    pub seed: u64,
    pub passed: bool,
    pub counts: BTreeMap<String, usize>,
    pub reports: Vec<CheckReport>,
}

fn error_report(id: CheckId, params: &Params, e: &Error) -> CheckReport {
    CheckReport {
        check: id,
        parameters: BTreeMap::from([("raw".into(), Value::String(format!("{params:?}")))]),
        verdict: Verdict::Fail,
        witness: json!({ "error": e.to_string() }),
        citation: id.citation().into(),
        wall_time_ms: 0.0,
    }
}

/// Every check over its grid, run in parallel; reports ordered by check
/// then grid position. Passes when no report fails.
pub fn run_all(profile: Profile, seed: u64) -> AggregateReport {
    let jobs: Vec<(CheckId, Params)> = CheckId::ALL
        .iter()
        .flat_map(|&id| grid(id, profile).into_iter().map(move |p| (id, Params { seed: Some(seed), ..p })))
        .collect();
    let reports: Vec<CheckReport> = jobs
        .par_iter()
        .map(|(id, p)| run_check(*id, p).unwrap_or_else(|e| error_report(*id, p, &e)))
        .collect();
    let mut counts = BTreeMap::new();
    for r in &reports {
        *counts.entry(r.verdict.to_string()).or_insert(0) += 1;
    }
    AggregateReport {
        profile,
        seed,
        passed: reports.iter().all(|r| r.verdict != Verdict::Fail),
        counts,
        reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_round_trip() {
        assert_eq!(CheckId::ALL.len(), 24);
        for &id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<CheckId>(), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn citations_cover_every_anchor() {
        let anchors: BTreeSet<_> = CheckId::ALL.iter().map(|c| c.anchor()).collect();
        assert_eq!(anchors.len(), CheckId::ALL.len());
        assert!(CheckId::ALL.iter().all(|c| !c.citation().is_empty()));
        for &id in CheckId::ALL {
            assert!(!grid(id, Profile::Quick).is_empty(), "{id}");
        }
    }

    #[test]
    fn spot_checks() {
        let r = run_check(CheckId::Keythm, &qd(3, 1)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.parameters["q"], json!(3));
        let r = run_check(CheckId::PropB3Diagnostic, &qn(3, 1)).unwrap();
        assert_eq!(r.verdict.exit_code(), 2);
        let r = run_check(CheckId::PropDmod3, &chi_n(&Rational::new(1.into(), 2.into()), 2, 6)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(run_check(CheckId::GaussSuite, &qn(7, 4)).is_err());
    }
}
