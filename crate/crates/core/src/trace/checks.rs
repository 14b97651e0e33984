//! Verification routines over `F_q`.

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::characters::CharacterTable;
use super::function::{TraceFunction, TwistShift};
use super::space::{FqSpace, Pairing};
use super::transforms::{
    conv_gm, eigenfunction, four_b, four_b_dual, four_psi, pull_inverse, pull_neg_inverse, restrict_gm, t_b,
    t_i0n, t_i0n_characters, t_i1n, t_jb,
};
use crate::error::{Error, Result};
use crate::groupalg::frobenius_scalar_integral;
use crate::scalars::linalg::{determinant, rank, solve};
use crate::scalars::{format_rational, int, CycScalar, FiniteField, Rational};

/// Above this many points, checks sample random functions instead of a
/// delta basis.
pub const EXHAUSTIVE_LIMIT: usize = 625;

fn field(q: u32) -> Result<Arc<FiniteField>> {
    FiniteField::of_order(q)
}

fn prime_field(q: u32) -> Result<Arc<FiniteField>> {
    let f = field(q)?;
    if f.degree() != 1 {
        return Err(Error::Precondition(format!("q = {q} must be prime")));
    }
    Ok(f)
}

fn random_function(space: &Arc<FqSpace>, rng: &mut ChaCha8Rng) -> TraceFunction {
    let vals: Vec<i64> = (0..space.size()).map(|_| rng.gen_range(-3..=3)).collect();
    TraceFunction::from_rational_fn(space, |i| int(vals[i]))
}

/// Delta basis when small enough, otherwise `trials` seeded random functions.
fn test_functions(space: &Arc<FqSpace>, trials: usize, seed: u64) -> (&'static str, Vec<TraceFunction>) {
    if space.size() <= EXHAUSTIVE_LIMIT {
        ("delta-basis", (0..space.size()).map(|i| TraceFunction::delta(space, i)).collect())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ("random", (0..trials).map(|_| random_function(space, &mut rng)).collect())
    }
}

fn q_power(q: u32, e: usize) -> Rational {
    num_traits::pow(int(q as i64), e)
}

/// `Σ_ξ t_B(vξ) t_B(ξw)` against `{q; 0; q² - q; -q}` for all `(v, w)`.
pub fn kernel_closed_form_holds(q: u32) -> Result<bool> {
    let f = field(q)?;
    let line = FqSpace::line(&f);
    let tb = t_b(&line);
    let qi = q as i64;
    for v in f.elements() {
        for w in f.elements() {
            let brute = f.elements().fold(CycScalar::rational(Rational::zero()), |acc, xi| {
                acc.add(&tb.value(f.mul(v, xi) as usize).mul(tb.value(f.mul(xi, w) as usize)))
            });
            let expected = match (v == 0, w == 0) {
                (true, true) => qi,
                (true, false) | (false, true) => 0,
                _ if v == w => qi * qi - qi,
                _ => -qi,
            };
            if brute.as_rational() != Some(int(expected)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeythmWitness {
    pub passed: bool,
    pub q: u32,
    pub d: usize,
    pub mode: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub scalar: String,
    pub kernel_closed_form: Option<bool>,
}

/// `Four_B(Four_B f) = -q^d · (t_{j^*B} * f)`: the factor `-q^d` is the
/// trace of `(-d)[1]`.
pub fn keythm_check(q: u32, d: usize, trials: usize, seed: u64) -> Result<KeythmWitness> {
    let f = field(q)?;
    let space = FqSpace::new(&f, d)?;
    let line = FqSpace::line(&f);
    let pairing = Pairing::standard(d);
    let kernel = t_jb(&line);
    let scalar = TwistShift::new(-(d as i64), 1).scalar(q);
    let (mode, funcs) = test_functions(&space, trials, seed);
    let mut failures = Vec::new();
    for (k, func) in funcs.iter().enumerate() {
        let lhs = four_b_dual(&four_b(func, &pairing)?, &pairing)?;
        let rhs = conv_gm(&kernel, func)?.scale_rational(&scalar);
        if lhs != rhs {
            failures.push(format!("test function {k}"));
        }
    }
    Ok(KeythmWitness {
        passed: failures.is_empty(),
        q,
        d,
        mode: mode.into(),
        cases: funcs.len(),
        failures,
        scalar: format_rational(&scalar),
        kernel_closed_form: (d == 1).then(|| kernel_closed_form_holds(q)).transpose()?,
    })
}

/// Orbit representatives of `F_q^×` acting on `F_q^d - 0`, with each orbit
/// listed as `g^k v_0` for the fixed generator `g`.
pub fn scaling_orbits(space: &FqSpace) -> Vec<Vec<usize>> {
    let field = space.field();
    let mut seen = vec![false; space.size()];
    seen[0] = true;
    let mut out = Vec::new();
    for v in 1..space.size() {
        if seen[v] {
            continue;
        }
        let orbit: Vec<usize> = (0..field.order() as u64 - 1).map(|k| space.scale(field.exp(k), v)).collect();
        for &w in &orbit {
            seen[w] = true;
        }
        out.push(orbit);
    }
    out
}

/// `Σ_{λ ∈ F_q^×} f(λ v) = 0` for every `v`.
pub fn in_scaling_sum_zero(f: &TraceFunction) -> bool {
    let space = f.space();
    let field = space.field();
    (0..space.size()).all(|v| {
        (1..field.order())
            .fold(CycScalar::rational(Rational::zero()), |acc, l| acc.add(f.value(space.scale(l, v))))
            .is_zero()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CvWitness {
    pub passed: bool,
    pub q: u32,
    pub d: usize,
    pub dimension: usize,
    pub eigenvalue: String,
    pub identity_holds: bool,
    pub stable: bool,
    pub control_fails: bool,
    pub character_example: Option<bool>,
}

/// On `{f : Σ_λ f(λv) = 0}`, `Four_B² = q^{d+1}`, the trace of `(-d-1)`.
pub fn cv_check(q: u32, d: usize) -> Result<CvWitness> {
    let f = field(q)?;
    let space = FqSpace::new(&f, d)?;
    let pairing = Pairing::standard(d);
    let eigen = TwistShift::new(-(d as i64) - 1, 0).scalar(q);
    let mut basis = Vec::new();
    for orbit in scaling_orbits(&space) {
        for &w in &orbit[1..] {
            basis.push(TraceFunction::delta(&space, w).sub(&TraceFunction::delta(&space, orbit[0]))?);
        }
    }
    let squares = |func: &TraceFunction| -> Result<(TraceFunction, TraceFunction)> {
        let once = four_b(func, &pairing)?;
        let twice = four_b_dual(&once, &pairing)?;
        Ok((once, twice))
    };
    let mut identity_holds = true;
    let mut stable = true;
    for b in &basis {
        debug_assert!(in_scaling_sum_zero(b));
        let (once, twice) = squares(b)?;
        identity_holds &= twice == b.scale_rational(&eigen);
        stable &= in_scaling_sum_zero(&once);
    }
    let constant = TraceFunction::constant(&space, int(1));
    let control_fails = squares(&constant)?.1 != constant.scale_rational(&eigen) && !in_scaling_sum_zero(&constant);
    let character_example = if d == 1 && q > 2 {
        let chars = CharacterTable::new(&f, 1)?;
        let chi = eigenfunction(&space, &chars, 1);
        Some(in_scaling_sum_zero(&chi) && squares(&chi)?.1 == chi.scale_rational(&eigen))
    } else {
        None
    };
    Ok(CvWitness {
        passed: identity_holds && stable && control_fails && character_example != Some(false),
        q,
        d,
        dimension: basis.len(),
        eigenvalue: format_rational(&eigen),
        identity_holds,
        stable,
        control_fails,
        character_example,
    })
}

/// The function `λ ↦ ψ(-λ^-1)` on `F_q^×`.
pub fn neg_inverse_psi(line: &Arc<FqSpace>, chars: &CharacterTable) -> TraceFunction {
    let psi = TraceFunction::from_fn(line, |a| chars.psi(a as u32).clone());
    pull_neg_inverse(&psi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P2bWitness {
    pub passed: bool,
    pub q: u32,
    pub psi_index: u32,
    pub values: Vec<(String, String)>,
    pub direct_sum_matches: bool,
    pub convolution_matches: bool,
}

/// `Σ_{λ≠0} ψ(-λ^-1) ψ(λ^-1 x) = -t_B(x)` in `Z[ζ_p]`, as a direct sum and
/// as a convolution.
pub fn p2b_check(q: u32, psi_index: u32) -> Result<P2bWitness> {
    let f = prime_field(q)?;
    let line = FqSpace::line(&f);
    let chars = CharacterTable::new(&f, psi_index)?;
    let target = t_b(&line).neg();
    let direct = TraceFunction::from_fn(&line, |x| {
        (1..f.order()).fold(CycScalar::rational(Rational::zero()), |acc, l| {
            let li = f.inv(l);
            acc.add(&chars.psi(f.neg(li)).mul(chars.psi(f.mul(li, x as u32))))
        })
    });
    let psi = TraceFunction::from_fn(&line, |a| chars.psi(a as u32).clone());
    let conv = conv_gm(&neg_inverse_psi(&line, &chars), &psi)?;
    let direct_sum_matches = direct == target;
    let convolution_matches = conv == target;
    Ok(P2bWitness {
        passed: direct_sum_matches && convolution_matches,
        q,
        psi_index,
        values: direct.table(),
        direct_sum_matches,
        convolution_matches,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bl2Witness {
    pub passed: bool,
    pub q: u32,
    pub d: usize,
    pub mode: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

/// `Four_B(f) = -(ψ(-λ^-1) * Four_ψ(f))`; the sign is the trace of `[1]`.
pub fn bl2_check(q: u32, d: usize, trials: usize, seed: u64) -> Result<Bl2Witness> {
    let f = prime_field(q)?;
    let space = FqSpace::new(&f, d)?;
    let line = FqSpace::line(&f);
    let chars = CharacterTable::new(&f, 1)?;
    let pairing = Pairing::standard(d);
    let kernel = neg_inverse_psi(&line, &chars);
    let shift = TwistShift::new(0, 1).scalar(q);
    let (mode, mut funcs) = test_functions(&space, trials, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    funcs.push(random_function(&space, &mut rng));
    funcs.push(TraceFunction::zero(&space));
    let mut failures = Vec::new();
    for (k, func) in funcs.iter().enumerate() {
        let lhs = four_b(func, &pairing)?;
        let rhs = conv_gm(&kernel, &four_psi(func, &pairing, &chars)?)?.scale_rational(&shift);
        if lhs != rhs {
            failures.push(format!("test function {k}"));
        }
    }
    Ok(Bl2Witness { passed: failures.is_empty(), q, d, mode: mode.into(), cases: funcs.len(), failures })
}

/// Matrix of `Four_B` on all functions of `F_q` in the delta basis.
fn full_space_matrix(space: &Arc<FqSpace>) -> Result<Vec<Vec<Rational>>> {
    let pairing = Pairing::standard(space.d());
    let cols: Vec<Vec<Rational>> = (0..space.size())
        .map(|i| {
            four_b(&TraceFunction::delta(space, i), &pairing)
                .map(|g| g.as_rationals().expect("rational kernel"))
        })
        .collect::<Result<_>>()?;
    Ok((0..space.size()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FbneqWitness {
    pub passed: bool,
    pub q: u32,
    pub delta_zero_is_minus_one: bool,
    pub delta_one_is_minus_kernel: bool,
    pub full_space_determinant: String,
    pub full_space_square_is_scalar: bool,
    pub note: String,
}

/// `Four_B(δ_0) = -1` and `Four_B(δ_1) = -t_B`, with the operator on all
/// functions of `F_q` analysed alongside.
pub fn fbneq_check(q: u32) -> Result<FbneqWitness> {
    let f = field(q)?;
    let line = FqSpace::line(&f);
    let pairing = Pairing::standard(1);
    let delta_zero_is_minus_one =
        four_b(&TraceFunction::delta(&line, 0), &pairing)? == TraceFunction::constant(&line, int(-1));
    let delta_one_is_minus_kernel = four_b(&TraceFunction::delta(&line, 1), &pairing)? == t_b(&line).neg();
    let m = full_space_matrix(&line)?;
    let det = determinant(&m);
    let q2 = q_power(q, 2);
    let full_space_square_is_scalar = (0..line.size()).all(|i| {
        let delta = TraceFunction::delta(&line, i);
        let twice = four_b_dual(&four_b(&delta, &pairing).expect("rank 1"), &pairing).expect("rank 1");
        twice == delta.scale_rational(&q2)
    });
    Ok(FbneqWitness {
        passed: delta_zero_is_minus_one && delta_one_is_minus_kernel,
        q,
        delta_zero_is_minus_one,
        delta_one_is_minus_kernel,
        full_space_determinant: format_rational(&det),
        full_space_square_is_scalar,
        note: "failure of full faithfulness concerns Hom spaces (Hom(R, B) != 0 while \
               Hom(0_!R, 1_!R) = 0) and is not visible on trace functions; the operator on all \
               functions is invertible, but its square is not the scalar it is on the \
               scaling-sum-zero subspace"
            .into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussWitness {
    pub passed: bool,
    pub q: u32,
    pub n: u64,
    pub characters: Vec<u64>,
    pub norm_identity: Vec<(u64, String)>,
    pub norm_identity_holds: bool,
    pub point_count_matches: bool,
    pub point_counts: Vec<(String, String)>,
}

/// `g(χ,ψ) g(χ^-1,ψ) χ(-1) = q` for nontrivial `χ^n = 1`, and
/// `t_{I^0_n}(x) = #{y : y^n = x} = Σ_{χ^n=1} χ(x)`.
pub fn gauss_suite(q: u32, n: u64) -> Result<GaussWitness> {
    let f = field(q)?;
    let line = FqSpace::line(&f);
    let chars = CharacterTable::new(&f, 1)?;
    let js = chars.characters_of_order_dividing(n)?;
    let minus_one = f.neg(1);
    let mut norm_identity = Vec::new();
    let mut norm_identity_holds = true;
    for &j in js.iter().filter(|&&j| j != 0) {
        let v = chars.gauss_sum(j).mul(&chars.gauss_sum(chars.inverse_index(j))).mul(&chars.chi(j, minus_one));
        norm_identity_holds &= v.as_rational() == Some(int(q as i64));
        norm_identity.push((j, v.format()));
    }
    let counts = t_i0n(&line, n)?;
    let point_count_matches = counts == t_i0n_characters(&line, &chars, n)?;
    Ok(GaussWitness {
        passed: norm_identity_holds && point_count_matches,
        q,
        n,
        characters: js,
        norm_identity,
        norm_identity_holds,
        point_count_matches,
        point_counts: counts.table().into_iter().skip(1).collect(),
    })
}

/// Outcome of comparing a computed side with a candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarComparison {
    pub candidate: String,
    pub proportional: bool,
    pub scalar: Option<String>,
    pub pointwise: Vec<(String, Option<String>)>,
}

fn compare(lhs: &TraceFunction, name: &str, candidate: &TraceFunction) -> ScalarComparison {
    let space = lhs.space();
    let scalar = lhs.ratio_to(candidate);
    let pointwise = (1..space.size())
        .map(|x| {
            let r = candidate.value(x).inverse().map(|inv| lhs.value(x).mul(&inv).format());
            (space.format_point(x), r)
        })
        .collect();
    ScalarComparison {
        candidate: name.into(),
        proportional: scalar.is_some(),
        scalar: scalar.map(|c| c.format()),
        pointwise,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagnosticWitness {
    pub q: u32,
    pub n: u64,
    pub convention: String,
    pub frobenius_scalar: Vec<i64>,
    pub lhs: Vec<(String, String)>,
    pub comparisons: Vec<ScalarComparison>,
    pub summary: String,
}

fn summarize(comparisons: &[ScalarComparison]) -> String {
    comparisons
        .iter()
        .map(|c| format!("{}: {}", c.candidate, c.scalar.as_deref().unwrap_or("not proportional")))
        .collect::<Vec<_>>()
        .join("; ")
}

/// `I^0_n * j^*B` against `I^1_n(-1)[-2]`, reporting the measured scalar.
/// `I^1_n` carries the Frobenius scalar `u = Σ_{a<q} t^a` on its generator.
pub fn propb3_diagnostic(q: u32, n: u64) -> Result<DiagnosticWitness> {
    let f = field(q)?;
    let line = FqSpace::line(&f);
    let lhs = conv_gm(&t_i0n(&line, n)?, &t_jb(&line))?;
    let lhs = restrict_gm(&lhs);
    let ts = TwistShift::new(-1, -2);
    let u = frobenius_scalar_integral(q as u64, n as usize);
    let i1 = t_i1n(&line, n, &u)?.twist_shift(&ts);
    let i0 = t_i0n(&line, n)?.twist_shift(&ts);
    let comparisons = vec![compare(&lhs, "I^1_n(-1)[-2]", &i1), compare(&lhs, "I^0_n(-1)[-2]", &i0)];
    Ok(DiagnosticWitness {
        q,
        n,
        convention: format!("(1) -> q^-1, [1] -> -1; target twist-shift {}", ts.describe()),
        frobenius_scalar: u,
        lhs: lhs.table().into_iter().skip(1).collect(),
        summary: summarize(&comparisons),
        comparisons,
    })
}

/// `ι^*G_n * G_n` against `I^1_n[-2]` with `G_n = I^0_n * j^*L_ψ (1)[1]` and
/// `ι` the inversion.
pub fn gauss_g_diagnostic(q: u32, n: u64) -> Result<DiagnosticWitness> {
    let f = field(q)?;
    let line = FqSpace::line(&f);
    let chars = CharacterTable::new(&f, 1)?;
    let psi = restrict_gm(&TraceFunction::from_fn(&line, |a| chars.psi(a as u32).clone()));
    let g = restrict_gm(&conv_gm(&t_i0n(&line, n)?, &psi)?).twist_shift(&TwistShift::new(1, 1));
    let lhs = restrict_gm(&conv_gm(&pull_inverse(&g), &g)?);
    let ts = TwistShift::new(0, -2);
    let u = frobenius_scalar_integral(q as u64, n as usize);
    let i1 = t_i1n(&line, n, &u)?.twist_shift(&ts);
    let i0 = t_i0n(&line, n)?.twist_shift(&ts);
    let comparisons = vec![compare(&lhs, "I^1_n[-2]", &i1), compare(&lhs, "I^0_n[-2]", &i0)];
    Ok(DiagnosticWitness {
        q,
        n,
        convention: format!("(1) -> q^-1, [1] -> -1; target twist-shift {}", ts.describe()),
        frobenius_scalar: u,
        lhs: lhs.table().into_iter().skip(1).collect(),
        summary: summarize(&comparisons),
        comparisons,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemMonWitness {
    pub passed: bool,
    pub q: u32,
    pub n: u64,
    pub character: u64,
    pub character_order: u64,
    pub in_eigenspace: bool,
    pub factor: Option<String>,
    pub expected_factor: String,
    pub pro_limit_factor: String,
}

/// `t_{I^0_n} * χ = (q-1)·χ` when `χ^n = 1`, and `0` otherwise.
pub fn lem_mon_shadow(q: u32, n: u64, j: u64) -> Result<LemMonWitness> {
    let f = field(q)?;
    let line = FqSpace::line(&f);
    let chars = CharacterTable::new(&f, 1)?;
    let order = chars.chi_order(j);
    let chi = eigenfunction(&line, &chars, j);
    let conv = conv_gm(&t_i0n(&line, n)?, &chi)?;
    let factor = conv.ratio_to(&chi);
    let in_eigenspace = n % order == 0;
    let expected = if in_eigenspace { int(q as i64 - 1) } else { Rational::zero() };
    Ok(LemMonWitness {
        passed: factor.as_ref().and_then(CycScalar::as_rational) == Some(expected.clone()),
        q,
        n,
        character: j,
        character_order: order,
        in_eigenspace,
        factor: factor.map(|c| c.format()),
        expected_factor: format_rational(&expected),
        pro_limit_factor: q.to_string(),
    })
}

/// Scaling eigenfunctions with character order dividing `n`: `δ_0` and,
/// per orbit `{g^k v_0}`, the function `g^k v_0 ↦ χ_j(g^k)`.
pub fn monodromic_basis(space: &Arc<FqSpace>, chars: &CharacterTable, n: u64) -> Result<Vec<TraceFunction>> {
    let js = chars.characters_of_order_dividing(n)?;
    let field = space.field();
    let mut basis = vec![TraceFunction::delta(space, 0)];
    for orbit in scaling_orbits(space) {
        for &j in &js {
            let mut vals = vec![CycScalar::rational(Rational::zero()); space.size()];
            for (k, &w) in orbit.iter().enumerate() {
                vals[w] = chars.chi(j, field.exp(k as u64));
            }
            basis.push(TraceFunction::new(space, vals)?);
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonEquivalenceWitness {
    pub passed: bool,
    pub q: u32,
    pub d: usize,
    pub n: u64,
    pub span_dimension: usize,
    pub stable: bool,
    pub image_rank: usize,
    pub determinant: Option<String>,
    pub full_space_dimension: usize,
    pub full_space_rank: usize,
}

/// `Four_B` restricted to the monodromic span is invertible.
pub fn mon_equivalence_check(q: u32, d: usize, n: u64) -> Result<MonEquivalenceWitness> {
    let f = field(q)?;
    let space = FqSpace::new(&f, d)?;
    let chars = CharacterTable::new(&f, 1)?;
    let pairing = Pairing::standard(d);
    let basis = monodromic_basis(&space, &chars, n)?;
    let images = basis.iter().map(|b| four_b(b, &pairing)).collect::<Result<Vec<_>>>()?;
    let rows = |fs: &[TraceFunction]| -> Vec<Vec<CycScalar>> { fs.iter().map(|g| g.values().to_vec()).collect() };
    let dim = rank(&rows(&basis));
    let image_rank = rank(&rows(&images));
    let mut joint = basis.clone();
    joint.extend(images.iter().cloned());
    let stable = rank(&rows(&joint)) == dim;
    // coordinates of each image in the basis: solve Bᵀ c = image
    let bt: Vec<Vec<CycScalar>> =
        (0..space.size()).map(|p| basis.iter().map(|b| b.value(p).clone()).collect()).collect();
    let determinant = if stable && dim == basis.len() {
        let coords: Option<Vec<Vec<CycScalar>>> = images.iter().map(|g| solve(&bt, g.values())).collect();
        coords.map(|cols| {
            let m: Vec<Vec<CycScalar>> =
                (0..cols.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
            determinant(&m).format()
        })
    } else {
        None
    };
    let full = full_space_matrix(&space)?;
    Ok(MonEquivalenceWitness {
        passed: stable && image_rank == dim && dim == basis.len(),
        q,
        d,
        n,
        span_dimension: dim,
        stable,
        image_rank,
        determinant,
        full_space_dimension: space.size(),
        full_space_rank: rank(&full),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keythm_small() {
        for (q, d) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)] {
            let w = keythm_check(q, d, 4, 1).unwrap();
            assert!(w.passed, "q = {q}, d = {d}: {:?}", w.failures);
        }
        assert_eq!(keythm_check(3, 1, 0, 0).unwrap().scalar, "-3");
        assert!(kernel_closed_form_holds(11).unwrap());
    }

    #[test]
    fn keythm_worked_example() {
        // q = 3, d = 1, f = δ_w: value at 0 is q f(0); at w ≠ 0 it is
        // q² f(w) - q Σ_{v≠0} f(v)
        let f = FiniteField::of_order(3).unwrap();
        let line = FqSpace::line(&f);
        let p = Pairing::standard(1);
        for w in 0..3 {
            let delta = TraceFunction::delta(&line, w);
            let out = four_b_dual(&four_b(&delta, &p).unwrap(), &p).unwrap();
            let f0 = i64::from(w == 0);
            assert_eq!(out.value(0).as_rational(), Some(int(3 * f0)));
            for x in 1..3 {
                let fx = i64::from(x == w);
                let tail = i64::from(w != 0);
                assert_eq!(out.value(x).as_rational(), Some(int(9 * fx - 3 * tail)));
            }
        }
    }

    #[test]
    fn cv_and_p2b() {
        for (q, d) in [(3, 1), (5, 1), (3, 2)] {
            let w = cv_check(q, d).unwrap();
            assert!(w.passed, "{w:?}");
        }
        assert_eq!(cv_check(3, 1).unwrap().dimension, 1);
        for q in [3, 5, 7] {
            assert!(p2b_check(q, 1).unwrap().passed);
            assert!(bl2_check(q, 1, 2, 3).unwrap().passed);
        }
        let w = p2b_check(5, 1).unwrap();
        assert_eq!(w.values[1].1, "4");
        assert_eq!(w.values[0].1, "-1");
        assert!(p2b_check(4, 1).is_err());
    }

    #[test]
    fn remark_and_full_space() {
        let w = fbneq_check(3).unwrap();
        assert!(w.passed);
        assert_eq!(w.full_space_determinant, "-9");
        assert!(!w.full_space_square_is_scalar);
    }

    #[test]
    fn gauss_and_shadows() {
        for (q, n) in [(5, 4), (7, 2), (7, 3), (7, 6)] {
            assert!(gauss_suite(q, n).unwrap().passed);
        }
        assert!(gauss_suite(7, 4).is_err());
        let w = lem_mon_shadow(7, 3, 2).unwrap();
        assert!(w.passed);
        assert_eq!(w.factor.as_deref(), Some("6"));
        let w = lem_mon_shadow(7, 3, 1).unwrap();
        assert!(w.passed && !w.in_eigenspace);
        assert_eq!(w.factor.as_deref(), Some("0"));
        assert!(lem_mon_shadow(5, 1, 0).unwrap().passed);
    }

    #[test]
    fn diagnostics_report_scalars() {
        let w = propb3_diagnostic(3, 1).unwrap();
        assert_eq!(w.comparisons[0].scalar.as_deref(), Some("-1/9"));
        let w = gauss_g_diagnostic(5, 2).unwrap();
        assert_eq!(w.comparisons.len(), 2);
    }

    #[test]
    fn mon_equivalence() {
        let w = mon_equivalence_check(5, 1, 4).unwrap();
        assert!(w.passed, "{w:?}");
        assert!(w.determinant.is_some());
        assert!(mon_equivalence_check(5, 2, 4).unwrap().passed);
        assert!(mon_equivalence_check(5, 1, 2).unwrap().passed);
        let w = mon_equivalence_check(3, 1, 2).unwrap();
        assert_eq!(w.full_space_rank, 3);
    }
}
