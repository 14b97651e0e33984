//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use monodromic::cli::{run_all, run_check, CheckId, Params, Profile, Verdict};
use monodromic::groupalg::{augmentation_kernel_check, pro_nzd_check, twisted_tensor_check, unit_surjectivity_check};
use monodromic::mellin::{
    b_embed_check, exp_square_check, fourier_antipode_check, mon_test_agreement, monodromization_check,
    prop_dmod1, prop_dmod2, prop_dmod3, window_stable,
};
use monodromic::scalars::residue::ResidueRing;
use monodromic::scalars::{int, rat, Rational};
use monodromic::trace::CharacterTable;
use monodromic::trace::{
    bl2_check, cv_check, fbneq_check, gauss_suite, keythm_check, lem_mon_shadow, p2b_check,
};
use monodromic::Result;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn chis() -> Vec<Rational> {
    vec![int(0), rat(1, 2), rat(1, 3)]
}

fn criterion_1() -> Result<Outcome> {
    let start = Instant::now();
    let grid = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (5, 2)];
    let mut bad = Vec::new();
    for (q, d) in grid {
        let w = keythm_check(q, d, 0, 0)?;
        if !w.passed || w.mode != "delta-basis" || w.kernel_closed_form == Some(false) {
            bad.push(format!("q={q} d={d}"));
        }
    }
    let t = start.elapsed();
    Ok(outcome(bad.is_empty() && t < Duration::from_secs(10), format!("{} cases, {t:.2?} (< 10 s), failures {bad:?}", grid.len())))
}

fn criterion_2() -> Result<Outcome> {
    let mut bad = Vec::new();
    for q in [3, 5] {
        for d in [1, 2] {
            let w = cv_check(q, d)?;
            if !(w.passed && w.identity_holds && w.stable) {
                bad.push(format!("q={q} d={d}"));
            }
        }
    }
    Ok(outcome(bad.is_empty(), format!("q in {{3,5}}, d in {{1,2}}, failures {bad:?}")))
}

fn criterion_3() -> Result<Outcome> {
    let mut bad = Vec::new();
    for q in [3, 5, 7] {
        if !p2b_check(q, 1)?.passed {
            bad.push(format!("p2b q={q}"));
        }
        let w = bl2_check(q, 1, 0, 0)?;
        if !w.passed || w.mode != "delta-basis" {
            bad.push(format!("bl2 q={q}"));
        }
    }
    Ok(outcome(bad.is_empty(), format!("q in {{3,5,7}}, failures {bad:?}")))
}

fn criterion_4() -> Result<Outcome> {
    let mut bad = Vec::new();
    for q in [2, 3, 5, 7] {
        let w = fbneq_check(q)?;
        if !(w.delta_zero_is_minus_one && w.delta_one_is_minus_kernel) {
            bad.push(q);
        }
    }
    Ok(outcome(bad.is_empty(), format!("q in {{2,3,5,7}}, failures {bad:?}")))
}

fn criterion_5() -> Result<Outcome> {
    let start = Instant::now();
    let mut bad = Vec::new();
    let embed = b_embed_check(10)?;
    if !embed.mellin_symbols_exact {
        bad.push("(a) Mellin symbols".to_string());
    }
    if !(embed.accepted && embed.control_rejected && embed.window_generated) {
        bad.push("(b) embedding".into());
    }
    if !prop_dmod1(8, 5)?.passed {
        bad.push("(c) propDmod1".into());
    }
    for chi in chis() {
        if !prop_dmod2(&chi, 8)?.passed {
            bad.push(format!("(c) propDmod2 chi={chi}"));
        }
        for n in 1..=3 {
            if !prop_dmod3(&chi, n, 8)?.passed {
                bad.push(format!("(c) propDmod3 chi={chi} n={n}"));
            }
            if !monodromization_check(&chi, n, 8)?.passed {
                bad.push(format!("(d) dmodmon chi={chi} n={n}"));
            }
        }
    }
    let exp = exp_square_check(6)?;
    if !(exp.passed && exp.candidate.is_some() && exp.negative_control_found.is_none()) {
        bad.push("(e) exp-square".into());
    }
    if !fourier_antipode_check(1000, 1, 0).passed {
        bad.push("(f) fourier-antipode".into());
    }
    if !mon_test_agreement(20, 0).passed {
        bad.push("(g) mon-test".into());
    }
    let t = start.elapsed();
    Ok(outcome(bad.is_empty() && t < Duration::from_secs(60), format!("{t:.2?} (< 60 s), failures {bad:?}")))
}

fn criterion_6() -> Result<Outcome> {
    let mut cases: Vec<(String, i64, Box<dyn Fn(i64) -> Result<bool>>)> = vec![
        ("mellin-b-embed".into(), 10, Box::new(|w| Ok(b_embed_check(w)?.passed))),
        ("propDmod1".into(), 8, Box::new(|w| Ok(prop_dmod1(w, 5)?.passed))),
        ("exp-square".into(), 6, Box::new(|w| Ok(exp_square_check(w)?.passed))),
        ("exp-square control".into(), 6, Box::new(|w| Ok(exp_square_check(w)?.negative_control_found.is_none()))),
    ];
    for chi in chis() {
        let c = chi.clone();
        cases.push((format!("propDmod2 chi={chi}"), 8, Box::new(move |w| Ok(prop_dmod2(&c, w)?.passed))));
        for n in 1..=3 {
            let c = chi.clone();
            cases.push((format!("propDmod3 chi={chi} n={n}"), 8, Box::new(move |w| Ok(prop_dmod3(&c, n, w)?.passed))));
            let c = chi.clone();
            cases.push((format!("dmodmon chi={chi} n={n}"), 8, Box::new(move |w| Ok(monodromization_check(&c, n, w)?.passed))));
        }
    }
    let mut unstable = Vec::new();
    for (name, radius, check) in &cases {
        let (a, b) = window_stable(*radius, check)?;
        if a != b {
            unstable.push(name.clone());
        }
    }
    Ok(outcome(unstable.is_empty(), format!("{} verdicts compared at N and N+2, unstable {unstable:?}", cases.len())))
}

fn criterion_7() -> Result<Outcome> {
    let mut bad = Vec::new();
    for (q, n) in [(5, 4), (7, 2), (7, 3), (7, 6)] {
        let w = gauss_suite(q, n)?;
        if !(w.norm_identity_holds && w.point_count_matches) {
            bad.push(format!("q={q} n={n}"));
        }
    }
    Ok(outcome(bad.is_empty(), format!("4 cases, failures {bad:?}")))
}

fn criterion_8() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut cases = 0;
    for ell in [2u64, 3] {
        for r in 1..=2u32 {
            for n in 1..=6usize {
                cases += 1;
                if !augmentation_kernel_check(ell, r, n)?.passed {
                    bad.push(format!("augmentation l={ell} r={r} n={n}"));
                }
                let w = pro_nzd_check(ell, r, n, None)?;
                if !(w.passed && w.image_vanishes && w.control_image_vanishes == Some(false)) {
                    bad.push(format!("nzd l={ell} r={r} n={n}"));
                }
                for nprime in (n..=6).filter(|m| m % n == 0) {
                    if !unit_surjectivity_check(ell, r, n, nprime)?.passed {
                        bad.push(format!("units l={ell} r={r} {nprime}->{n}"));
                    }
                }
            }
            let w = twisted_tensor_check(ResidueRing::new(ell, r)?, 6, 0)?;
            if !(w.passed && w.additive) {
                bad.push(format!("tensor l={ell} r={r}"));
            }
        }
    }
    Ok(outcome(bad.is_empty(), format!("{cases} (l, r, n) points, failures {bad:?}")))
}

fn criterion_9() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut eigen = 0;
    for (q, n) in [(7u32, 3u64), (5, 4)] {
        let field = monodromic::scalars::FiniteField::of_order(q)?;
        let chars = CharacterTable::new(&field, 1)?;
        for j in chars.characters_of_order_dividing(n)? {
            eigen += 1;
            let w = lem_mon_shadow(q, n, j)?;
            if !(w.passed && w.factor.as_deref() == Some(&*(q - 1).to_string())) {
                bad.push(format!("q={q} n={n} j={j}"));
            }
        }
    }
    Ok(outcome(
        bad.is_empty(),
        format!("{eigen} eigenfunctions, factor q - 1 at finite level (the pro-limit constant is q), failures {bad:?}"),
    ))
}

fn criterion_10() -> Result<Outcome> {
    let bin = env!("CARGO_BIN_EXE_monodromic");
    let mut bad = Vec::new();
    let mut scalars = Vec::new();
    for check in [CheckId::PropB3Diagnostic, CheckId::GaussGDiagnostic] {
        for q in [3u32, 5] {
            for n in [1u64, 2] {
                let params = Params { q: Some(q), n: Some(n), ..Params::default() };
                let report = run_check(check, &params)?;
                let summary = report.witness["summary"].as_str().unwrap_or_default().to_string();
                let status = Command::new(bin)
                    .args(["verify", check.name(), "--q", &q.to_string(), "--n", &n.to_string()])
                    .output()
                    .map(|o| o.status.code())
                    .unwrap_or(None);
                if report.verdict != Verdict::Diagnostic || status != Some(2) || summary.is_empty() {
                    bad.push(format!("{check} q={q} n={n}"));
                }
                if n == 1 {
                    scalars.push(format!("{check} q={q}: {summary}"));
                }
            }
        }
    }
    Ok(outcome(bad.is_empty(), format!("8 reports with exit code 2, failures {bad:?}; {}", scalars.join(" | "))))
}

fn criterion_11() -> Result<Outcome> {
    let start = Instant::now();
    let a = run_all(Profile::Quick, 7);
    let first = start.elapsed();
    let b = run_all(Profile::Quick, 7);
    let strip = |agg: &monodromic::cli::AggregateReport| {
        let reports: Vec<_> = agg.reports.iter().map(|r| r.without_timing()).collect();
        serde_json::to_string(&reports).expect("serializable")
    };
    let identical = strip(&a) == strip(&b);
    Ok(outcome(
        identical && a.passed && first < Duration::from_secs(60),
        format!("{} reports, identical = {identical}, all non-diagnostic pass = {}, first run {first:.2?} (< 60 s)", a.reports.len(), a.passed),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 11] = [
        ("Fourier square trace identity", criterion_1),
        ("C_V shadow", criterion_2),
        ("P^2 = B and Four_B via Four_psi", criterion_3),
        ("Four_B values on deltas", criterion_4),
        ("Mellin suite", criterion_5),
        ("window stability", criterion_6),
        ("Gauss suite", criterion_7),
        ("group algebra suite", criterion_8),
        ("finite-level I^0 shadow", criterion_9),
        ("diagnostics terminate", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} [{:.2?}] {name}: {}", i + 1, start.elapsed(), o.detail);
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
