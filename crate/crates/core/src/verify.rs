//! The acceptance suite: ten numbered checks over a shared divisor table and zeta grid,
//! rendered as a deterministic plain-text report.
//!
//! Reports carry no timings, so two runs over the same sources are byte-identical.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::divisor::{DeltaStarForm, DivisorTable};
use crate::error::{Error, Result};
use crate::error_terms::{lemma3_check, HybridErrorTerms, LEMMA3_DEFAULT_C};
use crate::explicit::{
    default_voronoi_cut, integral_delta_voronoi, integral_e_atkinson, truncated_voronoi_delta_star, AtkinsonParams,
};
use crate::grid::CriticalLineGrid;
use crate::moments::{fit_log_cubic, growth_exponent, log_spaced, MomentKind, UniformSamples};
use crate::oracle::{first_zero_bisect, nested_r};
use crate::pairs::{kolesnik_exponent_check, ExponentPair};
use crate::quadruples::{count_quadruples_fast, count_quadruples_naive, diagonal_count, exact_sqrt_coincidences};
use crate::zeta::{zeta_half_sq, ZetaMethod};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub t_max: f64,
    pub tol: f64,
    /// Coarse trapezoid step for the moment samples.
    pub moment_step: f64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_max: 10_000_000,
            t_max: 1e4,
            tol: 1e-10,
            moment_step: 0.05,
            seed: 20_240_101,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    pub details: Vec<String>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Self {
            id,
            title,
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.pass &= ok;
        let tag = if ok { "ok  " } else { "FAIL" };
        self.details.push(format!("{tag} {line}"));
    }

    fn note(&mut self, line: String) {
        self.details.push(format!("     {line}"));
    }

    fn failed(id: u32, title: &'static str, err: &Error) -> Self {
        Self {
            id,
            title,
            pass: false,
            details: vec![format!("FAIL error: {err}")],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub config: VerifyConfig,
    pub criteria: Vec<Criterion>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    /// One `PASS`/`FAIL` summary line per criterion.
    pub fn summary_lines(&self) -> Vec<String> {
        self.criteria
            .iter()
            .map(|c| format!("criterion {:>2} {}: {}", c.id, if c.pass { "PASS" } else { "FAIL" }, c.title))
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "acceptance report: n_max = {}, t_max = {}, tol = {:e}, moment step = {}, seed = {}",
            c.n_max, c.t_max, c.tol, c.moment_step, c.seed
        );
        for (crit, line) in self.criteria.iter().zip(self.summary_lines()) {
            let _ = writeln!(out, "\n{line}");
            for d in &crit.details {
                let _ = writeln!(out, "    {d}");
            }
        }
        let passed = self.criteria.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "\n{passed}/{} criteria passed", self.criteria.len());
        out
    }
}

/// Shared sources for the suite.
pub struct Sources<'a> {
    pub table: &'a DivisorTable,
    pub grid: &'a CriticalLineGrid,
}

impl Sources<'_> {
    fn validate(&self, config: &VerifyConfig) -> Result<()> {
        if self.table.n_max() < config.n_max {
            return Err(Error::range("table n_max", config.n_max as f64, self.table.n_max() as f64));
        }
        if self.grid.t_max() < config.t_max {
            return Err(Error::range("grid t_max", config.t_max, self.grid.t_max()));
        }
        Ok(())
    }
}

/// `D(x) = 2Σ_{n≤√x} ⌊x/n⌋ − ⌊√x⌋²`.
pub fn hyperbola_divisor_sum(x: u64) -> i64 {
    let r = x.isqrt();
    let s: u64 = (1..=r).map(|n| x / n).sum();
    2 * s as i64 - (r * r) as i64
}

fn c1_identities(src: &Sources<'_>, cfg: &VerifyConfig) -> Result<Criterion> {
    let mut c = Criterion::new(1, "identity suite");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst = 0.0f64;
    let mut worst_x = 0.0;
    for _ in 0..1000 {
        let x: f64 = rng.gen_range(1.0..=1e4);
        let a = src.table.delta_star(x, DeltaStarForm::Combination)?;
        let b = src.table.delta_star(x, DeltaStarForm::Alternating)?;
        let rel = (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
        if rel > worst {
            worst = rel;
            worst_x = x;
        }
    }
    c.check(
        worst <= 1e-9,
        format!("delta_star forms, 1000 random x in [1, 1e4]: worst relative gap {worst:.3e} at x = {worst_x:.6}"),
    );
    let mismatches = (1..=10_000u64)
        .filter(|&x| hyperbola_divisor_sum(x) != src.table.prefix_d(x as usize))
        .count();
    c.check(mismatches == 0, format!("hyperbola identity for integer x <= 1e4: {mismatches} mismatches"));
    Ok(c)
}

fn c2_constants() -> Result<Criterion> {
    let mut c = Criterion::new(2, "constant arithmetic");
    let k = kolesnik_exponent_check();
    c.check(
        k.equals_593_912 && k.maximum_decimal.starts_with("0.65021929"),
        format!(
            "max(branches) = {} (branches {} and {}), decimal {}",
            k.maximum, k.first_branch, k.second_branch, k.maximum_decimal
        ),
    );
    let printed = "0.6502129";
    let agree = k.maximum_decimal.chars().zip(printed.chars()).take_while(|(a, b)| a == b).count();
    c.note(format!(
        "printed value {printed} shares the prefix {} with the exact decimal",
        &printed[..agree]
    ));
    c.check(k.aba_tail == "11/18", format!("ABA tail exponent = {} = {}", k.aba_tail, k.aba_tail_decimal));
    let base = ExponentPair::parse("1/6,2/3")?;
    let aba = ExponentPair::from_word("ABA", &base)?;
    let expected = ExponentPair::parse("2/18,13/18")?;
    c.check(aba.kappa == expected.kappa && aba.lambda == expected.lambda, aba.to_string());
    let trivial = ExponentPair::trivial().r_bound_exponent();
    c.check(trivial.to_string() == "2/3", format!("(0, 1) bound exponent = {trivial}"));
    let p = AtkinsonParams::compute()?;
    c.check(
        p.c0 > 0.0195 && p.c0 < 0.0196,
        format!("c0 = {:.12}", p.c0),
    );
    let gap = (p.a3_fitted - p.a3).abs();
    c.check(
        gap <= 1e-4,
        format!("a3 closed form {:.12}, fitted {:.12}, gap {gap:.3e}", p.a3, p.a3_fitted),
    );
    Ok(c)
}

fn c3_cross_formulas(src: &Sources<'_>) -> Result<Criterion> {
    let mut c = Criterion::new(3, "cross-formula oracles");
    for t in [1e2, 1e3] {
        let atk = integral_e_atkinson(t, src.table, None)?;
        let exact = src.grid.integral_e(t)?;
        let k = (atk - exact).abs() / t.powf(0.25);
        c.check(
            k <= 5.0,
            format!("Atkinson T = {t:.0}: formula {atk:.6}, grid {exact:.6}, |diff|/T^(1/4) = {k:.4}"),
        );
    }
    for t in [1e2, 1e3, 1e4] {
        let cut = default_voronoi_cut(t);
        let v = integral_delta_voronoi(t, src.table, cut)?;
        let exact = src.table.integral_delta_star(t)?;
        let k = (v.value - exact).abs() / t.powf(0.25);
        c.check(
            k <= 5.0,
            format!(
                "Voronoi T = {t:.0}, n_cut = {cut}: series {:.6}, exact {exact:.6}, |diff|/T^(1/4) = {k:.4}, tail bound {:.3e}",
                v.value, v.tail_bound
            ),
        );
    }
    Ok(c)
}

/// RMS of `truncated − exact Δ*` over `xs`.
pub fn truncated_voronoi_rms(xs: &[f64], n: u64, table: &DivisorTable) -> Result<f64> {
    let mut ss = 0.0;
    for &x in xs {
        let approx = truncated_voronoi_delta_star(x, n, table)?.value;
        let exact = table.delta_star(x, DeltaStarForm::Alternating)?;
        ss += (approx - exact).powi(2);
    }
    Ok((ss / xs.len() as f64).sqrt())
}

fn c4_truncated_voronoi(src: &Sources<'_>, cfg: &VerifyConfig) -> Result<Criterion> {
    let mut c = Criterion::new(4, "truncated Voronoi scaling");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 4);
    let xs: Vec<f64> = (0..200).map(|_| rng.gen_range(1e3..2e3)).collect();
    let (n1, n2) = (10_000u64, 40_000u64);
    let r1 = truncated_voronoi_rms(&xs, n1, src.table)?;
    let r2 = truncated_voronoi_rms(&xs, n2, src.table)?;
    let ratio = r1 / r2;
    c.check(
        (1.4..=2.8).contains(&ratio),
        format!("200 x in [1e3, 2e3]: RMS {r1:.6} at N = {n1}, {r2:.6} at N = {n2}, ratio {ratio:.4} (target [1.4, 2.8])"),
    );
    let r3 = truncated_voronoi_rms(&xs, 4 * n2, src.table)?;
    c.note(format!("N = {}: RMS {r3:.6}, ratio to N = {n2}: {:.4}", 4 * n2, r2 / r3));
    c.note(format!(
        "RMS / (1500^(1/2) N^(-1/2)) = {:.4}, {:.4}, {:.4}",
        r1 / (1500f64.sqrt() / (n1 as f64).sqrt()),
        r2 / (1500f64.sqrt() / (n2 as f64).sqrt()),
        r3 / (1500f64.sqrt() / (4.0 * n2 as f64).sqrt()),
    ));
    Ok(c)
}

fn c5_r_pipeline(src: &Sources<'_>, r_samples: &UniformSamples) -> Result<Criterion> {
    let mut c = Criterion::new(5, "R pipeline consistency");
    let terms = HybridErrorTerms::new(src.grid, src.table);
    let ts = log_spaced(10.0, 1e4, 20);
    let nested = nested_r(&terms, &ts, 0.25)?;
    let mut worst = 0.0f64;
    let mut worst_t = 0.0;
    let mut envelope = 0.0f64;
    for (&t, &rn) in ts.iter().zip(&nested) {
        let r = terms.r_term(t)?;
        envelope = envelope.max(r.abs() / t.powf(0.75));
        let gap = (r - rn).abs();
        if gap > worst {
            worst = gap;
            worst_t = t;
        }
    }
    c.check(
        worst <= 1e-3,
        format!("reduction vs nested quadrature at 20 T in [10, 1e4]: worst |gap| {worst:.3e} at T = {worst_t:.3}"),
    );
    c.check(
        envelope <= 1.0,
        format!("|R(T)| <= T^(3/4) at the 20 sampled T: max |R|/T^(3/4) = {envelope:.4}"),
    );
    let h = 0.5 * r_samples.step;
    let (mut dense, mut at) = (0.0f64, 0.0);
    for (i, v) in r_samples.fine_values().iter().enumerate() {
        let t = i as f64 * h;
        if t < 10.0 {
            continue;
        }
        let ratio = v.abs() / t.powf(0.75);
        if ratio > dense {
            dense = ratio;
            at = t;
        }
    }
    c.note(format!(
        "dense samples (step {h}) on [10, {}]: max |R|/t^(3/4) = {dense:.4} at t = {at:.2}",
        r_samples.t_max
    ));
    let g = growth_exponent(r_samples, 1e2, 1e4)?;
    let pts: Vec<String> = g.checkpoints.iter().map(|(t, m)| format!("{t:.0}:{m:.4}")).collect();
    c.check(
        g.exponent <= 0.75,
        format!(
            "running-max exponent of |R| on [1e2, 1e4] = {:.4} (593/912 = 0.6502, conjecture 0.5); maxima {}",
            g.exponent,
            pts.join(", ")
        ),
    );
    Ok(c)
}

fn c6_moments(r: &UniformSamples, e_star: &UniformSamples) -> Result<Criterion> {
    let mut c = Criterion::new(6, "moment fits");
    let ts = log_spaced(1e2, 1e4, 64);
    let r2: Vec<(f64, f64)> = ts.iter().map(|&t| Ok((t, r.moment(2, t)?.value))).collect::<Result<_>>()?;
    let fit = fit_log_cubic(&r2, 2.0, 11.0 / 6.0)?;
    c.check(
        fit.coeffs[0] > 0.0,
        format!(
            "R^2 / T^2 fit on [1e2, 1e4]: c3 = {:.6}, coeffs ({:.6}, {:.6}, {:.6}, {:.6}), residual {:.4e}, cond {:.3e}",
            fit.coeffs[0], fit.coeffs[0], fit.coeffs[1], fit.coeffs[2], fit.coeffs[3], fit.residual_norm, fit.condition_number
        ),
    );
    let vals: Vec<String> = [1e2, 1e3, 1e4]
        .iter()
        .map(|&t| Ok(format!("{:.4}", r.moment(2, t)?.value / (t * t))))
        .collect::<Result<_>>()?;
    c.note(format!("int R^2 / T^2 at 1e2, 1e3, 1e4: {}", vals.join(", ")));

    let mut r4 = Vec::new();
    for t in [1e2, 1e3, 1e4] {
        r4.push(r.moment(4, t)?.value / t.powf(3.05));
    }
    let max4 = r4.iter().copied().fold(0.0, f64::max);
    c.check(
        max4 <= 100.0,
        format!(
            "int R^4 / T^3.05 at 1e2, 1e3, 1e4: {:.4}, {:.4}, {:.4} (bounded means <= 100)",
            r4[0], r4[1], r4[2]
        ),
    );

    let e2: Vec<(f64, f64)> = ts.iter().map(|&t| Ok((t, e_star.moment(2, t)?.value))).collect::<Result<_>>()?;
    let fit = fit_log_cubic(&e2, 4.0 / 3.0, 7.0 / 6.0)?;
    c.check(
        fit.coeffs[0] > 0.0,
        format!(
            "E*^2 / T^(4/3) fit on [1e2, 1e4]: c3 = {:.6}, coeffs ({:.6}, {:.6}, {:.6}, {:.6}), residual {:.4e}, cond {:.3e}",
            fit.coeffs[0], fit.coeffs[0], fit.coeffs[1], fit.coeffs[2], fit.coeffs[3], fit.residual_norm, fit.condition_number
        ),
    );
    Ok(c)
}

fn c7_quadruples() -> Result<Criterion> {
    let mut c = Criterion::new(7, "quadruple counting");
    let mut mismatches = Vec::new();
    let mut runs = 0;
    for n in [25u64, 50, 100] {
        for k in [2u32, 3] {
            for delta in [1e-9, 1e-3, 0.1] {
                let a = count_quadruples_naive(n, k, delta)?;
                let b = count_quadruples_fast(n, k, delta)?;
                runs += 1;
                if a.count != b.count {
                    mismatches.push(format!("N={n} k={k} delta={delta}: {} vs {}", a.count, b.count));
                }
            }
        }
    }
    c.check(
        mismatches.is_empty(),
        format!("fast = naive on {runs} cases: {}", if mismatches.is_empty() { "all equal".to_string() } else { mismatches.join("; ") }),
    );
    let small = count_quadruples_naive(50, 2, 1e-12)?;
    let diag = diagonal_count(50);
    let exact = exact_sqrt_coincidences(50);
    c.check(
        small.count == diag,
        format!("N = 50, k = 2, delta = 1e-12: count {} vs 2N^2 - N = {diag}", small.count),
    );
    c.note(format!(
        "exact integer test finds {exact} ordered solutions of sqrt(a)+sqrt(b) = sqrt(c)+sqrt(d) in (50, 100]^4, {} off the diagonal (e.g. 8 + 10 = 9 + 9)",
        exact - diag
    ));
    let n = 200u64;
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    for delta in [1.0 / (n * n) as f64, 1e-4, 1e-3, 1e-2] {
        let r = count_quadruples_fast(n, 2, delta)?;
        worst = worst.max(r.ratio);
        parts.push(format!("delta {delta:.3e}: count {} ratio {:.4}", r.count, r.ratio));
    }
    c.check(worst <= 100.0, format!("N = 200, k = 2 sweep: {}", parts.join("; ")));
    Ok(c)
}

fn c8_zeta() -> Result<Criterion> {
    let mut c = Criterion::new(8, "zeta evaluator");
    let (mut worst, mut at) = (0.0f64, 0.0);
    for i in 0..500 {
        let t = 30.0 + (1e4 - 30.0) * i as f64 / 499.0;
        let gap = (zeta_half_sq(t, ZetaMethod::RiemannSiegel)? - zeta_half_sq(t, ZetaMethod::EulerMaclaurin)?).abs();
        if gap > worst {
            worst = gap;
            at = t;
        }
    }
    c.check(
        worst <= 1e-6,
        format!("Riemann-Siegel vs Euler-Maclaurin |zeta|^2 on 500 t in [30, 1e4]: worst gap {worst:.3e} at t = {at:.3}"),
    );
    let z = first_zero_bisect(14.0, 14.3, 1e-10)?;
    c.check((z - 14.134_725).abs() <= 1e-5, format!("first zero at {z:.9}"));
    Ok(c)
}

fn c9_lemma3(src: &Sources<'_>, cfg: &VerifyConfig) -> Result<Criterion> {
    let mut c = Criterion::new(9, "short-interval inequalities");
    let terms = HybridErrorTerms::new(src.grid, src.table);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 9);
    let t_hi = (cfg.t_max - cfg.t_max.sqrt()).min(1e4);
    let (mut held, mut needed) = (0, 0.0f64);
    let mut worst_slack = f64::INFINITY;
    for _ in 0..50 {
        let t: f64 = rng.gen_range(1e2..=t_hi);
        let u: f64 = rng.gen_range(0.1..=0.5);
        let h = t.powf(u);
        let r = lemma3_check(&terms, t, h, LEMMA3_DEFAULT_C)?;
        if r.holds {
            held += 1;
        }
        let scale = h * t.ln();
        needed = needed.max((r.e_star - r.mean_after) / scale).max((r.mean_before - r.e_star) / scale);
        worst_slack = worst_slack.min(r.slack_plus.min(r.slack_minus));
    }
    c.check(
        held == 50,
        format!(
            "C = {LEMMA3_DEFAULT_C}: {held}/50 (T, H) pairs with T in [1e2, {t_hi:.0}], H = T^u, u in [0.1, 0.5]; smallest slack {worst_slack:.4}"
        ),
    );
    c.note(format!("smallest C that would pass every sample: {:.6}", needed.max(0.0)));
    Ok(c)
}

fn run_guarded(id: u32, title: &'static str, f: impl FnOnce() -> Result<Criterion>) -> Criterion {
    f().unwrap_or_else(|e| Criterion::failed(id, title, &e))
}

/// Criteria 1 to 9.
pub fn run_numeric(src: &Sources<'_>, cfg: &VerifyConfig) -> Vec<Criterion> {
    let mut out = vec![
        run_guarded(1, "identity suite", || c1_identities(src, cfg)),
        run_guarded(2, "constant arithmetic", c2_constants),
        run_guarded(3, "cross-formula oracles", || c3_cross_formulas(src)),
        run_guarded(4, "truncated Voronoi scaling", || c4_truncated_voronoi(src, cfg)),
    ];
    let terms = HybridErrorTerms::new(src.grid, src.table);
    let samples = UniformSamples::sample(MomentKind::R, cfg.t_max, cfg.moment_step, &terms).and_then(|r| {
        UniformSamples::sample(MomentKind::EStar, cfg.t_max, cfg.moment_step, &terms).map(|e| (r, e))
    });
    match &samples {
        Ok((r, e)) => {
            out.push(run_guarded(5, "R pipeline consistency", || c5_r_pipeline(src, r)));
            out.push(run_guarded(6, "moment fits", || c6_moments(r, e)));
        }
        Err(e) => {
            out.push(Criterion::failed(5, "R pipeline consistency", e));
            out.push(Criterion::failed(6, "moment fits", e));
        }
    }
    out.push(run_guarded(7, "quadruple counting", c7_quadruples));
    out.push(run_guarded(8, "zeta evaluator", c8_zeta));
    out.push(run_guarded(9, "short-interval inequalities", || c9_lemma3(src, cfg)));
    out
}

fn render_numeric(criteria: &[Criterion], cfg: &VerifyConfig) -> String {
    Report {
        config: *cfg,
        criteria: criteria.to_vec(),
    }
    .render()
}

/// The full suite. Criterion 10 reruns criteria 1 to 9 on a two-thread pool and compares
/// the rendered text byte for byte.
pub fn verify_all(src: &Sources<'_>, cfg: &VerifyConfig) -> Result<Report> {
    src.validate(cfg)?;
    let first = run_numeric(src, cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(2)
        .build()
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    let second = pool.install(|| run_numeric(src, cfg));
    let (a, b) = (render_numeric(&first, cfg), render_numeric(&second, cfg));
    let mut c10 = Criterion::new(10, "determinism");
    let first_diff = a.lines().zip(b.lines()).position(|(x, y)| x != y);
    c10.check(
        a == b,
        match first_diff {
            None if a.len() == b.len() => format!("rerun on a 2-thread pool: {} bytes, identical", a.len()),
            None => "rerun differs in length".to_string(),
            Some(i) => format!("rerun differs at report line {}", i + 1),
        },
    );
    let mut criteria = first;
    criteria.push(c10);
    Ok(Report { config: *cfg, criteria })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbola_small() {
        let d = [0i64, 1, 3, 5, 8, 10, 14, 16, 20, 23, 27];
        for (x, &v) in d.iter().enumerate() {
            assert_eq!(hyperbola_divisor_sum(x as u64), v);
        }
    }

    #[test]
    fn constants_pass() {
        let c = c2_constants().unwrap();
        assert!(c.pass, "{:#?}", c.details);
    }
}
