//! Oscillating-series representations: the integrated Atkinson formula for `∫E`, the
//! integrated Voronoi series for `∫Δ*`, the truncated Voronoi series for `Δ*` itself,
//! and the structured series for `R(T)`.
//!
//! Closed forms are always evaluated directly. The expansion coefficients in
//! [`AtkinsonParams`] are extracted numerically and only used for envelope checks.

use std::f64::consts::{PI, SQRT_2, TAU};

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::divisor::{DivisorTable, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::sum::par_descending_sum;

/// `arsinh x = log(x + √(1+x²))`, written through `ln_1p` so that small `x` keeps full
/// relative accuracy.
pub fn arsinh_log(x: f64) -> f64 {
    if x < 0.0 {
        return -arsinh_log(-x);
    }
    let r = (1.0 + x * x).sqrt();
    (x + x * x / (1.0 + r)).ln_1p()
}

/// `1/(2π) + ½ − √(¼ + 1/(2π))`
pub fn c0() -> f64 {
    let q = 1.0 / TAU;
    q + 0.5 - (0.25 + q).sqrt()
}

/// `(1/6)√(2π³)`
pub fn a3_closed_form() -> f64 {
    (2.0 * PI.powi(3)).sqrt() / 6.0
}

/// `e₂` as a function of `ε = n/T`.
pub fn e2_ratio(eps: f64) -> f64 {
    let s = (0.5 * PI * eps).sqrt();
    let shape = if s == 0.0 { 1.0 } else { s.asinh() / s };
    (1.0 + PI * eps).powf(-0.25) / shape.sqrt()
}

/// `f(T,n) + π/4 = T·φ(n/T)` with `φ(ε) = 2 arsinh √(πε/2) + √(2πε + π²ε²)`.
pub fn phase_shape(eps: f64) -> f64 {
    2.0 * (0.5 * PI * eps).sqrt().asinh() + (TAU * eps + PI * PI * eps * eps).sqrt()
}

fn check_n(t: f64, n: u64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::arg(format!("T must be positive, got {t}")));
    }
    if n == 0 || n as f64 > t {
        return Err(Error::arg(format!("need 1 <= n <= T, got n = {n}, T = {t}")));
    }
    Ok(())
}

/// `e₂(T,n) = (1 + πn/T)^{−1/4} [(2T/πn)^{1/2} arsinh((πn/2T)^{1/2})]^{−1/2}`.
pub fn e2(t: f64, n: u64) -> Result<f64> {
    check_n(t, n)?;
    Ok(e2_ratio(n as f64 / t))
}

/// `e₂` evaluated with [`arsinh_log`] in place of the library `asinh`.
pub fn e2_log_form(t: f64, n: u64) -> Result<f64> {
    check_n(t, n)?;
    let x = (PI * n as f64 / (2.0 * t)).sqrt();
    Ok((1.0 + PI * n as f64 / t).powf(-0.25) / (arsinh_log(x) / x).sqrt())
}

/// `f(T,n) = 2T arsinh √(πn/2T) + √(2πnT + π²n²) − π/4`.
pub fn f_phase(t: f64, n: u64) -> Result<f64> {
    check_n(t, n)?;
    Ok(f_phase_unchecked(t, n as f64))
}

fn f_phase_unchecked(t: f64, n: f64) -> f64 {
    2.0 * t * (PI * n / (2.0 * t)).sqrt().asinh() + (TAU * n * t + PI * PI * n * n).sqrt() - PI / 4.0
}

/// Constants of the integrated Atkinson formula and the small-`n/T` expansions
/// `e₂ = 1 + b₁(n/T) + b₂(n/T)² + …` and
/// `f = −π/4 + 2√(2πnT) + a₃n^{3/2}T^{−1/2} + a₅n^{5/2}T^{−3/2} + a₇n^{7/2}T^{−5/2} + …`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AtkinsonParams {
    pub c0: f64,
    pub a3: f64,
    pub b1: f64,
    pub b2: f64,
    pub a5: f64,
    pub a7: f64,
    /// `a₃` recovered from `f_phase` residuals by Richardson extrapolation in `n/T`.
    pub a3_fitted: f64,
}

fn poly_fit(xs: &[f64], ys: &[f64], degree: usize) -> Result<Vec<f64>> {
    let a = DMatrix::from_fn(xs.len(), degree + 1, |i, j| xs[i].powi(j as i32));
    let b = DVector::from_column_slice(ys);
    let svd = a.svd(true, true);
    let sol = svd.solve(&b, 1e-14).map_err(Error::arg)?;
    Ok(sol.iter().copied().collect())
}

impl AtkinsonParams {
    pub fn compute() -> Result<Self> {
        let eps: Vec<f64> = (1..=32).map(|k| 1.25e-3 * k as f64).collect();
        let g: Vec<f64> = eps.iter().map(|&e| (e2_ratio(e) - 1.0) / e).collect();
        let b = poly_fit(&eps, &g, 9)?;
        let root = 2.0 * TAU.sqrt();
        let psi: Vec<f64> = eps.iter().map(|&e| (phase_shape(e) - root * e.sqrt()) / e.powf(1.5)).collect();
        let a = poly_fit(&eps, &psi, 9)?;

        // r(T) = (f(T,1) + π/4 − 2√(2πT))·√T = a₃ + a₅/T + a₇/T² + …
        let r = |t: f64| (f_phase_unchecked(t, 1.0) + PI / 4.0 - root * t.sqrt()) * t.sqrt();
        let t0 = 500.0;
        let (r1, r2, r4) = (r(t0), r(2.0 * t0), r(4.0 * t0));
        let s1 = 2.0 * r2 - r1;
        let s2 = 2.0 * r4 - r2;
        let a3_fitted = (4.0 * s2 - s1) / 3.0;

        Ok(Self {
            c0: c0(),
            a3: a3_closed_form(),
            b1: b[0],
            b2: b[1],
            a5: a[1],
            a7: a[2],
            a3_fitted,
        })
    }
}

fn alt_sign(n: usize) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn require_table(table: &DivisorTable, n: usize, what: &'static str) -> Result<()> {
    if n > table.n_max() {
        Err(Error::range(what, n as f64, table.n_max() as f64))
    } else {
        Ok(())
    }
}

/// Integrated Atkinson formula without its error term:
/// `πT + ½(2T/π)^{3/4} Σ_{n≤N₁} (−1)ⁿd(n)n^{−5/4}e₂ sin f − 2Σ_{n≤c₀T} d(n)n^{−1/2}
/// log⁻²(T/2πn) sin(T log(T/2πn) − T + π/4)`.
///
/// `first_cut` sets `N₁`, defaulting to `T`.
pub fn integral_e_atkinson(t: f64, table: &DivisorTable, first_cut: Option<f64>) -> Result<f64> {
    if !(t >= 10.0) || !t.is_finite() {
        return Err(Error::arg(format!("Atkinson formula needs T >= 10, got {t}")));
    }
    let cut = first_cut.unwrap_or(t);
    if !(cut >= 1.0 && cut <= t) {
        return Err(Error::arg(format!("first-sum cut must lie in [1, T], got {cut}")));
    }
    let n1 = cut.floor() as usize;
    require_table(table, n1, "n")?;

    let first = par_descending_sum(1, n1, |n| {
        let nf = n as f64;
        let eps = nf / t;
        alt_sign(n) * f64::from(table.d(n)) * nf.powf(-1.25) * e2_ratio(eps) * f_phase_unchecked(t, nf).sin()
    });
    let n2 = (c0() * t).floor() as usize;
    let second = par_descending_sum(1, n2, |n| {
        let nf = n as f64;
        let l = (t / (TAU * nf)).ln();
        f64::from(table.d(n)) / nf.sqrt() / (l * l) * (t * l - t + PI / 4.0).sin()
    });
    Ok(PI * t + 0.5 * (2.0 * t / PI).powf(0.75) * first - 2.0 * second)
}

/// `E(T)` reconstructed from the integrated formula by a symmetric difference of width `2h`.
pub fn e_from_atkinson(t: f64, h: f64, table: &DivisorTable) -> Result<f64> {
    if !(h > 0.0) || t - h < 10.0 {
        return Err(Error::arg(format!("need h > 0 and T − h >= 10, got T = {t}, h = {h}")));
    }
    Ok((integral_e_atkinson(t + h, table, None)? - integral_e_atkinson(t - h, table, None)?) / (2.0 * h))
}

/// Largest default truncation of the integrated Voronoi series.
pub const VORONOI_DEFAULT_CAP: u64 = 10_000_000;

/// `min(T², 10⁷)`
pub fn default_voronoi_cut(t: f64) -> u64 {
    let sq = (t * t).floor();
    if sq >= VORONOI_DEFAULT_CAP as f64 {
        VORONOI_DEFAULT_CAP
    } else {
        sq.max(1.0) as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VoronoiIntegral {
    /// `T/8 + series`
    pub value: f64,
    /// `T/8`, the integral of the mean value of `Δ*`.
    pub mean_term: f64,
    /// `(T^{3/4}/2√2π²) Σ_{n≤n_cut} (−1)ⁿd(n)n^{−5/4} sin(4π√(nT) − π/4)`
    pub series: f64,
    pub n_cut: u64,
    /// `(T^{3/4}/2√2π²)·4M^{−1/4}(log M + 2γ + 4)`, an absolute bound for the omitted tail.
    pub tail_bound: f64,
    /// Whether the sum reached `n = T²`.
    pub complete: bool,
}

/// Integrated Voronoi series for `∫₀^T Δ*(x) dx`.
pub fn integral_delta_voronoi(t: f64, table: &DivisorTable, n_cut: u64) -> Result<VoronoiIntegral> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::arg(format!("T must be at least 1, got {t}")));
    }
    if n_cut == 0 {
        return Err(Error::arg("n_cut must be positive"));
    }
    if n_cut as f64 > t * t {
        return Err(Error::range("n_cut", n_cut as f64, (t * t).floor()));
    }
    require_table(table, n_cut as usize, "n_cut")?;
    let coef = t.powf(0.75) / (2.0 * SQRT_2 * PI * PI);
    let four_pi_rt = 4.0 * PI * t.sqrt();
    let sum = par_descending_sum(1, n_cut as usize, |n| {
        let nf = n as f64;
        alt_sign(n) * f64::from(table.d(n)) * nf.powf(-1.25) * (four_pi_rt * nf.sqrt() - PI / 4.0).sin()
    });
    let series = coef * sum;
    let m = n_cut as f64;
    let tail_bound = coef * 4.0 * m.powf(-0.25) * (m.ln() + 2.0 * EULER_GAMMA + 4.0);
    Ok(VoronoiIntegral {
        value: t / 8.0 + series,
        mean_term: t / 8.0,
        series,
        n_cut,
        tail_bound,
        complete: m >= (t * t).floor(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncatedVoronoi {
    pub value: f64,
    /// `N > x`, outside the regime `N ≪ x` the formula is meant for.
    pub flagged: bool,
}

/// `Δ*(x) ≈ 1/8 + (x^{1/4}/π√2) Σ_{n≤N} (−1)ⁿd(n)n^{−3/4} cos(4π√(nx) − π/4)`.
pub fn truncated_voronoi_delta_star(x: f64, n: u64, table: &DivisorTable) -> Result<TruncatedVoronoi> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::arg(format!("x must be positive, got {x}")));
    }
    if n == 0 {
        return Err(Error::arg("N must be positive"));
    }
    require_table(table, n as usize, "N")?;
    let four_pi_rx = 4.0 * PI * x.sqrt();
    let sum = par_descending_sum(1, n as usize, |k| {
        let kf = k as f64;
        alt_sign(k) * f64::from(table.d(k)) * kf.powf(-0.75) * (four_pi_rx * kf.sqrt() - PI / 4.0).cos()
    });
    Ok(TruncatedVoronoi {
        value: 0.125 + x.powf(0.25) / (PI * SQRT_2) * sum,
        flagged: n as f64 > x,
    })
}

fn r_series_term(t: f64, n: usize, table: &DivisorTable) -> f64 {
    let nf = n as f64;
    let bracket = e2_ratio(nf / t) * f_phase_unchecked(t, nf).sin() - (2.0 * (TAU * nf * t).sqrt() - PI / 4.0).sin();
    alt_sign(n) * f64::from(table.d(n)) * nf.powf(-1.25) * bracket
}

/// `½(2T/π)^{3/4} Σ_{n≤T} (−1)ⁿd(n)n^{−5/4}[e₂(T,n) sin f(T,n) − sin(2√(2πnT) − π/4)]`.
pub fn r_series(t: f64, table: &DivisorTable) -> Result<f64> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::arg(format!("T must be at least 1, got {t}")));
    }
    let n_top = t.floor() as usize;
    require_table(table, n_top, "n")?;
    Ok(0.5 * (2.0 * t / PI).powf(0.75) * par_descending_sum(1, n_top, |n| r_series_term(t, n, table)))
}

/// Share of `Σ_{n≤T} |term|` of the `R` series carried by `lo ≤ n ≤ hi`.
pub fn r_series_mass_fraction(t: f64, table: &DivisorTable, lo: f64, hi: f64) -> Result<f64> {
    if !(t >= 1.0) {
        return Err(Error::arg(format!("T must be at least 1, got {t}")));
    }
    let n_top = t.floor() as usize;
    require_table(table, n_top, "n")?;
    let total = par_descending_sum(1, n_top, |n| r_series_term(t, n, table).abs());
    let a = lo.ceil().max(1.0) as usize;
    let b = (hi.floor() as usize).min(n_top);
    let part = par_descending_sum(a, b, |n| r_series_term(t, n, table).abs());
    Ok(part / total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arsinh_forms_agree() {
        let mut x = 1e-6;
        while x <= 1e3 {
            assert!((arsinh_log(x) - x.asinh()).abs() <= 1e-14 * x.asinh().max(1.0), "x = {x}");
            x *= 1.37;
        }
    }

    #[test]
    fn c0_solves_its_quadratic() {
        let c = c0();
        assert!(c > 0.0195 && c < 0.0196);
        let q = 1.0 / TAU;
        assert!(((q + 0.5 - c).powi(2) - (0.25 + q)).abs() < 1e-15);
        assert!(c < 1.0 / TAU);
    }

    #[test]
    fn expansion_coefficients_match_closed_forms() {
        let p = AtkinsonParams::compute().unwrap();
        let sqrt2 = SQRT_2;
        assert!(p.a3 > 1.3124 && p.a3 < 1.3125);
        assert!((p.b1 + 5.0 * PI / 24.0).abs() < 1e-8, "{}", p.b1);
        assert!((p.b2 - 89.0 * PI * PI / 640.0).abs() < 1e-6, "{}", p.b2);
        assert!((p.a5 + sqrt2 * PI.powf(2.5) / 80.0).abs() < 1e-6, "{}", p.a5);
        assert!((p.a7 - sqrt2 * PI.powf(3.5) / 448.0).abs() < 1e-4, "{}", p.a7);
        assert!((p.a3_fitted - p.a3).abs() < 1e-4, "{}", p.a3_fitted);
    }

    #[test]
    fn e2_limits_and_dual_form() {
        assert!((e2_ratio(1e-12) - 1.0).abs() < 1e-11);
        let d = e2(100.0, 100).unwrap() - e2_log_form(100.0, 100).unwrap();
        assert!(d.abs() < 1e-12);
        assert!(e2(100.0, 101).is_err());
        let p = AtkinsonParams::compute().unwrap();
        for t in [1e4, 1e5] {
            let e = e2(t, 1).unwrap();
            assert!((e - (1.0 + p.b1 / t + p.b2 / (t * t))).abs() < 1e-10);
            assert!((t * (e - 1.0) - p.b1).abs() < 2.0 * p.b2.abs() / t);
        }
    }

    #[test]
    fn f_phase_expansion_envelope() {
        let t = 1e6;
        let lead = -PI / 4.0 + 2.0 * (TAU * t).sqrt() + a3_closed_form() / t.sqrt();
        assert!((f_phase(t, 1).unwrap() - lead).abs() <= 10.0 * t.powf(-1.5));
        let mut prev = f64::NEG_INFINITY;
        for n in 1..=100 {
            let f = f_phase(100.0, n).unwrap();
            assert!(f > prev);
            prev = f;
        }
    }

    #[test]
    fn voronoi_preconditions_and_phase_zero() {
        let table = DivisorTable::build(100).unwrap();
        assert!(integral_delta_voronoi(5.0, &table, 26).is_err());
        assert!(integral_delta_voronoi(50.0, &table, 101).is_err());
        // 4π√T − π/4 = 4π puts the n = 1 term on a zero of sine
        let t = (17.0f64 / 16.0).powi(2);
        let one = integral_delta_voronoi(t, &table, 1).unwrap();
        assert!(one.series.abs() < 1e-14);
        let flagged = truncated_voronoi_delta_star(10.0, 20, &table).unwrap();
        assert!(flagged.flagged && flagged.value.is_finite());
        assert_eq!(default_voronoi_cut(100.0), 10_000);
        assert_eq!(default_voronoi_cut(1e4), VORONOI_DEFAULT_CAP);
    }

    #[test]
    fn r_series_term_lipschitz_bound() {
        let table = DivisorTable::build(1000).unwrap();
        let t: f64 = 1000.0;
        for n in 1..=(t.cbrt() as u64) {
            let nf = n as f64;
            let e = e2(t, n).unwrap();
            let f = f_phase(t, n).unwrap();
            let g = 2.0 * (TAU * nf * t).sqrt() - PI / 4.0;
            let lhs = (e * f.sin() - g.sin()).abs();
            assert!(lhs <= 2.0 * (e - 1.0).abs() + (f - g).abs() + 1e-12);
        }
        assert!(r_series(t, &table).unwrap().is_finite());
    }
}
