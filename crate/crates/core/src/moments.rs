//! Moment integrals of `E*` and `R`, cubic-in-log main-term fits and running-maximum
//! growth exponents.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::error_terms::HybridErrorTerms;
use crate::sum::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MomentKind {
    EStar,
    R,
}

impl MomentKind {
    pub fn eval(self, terms: &HybridErrorTerms<'_>, t: f64) -> Result<f64> {
        match self {
            MomentKind::EStar => terms.e_star(t),
            MomentKind::R => terms.r_term(t),
        }
    }
}

/// Largest relative change allowed when the trapezoid step is halved.
pub const REFINEMENT_TOL: f64 = 0.01;

/// `f` sampled at `t = i·h/2`, `0 ≤ i ≤ 2⌈t_max/h⌉`. Every other sample is the coarse grid
/// of step `h`, so each moment comes with its own step-halving check.
#[derive(Debug, Clone)]
pub struct UniformSamples {
    pub kind: MomentKind,
    /// Coarse step `h`.
    pub step: f64,
    pub t_max: f64,
    values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentValue {
    pub t: f64,
    pub p: u32,
    /// Trapezoid with step `h/2`.
    pub value: f64,
    /// Trapezoid with step `h`.
    pub coarse: f64,
}

impl UniformSamples {
    pub fn sample(kind: MomentKind, t_max: f64, step: f64, terms: &HybridErrorTerms<'_>) -> Result<Self> {
        if !(step > 0.0) || !(t_max >= 0.0) {
            return Err(Error::arg(format!("need step > 0 and t_max >= 0, got {step}, {t_max}")));
        }
        let fine = 0.5 * step;
        let n = 2 * (t_max / step).ceil() as usize;
        let values = (0..=n)
            .into_par_iter()
            .map(|i| kind.eval(terms, (i as f64 * fine).min(t_max)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { kind, step, t_max, values })
    }

    /// Builds the sampler from an arbitrary function (used for synthetic inputs).
    pub fn from_fn<F: Fn(f64) -> f64 + Sync>(kind: MomentKind, t_max: f64, step: f64, f: F) -> Self {
        let fine = 0.5 * step;
        let n = 2 * (t_max / step).ceil() as usize;
        let values = (0..=n).into_par_iter().map(|i| f((i as f64 * fine).min(t_max))).collect();
        Self { kind, step, t_max, values }
    }

    pub fn fine_values(&self) -> &[f64] {
        &self.values
    }

    fn check_t(&self, t: f64) -> Result<()> {
        if !(t >= 0.0) {
            return Err(Error::arg(format!("T must be nonnegative, got {t}")));
        }
        if t > self.t_max {
            return Err(Error::range("T", t, self.t_max));
        }
        Ok(())
    }

    /// Trapezoid `∫₀^T |f|^p` over samples `stride` apart (1 = fine, 2 = coarse).
    /// The last partial interval uses linear interpolation.
    fn trapezoid(&self, p: u32, t: f64, stride: usize) -> f64 {
        let h = 0.5 * self.step * stride as f64;
        let g = |i: usize| self.values[i * stride].abs().powi(p as i32);
        let full = (t / h).floor() as usize;
        let mut acc = CompensatedSum::new();
        for i in 0..full {
            acc.add(0.5 * h * (g(i) + g(i + 1)));
        }
        let rem = t - full as f64 * h;
        if rem > 0.0 && (full + 1) * stride < self.values.len() {
            let f0 = self.values[full * stride];
            let f1 = self.values[(full + 1) * stride];
            let ft = f0 + (f1 - f0) * rem / h;
            acc.add(0.5 * rem * (f0.abs().powi(p as i32) + ft.abs().powi(p as i32)));
        }
        acc.value()
    }

    /// `∫₀^T |f|^p` with the step-halving check; fails if the two steps differ by more
    /// than [`REFINEMENT_TOL`] relative. Below one coarse step there is nothing to compare.
    pub fn moment(&self, p: u32, t: f64) -> Result<MomentValue> {
        self.check_t(t)?;
        if p == 0 {
            return Err(Error::arg("moment power must be positive"));
        }
        let value = self.trapezoid(p, t, 1);
        let coarse = self.trapezoid(p, t, 2);
        if t >= self.step && (value - coarse).abs() > REFINEMENT_TOL * value.abs() {
            return Err(Error::Accuracy {
                context: format!("{:?} moment p = {p} up to T = {t}", self.kind),
                coarse,
                refined: value,
            });
        }
        Ok(MomentValue { t, p, value, coarse })
    }

    /// `max_{t≤T} |f(t)|` over the fine samples.
    pub fn running_max(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        let last = ((t / (0.5 * self.step)).floor() as usize).min(self.values.len() - 1);
        Ok(self.values[..=last].iter().fold(0.0f64, |m, v| m.max(v.abs())))
    }
}

/// `∫₀^T |f|^p` for `f ∈ {E*, R}` by the trapezoid rule with step `step` and `step/2`.
pub fn moment_integral(kind: MomentKind, p: u32, t: f64, terms: &HybridErrorTerms<'_>, step: f64) -> Result<MomentValue> {
    UniformSamples::sample(kind, t, step, terms)?.moment(p, t)
}

/// Least-squares fit of `value/T^α` against `(log³T, log²T, log T, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentFit {
    pub alpha: f64,
    pub beta: f64,
    /// `(c₃, c₂, c₁, c₀)`
    pub coeffs: [f64; 4],
    /// RMS of `(value − T^α P₃(log T)) / T^β`.
    pub residual_norm: f64,
    pub window: (f64, f64),
    pub sample_count: usize,
    pub condition_number: f64,
    pub samples: Vec<(f64, f64)>,
}

/// Largest accepted condition number of the (column-scaled) design matrix.
pub const MAX_CONDITION: f64 = 1e12;

impl MomentFit {
    pub fn model(&self, t: f64) -> f64 {
        let l = t.ln();
        let [c3, c2, c1, c0] = self.coeffs;
        t.powf(self.alpha) * (((c3 * l + c2) * l + c1) * l + c0)
    }
}

pub fn fit_log_cubic(samples: &[(f64, f64)], alpha: f64, beta: f64) -> Result<MomentFit> {
    if samples.len() < 8 {
        return Err(Error::arg(format!("need at least 8 samples, got {}", samples.len())));
    }
    if samples.iter().any(|&(t, v)| !(t > 1.0) || !v.is_finite()) {
        return Err(Error::arg("samples need T > 1 and finite values"));
    }
    let t_min = samples.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let t_max = samples.iter().map(|s| s.0).fold(0.0, f64::max);
    if t_max < 10.0 * t_min {
        return Err(Error::arg(format!("samples must span a decade, got [{t_min}, {t_max}]")));
    }
    let m = samples.len();
    let design = DMatrix::from_fn(m, 4, |i, j| samples[i].0.ln().powi(3 - j as i32));
    // scale columns to unit norm before judging conditioning
    let norms: Vec<f64> = (0..4).map(|j| design.column(j).norm()).collect();
    let mut scaled = design.clone();
    for (j, &nrm) in norms.iter().enumerate() {
        if nrm == 0.0 {
            return Err(Error::Conditioning(f64::INFINITY));
        }
        scaled.column_mut(j).scale_mut(1.0 / nrm);
    }
    let rhs = DVector::from_iterator(m, samples.iter().map(|&(t, v)| v / t.powf(alpha)));
    let svd = scaled.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition_number = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !(condition_number <= MAX_CONDITION) {
        return Err(Error::Conditioning(condition_number));
    }
    let sol = svd.solve(&rhs, 0.0).map_err(Error::arg)?;
    let coeffs = [sol[0] / norms[0], sol[1] / norms[1], sol[2] / norms[2], sol[3] / norms[3]];
    let mut fit = MomentFit {
        alpha,
        beta,
        coeffs,
        residual_norm: 0.0,
        window: (t_min, t_max),
        sample_count: m,
        condition_number,
        samples: samples.to_vec(),
    };
    let ss: f64 = samples.iter().map(|&(t, v)| ((v - fit.model(t)) / t.powf(beta)).powi(2)).sum();
    fit.residual_norm = (ss / m as f64).sqrt();
    Ok(fit)
}

/// `T_min·10^j` up to `T_max`.
pub fn decade_checkpoints(t_min: f64, t_max: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut t = t_min;
    while t <= t_max * (1.0 + 1e-12) {
        out.push(t.min(t_max));
        t *= 10.0;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthExponent {
    pub exponent: f64,
    /// `(T, max_{t≤T} |f|)` at each checkpoint.
    pub checkpoints: Vec<(f64, f64)>,
}

/// Least-squares slope of `log max_{t≤T}|f|` against `log T` over decade checkpoints.
pub fn growth_exponent(samples: &UniformSamples, t_min: f64, t_max: f64) -> Result<GrowthExponent> {
    let ts = decade_checkpoints(t_min, t_max);
    if ts.len() < 3 {
        return Err(Error::arg(format!("window [{t_min}, {t_max}] gives fewer than 3 decade checkpoints")));
    }
    let checkpoints = ts.iter().map(|&t| Ok((t, samples.running_max(t)?))).collect::<Result<Vec<_>>>()?;
    Ok(GrowthExponent {
        exponent: log_log_slope(&checkpoints)?,
        checkpoints,
    })
}

/// Least-squares slope of `log y` against `log x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::arg("log-log regression needs positive data"));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0.ln()).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1.ln()).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0.ln() - mx) * (p.1.ln() - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0.ln() - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// `n` points spaced evenly in `log T` on `[t_min, t_max]`.
pub fn log_spaced(t_min: f64, t_max: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![t_min];
    }
    let (a, b) = (t_min.ln(), t_max.ln());
    let mut out: Vec<f64> = (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect();
    out[0] = t_min;
    out[n - 1] = t_max;
    out
}
