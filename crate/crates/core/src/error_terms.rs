//! The hybrid error term `E*(t) = E(t) − 2πΔ*(t/2π)` and its integral
//! `R(T) = ∫₀^T E*(t) dt − 3πT/4`.
//!
//! Everything is evaluated from cumulative primitives: the grid moments on the zeta side
//! and exact prefix sums on the divisor side, through
//! `∫₀^T 2πΔ*(t/2π) dt = (2π)² ∫₀^{T/2π} Δ*(x) dx`.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::divisor::{DeltaStarForm, DivisorTable};
use crate::error::{Error, Result};
use crate::grid::CriticalLineGrid;

/// Anything that can supply `E*` pointwise and its primitive `∫₀^t E*`.
pub trait EStarPrimitive {
    fn e_star(&self, t: f64) -> Result<f64>;
    fn integral_e_star(&self, t: f64) -> Result<f64>;
}

/// `E`, `Δ*` and the derived hybrid quantities over a shared grid and divisor table.
#[derive(Debug, Clone, Copy)]
pub struct HybridErrorTerms<'a> {
    pub grid: &'a CriticalLineGrid,
    pub table: &'a DivisorTable,
}

impl<'a> HybridErrorTerms<'a> {
    pub fn new(grid: &'a CriticalLineGrid, table: &'a DivisorTable) -> Self {
        Self { grid, table }
    }

    /// Largest `T` both sources can serve.
    pub fn t_limit(&self) -> f64 {
        self.grid.t_max().min(self.table.n_max() as f64 * TAU / 4.0)
    }

    pub fn e(&self, t: f64) -> Result<f64> {
        self.grid.e(t)
    }

    /// `2πΔ*(t/2π)`
    pub fn scaled_delta_star(&self, t: f64) -> Result<f64> {
        Ok(TAU * self.table.delta_star(t / TAU, DeltaStarForm::Alternating)?)
    }

    /// `E*(t) = E(t) − 2πΔ*(t/2π)`.
    pub fn e_star(&self, t: f64) -> Result<f64> {
        let d = self.scaled_delta_star(t)?;
        Ok(self.grid.e(t)? - d)
    }

    /// `∫₀^T E*(t) dt`.
    pub fn integral_e_star(&self, t: f64) -> Result<f64> {
        let d = self.table.integral_delta_star(t / TAU)?;
        Ok(self.grid.integral_e(t)? - TAU * TAU * d)
    }

    /// `R(T) = ∫₀^T E*(t) dt − 3πT/4`.
    pub fn r_term(&self, t: f64) -> Result<f64> {
        Ok(self.integral_e_star(t)? - 0.75 * PI * t)
    }
}

impl EStarPrimitive for HybridErrorTerms<'_> {
    fn e_star(&self, t: f64) -> Result<f64> {
        HybridErrorTerms::e_star(self, t)
    }

    fn integral_e_star(&self, t: f64) -> Result<f64> {
        HybridErrorTerms::integral_e_star(self, t)
    }
}

/// Default constant in the short-interval inequalities.
pub const LEMMA3_DEFAULT_C: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma3Report {
    pub t: f64,
    pub h: f64,
    pub c: f64,
    pub e_star: f64,
    /// `(1/H) ∫_T^{T+H} E*`
    pub mean_after: f64,
    /// `(1/H) ∫_{T−H}^T E*`
    pub mean_before: f64,
    /// `mean_after + C·H·log T − E*(T)`
    pub slack_plus: f64,
    /// `E*(T) − mean_before + C·H·log T`
    pub slack_minus: f64,
    pub holds: bool,
}

/// Evaluates both short-interval inequalities
/// `E*(T) ≤ (1/H)∫_T^{T+H} E* + C·H·log T` and `E*(T) ≥ (1/H)∫_{T−H}^T E* − C·H·log T`.
///
/// Requires `T^{0.01} ≤ H ≤ T/2`.
pub fn lemma3_check<S: EStarPrimitive + ?Sized>(src: &S, t: f64, h: f64, c: f64) -> Result<Lemma3Report> {
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::arg(format!("T must exceed 1, got {t}")));
    }
    if !(h >= t.powf(0.01) && h <= 0.5 * t) {
        return Err(Error::arg(format!("H = {h} must lie in [T^0.01, T/2] for T = {t}")));
    }
    if !(c > 0.0) {
        return Err(Error::arg(format!("C must be positive, got {c}")));
    }
    let at = src.integral_e_star(t)?;
    let mean_after = (src.integral_e_star(t + h)? - at) / h;
    let mean_before = (at - src.integral_e_star(t - h)?) / h;
    let e_star = src.e_star(t)?;
    let margin = c * h * t.ln();
    let slack_plus = mean_after + margin - e_star;
    let slack_minus = e_star - mean_before + margin;
    Ok(Lemma3Report {
        t,
        h,
        c,
        e_star,
        mean_after,
        mean_before,
        slack_plus,
        slack_minus,
        holds: slack_plus >= 0.0 && slack_minus >= 0.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesKind {
    Delta,
    DeltaStar,
    E,
    EStar,
    G,
    H,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Provenance {
    pub n_max: usize,
    pub t_max: f64,
    pub tol: f64,
}

/// One error function sampled on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorFunctionSeries {
    pub kind: SeriesKind,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub provenance: Provenance,
}

impl ErrorFunctionSeries {
    pub fn sample(kind: SeriesKind, ts: &[f64], terms: &HybridErrorTerms<'_>) -> Result<Self> {
        if ts.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::arg("sample points must be strictly increasing"));
        }
        let values = ts
            .iter()
            .map(|&t| {
                let v = match kind {
                    SeriesKind::Delta => terms.table.delta(t)?,
                    SeriesKind::DeltaStar => terms.table.delta_star(t, DeltaStarForm::Alternating)?,
                    SeriesKind::E => terms.e(t)?,
                    SeriesKind::EStar => terms.e_star(t)?,
                    SeriesKind::G => terms.grid.g_term(t)?,
                    SeriesKind::H => terms.table.h_term(t)?,
                    SeriesKind::R => terms.r_term(t)?,
                };
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::arg(format!("non-finite {kind:?} value at t = {t}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            kind,
            grid: ts.to_vec(),
            values,
            provenance: Provenance {
                n_max: terms.table.n_max(),
                t_max: terms.grid.t_max(),
                tol: terms.grid.tol(),
            },
        })
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Constant(f64);

    impl EStarPrimitive for Constant {
        fn e_star(&self, _t: f64) -> Result<f64> {
            Ok(self.0)
        }
        fn integral_e_star(&self, t: f64) -> Result<f64> {
            Ok(self.0 * t)
        }
    }

    #[test]
    fn constant_series_slack_is_margin() {
        let r = lemma3_check(&Constant(3.5), 1000.0, 10.0, 10.0).unwrap();
        let margin = 10.0 * 10.0 * 1000f64.ln();
        assert!((r.slack_plus - margin).abs() < 1e-9);
        assert!((r.slack_minus - margin).abs() < 1e-9);
        assert!(r.holds);
        let r2 = lemma3_check(&Constant(3.5), 1000.0, 20.0, 10.0).unwrap();
        assert!(r2.slack_plus - r.slack_plus >= margin - 1e-9);
    }

    #[test]
    fn window_preconditions() {
        assert!(lemma3_check(&Constant(0.0), 100.0, 60.0, 10.0).is_err());
        assert!(lemma3_check(&Constant(0.0), 100.0, 0.5, 10.0).is_err());
    }

    #[test]
    fn r_vanishes_at_zero_and_matches_definitions() {
        let grid = CriticalLineGrid::build(120.0, 1e-10).unwrap();
        let table = DivisorTable::build(100).unwrap();
        let h = HybridErrorTerms::new(&grid, &table);
        assert_eq!(h.r_term(0.0).unwrap(), 0.0);
        let t = 100.0;
        let x = t / TAU;
        let raw_dstar: f64 = 0.5
            * (1..=(4.0 * x) as usize)
                .map(|n| if n % 2 == 0 { 1.0 } else { -1.0 } * table.d(n) as f64)
                .sum::<f64>()
            - x * (x.ln() + 2.0 * crate::EULER_GAMMA - 1.0);
        let expect = grid.e(t).unwrap() - TAU * raw_dstar;
        assert!((h.e_star(t).unwrap() - expect).abs() < 1e-6);
        let s = ErrorFunctionSeries::sample(SeriesKind::R, &[0.0, 50.0, 100.0], &h).unwrap();
        assert_eq!(s.values[0], 0.0);
        assert!(ErrorFunctionSeries::sample(SeriesKind::R, &[1.0, 1.0], &h).is_err());
    }
}
