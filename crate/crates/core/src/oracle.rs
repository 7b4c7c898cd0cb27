//! Independent reference computations used to cross-check the closed-form reductions.

use std::f64::consts::{PI, TAU};

use crate::divisor::DeltaStarForm;
use crate::error::{Error, Result};
use crate::error_terms::HybridErrorTerms;
use crate::quad::gl8_points;
use crate::sum::CompensatedSum;

/// `E*(t)` with `Δ*` taken in its combination form `−Δ(x) + 2Δ(2x) − ½Δ(4x)`.
pub fn e_star_combination(terms: &HybridErrorTerms<'_>, t: f64) -> Result<f64> {
    let d = terms.table.delta_star(t / TAU, DeltaStarForm::Combination)?;
    Ok(terms.grid.e(t)? - TAU * d)
}

/// `∫₀^T E*(t) dt` at each requested `T` (increasing) by Gauss–Legendre quadrature of the
/// pointwise `E*`. Panels end at the jumps `t = kπ/2` of `Δ*(t/2π)` and are at most
/// `max_width` wide, so every panel integrand is smooth.
pub fn nested_integral_e_star(terms: &HybridErrorTerms<'_>, ts: &[f64], max_width: f64) -> Result<Vec<f64>> {
    if ts.windows(2).any(|w| !(w[0] <= w[1])) {
        return Err(Error::arg("targets must be nondecreasing"));
    }
    if !(max_width > 0.0) {
        return Err(Error::arg("panel width must be positive"));
    }
    let mut out = Vec::with_capacity(ts.len());
    let mut acc = CompensatedSum::new();
    let mut pos = 0.0;
    let half_pi = 0.5 * PI;
    let mut jump = 1u64;
    for &target in ts {
        while pos < target {
            while jump as f64 * half_pi <= pos {
                jump += 1;
            }
            let end = (jump as f64 * half_pi).min(target);
            let pieces = ((end - pos) / max_width).ceil().max(1.0) as usize;
            let w = (end - pos) / pieces as f64;
            for i in 0..pieces {
                let a = pos + i as f64 * w;
                let b = if i + 1 == pieces { end } else { a + w };
                let mut panel = 0.0;
                for (x, wt) in gl8_points(a, b) {
                    panel += wt * e_star_combination(terms, x)?;
                }
                acc.add(panel);
            }
            pos = end;
        }
        out.push(acc.value());
    }
    Ok(out)
}

/// `R(T)` from [`nested_integral_e_star`].
pub fn nested_r(terms: &HybridErrorTerms<'_>, ts: &[f64], max_width: f64) -> Result<Vec<f64>> {
    let ints = nested_integral_e_star(terms, ts, max_width)?;
    Ok(ints.iter().zip(ts).map(|(i, &t)| i - 0.75 * PI * t).collect())
}

/// First sign change of Hardy's `Z` above `lo`, located by bisection on the
/// Euler–Maclaurin reference.
pub fn first_zero_bisect(lo: f64, hi: f64, tol: f64) -> Result<f64> {
    use crate::zeta::hardy_z_reference;
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (hardy_z_reference(a), hardy_z_reference(b));
    if fa.signum() == fb.signum() {
        return Err(Error::arg(format!("Z has no sign change on [{lo}, {hi}]")));
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if hardy_z_reference(m).signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::DivisorTable;
    use crate::grid::CriticalLineGrid;

    #[test]
    fn first_zero() {
        let z = first_zero_bisect(14.0, 14.3, 1e-9).unwrap();
        assert!((z - 14.134_725_141_734_693).abs() < 1e-8);
        let v = crate::zeta::zeta_half_sq(14.134_725, crate::ZetaMethod::EulerMaclaurin).unwrap();
        assert!(v < 1e-9);
    }

    #[test]
    fn nested_matches_reduction() {
        let grid = CriticalLineGrid::build(200.0, 1e-10).unwrap();
        let table = DivisorTable::build(200).unwrap();
        let terms = HybridErrorTerms::new(&grid, &table);
        let ts = [10.0, 55.5, 100.0, 200.0];
        let r = nested_r(&terms, &ts, 0.25).unwrap();
        for (&t, &rn) in ts.iter().zip(&r) {
            assert!((terms.r_term(t).unwrap() - rn).abs() < 1e-6, "T = {t}");
        }
    }
}
