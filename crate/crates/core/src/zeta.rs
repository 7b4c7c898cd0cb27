//! `|ζ(½+it)|²` on the critical line.
//!
//! Two evaluators are provided. Euler–Maclaurin summation is the slow, accurate
//! reference; the Riemann–Siegel formula is the `O(√t)` path used to build grids.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rs_coeffs::RS_CORRECTIONS;
use crate::sum::{CompensatedComplexSum, CompensatedSum};

/// Smallest `t` accepted by the Riemann–Siegel evaluator.
pub const RS_MIN_T: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaMethod {
    EulerMaclaurin,
    RiemannSiegel,
    /// Euler–Maclaurin below [`RS_MIN_T`], Riemann–Siegel above.
    Auto,
}

/// `B_2, B_4, …, B_16`.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// `ζ(s)` by Euler–Maclaurin summation with `N = max(20, ⌈2|Im s|⌉)` terms and eight
/// Bernoulli corrections. Intended for `Re s > 0`, `s ≠ 1`.
pub fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
    let n_terms = 20usize.max((2.0 * s.im.abs()).ceil() as usize);
    let mut acc = CompensatedComplexSum::new();
    for n in (1..n_terms).rev() {
        acc.add((-s * (n as f64).ln()).exp());
    }
    let big_n = n_terms as f64;
    let n_pow = (-s * big_n.ln()).exp();
    acc.add(n_pow * big_n / (s - 1.0));
    acc.add(0.5 * n_pow);

    let mut rising = s;
    let mut factorial = 2.0;
    let mut n_scale = 1.0 / big_n;
    for (k, &b) in BERNOULLI.iter().enumerate() {
        acc.add(b / factorial * rising * n_pow * n_scale);
        let j = (2 * k + 1) as f64;
        rising = rising * (s + j) * (s + j + 1.0);
        factorial *= (j + 2.0) * (j + 3.0);
        n_scale /= big_n * big_n;
    }
    acc.value()
}

/// Riemann–Siegel theta by Stirling's series with three correction terms.
/// Accurate to about `1e−12` for `t ≥ 10`.
pub fn siegel_theta(t: f64) -> f64 {
    let t2 = t * t;
    0.5 * t * (t / TAU).ln() - 0.5 * t - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t2)
        + 31.0 / (80640.0 * t * t2 * t2)
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(½+it)` from the Euler–Maclaurin reference.
pub fn hardy_z_reference(t: f64) -> f64 {
    let z = zeta_euler_maclaurin(Complex64::new(0.5, t));
    (Complex64::from_polar(1.0, siegel_theta(t)) * z).re
}

/// Hardy's `Z(t)` by the Riemann–Siegel formula with corrections `C_0 … C_6`.
pub fn riemann_siegel_z(t: f64) -> Result<f64> {
    if !(t >= RS_MIN_T) || !t.is_finite() {
        return Err(Error::arg(format!("Riemann-Siegel evaluation needs t >= {RS_MIN_T}, got {t}")));
    }
    let a = (t / TAU).sqrt();
    let n = a.floor() as usize;
    let p = a - n as f64;
    let theta = siegel_theta(t);

    let mut main = CompensatedSum::new();
    for k in (1..=n).rev() {
        let kf = k as f64;
        main.add((theta - t * kf.ln()).cos() / kf.sqrt());
    }

    let z = p - 0.5;
    let inv_a = 1.0 / a;
    let mut correction = 0.0;
    let mut scale = 1.0;
    for coeffs in RS_CORRECTIONS.iter() {
        correction += scale * horner(coeffs, z);
        scale *= inv_a;
    }
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(2.0 * main.value() + sign * correction / a.sqrt())
}

fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c)
}

/// `|ζ(½+it)|²` for `t ≥ 0`.
pub fn zeta_half_sq(t: f64, method: ZetaMethod) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::arg(format!("t must be finite and nonnegative, got {t}")));
    }
    match method {
        ZetaMethod::EulerMaclaurin => Ok(zeta_euler_maclaurin(Complex64::new(0.5, t)).norm_sqr()),
        ZetaMethod::RiemannSiegel => riemann_siegel_z(t).map(|z| z * z),
        ZetaMethod::Auto if t < RS_MIN_T => zeta_half_sq(t, ZetaMethod::EulerMaclaurin),
        ZetaMethod::Auto => zeta_half_sq(t, ZetaMethod::RiemannSiegel),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ζ(½) = −1.4603545088095868128894991525…
    const ZETA_HALF: f64 = -1.460_354_508_809_586_8;

    #[test]
    fn zeta_at_half() {
        let z = zeta_euler_maclaurin(Complex64::new(0.5, 0.0));
        assert!((z.re - ZETA_HALF).abs() < 1e-14);
        assert!(z.im.abs() < 1e-15);
        let sq = zeta_half_sq(0.0, ZetaMethod::Auto).unwrap();
        // ζ(½)² = 2.13263529140048956829…
        assert!((sq - 2.132_635_291_400_489_6).abs() < 1e-13);
    }

    #[test]
    fn zeta_at_two() {
        let z = zeta_euler_maclaurin(Complex64::new(2.0, 0.0));
        assert!((z.re - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn theta_known_value() {
        // θ(100) = 87.97216523178721962548…
        assert!((siegel_theta(100.0) - 87.972_165_231_787_22).abs() < 1e-11);
    }

    #[test]
    fn hardy_z_is_real_rotation() {
        for t in [15.0, 21.3, 47.0] {
            let zeta = zeta_euler_maclaurin(Complex64::new(0.5, t));
            let rotated = Complex64::from_polar(1.0, siegel_theta(t)) * zeta;
            assert!(rotated.im.abs() < 1e-10, "t = {t}: {rotated}");
        }
    }

    #[test]
    fn riemann_siegel_domain() {
        assert!(matches!(zeta_half_sq(29.9, ZetaMethod::RiemannSiegel), Err(Error::Argument(_))));
        assert!(zeta_half_sq(-1.0, ZetaMethod::Auto).is_err());
    }

    #[test]
    fn methods_agree_at_moderate_height() {
        for t in [30.0, 31.7, 55.5, 100.0, 1234.5, 9876.5] {
            let em = zeta_half_sq(t, ZetaMethod::EulerMaclaurin).unwrap();
            let rs = zeta_half_sq(t, ZetaMethod::RiemannSiegel).unwrap();
            assert!((em - rs).abs() < 1e-6, "t = {t}: {em} vs {rs}");
        }
    }
}
