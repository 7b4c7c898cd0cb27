//! Fixed-order Gauss–Legendre panels and an adaptive Gauss–Kronrod integrator.
//!
//! The fixed 8-node rule backs the cumulative critical-line integrals. The adaptive
//! 7/15 rule is the reference integrator used by the cross-checks.

use crate::error::{Error, Result};

const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// Abscissae of the 8-node Gauss–Legendre rule mapped onto `[a, b]`.
pub fn gl8_points(a: f64, b: f64) -> [(f64, f64); 8] {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut out = [(0.0, 0.0); 8];
    for (i, (&x, &w)) in GL8_NODES.iter().zip(GL8_WEIGHTS.iter()).enumerate() {
        out[2 * i] = (mid - half * x, half * w);
        out[2 * i + 1] = (mid + half * x, half * w);
    }
    out
}

pub fn gl8<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    gl8_points(a, b).iter().map(|&(x, w)| w * f(x)).sum()
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(mid);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let s = f(mid - dx) + f(mid + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive Gauss–Kronrod (7/15) quadrature with a global absolute tolerance.
///
/// Intervals are bisected until each piece meets its share of `abs_tol`, or until
/// `max_depth` levels of bisection have been used.
pub fn adaptive_gk<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, abs_tol: f64, max_depth: u32) -> Result<f64> {
    if !(abs_tol > 0.0) {
        return Err(Error::arg("quadrature tolerance must be positive"));
    }
    if a == b {
        return Ok(0.0);
    }
    let width = b - a;
    let mut stack = vec![(a, b, 0u32)];
    let mut total = 0.0;
    let mut worst: Option<(f64, f64)> = None;
    while let Some((lo, hi, depth)) = stack.pop() {
        let (value, err) = gk15(&mut f, lo, hi);
        let share = abs_tol * ((hi - lo) / width).abs();
        if err <= share || depth >= max_depth {
            if err > share && worst.is_none_or(|(_, e)| err > e) {
                worst = Some((value, err));
            }
            total += value;
        } else {
            let m = 0.5 * (lo + hi);
            stack.push((m, hi, depth + 1));
            stack.push((lo, m, depth + 1));
        }
    }
    if let Some((value, err)) = worst {
        return Err(Error::Accuracy {
            context: format!("adaptive quadrature on [{a}, {b}]"),
            coarse: value,
            refined: value + err,
        });
    }
    Ok(total)
}
