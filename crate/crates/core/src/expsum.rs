//! Alternating divisor exponential sums `Σ (−1)ᵏ d(k) e^{iF(T,k)}` and their bound
//! comparators.

use num_complex::Complex64;
use serde::Serialize;

use crate::divisor::DivisorTable;
use crate::error::{Error, Result};
use crate::sum::CompensatedComplexSum;

/// Exponent used to pad `T^ε` in the comparators.
pub const COMPARATOR_EPS: f64 = 0.01;

/// `F(T,n) = c₁(Tn)^{1/2} + c₃n^{3/2}T^{−1/2} + … + c_{2L−1}n^{L−1/2}T^{3/2−L}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhasePolynomial {
    coeffs: Vec<f64>,
}

impl PhasePolynomial {
    /// `coeffs = [c₁, c₃, …, c_{2L−1}]`.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        match coeffs.first() {
            None => Err(Error::arg("phase polynomial needs at least c1")),
            Some(&c1) if c1 == 0.0 || !c1.is_finite() => Err(Error::arg("c1 must be finite and nonzero")),
            _ if coeffs.iter().any(|c| !c.is_finite()) => Err(Error::arg("coefficients must be finite")),
            _ => Ok(Self { coeffs }),
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, t: f64, n: f64) -> f64 {
        let ratio = n / t;
        let mut term = (t * n).sqrt();
        let mut acc = 0.0;
        for &c in &self.coeffs {
            acc += c * term;
            term *= ratio;
        }
        acc
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpSum {
    pub value: Complex64,
    /// The summation range lies outside the hypothesis of the bound being compared with.
    pub flagged: bool,
}

fn sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn direct_sum<F: Fn(usize) -> f64>(lo: usize, hi: usize, table: &DivisorTable, phase: F) -> Result<Complex64> {
    if hi > table.n_max() {
        return Err(Error::range("k", hi as f64, table.n_max() as f64));
    }
    let mut acc = CompensatedComplexSum::new();
    for k in lo..=hi {
        acc.add(Complex64::from_polar(sign(k) * f64::from(table.d(k)), phase(k)));
    }
    Ok(acc.value())
}

/// `Σ_{K<k≤K₂} (−1)ᵏ d(k) e^{iF(T,k)}` with `K < K₂ ≤ 2K`; flagged when `K > T^{3/4}`.
pub fn lemma4_sum(t: f64, k: u64, k2: u64, phase: &PhasePolynomial, table: &DivisorTable) -> Result<ExpSum> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::arg(format!("T must be positive, got {t}")));
    }
    if k == 0 || k2 <= k || k2 > 2 * k {
        return Err(Error::arg(format!("need 1 <= K < K2 <= 2K, got K = {k}, K2 = {k2}")));
    }
    let value = direct_sum(k as usize + 1, k2 as usize, table, |n| phase.eval(t, n as f64))?;
    Ok(ExpSum {
        value,
        flagged: k as f64 > t.powf(0.75),
    })
}

/// `T^{κ/2} K^{(1+λ)/2} log T`
pub fn lemma4_bound(t: f64, k: u64, kappa: f64, lambda: f64) -> f64 {
    t.powf(0.5 * kappa) * (k as f64).powf(0.5 * (1.0 + lambda)) * t.ln()
}

/// `Σ_{K≤k≤K₂} (−1)ᵏ d(k) e^{i c (kT)^{1/2} + i d k^{3/2} T^{−1/2}}` with `K ≤ K₂ ≤ 2K`;
/// flagged when `K > T^{1/2}`.
pub fn kolesnik_sum(t: f64, k: u64, k2: u64, c: f64, d: f64, table: &DivisorTable) -> Result<ExpSum> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::arg(format!("T must be positive, got {t}")));
    }
    if c == 0.0 || !c.is_finite() || !d.is_finite() {
        return Err(Error::arg("c must be finite and nonzero, d finite"));
    }
    if k == 0 || k2 < k || k2 > 2 * k {
        return Err(Error::arg(format!("need 1 <= K <= K2 <= 2K, got K = {k}, K2 = {k2}")));
    }
    let rt = t.sqrt();
    let value = direct_sum(k as usize, k2 as usize, table, |n| {
        let nf = n as f64;
        c * (nf * t).sqrt() + d * nf * nf.sqrt() / rt
    })?;
    Ok(ExpSum {
        value,
        flagged: k as f64 > rt,
    })
}

/// `T^ε (T^{−1/16} K^{173/152} + T^{1/16} K^{119/152})`
pub fn kolesnik_comparator(t: f64, k: u64) -> f64 {
    let kf = k as f64;
    t.powf(COMPARATOR_EPS) * (t.powf(-1.0 / 16.0) * kf.powf(173.0 / 152.0) + t.powf(1.0 / 16.0) * kf.powf(119.0 / 152.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoublingRow {
    pub k: u64,
    pub modulus: f64,
    pub comparator: f64,
    pub ratio: f64,
}

/// `|lemma4_sum(T, K, 2K)|` against [`lemma4_bound`] for `K = K₀, 2K₀, …`.
pub fn lemma4_doubling_profile(
    t: f64,
    k0: u64,
    doublings: u32,
    phase: &PhasePolynomial,
    pair: (f64, f64),
    table: &DivisorTable,
) -> Result<Vec<DoublingRow>> {
    (0..=doublings)
        .map(|j| {
            let k = k0 << j;
            let s = lemma4_sum(t, k, 2 * k, phase, table)?;
            let comparator = lemma4_bound(t, k, pair.0, pair.1);
            let modulus = s.value.norm();
            Ok(DoublingRow {
                k,
                modulus,
                comparator,
                ratio: modulus / comparator,
            })
        })
        .collect()
}
