//! Neumaier-compensated accumulation for long oscillating series.

use std::iter::Sum;
use std::ops::AddAssign;

use num_complex::Complex64;
use rayon::prelude::*;

#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Component-wise compensated sum of complex terms.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl CompensatedComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    terms.into_iter().sum::<CompensatedSum>().value()
}

const BLOCK: usize = 1 << 16;

/// `Σ_{lo≤n≤hi} term(n)`, summed in descending `n` inside fixed blocks that are evaluated
/// in parallel and combined in a fixed order. The result does not depend on the thread count.
pub fn par_descending_sum<F>(lo: usize, hi: usize, term: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    if hi < lo {
        return 0.0;
    }
    let blocks = (hi - lo) / BLOCK + 1;
    let partial: Vec<f64> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let start = lo + b * BLOCK;
            let end = (start + BLOCK - 1).min(hi);
            compensated_sum((start..=end).rev().map(&term))
        })
        .collect();
    compensated_sum(partial.into_iter().rev())
}
