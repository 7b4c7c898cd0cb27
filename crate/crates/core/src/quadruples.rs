//! Counting quadruples `N < n₁,n₂,n₃,n₄ ≤ 2N` (ordered) with
//! `|n₁^{1/k} + n₂^{1/k} − n₃^{1/k} − n₄^{1/k}| < δN^{1/k}`.
//!
//! Differences are compared in double precision. Any difference within
//! `1e−12·N^{1/k}` of the threshold is re-decided in double-double arithmetic, so the
//! strict inequality is stable, and exact ties (perfect powers) are excluded.

use rayon::prelude::*;
use serde::Serialize;

use crate::ddouble::DD;
use crate::error::{Error, Result};

/// Largest `N` for the `O(N⁴)` loop.
pub const NAIVE_MAX_N: u64 = 300;
/// Largest `N` for the sorted-pair method.
pub const FAST_MAX_N: u64 = 100_000;
/// Memory ceiling for the pair-sum array.
pub const MAX_PAIR_BYTES: u64 = 2 << 30;
pub const BOUND_EPS: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    Naive,
    SortedTwoPointer,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadrupleCountResult {
    pub n: u64,
    pub k: u32,
    pub delta: f64,
    pub count: u64,
    /// Ordered quadruples with `{n₁,n₂} = {n₃,n₄}`: `2N² − N`.
    pub diagonal: u64,
    /// `N^ε(N⁴δ + N²)`
    pub bound_value: f64,
    pub ratio: f64,
    pub method: CountMethod,
    /// Comparisons settled in double-double.
    pub rechecked: u64,
}

struct Setup {
    roots: Vec<f64>,
    roots_dd: Vec<DD>,
    thr: f64,
    thr_dd: DD,
    guard: f64,
}

fn setup(n: u64, k: u32, delta: f64) -> Result<Setup> {
    if n == 0 {
        return Err(Error::arg("N must be positive"));
    }
    if k < 2 {
        return Err(Error::arg(format!("k must be at least 2, got {k}")));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::arg(format!("delta must be positive and finite, got {delta}")));
    }
    let scale_dd = DD::kth_root(n, k);
    let scale = scale_dd.to_f64();
    let roots_dd: Vec<DD> = (n + 1..=2 * n).map(|m| DD::kth_root(m, k)).collect();
    Ok(Setup {
        roots: roots_dd.iter().map(|r| r.to_f64()).collect(),
        roots_dd,
        thr: delta * scale,
        thr_dd: DD::from_f64(delta) * scale_dd,
        guard: 1e-12 * scale,
    })
}

impl Setup {
    /// `|(R_a + R_b) − (R_c + R_d)| < δN^{1/k}` in double-double.
    fn exact_inside(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let r = &self.roots_dd;
        let diff = ((r[a] + r[b]) - (r[c] + r[d])).abs();
        diff < self.thr_dd
    }
}

pub fn diagonal_count(n: u64) -> u64 {
    2 * n * n - n
}

fn finish(n: u64, k: u32, delta: f64, count: u64, method: CountMethod, rechecked: u64) -> QuadrupleCountResult {
    let nf = n as f64;
    let bound_value = nf.powf(BOUND_EPS) * (nf.powi(4) * delta + nf * nf);
    QuadrupleCountResult {
        n,
        k,
        delta,
        count,
        diagonal: diagonal_count(n),
        bound_value,
        ratio: count as f64 / bound_value,
        method,
        rechecked,
    }
}

/// Exact count by the quadruple loop (`N ≤ 300`).
pub fn count_quadruples_naive(n: u64, k: u32, delta: f64) -> Result<QuadrupleCountResult> {
    if n > NAIVE_MAX_N {
        return Err(Error::arg(format!("naive counting is limited to N <= {NAIVE_MAX_N}; use the fast method")));
    }
    let s = setup(n, k, delta)?;
    let m = n as usize;
    let (count, rechecked) = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut count = 0u64;
            let mut rechecked = 0u64;
            for b in 0..m {
                let left = s.roots[a] + s.roots[b];
                for c in 0..m {
                    let partial = left - s.roots[c];
                    for d in 0..m {
                        let diff = (partial - s.roots[d]).abs();
                        if diff < s.thr - s.guard {
                            count += 1;
                        } else if diff < s.thr + s.guard {
                            rechecked += 1;
                            if s.exact_inside(a, b, c, d) {
                                count += 1;
                            }
                        }
                    }
                }
            }
            (count, rechecked)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    Ok(finish(n, k, delta, count, CountMethod::Naive, rechecked))
}

/// Count via the sorted array of all `N²` ordered pair sums and a sliding window.
pub fn count_quadruples_fast(n: u64, k: u32, delta: f64) -> Result<QuadrupleCountResult> {
    if n > FAST_MAX_N {
        return Err(Error::range("N", n as f64, FAST_MAX_N as f64));
    }
    let bytes = n * n * std::mem::size_of::<(f64, u32, u32)>() as u64;
    if bytes > MAX_PAIR_BYTES {
        return Err(Error::Resource(format!("pair-sum array needs {bytes} bytes, limit {MAX_PAIR_BYTES}")));
    }
    let s = setup(n, k, delta)?;
    let m = n as usize;
    let mut pairs: Vec<(f64, u32, u32)> = Vec::new();
    pairs
        .try_reserve_exact(m * m)
        .map_err(|e| Error::Resource(format!("pair-sum array of {} entries: {e}", m * m)))?;
    for a in 0..m {
        for b in 0..m {
            pairs.push((s.roots[a] + s.roots[b], a as u32, b as u32));
        }
    }
    pairs.par_sort_unstable_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));

    let len = pairs.len();
    let outer = s.thr + s.guard;
    let inner = s.thr - s.guard;
    let (mut lo_out, mut lo_in, mut hi_in, mut hi_out) = (0usize, 0usize, 0usize, 0usize);
    let mut count = 0u64;
    let mut rechecked = 0u64;
    let mut recheck = |i: usize, j: usize, count: &mut u64| {
        rechecked += 1;
        let (_, a, b) = pairs[i];
        let (_, c, d) = pairs[j];
        if s.exact_inside(a as usize, b as usize, c as usize, d as usize) {
            *count += 1;
        }
    };
    for i in 0..len {
        let si = pairs[i].0;
        while lo_out < len && pairs[lo_out].0 <= si - outer {
            lo_out += 1;
        }
        while hi_out < len && pairs[hi_out].0 < si + outer {
            hi_out += 1;
        }
        if inner > 0.0 {
            while lo_in < len && pairs[lo_in].0 <= si - inner {
                lo_in += 1;
            }
            while hi_in < len && pairs[hi_in].0 < si + inner {
                hi_in += 1;
            }
            count += (hi_in - lo_in) as u64;
            for j in lo_out..lo_in {
                recheck(i, j, &mut count);
            }
            for j in hi_in..hi_out {
                recheck(i, j, &mut count);
            }
        } else {
            for j in lo_out..hi_out {
                recheck(i, j, &mut count);
            }
        }
    }
    Ok(finish(n, k, delta, count, CountMethod::SortedTwoPointer, rechecked))
}

/// `√a + √b = √c + √d` decided in integer arithmetic.
pub fn sqrt_sums_equal(a: u64, b: u64, c: u64, d: u64) -> bool {
    let (a, b, c, d) = (i128::from(a), i128::from(b), i128::from(c), i128::from(d));
    // √a+√b = √c+√d  ⟺  s = 2(√(cd) − √(ab)) with s = a+b−c−d
    let s = a + b - c - d;
    if s == 0 {
        return a * b == c * d;
    }
    // squaring: s² = 4(ab + cd) − 8√(abcd), so √(abcd) = (4(ab+cd) − s²)/8 must be exact
    let num = 4 * (a * b + c * d) - s * s;
    if num < 0 || num % 8 != 0 || (num / 8) * (num / 8) != a * b * c * d {
        return false;
    }
    // sign condition: √(cd) − √(ab) has the sign of s
    (c * d > a * b) == (s > 0)
}

/// Ordered quadruples in `(N, 2N]⁴` with `√n₁ + √n₂ = √n₃ + √n₄` exactly.
pub fn exact_sqrt_coincidences(n: u64) -> u64 {
    let lo = n + 1;
    let hi = 2 * n;
    let roots: Vec<f64> = (lo..=hi).map(|m| (m as f64).sqrt()).collect();
    let mut count = 0;
    for (i, a) in (lo..=hi).enumerate() {
        for (j, b) in (lo..=hi).enumerate() {
            let left = roots[i] + roots[j];
            for (p, c) in (lo..=hi).enumerate() {
                for (q, d) in (lo..=hi).enumerate() {
                    if (left - roots[p] - roots[q]).abs() < 1e-9 && sqrt_sums_equal(a, b, c, d) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        assert_eq!(count_quadruples_naive(1, 3, 0.5).unwrap().count, 1);
        for n in [3, 7] {
            assert_eq!(count_quadruples_naive(n, 2, 4.0).unwrap().count, n.pow(4));
            assert_eq!(count_quadruples_fast(n, 2, 4.0).unwrap().count, n.pow(4));
        }
        assert!(count_quadruples_naive(301, 2, 0.1).is_err());
        assert!(count_quadruples_naive(10, 1, 0.1).is_err());
        assert!(count_quadruples_naive(10, 2, 0.0).is_err());
    }

    #[test]
    fn exact_tie_is_excluded() {
        // √121 + √81 − √100 − √81 = 1 = δ·√64 with δ = 1/8
        let at = count_quadruples_fast(64, 2, 0.125).unwrap();
        let above = count_quadruples_fast(64, 2, 0.125 + 1e-9).unwrap();
        let naive = count_quadruples_naive(64, 2, 0.125).unwrap();
        assert_eq!(at.count, naive.count);
        assert!(above.count > at.count);
        assert!(at.rechecked > 0);
    }

    #[test]
    fn algebraic_zero_test() {
        assert!(sqrt_sums_equal(64, 100, 81, 81));
        assert!(sqrt_sums_equal(72, 72, 50, 98));
        assert!(sqrt_sums_equal(3, 5, 5, 3));
        assert!(!sqrt_sums_equal(2, 3, 1, 5));
        assert!(!sqrt_sums_equal(64, 100, 81, 80));
    }

    #[test]
    fn memory_guard() {
        assert!(matches!(count_quadruples_fast(20_000, 2, 0.1), Err(Error::Resource(_))));
        assert!(matches!(count_quadruples_fast(200_000, 2, 0.1), Err(Error::OutOfRange { .. })));
    }
}
