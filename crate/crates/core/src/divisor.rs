//! Divisor-function sieve and exact evaluation of the divisor-problem error terms.
//!
//! All divisor-side sums are kept as exact 64-bit integers. Floating point enters only
//! when the smooth main term `x(log x + 2γ − 1)` is subtracted.
//!
//! Step-function convention: `Σ_{n≤x}` is inclusive, so `Δ` and `Δ*` are
//! right-continuous and jump at every integer (respectively every multiple of ¼).

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const CACHE_MAGIC: &[u8; 8] = b"DZDIVTB\0";
const CACHE_VERSION: u32 = 1;

/// Which of the two equivalent expressions to use for `Δ*(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaStarForm {
    /// `−Δ(x) + 2Δ(2x) − ½Δ(4x)`
    Combination,
    /// `½ Σ_{n≤4x} (−1)ⁿ d(n) − x(log x + 2γ − 1)`
    Alternating,
}

/// `x(log x + 2γ − 1)`, continuously extended by 0 at `x = 0`.
pub fn main_term(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * (x.ln() + 2.0 * EULER_GAMMA - 1.0)
    }
}

/// `∫₀^T t(log t + 2γ − 1) dt = T²/2·log T − T²/4 + (2γ−1)T²/2`.
pub fn main_term_integral(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        let t2 = t * t;
        0.5 * t2 * t.ln() - 0.25 * t2 + (2.0 * EULER_GAMMA - 1.0) * 0.5 * t2
    }
}

/// Sieved `d(n)` for `1 ≤ n ≤ n_max` with exact prefix sums.
///
/// Prefix arrays are indexed by `x` and hold the sum over `1 ≤ n ≤ x`; index 0 is the
/// empty sum.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorTable {
    n_max: usize,
    d: Vec<u32>,
    prefix_d: Vec<i64>,
    prefix_alt: Vec<i64>,
    prefix_d2: Vec<i64>,
    prefix_weighted: Vec<i64>,
    prefix_alt_weighted: Vec<i64>,
}

/// Shorthand for [`DivisorTable::build`].
pub fn build_divisor_table(n_max: usize) -> Result<DivisorTable> {
    DivisorTable::build(n_max)
}

impl DivisorTable {
    pub fn build(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::arg("n_max must be at least 1"));
        }
        let mut d = try_alloc::<u32>(n_max + 1)?;
        d.resize(n_max + 1, 0);
        for m in 1..=n_max {
            for j in (m..=n_max).step_by(m) {
                d[j] += 1;
            }
        }
        Self::from_counts(n_max, d)
    }

    fn from_counts(n_max: usize, d: Vec<u32>) -> Result<Self> {
        let overflow = || Error::Resource(format!("prefix sums overflow 64 bits for n_max = {n_max}"));
        let mut prefix_d = try_alloc::<i64>(n_max + 1)?;
        let mut prefix_alt = try_alloc::<i64>(n_max + 1)?;
        let mut prefix_d2 = try_alloc::<i64>(n_max + 1)?;
        let mut prefix_weighted = try_alloc::<i64>(n_max + 1)?;
        let mut prefix_alt_weighted = try_alloc::<i64>(n_max + 1)?;
        let (mut s, mut sa, mut s2, mut sw, mut saw) = (0i64, 0i64, 0i64, 0i64, 0i64);
        for (n, &dn) in d.iter().enumerate() {
            let dn = i64::from(dn);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let nd = dn.checked_mul(n as i64).ok_or_else(overflow)?;
            s += dn;
            sa += sign * dn;
            s2 = s2.checked_add(dn * dn).ok_or_else(overflow)?;
            sw = sw.checked_add(nd).ok_or_else(overflow)?;
            saw = saw.checked_add(sign * nd).ok_or_else(overflow)?;
            prefix_d.push(s);
            prefix_alt.push(sa);
            prefix_d2.push(s2);
            prefix_weighted.push(sw);
            prefix_alt_weighted.push(saw);
        }
        Ok(Self {
            n_max,
            d,
            prefix_d,
            prefix_alt,
            prefix_d2,
            prefix_weighted,
            prefix_alt_weighted,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `d(n)`; panics for `n = 0` or `n > n_max`.
    pub fn d(&self, n: usize) -> u32 {
        assert!(n >= 1 && n <= self.n_max, "d({n}) outside sieved range 1..={}", self.n_max);
        self.d[n]
    }

    /// Divisor counts `d(1..=n_max)`.
    pub fn counts(&self) -> &[u32] {
        &self.d[1..]
    }

    /// `Σ_{n≤x} d(n)` for integer `x ≤ n_max`.
    pub fn prefix_d(&self, x: usize) -> i64 {
        self.prefix_d[x]
    }

    /// `Σ_{n≤x} (−1)ⁿ d(n)`.
    pub fn prefix_alt(&self, x: usize) -> i64 {
        self.prefix_alt[x]
    }

    /// `Σ_{n≤x} d²(n)`.
    pub fn prefix_d2(&self, x: usize) -> i64 {
        self.prefix_d2[x]
    }

    /// `Σ_{n≤x} n·d(n)`.
    pub fn prefix_weighted(&self, x: usize) -> i64 {
        self.prefix_weighted[x]
    }

    /// `Σ_{n≤x} (−1)ⁿ n·d(n)`.
    pub fn prefix_alt_weighted(&self, x: usize) -> i64 {
        self.prefix_alt_weighted[x]
    }

    fn floor_index(&self, x: f64, what: &'static str) -> Result<usize> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::arg(format!("{what} must be a finite nonnegative number, got {x}")));
        }
        if x > self.n_max as f64 {
            return Err(Error::range(what, x, self.n_max as f64));
        }
        Ok(x.floor() as usize)
    }

    /// `Δ(x) = Σ_{n≤x} d(n) − x(log x + 2γ − 1)`.
    pub fn delta(&self, x: f64) -> Result<f64> {
        let k = self.floor_index(x, "x")?;
        Ok(self.prefix_d[k] as f64 - main_term(x))
    }

    pub fn delta_star(&self, x: f64, form: DeltaStarForm) -> Result<f64> {
        match form {
            DeltaStarForm::Combination => {
                self.floor_index(4.0 * x, "4x")?;
                Ok(-self.delta(x)? + 2.0 * self.delta(2.0 * x)? - 0.5 * self.delta(4.0 * x)?)
            }
            DeltaStarForm::Alternating => {
                let k = self.floor_index(4.0 * x, "4x")?;
                Ok(0.5 * self.prefix_alt[k] as f64 - main_term(x))
            }
        }
    }

    /// `∫₀^T Δ(t) dt`, exact on the divisor side: `Σ_{n≤T} d(n)(T − n)` minus the closed-form
    /// integral of the main term.
    pub fn integral_delta(&self, t: f64) -> Result<f64> {
        let k = self.floor_index(t, "T")?;
        let step = t * self.prefix_d[k] as f64 - self.prefix_weighted[k] as f64;
        Ok(step - main_term_integral(t))
    }

    /// `H(T) = ∫₀^T Δ(t) dt − T/4`.
    pub fn h_term(&self, t: f64) -> Result<f64> {
        Ok(self.integral_delta(t)? - 0.25 * t)
    }

    /// `∫₀^T Δ*(t) dt = ½ Σ_{n≤4T} (−1)ⁿ d(n)(T − n/4)` minus the main-term integral.
    pub fn integral_delta_star(&self, t: f64) -> Result<f64> {
        let k = self.floor_index(4.0 * t, "4T")?;
        let step = 0.5 * (t * self.prefix_alt[k] as f64 - 0.25 * self.prefix_alt_weighted[k] as f64);
        Ok(step - main_term_integral(t))
    }

    /// `Σ_{n≤x} d²(n) nᵃ` by direct compensated summation.
    pub fn d2_weighted_sum(&self, x: f64, a: f64) -> Result<f64> {
        if !(a > -0.5) {
            return Err(Error::arg(format!("weight exponent must exceed -1/2, got {a}")));
        }
        let k = self.floor_index(x, "x")?;
        if a == 0.0 {
            return Ok(self.prefix_d2[k] as f64);
        }
        let mut acc = CompensatedSum::new();
        for n in (1..=k).rev() {
            let dn = f64::from(self.d[n]);
            acc.add(dn * dn * (n as f64).powf(a));
        }
        Ok(acc.value())
    }

    /// Writes the binary cache: magic, version, `n_max`, then little-endian arrays.
    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        std::fs::create_dir_all(dir)?;
        let tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let mut w = BufWriter::new(tmp.as_file());
            w.write_all(CACHE_MAGIC)?;
            w.write_all(&CACHE_VERSION.to_le_bytes())?;
            w.write_all(&(self.n_max as u64).to_le_bytes())?;
            for &dn in &self.d[1..] {
                w.write_all(&dn.to_le_bytes())?;
            }
            for arr in self.prefix_arrays() {
                for &v in arr {
                    w.write_all(&v.to_le_bytes())?;
                }
            }
            w.flush()?;
        }
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    fn prefix_arrays(&self) -> [&Vec<i64>; 5] {
        [
            &self.prefix_d,
            &self.prefix_alt,
            &self.prefix_d2,
            &self.prefix_weighted,
            &self.prefix_alt_weighted,
        ]
    }

    /// Reads a cache file, checking the header, the exact length and the consistency of
    /// every prefix array with the stored counts.
    pub fn read_cache(path: &Path, expected_n_max: Option<usize>) -> Result<Self> {
        let file = File::open(path)?;
        let len = file.metadata()?.len();
        let mut r = BufReader::new(file);
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic).map_err(|_| Error::Cache("truncated header".into()))?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Cache("bad magic".into()));
        }
        let version = read_u32(&mut r)?;
        if version != CACHE_VERSION {
            return Err(Error::Cache(format!("unsupported version {version}")));
        }
        let n_max = read_u64(&mut r)? as usize;
        if n_max == 0 || expected_n_max.is_some_and(|e| e != n_max) {
            return Err(Error::Cache(format!("cached n_max {n_max} does not match request")));
        }
        let expected_len = 20 + 4 * n_max as u64 + 5 * 8 * (n_max as u64 + 1);
        if len != expected_len {
            return Err(Error::Cache(format!("length {len}, expected {expected_len}")));
        }
        let mut d = try_alloc::<u32>(n_max + 1)?;
        d.push(0);
        let mut buf4 = [0u8; 4];
        for _ in 0..n_max {
            r.read_exact(&mut buf4)?;
            d.push(u32::from_le_bytes(buf4));
        }
        let rebuilt = Self::from_counts(n_max, d)?;
        let mut buf8 = [0u8; 8];
        for arr in rebuilt.prefix_arrays() {
            for &v in arr {
                r.read_exact(&mut buf8)?;
                if i64::from_le_bytes(buf8) != v {
                    return Err(Error::Cache("prefix arrays inconsistent with divisor counts".into()));
                }
            }
        }
        if rebuilt.d[1] != 1 {
            return Err(Error::Cache("d(1) != 1".into()));
        }
        Ok(rebuilt)
    }

    /// Loads `path` when it holds a valid table for `n_max`; otherwise sieves and rewrites it.
    pub fn load_or_build(path: &Path, n_max: usize) -> Result<Self> {
        match Self::read_cache(path, Some(n_max)) {
            Ok(t) => Ok(t),
            Err(Error::Cache(_)) | Err(Error::Io(_)) => {
                let t = Self::build(n_max)?;
                t.write_cache(path)?;
                Ok(t)
            }
            Err(e) => Err(e),
        }
    }
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b).map_err(|_| Error::Cache("truncated header".into()))?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b).map_err(|_| Error::Cache("truncated header".into()))?;
    Ok(u64::from_le_bytes(b))
}

fn try_alloc<T>(n: usize) -> Result<Vec<T>> {
    let mut v = Vec::new();
    v.try_reserve_exact(n)
        .map_err(|e| Error::Resource(format!("cannot allocate {n} entries: {e}")))?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_tables() {
        let t = DivisorTable::build(1).unwrap();
        assert_eq!(t.counts(), &[1]);
        assert_eq!(t.prefix_d(1), 1);

        let t = DivisorTable::build(10).unwrap();
        assert_eq!(t.counts(), &[1, 2, 2, 3, 2, 4, 2, 4, 3, 4]);
        assert_eq!(t.prefix_d(10), 27);
        let hyperbola: i64 = (1..=10).map(|m| 10 / m).sum();
        assert_eq!(hyperbola, 27);
    }

    #[test]
    fn zero_n_max_is_rejected() {
        assert!(matches!(DivisorTable::build(0), Err(Error::Argument(_))));
    }

    #[test]
    fn primes_have_two_divisors() {
        let t = DivisorTable::build(1000).unwrap();
        for p in (2..=1000usize).filter(|&n| (2..n).take_while(|k| k * k <= n).all(|k| n % k != 0)) {
            assert_eq!(t.d(p), 2, "p = {p}");
        }
    }

    #[test]
    fn delta_hand_values() {
        let t = DivisorTable::build(40).unwrap();
        let g = EULER_GAMMA;
        assert!((t.delta(1.0).unwrap() - (2.0 - 2.0 * g)).abs() < 1e-15);
        assert!((t.delta(1.0).unwrap() - 0.845_568_670_196_934).abs() < 1e-12);
        assert!((t.delta(2.0).unwrap() - (3.0 - 2.0 * (2f64.ln() + 2.0 * g - 1.0))).abs() < 1e-14);
        assert!((t.delta(2.0).unwrap() - 1.304_843_0).abs() < 1e-7);
        assert!((t.delta(10.0).unwrap() - 2.429_835_772).abs() < 1e-9);
        // right-continuity: the jump at 4 belongs to x = 4
        assert_eq!(t.prefix_d(4), 8);
        assert!((t.delta(3.999_999).unwrap() - t.delta(4.0).unwrap() + 3.0).abs() < 1e-4);
    }

    #[test]
    fn delta_star_at_one() {
        let t = DivisorTable::build(40).unwrap();
        let comb = t.delta_star(1.0, DeltaStarForm::Combination).unwrap();
        let alt = t.delta_star(1.0, DeltaStarForm::Alternating).unwrap();
        // ½(−1 + 2 − 2 + 3) − (2γ − 1)
        let hand = 1.0 - (2.0 * EULER_GAMMA - 1.0);
        assert!((alt - hand).abs() < 1e-15);
        assert!((comb - alt).abs() < 1e-14);
        assert!((alt - 0.845_568_7).abs() < 1e-7);
    }

    #[test]
    fn range_errors() {
        let t = DivisorTable::build(100).unwrap();
        assert!(matches!(t.delta(100.5), Err(Error::OutOfRange { .. })));
        assert!(matches!(t.delta_star(25.1, DeltaStarForm::Alternating), Err(Error::OutOfRange { .. })));
        assert!(matches!(t.delta_star(25.1, DeltaStarForm::Combination), Err(Error::OutOfRange { .. })));
        assert!(matches!(t.integral_delta_star(26.0), Err(Error::OutOfRange { .. })));
        assert!(matches!(t.d2_weighted_sum(10.0, -0.5), Err(Error::Argument(_))));
        assert!(t.delta(-1.0).is_err());
    }

    #[test]
    fn integrals_vanish_at_zero() {
        let t = DivisorTable::build(100).unwrap();
        assert_eq!(t.integral_delta(0.0).unwrap(), 0.0);
        assert_eq!(t.integral_delta_star(0.0).unwrap(), 0.0);
        assert!(t.integral_delta(1e-9).unwrap().abs() < 1e-15);
    }

    #[test]
    fn d2_small_sums() {
        let t = DivisorTable::build(100).unwrap();
        assert_eq!(t.d2_weighted_sum(4.0, 0.0).unwrap(), 18.0);
        assert_eq!(t.d2_weighted_sum(1.0, 0.7).unwrap(), 1.0);
        let direct: f64 = (1..=50).map(|n| (t.d(n) as f64).powi(2) * (n as f64).powf(1.5)).sum();
        assert!((t.d2_weighted_sum(50.9, 1.5).unwrap() - direct).abs() < 1e-9 * direct);
    }

    #[test]
    fn cache_roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("div.bin");
        let t = DivisorTable::build(500).unwrap();
        t.write_cache(&path).unwrap();
        assert_eq!(DivisorTable::read_cache(&path, Some(500)).unwrap(), t);
        assert!(matches!(DivisorTable::read_cache(&path, Some(400)), Err(Error::Cache(_))));

        let mut bytes = std::fs::read(&path).unwrap();
        bytes[0] = b'X';
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(DivisorTable::read_cache(&path, None), Err(Error::Cache(_))));
        // load_or_build silently repairs
        assert_eq!(DivisorTable::load_or_build(&path, 500).unwrap(), t);
        assert!(DivisorTable::read_cache(&path, Some(500)).is_ok());

        let mut bytes = std::fs::read(&path).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 1;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(DivisorTable::read_cache(&path, None), Err(Error::Cache(_))));
    }
}
