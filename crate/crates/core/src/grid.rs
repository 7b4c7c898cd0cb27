//! Cached `|ζ(½+it)|²` samples with cumulative moment integrals.
//!
//! The line `[0, t_max]` is cut into panels of width `min(0.25, 0.5/log(2+t))`, which
//! tracks the shrinking gap between consecutive zeros. Each panel is integrated by
//! 8-node Gauss–Legendre on its two halves and checked against the single-panel rule;
//! panels failing the check are bisected.
//!
//! `m0(t) = ∫₀^t |ζ(½+iu)|² du` and `m1(t) = ∫₀^t u|ζ(½+iu)|² du` are stored at panel
//! boundaries. Values between boundaries integrate the remaining partial panel on demand.

use std::f64::consts::{PI, TAU};
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::divisor::EULER_GAMMA;
use crate::error::{Error, Result};
use crate::quad::gl8_points;
use crate::sum::CompensatedSum;
use crate::zeta::{zeta_half_sq, ZetaMethod, RS_MIN_T};

/// Largest supported `t_max`.
pub const MAX_T: f64 = 1.0e6;

/// Relative rounding noise of one `|ζ(½+it)|²` evaluation. Phases of size `t log t`
/// lose about `t log t · 2⁻⁵³` absolute accuracy.
fn eval_noise(t: f64) -> f64 {
    4e-15 * (10.0 + t) * (2.0 + t).ln()
}

const CACHE_MAGIC: &[u8; 8] = b"DZGRID\0\0";
const CACHE_VERSION: u32 = 1;

/// Base panel width at height `t`.
pub fn panel_width(t: f64) -> f64 {
    0.25f64.min(0.5 / (2.0 + t).ln())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridNode {
    pub t: f64,
    /// `|ζ(½+it)|²`
    pub value: f64,
    pub m0: f64,
    pub m1: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridOptions {
    /// Multiplier on the base panel width (0.5 halves every step).
    pub width_scale: f64,
    /// Maximum number of bisections of a base panel.
    pub max_depth: u32,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self {
            width_scale: 1.0,
            max_depth: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalLineGrid {
    t_max: f64,
    tol: f64,
    nodes: Vec<GridNode>,
}

fn integrand(t: f64) -> f64 {
    // arguments are validated by the caller; `t >= 0` always holds here
    zeta_half_sq(t, ZetaMethod::Auto).expect("t is nonnegative")
}

fn gl8_moments(a: f64, b: f64) -> (f64, f64) {
    let mut i0 = 0.0;
    let mut i1 = 0.0;
    for (x, w) in gl8_points(a, b) {
        let v = w * integrand(x);
        i0 += v;
        i1 += v * x;
    }
    (i0, i1)
}

/// Leaves `(end, ∫|ζ|², ∫t|ζ|²)` covering `[a, b]`.
fn integrate_panel(a: f64, b: f64, tol: f64, depth: u32, max_depth: u32, out: &mut Vec<(f64, f64, f64)>) -> Result<()> {
    let m = 0.5 * (a + b);
    let whole = gl8_moments(a, b);
    let left = gl8_moments(a, m);
    let right = gl8_moments(m, b);
    let refined = left.0 + right.0;
    // the second term is the rounding floor of the evaluator, whose phases reach ~t
    if (whole.0 - refined).abs() <= tol * (b - a) + eval_noise(b) * refined.abs() {
        out.push((b, refined, left.1 + right.1));
        return Ok(());
    }
    if depth >= max_depth {
        return Err(Error::Accuracy {
            context: format!("critical-line panel [{a}, {b}]"),
            coarse: whole.0,
            refined,
        });
    }
    integrate_panel(a, m, tol, depth + 1, max_depth, out)?;
    integrate_panel(m, b, tol, depth + 1, max_depth, out)
}

impl CriticalLineGrid {
    pub fn build(t_max: f64, tol: f64) -> Result<Self> {
        Self::build_with(t_max, tol, GridOptions::default())
    }

    pub fn build_with(t_max: f64, tol: f64, options: GridOptions) -> Result<Self> {
        if !(t_max >= 0.0) || !t_max.is_finite() {
            return Err(Error::arg(format!("t_max must be finite and nonnegative, got {t_max}")));
        }
        if t_max > MAX_T {
            return Err(Error::range("t_max", t_max, MAX_T));
        }
        if !(tol > 0.0) {
            return Err(Error::arg(format!("tolerance must be positive, got {tol}")));
        }
        if !(options.width_scale > 0.0) {
            return Err(Error::arg("panel width scale must be positive"));
        }

        // The integrand has tiny jumps where the evaluator changes method (RS_MIN_T) and
        // where the Riemann–Siegel main sum gains a term (t = 2πn²). Panels end there.
        let mut breaks = vec![RS_MIN_T];
        breaks.extend((1..).map(|n: u32| TAU * f64::from(n * n)).skip_while(|&b| b <= RS_MIN_T).take_while(|&b| b < t_max));
        let mut breaks = breaks.into_iter().filter(|&b| b < t_max).peekable();

        let mut bounds = vec![0.0];
        let mut t = 0.0;
        while t < t_max {
            let mut next = (t + options.width_scale * panel_width(t)).min(t_max);
            // snap a sliver at the end onto t_max
            if t_max - next < 1e-9 {
                next = t_max;
            }
            if let Some(&b) = breaks.peek() {
                if next >= b {
                    next = b;
                    breaks.next();
                }
            }
            bounds.push(next);
            t = next;
        }

        let leaves: Vec<Vec<(f64, f64, f64)>> = bounds
            .par_windows(2)
            .map(|w| {
                let mut out = Vec::with_capacity(1);
                integrate_panel(w[0], w[1], tol, 0, options.max_depth, &mut out).map(|_| out)
            })
            .collect::<Result<_>>()?;

        let ends: Vec<(f64, f64, f64)> = leaves.into_iter().flatten().collect();
        let values: Vec<f64> = ends.par_iter().map(|&(b, _, _)| integrand(b)).collect();

        let mut nodes = Vec::with_capacity(ends.len() + 1);
        nodes.push(GridNode {
            t: 0.0,
            value: integrand(0.0),
            m0: 0.0,
            m1: 0.0,
        });
        let mut m0 = CompensatedSum::new();
        let mut m1 = CompensatedSum::new();
        for (&(b, i0, i1), &value) in ends.iter().zip(values.iter()) {
            m0.add(i0);
            m1.add(i1);
            nodes.push(GridNode {
                t: b,
                value,
                m0: m0.value(),
                m1: m1.value(),
            });
        }
        Ok(Self { t_max, tol, nodes })
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// Nominal absolute tolerance per unit length.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn nodes(&self) -> &[GridNode] {
        &self.nodes
    }

    fn check(&self, t: f64) -> Result<()> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::arg(format!("T must be finite and nonnegative, got {t}")));
        }
        if t > self.t_max {
            return Err(Error::range("T", t, self.t_max));
        }
        Ok(())
    }

    /// `(m0(T), m1(T))`.
    pub fn moments(&self, t: f64) -> Result<(f64, f64)> {
        self.check(t)?;
        let idx = self.nodes.partition_point(|n| n.t <= t) - 1;
        let node = &self.nodes[idx];
        if t == node.t {
            return Ok((node.m0, node.m1));
        }
        let (i0, i1) = gl8_moments(node.t, t);
        Ok((node.m0 + i0, node.m1 + i1))
    }

    pub fn m0(&self, t: f64) -> Result<f64> {
        self.moments(t).map(|m| m.0)
    }

    pub fn m1(&self, t: f64) -> Result<f64> {
        self.moments(t).map(|m| m.1)
    }

    /// `E(T) = ∫₀^T |ζ(½+it)|² dt − T(log(T/2π) + 2γ − 1)`.
    pub fn e(&self, t: f64) -> Result<f64> {
        let m0 = self.m0(t)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(m0 - t * ((t / TAU).ln() + 2.0 * EULER_GAMMA - 1.0))
    }

    /// `∫₀^T E(t) dt = T·m0(T) − m1(T) − [T²/2·log(T/2π) − T²/4 + (2γ−1)T²/2]`.
    pub fn integral_e(&self, t: f64) -> Result<f64> {
        let (m0, m1) = self.moments(t)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        let t2 = t * t;
        let main = 0.5 * t2 * (t / TAU).ln() - 0.25 * t2 + (2.0 * EULER_GAMMA - 1.0) * 0.5 * t2;
        Ok(t * m0 - m1 - main)
    }

    /// `G(T) = ∫₀^T E(t) dt − πT`.
    pub fn g_term(&self, t: f64) -> Result<f64> {
        Ok(self.integral_e(t)? - PI * t)
    }

    pub fn write_cache(&self, path: &Path) -> Result<()> {
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        std::fs::create_dir_all(dir)?;
        let tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let mut w = BufWriter::new(tmp.as_file());
            w.write_all(CACHE_MAGIC)?;
            w.write_all(&CACHE_VERSION.to_le_bytes())?;
            w.write_all(&self.t_max.to_le_bytes())?;
            w.write_all(&self.tol.to_le_bytes())?;
            w.write_all(&(self.nodes.len() as u64).to_le_bytes())?;
            for n in &self.nodes {
                for v in [n.t, n.value, n.m0, n.m1] {
                    w.write_all(&v.to_le_bytes())?;
                }
            }
            w.flush()?;
        }
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    /// Reads a grid cache, rejecting bad headers, parameter mismatches and records that
    /// violate monotonicity or positivity.
    pub fn read_cache(path: &Path, expected: Option<(f64, f64)>) -> Result<Self> {
        let file = File::open(path)?;
        let len = file.metadata()?.len();
        let mut r = BufReader::new(file);
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic).map_err(|_| Error::Cache("truncated header".into()))?;
        if &magic != CACHE_MAGIC {
            return Err(Error::Cache("bad magic".into()));
        }
        let mut b4 = [0u8; 4];
        let mut b8 = [0u8; 8];
        r.read_exact(&mut b4).map_err(|_| Error::Cache("truncated header".into()))?;
        if u32::from_le_bytes(b4) != CACHE_VERSION {
            return Err(Error::Cache("unsupported version".into()));
        }
        let mut next_f64 = |r: &mut BufReader<File>| -> Result<f64> {
            r.read_exact(&mut b8).map_err(|_| Error::Cache("truncated file".into()))?;
            Ok(f64::from_le_bytes(b8))
        };
        let t_max = next_f64(&mut r)?;
        let tol = next_f64(&mut r)?;
        if let Some((et, etol)) = expected {
            if t_max.to_bits() != et.to_bits() || tol.to_bits() != etol.to_bits() {
                return Err(Error::Cache(format!("cached (t_max, tol) = ({t_max}, {tol}) does not match request")));
            }
        }
        let count = next_f64(&mut r)?.to_bits();
        if count == 0 || len != 36 + 32 * count {
            return Err(Error::Cache(format!("length {len} inconsistent with {count} records")));
        }
        let mut nodes = Vec::with_capacity(count as usize);
        for _ in 0..count {
            let node = GridNode {
                t: next_f64(&mut r)?,
                value: next_f64(&mut r)?,
                m0: next_f64(&mut r)?,
                m1: next_f64(&mut r)?,
            };
            if let Some(prev) = nodes.last() {
                let prev: &GridNode = prev;
                if !(node.t > prev.t && node.m0 >= prev.m0 && node.m1 >= prev.m1) {
                    return Err(Error::Cache("records are not monotone".into()));
                }
            }
            if !(node.value >= 0.0) {
                return Err(Error::Cache("negative sample".into()));
            }
            nodes.push(node);
        }
        if nodes[0].t != 0.0 || nodes.last().map(|n| n.t) != Some(t_max) {
            return Err(Error::Cache("records do not span [0, t_max]".into()));
        }
        Ok(Self { t_max, tol, nodes })
    }

    pub fn load_or_build(path: &Path, t_max: f64, tol: f64) -> Result<Self> {
        match Self::read_cache(path, Some((t_max, tol))) {
            Ok(g) => Ok(g),
            Err(Error::Cache(_)) | Err(Error::Io(_)) => {
                let g = Self::build(t_max, tol)?;
                g.write_cache(path)?;
                Ok(g)
            }
            Err(e) => Err(e),
        }
    }
}
