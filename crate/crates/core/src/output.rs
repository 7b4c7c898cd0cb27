//! Result persistence: provenance headers, atomic file writes, CSV tables and SVG line
//! charts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The parameters that determine an output, keyed by flag name. Output paths and thread
/// counts are deliberately left out so they do not change the hash.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub config_hash: String,
}

impl Provenance {
    pub fn new(command: &str, config: BTreeMap<String, String>) -> Self {
        let mut h = Sha256::new();
        h.update(format!("{TOOL} {VERSION}\n{command}\n"));
        for (k, v) in &config {
            h.update(format!("{k}={v}\n"));
        }
        Self {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            command: command.to_string(),
            config,
            config_hash: hex::encode(h.finalize()),
        }
    }

    /// `#`-prefixed header lines for CSV files.
    pub fn csv_header(&self) -> String {
        let mut out = format!("# {} {} {}\n# config_hash {}\n", self.tool, self.version, self.command, self.config_hash);
        for (k, v) in &self.config {
            let _ = writeln!(out, "# {k}={v}");
        }
        out
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory and a rename,
/// or to standard output when `path` is `-`.
pub fn write_atomic(path: &Path, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    if path.as_os_str() == "-" {
        stdout.write_all(bytes)?;
        return Ok(());
    }
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// A CSV table with a provenance header. Numbers use the shortest round-trip form.
pub struct CsvTable {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_f64(&mut self, row: &[f64]) {
        self.push(row.iter().map(|v| v.to_string()).collect());
    }

    /// Column `name` parsed back as numbers, for charts.
    pub fn column(&self, name: &str) -> Vec<f64> {
        let Some(i) = self.columns.iter().position(|c| *c == name) else {
            return Vec::new();
        };
        self.rows.iter().filter_map(|r| r[i].parse().ok()).collect()
    }

    pub fn render(&self, provenance: &Provenance) -> String {
        let mut out = provenance.csv_header();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }
}

/// Pretty JSON of `{"provenance": …, "result": …}`.
pub fn json_document<T: Serialize>(provenance: &Provenance, result: &T) -> Result<String> {
    #[derive(Serialize)]
    struct Doc<'a, T> {
        provenance: &'a Provenance,
        result: &'a T,
    }
    let mut s = serde_json::to_string_pretty(&Doc { provenance, result }).map_err(std::io::Error::from)?;
    s.push('\n');
    Ok(s)
}

const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// A self-contained SVG line chart of one or more `(x, y)` series on shared axes.
pub fn svg_line_chart(title: &str, x_label: &str, series: &[(&str, Vec<(f64, f64)>)]) -> String {
    let (w, h, m) = (800.0, 480.0, 60.0);
    let pts = series.iter().flat_map(|s| s.1.iter()).filter(|p| p.0.is_finite() && p.1.is_finite());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if !(x1 > x0) {
        x1 = x0 + 1.0;
    }
    if !(y1 > y0) {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| m + (x - x0) / (x1 - x0) * (w - 2.0 * m);
    let sy = |y: f64| h - m - (y - y0) / (y1 - y0) * (h - 2.0 * m);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#, w / 2.0, escape(title));
    let _ = writeln!(
        out,
        r##"<rect x="{m}" y="{m}" width="{}" height="{}" fill="none" stroke="#444"/>"##,
        w - 2.0 * m,
        h - 2.0 * m
    );
    if y0 < 0.0 && y1 > 0.0 {
        let z = sy(0.0);
        let _ = writeln!(out, r##"<line x1="{m}" y1="{z:.2}" x2="{}" y2="{z:.2}" stroke="#bbb"/>"##, w - m);
    }
    let _ = writeln!(out, r#"<text x="{m}" y="{}">{}</text>"#, h - m + 18.0, fmt_tick(x0));
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, w - m, h - m + 18.0, fmt_tick(x1));
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, w / 2.0, h - 14.0, escape(x_label));
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, m - 6.0, h - m, fmt_tick(y0));
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, m - 6.0, m + 10.0, fmt_tick(y1));
    for (i, (name, data)) in series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let path: Vec<String> = data
            .iter()
            .filter(|p| p.0.is_finite() && p.1.is_finite())
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{colour}" stroke-width="1.2" points="{}"/>"#,
            path.join(" ")
        );
        let ly = m + 16.0 + 16.0 * i as f64;
        let _ = writeln!(out, r#"<text x="{}" y="{ly}" fill="{colour}">{}</text>"#, m + 8.0, escape(name));
    }
    out.push_str("</svg>\n");
    out
}

fn fmt_tick(v: f64) -> String {
    if v != 0.0 && (v.abs() >= 1e5 || v.abs() < 1e-2) {
        format!("{v:.3e}")
    } else {
        format!("{v:.3}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
