//! Writes E, 2πΔ*(t/2π), E* and R as CSV plus two SVG charts.
//!
//! cargo run --release --example plot_data [OUT_DIR]

use std::collections::BTreeMap;
use std::path::PathBuf;

use divzeta::output::{svg_line_chart, write_atomic, CsvTable, Provenance};
use divzeta::{CriticalLineGrid, DivisorTable, HybridErrorTerms};

fn main() -> divzeta::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("divzeta-plots"));
    let t_max = 1000.0;
    let grid = CriticalLineGrid::build(t_max, 1e-10)?;
    let table = DivisorTable::build(700)?;
    let terms = HybridErrorTerms::new(&grid, &table);

    let mut csv = CsvTable::new(&["T", "E", "scaled_delta_star", "E_star", "R"]);
    for i in 1..=4000 {
        let t = t_max * i as f64 / 4000.0;
        csv.push_f64(&[t, terms.e(t)?, terms.scaled_delta_star(t)?, terms.e_star(t)?, terms.r_term(t)?]);
    }
    let config = BTreeMap::from([("tmax".to_string(), t_max.to_string()), ("samples".to_string(), "4000".to_string())]);
    let prov = Provenance::new("plot_data", config);
    let mut stdout = std::io::stdout();
    write_atomic(&dir.join("error_terms.csv"), csv.render(&prov).as_bytes(), &mut stdout)?;

    let t = csv.column("T");
    let pairs = |name: &str| t.iter().copied().zip(csv.column(name)).collect::<Vec<_>>();
    let local = svg_line_chart("E and 2pi Delta*(t/2pi)", "t", &[("E", pairs("E")), ("2pi Delta*", pairs("scaled_delta_star"))]);
    write_atomic(&dir.join("local.svg"), local.as_bytes(), &mut stdout)?;
    let global = svg_line_chart("E* and R", "T", &[("E*", pairs("E_star")), ("R", pairs("R"))]);
    write_atomic(&dir.join("global.svg"), global.as_bytes(), &mut stdout)?;
    println!("wrote error_terms.csv, local.svg, global.svg to {}", dir.display());
    Ok(())
}
