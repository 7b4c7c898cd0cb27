//! The full verification report with the default sizes (n ≤ 10⁷, T ≤ 10⁴). The criteria
//! are stated at fixed T up to 10⁴, so smaller sources report range errors.
//!
//! cargo run --release --example acceptance_report

use divzeta::verify::{verify_all, Sources, VerifyConfig};
use divzeta::{CriticalLineGrid, DivisorTable};

fn main() -> divzeta::Result<()> {
    let cfg = VerifyConfig::default();
    let table = DivisorTable::build(cfg.n_max)?;
    let grid = CriticalLineGrid::build(cfg.t_max, cfg.tol)?;
    let report = verify_all(&Sources { table: &table, grid: &grid }, &cfg)?;
    for line in report.summary_lines() {
        println!("{line}");
    }
    println!();
    print!("{}", report.render());
    Ok(())
}
