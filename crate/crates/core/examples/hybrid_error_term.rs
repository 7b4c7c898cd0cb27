//! E*(t) = E(t) − 2πΔ*(t/2π), its integral R(T), and the short-interval inequalities.
//!
//! cargo run --release --example hybrid_error_term

use divzeta::error_terms::{lemma3_check, LEMMA3_DEFAULT_C};
use divzeta::moments::log_spaced;
use divzeta::oracle::nested_r;
use divzeta::{CriticalLineGrid, DivisorTable, HybridErrorTerms};

fn main() -> divzeta::Result<()> {
    let t_max = 3000.0;
    let grid = CriticalLineGrid::build(t_max, 1e-10)?;
    let table = DivisorTable::build((4.0 * t_max / std::f64::consts::TAU).ceil() as usize + 1)?;
    let terms = HybridErrorTerms::new(&grid, &table);

    let ts = log_spaced(10.0, t_max, 8);
    let nested = nested_r(&terms, &ts, 0.25)?;
    println!("{:>9} {:>11} {:>11} {:>11} {:>11} {:>11}", "T", "E", "2pi D*", "E*", "R", "R nested");
    for (&t, rn) in ts.iter().zip(nested) {
        println!(
            "{t:>9.2} {:>11.5} {:>11.5} {:>11.5} {:>11.5} {rn:>11.5}",
            terms.e(t)?,
            terms.scaled_delta_star(t)?,
            terms.e_star(t)?,
            terms.r_term(t)?
        );
    }

    println!("\nshort-interval inequalities, C = {LEMMA3_DEFAULT_C}");
    for (t, h) in [(500.0, 5.0), (1000.0, 10.0), (2500.0, 40.0)] {
        let r = lemma3_check(&terms, t, h, LEMMA3_DEFAULT_C)?;
        println!(
            "T = {t:>6}, H = {h:>4}: E* = {:>9.4}, slack+ = {:>9.3}, slack- = {:>9.3}, holds = {}",
            r.e_star, r.slack_plus, r.slack_minus, r.holds
        );
    }
    Ok(())
}
