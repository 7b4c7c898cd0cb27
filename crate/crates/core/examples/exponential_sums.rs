//! Alternating divisor exponential sums against their exponent-pair comparators.
//!
//! cargo run --release --example exponential_sums

use std::f64::consts::PI;

use divzeta::expsum::{kolesnik_comparator, kolesnik_sum, lemma4_doubling_profile, PhasePolynomial};
use divzeta::DivisorTable;

fn main() -> divzeta::Result<()> {
    let table = DivisorTable::build(1 << 17)?;
    let t = 1e6;
    let phase = PhasePolynomial::new(vec![(8.0 * PI).sqrt(), 0.5])?;
    println!("T = {t:e}, pair (1/9, 13/18)");
    println!("{:>8} {:>12} {:>14} {:>10}", "K", "|sum|", "comparator", "ratio");
    for row in lemma4_doubling_profile(t, 16, 12, &phase, (1.0 / 9.0, 13.0 / 18.0), &table)? {
        println!("{:>8} {:>12.4} {:>14.4} {:>10.5}", row.k, row.modulus, row.comparator, row.ratio);
    }

    println!("\nsecond-derivative sum, c = sqrt(8 pi), d = 1");
    for k in [10, 100, 1000] {
        let s = kolesnik_sum(t, k, 2 * k, (8.0 * PI).sqrt(), 1.0, &table)?;
        println!(
            "K = {k:>5}: |sum| = {:>9.4}, comparator {:>9.4}, flagged {}",
            s.value.norm(),
            kolesnik_comparator(t, k),
            s.flagged
        );
    }
    Ok(())
}
