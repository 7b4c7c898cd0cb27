//! Sieve d(n) and evaluate Δ, Δ* and their exact integrals.
//!
//! cargo run --release --example divisor_table

use divzeta::divisor::main_term;
use divzeta::verify::hyperbola_divisor_sum;
use divzeta::{DeltaStarForm, DivisorTable};

fn main() -> divzeta::Result<()> {
    let table = DivisorTable::build(1_000_000)?;
    println!("d(1..12) = {:?}", (1..=12).map(|n| table.d(n)).collect::<Vec<_>>());
    println!("D(1e6) = {} (hyperbola method: {})", table.prefix_d(1_000_000), hyperbola_divisor_sum(1_000_000));

    println!("\n{:>10} {:>14} {:>12} {:>12} {:>12}", "x", "x(log x+2g-1)", "Delta", "Delta*", "Delta* comb");
    for x in [10.5, 100.25, 1234.5, 99_999.9, 249_999.0] {
        println!(
            "{x:>10} {:>14.4} {:>12.5} {:>12.5} {:>12.5}",
            main_term(x),
            table.delta(x)?,
            table.delta_star(x, DeltaStarForm::Alternating)?,
            table.delta_star(x, DeltaStarForm::Combination)?
        );
    }

    println!("\n{:>8} {:>14} {:>14} {:>12}", "T", "int Delta", "int Delta*", "H(T)/T^3/4");
    for t in [1e2, 1e3, 1e4, 1e5] {
        println!(
            "{t:>8} {:>14.5} {:>14.5} {:>12.5}",
            table.integral_delta(t)?,
            table.integral_delta_star(t)?,
            table.h_term(t)? / t.powf(0.75)
        );
    }
    println!("\nsum of d(n)^2 over n <= 1e6: {}", table.d2_weighted_sum(1e6, 0.0)?);
    Ok(())
}
