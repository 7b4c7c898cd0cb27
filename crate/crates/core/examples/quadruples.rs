//! Near-coincident sums of k-th roots in (N, 2N] against N^ε(N⁴δ + N²).
//!
//! cargo run --release --example quadruples

use divzeta::quadruples::{count_quadruples_fast, count_quadruples_naive, diagonal_count, exact_sqrt_coincidences};

fn main() -> divzeta::Result<()> {
    let n = 50;
    let tiny = count_quadruples_naive(n, 2, 1e-12)?;
    println!(
        "N = {n}, k = 2, delta = 1e-12: {} quadruples, diagonal {}, exact coincidences {}",
        tiny.count,
        diagonal_count(n),
        exact_sqrt_coincidences(n)
    );
    println!("\n{:>6} {:>3} {:>10} {:>12} {:>14} {:>8}", "N", "k", "delta", "count", "bound", "ratio");
    for (n, k) in [(200, 2), (200, 3), (1000, 2), (2000, 3)] {
        for delta in [1.0 / (n * n) as f64, 1e-4, 1e-2] {
            let r = count_quadruples_fast(n, k, delta)?;
            println!("{n:>6} {k:>3} {delta:>10.2e} {:>12} {:>14.4e} {:>8.4}", r.count, r.bound_value, r.ratio);
        }
    }
    Ok(())
}
