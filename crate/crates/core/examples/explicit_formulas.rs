//! Integrated Atkinson and Voronoi formulas, the truncated Voronoi expansion and the R series,
//! each next to its exact counterpart.
//!
//! cargo run --release --example explicit_formulas

use divzeta::explicit::{
    default_voronoi_cut, integral_delta_voronoi, integral_e_atkinson, r_series, r_series_mass_fraction,
    truncated_voronoi_delta_star, AtkinsonParams,
};
use divzeta::{CriticalLineGrid, DeltaStarForm, DivisorTable, HybridErrorTerms};

fn main() -> divzeta::Result<()> {
    let p = AtkinsonParams::compute()?;
    println!("c0 = {:.12}, a3 = {:.12} (fitted {:.8})", p.c0, p.a3, p.a3_fitted);
    println!("b1 = {:.10}, b2 = {:.10}, a5 = {:.10}, a7 = {:.8}", p.b1, p.b2, p.a5, p.a7);

    let grid = CriticalLineGrid::build(2000.0, 1e-10)?;
    let table = DivisorTable::build(4_000_000)?;
    println!("\nintegrated Atkinson formula");
    for t in [100.0, 500.0, 2000.0] {
        let v = integral_e_atkinson(t, &table, None)?;
        let exact = grid.integral_e(t)?;
        println!("  T = {t:>6}: {v:>12.5} vs {exact:>12.5}, gap / T^1/4 = {:.4}", (v - exact).abs() / t.powf(0.25));
    }

    println!("\nintegrated Voronoi series for int Delta*");
    for t in [100.0, 1000.0, 2000.0] {
        let v = integral_delta_voronoi(t, &table, default_voronoi_cut(t))?;
        let exact = table.integral_delta_star(t)?;
        println!(
            "  T = {t:>6}: {:>10.5} vs {exact:>10.5}, n_cut = {}, tail bound {:.3}",
            v.value, v.n_cut, v.tail_bound
        );
    }

    println!("\ntruncated Voronoi expansion of Delta*(x), N = 1000");
    for x in [1500.3, 1800.7, 4321.1] {
        let v = truncated_voronoi_delta_star(x, 1000, &table)?;
        println!("  x = {x:>7}: {:>9.5} vs {:>9.5}", v.value, table.delta_star(x, DeltaStarForm::Alternating)?);
    }

    let terms = HybridErrorTerms::new(&grid, &table);
    println!("\nR series");
    for t in [200.0, 1000.0, 2000.0] {
        println!("  T = {t:>6}: series {:>10.4}, R {:>10.4}", r_series(t, &table)?, terms.r_term(t)?);
    }
    let c = 2000f64.cbrt();
    println!("  mass on [T^1/3/2, 2T^1/3] at T = 2000: {:.3}", r_series_mass_fraction(2000.0, &table, c / 2.0, 2.0 * c)?);
    Ok(())
}
