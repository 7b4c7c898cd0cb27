//! Second and fourth moments of R and E*, cubic-in-log fits, and the running-maximum
//! growth exponent of |R|, including the exponent a square-root conjecture would predict.
//!
//! cargo run --release --example moments

use divzeta::moments::{fit_log_cubic, growth_exponent, log_spaced, MomentKind, UniformSamples};
use divzeta::{CriticalLineGrid, DivisorTable, HybridErrorTerms};

fn main() -> divzeta::Result<()> {
    let t_max = 3000.0;
    let grid = CriticalLineGrid::build(t_max, 1e-10)?;
    let table = DivisorTable::build(2000)?;
    let terms = HybridErrorTerms::new(&grid, &table);

    let r = UniformSamples::sample(MomentKind::R, t_max, 0.05, &terms)?;
    let e = UniformSamples::sample(MomentKind::EStar, t_max, 0.05, &terms)?;
    let ts = log_spaced(30.0, t_max, 24);
    for (name, s, p, alpha, beta) in [("R^2", &r, 2, 2.0, 11.0 / 6.0), ("E*^2", &e, 2, 4.0 / 3.0, 7.0 / 6.0)] {
        let samples: Vec<(f64, f64)> = ts.iter().map(|&t| Ok((t, s.moment(p, t)?.value))).collect::<divzeta::Result<_>>()?;
        let fit = fit_log_cubic(&samples, alpha, beta)?;
        println!(
            "{name}: coeffs {:.4?}, residual {:.4}, condition {:.2e}",
            fit.coeffs,
            fit.residual_norm,
            fit.condition_number
        );
    }
    for t in [100.0, 1000.0, t_max] {
        println!("int R^4 up to {t:>6}: {:.4e} (/T^3.05 = {:.4})", r.moment(4, t)?.value, r.moment(4, t)?.value / t.powf(3.05));
    }

    let g = growth_exponent(&r, 10.0, t_max)?;
    println!("\nrunning max of |R| at decades: {:?}", g.checkpoints);
    println!("growth exponent {:.4}; trivial bound 0.75, proved 0.6502, conjectured 0.5", g.exponent);
    // if |R| ≍ T^{1/2} log^{3/2} T held, the slope over the same checkpoints would be:
    let conj: Vec<(f64, f64)> = g.checkpoints.iter().map(|&(t, _)| (t, t.sqrt() * t.ln().powf(1.5))).collect();
    println!("slope of T^1/2 log^3/2 T over the same window: {:.4}", divzeta::moments::log_log_slope(&conj)?);
    Ok(())
}
