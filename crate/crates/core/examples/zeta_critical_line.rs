//! |ζ(½+it)|², Hardy's Z, the first zero, and the mean-square error term E(T).
//!
//! cargo run --release --example zeta_critical_line

use divzeta::oracle::first_zero_bisect;
use divzeta::zeta::{hardy_z_reference, riemann_siegel_z};
use divzeta::{zeta_half_sq, CriticalLineGrid, ZetaMethod};

fn main() -> divzeta::Result<()> {
    println!("{:>8} {:>16} {:>16} {:>12}", "t", "|zeta|^2 (EM)", "|zeta|^2 (RS)", "Z(t)");
    for t in [40.0, 100.0, 1000.0, 5000.0] {
        println!(
            "{t:>8} {:>16.10} {:>16.10} {:>12.7}",
            zeta_half_sq(t, ZetaMethod::EulerMaclaurin)?,
            zeta_half_sq(t, ZetaMethod::RiemannSiegel)?,
            riemann_siegel_z(t)?
        );
    }
    println!("Z(20) by Euler-Maclaurin: {:.10}", hardy_z_reference(20.0));
    println!("first zero: {:.9}", first_zero_bisect(14.0, 14.3, 1e-10)?);

    let grid = CriticalLineGrid::build(2000.0, 1e-10)?;
    println!("\ngrid up to {} with {} nodes", grid.t_max(), grid.nodes().len());
    println!("{:>8} {:>16} {:>12} {:>14} {:>12}", "T", "int |zeta|^2", "E(T)", "int E", "G(T)");
    for t in [50.0, 200.0, 1000.0, 2000.0] {
        println!(
            "{t:>8} {:>16.6} {:>12.6} {:>14.5} {:>12.5}",
            grid.m0(t)?,
            grid.e(t)?,
            grid.integral_e(t)?,
            grid.g_term(t)?
        );
    }
    Ok(())
}
