mod common;

use divzeta::explicit::e_from_atkinson;
use divzeta::grid::GridOptions;
use divzeta::quad::{adaptive_gk, gl8};
use divzeta::zeta::{riemann_siegel_z, zeta_half_sq};
use divzeta::{CriticalLineGrid, ZetaMethod};

fn panels(f: impl Fn(f64) -> f64, a: f64, b: f64, width: f64) -> f64 {
    let n = ((b - a) / width).ceil() as usize;
    let h = (b - a) / n as f64;
    (0..n).map(|i| gl8(&f, a + i as f64 * h, a + (i + 1) as f64 * h)).sum()
}

#[test]
fn fubini_identity() {
    // ∫₀^T m₀(t) dt = T·m₀(T) − m₁(T)
    let g = common::grid();
    for t in [10.0, 100.0, 1000.0] {
        let lhs = panels(|x| g.m0(x).unwrap(), 0.0, t, 0.05);
        let rhs = t * g.m0(t).unwrap() - g.m1(t).unwrap();
        let rel = (lhs - rhs).abs() / rhs.abs();
        println!("T = {t}: relative gap {rel:.2e}");
        assert!(rel <= 1e-8, "T = {t}: {lhs} vs {rhs}");
    }
}

#[test]
fn first_moment_monotone_and_consistent() {
    let g = common::grid();
    assert!(g.nodes().windows(2).all(|w| w[0].t < w[1].t && w[0].m0 <= w[1].m0 && w[0].m1 <= w[1].m1));
    assert!(g.nodes().iter().all(|n| n.value >= 0.0));
    // spot values of the integrand against the independent evaluator
    for t in [0.5, 20.0, 777.7, 9999.0] {
        let v = zeta_half_sq(t, ZetaMethod::EulerMaclaurin).unwrap();
        let w = zeta_half_sq(t, ZetaMethod::Auto).unwrap();
        assert!((v - w).abs() <= 1e-7 * v.max(1.0), "t = {t}");
    }
    assert!(riemann_siegel_z(10.0).is_err());
}

#[test]
fn refinement_stability() {
    let t = 1000.0;
    let tol = 1e-10;
    let base = CriticalLineGrid::build(t, tol).unwrap();
    let fine = CriticalLineGrid::build_with(
        t,
        tol,
        GridOptions {
            width_scale: 0.5,
            ..GridOptions::default()
        },
    )
    .unwrap();
    for x in [10.0, 123.4, 500.0, 1000.0] {
        let gap = (base.m0(x).unwrap() - fine.m0(x).unwrap()).abs();
        assert!(gap <= 10.0 * tol * x, "m0({x}) moved by {gap:e}");
    }
}

#[test]
fn envelopes_at_top_of_range() {
    let g = common::grid();
    let t = common::T_MAX;
    let e = g.e(t).unwrap().abs() / t.powf(1.0 / 3.0);
    let gt = g.g_term(t).unwrap().abs() / t.powf(0.75);
    println!("|E(1e4)|/T^(1/3) = {e:.4}, |G(1e4)|/T^(3/4) = {gt:.4}");
    assert!(e <= 10.0);
    assert!(gt <= 5.0);
}

#[test]
fn integral_of_e_against_quadrature() {
    let g = common::grid();
    let t = 100.0;
    let q = adaptive_gk(|x| g.e(x).unwrap(), 1e-12, t, 1e-8, 40).unwrap();
    let exact = g.integral_e(t).unwrap();
    assert!((q - exact).abs() <= 1e-4 * exact.abs().max(1.0), "{q} vs {exact}");
}

#[test]
fn atkinson_reconstruction_of_e() {
    let g = common::grid();
    let t = 50.0;
    let direct = g.e(t).unwrap();
    let atk = e_from_atkinson(t, 0.5, common::table()).unwrap();
    let c = (direct - atk).abs() / t.ln().powi(2);
    println!("E(50) = {direct:.6}, from integrated formula {atk:.6}, C = {c:.4}");
    assert!(c <= 10.0);
}

#[test]
fn cache_round_trip_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.bin");
    let g = CriticalLineGrid::load_or_build(&path, 60.0, 1e-9).unwrap();
    let back = CriticalLineGrid::read_cache(&path, Some((60.0, 1e-9))).unwrap();
    assert_eq!(g, back);
    assert!(CriticalLineGrid::read_cache(&path, Some((61.0, 1e-9))).is_err());
    std::fs::write(&path, b"nope").unwrap();
    assert!(CriticalLineGrid::read_cache(&path, None).is_err());
    assert_eq!(CriticalLineGrid::load_or_build(&path, 60.0, 1e-9).unwrap(), g);
}
