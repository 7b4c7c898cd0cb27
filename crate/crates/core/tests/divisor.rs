mod common;

use divzeta::divisor::DeltaStarForm;
use divzeta::moments::{fit_log_cubic, log_spaced};
use divzeta::quad::adaptive_gk;
use divzeta::DivisorTable;

/// `∫₀^T f` for a function smooth between consecutive multiples of `spacing`.
fn piecewise(f: impl Fn(f64) -> f64, t: f64, spacing: f64) -> f64 {
    let mut acc = 0.0;
    let mut a = 0.0;
    while a < t {
        let b = ((a / spacing).floor() + 1.0) * spacing;
        let b = b.min(t);
        // sample strictly inside the piece so the step function is on one branch
        let (lo, hi) = (a, b);
        acc += adaptive_gk(|x| f(x.clamp(lo + 1e-13 * (hi - lo), hi - 1e-13 * (hi - lo))), lo, hi, 1e-10, 40)
            .unwrap();
        a = b;
    }
    acc
}

#[test]
fn tiny_tables_and_hyperbola_identity() {
    let t = DivisorTable::build(1).unwrap();
    assert_eq!((t.d(1), t.prefix_d(1)), (1, 1));
    let t = DivisorTable::build(10).unwrap();
    assert_eq!(t.prefix_d(10), 27);
    assert_eq!((1..=10).map(|m| 10 / m).sum::<usize>() as i64, 27);
    let t = DivisorTable::build(10_000).unwrap();
    for x in 1..=10_000usize {
        let direct: usize = (1..=x).map(|m| x / m).sum();
        assert_eq!(t.prefix_d(x), direct as i64, "x = {x}");
    }
}

#[test]
fn prefix_arrays_match_direct_sums() {
    let t = DivisorTable::build(5000).unwrap();
    let (mut d, mut alt, mut d2) = (0i64, 0i64, 0i64);
    for n in 1..=5000usize {
        let dn = i64::from(t.d(n));
        let direct = (1..=n).filter(|k| n % k == 0).count() as i64;
        assert_eq!(dn, direct);
        d += dn;
        alt += if n % 2 == 0 { dn } else { -dn };
        d2 += dn * dn;
        assert_eq!((t.prefix_d(n), t.prefix_alt(n), t.prefix_d2(n)), (d, alt, d2));
    }
}

#[test]
fn exact_integrals_match_quadrature() {
    let t = common::table();
    for big_t in [10.0, 100.0, 1000.0] {
        let q = piecewise(|x| t.delta(x).unwrap(), big_t, 1.0);
        let exact = t.integral_delta(big_t).unwrap();
        assert!((q - exact).abs() <= 1e-6 * exact.abs().max(1.0), "int delta at {big_t}: {q} vs {exact}");
        let q = piecewise(|x| t.delta_star(x, DeltaStarForm::Alternating).unwrap(), big_t, 0.25);
        let exact = t.integral_delta_star(big_t).unwrap();
        assert!((q - exact).abs() <= 1e-6 * exact.abs().max(1.0), "int delta* at {big_t}: {q} vs {exact}");
    }
}

#[test]
fn scaling_identity() {
    // (1/a)∫₀^{aT} Δ*(x) dx = ∫₀^T Δ*(at) dt
    let t = common::table();
    let big_t = 50.0;
    for a in [2.0, 4.0, 0.5] {
        let lhs = t.integral_delta_star(a * big_t).unwrap() / a;
        let rhs = piecewise(|x| t.delta_star(a * x, DeltaStarForm::Alternating).unwrap(), big_t, 0.25 / a);
        assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs(), "a = {a}: {lhs} vs {rhs}");
    }
}

#[test]
fn h_term_envelope() {
    let t = common::table();
    let big_t = 1e4;
    let k = t.h_term(big_t).unwrap().abs() / big_t.powf(0.75);
    println!("|H(1e4)|/T^(3/4) = {k:.4}");
    assert!(k <= 5.0);
}

#[test]
fn d2_sum_leading_coefficient() {
    // Σ_{n≤x} d²(n) = x P₃(log x) + …, leading coefficient 1/π²
    let t = common::table();
    let samples: Vec<(f64, f64)> = log_spaced(1e3, 1e6, 40)
        .into_iter()
        .map(|x| (x, t.d2_weighted_sum(x, 0.0).unwrap()))
        .collect();
    let fit = fit_log_cubic(&samples, 1.0, 0.5).unwrap();
    let target = 1.0 / (std::f64::consts::PI * std::f64::consts::PI);
    println!("fitted leading coefficient {:.6} vs 1/pi^2 = {target:.6}", fit.coeffs[0]);
    assert!((fit.coeffs[0] - target).abs() <= 0.3 * target);
    assert_eq!(t.d2_weighted_sum(4.0, 0.0).unwrap(), 18.0);
    assert_eq!(t.d2_weighted_sum(1.0, 1.7).unwrap(), 1.0);
    assert!(t.d2_weighted_sum(10.0, -0.5).is_err());
}

#[test]
fn cache_rejects_corruption_and_rebuilds() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.bin");
    std::fs::write(&path, b"garbage that is not a divisor table").unwrap();
    assert!(DivisorTable::read_cache(&path, Some(100)).is_err());
    let t = DivisorTable::load_or_build(&path, 100).unwrap();
    assert_eq!(t.prefix_d(10), 27);
    let again = DivisorTable::read_cache(&path, Some(100)).unwrap();
    assert_eq!(again.prefix_d(100), t.prefix_d(100));
}
