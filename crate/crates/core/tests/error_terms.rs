mod common;



use std::f64::consts::{PI, TAU};

use divzeta::error_terms::{lemma3_check, EStarPrimitive, ErrorFunctionSeries, SeriesKind, LEMMA3_DEFAULT_C};
use divzeta::moments::{log_spaced, moment_integral, MomentKind};
use divzeta::oracle::{e_star_combination, nested_r};
use divzeta::Result;

struct Synthetic<F: Fn(f64) -> f64, G: Fn(f64) -> f64> {
    f: F,
    primitive: G,
}

impl<F: Fn(f64) -> f64, G: Fn(f64) -> f64> EStarPrimitive for Synthetic<F, G> {
    fn e_star(&self, t: f64) -> Result<f64> {
        Ok((self.f)(t))
    }
    fn integral_e_star(&self, t: f64) -> Result<f64> {
        Ok((self.primitive)(t))
    }
}

#[test]
fn e_star_definitional_oracle() {
    let terms = common::terms();
    for t in [1e-6, 0.3, 100.0, 2345.6] {
        let a = terms.e_star(t).unwrap();
        let b = e_star_combination(&terms, t).unwrap();
        assert!((a - b).abs() <= 1e-6, "t = {t}: {a} vs {b}");
    }
    assert!(terms.e_star(1e-9).unwrap().abs() < 1e-6);
    assert!(terms.r_term(1e-9).unwrap().abs() < 1e-6);
}

#[test]
fn r_against_nested_quadrature() {
    let terms = common::terms();
    let r = nested_r(&terms, &[500.0], 0.25).unwrap()[0];
    let direct = terms.r_term(500.0).unwrap();
    assert!((r - direct).abs() <= 1e-3, "{r} vs {direct}");
}

#[test]
fn r_trivial_envelope() {
    let terms = common::terms();
    let t = common::T_MAX;
    let r = terms.r_term(t).unwrap();
    println!("R(1e4) = {r:.4}, T^(3/4) = {:.1}", t.powf(0.75));
    assert!(r.abs() <= t.powf(0.75));
}

#[test]
fn e_star_mean_square() {
    let terms = common::terms();
    let t = common::T_MAX;
    let m = moment_integral(MomentKind::EStar, 2, t, &terms, 0.05).unwrap();
    let c = m.value / t / (t.powf(1.0 / 3.0) * t.ln().powi(3));
    println!("(1/T) int E*^2 = {:.3}, C = {c:.5}", m.value / t);
    assert!(c <= 10.0);
}

#[test]
fn lemma3_at_one_thousand() {
    let terms = common::terms();
    let rep = lemma3_check(&terms, 1e3, 10.0, LEMMA3_DEFAULT_C).unwrap();
    assert!(rep.holds && rep.slack_plus >= 0.0 && rep.slack_minus >= 0.0, "{rep:?}");
    assert!(lemma3_check(&terms, 1e3, 1.0, 10.0).is_err());
    assert!(lemma3_check(&terms, 1e3, 600.0, 10.0).is_err());
}

#[test]
fn lemma3_synthetic_sources() {
    let constant = Synthetic {
        f: |_| 3.0,
        primitive: |t| 3.0 * t,
    };
    let (t, c) = (400.0, 2.0);
    let rep = lemma3_check(&constant, t, 8.0, c).unwrap();
    let margin = c * 8.0 * t.ln();
    assert!((rep.slack_plus - margin).abs() < 1e-9 && (rep.slack_minus - margin).abs() < 1e-9);

    let oscillating = Synthetic {
        f: |t: f64| t.sin(),
        primitive: |t: f64| 1.0 - t.cos(),
    };
    let mut h = 4.0;
    let mut prev = lemma3_check(&oscillating, t, h, c).unwrap();
    while 2.0 * h <= 0.5 * t {
        let next = lemma3_check(&oscillating, t, 2.0 * h, c).unwrap();
        // averages of sin stay within ±2/H of each other, the margin grows by C·H·log T
        let extra = c * h * t.ln();
        assert!(next.slack_plus - prev.slack_plus >= extra - 4.0 / h);
        assert!(next.slack_minus - prev.slack_minus >= extra - 4.0 / h);
        prev = next;
        h *= 2.0;
    }
}

#[test]
#[ignore = "pointwise E* keeps the jumps of 2pi Delta*(t/2pi); measured RMS 28.9, 32.3, 38.3 for E, 2pi Delta*, E*"]
fn cancellation_pointwise_rms() {
    let terms = common::terms();
    let (mut e, mut d, mut es) = (0.0, 0.0, 0.0);
    let mut n = 0.0;
    let mut t = 1e3;
    while t <= 1e4 {
        e += terms.e(t).unwrap().powi(2);
        d += terms.scaled_delta_star(t).unwrap().powi(2);
        es += terms.e_star(t).unwrap().powi(2);
        n += 1.0;
        t += 0.25;
    }
    let (e, d, es) = ((e / n).sqrt(), (d / n).sqrt(), (es / n).sqrt());
    println!("RMS on [1e3, 1e4]: E {e:.3}, 2pi Delta* {d:.3}, E* {es:.3}");
    assert!(es < e && es < d);
}

#[test]
fn cancellation_in_mean() {
    // the same comparison after integrating: ∫E − πT against (2π)²∫Δ* − πT/4 against R
    let terms = common::terms();
    let (mut e, mut d, mut r) = (0.0, 0.0, 0.0);
    let mut n = 0.0;
    let mut t = 1e3;
    while t <= 1e4 {
        let ie = terms.grid.integral_e(t).unwrap() - PI * t;
        let id = TAU * TAU * terms.table.integral_delta_star(t / TAU).unwrap() - 0.25 * PI * t;
        e += ie * ie;
        d += id * id;
        r += terms.r_term(t).unwrap().powi(2);
        n += 1.0;
        t += 0.25;
    }
    let (e, d, r) = ((e / n).sqrt(), (d / n).sqrt(), (r / n).sqrt());
    println!("RMS on [1e3, 1e4]: int E - pi T {e:.2}, int 2pi Delta* - pi T/4 {d:.2}, R {r:.2}");
    assert!(r < e && r < d);
}

#[test]
fn r_sublinear_on_decades() {
    let terms = common::terms();
    let mut running = 0.0f64;
    let mut t = 0.0f64;
    let mut scaled = Vec::new();
    for top in [1e2, 1e3, 1e4] {
        while t < top {
            t = (t + 0.05).min(top);
            running = running.max(terms.r_term(t).unwrap().abs());
        }
        scaled.push(running / top);
    }
    println!("(1/T) max|R| at 1e2, 1e3, 1e4: {scaled:?}");
    assert!(scaled.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn series_sampling() {
    let terms = common::terms();
    let mut ts = vec![0.0];
    ts.extend(log_spaced(10.0, 1e4, 20));
    let r = ErrorFunctionSeries::sample(SeriesKind::R, &ts, &terms).unwrap();
    assert_eq!(r.values[0], 0.0);
    assert_eq!(r.len(), 21);
    assert_eq!(r.provenance.n_max, common::N_MAX);
    let nested = nested_r(&terms, &ts[1..], 0.25).unwrap();
    for (a, b) in r.values[1..].iter().zip(&nested) {
        assert!((a - b).abs() <= 1e-3);
    }
    for kind in [SeriesKind::Delta, SeriesKind::DeltaStar, SeriesKind::E, SeriesKind::EStar, SeriesKind::G, SeriesKind::H] {
        let s = ErrorFunctionSeries::sample(kind, &ts[1..], &terms).unwrap();
        assert!(s.values.iter().all(|v| v.is_finite()));
    }
    assert!(ErrorFunctionSeries::sample(SeriesKind::E, &[2.0, 1.0], &terms).is_err());
    assert!(terms.r_term(2.0 * common::T_MAX).is_err());
}
