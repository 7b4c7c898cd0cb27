mod common;

use std::f64::consts::PI;

use divzeta::expsum::{lemma4_bound, lemma4_doubling_profile, lemma4_sum, PhasePolynomial};
use divzeta::moments::log_log_slope;

const PAIR: (f64, f64) = (1.0 / 9.0, 13.0 / 18.0);

#[test]
fn lemma4_bound_at_one_million() {
    let t = 1e6;
    let k = 1000;
    let phase = PhasePolynomial::new(vec![(8.0 * PI).sqrt()]).unwrap();
    let s = lemma4_sum(t, k, 2 * k, &phase, common::table()).unwrap();
    assert!(!s.flagged);
    let ratio = s.value.norm() / lemma4_bound(t, k, PAIR.0, PAIR.1);
    println!("|sum| = {:.3}, ratio {ratio:.4}", s.value.norm());
    assert!(ratio <= 10.0);
}

#[test]
fn doubling_profile_shape() {
    let t = 1e6;
    let phase = PhasePolynomial::new(vec![(8.0 * PI).sqrt(), 1.0]).unwrap();
    let rows = lemma4_doubling_profile(t, 16, 10, &phase, PAIR, common::table()).unwrap();
    assert_eq!(rows.len(), 11);
    let step = 2f64.powf(0.5 * (1.0 + PAIR.1));
    for w in rows.windows(2) {
        assert_eq!(w[1].k, 2 * w[0].k);
        assert!((w[1].comparator / w[0].comparator - step).abs() < 1e-12);
    }
    let measured = log_log_slope(&rows.iter().map(|r| (r.k as f64, r.modulus)).collect::<Vec<_>>()).unwrap();
    println!("measured growth exponent {measured:.3} vs comparator {:.3}", 0.5 * (1.0 + PAIR.1));
}

#[test]
fn kolesnik_exponent_numerically() {
    // T^{3/4}·T^{−1/2−1/16}·K^{1/4+173/152} at K = T^{1/3}, as a power of T
    for t in [1e6f64, 1e12, 1e30] {
        let k = t.cbrt();
        let v = t.powf(0.75) * t.powf(-0.5 - 1.0 / 16.0) * k.powf(0.25 + 173.0 / 152.0);
        assert!((v.ln() / t.ln() - 593.0 / 912.0).abs() < 1e-12);
    }
}
