mod common;

use divzeta::sum::{compensated_sum, par_descending_sum};
use divzeta::DeltaStarForm;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn compensated_sum_is_nearly_exact(xs in prop::collection::vec(-1e6f64..1e6, 1..200), scale in -30i32..30) {
        let xs: Vec<f64> = xs.iter().enumerate().map(|(i, x)| x * 2f64.powi(scale * (i as i32 % 3))).collect();
        let exact: BigRational = xs.iter().map(|&x| BigRational::from_float(x).unwrap()).sum();
        let exact = exact.to_f64().unwrap();
        let abs_total: f64 = xs.iter().map(|x| x.abs()).sum();
        let got = compensated_sum(xs.iter().copied());
        let eps = f64::EPSILON;
        prop_assert!((got - exact).abs() <= 2.0 * eps * exact.abs() + 4.0 * xs.len() as f64 * eps * eps * abs_total);
    }

    #[test]
    fn delta_star_forms_agree(x in 0.01f64..2e6) {
        let t = common::table();
        let a = t.delta_star(x, DeltaStarForm::Combination).unwrap();
        let b = t.delta_star(x, DeltaStarForm::Alternating).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * (1.0 + x));
    }
}

#[test]
fn parallel_sum_is_thread_count_independent() {
    let f = |n: usize| ((n as f64).sqrt() * 3.7).sin() / (n as f64).powf(1.25);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| par_descending_sum(1, 3_000_000, f));
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| par_descending_sum(1, 3_000_000, f));
    assert_eq!(one.to_bits(), four.to_bits());
}
