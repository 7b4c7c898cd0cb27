use divzeta::quadruples::{
    count_quadruples_fast, count_quadruples_naive, diagonal_count, exact_sqrt_coincidences, BOUND_EPS,
};
use proptest::prelude::*;

#[test]
fn fast_matches_naive_on_grid() {
    for n in [25, 50, 100] {
        for k in [2, 3] {
            for delta in [1e-9, 1e-3, 0.1] {
                let a = count_quadruples_naive(n, k, delta).unwrap().count;
                let b = count_quadruples_fast(n, k, delta).unwrap().count;
                assert_eq!(a, b, "N = {n}, k = {k}, delta = {delta}");
            }
        }
    }
}

#[test]
fn small_delta_counts_diagonal_and_exact_coincidences() {
    let n = 50;
    let r = count_quadruples_naive(n, 2, 1e-12).unwrap();
    assert_eq!(r.count, exact_sqrt_coincidences(n));
    assert_eq!(r.count, diagonal_count(n) + 4);
}

#[test]
#[ignore = "sqrt(64) + sqrt(100) = sqrt(81) + sqrt(81) and its permutations add 4 to the diagonal count"]
fn small_delta_counts_only_diagonal() {
    assert_eq!(count_quadruples_naive(50, 2, 1e-12).unwrap().count, 4950);
}

#[test]
fn bound_at_two_hundred() {
    let n = 200u64;
    let r = count_quadruples_fast(n, 2, 1.0 / (n * n) as f64).unwrap();
    let nf = n as f64;
    println!("count {}, ratio {:.4}", r.count, r.ratio);
    assert!(r.count as f64 <= 100.0 * nf.powf(BOUND_EPS) * 2.0 * nf * nf);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn fast_equals_naive(n in 1u64..40, k in 2u32..5, delta in 1e-9f64..0.5) {
        let a = count_quadruples_naive(n, k, delta).unwrap();
        let b = count_quadruples_fast(n, k, delta).unwrap();
        prop_assert_eq!(a.count, b.count);
    }

    #[test]
    fn count_bracketed_and_monotone(n in 1u64..60, k in 2u32..4, d1 in 1e-9f64..0.2, d2 in 1e-9f64..0.2) {
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        let a = count_quadruples_fast(n, k, lo).unwrap();
        let b = count_quadruples_fast(n, k, hi).unwrap();
        prop_assert!(a.count <= b.count);
        prop_assert!(a.count >= a.diagonal);
        prop_assert!(b.count <= n.pow(4));
    }
}

#[test]
fn whole_range_is_counted_for_large_delta() {
    for k in [2, 3] {
        assert_eq!(count_quadruples_fast(20, k, 4.0).unwrap().count, 20u64.pow(4));
    }
    assert_eq!(count_quadruples_naive(1, 3, 0.5).unwrap().count, 1);
}
