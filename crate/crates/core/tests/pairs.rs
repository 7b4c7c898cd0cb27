use divzeta::pairs::{all_words, best_word, kolesnik_exponent_check, ExponentPair};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn valid_pair() -> impl Strategy<Value = ExponentPair> {
    (1i64..500, 0i64..=500, 0i64..=500).prop_map(|(den, a, b)| {
        let a = a % (den + 1);
        let b = b % (den + 1);
        // κ ∈ [0, ½], λ ∈ [½, 1]
        let kappa = q(a, 2 * den);
        let lambda = q(den + b, 2 * den);
        ExponentPair::new(kappa, lambda).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn processes_preserve_validity(p in valid_pair()) {
        prop_assert!(p.apply_a().is_valid());
        prop_assert!(p.apply_b().is_valid());
        let bb = p.apply_b().apply_b();
        prop_assert_eq!((bb.kappa, bb.lambda), (p.kappa.clone(), p.lambda.clone()));
    }

    #[test]
    fn word_order_is_innermost_first(p in valid_pair()) {
        let w = ExponentPair::from_word("AB", &p).unwrap();
        let manual = p.apply_b().apply_a();
        prop_assert_eq!((w.kappa, w.lambda), (manual.kappa, manual.lambda));
    }
}

#[test]
fn words_from_trivial_pair() {
    let base = ExponentPair::trivial();
    let all = all_words(&base, 6);
    assert_eq!(all.len(), 127);
    assert!(all.iter().all(ExponentPair::is_valid));
    let best = best_word(&base, 6);
    println!("best word of length <= 6 from (0, 1): {best}, exponent {}", best.r_bound_exponent());
    assert!(best.r_bound_exponent() <= q(2, 3));
}

#[test]
fn anchors() {
    let base = ExponentPair::parse("1/6,2/3").unwrap();
    let aba = ExponentPair::from_word("ABA", &base).unwrap();
    assert_eq!((aba.kappa.clone(), aba.lambda.clone()), (q(2, 18), q(13, 18)));
    assert_eq!(aba.r_bound_exponent(), q(73, 108));
    assert!(ExponentPair::from_word("AXB", &base).is_err());
    let k = kolesnik_exponent_check();
    assert!(k.equals_593_912);
    assert_eq!(k.aba_tail, "11/18");
    assert!(k.maximum_decimal.starts_with("0.6502192"));
}
