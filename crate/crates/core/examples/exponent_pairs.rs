//! Exact exponent-pair arithmetic: A and B processes, the R(T) exponent and the 593/912 check.
//!
//! cargo run --example exponent_pairs

use divzeta::pairs::{best_word, decimal, kolesnik_exponent_check, ExponentPair};

fn main() -> divzeta::Result<()> {
    let base = ExponentPair::parse("1/6,2/3")?;
    for word in ["A", "B", "AB", "BA", "ABA", "BAB"] {
        let p = ExponentPair::from_word(word, &base)?;
        let e = p.r_bound_exponent();
        println!("{:<32} exponent {e:<10} = {}, 3k+l <= 1: {}", p.to_string(), decimal(&e, 6), p.satisfies_35());
    }
    for base in [ExponentPair::trivial(), base] {
        let best = best_word(&base, 6);
        println!("best word of length <= 6: {best}, exponent {}", best.r_bound_exponent());
    }
    let k = kolesnik_exponent_check();
    println!("\nbranches {} and {}, maximum {} = {}", k.first_branch, k.second_branch, k.maximum, k.maximum_decimal);
    println!("equals 593/912: {}; tail exponent {} = {}", k.equals_593_912, k.aba_tail, k.aba_tail_decimal);
    Ok(())
}
