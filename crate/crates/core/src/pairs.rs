//! Exact exponent-pair arithmetic with the A- and B-processes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::arg(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Decimal expansion of `r` to `digits` places, truncated.
pub fn decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let r = r.abs();
    let int = r.numer() / r.denom();
    let mut rem = r.numer() % r.denom();
    let mut out = format!("{}{}.", if neg { "-" } else { "" }, int);
    for _ in 0..digits {
        rem *= 10;
        out.push_str(&(&rem / r.denom()).to_string());
        rem = &rem % r.denom();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentPair {
    pub kappa: BigRational,
    pub lambda: BigRational,
    /// Processes applied, in `ABA(·)` notation (leftmost applied last).
    pub word: String,
    /// The pair the word was applied to, as written.
    pub base: String,
}

impl ExponentPair {
    /// Validates `0 ≤ κ ≤ ½ ≤ λ ≤ 1`.
    pub fn new(kappa: BigRational, lambda: BigRational) -> Result<Self> {
        let half = q(1, 2);
        if kappa.is_negative() || kappa > half || lambda < half || lambda > BigRational::one() {
            return Err(Error::arg(format!("({kappa}, {lambda}) violates 0 <= kappa <= 1/2 <= lambda <= 1")));
        }
        let base = format!("({kappa}, {lambda})");
        Ok(Self {
            kappa,
            lambda,
            word: String::new(),
            base,
        })
    }

    /// The trivial pair `(0, 1)`.
    pub fn trivial() -> Self {
        Self::new(BigRational::zero(), BigRational::one()).expect("(0,1) is valid")
    }

    /// Parses `"κ,λ"`, e.g. `"1/6,2/3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (k, l) = s
            .split_once(',')
            .ok_or_else(|| Error::arg(format!("expected 'kappa,lambda', got {s:?}")))?;
        Self::new(parse_rational(k)?, parse_rational(l)?)
    }

    fn derived(&self, kappa: BigRational, lambda: BigRational, process: char) -> Self {
        Self {
            kappa,
            lambda,
            word: format!("{process}{}", self.word),
            base: self.base.clone(),
        }
    }

    /// `A(κ, λ) = (κ/(2κ+2), (κ+λ+1)/(2κ+2))`
    pub fn apply_a(&self) -> Self {
        let den = &self.kappa * BigInt::from(2) + BigInt::from(2);
        let k = &self.kappa / &den;
        let l = (&self.kappa + &self.lambda + BigRational::one()) / den;
        self.derived(k, l, 'A')
    }

    /// `B(κ, λ) = (λ − ½, κ + ½)`
    pub fn apply_b(&self) -> Self {
        let half = q(1, 2);
        self.derived(&self.lambda - &half, &self.kappa + half, 'B')
    }

    /// Applies `word` innermost first: `"ABA"` is `A(B(A(base)))`.
    pub fn from_word(word: &str, base: &ExponentPair) -> Result<Self> {
        let mut p = base.clone();
        for c in word.chars().rev() {
            p = match c.to_ascii_uppercase() {
                'A' => p.apply_a(),
                'B' => p.apply_b(),
                other => return Err(Error::arg(format!("invalid process {other:?} in word {word:?}"))),
            };
        }
        Ok(p)
    }

    pub fn is_valid(&self) -> bool {
        let half = q(1, 2);
        !self.kappa.is_negative() && self.kappa <= half && self.lambda >= half && self.lambda <= BigRational::one()
    }

    /// `(1+κ)/2 + λ/6`, the exponent of `T` in the bound for `R(T)`.
    pub fn r_bound_exponent(&self) -> BigRational {
        (BigRational::one() + &self.kappa) / BigInt::from(2) + &self.lambda / BigInt::from(6)
    }

    /// `3κ + λ ≤ 1`
    pub fn satisfies_35(&self) -> bool {
        &self.kappa * BigInt::from(3) + &self.lambda <= BigRational::one()
    }

    /// Exponent of the tail `n ≍ T^{1/2}` of the `R` series bounded with this pair:
    /// `3/4 + κ/2 + ½((1+λ)/2 − 5/4)`.
    pub fn tail_exponent(&self) -> BigRational {
        let inner = (BigRational::one() + &self.lambda) / BigInt::from(2) - q(5, 4);
        q(3, 4) + &self.kappa / BigInt::from(2) + inner / BigInt::from(2)
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "{} = ({}, {})", self.base, self.kappa, self.lambda)
        } else {
            write!(f, "{}{} = ({}, {})", self.word, self.base, self.kappa, self.lambda)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KolesnikExponents {
    /// `3/4 − 1/2 − 1/16 + (1/3)(1/4 + 173/152)`
    pub first_branch: String,
    /// `sup_{x∈[1/3,1/2]} 3/4 − 1/16 + x(−5/4 + 173/152)`
    pub second_branch: String,
    pub maximum: String,
    pub maximum_decimal: String,
    pub equals_593_912: bool,
    /// Tail exponent from `ABA(1/6, 2/3)`.
    pub aba_tail: String,
    pub aba_tail_decimal: String,
}

/// Exact arithmetic behind the `593/912` exponent.
pub fn kolesnik_exponent_check() -> KolesnikExponents {
    let first = q(3, 4) - q(1, 2) - q(1, 16) + q(1, 3) * (q(1, 4) + q(173, 152));
    // linear in x, so the supremum sits at an endpoint
    let branch = |x: BigRational| q(3, 4) - q(1, 16) + x * (q(-5, 4) + q(173, 152));
    let second = std::cmp::max(branch(q(1, 3)), branch(q(1, 2)));
    let maximum = std::cmp::max(first.clone(), second.clone());
    let base = ExponentPair::new(q(1, 6), q(2, 3)).expect("(1/6, 2/3) is valid");
    let aba = ExponentPair::from_word("ABA", &base).expect("valid word");
    let tail = aba.tail_exponent();
    KolesnikExponents {
        first_branch: first.to_string(),
        second_branch: second.to_string(),
        maximum_decimal: decimal(&maximum, 10),
        equals_593_912: maximum == q(593, 912),
        maximum: maximum.to_string(),
        aba_tail_decimal: decimal(&tail, 10),
        aba_tail: tail.to_string(),
    }
}

/// The pair minimising [`ExponentPair::r_bound_exponent`] over all words of length
/// `≤ max_len` applied to `base` (ties go to the shorter, then lexicographically first word).
pub fn best_word(base: &ExponentPair, max_len: usize) -> ExponentPair {
    let mut best = base.clone();
    let mut frontier = vec![base.clone()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for p in &frontier {
            for child in [p.apply_a(), p.apply_b()] {
                if child.r_bound_exponent() < best.r_bound_exponent() {
                    best = child.clone();
                }
                next.push(child);
            }
        }
        frontier = next;
    }
    best
}

/// Every pair reachable from `base` by words of length `≤ max_len`.
pub fn all_words(base: &ExponentPair, max_len: usize) -> Vec<ExponentPair> {
    let mut all = vec![base.clone()];
    let mut frontier = vec![base.clone()];
    for _ in 0..max_len {
        frontier = frontier.iter().flat_map(|p| [p.apply_a(), p.apply_b()]).collect();
        all.extend(frontier.iter().cloned());
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn processes() {
        let p = ExponentPair::new(q(1, 6), q(2, 3)).unwrap();
        let a = p.apply_a();
        assert_eq!((a.kappa.clone(), a.lambda.clone()), (q(1, 14), q(11, 14)));
        let b = a.apply_b();
        assert_eq!((b.kappa.clone(), b.lambda.clone()), (q(2, 7), q(4, 7)));
        let t = ExponentPair::trivial();
        assert_eq!(t.apply_a().kappa, q(0, 1));
        assert_eq!(t.apply_a().lambda, q(1, 1));
        let tb = t.apply_b();
        assert_eq!((tb.kappa, tb.lambda), (q(1, 2), q(1, 2)));
        let bb = p.apply_b().apply_b();
        assert_eq!((bb.kappa, bb.lambda), (p.kappa.clone(), p.lambda.clone()));
    }

    #[test]
    fn aba_anchor() {
        let base = ExponentPair::parse("1/6, 2/3").unwrap();
        let aba = ExponentPair::from_word("ABA", &base).unwrap();
        assert_eq!(aba.kappa, q(2, 18));
        assert_eq!(aba.lambda, q(13, 18));
        assert_eq!(aba.r_bound_exponent(), q(73, 108));
        assert_eq!(aba.tail_exponent(), q(11, 18));
        assert_eq!(aba.to_string(), "ABA(1/6, 2/3) = (1/9, 13/18)");
        assert_eq!(ExponentPair::from_word("", &base).unwrap().kappa, base.kappa);
        assert_eq!(ExponentPair::from_word("BB", &base).unwrap().lambda, base.lambda);
        assert!(ExponentPair::from_word("AC", &base).is_err());
    }

    #[test]
    fn trivial_pair_bound() {
        let t = ExponentPair::trivial();
        assert_eq!(t.r_bound_exponent(), q(2, 3));
        assert!(t.satisfies_35());
    }

    #[test]
    fn kolesnik_arithmetic() {
        let k = kolesnik_exponent_check();
        assert!(k.equals_593_912);
        assert_eq!(k.first_branch, "593/912");
        assert_eq!(k.second_branch, "593/912");
        assert!(k.maximum_decimal.starts_with("0.65021929"));
        assert_eq!(k.aba_tail, "11/18");
        assert!(k.aba_tail_decimal.starts_with("0.6111"));
    }

    #[test]
    fn word_search() {
        let t = ExponentPair::trivial();
        for p in all_words(&t, 6) {
            assert!(p.is_valid(), "{p}");
        }
        assert!(best_word(&t, 6).r_bound_exponent() <= q(2, 3));
        assert!(ExponentPair::parse("3/4,1").is_err());
        assert_eq!(decimal(&q(-1, 8), 4), "-0.1250");
    }
}
