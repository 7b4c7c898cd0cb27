//! Minimal double-double arithmetic (about 32 significant digits), enough to settle
//! near-ties in the quadruple counts.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        DD { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }


    pub fn powi(self, k: u32) -> DD {
        let mut acc = DD::from_f64(1.0);
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }

    /// `n^{1/k}`, exact when `n` is a perfect `k`-th power.
    pub fn kth_root(n: u64, k: u32) -> DD {
        assert!(k >= 1);
        let nf = n as f64;
        let guess = match k {
            1 => return DD::from_f64(nf),
            2 => nf.sqrt(),
            3 => nf.cbrt(),
            _ => nf.powf(1.0 / f64::from(k)),
        };
        let m = guess.round();
        if m >= 0.0 && (m as u128).checked_pow(k) == Some(u128::from(n)) {
            return DD::from_f64(m);
        }
        let target = DD::from_f64(nf);
        let kd = DD::from_f64(f64::from(k));
        let mut r = DD::from_f64(guess);
        for _ in 0..3 {
            let f = r.powi(k) - target;
            let df = kd * r.powi(k - 1);
            r = r - f / df;
        }
        r
    }
}

impl Add for DD {
    type Output = DD;
    fn add(self, o: DD) -> DD {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = fast_two_sum(s, e + t);
        let (hi, lo) = fast_two_sum(s, e + f);
        DD { hi, lo }
    }
}

impl Neg for DD {
    type Output = DD;
    fn neg(self) -> DD {
        DD { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DD {
    type Output = DD;
    fn sub(self, o: DD) -> DD {
        self + (-o)
    }
}

impl Mul for DD {
    type Output = DD;
    fn mul(self, o: DD) -> DD {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = fast_two_sum(p, e);
        DD { hi, lo }
    }
}

impl Div for DD {
    type Output = DD;
    fn div(self, o: DD) -> DD {
        let q1 = self.hi / o.hi;
        let r = self - o * DD::from_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * DD::from_f64(q2);
        let q3 = r.hi / o.hi;
        let (s, e) = fast_two_sum(q1, q2);
        DD { hi: s, lo: e } + DD::from_f64(q3)
    }
}

impl PartialOrd for DD {
    fn partial_cmp(&self, o: &DD) -> Option<Ordering> {
        match self.hi.partial_cmp(&o.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&o.lo),
            c => c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(DD::kth_root(121, 2), DD::from_f64(11.0));
        assert_eq!(DD::kth_root(1000, 3), DD::from_f64(10.0));
        let r = DD::kth_root(2, 2);
        let sq = r * r - DD::from_f64(2.0);
        assert!(sq.to_f64().abs() < 1e-30);
        let c = DD::kth_root(7, 5);
        assert!((c.powi(5) - DD::from_f64(7.0)).to_f64().abs() < 1e-29);
    }

    #[test]
    fn ordering_sees_low_word() {
        let a = DD { hi: 1.0, lo: 1e-20 };
        let b = DD::from_f64(1.0);
        assert!(a > b);
        assert!((a - b).to_f64() > 0.0);
    }
}
