//! Double-double arithmetic and a compensated accumulator.
//!
//! A [`DoubleDouble`] carries an unevaluated sum `hi + lo` with
//! `|lo| <= ulp(hi) / 2`, giving roughly 106 bits of significand. Only the
//! operations needed by the series engines are provided.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Normalizes an arbitrary pair so that `|lo| <= ulp(hi)/2`.
    #[inline]
    pub fn from_parts(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - DoubleDouble::from_f64(q1).mul_f64(b);
        let q2 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    /// Square root via one Newton step on the f64 estimate.
    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from_f64(self.hi.sqrt());
        }
        let s = self.hi.sqrt();
        let (sq, sq_err) = two_prod(s, s);
        let r = (self.hi - sq - sq_err + self.lo) / (2.0 * s);
        Self::from_parts(s, r)
    }

    /// `self^n` by binary powering.
    pub fn powi(self, mut n: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }.add_f64(q3)
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

/// Running compensated sum. A value type: `accumulate` consumes and returns it.
///
/// `hi + lo` is the double-double value; `tail` collects the rounding errors
/// of `lo` so that the result does not depend on summation order beyond the
/// final rounding.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HiPrecAccumulator {
    pub hi: f64,
    pub lo: f64,
    pub tail: f64,
}

impl HiPrecAccumulator {
    pub const fn new() -> Self {
        Self::from_parts(0.0, 0.0)
    }

    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Self { hi, lo, tail: 0.0 }
    }

    pub fn value(&self) -> DoubleDouble {
        DoubleDouble::from_parts(self.hi, self.lo).add_f64(self.tail)
    }

    /// Adds a finite `term`. Saturation of the leading component is reported
    /// as [`Error::Overflow`].
    pub fn accumulate(self, term: f64) -> Result<Self> {
        if !term.is_finite() {
            return Err(Error::Domain(format!("non-finite term {term}")));
        }
        self.accumulate_dd(DoubleDouble::from_f64(term))
    }

    pub fn accumulate_dd(self, term: DoubleDouble) -> Result<Self> {
        let (s1, e1) = two_sum(self.hi, term.hi);
        let (s2, e2) = two_sum(self.lo, term.lo);
        let (s3, e3) = two_sum(e1, s2);
        let (hi, mid) = two_sum(s1, s3);
        let (lo, e4) = two_sum(mid, self.tail + (e2 + e3));
        let (hi, lo2) = two_sum(hi, lo);
        let (lo, e5) = two_sum(lo2, e4);
        if !hi.is_finite() {
            let exponent = self.hi.abs().ln().max(term.hi.abs().ln()) + std::f64::consts::LN_2;
            return Err(Error::Overflow { exponent });
        }
        Ok(Self { hi, lo, tail: e5 })
    }
}
