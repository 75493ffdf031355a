use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest natural-log exponent that `exp` maps to a finite `f64`.
const MAX_EXP: f64 = 709.782_712_893_384;
/// Below this the result is subnormal or zero.
const MIN_EXP: f64 = -708.396_418_532_264;

/// A real number stored as `sign * exp(log_magnitude)`.
///
/// `sign == 0` encodes zero; `log_magnitude` is then meaningless and kept at
/// `-inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScaled {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl LogScaled {
    pub const ZERO: Self = Self {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };
    pub const ONE: Self = Self {
        log_magnitude: 0.0,
        sign: 1,
    };

    pub fn positive(log_magnitude: f64) -> Self {
        Self {
            log_magnitude,
            sign: 1,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                log_magnitude: x.abs().ln(),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn recip(self) -> Self {
        debug_assert!(!self.is_zero());
        Self {
            log_magnitude: -self.log_magnitude,
            sign: self.sign,
        }
    }

    pub fn powf(self, e: f64) -> Self {
        debug_assert!(self.sign > 0);
        Self::positive(self.log_magnitude * e)
    }

    /// Exponentiates, failing when the magnitude leaves the normal range.
    pub fn to_f64(self) -> Result<f64> {
        if self.sign == 0 {
            return Ok(0.0);
        }
        if self.log_magnitude > MAX_EXP
            || self.log_magnitude < MIN_EXP
            || self.log_magnitude.is_nan()
        {
            return Err(Error::Overflow {
                exponent: self.log_magnitude,
            });
        }
        Ok(f64::from(self.sign) * self.log_magnitude.exp())
    }
}

impl Mul for LogScaled {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        Self {
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
            sign: self.sign * rhs.sign,
        }
    }
}

/// Multiplies `factors` and `linear_terms` in the log domain and exponentiates
/// once at the end.
pub fn log_assemble(factors: &[LogScaled], linear_terms: &[f64]) -> Result<f64> {
    let product = factors
        .iter()
        .copied()
        .chain(linear_terms.iter().map(|&x| LogScaled::from_f64(x)))
        .fold(LogScaled::ONE, |acc, f| acc * f);
    product.to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor() {
        let v = log_assemble(&[LogScaled::positive(2f64.ln())], &[]).unwrap();
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn huge_and_tiny_cancel() {
        let v = log_assemble(
            &[LogScaled::positive(700.0), LogScaled::positive(-700.0)],
            &[],
        )
        .unwrap();
        assert_eq!(v, 1.0);
        assert!(LogScaled::positive(800.0).to_f64().is_err());
    }

    #[test]
    fn linear_terms_carry_sign() {
        let v = log_assemble(&[LogScaled::positive(1.0)], &[-2.0, 0.5]).unwrap();
        assert!((v + std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn zero_annihilates() {
        let v = log_assemble(&[LogScaled::positive(900.0)], &[0.0]).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn overflow_reports_exponent() {
        match log_assemble(&[LogScaled::positive(750.0)], &[2.0]) {
            Err(Error::Overflow { exponent }) => {
                assert!((exponent - 750.0 - 2f64.ln()).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn large_logs_add_exactly() {
        let a = LogScaled::positive(1e6);
        let b = LogScaled::positive(-1e6 + 0.5);
        assert_eq!((a * b).log_magnitude, 0.5);
    }
}
