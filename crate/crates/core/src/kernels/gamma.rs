//! Logarithm of the gamma function for positive real arguments.

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Arguments at or above this use the Stirling series directly.
const STIRLING_MIN: f64 = 10.0;

/// B_{2n} / (2n (2n-1)) for n = 1..=10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// (-1)^k (zeta(k) - 1) / k for k = 2..=31.
const ZETA_M1_COEFFS: [f64; 30] = [
    0.32246703342411321824,
    -0.067352301053198095133,
    0.020580808427784547879,
    -0.0073855510286739852663,
    0.0028905103307415232858,
    -0.0011927539117032609771,
    0.00050966952474304242234,
    -0.00022315475845357937976,
    0.000099457512781808533715,
    -0.0000449262367381331417,
    0.000020507212775670691553,
    -9.439488275268395904e-6,
    4.3748667899074878042e-6,
    -2.0392157538013662368e-6,
    9.5514121304074198329e-7,
    -4.4924691987645660433e-7,
    2.1207184805554665869e-7,
    -1.0043224823968099609e-7,
    4.7698101693639805658e-8,
    -2.271109460894316491e-8,
    1.0838659214896954091e-8,
    -5.1834750419700466551e-9,
    2.4836745438024783172e-9,
    -1.1921401405860912074e-9,
    5.7313672416788620133e-10,
    -2.7595228851242331452e-10,
    1.3304764374244489481e-10,
    -6.4229645638381000221e-11,
    3.1044247747322272762e-11,
    -1.5021384080754142171e-11,
];

const EULER_GAMMA: f64 = 0.57721566490153286061;

/// ln Γ(z) for z > 0.
///
/// Three regions: the zeta series of ln Γ(1+e) for z in [0.5, 2.5] (keeps the
/// zeros at 1 and 2 relatively accurate), upward shift into the Stirling region
/// for z in (2.5, 10), and the Stirling series with ten Bernoulli terms beyond.
pub fn log_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires z > 0, got {z}")));
    }
    Ok(log_gamma_unchecked(z))
}

pub(crate) fn log_gamma_unchecked(z: f64) -> f64 {
    if z == 1.0 || z == 2.0 {
        return 0.0;
    }
    if z < 0.5 {
        return log_gamma_one_plus(z) - z.ln();
    }
    if z <= 1.5 {
        return log_gamma_one_plus(z - 1.0);
    }
    if z <= 2.5 {
        let e = z - 2.0;
        return log_gamma_one_plus(e) + e.ln_1p();
    }
    if z >= STIRLING_MIN {
        return stirling(z);
    }
    let mut shifted = z;
    let mut prod = 1.0;
    while shifted < STIRLING_MIN {
        prod *= shifted;
        shifted += 1.0;
    }
    stirling(shifted) - prod.ln()
}

/// ln Γ(1+e) for |e| <= 0.5.
fn log_gamma_one_plus(e: f64) -> f64 {
    let mut series = 0.0;
    for &c in ZETA_M1_COEFFS.iter().rev() {
        series = series * e + c;
    }
    series * e * e + e * (1.0 - EULER_GAMMA) - e.ln_1p()
}

fn stirling(z: f64) -> f64 {
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for &c in STIRLING_COEFFS.iter().rev() {
        corr = corr * inv2 + c;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + corr * inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_one_is_zero() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
    }

    #[test]
    fn gamma_half_is_log_sqrt_pi() {
        let expected = 0.5 * PI.ln();
        let got = log_gamma(0.5).unwrap();
        assert!(
            (got - expected).abs() <= 1e-15 * expected,
            "{got} vs {expected}"
        );
        assert!((got - 0.5723649429247001).abs() < 1e-15);
    }

    #[test]
    fn factorial_by_summed_logs() {
        let expected: f64 = (1..=100).map(|j| (j as f64).ln()).sum();
        let got = log_gamma(101.0).unwrap();
        assert!(((got - expected) / expected).abs() < 1e-14);
    }

    #[test]
    fn small_factorials_exact() {
        let mut fact = 1.0_f64;
        for n in 1..20 {
            fact *= n as f64;
            let got = log_gamma(n as f64 + 1.0).unwrap();
            let rel = if n == 1 {
                got.abs()
            } else {
                ((got - fact.ln()) / fact.ln()).abs()
            };
            assert!(rel < 1e-14, "n = {n}: {rel}");
        }
    }

    #[test]
    fn near_roots_stay_relative() {
        // ln Γ(1 + e) ≈ -γ e for tiny e.
        let z = 1.0 + 1e-9;
        let e = z - 1.0;
        let got = log_gamma(z).unwrap();
        assert!(((got + EULER_GAMMA * e) / (EULER_GAMMA * e)).abs() < 1e-8);
    }

    #[test]
    fn region_boundaries_are_continuous() {
        for &b in &[0.5, 1.5, 2.5, STIRLING_MIN] {
            let lo = log_gamma(b * (1.0 - 1e-15)).unwrap();
            let hi = log_gamma(b * (1.0 + 1e-15)).unwrap();
            assert!((lo - hi).abs() < 1e-14 * lo.abs().max(1.0), "boundary {b}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }
}
