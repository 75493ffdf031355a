//! Generic Laplace-method coefficients for
//! `int_0^1 f(tau) exp(k psi(tau)) dtau` about the interior saddle `tau = a`,
//! with `psi = a ln tau + (1-a) ln(1-tau)` and
//! `f = tau^{-1/2} (1-tau)^{-1/2} / (1 - z tau)`.
//!
//! The derivatives are closed forms (psi) and a three-factor Leibniz
//! expansion (f); nothing here reuses the closed-form c_2/c_4, so the two
//! routes check each other.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceCoeffs {
    pub c2: f64,
    pub c4: f64,
}

/// psi^(n)(a) for n >= 1: (n-1)! [(-1)^{n-1} a^{1-n} - (1-a)^{1-n}].
pub fn psi_derivative(n: u32, a: f64) -> f64 {
    let fact = (1..n).fold(1.0, |acc, j| acc * f64::from(j));
    let sign = if (n - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let e = 1 - n as i32;
    fact * (sign * a.powi(e) - (1.0 - a).powi(e))
}

/// d^i/dtau^i of tau^{-1/2}
fn d_inv_sqrt(i: u32, tau: f64) -> f64 {
    let coef = (0..i).fold(1.0, |acc, j| acc * (-0.5 - f64::from(j)));
    coef * tau.powf(-0.5 - f64::from(i))
}

/// d^j/dtau^j of (1 - tau)^{-1/2}
fn d_inv_sqrt_reflected(j: u32, tau: f64) -> f64 {
    let coef = (0..j).fold(1.0, |acc, l| acc * (0.5 + f64::from(l)));
    coef * (1.0 - tau).powf(-0.5 - f64::from(j))
}

/// d^l/dtau^l of (1 - z tau)^{-1}
fn d_pole(l: u32, tau: f64, z: f64) -> f64 {
    let fact = (1..=l).fold(1.0, |acc, j| acc * f64::from(j));
    fact * z.powi(l as i32) * (1.0 - z * tau).powi(-1 - l as i32)
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * f64::from(n - j) / f64::from(j + 1))
}

/// f^(n)(tau) by the Leibniz rule over the three factors.
pub fn amplitude_derivative(n: u32, tau: f64, z: f64) -> f64 {
    let mut total = 0.0;
    for i in 0..=n {
        for j in 0..=(n - i) {
            let l = n - i - j;
            let multinomial = binomial(n, i) * binomial(n - i, j);
            total +=
                multinomial * d_inv_sqrt(i, tau) * d_inv_sqrt_reflected(j, tau) * d_pole(l, tau, z);
        }
    }
    total
}

/// c_2 and c_4 from the general Laplace-coefficient formulas.
pub fn laplace_generic_coeffs(a: f64, z: f64) -> Result<LaplaceCoeffs> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!("saddle a = {a} must lie in (0, 1)")));
    }
    if (1.0 - a * z).abs() < 1e-6 {
        return Err(Error::Conditioning(format!(
            "amplitude pole 1/z = {} is within 1e-6 of the saddle a = {a}",
            1.0 / z
        )));
    }
    let p2 = psi_derivative(2, a);
    let ps: [f64; 7] = std::array::from_fn(|n| {
        if n >= 3 {
            psi_derivative(n as u32, a) / p2
        } else {
            0.0
        }
    });
    let f0 = amplitude_derivative(0, a, z);
    let fs: [f64; 5] = std::array::from_fn(|n| amplitude_derivative(n as u32, a, z) / f0);
    let (p3, p4, p5, p6) = (ps[3], ps[4], ps[5], ps[6]);

    let c2 = -(fs[2] - p3 * fs[1] + 5.0 / 12.0 * p3 * p3 - 0.25 * p4) / p2;

    let c4 = (fs[4] / 6.0 - 5.0 / 9.0 * p3 * fs[3]
        + 5.0 / 12.0 * (7.0 / 3.0 * p3 * p3 - p4) * fs[2]
        - 35.0 / 36.0 * (p3.powi(3) - p3 * p4 + 6.0 / 35.0 * p5) * fs[1]
        + 35.0 / 36.0
            * (11.0 / 24.0 * p3.powi(4) - 0.75 * (p3 * p3 - p4 / 6.0) * p4 + 0.2 * p3 * p5
                - p6 / 35.0))
        / (p2 * p2);

    Ok(LaplaceCoeffs { c2, c4 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotic::c2_coeff;

    #[test]
    fn psi_second_derivative_is_minus_inverse_c() {
        for &a in &[0.55, 0.75, 0.9] {
            let c = a * (1.0 - a);
            assert!((psi_derivative(2, a) + 1.0 / c).abs() < 1e-12 / c);
        }
    }

    #[test]
    fn psi_first_derivative_vanishes_at_saddle() {
        assert!(psi_derivative(1, 0.7).abs() < 1e-15);
    }

    #[test]
    fn amplitude_matches_finite_differences() {
        let (tau, z, h) = (0.7, 0.6, 1e-4);
        let f = |s: f64| amplitude_derivative(0, s, z);
        let d1 = (f(tau + h) - f(tau - h)) / (2.0 * h);
        let d2 = (f(tau + h) - 2.0 * f(tau) + f(tau - h)) / (h * h);
        assert!((d1 / amplitude_derivative(1, tau, z) - 1.0).abs() < 1e-7);
        assert!((d2 / amplitude_derivative(2, tau, z) - 1.0).abs() < 1e-5);
        let g = |s: f64| amplitude_derivative(3, s, z);
        let d4 = (g(tau + h) - g(tau - h)) / (2.0 * h);
        assert!((d4 / amplitude_derivative(4, tau, z) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn c2_without_pole_matches_closed_form() {
        for &a in &[0.6, 0.75, 0.95] {
            let c = a * (1.0 - a);
            let g = laplace_generic_coeffs(a, 0.0).unwrap();
            let expected = -(1.0 + 2.0 * c) / (12.0 * c);
            assert!(((g.c2 - expected) / expected).abs() < 1e-12);
            assert!(((g.c2 - c2_coeff(a, 0.0).unwrap()) / expected).abs() < 1e-12);
        }
    }

    #[test]
    fn conditioning_guard() {
        assert!(matches!(
            laplace_generic_coeffs(0.8, 1.25),
            Err(Error::Conditioning(_))
        ));
        assert!(laplace_generic_coeffs(1.0, 0.2).is_err());
    }
}
