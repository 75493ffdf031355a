//! Closed-form Laplace coefficients of the Gauss function with two large
//! parameters, the Stirling-type prefactor Xi, and the Pochhammer weights A_m.

use std::f64::consts::PI;

use super::DerivedParams;
use crate::error::{Error, Result};
use crate::kernels::log_gamma_unchecked;

/// Values of c below this are treated as the t = 1 degeneration.
pub const C_SINGULAR: f64 = 1e-12;

fn check(a: f64, z: f64) -> Result<f64> {
    let c = a * (1.0 - a);
    if !(c >= C_SINGULAR) {
        return Err(Error::Singular(format!(
            "c = a(1-a) = {c:e} at a = {a}; use the t = 1 form of the expansion"
        )));
    }
    if a * z == 1.0 {
        return Err(Error::Singular(format!("az = 1 at a = {a}, z = {z}")));
    }
    Ok(c)
}

/// c_2(a, z) = 2cz^2/(1-az)^2 + (1-2a)z/(1-az) - (1+2c)/(12c).
pub fn c2_coeff(a: f64, z: f64) -> Result<f64> {
    let c = check(a, z)?;
    let w = z / (1.0 - a * z);
    Ok(2.0 * c * w * w + (1.0 - 2.0 * a) * w - (1.0 + 2.0 * c) / (12.0 * c))
}

/// c_4(a, z), including its trailing `-(1+2c)/(36c) c_2(a, z)`.
pub fn c4_coeff(a: f64, z: f64) -> Result<f64> {
    let c = check(a, z)?;
    Ok(c4_prime_with(a, c, z) - (1.0 + 2.0 * c) / (36.0 * c) * c2_coeff(a, z)?)
}

/// c_4'(a, z) = c_4(a, z) + (1+2c)/(36c) c_2(a, z).
pub fn c4_prime(a: f64, z: f64) -> Result<f64> {
    let c = check(a, z)?;
    Ok(c4_coeff(a, z)? + (1.0 + 2.0 * c) / (36.0 * c) * c2_coeff(a, z)?)
}

fn c4_prime_with(a: f64, c: f64, z: f64) -> f64 {
    let w = z / (1.0 - a * z);
    let s = 1.0 - 2.0 * a;
    4.0 * c * c * w.powi(4) + 14.0 * s * c * w.powi(3) / 3.0 + (3.0 - 20.0 * c) * w * w / 3.0
        - 2.0 * s * w / 3.0
        - (1.0 + 2.0 * c).powi(2) / (864.0 * c * c)
}

fn check_xi(a: f64, k: f64) -> Result<()> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!(
            "Xi(a, k) needs 0 < a < 1, got a = {a}"
        )));
    }
    if !(k > 0.0) {
        return Err(Error::Domain(format!("Xi(a, k) needs k > 0, got k = {k}")));
    }
    Ok(())
}

/// Xi(a, k) = Γ(k+1) / (Γ(ak+1/2) Γ((1-a)k+1/2)) (k/2π)^{-1/2} a^{ak} (1-a)^{(1-a)k},
/// evaluated in the log domain.
pub fn xi_factor_gamma(a: f64, k: f64) -> Result<f64> {
    check_xi(a, k)?;
    let b = 1.0 - a;
    let log_xi = log_gamma_unchecked(k + 1.0)
        - log_gamma_unchecked(a * k + 0.5)
        - log_gamma_unchecked(b * k + 0.5)
        - 0.5 * (k / (2.0 * PI)).ln()
        + a * k * a.ln()
        + b * k * b.ln();
    Ok(log_xi.exp())
}

/// Two-term large-k series of Xi(a, k).
pub fn xi_factor_series(a: f64, k: f64) -> Result<f64> {
    check_xi(a, k)?;
    let c = a * (1.0 - a);
    let u = (1.0 + 2.0 * c) / (c * k);
    Ok(1.0 + u / 24.0 + u * u / 1152.0)
}

/// A_m = (ak)_m / (tk + 1)_m.
pub fn a_m(m: u32, p: &DerivedParams) -> f64 {
    let ak = p.a * p.k;
    (0..m).fold(1.0, |acc, j| {
        let j = f64::from(j);
        acc * (ak + j) / (p.lambda + 1.0 + j)
    })
}

/// First-order large-k forms: A_1 ≈ (a/t)(1 - 1/(kt)), A_2 ≈ (a/t)^2 (1 - α/(4k)),
/// and A_m ≈ (a/t)^m otherwise.
pub fn a_m_first_order(m: u32, p: &DerivedParams) -> f64 {
    let lead = p.epsilon.powi(m as i32);
    match m {
        1 => lead * (1.0 - 1.0 / p.lambda),
        2 => lead * (1.0 - p.alpha / (4.0 * p.k)),
        _ => lead,
    }
}
