//! Large-k expansion of the slowly varying Pochhammer ratio
//! `P_r = a^{-r} (ak + 1/2)_r / (k + 1)_r` that underlies the confluence
//! derivation of the S expansion.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrCheck {
    pub exact: f64,
    pub expanded: f64,
    /// `exact - expanded`, formed from the two deviations from one so that it
    /// keeps relative precision when both are close to one.
    pub difference: f64,
}

/// Exact and two-term expanded `P_r`.
pub fn confluence_pr_check(r: u32, a: f64, k: f64) -> Result<PrCheck> {
    if !(a > 0.0 && a <= 1.0) || !(k > 0.0) {
        return Err(Error::Domain(format!(
            "need 0 < a <= 1 and k > 0, got a = {a}, k = {k}"
        )));
    }
    let rf = f64::from(r);
    if k < 10.0 * rf * rf {
        return Err(Error::Domain(format!(
            "expansion needs k >= 10 r^2 (r = {r}, k = {k})"
        )));
    }
    let log_exact: f64 = (1..=r)
        .map(|n| {
            let n = f64::from(n);
            ((2.0 * n - 1.0) / (2.0 * a * k)).ln_1p() - (n / k).ln_1p()
        })
        .sum();
    let exact_dev = log_exact.exp_m1();

    let b = 1.0 - a;
    let first = -(a * rf - rf * rf * b) / (2.0 * a * k);
    let second = ((2.0 * a * a + 1.0) * rf + 9.0 * a * a * rf * rf
        - 2.0 * b * (5.0 * a + 2.0) * rf.powi(3)
        + 3.0 * b * b * rf.powi(4))
        / (24.0 * a * a * k * k);
    let expanded_dev = first + second;

    Ok(PrCheck {
        exact: 1.0 + exact_dev,
        expanded: 1.0 + expanded_dev,
        difference: exact_dev - expanded_dev,
    })
}
