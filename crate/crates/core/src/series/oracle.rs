use super::{sum_hypergeometric, SeriesResult, SeriesSpec, DEFAULT_MAX_TERMS};
use crate::asymptotic::DerivedParams;
use crate::error::{Error, Result};

/// Best relative accuracy promised for S at x = 1, where terms decay like r^{-3/2}.
pub const UNIT_ARGUMENT_TOL: f64 = 1e-8;

/// Series for S(x; t) = 3F2(1, ak, ak + 1/2; tk + 1, k + 1; x), a = (1 + t)/2.
pub fn s_spec(k: f64, x: f64, t: f64) -> SeriesSpec {
    let ak = 0.5 * (1.0 + t) * k;
    SeriesSpec::new(vec![1.0, ak, ak + 0.5], vec![t * k + 1.0, k + 1.0], x)
}

/// Reference value of S(x; t) by direct summation.
///
/// Accepts t = 0 and x = 0 in addition to the asymptotic domain, so that the
/// Gauss sum S(1; 0) = 2^k is expressible. At x = 1 the tolerance is relaxed
/// to at least [`UNIT_ARGUMENT_TOL`].
pub fn s_oracle(k: f64, x: f64, t: f64, rel_tol: f64) -> Result<SeriesResult> {
    s_oracle_with(k, x, t, rel_tol, DEFAULT_MAX_TERMS)
}

/// [`s_oracle`] with an explicit term cap.
pub fn s_oracle_with(
    k: f64,
    x: f64,
    t: f64,
    rel_tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!("k = {k} must be positive")));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} must lie in [0, 1]")));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("t = {t} must lie in [0, 1]")));
    }
    let tol = if x == 1.0 {
        rel_tol.max(UNIT_ARGUMENT_TOL)
    } else {
        rel_tol
    };
    sum_hypergeometric(&s_spec(k, x, t).with_rel_tol(tol).with_max_terms(max_terms))
}

/// Series for F_m at an arbitrary argument `chi`:
/// 2F1(m + 1, ak + m; tk + m + 1; chi).
pub fn gauss_fm_spec(m: u32, p: &DerivedParams, chi: f64, rel_tol: f64) -> SeriesSpec {
    let m = f64::from(m);
    SeriesSpec::new(vec![m + 1.0, p.a * p.k + m], vec![p.lambda + m + 1.0], chi)
        .with_rel_tol(rel_tol)
}

/// F_m = 2F1(m + 1, ak + m; tk + m + 1; ax) by direct summation.
pub fn f_m(m: u32, p: &DerivedParams, rel_tol: f64) -> Result<SeriesResult> {
    f_m_with(m, p, rel_tol, DEFAULT_MAX_TERMS)
}

/// [`f_m`] with an explicit term cap.
pub fn f_m_with(m: u32, p: &DerivedParams, rel_tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if p.chi >= 1.0 {
        return Err(Error::Divergent(format!(
            "F_{m} needs ax < 1 (a = {}, x = {}); at t = 1 the point x = 1 is excluded",
            p.a, p.x
        )));
    }
    sum_hypergeometric(&gauss_fm_spec(m, p, p.chi, rel_tol).with_max_terms(max_terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesStatus;

    #[test]
    fn s_at_zero_argument() {
        let r = s_oracle(10.0, 0.0, 0.5, 1e-20).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.terms_used, 1);
    }

    #[test]
    fn gauss_sum_k100() {
        let r = s_oracle(100.0, 1.0, 0.0, 1e-20).unwrap();
        let expected = 2f64.powi(100);
        assert!(
            ((r.value - expected) / expected).abs() < 1e-8,
            "{:e}",
            r.value / expected - 1.0
        );
        assert!((r.value / 1e30 - 1.26765).abs() < 1e-5);
    }

    #[test]
    fn s_oracle_domain() {
        assert!(s_oracle(0.0, 0.5, 0.5, 1e-20).is_err());
        assert!(s_oracle(10.0, 1.5, 0.5, 1e-20).is_err());
        assert!(s_oracle(10.0, 0.5, -0.1, 1e-20).is_err());
    }

    #[test]
    fn f_m_at_tiny_argument() {
        let p = DerivedParams::new(100.0, 1e-300, 0.5).unwrap();
        let r = f_m(0, &p, 1e-20).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn f_m_guards_divergence() {
        let p = DerivedParams::new(100.0, 1.0, 1.0).unwrap();
        assert!(matches!(f_m(0, &p, 1e-20), Err(Error::Divergent(_))));
        let p = DerivedParams::new(100.0, 1.0, 0.5).unwrap();
        assert_eq!(f_m(0, &p, 1e-20).unwrap().status, SeriesStatus::Converged);
    }
}
