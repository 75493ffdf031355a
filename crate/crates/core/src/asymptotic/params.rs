use crate::error::{Error, Result};

/// The large parameter `k`, the point `(x, t)`, and every quantity derived
/// from them that the expansions use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub k: f64,
    pub x: f64,
    pub t: f64,
    /// (1 + t) / 2
    pub a: f64,
    /// (1 - t) / 2
    pub b: f64,
    /// a (1 - a) = (1 - t^2) / 4
    pub c: f64,
    /// a x / t
    pub big_x: f64,
    /// a x
    pub chi: f64,
    /// a / t
    pub epsilon: f64,
    /// t k
    pub lambda: f64,
    /// 4t / (1 + t)^2, where the saddle and the pole of F_0 coalesce
    pub x_star: f64,
    /// 4 (1 + a) / (a t)
    pub alpha: f64,
}

impl DerivedParams {
    pub fn new(k: f64, x: f64, t: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::Domain(format!(
                "k = {k} must be positive and finite"
            )));
        }
        if !(x > 0.0 && x <= 1.0) {
            return Err(Error::Domain(format!("x = {x} must lie in (0, 1]")));
        }
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::Domain(format!("t = {t} must lie in (0, 1]")));
        }
        let a = 0.5 * (1.0 + t);
        let b = 0.5 * (1.0 - t);
        Ok(Self {
            k,
            x,
            t,
            a,
            b,
            c: 0.25 * (1.0 - t) * (1.0 + t),
            big_x: a * x / t,
            chi: a * x,
            epsilon: a / t,
            lambda: t * k,
            x_star: 4.0 * t / ((1.0 + t) * (1.0 + t)),
            alpha: 4.0 * (1.0 + a) / (a * t),
        })
    }

    /// `epsilon * chi = a^2 x / t`; equals one exactly at `x = x_star`.
    pub fn eps_chi(&self) -> f64 {
        self.a * self.a * self.x / self.t
    }

    pub fn is_t_one(&self) -> bool {
        self.t == 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_two_geometry() {
        let p = DerivedParams::new(150.0, 0.45, 1.0 / 3.0).unwrap();
        assert!((p.epsilon - 2.0).abs() < 1e-15);
        assert!((p.lambda - 50.0).abs() < 1e-13);
        assert!((p.x_star - 0.75).abs() < 1e-15);
        assert!((p.chi - 2.0 * 0.45 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn t_one_degenerates() {
        let p = DerivedParams::new(100.0, 0.5, 1.0).unwrap();
        assert_eq!((p.a, p.b, p.c), (1.0, 0.0, 0.0));
        assert_eq!(p.x_star, 1.0);
        assert_eq!(p.big_x, p.x);
    }

    #[test]
    fn t_half_arithmetic() {
        let p = DerivedParams::new(10.0, 0.4, 0.5).unwrap();
        assert_eq!(p.a, 0.75);
        assert_eq!(p.c, 0.1875);
        assert!((p.big_x - 1.5 * 0.4).abs() < 1e-16);
    }

    #[test]
    fn invariants_on_grid() {
        for &t in &[0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9, 1.0] {
            for &x in &[0.05, 0.3, 0.75, 1.0] {
                let p = DerivedParams::new(200.0, x, t).unwrap();
                assert!((p.a + p.b - 1.0).abs() < 1e-15);
                assert!((p.c - p.a * p.b).abs() < 1e-15);
                assert!((2.0 * p.a - 1.0 - t).abs() < 1e-15);
                assert!(p.a > 0.5 && p.a <= 1.0);
                assert!((p.epsilon * p.chi - p.eps_chi()).abs() < 1e-14);
                assert!((p.alpha - 4.0 * (3.0 / t - 1.0 / p.a)).abs() < 1e-12 * p.alpha);
            }
        }
    }

    #[test]
    fn coalescence_at_x_star() {
        let t = 0.4;
        let probe = DerivedParams::new(1.0, 1.0, t).unwrap();
        let p = DerivedParams::new(1.0, probe.x_star, t).unwrap();
        assert!((p.eps_chi() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(DerivedParams::new(0.0, 0.5, 0.5).is_err());
        assert!(DerivedParams::new(10.0, 0.0, 0.5).is_err());
        assert!(DerivedParams::new(10.0, 1.2, 0.5).is_err());
        assert!(DerivedParams::new(10.0, 0.5, 0.0).is_err());
        assert!(DerivedParams::new(10.0, 0.5, 1.5).is_err());
    }
}
