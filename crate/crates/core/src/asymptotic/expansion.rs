//! Truncated large-k expansions of S(x; t) in terms of the Gauss functions F_m.

use std::fmt;
use std::str::FromStr;

use super::coeffs::{a_m, C_SINGULAR};
use super::DerivedParams;
use crate::error::{Error, Result};
use crate::series::{f_m, DEFAULT_REL_TOL};

/// Below this value of kt the expansion is outside its regime of validity.
pub const MIN_KT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Weights A_m kept as exact Pochhammer ratios.
    ExactAm,
    /// A_m expanded in 1/k and regrouped in X = ax/t.
    ExpandedAm,
    /// The t = 1 reduction (a = 1, c = 0).
    TEqualsOne,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::ExactAm => "exact_am",
            Variant::ExpandedAm => "expanded_am",
            Variant::TEqualsOne => "t_equals_1",
        }
    }

    /// The variant the table presets use at this t.
    pub fn default_for(t: f64) -> Self {
        if t == 1.0 {
            Variant::TEqualsOne
        } else {
            Variant::ExpandedAm
        }
    }

    /// Highest F_m index needed at truncation order `order`.
    fn max_fm(&self, order: u32) -> u32 {
        match (self, order) {
            (_, 0) => 0,
            (_, 1) | (Variant::TEqualsOne, _) => 2,
            _ => 4,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact_am" | "exact" => Ok(Variant::ExactAm),
            "expanded_am" | "expanded" => Ok(Variant::ExpandedAm),
            "t_equals_1" | "t1" => Ok(Variant::TEqualsOne),
            _ => Err(Error::Domain(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionResult {
    pub value: f64,
    pub order: u32,
    /// Contribution of each order: F_0, then the k^-1 and k^-2 brackets.
    pub terms: Vec<f64>,
    pub variant: Variant,
    /// kt below [`MIN_KT`].
    pub regime_warning: bool,
    /// A near-degenerate t (c below 1e-12 but t != 1) was sent to the t = 1 form.
    pub rerouted: bool,
}

/// F_0 ..= F_max_m by direct summation.
pub fn fm_values(p: &DerivedParams, max_m: u32, rel_tol: f64) -> Result<Vec<f64>> {
    (0..=max_m)
        .map(|m| {
            f_m(m, p, rel_tol)
                .and_then(|r| r.require_converged())
                .map(|r| r.value)
        })
        .collect()
}

/// Evaluates the expansion truncated after the k^-order term.
pub fn s_asym(p: &DerivedParams, order: u32, variant: Variant) -> Result<ExpansionResult> {
    let (variant, rerouted) = resolve_variant(p, variant)?;
    check_order(order)?;
    let fm = fm_values(p, variant.max_fm(order), DEFAULT_REL_TOL)?;
    assemble(p, order, variant, &fm).map(|mut r| {
        r.rerouted = rerouted;
        r
    })
}

fn check_order(order: u32) -> Result<()> {
    if order > 2 {
        return Err(Error::Domain(format!(
            "truncation order {order} not available (0..=2)"
        )));
    }
    Ok(())
}

fn resolve_variant(p: &DerivedParams, variant: Variant) -> Result<(Variant, bool)> {
    let degenerate = p.c < C_SINGULAR;
    match variant {
        Variant::TEqualsOne if !degenerate => Err(Error::Domain(format!(
            "the t = 1 form needs t = 1, got t = {}",
            p.t
        ))),
        Variant::ExactAm | Variant::ExpandedAm if degenerate && !p.is_t_one() => {
            Ok((Variant::TEqualsOne, true))
        }
        v => Ok((v, false)),
    }
}

/// Assembles the expansion from precomputed F_m values (`fm[m]` = F_m).
///
/// All variants read the same `fm`, so differences between them come only
/// from the coefficient algebra.
pub fn assemble(
    p: &DerivedParams,
    order: u32,
    variant: Variant,
    fm: &[f64],
) -> Result<ExpansionResult> {
    check_order(order)?;
    let need = variant.max_fm(order) as usize;
    if fm.len() <= need {
        return Err(Error::Domain(format!(
            "need F_0..=F_{need}, got {} values",
            fm.len()
        )));
    }
    let (k, x, a, c, t) = (p.k, p.x, p.a, p.c, p.t);
    let big_x = p.big_x;
    let (k1, k2) = (1.0 / k, 1.0 / (k * k));

    let mut terms = vec![fm[0]];
    if order >= 1 {
        let first = match variant {
            Variant::ExactAm => {
                0.5 * (1.0 - 2.0 * a) * x * a_m(1, p) * fm[1] + c * x * x * a_m(2, p) * fm[2]
            }
            Variant::ExpandedAm => -(0.5 * t * big_x * fm[1] - c * big_x * big_x * fm[2]),
            Variant::TEqualsOne => -0.5 * big_x * fm[1],
        };
        terms.push(first * k1);
    }
    if order >= 2 {
        let second = match variant {
            Variant::ExactAm => {
                0.5 * (2.0 * a - 1.0) * x * a_m(1, p) * fm[1]
                    + 0.25 * (3.0 - 20.0 * c) * x * x * a_m(2, p) * fm[2]
                    + 3.5 * (1.0 - 2.0 * a) * c * x.powi(3) * a_m(3, p) * fm[3]
                    + 3.0 * c * c * x.powi(4) * a_m(4, p) * fm[4]
            }
            Variant::ExpandedAm => {
                a * big_x * fm[1] + 0.25 * (3.0 - (20.0 + p.alpha) * c) * big_x * big_x * fm[2]
                    - 3.5 * c * t * big_x.powi(3) * fm[3]
                    + 3.0 * c * c * big_x.powi(4) * fm[4]
            }
            Variant::TEqualsOne => big_x * fm[1] + 0.75 * big_x * big_x * fm[2],
        };
        terms.push(second * k2);
    }

    Ok(ExpansionResult {
        value: terms.iter().sum(),
        order,
        terms,
        variant,
        regime_warning: p.lambda < MIN_KT,
        rerouted: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_names_round_trip() {
        for v in [Variant::ExactAm, Variant::ExpandedAm, Variant::TEqualsOne] {
            assert_eq!(v.as_str().parse::<Variant>().unwrap(), v);
        }
        assert!("bogus".parse::<Variant>().is_err());
    }

    #[test]
    fn value_is_sum_of_terms() {
        let p = DerivedParams::new(100.0, 0.5, 0.75).unwrap();
        let r = s_asym(&p, 2, Variant::ExpandedAm).unwrap();
        assert_eq!(r.terms.len(), 3);
        assert_eq!(r.value, r.terms.iter().sum::<f64>());
        assert!(!r.regime_warning);
    }

    #[test]
    fn t_one_form_requires_t_one() {
        let p = DerivedParams::new(100.0, 0.5, 0.75).unwrap();
        assert!(s_asym(&p, 1, Variant::TEqualsOne).is_err());
    }

    #[test]
    fn near_one_t_is_rerouted() {
        let p = DerivedParams::new(100.0, 0.5, 1.0 - 1e-13).unwrap();
        let r = s_asym(&p, 2, Variant::ExpandedAm).unwrap();
        assert_eq!(r.variant, Variant::TEqualsOne);
        assert!(r.rerouted);
    }

    #[test]
    fn small_kt_flags_regime() {
        let p = DerivedParams::new(20.0, 0.5, 0.25).unwrap();
        let r = s_asym(&p, 0, Variant::ExpandedAm).unwrap();
        assert!(r.regime_warning);
    }

    #[test]
    fn order_three_unavailable() {
        let p = DerivedParams::new(100.0, 0.5, 0.75).unwrap();
        assert!(s_asym(&p, 3, Variant::ExpandedAm).is_err());
    }

    #[test]
    fn expanded_at_t_one_reduces_term_by_term() {
        let p = DerivedParams::new(100.0, 0.5, 1.0).unwrap();
        let fm = [2.0, 3.0, 5.0, 7.0, 11.0];
        let e = assemble(&p, 2, Variant::ExpandedAm, &fm).unwrap();
        let t1 = assemble(&p, 2, Variant::TEqualsOne, &fm).unwrap();
        for (a, b) in e.terms.iter().zip(&t1.terms) {
            assert!((a - b).abs() <= 1e-15 * b.abs(), "{a} vs {b}");
        }
    }

    #[test]
    fn missing_fm_rejected() {
        let p = DerivedParams::new(100.0, 0.5, 0.5).unwrap();
        assert!(assemble(&p, 2, Variant::ExactAm, &[1.0, 1.0, 1.0]).is_err());
    }
}
