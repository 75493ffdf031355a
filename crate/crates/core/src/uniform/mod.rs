//! Large-lambda evaluation of F_0 = 2F1(1, eps*lambda; 1 + lambda; chi) for
//! eps > 1, where the integrand of its loop-integral representation has a
//! saddle at `tau = eps` and a simple pole at `tau = 1/chi`.
//!
//! Two approximations are provided: the leading saddle-point term, valid
//! while the pole stays away from the saddle (`eps*chi < 1`), and the
//! erfc-based uniform expansion truncated after `d_0`, valid through the
//! coalescence `eps*chi = 1`.

use std::f64::consts::PI;

use crate::asymptotic::DerivedParams;
use crate::error::{Error, Result};
use crate::kernels::{erfcx_log, log_assemble, log_gamma, LogScaled};

/// Half-width of the band `|eps*chi - 1| < COALESCENCE_BAND` treated as coalesced.
pub const COALESCENCE_BAND: f64 = 1e-3;

/// Beyond this distance from coalescence p^2 is taken from the logs directly.
const SERIES_P_LIMIT: f64 = 0.25;

/// The saddle-point route needs `1 - eps*chi` at least this large.
pub const SADDLE_MIN_SEPARATION: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// eps*chi < 1: saddle to the left of the pole.
    SaddleDominant,
    /// eps*chi > 1: the pole has crossed the saddle.
    PoleDominant,
    /// Within [`COALESCENCE_BAND`] of eps*chi = 1.
    Coalesced,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::SaddleDominant => "saddle_dominant",
            Regime::PoleDominant => "pole_dominant",
            Regime::Coalesced => "coalesced",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleGeometry {
    pub epsilon: f64,
    pub chi: f64,
    pub lambda: f64,
    /// phi(eps)
    pub phi_at_saddle: f64,
    /// phi(1/chi)
    pub phi_at_pole: f64,
    /// sqrt(phi(eps) - phi(1/chi)) >= 0
    pub p: f64,
    pub regime: Regime,
}

impl SaddleGeometry {
    pub fn eps_chi(&self) -> f64 {
        self.epsilon * self.chi
    }

    /// Upper sign choice of the uniform expansion (pole at or right of the saddle).
    fn upper(&self) -> bool {
        self.eps_chi() <= 1.0
    }

    /// p carrying the sign of 1 - eps*chi; analytic through coalescence.
    fn signed_p(&self) -> f64 {
        if self.upper() {
            self.p
        } else {
            -self.p
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformResult {
    pub value: f64,
    pub regime: Regime,
    pub d0: f64,
    pub erfc_term: f64,
    pub saddle_term: f64,
}

/// phi(tau) = (eps - 1) ln(tau - 1) - eps ln(tau), for tau > 1.
pub fn phi(tau: f64, epsilon: f64) -> f64 {
    (epsilon - 1.0) * (tau - 1.0).ln() - epsilon * tau.ln()
}

/// phi(eps) - phi(1/chi) straight from the logarithms.
pub fn p_squared_direct(epsilon: f64, chi: f64) -> f64 {
    phi(epsilon, epsilon) - phi(1.0 / chi, epsilon)
}

/// phi(eps) - phi(1/chi) through `ln(1+y) = 2 atanh(y/(2+y))`, with the
/// leading terms combined exactly so nothing cancels as chi -> 1/eps.
pub fn p_squared_series(epsilon: f64, chi: f64) -> f64 {
    let h = 1.0 / chi - epsilon;
    let em1 = epsilon - 1.0;
    let w1 = h / (2.0 * em1 + h);
    let w2 = h / (2.0 * epsilon + h);
    let mut sum = 2.0 * h * h / ((2.0 * epsilon + h) * (2.0 * em1 + h));
    let (w1sq, w2sq) = (w1 * w1, w2 * w2);
    let (mut p1, mut p2) = (w1, w2);
    for j in 1..2000 {
        p1 *= w1sq;
        p2 *= w2sq;
        let term = 2.0 * (epsilon * p2 - em1 * p1) / f64::from(2 * j + 1);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Saddle/pole geometry for F_0 at these parameters.
pub fn geometry(p: &DerivedParams) -> Result<SaddleGeometry> {
    geometry_from(p.epsilon, p.chi, p.lambda)
}

pub fn geometry_from(epsilon: f64, chi: f64, lambda: f64) -> Result<SaddleGeometry> {
    if !(epsilon > 1.0) {
        return Err(Error::Domain(format!(
            "uniform regime needs eps = a/t > 1 (t < 1), got eps = {epsilon}"
        )));
    }
    if !(chi > 0.0 && chi < 1.0) {
        return Err(Error::Domain(format!("chi = {chi} must lie in (0, 1)")));
    }
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {lambda} must be positive")));
    }
    let s = epsilon * chi - 1.0;
    let p2 = if s.abs() < SERIES_P_LIMIT {
        p_squared_series(epsilon, chi)
    } else {
        p_squared_direct(epsilon, chi)
    };
    let regime = if s.abs() < COALESCENCE_BAND {
        Regime::Coalesced
    } else if s < 0.0 {
        Regime::SaddleDominant
    } else {
        Regime::PoleDominant
    };
    Ok(SaddleGeometry {
        epsilon,
        chi,
        lambda,
        phi_at_saddle: phi(epsilon, epsilon),
        phi_at_pole: phi(1.0 / chi, epsilon),
        p: p2.max(0.0).sqrt(),
        regime,
    })
}

/// G(lambda) = Γ(1 + lambda) Γ((eps - 1) lambda) / Γ(eps lambda), log-scaled.
pub fn g_lambda(lambda: f64, epsilon: f64) -> Result<LogScaled> {
    if !(lambda > 0.0) || !(epsilon > 1.0) {
        return Err(Error::Domain(format!(
            "G(lambda) needs lambda > 0 and eps > 1, got lambda = {lambda}, eps = {epsilon}"
        )));
    }
    let log = log_gamma(1.0 + lambda)? + log_gamma((epsilon - 1.0) * lambda)?
        - log_gamma(epsilon * lambda)?;
    Ok(LogScaled::positive(log))
}

/// G(lambda) exp(-lambda phi(eps)), the common prefactor of both approximations.
fn scaled_prefactor(g: &SaddleGeometry) -> Result<LogScaled> {
    Ok(g_lambda(g.lambda, g.epsilon)? * LogScaled::positive(-g.lambda * g.phi_at_saddle))
}

/// Leading saddle-point term without the regime guard. Only meaningful for
/// eps*chi < 1.
pub fn saddle_leading(g: &SaddleGeometry) -> Result<f64> {
    let eps = g.epsilon;
    log_assemble(
        &[
            scaled_prefactor(g)?,
            LogScaled::positive(-0.5 * (eps / (eps - 1.0)).ln()),
        ],
        &[
            1.0 / (2.0 * PI * g.lambda).sqrt(),
            1.0 / (1.0 - g.eps_chi()),
        ],
    )
}

/// Leading term of the saddle-point expansion of F_0 (coefficient c_0 = 1).
///
/// Refuses when the pole is within [`SADDLE_MIN_SEPARATION`] of the saddle or
/// beyond it; use [`f0_uniform`] there.
pub fn f0_saddle(p: &DerivedParams) -> Result<f64> {
    let g = geometry(p)?;
    let sep = 1.0 - g.eps_chi();
    if sep < SADDLE_MIN_SEPARATION {
        return Err(Error::Regime(format!(
            "saddle expansion needs 1 - eps*chi >= {SADDLE_MIN_SEPARATION}, got {sep}; use the uniform expansion"
        )));
    }
    saddle_leading(&g)
}

/// d_0 straight from its two-branch formula. Loses digits as p -> 0.
pub fn d0_direct(g: &SaddleGeometry) -> f64 {
    let eps = g.epsilon;
    (2.0 * (eps - 1.0) / eps).sqrt() * g.chi / (1.0 - g.eps_chi()) - g.chi / g.signed_p()
}

/// d_0 with the removable singularity at coalescence handled: inside the
/// band the value comes from cubic interpolation in `eps*chi - 1` through
/// four direct evaluations just outside it.
pub fn d0_coeff(g: &SaddleGeometry) -> f64 {
    if g.regime != Regime::Coalesced {
        return d0_direct(g);
    }
    let s_target = g.eps_chi() - 1.0;
    let nodes = [-3.0, -1.5, 1.5, 3.0].map(|m| m * COALESCENCE_BAND);
    let values = nodes.map(|s| {
        let chi = (1.0 + s) / g.epsilon;
        geometry_from(g.epsilon, chi, g.lambda)
            .map(|gi| d0_direct(&gi))
            .unwrap_or(f64::NAN)
    });
    lagrange(&nodes, &values, s_target)
}

fn lagrange(nodes: &[f64], values: &[f64], at: f64) -> f64 {
    let mut total = 0.0;
    for (i, (&xi, &yi)) in nodes.iter().zip(values).enumerate() {
        let w = nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(1.0, |acc, (_, &xj)| acc * (at - xj) / (xi - xj));
        total += w * yi;
    }
    total
}

/// Uniform erfc expansion of F_0 truncated after d_0.
pub fn f0_uniform(p: &DerivedParams) -> Result<UniformResult> {
    f0_uniform_from(&geometry(p)?)
}

pub fn f0_uniform_from(g: &SaddleGeometry) -> Result<UniformResult> {
    let pref = scaled_prefactor(g)?;
    // e^{-lambda phi(1/chi)} erfc(±sqrt(lambda) p) = e^{-lambda phi(eps)} erfcx(±sqrt(lambda) p)
    let z = g.lambda.sqrt() * g.signed_p();
    let erfc_term = log_assemble(&[pref, erfcx_log(z)], &[0.5])?;
    let d0 = d0_coeff(g);
    let saddle_term = log_assemble(&[pref], &[d0, 1.0 / (2.0 * g.chi * (PI * g.lambda).sqrt())])?;
    Ok(UniformResult {
        value: erfc_term + saddle_term,
        regime: g.regime,
        d0,
        erfc_term,
        saddle_term,
    })
}
