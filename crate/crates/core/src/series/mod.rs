//! Direct summation of generalized hypergeometric series.
//!
//! Terms are built by the multiplicative term-ratio recurrence in
//! double-double and accumulated with [`HiPrecAccumulator`]. Pochhammer
//! symbols are never formed.

mod oracle;

pub use oracle::{
    f_m, f_m_with, gauss_fm_spec, s_oracle, s_oracle_with, s_spec, UNIT_ARGUMENT_TOL,
};

use crate::error::{Error, Result};
use crate::kernels::{DoubleDouble, HiPrecAccumulator};

pub const DEFAULT_REL_TOL: f64 = 1e-20;
pub const DEFAULT_MAX_TERMS: usize = 10_000_000;

/// Ratios at or above this are treated as algebraic rather than geometric decay.
const GEOMETRIC_RATIO_MAX: f64 = 0.999;

/// A `pFq` series `sum_r prod(num)_r / prod(den)_r * z^r / r!`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub numerator_params: Vec<f64>,
    pub denominator_params: Vec<f64>,
    pub argument: f64,
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl SeriesSpec {
    pub fn new(numerator_params: Vec<f64>, denominator_params: Vec<f64>, argument: f64) -> Self {
        Self {
            numerator_params,
            denominator_params,
            argument,
            rel_tol: DEFAULT_REL_TOL,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Sum of denominator parameters minus sum of numerator parameters.
    pub fn parametric_excess(&self) -> f64 {
        self.denominator_params.iter().sum::<f64>() - self.numerator_params.iter().sum::<f64>()
    }

    /// Terms of the series, built by the same ratio recurrence the summation uses.
    pub fn terms(&self) -> impl Iterator<Item = DoubleDouble> + '_ {
        let params = ReducedParams::from_spec(self);
        let z = self.argument;
        (0..).scan(DoubleDouble::ONE, move |term, r| {
            let current = *term;
            *term = current * params.ratio(f64::from(r)).mul_f64(z);
            Some(current)
        })
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(d) = self.denominator_params.iter().find(|&&d| !(d > 0.0)) {
            return Err(Error::Domain(format!(
                "denominator parameter {d} must be positive"
            )));
        }
        if self.numerator_params.iter().any(|n| !n.is_finite()) {
            return Err(Error::Domain("numerator parameters must be finite".into()));
        }
        if !(0.0..=1.0).contains(&self.argument) {
            return Err(Error::Domain(format!(
                "argument {} must lie in [0, 1]",
                self.argument
            )));
        }
        if !(1e-30..=1e-3).contains(&self.rel_tol) {
            return Err(Error::Domain(format!(
                "rel_tol {:e} outside [1e-30, 1e-3]",
                self.rel_tol
            )));
        }
        if self.max_terms < 10 {
            return Err(Error::Domain(format!(
                "max_terms {} below 10",
                self.max_terms
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesStatus {
    Converged,
    TermCapHit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// The same value with its double-double compensation.
    pub value_dd: DoubleDouble,
    pub terms_used: usize,
    /// Estimated omitted tail relative to `value`.
    pub tail_bound: f64,
    pub status: SeriesStatus,
}

impl SeriesResult {
    fn new(value: DoubleDouble, terms_used: usize, tail_bound: f64, status: SeriesStatus) -> Self {
        Self {
            value: value.to_f64(),
            value_dd: value,
            terms_used,
            tail_bound,
            status,
        }
    }

    /// Turns a term-cap result into [`Error::Convergence`].
    pub fn require_converged(self) -> Result<Self> {
        match self.status {
            SeriesStatus::Converged => Ok(self),
            SeriesStatus::TermCapHit => Err(Error::Convergence {
                terms: self.terms_used,
                tail_bound: self.tail_bound,
            }),
        }
    }
}

/// Parameters after cancelling equal numerator/denominator pairs, with the
/// implicit `r!` folded into the denominator list unless a unit numerator
/// parameter absorbs it.
#[derive(Debug, Clone)]
pub(crate) struct ReducedParams {
    pub num: Vec<f64>,
    pub den: Vec<f64>,
}

impl ReducedParams {
    pub fn from_spec(spec: &SeriesSpec) -> Self {
        let mut num = spec.numerator_params.clone();
        let mut den = spec.denominator_params.clone();
        den.push(1.0);
        let mut i = 0;
        while i < num.len() {
            if let Some(j) = den.iter().position(|&d| d == num[i]) {
                num.swap_remove(i);
                den.swap_remove(j);
            } else {
                i += 1;
            }
        }
        Self { num, den }
    }

    /// `(term_{r+1} / term_r) / z` as a double-double.
    #[inline]
    pub fn ratio(&self, r: f64) -> DoubleDouble {
        let rr = DoubleDouble::from_f64(r);
        let num = self
            .num
            .iter()
            .fold(DoubleDouble::ONE, |acc, &a| acc * rr.add_f64(a));
        let den = self
            .den
            .iter()
            .fold(DoubleDouble::ONE, |acc, &b| acc * rr.add_f64(b));
        num / den
    }

    /// Limit of the term ratio as r grows, for argument `z`.
    fn limiting_ratio(&self, z: f64) -> f64 {
        use std::cmp::Ordering::*;
        match self.num.len().cmp(&self.den.len()) {
            Less => 0.0,
            Equal => z,
            Greater => f64::INFINITY,
        }
    }

    fn terminates(&self) -> bool {
        self.num.iter().any(|&a| a <= 0.0 && a.fract() == 0.0)
    }
}

/// Sums the series described by `spec`.
///
/// Geometric regime (limiting ratio below 0.999): stops once the terms are
/// past their peak and both the next term and the geometric tail bound
/// `term_{N+1} / (1 - rho)` fall below `rel_tol * |sum|`.
///
/// Unit argument with positive parametric excess: terms decay algebraically,
/// so partial sums at `N0 * 4^j` are Richardson-extrapolated in powers
/// `N^-s, N^-(s+1), ...` and the reported tail bound is the change between
/// successive extrapolants.
pub fn sum_hypergeometric(spec: &SeriesSpec) -> Result<SeriesResult> {
    spec.validate()?;
    let params = ReducedParams::from_spec(spec);
    let z = spec.argument;
    if z == 0.0 {
        return Ok(SeriesResult::new(
            DoubleDouble::ONE,
            1,
            0.0,
            SeriesStatus::Converged,
        ));
    }
    let limit = params.limiting_ratio(z);
    if params.terminates() || limit < GEOMETRIC_RATIO_MAX {
        return sum_geometric(spec, &params, limit);
    }
    let excess = spec.parametric_excess();
    if limit.is_finite() && z == 1.0 && excess > 0.0 {
        return sum_algebraic(spec, &params, excess);
    }
    if limit < 1.0 {
        return sum_geometric(spec, &params, limit);
    }
    Err(Error::Divergent(format!(
        "argument {z} with parametric excess {excess} (limiting term ratio {limit})"
    )))
}

fn sum_geometric(spec: &SeriesSpec, params: &ReducedParams, limit: f64) -> Result<SeriesResult> {
    let z = spec.argument;
    let mut acc = HiPrecAccumulator::new();
    let mut term = DoubleDouble::ONE;
    let mut past_peak = false;
    let mut tail = f64::INFINITY;
    for r in 0..spec.max_terms {
        acc = acc.accumulate_dd(term)?;
        let ratio = params.ratio(r as f64).mul_f64(z);
        let next = term * ratio;
        if !next.is_finite() {
            return Err(Error::Overflow {
                exponent: term.hi.abs().ln() + ratio.hi.abs().ln(),
            });
        }
        let sum = acc.value().hi.abs();
        if next.hi == 0.0 {
            return Ok(SeriesResult::new(
                acc.value(),
                r + 1,
                0.0,
                SeriesStatus::Converged,
            ));
        }
        let rho = ratio.hi.abs();
        // Re-arms if the ratio climbs back above one.
        past_peak = rho < 1.0;
        if past_peak {
            let rho_bound = rho.max(limit);
            if rho_bound < 1.0 {
                tail = next.hi.abs() / (1.0 - rho_bound) / sum;
                if tail <= spec.rel_tol {
                    return Ok(SeriesResult::new(
                        acc.value(),
                        r + 1,
                        tail,
                        SeriesStatus::Converged,
                    ));
                }
            }
        }
        term = next;
    }
    let tail = if past_peak { tail } else { f64::INFINITY };
    Ok(SeriesResult::new(
        acc.value(),
        spec.max_terms,
        tail,
        SeriesStatus::TermCapHit,
    ))
}

fn sum_algebraic(spec: &SeriesSpec, params: &ReducedParams, excess: f64) -> Result<SeriesResult> {
    let pmax = params
        .num
        .iter()
        .chain(params.den.iter())
        .fold(1.0_f64, |m, p| m.max(p.abs()));
    let first = ((8.0 * pmax * pmax).ceil() as usize).max(1024);

    let mut acc = HiPrecAccumulator::new();
    let mut term = DoubleDouble::ONE;
    let mut checkpoint = first;
    let mut tableau: Vec<Vec<DoubleDouble>> = Vec::new();
    let mut best = (DoubleDouble::ZERO, f64::INFINITY);

    for r in 0..spec.max_terms {
        acc = acc.accumulate_dd(term)?;
        let ratio = params.ratio(r as f64);
        let next = term * ratio;
        if !next.is_finite() {
            return Err(Error::Overflow {
                exponent: term.hi.abs().ln() + ratio.hi.abs().ln(),
            });
        }
        term = next;
        if r + 1 != checkpoint {
            continue;
        }
        checkpoint *= 4;
        let row = richardson_row(tableau.last(), acc.value(), excess);
        let diag = *row.last().unwrap();
        if let Some(prev) = tableau.last() {
            let prev_diag = *prev.last().unwrap();
            let est = ((diag - prev_diag).to_f64() / diag.to_f64()).abs();
            best = (diag, est);
            if tableau.len() >= 2 && est <= spec.rel_tol {
                return Ok(SeriesResult::new(diag, r + 1, est, SeriesStatus::Converged));
            }
        }
        tableau.push(row);
    }
    let (value, est) = if best.1.is_finite() {
        best
    } else {
        (acc.value(), f64::INFINITY)
    };
    Ok(SeriesResult::new(
        value,
        spec.max_terms,
        est,
        SeriesStatus::TermCapHit,
    ))
}

/// Next Richardson row for partial sums at a 4x larger truncation index.
fn richardson_row(
    prev: Option<&Vec<DoubleDouble>>,
    partial: DoubleDouble,
    excess: f64,
) -> Vec<DoubleDouble> {
    let mut row = vec![partial];
    if let Some(prev) = prev {
        for (m, &p) in prev.iter().enumerate() {
            let factor = 4f64.powf(excess + m as f64);
            let cur = row[m];
            row.push((cur.mul_f64(factor) - p).div_f64(factor - 1.0));
        }
    }
    row
}
