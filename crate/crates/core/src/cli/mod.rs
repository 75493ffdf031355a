//! Table regeneration, point evaluation and k-sweeps behind the `hypasym` binary.

mod presets;

pub use presets::{table1_cells, table2_cells, Ratio};

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::thread;

use crate::asymptotic::{s_asym, DerivedParams, Variant};
use crate::error::{Error, Result};
use crate::series::{f_m_with, s_oracle_with, DEFAULT_MAX_TERMS, DEFAULT_REL_TOL};
use crate::uniform::{f0_uniform, Regime};

/// Loosest oracle tolerance accepted for the built-in presets.
pub const PRESET_MAX_ORACLE_TOL: f64 = 1e-16;

pub const CSV_HEADER: &str =
    "k,x,t,M,variant,oracle,approx,rel_error,abs_error,paper_value,match_ratio,status";

/// Process exit code for an error class.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Convergence { .. } | Error::Overflow { .. } => 3,
        _ => 2,
    }
}

/// Parses a decimal or a rational `p/q`.
pub fn parse_number(s: &str) -> Result<f64> {
    let s = s.trim();
    let bad = || Error::Domain(format!("cannot parse {s:?} as a number"));
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(Error::Domain(format!("zero denominator in {s:?}")));
            }
            p / q
        }
        None => s.parse().map_err(|_| bad())?,
    };
    if !v.is_finite() {
        return Err(bad());
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorMetric {
    Absolute,
    Relative,
}

/// A reference error value and the metric it is quoted in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceValue {
    pub value: f64,
    pub metric: ErrorMetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    /// Truncated expansion of S against the S oracle.
    Asym(Variant),
    /// Uniform d_0 approximation of F_0 against the F_0 series.
    UniformD0,
}

impl CellKind {
    pub fn label(&self) -> &'static str {
        match self {
            CellKind::Asym(v) => v.as_str(),
            CellKind::UniformD0 => "uniform_d0",
        }
    }

    /// Metric shown in markdown tables.
    pub fn display_metric(&self) -> ErrorMetric {
        match self {
            CellKind::Asym(_) => ErrorMetric::Absolute,
            CellKind::UniformD0 => ErrorMetric::Relative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellSpec {
    pub k: f64,
    pub x: f64,
    pub t: f64,
    pub order: u32,
    pub kind: CellKind,
    pub reference: Option<ReferenceValue>,
}

impl CellSpec {
    /// Parses `k,x,t,M[,variant]`; `variant` may also be `uniform_d0`.
    pub fn parse(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        if !(4..=5).contains(&fields.len()) {
            return Err(Error::Domain(format!("cell {s:?} needs k,x,t,M[,variant]")));
        }
        let k = parse_number(fields[0])?;
        let x = parse_number(fields[1])?;
        let t = parse_number(fields[2])?;
        let order: u32 = fields[3].parse().map_err(|_| {
            Error::Domain(format!(
                "order {:?} must be a non-negative integer",
                fields[3]
            ))
        })?;
        let kind = match fields.get(4) {
            Some(&"uniform_d0") => CellKind::UniformD0,
            Some(v) => CellKind::Asym(v.parse()?),
            None => CellKind::Asym(Variant::default_for(t)),
        };
        Ok(Self {
            k,
            x,
            t,
            order,
            kind,
            reference: None,
        })
    }

    /// Parses a `;`-separated list of cells.
    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        let cells = s
            .split(';')
            .filter(|c| !c.trim().is_empty())
            .map(Self::parse)
            .collect::<Result<Vec<_>>>()?;
        if cells.is_empty() {
            return Err(Error::Domain("empty cell list".into()));
        }
        Ok(cells)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Table1,
    Table2,
    Custom,
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(Preset::Table1),
            "table2" => Ok(Preset::Table2),
            "custom" => Ok(Preset::Custom),
            _ => Err(Error::Domain(format!("unknown preset {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Domain(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub preset: Preset,
    pub cells: Vec<CellSpec>,
    pub format: Format,
    pub oracle_tol: f64,
    pub max_terms: usize,
}

impl TableSpec {
    /// Builds a spec; `cells` is required for [`Preset::Custom`] and ignored otherwise.
    pub fn new(
        preset: Preset,
        cells: Option<&str>,
        format: Format,
        oracle_tol: f64,
    ) -> Result<Self> {
        let cells = match (preset, cells) {
            (Preset::Table1, _) => table1_cells(),
            (Preset::Table2, _) => table2_cells(),
            (Preset::Custom, Some(c)) => CellSpec::parse_list(c)?,
            (Preset::Custom, None) => {
                return Err(Error::Domain("custom preset needs --cells".into()))
            }
        };
        if preset != Preset::Custom && !(oracle_tol <= PRESET_MAX_ORACLE_TOL) {
            return Err(Error::Domain(format!(
                "preset tables need oracle_tol <= {PRESET_MAX_ORACLE_TOL:e}, got {oracle_tol:e}"
            )));
        }
        Ok(Self {
            preset,
            cells,
            format,
            oracle_tol,
            max_terms: DEFAULT_MAX_TERMS,
        })
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellReport {
    pub cell: CellSpec,
    pub oracle_value: f64,
    pub approx_value: f64,
    pub rel_error: f64,
    pub abs_error: f64,
    pub paper_value: Option<f64>,
    /// Computed error over the reference one, in the reference metric.
    pub match_ratio: Option<f64>,
    pub error: Option<Error>,
}

impl CellReport {
    fn failed(cell: CellSpec, err: Error) -> Self {
        Self {
            cell,
            oracle_value: f64::NAN,
            approx_value: f64::NAN,
            rel_error: f64::NAN,
            abs_error: f64::NAN,
            paper_value: cell.reference.map(|p| p.value),
            match_ratio: None,
            error: Some(err),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }

    pub fn error_in(&self, metric: ErrorMetric) -> f64 {
        match metric {
            ErrorMetric::Absolute => self.abs_error,
            ErrorMetric::Relative => self.rel_error,
        }
    }
}

pub fn evaluate_cell(cell: &CellSpec, oracle_tol: f64, max_terms: usize) -> CellReport {
    match evaluate_values(cell, oracle_tol, max_terms) {
        Ok((oracle, approx)) => {
            let abs_error = (approx - oracle).abs();
            let rel_error = abs_error / oracle.abs();
            let mut report = CellReport {
                cell: *cell,
                oracle_value: oracle,
                approx_value: approx,
                rel_error,
                abs_error,
                paper_value: None,
                match_ratio: None,
                error: None,
            };
            if let Some(p) = cell.reference {
                report.paper_value = Some(p.value);
                report.match_ratio = Some(report.error_in(p.metric) / p.value);
            }
            report
        }
        Err(e) => CellReport::failed(*cell, e),
    }
}

fn evaluate_values(cell: &CellSpec, oracle_tol: f64, max_terms: usize) -> Result<(f64, f64)> {
    let p = DerivedParams::new(cell.k, cell.x, cell.t)?;
    match cell.kind {
        CellKind::Asym(variant) => {
            let oracle = s_oracle_with(cell.k, cell.x, cell.t, oracle_tol, max_terms)?
                .require_converged()?;
            let approx = s_asym(&p, cell.order, variant)?;
            Ok((oracle.value, approx.value))
        }
        CellKind::UniformD0 => {
            if cell.order != 0 {
                return Err(Error::Domain(format!(
                    "uniform cells implement d_0 only (M = 0), got M = {}",
                    cell.order
                )));
            }
            let oracle = f_m_with(0, &p, oracle_tol, max_terms)?.require_converged()?;
            let approx = f0_uniform(&p)?;
            Ok((oracle.value, approx.value))
        }
    }
}

/// Evaluates every cell, concurrently, returning reports in input order.
pub fn run_table(spec: &TableSpec) -> Vec<CellReport> {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(spec.cells.len().max(1));
    let chunk = spec.cells.len().div_ceil(workers).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = spec
            .cells
            .chunks(chunk)
            .map(|cells| {
                s.spawn(move || {
                    cells
                        .iter()
                        .map(|c| evaluate_cell(c, spec.oracle_tol, spec.max_terms))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("cell worker panicked"))
            .collect()
    })
}

pub fn render(spec: &TableSpec, reports: &[CellReport]) -> String {
    match spec.format {
        Format::Csv => render_csv(reports),
        Format::Markdown => render_markdown(spec.preset, reports),
    }
}

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_sci(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_default()
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\"").replace('\n', " "))
    } else {
        s.to_string()
    }
}

pub fn render_csv(reports: &[CellReport]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let c = &r.cell;
        let status = match &r.error {
            None => "ok".to_string(),
            Some(e) => csv_quote(&e.to_string()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            c.k,
            c.x,
            c.t,
            c.order,
            c.kind.label(),
            sci(r.oracle_value),
            sci(r.approx_value),
            sci(r.rel_error),
            sci(r.abs_error),
            opt_sci(r.paper_value),
            opt_sci(r.match_ratio),
            status
        );
    }
    out
}

fn md(v: f64) -> String {
    format!("{v:.3e}")
}

/// One row per M, one column per (k, x, t, kind). The table2 preset also lists the
/// M = 1, 2 rows, which are unavailable.
pub fn render_markdown(preset: Preset, reports: &[CellReport]) -> String {
    let mut columns: Vec<(f64, f64, f64, CellKind)> = Vec::new();
    for r in reports {
        let key = (r.cell.k, r.cell.x, r.cell.t, r.cell.kind);
        if !columns.contains(&key) {
            columns.push(key);
        }
    }
    let mut rows: Vec<u32> = reports.iter().map(|r| r.cell.order).collect();
    if preset == Preset::Table2 {
        rows.extend([0, 1, 2]);
    }
    rows.sort_unstable();
    rows.dedup();

    let find = |col: &(f64, f64, f64, CellKind), m: u32| {
        reports
            .iter()
            .find(|r| (r.cell.k, r.cell.x, r.cell.t, r.cell.kind) == *col && r.cell.order == m)
    };
    let has_reference = reports.iter().any(|r| r.paper_value.is_some());

    let mut out = String::new();
    let header: Vec<String> = columns
        .iter()
        .map(|(k, x, t, kind)| format!("k={k}, x={x}, t={}, {}", short(*t), kind.label()))
        .collect();
    let _ = writeln!(out, "| M | {} |", header.join(" | "));
    let _ = writeln!(out, "|---|{}", "---|".repeat(columns.len()));
    for &m in &rows {
        let cells: Vec<String> = columns
            .iter()
            .map(|col| match find(col, m) {
                Some(r) if r.is_ok() => md(r.error_in(col.3.display_metric())),
                Some(_) => "fail".to_string(),
                None => "n/a".to_string(),
            })
            .collect();
        let _ = writeln!(out, "| {m} | {} |", cells.join(" | "));
    }
    if has_reference {
        out.push('\n');
        let _ = writeln!(out, "| M (reference) | {} |", header.join(" | "));
        let _ = writeln!(out, "|---|{}", "---|".repeat(columns.len()));
        for &m in &rows {
            let cells: Vec<String> = columns
                .iter()
                .map(|col| match find(col, m).and_then(|r| r.paper_value) {
                    Some(v) => md(v),
                    None => "n/a".to_string(),
                })
                .collect();
            let _ = writeln!(out, "| {m} | {} |", cells.join(" | "));
        }
    }
    out
}

fn short(v: f64) -> String {
    let s = format!("{v}");
    if s.len() > 8 {
        format!("{v:.4}")
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Asym,
    UniformF0,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "asym" => Ok(Method::Asym),
            "uniform_f0" | "uniform" => Ok(Method::UniformF0),
            _ => Err(Error::Domain(format!("unknown method {s:?}"))),
        }
    }
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Asym => "asym",
            Method::UniformF0 => "uniform_f0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalRequest {
    pub k: f64,
    pub x: f64,
    pub t: f64,
    pub method: Method,
    pub order: u32,
    pub variant: Option<Variant>,
    pub oracle_tol: f64,
    pub max_terms: usize,
}

impl EvalRequest {
    pub fn new(k: f64, x: f64, t: f64, method: Method) -> Self {
        Self {
            k,
            x,
            t,
            method,
            order: 0,
            variant: None,
            oracle_tol: DEFAULT_REL_TOL,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub method: Method,
    pub k: f64,
    pub x: f64,
    pub t: f64,
    /// "S" or "F_0".
    pub target: &'static str,
    pub value: f64,
    pub oracle_value: f64,
    pub oracle_terms: usize,
    pub oracle_tail_bound: f64,
    pub abs_error: Option<f64>,
    pub rel_error: Option<f64>,
    pub order: Option<u32>,
    pub variant: Option<Variant>,
    pub regime: Option<Regime>,
    pub regime_warning: bool,
    pub rerouted: bool,
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "method: {}", self.method.as_str())?;
        writeln!(f, "target: {}", self.target)?;
        writeln!(f, "k: {}", self.k)?;
        writeln!(f, "x: {}", self.x)?;
        writeln!(f, "t: {}", self.t)?;
        if let Some(m) = self.order {
            writeln!(f, "order: {m}")?;
        }
        if let Some(v) = self.variant {
            writeln!(f, "variant: {v}")?;
        }
        writeln!(f, "value: {}", sci(self.value))?;
        if self.method != Method::Oracle {
            writeln!(f, "oracle: {}", sci(self.oracle_value))?;
            writeln!(f, "abs_error: {}", opt_sci(self.abs_error))?;
            writeln!(f, "rel_error: {}", opt_sci(self.rel_error))?;
        }
        writeln!(f, "terms_used: {}", self.oracle_terms)?;
        writeln!(f, "tail_bound: {:.3e}", self.oracle_tail_bound)?;
        if let Some(r) = self.regime {
            writeln!(f, "regime: {}", r.as_str())?;
            writeln!(f, "coalesced: {}", r == Regime::Coalesced)?;
        }
        writeln!(f, "regime_warning: {}", self.regime_warning)?;
        writeln!(f, "rerouted: {}", self.rerouted)
    }
}

pub fn eval_point(req: &EvalRequest) -> Result<EvalReport> {
    let mut report = EvalReport {
        method: req.method,
        k: req.k,
        x: req.x,
        t: req.t,
        target: "S",
        value: f64::NAN,
        oracle_value: f64::NAN,
        oracle_terms: 0,
        oracle_tail_bound: 0.0,
        abs_error: None,
        rel_error: None,
        order: None,
        variant: None,
        regime: None,
        regime_warning: false,
        rerouted: false,
    };
    let oracle = match req.method {
        Method::Oracle | Method::Asym => {
            s_oracle_with(req.k, req.x, req.t, req.oracle_tol, req.max_terms)?
                .require_converged()?
        }
        Method::UniformF0 => {
            let p = DerivedParams::new(req.k, req.x, req.t)?;
            report.target = "F_0";
            f_m_with(0, &p, req.oracle_tol, req.max_terms)?.require_converged()?
        }
    };
    report.oracle_value = oracle.value;
    report.oracle_terms = oracle.terms_used;
    report.oracle_tail_bound = oracle.tail_bound;
    match req.method {
        Method::Oracle => report.value = oracle.value,
        Method::Asym => {
            let p = DerivedParams::new(req.k, req.x, req.t)?;
            let variant = req.variant.unwrap_or_else(|| Variant::default_for(req.t));
            let r = s_asym(&p, req.order, variant)?;
            report.value = r.value;
            report.order = Some(req.order);
            report.variant = Some(r.variant);
            report.regime_warning = r.regime_warning;
            report.rerouted = r.rerouted;
        }
        Method::UniformF0 => {
            let p = DerivedParams::new(req.k, req.x, req.t)?;
            let r = f0_uniform(&p)?;
            report.value = r.value;
            report.order = Some(0);
            report.regime = Some(r.regime);
        }
    }
    if req.method != Method::Oracle {
        let abs = (report.value - oracle.value).abs();
        report.abs_error = Some(abs);
        report.rel_error = Some(abs / oracle.value.abs());
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub k_min: f64,
    pub k_max: f64,
    pub steps: usize,
    pub x: f64,
    pub t: f64,
    pub order: u32,
    pub variant: Option<Variant>,
    pub oracle_tol: f64,
    pub max_terms: usize,
}

impl SweepSpec {
    pub fn new(k_min: f64, k_max: f64, steps: usize, x: f64, t: f64, order: u32) -> Self {
        Self {
            k_min,
            k_max,
            steps,
            x,
            t,
            order,
            variant: None,
            oracle_tol: DEFAULT_REL_TOL,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }

    /// Log-spaced k values from `k_min` to `k_max` inclusive.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.steps;
        let ratio = (self.k_max / self.k_min).ln();
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.k_max
                } else {
                    self.k_min * (ratio * i as f64 / (n - 1) as f64).exp()
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub k: f64,
    pub rel_error: f64,
    /// d ln(rel_error) / d ln k by finite differences on the grid.
    pub local_slope: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Least-squares slope of ln(rel_error) against ln k.
    pub fitted_slope: f64,
}

pub fn sweep(spec: &SweepSpec) -> Result<SweepReport> {
    if !(spec.t > 0.0 && spec.t <= 1.0) {
        return Err(Error::Domain(format!("t = {} must lie in (0, 1]", spec.t)));
    }
    if !(spec.k_min >= 10.0 / spec.t) {
        return Err(Error::Domain(format!(
            "k_min = {} must be at least 10/t = {}",
            spec.k_min,
            10.0 / spec.t
        )));
    }
    if !(spec.k_max > spec.k_min) || !spec.k_max.is_finite() {
        return Err(Error::Domain(format!(
            "k_max = {} must exceed k_min = {}",
            spec.k_max, spec.k_min
        )));
    }
    if spec.steps < 2 {
        return Err(Error::Domain(format!(
            "steps = {} must be at least 2",
            spec.steps
        )));
    }
    let ks = spec.grid();
    let errors = thread::scope(|s| {
        let handles: Vec<_> = ks
            .iter()
            .map(|&k| {
                s.spawn(move || {
                    let req = EvalRequest {
                        order: spec.order,
                        variant: spec.variant,
                        oracle_tol: spec.oracle_tol,
                        max_terms: spec.max_terms,
                        ..EvalRequest::new(k, spec.x, spec.t, Method::Asym)
                    };
                    eval_point(&req).map(|r| r.rel_error.unwrap_or(f64::NAN))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect::<Result<Vec<f64>>>()
    })?;
    let lk: Vec<f64> = ks.iter().map(|k| k.ln()).collect();
    let le: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let n = ks.len();
    let rows = (0..n)
        .map(|i| {
            let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n - 1));
            SweepRow {
                k: ks[i],
                rel_error: errors[i],
                local_slope: (le[hi] - le[lo]) / (lk[hi] - lk[lo]),
            }
        })
        .collect();
    Ok(SweepReport {
        rows,
        fitted_slope: fit_slope(&lk, &le),
    })
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}

pub fn render_sweep_csv(report: &SweepReport) -> String {
    let mut out = String::from("k,rel_error,local_slope\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            sci(r.k),
            sci(r.rel_error),
            sci(r.local_slope)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_number("1/3").unwrap(), 1.0 / 3.0);
        assert_eq!(parse_number(" 0.75 ").unwrap(), 0.75);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("abc").is_err());
    }

    #[test]
    fn parses_cells() {
        let c = CellSpec::parse("100,0.5,3/4,2").unwrap();
        assert_eq!((c.k, c.x, c.t, c.order), (100.0, 0.5, 0.75, 2));
        assert_eq!(c.kind, CellKind::Asym(Variant::ExpandedAm));
        let c = CellSpec::parse("150, 0.45, 1/3, 0, uniform_d0").unwrap();
        assert_eq!(c.kind, CellKind::UniformD0);
        assert!(CellSpec::parse("100,0.5").is_err());
        assert_eq!(
            CellSpec::parse_list("100,0.5,1,0;200,0.5,1,1")
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn preset_tolerance_guard() {
        assert!(TableSpec::new(Preset::Table1, None, Format::Csv, 1e-10).is_err());
        assert!(TableSpec::new(Preset::Custom, None, Format::Csv, 1e-20).is_err());
    }

    #[test]
    fn grid_is_log_spaced() {
        let g = SweepSpec::new(100.0, 800.0, 4, 0.5, 0.75, 0).grid();
        assert_eq!(g[0], 100.0);
        assert_eq!(g[3], 800.0);
        assert!((g[1] - 200.0).abs() < 1e-9 && (g[2] - 400.0).abs() < 1e-9);
    }

    #[test]
    fn slope_of_a_line() {
        assert!((fit_slope(&[0.0, 1.0, 2.0], &[1.0, -1.0, -3.0]) + 2.0).abs() < 1e-15);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Domain(String::new())), 2);
        assert_eq!(
            exit_code(&Error::Convergence {
                terms: 1,
                tail_bound: 1.0
            }),
            3
        );
    }
}
