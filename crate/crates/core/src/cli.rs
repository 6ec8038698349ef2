//! Text and CSV renderings behind the `hyperball` binary.
//!
//! Every command builds its whole output in memory first, so a failing row
//! never leaves partial output behind. Numbers are rounded half-to-even only
//! when formatted.

use std::fmt::Write as _;
use std::path::PathBuf;

use thiserror::Error;

use crate::density::simplex_density;
use crate::error::Error;
use crate::lobachevsky::lob;
use crate::optimize::{find_optimal_p, DEFAULT_TOL};
use crate::orthoscheme::tetra_geometry;

/// Default `p` values of the `table` command.
pub const REFERENCE_P: [f64; 6] = [7.0, 8.0, 9.0, 20.0, 50.0, 100.0];
pub const TABLE_HEADER: &str = "p,h,vol_orthoscheme,vol_hyperball_piece,density";
pub const CURVE_HEADER: &str = "p,density";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    InvalidArgument(String),
    #[error("numerical failure: {0}")]
    Numerical(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad arguments (and unusable output paths), 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidArgument(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    /// Decimals printed for computed values, 1..=15.
    pub precision: usize,
    /// Optimizer tolerance in `p`.
    pub tol: f64,
    pub output_path: Option<PathBuf>,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self { precision: 5, tol: DEFAULT_TOL, output_path: None }
    }
}

impl CliConfig {
    pub fn validate(&self) -> CliResult<()> {
        if !(1..=15).contains(&self.precision) {
            return Err(CliError::InvalidArgument(format!(
                "precision must be between 1 and 15, got {}",
                self.precision
            )));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(CliError::InvalidArgument(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    fn fixed(&self, value: f64) -> String {
        format_fixed(value, self.precision)
    }
}

/// Fixed-point rendering with ties to even and no negative zero.
pub fn format_fixed(value: f64, precision: usize) -> String {
    let s = format!("{value:.precision$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

fn parse_real(token: &str) -> CliResult<f64> {
    let t = token.trim();
    t.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::InvalidArgument(format!("not a finite number: {t:?}")))
}

/// Comma-separated list of reals; the empty string is the empty list.
pub fn parse_p_list(s: &str) -> CliResult<Vec<f64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_real).collect()
}

/// `lo:hi:step`, inclusive of `hi` up to rounding of the step count.
pub fn parse_p_range(s: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts[..] else {
        return Err(CliError::InvalidArgument(format!(
            "p range must look like lo:hi:step, got {s:?}"
        )));
    };
    let (lo, hi, step) = (parse_real(lo)?, parse_real(hi)?, parse_real(step)?);
    if !(step > 0.0) || hi < lo {
        return Err(CliError::InvalidArgument(format!(
            "p range needs lo <= hi and a positive step, got {s:?}"
        )));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| lo + step * i as f64).collect())
}

fn check_p(p: f64) -> CliResult<()> {
    if p.is_finite() && p > 6.0 {
        Ok(())
    } else {
        Err(CliError::InvalidArgument(format!("p must be a finite number above 6, got {p}")))
    }
}

/// Per-orthoscheme CSV, one row per `p` in input order.
pub fn cmd_table(p_list: &[f64], config: &CliConfig) -> CliResult<String> {
    config.validate()?;
    p_list.iter().try_for_each(|&p| check_p(p))?;
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for &p in p_list {
        let row = simplex_density(p)?;
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            p,
            config.fixed(row.h),
            config.fixed(row.vol_orthoscheme),
            config.fixed(row.vol_piece),
            config.fixed(row.delta)
        );
    }
    Ok(out)
}

/// Equally spaced `p,density` samples over `[from, to]`, both ends included.
pub fn cmd_curve(from: f64, to: f64, samples: usize, config: &CliConfig) -> CliResult<String> {
    config.validate()?;
    check_p(from)?;
    if !(to > from) || !to.is_finite() {
        return Err(CliError::InvalidArgument(format!(
            "curve range needs 6 < from < to, got from = {from}, to = {to}"
        )));
    }
    if samples < 2 {
        return Err(CliError::InvalidArgument(format!(
            "curve needs at least 2 samples, got {samples}"
        )));
    }
    let mut out = String::from(CURVE_HEADER);
    out.push('\n');
    let last = (samples - 1) as f64;
    for i in 0..samples {
        let p = if i == samples - 1 { to } else { from + (to - from) * i as f64 / last };
        let row = simplex_density(p)?;
        let _ = writeln!(out, "{},{}", p, config.fixed(row.delta));
    }
    Ok(out)
}

pub fn cmd_optimize(config: &CliConfig) -> CliResult<String> {
    config.validate()?;
    let r = find_optimal_p(config.tol)?;
    Ok(format!(
        "p_opt={} delta_opt={} iterations={}\n",
        config.fixed(r.p_opt),
        config.fixed(r.delta_opt),
        r.iterations
    ))
}

/// `key=value` lines describing the truncated tetrahedron for one `p`.
pub fn cmd_volume(p: f64, config: &CliConfig) -> CliResult<String> {
    config.validate()?;
    check_p(p)?;
    let g = tetra_geometry(p)?;
    let row = simplex_density(p)?;
    let f = |v| config.fixed(v);
    let mut out = String::new();
    let _ = writeln!(out, "p={p}");
    for (key, value) in [
        ("h", g.h),
        ("vol_orthoscheme", g.vol_orthoscheme),
        ("vol_tetra", g.vol_tetra),
        ("vol_hyperball_piece", row.vol_piece),
        ("density", row.delta),
        ("tri_area", g.tri_area),
        ("triangle_face_area", g.triangle_face_area()),
        ("hexagon_area", g.hexagon_area),
        ("surface_area", g.surface_area),
        ("omega", g.omega),
    ] {
        let _ = writeln!(out, "{key}={}", f(value));
    }
    Ok(out)
}

pub fn cmd_lob(x: f64, config: &CliConfig) -> CliResult<String> {
    config.validate()?;
    let value = lob(x).map_err(|e| CliError::InvalidArgument(e.to_string()))?;
    Ok(format!("{}\n", config.fixed(value)))
}

/// Writes to `config.output_path`, or standard output when unset.
pub fn emit(text: &str, config: &CliConfig) -> CliResult<()> {
    use std::io::Write;
    match &config.output_path {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
