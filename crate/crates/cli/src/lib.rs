//! Rendering for the `hyperpack` command line tool.
//!
//! Every command is a pure function from its arguments to the text it
//! prints, so the binary is a thin shell around this module and the output is
//! reproducible byte for byte.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must fail the gate

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use hyperpack::optimize::{linspace, maximize, DEFAULT_BRACKET};
use hyperpack::{density, DensityPoint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Parameters of the tabulated rows.
pub const TABLE_PARAMETERS: [f64; 6] = [7.0, 8.0, 9.0, 20.0, 50.0, 100.0];

/// `optimize` exits nonzero unless the optimum density clears this value.
pub const SANITY_DENSITY: f64 = 0.85;

/// Header line of the curve CSV.
pub const CSV_HEADER: &str = "p,h,vol_orthoscheme,vol_piece,delta";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] hyperpack::Error),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("optimum density {0:.5} does not exceed {SANITY_DENSITY}")]
    SanityGate(f64),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::InvalidRange(_) => 3,
            CliError::Io(_) | CliError::Csv(_) => 4,
            CliError::SanityGate(_) => 5,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// One row of the density curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub p: f64,
    pub h: f64,
    pub vol_orthoscheme: f64,
    pub vol_piece: f64,
    pub delta: f64,
}

impl From<DensityPoint> for CurveRecord {
    fn from(d: DensityPoint) -> Self {
        Self {
            p: d.p,
            h: d.height,
            vol_orthoscheme: d.vol_orthoscheme,
            vol_piece: d.vol_hyperball_piece,
            delta: d.delta,
        }
    }
}

/// `density --p <p> [--json]`
pub fn render_density(p: f64, json: bool) -> Result<String> {
    let d = density(p)?;
    if json {
        let record = CurveRecord::from(d);
        let mut out = serde_json::to_string_pretty(&record).expect("plain struct serializes");
        out.push('\n');
        Ok(out)
    } else {
        Ok(format!(
            "h={:.5} VolO={:.5} piece={:.5} delta={:.5}\n",
            d.height, d.vol_orthoscheme, d.vol_hyperball_piece, d.delta
        ))
    }
}

/// `table`: the tabulated rows plus the `p → ∞` limit.
pub fn render_table() -> Result<String> {
    let mut out = String::new();
    writeln!(
        out,
        "{:>8}  {:>8}  {:>8}  {:>10}  {:>8}",
        "p", "h(p)", "Vol(O)", "Vol(piece)", "delta"
    )
    .unwrap();
    let rows = TABLE_PARAMETERS
        .iter()
        .map(|&p| density(p))
        .chain(std::iter::once(DensityPoint::asymptotic()));
    for row in rows {
        let row = row?;
        let label = if row.p.is_finite() {
            format!("{}", row.p)
        } else {
            "inf".to_string()
        };
        writeln!(
            out,
            "{:>8}  {:>8.5}  {:>8.5}  {:>10.5}  {:>8.5}",
            label, row.height, row.vol_orthoscheme, row.vol_hyperball_piece, row.delta
        )
        .unwrap();
    }
    Ok(out)
}

/// `optimize [--tol <tol>]`. The text is returned even when the sanity gate
/// fails so the caller can still print it.
pub fn render_optimize(tol: f64) -> Result<(String, Option<CliError>)> {
    let (lo, hi) = DEFAULT_BRACKET;
    let r = maximize(lo, hi, tol)?;
    let text = format!(
        "p_opt={:.5} delta_opt={:.5} iterations={} bracket=[{}, {}]\n",
        r.p_opt, r.delta_opt, r.iterations, r.bracket.0, r.bracket.1
    );
    let gate = (!(r.delta_opt > SANITY_DENSITY)).then_some(CliError::SanityGate(r.delta_opt));
    Ok((text, gate))
}

/// Evenly spaced density records on `[from, to]`.
pub fn curve_records(from: f64, to: f64, steps: usize) -> Result<Vec<CurveRecord>> {
    if !(from.is_finite() && to.is_finite() && from > 6.0 && from < to) {
        return Err(CliError::InvalidRange(format!(
            "need 6 < from < to, got from={from} to={to}"
        )));
    }
    if steps < 2 {
        return Err(CliError::InvalidRange(format!(
            "need steps >= 2, got {steps}"
        )));
    }
    linspace(from, to, steps)
        .into_iter()
        .map(|p| Ok(density(p)?.into()))
        .collect()
}

/// CSV text with the fixed header and one line per record.
pub fn render_curve_csv(records: &[CurveRecord]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in records {
        writer.write_record(
            [r.p, r.h, r.vol_orthoscheme, r.vol_piece, r.delta].map(|v| v.to_string()),
        )?;
    }
    let body = writer.into_inner().map_err(|e| e.into_error())?;
    let mut out = String::with_capacity(CSV_HEADER.len() + 1 + body.len());
    out.push_str(CSV_HEADER);
    out.push('\n');
    out.push_str(std::str::from_utf8(&body).expect("numbers are ASCII"));
    Ok(out)
}

pub fn parse_curve_csv(text: &str) -> Result<Vec<CurveRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers()?.iter().collect::<Vec<_>>().join(",");
    if header != CSV_HEADER {
        return Err(CliError::InvalidRange(format!(
            "unexpected header {header:?}"
        )));
    }
    Ok(reader
        .deserialize()
        .collect::<Result<Vec<CurveRecord>, _>>()?)
}

/// `curve --from --to --steps --out`: writes the CSV and returns a one-line
/// summary.
pub fn run_curve(from: f64, to: f64, steps: usize, out: &Path) -> Result<String> {
    let records = curve_records(from, to, steps)?;
    std::fs::write(out, render_curve_csv(&records)?)?;
    let peak = records
        .iter()
        .max_by(|a, b| a.delta.total_cmp(&b.delta))
        .expect("at least two records");
    Ok(format!(
        "wrote {} rows to {}; max delta={:.5} at p={:.5}\n",
        records.len(),
        out.display(),
        peak.delta,
        peak.p
    ))
}

/// `limits`: approach to the horoball bound as `p → 6` and the decay for
/// large `p`.
pub fn render_limits() -> Result<String> {
    let bound = hyperpack::BOROCZKY_FLORIAN_DENSITY;
    let mut out = String::new();
    writeln!(out, "p -> 6 (reference {bound:.5})").unwrap();
    for k in 1..=4 {
        let d = density(6.0 + 10f64.powi(-k))?;
        writeln!(
            out,
            "  p=6+1e-{k} delta={:.5} |delta-ref|={:.1e}",
            d.delta,
            (d.delta - bound).abs()
        )
        .unwrap();
    }
    writeln!(out, "p -> inf").unwrap();
    for p in [1e2, 1e3, 1e4] {
        let d = density(p)?;
        writeln!(out, "  p={p:e} delta={:.5} h={:.5}", d.delta, d.height).unwrap();
    }
    let limit = DensityPoint::asymptotic()?;
    writeln!(out, "  VolO(alpha01=0)={:.5}", limit.vol_orthoscheme).unwrap();
    Ok(out)
}
