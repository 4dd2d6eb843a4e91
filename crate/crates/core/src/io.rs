//! CSV/JSON formats and atomic file output.
//!
//! Floats are written with 17 significant digits so that every value
//! round-trips exactly; infinities are written as `inf` / `-inf`.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::scan::{ContourGrid, CrossSectionTrace, QScan};

#[derive(Error, Debug)]
pub enum IoError {
    #[error("I/O error on {path}: {source}")]
    Io { path: String, source: io::Error },

    #[error("malformed data: {0}")]
    Format(String),
}

/// Formats a float with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{v:.16e}")
    }
}

fn parse_f64(field: &str, line: usize) -> Result<f64, IoError> {
    let t = field.trim();
    match t {
        "inf" | "+inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => t
            .parse::<f64>()
            .map_err(|_| IoError::Format(format!("line {line}: `{t}` is not a number"))),
    }
}

pub fn trace_to_csv(trace: &CrossSectionTrace) -> String {
    let mut out = String::from("energy,sigma\n");
    for (e, s) in trace.energies().iter().zip(trace.sigma()) {
        let _ = writeln!(out, "{},{}", fmt_f64(*e), fmt_f64(*s));
    }
    out
}

pub fn qscan_to_csv(scan: &QScan) -> String {
    let mut out = String::from("energy,q\n");
    for (e, q) in scan.energies.iter().zip(&scan.q) {
        let _ = writeln!(out, "{},{}", fmt_f64(*e), fmt_f64(*q));
    }
    out
}

/// First row: empty corner cell, then the energy axis. Each following row: delta, then sigma values.
pub fn contour_to_csv(grid: &ContourGrid) -> String {
    let mut out = String::new();
    for e in &grid.energies {
        out.push(',');
        out.push_str(&fmt_f64(*e));
    }
    out.push('\n');
    for (i, d) in grid.deltas.iter().enumerate() {
        out.push_str(&fmt_f64(*d));
        for s in grid.row(i) {
            out.push(',');
            out.push_str(&fmt_f64(*s));
        }
        out.push('\n');
    }
    out
}

/// Reads a two-column `energy,sigma` CSV with header.
pub fn read_trace_csv<R: Read>(reader: R) -> Result<CrossSectionTrace, IoError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| IoError::Format(e.to_string()))?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| IoError::Format(format!("missing `{name}` column in header")))
    };
    let (ie, is) = (col("energy")?, col("sigma")?);
    let (mut energies, mut sigma) = (Vec::new(), Vec::new());
    for (n, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| IoError::Format(e.to_string()))?;
        let line = n + 2;
        let get = |i: usize| {
            rec.get(i)
                .ok_or_else(|| IoError::Format(format!("line {line}: missing field")))
        };
        energies.push(parse_f64(get(ie)?, line)?);
        sigma.push(parse_f64(get(is)?, line)?);
    }
    CrossSectionTrace::from_samples(energies, sigma).map_err(|e| IoError::Format(e.to_string()))
}

/// Writes `contents` to `path` through a temporary file in the same directory,
/// so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), IoError> {
    let wrap = |source: io::Error| IoError::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(wrap)?;
    tmp.write_all(contents).map_err(wrap)?;
    tmp.as_file().sync_all().map_err(wrap)?;
    tmp.persist(path).map_err(|e| wrap(e.error))?;
    Ok(())
}
