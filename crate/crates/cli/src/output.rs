//! JSON, CSV and plain-text renderings of the command results.

use std::io::Write;

use serde::{Deserialize, Serialize};
use tridiag_pow::{c64, ComplexScalar, DenseMatrix, PowerResult, SpectralData};

use crate::complex_lit::{format_complex, format_complex_fixed};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for JsonComplex {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<JsonComplex> for ComplexScalar {
    fn from(z: JsonComplex) -> Self {
        c64(z.re, z.im)
    }
}

fn json_rows(m: &DenseMatrix) -> Vec<Vec<JsonComplex>> {
    m.rows()
        .map(|r| r.iter().map(|&z| z.into()).collect())
        .collect()
}

/// Serialized form of a computed power.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PowerJson {
    pub family: String,
    pub n: usize,
    pub s: i64,
    pub path: String,
    pub entries: Vec<Vec<JsonComplex>>,
}

impl PowerJson {
    pub fn from_result(r: &PowerResult) -> Self {
        Self {
            family: r.spec.family().short_name().to_string(),
            n: r.spec.n(),
            s: r.exponent,
            path: r.path.as_str().to_string(),
            entries: json_rows(&r.matrix),
        }
    }

    pub fn to_matrix(&self) -> Result<DenseMatrix, CliError> {
        let rows: Vec<Vec<ComplexScalar>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&z| z.into()).collect())
            .collect();
        DenseMatrix::from_rows(&rows).map_err(CliError::from)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenJson {
    pub family: String,
    pub n: usize,
    pub eigenvalues: Vec<JsonComplex>,
    pub nodes: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exchange_parity: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_eigenvalues: Option<Vec<JsonComplex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<JsonComplex>>>,
}

impl EigenJson {
    pub fn from_data(d: &SpectralData, with_vectors: bool) -> Self {
        Self {
            family: d.spec().family().short_name().to_string(),
            n: d.n(),
            eigenvalues: d.eigenvalues().iter().map(|&z| z.into()).collect(),
            nodes: d.nodes().to_vec(),
            exchange_parity: d.exchange_parity().map(<[f64]>::to_vec),
            matrix_eigenvalues: d
                .exchange_parity()
                .map(|_| d.matrix_eigenvalues().into_iter().map(Into::into).collect()),
            vectors: with_vectors.then(|| json_rows(d.vec_matrix())),
        }
    }
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Matrix as CSV: header `c1,...,cn`, one record per row.
pub fn write_matrix_csv(out: &mut dyn Write, m: &DenseMatrix) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record((1..=m.dim()).map(|j| format!("c{j}")))?;
    for row in m.rows() {
        w.write_record(row.iter().map(|&z| format_complex(z)))?;
    }
    w.flush()?;
    Ok(())
}

/// Decimal places in `--format pretty` output.
pub const PRETTY_DIGITS: usize = 6;

pub fn write_matrix_pretty(out: &mut dyn Write, m: &DenseMatrix) -> Result<(), CliError> {
    let cells: Vec<Vec<String>> = m
        .rows()
        .map(|r| r.iter().map(|&z| format_complex_fixed(z, PRETTY_DIGITS)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  {}", line.join("  "))?;
    }
    Ok(())
}

pub fn write_eigen_csv(out: &mut dyn Write, d: &SpectralData) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let parity = d.exchange_parity();
    if parity.is_some() {
        w.write_record(["k", "eigenvalue", "node", "exchange_parity", "matrix_eigenvalue"])?;
    } else {
        w.write_record(["k", "eigenvalue", "node"])?;
    }
    let mu = d.matrix_eigenvalues();
    for k in 0..d.n() {
        let mut rec = vec![
            (k + 1).to_string(),
            format_complex(d.eigenvalues()[k]),
            d.nodes()[k].to_string(),
        ];
        if let Some(eps) = parity {
            rec.push(eps[k].to_string());
            rec.push(format_complex(mu[k]));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}
