//! Closed form vs. binary exponentiation timings. Each row carries the
//! residual against the binary-exponentiation result so a timing is never
//! reported without its accuracy.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tridiag_pow::{
    build_matrix, c64, decompose, mat_pow_binary, max_abs_diff, power_matrix, Family, FamilySpec,
};

use crate::error::CliError;

pub const BENCH_HEADER: [&str; 6] = ["family", "n", "s", "method", "wall_nanos", "residual_vs_oracle"];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub s: u32,
    pub method: &'static str,
    pub wall_nanos: u128,
    pub residual_vs_oracle: f64,
}

/// Parameters drawn from `rng` and rescaled so the spectral radius is 1,
/// which keeps large powers inside double range.
pub fn bench_spec(family: Family, n: usize, rng: &mut ChaCha8Rng) -> Result<FamilySpec, CliError> {
    let a = c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let b = c64(rng.gen_range(0.1..1.0), rng.gen_range(-1.0..1.0));
    let raw = FamilySpec::new(family, n, a, b)?;
    let radius = decompose(&raw)?
        .matrix_eigenvalues()
        .iter()
        .map(|l| l.norm())
        .fold(0.0, f64::max);
    Ok(FamilySpec::new(family, n, a / radius, b / radius)?)
}

pub fn run_bench(family: Family, ns: &[usize], ss: &[u32], seed: u64) -> Result<Vec<BenchRow>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(ns.len() * ss.len() * 2);
    for &n in ns {
        for &s in ss {
            let spec = bench_spec(family, n, &mut rng)?;

            let start = Instant::now();
            let closed = power_matrix(&spec, i64::from(s))?.matrix;
            let closed_nanos = start.elapsed().as_nanos();

            let m = build_matrix(&spec);
            let start = Instant::now();
            let oracle = mat_pow_binary(&m, u64::from(s));
            let oracle_nanos = start.elapsed().as_nanos();

            let residual = max_abs_diff(&closed, &oracle)?;
            rows.push(BenchRow {
                family,
                n,
                s,
                method: "closed_form",
                wall_nanos: closed_nanos,
                residual_vs_oracle: residual,
            });
            rows.push(BenchRow {
                family,
                n,
                s,
                method: "binary_pow",
                wall_nanos: oracle_nanos,
                residual_vs_oracle: 0.0,
            });
        }
    }
    Ok(rows)
}

pub fn write_bench_csv(out: &mut dyn Write, rows: &[BenchRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BENCH_HEADER)?;
    for r in rows {
        w.write_record([
            r.family.short_name().to_string(),
            r.n.to_string(),
            r.s.to_string(),
            r.method.to_string(),
            r.wall_nanos.to_string(),
            format!("{:e}", r.residual_vs_oracle),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_residuals() {
        let rows = run_bench(Family::A, &[8, 16], &[1, 8], 7).unwrap();
        assert_eq!(rows.len(), 8);
        for r in &rows {
            assert!(r.residual_vs_oracle < 1e-10, "{r:?}");
        }
        assert_eq!(rows[0].method, "closed_form");
        assert_eq!(rows[1].method, "binary_pow");
    }

    #[test]
    fn spectral_radius_is_normalised() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for family in Family::ALL {
            let spec = bench_spec(family, 10, &mut rng).unwrap();
            let r = decompose(&spec)
                .unwrap()
                .matrix_eigenvalues()
                .iter()
                .map(|l| l.norm())
                .fold(0.0, f64::max);
            assert!((r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn same_seed_same_inputs() {
        let mut r1 = ChaCha8Rng::seed_from_u64(99);
        let mut r2 = ChaCha8Rng::seed_from_u64(99);
        assert_eq!(
            bench_spec(Family::ADagger, 5, &mut r1).unwrap(),
            bench_spec(Family::ADagger, 5, &mut r2).unwrap()
        );
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        write_bench_csv(&mut buf, &[]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "family,n,s,method,wall_nanos,residual_vs_oracle\n");
    }
}
