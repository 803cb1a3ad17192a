//! Command-line front end for `tridiag-pow`.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 success,
//! 1 verification or singularity failure, 2 usage or parse error.

pub mod args;
pub mod bench;
pub mod complex_lit;
pub mod error;
pub mod output;
pub mod suite;

use std::io::Write;

use serde::Serialize;
use tridiag_pow::{
    decompose, fib_det_check, fib_factor_eval, fib_poly_eval, power_matrix, power_verify, Error,
    FamilySpec,
};

use crate::args::{BenchArgs, Cli, Command, EigenArgs, FibArgs, Format, MatrixArgs, PowerArgs, VerifyArgs};
use crate::complex_lit::{format_complex, format_complex_fixed};
pub use crate::error::CliError;
use crate::output::{
    write_eigen_csv, write_json, write_matrix_csv, write_matrix_pretty, EigenJson, JsonComplex,
    PowerJson, PRETTY_DIGITS,
};

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Power(a) => cmd_power(&a, out, err),
        Command::Eigen(a) => cmd_eigen(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Fib(a) => cmd_fib(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
    }
}

fn fixed(x: f64) -> String {
    let s = format!("{x:.PRETTY_DIGITS$}");
    match s.strip_prefix('-') {
        Some(rest) if !rest.bytes().any(|c| matches!(c, b'1'..=b'9')) => rest.to_string(),
        _ => s,
    }
}

fn spec_from(m: &MatrixArgs) -> Result<FamilySpec, CliError> {
    Ok(FamilySpec::new(m.family.into(), m.n, m.a, m.b)?)
}

fn cmd_power(args: &PowerArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let spec = spec_from(&args.matrix)?;
    let result = power_matrix(&spec, args.s)?;
    for note in &result.notes {
        writeln!(err, "note: {note}")?;
    }
    if !result.matrix.is_finite() {
        return Err(CliError::CheckFailed(format!(
            "power overflowed double precision for {}",
            suite::describe(&spec, args.s)
        )));
    }
    match args.format {
        Format::Json => write_json(out, &PowerJson::from_result(&result)),
        Format::Csv => write_matrix_csv(out, &result.matrix),
        Format::Pretty => {
            writeln!(
                out,
                "family={} n={} s={} path={}",
                spec.family(),
                spec.n(),
                args.s,
                result.path
            )?;
            write_matrix_pretty(out, &result.matrix)
        }
    }
}

fn cmd_eigen(args: &EigenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = spec_from(&args.matrix)?;
    let data = decompose(&spec)?;
    match args.format {
        Format::Json => write_json(out, &EigenJson::from_data(&data, args.vectors)),
        Format::Csv => {
            if args.vectors {
                return Err(CliError::Usage(
                    "--vectors is not available with --format csv; use json or pretty".into(),
                ));
            }
            write_eigen_csv(out, &data)
        }
        Format::Pretty => {
            writeln!(out, "family={} n={}", spec.family(), spec.n())?;
            let mu = data.matrix_eigenvalues();
            for k in 0..data.n() {
                write!(
                    out,
                    "  k={:<3} eigenvalue={}  node={}",
                    k + 1,
                    format_complex_fixed(data.eigenvalues()[k], PRETTY_DIGITS),
                    fixed(data.nodes()[k])
                )?;
                if let Some(eps) = data.exchange_parity() {
                    write!(out, "  parity={}  matrix_eigenvalue={}", eps[k], format_complex_fixed(mu[k], PRETTY_DIGITS))?;
                }
                writeln!(out)?;
            }
            if args.vectors {
                writeln!(out, "eigenvectors (columns):")?;
                write_matrix_pretty(out, data.vec_matrix())?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct VerifyJson {
    family: String,
    n: usize,
    a: JsonComplex,
    b: JsonComplex,
    s: i64,
    path: String,
    residual: f64,
    tol: f64,
    pass: bool,
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    check: &'a str,
    cases: usize,
    max_residual: f64,
    worst_ratio: f64,
    pass: bool,
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    if args.suite {
        return cmd_verify_suite(args, out, err);
    }
    let missing = || CliError::Usage("verify needs --family, --n, --a, --b and --s (or --suite)".into());
    let matrix = MatrixArgs {
        family: args.family.ok_or_else(missing)?,
        n: args.n.ok_or_else(missing)?,
        a: args.a.ok_or_else(missing)?,
        b: args.b.ok_or_else(missing)?,
    };
    let s = args.s.ok_or_else(missing)?;
    let spec = spec_from(&matrix)?;
    let tuple = suite::describe(&spec, s);
    let result = match power_verify(&spec, s, args.tol) {
        Ok(r) => r,
        Err(Error::VerificationFailed { residual, tol, .. }) => {
            return Err(CliError::CheckFailed(format!(
                "verification failed for {tuple}: residual {residual:e} exceeds tolerance {tol:e}"
            )));
        }
        Err(e) => {
            let e = CliError::from(e);
            if e.exit_code() == error::EXIT_USAGE {
                return Err(e);
            }
            return Err(CliError::CheckFailed(format!("verification failed for {tuple}: {e}")));
        }
    };
    for note in &result.notes {
        writeln!(err, "note: {note}")?;
    }
    let residual = result.residual_vs_oracle.unwrap_or(0.0);
    match args.format {
        Format::Json => write_json(
            out,
            &VerifyJson {
                family: spec.family().short_name().into(),
                n: spec.n(),
                a: spec.a().into(),
                b: spec.b().into(),
                s,
                path: result.path.as_str().into(),
                residual,
                tol: args.tol,
                pass: true,
            },
        ),
        _ => {
            writeln!(
                out,
                "PASS {tuple} path={} residual={residual:e} tol={:e}",
                result.path, args.tol
            )?;
            Ok(())
        }
    }
}

fn cmd_verify_suite(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let seed = args.seed.unwrap_or(0);
    let reports = suite::run_suite(seed, args.tol);
    match args.format {
        Format::Json => {
            let rows: Vec<SuiteJson> = reports
                .iter()
                .map(|r| SuiteJson {
                    check: r.name,
                    cases: r.cases,
                    max_residual: r.max_residual,
                    worst_ratio: r.worst_ratio,
                    pass: r.passed(),
                })
                .collect();
            write_json(out, &rows)?;
        }
        _ => {
            writeln!(out, "suite seed={seed} tol={:e}", args.tol)?;
            for r in &reports {
                writeln!(
                    out,
                    "{} {:<26} cases={:<4} max_residual={:e} worst_ratio={:.3e}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases,
                    r.max_residual,
                    r.worst_ratio
                )?;
            }
        }
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    for r in &failed {
        for f in &r.failures {
            writeln!(err, "{}: {f}", r.name)?;
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!("{} suite check(s) failed", failed.len())))
    }
}

#[derive(Serialize)]
struct FibJson {
    n: usize,
    x: JsonComplex,
    recurrence: JsonComplex,
    factorization: JsonComplex,
    factor_residual: f64,
    det: JsonComplex,
    det_rhs: JsonComplex,
    det_residual: f64,
}

fn cmd_fib(args: &FibArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n < 3 {
        return Err(CliError::Usage("fib requires n >= 3".into()));
    }
    let (n, x) = (args.n, args.x);
    let recurrence = fib_poly_eval(n - 1, x);
    let factorization = fib_factor_eval(n, x);
    let factor_residual = (factorization - recurrence).norm();
    let (det, det_rhs) = fib_det_check(n, x);
    let det_residual = (det - det_rhs).norm();

    match args.format {
        Format::Json => write_json(
            out,
            &FibJson {
                n,
                x: x.into(),
                recurrence: recurrence.into(),
                factorization: factorization.into(),
                factor_residual,
                det: det.into(),
                det_rhs: det_rhs.into(),
                det_residual,
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "n", "x", "recurrence", "factorization", "factor_residual", "det", "det_rhs", "det_residual",
            ])?;
            w.write_record([
                n.to_string(),
                format_complex(x),
                format_complex(recurrence),
                format_complex(factorization),
                format!("{factor_residual:e}"),
                format_complex(det),
                format_complex(det_rhs),
                format!("{det_residual:e}"),
            ])?;
            w.flush()?;
        }
        Format::Pretty => {
            writeln!(out, "n={n} x={}", format_complex(x))?;
            writeln!(out, "  F_{}(x) by recurrence:     {}", n - 1, format_complex(recurrence))?;
            writeln!(out, "  F_{}(x) by factorization:  {}", n - 1, format_complex(factorization))?;
            writeln!(out, "  factorization residual:    {factor_residual:e}")?;
            writeln!(out, "  det A (a=x, b=i):          {}", format_complex(det))?;
            writeln!(out, "  (x^2+4) F_{}(x):           {}", n - 1, format_complex(det_rhs))?;
            writeln!(out, "  determinant residual:      {det_residual:e}")?;
        }
    }

    let factor_ok = factor_residual <= suite::FIB_REL_TOL * (1.0 + recurrence.norm());
    let det_ok = det_residual <= suite::FIB_REL_TOL * (1.0 + det.norm());
    if factor_ok && det_ok {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!(
            "Fibonacci identity residual too large at n={n}, x={}",
            format_complex(x)
        )))
    }
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = bench::run_bench(args.family.into(), &args.n, &args.s, args.seed)?;
    bench::write_bench_csv(out, &rows)
}
