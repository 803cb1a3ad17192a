//! Randomized verification suite behind `verify --suite`.
//!
//! Each check records its worst residual relative to its own tolerance, so a
//! ratio at or below 1 means the check passed.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tridiag_pow::{
    build_exchange, build_matrix, c64, decompose, fib_det_check, fib_factor_eval, fib_poly_eval,
    mat_mul, mat_norm_maxabs, max_abs_diff, oracle_power, power_entry_anti, power_matrix,
    ComplexScalar, DenseMatrix, Family, FamilySpec,
};

use crate::complex_lit::format_complex;

pub const CLOSURE_TOL: f64 = 1e-9;
pub const RECONSTRUCTION_REL_TOL: f64 = 1e-8;
pub const PARITY_TOL: f64 = 1e-9;
pub const FIB_REL_TOL: f64 = 1e-8;
pub const ORACLE_CASES: usize = 200;
/// Negative exponents are only drawn for specs whose eigenvalues all have
/// at least this modulus.
pub const MIN_EIGEN_FOR_NEGATIVE: f64 = 0.5;

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub max_residual: f64,
    /// Largest residual / tolerance over all cases.
    pub worst_ratio: f64,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            max_residual: 0.0,
            worst_ratio: 0.0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, residual: f64, tol: f64, describe: impl FnOnce() -> String) {
        self.cases += 1;
        self.max_residual = self.max_residual.max(residual);
        let ratio = residual / tol;
        self.worst_ratio = self.worst_ratio.max(ratio);
        if !(residual <= tol) {
            self.failures
                .push(format!("{} (residual {residual:e} > tol {tol:e})", describe()));
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.worst_ratio = f64::INFINITY;
        self.failures.push(what);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_in_disc(rng: &mut ChaCha8Rng, radius: f64) -> ComplexScalar {
    let r = radius * rng.gen::<f64>().sqrt();
    let t = rng.gen_range(0.0..TAU);
    c64(r * t.cos(), r * t.sin())
}

fn random_b(rng: &mut ChaCha8Rng) -> ComplexScalar {
    let r = rng.gen_range(0.05..3.0);
    let t = rng.gen_range(0.0..TAU);
    c64(r * t.cos(), r * t.sin())
}

pub fn random_spec(rng: &mut ChaCha8Rng, family: Family, max_n: usize) -> FamilySpec {
    let n = match family {
        Family::A => rng.gen_range(2..=max_n),
        Family::ADagger => rng.gen_range(1..=max_n),
        Family::AntiADagger => 2 * rng.gen_range(1..=max_n / 2),
    };
    FamilySpec::new(family, n, random_in_disc(rng, 3.0), random_b(rng)).expect("valid by construction")
}

pub fn describe(spec: &FamilySpec, s: i64) -> String {
    format!(
        "(family={}, n={}, a={}, b={}, s={})",
        spec.family().short_name(),
        spec.n(),
        format_complex(spec.a()),
        format_complex(spec.b()),
        s
    )
}

/// Closed form vs. oracle with tolerance `tol·(1 + ‖M‖_max^s)`.
pub fn oracle_equivalence(rng: &mut ChaCha8Rng, cases: usize, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("oracle_equivalence");
    for case in 0..cases {
        let family = Family::ALL[case % 3];
        let spec = random_spec(rng, family, 12);
        let min_eig = decompose(&spec)
            .map(|d| d.eigenvalues().iter().map(|l| l.norm()).fold(f64::INFINITY, f64::min))
            .unwrap_or(0.0);
        let s = if min_eig >= MIN_EIGEN_FOR_NEGATIVE && rng.gen_bool(0.3) {
            -rng.gen_range(1..=6)
        } else {
            rng.gen_range(0..=6)
        };
        let norm = mat_norm_maxabs(&build_matrix(&spec));
        let case_tol = tol * (1.0 + norm.powi(s as i32));
        match (power_matrix(&spec, s), oracle_power(&spec, s)) {
            (Ok(p), Ok(o)) => {
                let r = max_abs_diff(&p.matrix, &o).expect("same dimension");
                report.record(r, case_tol, || describe(&spec, s));
            }
            (Err(e), _) | (_, Err(e)) => report.fail(format!("{}: {e}", describe(&spec, s))),
        }
    }
    report
}

/// `‖V·V⁻¹ - I‖` and `‖V·diag(λ)·V⁻¹ - M‖` for every family and size up to 12.
pub fn spectral_closure(rng: &mut ChaCha8Rng) -> (CheckReport, CheckReport) {
    let mut closure = CheckReport::new("spectral_closure");
    let mut recon = CheckReport::new("spectral_reconstruction");
    for family in Family::ALL {
        for n in 1..=12 {
            let spec = match FamilySpec::new(family, n, random_in_disc(rng, 3.0), random_b(rng)) {
                Ok(s) => s,
                Err(_) => continue,
            };
            let d = match decompose(&spec) {
                Ok(d) => d,
                Err(e) => {
                    closure.fail(format!("{}: {e}", describe(&spec, 1)));
                    continue;
                }
            };
            let c = max_abs_diff(
                &mat_mul(d.vec_matrix(), d.inv_matrix()).expect("same dimension"),
                &DenseMatrix::identity(n),
            )
            .expect("same dimension");
            closure.record(c, CLOSURE_TOL, || describe(&spec, 1));
            let m = build_matrix(&spec);
            let r = max_abs_diff(&d.reconstruct(), &m).expect("same dimension");
            recon.record(r, RECONSTRUCTION_REL_TOL * mat_norm_maxabs(&m), || describe(&spec, 1));
        }
    }
    (closure, recon)
}

/// `(Ã†)^s` against `J·(A†)^s` / `(A†)^s`, plus exact commutation `J·A† = A†·J`.
pub fn anti_parity(rng: &mut ChaCha8Rng) -> (CheckReport, CheckReport) {
    let mut parity = CheckReport::new("anti_parity_law");
    let mut commute = CheckReport::new("exchange_commutation");
    for n in (2..=12).step_by(2) {
        let spec = FamilySpec::new(Family::ADagger, n, random_in_disc(rng, 3.0), random_b(rng))
            .expect("valid by construction");
        let j = build_exchange(n);
        let ad = build_matrix(&spec);
        let diff = max_abs_diff(
            &mat_mul(&j, &ad).expect("same dimension"),
            &mat_mul(&ad, &j).expect("same dimension"),
        )
        .expect("same dimension");
        commute.record(diff, 0.0, || describe(&spec, 1));

        let data = decompose(&spec).expect("closure holds");
        for s in 0..=6i64 {
            let dag_pow = oracle_power(&spec, s).expect("non-negative power");
            let want = if s % 2 == 1 {
                mat_mul(&j, &dag_pow).expect("same dimension")
            } else {
                dag_pow
            };
            let mut worst = 0.0f64;
            for i in 0..n {
                for jj in 0..n {
                    let got = power_entry_anti(&data, s, i, jj).expect("valid index");
                    worst = worst.max((got - want[(i, jj)]).norm());
                }
            }
            let tol = PARITY_TOL * (1.0 + mat_norm_maxabs(&want));
            parity.record(worst, tol, || describe(&spec, s));
        }
    }
    (parity, commute)
}

/// Sample points for the Fibonacci identities; always includes `±2i`.
pub fn fib_samples(rng: &mut ChaCha8Rng, count: usize) -> Vec<ComplexScalar> {
    let mut xs = vec![c64(0.0, 2.0), c64(0.0, -2.0)];
    while xs.len() < count {
        xs.push(random_in_disc(rng, 3.0));
    }
    xs
}

pub fn fibonacci(rng: &mut ChaCha8Rng) -> (CheckReport, CheckReport) {
    let mut det = CheckReport::new("fib_determinant_identity");
    let mut factor = CheckReport::new("fib_factorization");
    for n in 3..=12 {
        for x in fib_samples(rng, 20) {
            let (lhs, rhs) = fib_det_check(n, x);
            det.record((lhs - rhs).norm(), FIB_REL_TOL * (1.0 + lhs.norm()), || {
                format!("(n={n}, x={})", format_complex(x))
            });
            let f = fib_poly_eval(n - 1, x);
            factor.record(
                (fib_factor_eval(n, x) - f).norm(),
                FIB_REL_TOL * (1.0 + f.norm()),
                || format!("(n={n}, x={})", format_complex(x)),
            );
        }
    }
    (det, factor)
}

pub fn run_suite(seed: u64, tol: f64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![oracle_equivalence(&mut rng, ORACLE_CASES, tol)];
    let (c, r) = spectral_closure(&mut rng);
    out.extend([c, r]);
    let (p, c) = anti_parity(&mut rng);
    out.extend([p, c]);
    let (d, f) = fibonacci(&mut rng);
    out.extend([d, f]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_for_fixed_seed() {
        let reports = run_suite(42, 1e-8);
        assert_eq!(reports.len(), 7);
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn impossible_tolerance_is_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = oracle_equivalence(&mut rng, 30, -1.0);
        assert!(!r.passed());
        assert!(r.failures[0].contains("family="));
    }

    #[test]
    fn random_specs_respect_family_rules() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let s = random_spec(&mut rng, Family::AntiADagger, 12);
            assert!(s.n().is_multiple_of(2) && s.n() <= 12);
            let s = random_spec(&mut rng, Family::A, 12);
            assert!(s.n() >= 2);
        }
    }
}
