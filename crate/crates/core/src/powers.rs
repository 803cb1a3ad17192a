//! Entrywise closed-form integer powers.
//!
//! Every entry is a single spectral sum over the eigenvalues, summed in
//! ascending `k`:
//!
//! * `A`:  `u_ij(s) = γ_j · Σ λ_k^s β_k T_i(δ_k/2) T_j(δ_k/2)`, with an extra
//!   factor ½ on the last row.
//! * `A†`: `Σ (λ_k†)^s c_k r_i r_j U_i(ψ_k/2) U_j(ψ_k/2)` with `c = μ` for odd
//!   `n` and `c = η` for even `n`.
//! * `Ã†`: equal to the `A†` power for even `s`, and to the `A†` power with
//!   the row index reversed for odd `s`.
//!
//! Indices are 0-based throughout.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{build_matrix, Family, FamilySpec};
use crate::numerics::{
    c64, complex_powi, mat_inverse, mat_pow_binary, max_abs_diff, ComplexScalar, DenseMatrix,
};
use crate::spectral::{decompose, gamma, SpectralData};

/// Eigenvalues with modulus at or below this fraction of the largest one are
/// treated as zero when a negative power is requested.
pub const SINGULAR_EIGEN_REL: f64 = 1e-12;

// Below this size row-parallel assembly costs more than it saves.
const PARALLEL_MIN_N: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerPath {
    ClosedFormA,
    ClosedFormADaggerOdd,
    ClosedFormADaggerEven,
    ClosedFormAntiOddS,
    ClosedFormAntiEvenS,
    Oracle,
}

impl PowerPath {
    pub fn as_str(self) -> &'static str {
        match self {
            PowerPath::ClosedFormA => "closed-form-A",
            PowerPath::ClosedFormADaggerOdd => "closed-form-ADagger-odd",
            PowerPath::ClosedFormADaggerEven => "closed-form-ADagger-even",
            PowerPath::ClosedFormAntiOddS => "closed-form-anti-odd-s",
            PowerPath::ClosedFormAntiEvenS => "closed-form-anti-even-s",
            PowerPath::Oracle => "oracle",
        }
    }

    fn for_spec(spec: &FamilySpec, s: i64) -> Self {
        match spec.family() {
            Family::A => PowerPath::ClosedFormA,
            Family::ADagger if spec.n() % 2 == 1 => PowerPath::ClosedFormADaggerOdd,
            Family::ADagger => PowerPath::ClosedFormADaggerEven,
            Family::AntiADagger if s % 2 != 0 => PowerPath::ClosedFormAntiOddS,
            Family::AntiADagger => PowerPath::ClosedFormAntiEvenS,
        }
    }
}

impl std::fmt::Display for PowerPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct PowerResult {
    pub spec: FamilySpec,
    pub exponent: i64,
    pub matrix: DenseMatrix,
    pub path: PowerPath,
    pub residual_vs_oracle: Option<f64>,
    /// Diagnostics that do not prevent the computation, e.g. an exponent
    /// outside the classical domain of the formula.
    pub notes: Vec<String>,
}

/// `λ_k^s` for every eigenvalue of `data`, rejecting negative powers of a
/// zero eigenvalue.
pub fn eigen_powers(data: &SpectralData, s: i64) -> Result<Vec<ComplexScalar>> {
    let lam = data.eigenvalues();
    if s < 0 {
        let largest = lam.iter().map(|l| l.norm()).fold(0.0, f64::max);
        if let Some(k) = lam
            .iter()
            .position(|l| l.norm() <= SINGULAR_EIGEN_REL * largest)
        {
            return Err(Error::SingularPower { index: k + 1 });
        }
    }
    Ok(lam.iter().map(|&l| complex_powi(l, s)).collect())
}

fn check_index(data: &SpectralData, i: usize, j: usize) -> Result<()> {
    let n = data.n();
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    Ok(())
}

// Σ_k lam_pow[k] · w_k · P(i,k) · P(j,k), ascending k.
fn spectral_sum(data: &SpectralData, lam_pow: &[ComplexScalar], i: usize, j: usize) -> ComplexScalar {
    let w = data.weights();
    let (pi, pj) = (data.poly_row(i), data.poly_row(j));
    let mut acc = c64(0.0, 0.0);
    for k in 0..data.n() {
        acc += lam_pow[k] * (w[k] * pi[k] * pj[k]);
    }
    acc
}

fn a_prefactor(n: usize, i: usize, j: usize) -> f64 {
    let row = if i == n - 1 { 0.5 } else { 1.0 };
    row * gamma(j)
}

fn entry_a(data: &SpectralData, lam_pow: &[ComplexScalar], i: usize, j: usize) -> ComplexScalar {
    spectral_sum(data, lam_pow, i, j) * a_prefactor(data.n(), i, j)
}

fn entry_anti(data: &SpectralData, lam_pow: &[ComplexScalar], s: i64, i: usize, j: usize) -> ComplexScalar {
    let row = if s % 2 != 0 { data.n() - 1 - i } else { i };
    spectral_sum(data, lam_pow, row, j)
}

/// Entry `(i, j)` of `A^s`.
pub fn power_entry_a(data: &SpectralData, s: i64, i: usize, j: usize) -> Result<ComplexScalar> {
    if data.spec().family() != Family::A {
        return Err(Error::WrongFamily {
            expected: "A",
            found: data.spec().family(),
        });
    }
    check_index(data, i, j)?;
    let lam_pow = eigen_powers(data, s)?;
    Ok(entry_a(data, &lam_pow, i, j))
}

/// Entry `(i, j)` of `(A†)^s`; the coefficient family follows the parity of `n`.
pub fn power_entry_adagger(data: &SpectralData, s: i64, i: usize, j: usize) -> Result<ComplexScalar> {
    if data.spec().family() == Family::A {
        return Err(Error::WrongFamily {
            expected: "ADagger",
            found: Family::A,
        });
    }
    check_index(data, i, j)?;
    let lam_pow = eigen_powers(data, s)?;
    Ok(spectral_sum(data, &lam_pow, i, j))
}

/// Entry `(i, j)` of `(Ã†)^s`, from `A†` spectral data of even dimension.
pub fn power_entry_anti(data: &SpectralData, s: i64, i: usize, j: usize) -> Result<ComplexScalar> {
    if data.spec().family() == Family::A {
        return Err(Error::WrongFamily {
            expected: "ADagger or AntiADagger",
            found: Family::A,
        });
    }
    if !data.n().is_multiple_of(2) {
        return Err(Error::InvalidSpec("anti-tridiagonal requires even n".into()));
    }
    check_index(data, i, j)?;
    let lam_pow = eigen_powers(data, s)?;
    Ok(entry_anti(data, &lam_pow, s, i, j))
}

fn domain_notes(spec: &FamilySpec, s: i64) -> Vec<String> {
    let mut notes = Vec::new();
    if s < 0 && spec.n() % 2 == 1 && matches!(spec.family(), Family::A | Family::ADagger) {
        notes.push(format!(
            "negative exponent s={s} with odd n={} is outside the classical domain of the \
             closed form (s >= 0 for odd n); computed because every eigenvalue is nonzero",
            spec.n()
        ));
    }
    notes
}

/// Assembles the full power from already-decomposed spectral data.
pub fn power_from_spectral(data: &SpectralData, s: i64) -> Result<PowerResult> {
    let spec = *data.spec();
    let n = spec.n();
    let path = PowerPath::for_spec(&spec, s);
    let notes = domain_notes(&spec, s);
    if s == 0 {
        return Ok(PowerResult {
            spec,
            exponent: 0,
            matrix: DenseMatrix::identity(n),
            path,
            residual_vs_oracle: None,
            notes,
        });
    }

    let lam_pow = eigen_powers(data, s)?;
    let row = |i: usize| -> Vec<ComplexScalar> {
        (0..n)
            .map(|j| match spec.family() {
                Family::A => entry_a(data, &lam_pow, i, j),
                Family::ADagger => spectral_sum(data, &lam_pow, i, j),
                Family::AntiADagger => entry_anti(data, &lam_pow, s, i, j),
            })
            .collect()
    };
    let rows: Vec<Vec<ComplexScalar>> = if n >= PARALLEL_MIN_N {
        (0..n).into_par_iter().map(row).collect()
    } else {
        (0..n).map(row).collect()
    };
    let matrix = DenseMatrix::from_row_major(n, rows.into_iter().flatten().collect())?;

    Ok(PowerResult {
        spec,
        exponent: s,
        matrix,
        path,
        residual_vs_oracle: None,
        notes,
    })
}

/// `M^s` for the family matrix of `spec`, by the closed form.
pub fn power_matrix(spec: &FamilySpec, s: i64) -> Result<PowerResult> {
    let data = decompose(spec)?;
    power_from_spectral(&data, s)
}

/// Brute-force `M^s`: repeated squaring, through the Gaussian-elimination
/// inverse when `s < 0`.
pub fn oracle_power(spec: &FamilySpec, s: i64) -> Result<DenseMatrix> {
    let m = build_matrix(spec);
    if s >= 0 {
        Ok(mat_pow_binary(&m, s as u64))
    } else {
        Ok(mat_pow_binary(&mat_inverse(&m)?, s.unsigned_abs()))
    }
}

/// Closed form checked against [`oracle_power`]. Fails when the max-abs
/// residual exceeds `tol`.
pub fn power_verify(spec: &FamilySpec, s: i64, tol: f64) -> Result<PowerResult> {
    let mut result = power_matrix(spec, s)?;
    let oracle = oracle_power(spec, s)?;
    let residual = max_abs_diff(&result.matrix, &oracle)?;
    if !(residual <= tol) {
        return Err(Error::VerificationFailed {
            residual,
            tol,
            closed_form: Box::new(result.matrix),
            oracle: Box::new(oracle),
        });
    }
    result.residual_vs_oracle = Some(residual);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_exchange;
    use crate::numerics::{mat_mul, mat_norm_maxabs};

    fn spec(f: Family, n: usize, a: ComplexScalar, b: ComplexScalar) -> FamilySpec {
        FamilySpec::new(f, n, a, b).unwrap()
    }

    fn real(x: f64) -> ComplexScalar {
        c64(x, 0.0)
    }

    #[test]
    fn a_cube_at_unit_parameters() {
        let p = power_matrix(&spec(Family::A, 3, real(1.0), real(1.0)), 3).unwrap();
        let want = DenseMatrix::from_real_rows(&[&[7., 14., 12.], &[7., 13., 14.], &[3., 7., 7.]]).unwrap();
        assert!(max_abs_diff(&p.matrix, &want).unwrap() < 1e-12);
        assert_eq!(p.path, PowerPath::ClosedFormA);
    }

    #[test]
    fn a_inverse_cube_entry() {
        let d = decompose(&spec(Family::A, 4, real(1.0), real(2.0))).unwrap();
        let e = power_entry_a(&d, -3, 0, 0).unwrap();
        // exact value -3299/10125
        assert!((e - real(-3299.0 / 10125.0)).norm() < 1e-13);
        assert!((e - real(-0.326)).norm() < 5e-4);
    }

    #[test]
    fn first_power_is_the_matrix() {
        let (a, b) = (c64(0.2, 1.3), c64(-0.7, 0.4));
        for f in Family::ALL {
            for n in [2, 4, 6] {
                let s = spec(f, n, a, b);
                let p = power_matrix(&s, 1).unwrap();
                assert!(max_abs_diff(&p.matrix, &build_matrix(&s)).unwrap() < 1e-10, "{f} n={n}");
            }
        }
    }

    #[test]
    fn adagger_example_entries() {
        let d = decompose(&spec(Family::ADagger, 3, real(2.0), real(1.0))).unwrap();
        let e = power_entry_adagger(&d, 4, 0, 0).unwrap();
        assert!((e - real(42.0)).norm() < 1e-12);

        let d = decompose(&spec(Family::ADagger, 4, c64(0.0, 1.0), real(1.0))).unwrap();
        let e = power_entry_adagger(&d, -5, 0, 0).unwrap();
        assert!((e - c64(0.0, 0.296)).norm() < 5e-4);
    }

    #[test]
    fn adagger_example4_matrix() {
        let p = power_matrix(&spec(Family::ADagger, 4, real(1.0), real(4.0)), 4).unwrap();
        let want = DenseMatrix::from_real_rows(&[
            &[609., 528., -864., -256.],
            &[528., 1473., -784., -864.],
            &[-864., -784., 1473., 528.],
            &[-256., -864., 528., 609.],
        ])
        .unwrap();
        assert!(max_abs_diff(&p.matrix, &want).unwrap() < 1e-6);
        assert_eq!(p.path, PowerPath::ClosedFormADaggerEven);
    }

    #[test]
    fn anti_small_cases() {
        let s = spec(Family::AntiADagger, 2, real(1.0), real(2.0));
        let p = power_matrix(&s, 2).unwrap();
        let want = DenseMatrix::from_real_rows(&[&[5., 4.], &[4., 5.]]).unwrap();
        assert!(max_abs_diff(&p.matrix, &want).unwrap() < 1e-12);
        assert_eq!(p.path, PowerPath::ClosedFormAntiEvenS);

        let p = power_matrix(&s, 1).unwrap();
        assert!(max_abs_diff(&p.matrix, &build_matrix(&s)).unwrap() < 1e-10);
        assert_eq!(p.path, PowerPath::ClosedFormAntiOddS);

        let s = spec(Family::AntiADagger, 4, real(1.0), real(1.0));
        let ad = build_matrix(&s.with_family(Family::ADagger).unwrap());
        let want = mat_mul(&build_exchange(4), &mat_pow_binary(&ad, 3)).unwrap();
        let p = power_matrix(&s, 3).unwrap();
        assert!(max_abs_diff(&p.matrix, &want).unwrap() < 1e-10);
    }

    #[test]
    fn anti_rejects_odd_dimension() {
        let d = decompose(&spec(Family::ADagger, 3, real(1.0), real(1.0))).unwrap();
        assert!(matches!(
            power_entry_anti(&d, 1, 0, 0),
            Err(Error::InvalidSpec(m)) if m.contains("even n")
        ));
    }

    #[test]
    fn zeroth_power_is_identity() {
        for f in Family::ALL {
            let p = power_matrix(&spec(f, 4, c64(0.0, 0.0), real(1.0)), 0).unwrap();
            assert_eq!(p.matrix, DenseMatrix::identity(4));
        }
    }

    #[test]
    fn singular_negative_power() {
        // a = 0, n = 3 puts λ_2 = 0
        let s = spec(Family::A, 3, c64(0.0, 0.0), real(1.0));
        assert!(matches!(
            power_matrix(&s, -1),
            Err(Error::SingularPower { index: 2 })
        ));
        let d = decompose(&s).unwrap();
        assert!(power_entry_a(&d, -2, 0, 0).is_err());
        // positive powers are fine
        assert!(power_matrix(&s, 2).is_ok());
    }

    #[test]
    fn index_and_family_checks() {
        let d = decompose(&spec(Family::A, 3, real(1.0), real(1.0))).unwrap();
        assert!(matches!(power_entry_a(&d, 1, 3, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(power_entry_adagger(&d, 1, 0, 0), Err(Error::WrongFamily { .. })));
        assert!(matches!(power_entry_anti(&d, 1, 0, 0), Err(Error::WrongFamily { .. })));
        let d = decompose(&spec(Family::ADagger, 3, real(1.0), real(1.0))).unwrap();
        assert!(matches!(power_entry_a(&d, 1, 0, 0), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn odd_n_negative_power_is_flagged() {
        let p = power_matrix(&spec(Family::A, 3, real(1.0), real(1.0)), -1).unwrap();
        assert_eq!(p.notes.len(), 1);
        let p = power_matrix(&spec(Family::A, 4, real(1.0), real(2.0)), -3).unwrap();
        assert!(p.notes.is_empty());
        let p = power_matrix(&spec(Family::ADagger, 3, real(1.0), real(1.0)), 2).unwrap();
        assert!(p.notes.is_empty());
    }

    #[test]
    fn verify_examples() {
        let cases = [
            (Family::A, 5, c64(2.0, 1.0), c64(1.0, -1.0), 4),
            (Family::ADagger, 7, c64(0.0, 1.0), real(2.0), 3),
            (Family::AntiADagger, 6, real(1.0), c64(0.0, 1.0), 5),
        ];
        for (f, n, a, b, s) in cases {
            let r = power_verify(&spec(f, n, a, b), s, 1e-8).unwrap();
            assert!(r.residual_vs_oracle.unwrap() < 1e-8, "{f}");
        }
    }

    #[test]
    fn verify_reports_breach() {
        let s = spec(Family::ADagger, 5, real(3.0), real(1.0));
        match power_verify(&s, 6, 0.0) {
            Ok(r) => assert_eq!(r.residual_vs_oracle, Some(0.0)),
            Err(Error::VerificationFailed { residual, closed_form, oracle, .. }) => {
                assert!(residual > 0.0);
                assert_eq!(closed_form.dim(), 5);
                assert_eq!(oracle.dim(), 5);
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn last_row_matches_oracle() {
        let s = spec(Family::A, 7, c64(0.4, 0.9), c64(-1.2, 0.3));
        let p = power_matrix(&s, 5).unwrap();
        let o = oracle_power(&s, 5).unwrap();
        let scale = mat_norm_maxabs(&o);
        for j in 0..7 {
            assert!((p.matrix[(6, j)] - o[(6, j)]).norm() < 1e-12 * scale);
        }
    }

    #[test]
    fn parallel_assembly_matches_sequential_entries() {
        let s = spec(Family::ADagger, 64, c64(0.1, 0.2), c64(0.3, -0.1));
        let d = decompose(&s).unwrap();
        let p = power_from_spectral(&d, 7).unwrap();
        for &(i, j) in &[(0, 0), (13, 40), (63, 63), (31, 2)] {
            assert_eq!(p.matrix[(i, j)], power_entry_adagger(&d, 7, i, j).unwrap());
        }
    }
}
