//! Closed-form spectral decompositions `M = V · diag(λ) · V⁻¹`.
//!
//! For family `A` the eigenvector matrix `K` has entries `T_{i}(δ_k/2)`
//! (the last row halved) and its inverse is
//! `K⁻¹[k][j] = γ_j β_k T_j(δ_k/2)`. For `A†` the matrix `T` has entries
//! `r_i U_i(ψ_k/2)` and `T⁻¹[k][j] = c_k r_j U_j(ψ_k/2)` where `c_k` is
//! `μ_k` (odd `n`) or `η_k` (even `n`). Eigenvectors are scaled so their
//! first component is 1; the power formulas depend on that scaling.
//!
//! Every decomposition is checked for `‖V·V⁻¹ - I‖_max < 1e-9` before it is
//! handed out.

use crate::chebyshev::{a_family_nodes, cheb_t_table, cheb_u_roots, cheb_u_table};
use crate::error::{Error, Result};
use crate::families::{build_matrix, Family, FamilySpec};
use crate::numerics::{c64, mat_mul, max_abs_diff, ComplexScalar, DenseMatrix};

/// Bound on `‖V·V⁻¹ - I‖_max` accepted by [`decompose`].
pub const CLOSURE_TOL: f64 = 1e-9;

/// Eigen-data of one [`FamilySpec`], with both transforming matrices.
#[derive(Debug, Clone)]
pub struct SpectralData {
    spec: FamilySpec,
    eigenvalues: Vec<ComplexScalar>,
    nodes: Vec<f64>,
    vec_matrix: DenseMatrix,
    inv_matrix: DenseMatrix,
    // poly[i * n + k]: T_i(δ_k/2) for A, r_i U_i(ψ_k/2) for A† and Ã†
    poly: Vec<f64>,
    // β_k for A, μ_k / η_k for A† and Ã†
    weights: Vec<f64>,
    // ±1 with J·v_k = ε_k v_k; only for Ã†
    exchange_parity: Option<Vec<f64>>,
}

impl SpectralData {
    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// `λ_k` for `A`, `λ_k†` for `A†` and `Ã†`, ordered k = 1..n.
    pub fn eigenvalues(&self) -> &[ComplexScalar] {
        &self.eigenvalues
    }

    /// `δ_k` or `ψ_k`; always `eigenvalues[k] = a + b·nodes[k]`.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Eigenvector matrix `K` or `T` (eigenvectors in columns).
    pub fn vec_matrix(&self) -> &DenseMatrix {
        &self.vec_matrix
    }

    /// Closed-form `K⁻¹` or `T⁻¹`.
    pub fn inv_matrix(&self) -> &DenseMatrix {
        &self.inv_matrix
    }

    /// `β_k` for `A`; `μ_k` or `η_k` for `A†`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// For `Ã†`, the sign `ε_k` with `J·v_k = ε_k·v_k`.
    pub fn exchange_parity(&self) -> Option<&[f64]> {
        self.exchange_parity.as_deref()
    }

    /// Eigenvalues of the family matrix itself. These are the stored
    /// eigenvalues except for `Ã† = J·A†`, whose eigenvalues are `ε_k λ_k†`.
    pub fn matrix_eigenvalues(&self) -> Vec<ComplexScalar> {
        match &self.exchange_parity {
            Some(eps) => self
                .eigenvalues
                .iter()
                .zip(eps)
                .map(|(l, e)| l * e)
                .collect(),
            None => self.eigenvalues.clone(),
        }
    }

    /// `V · diag(μ) · V⁻¹` for the family-matrix eigenvalues `μ`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let d = DenseMatrix::diagonal(&self.matrix_eigenvalues());
        let vd = mat_mul(&self.vec_matrix, &d).expect("same dimension");
        mat_mul(&vd, &self.inv_matrix).expect("same dimension")
    }

    pub(crate) fn poly_row(&self, i: usize) -> &[f64] {
        let n = self.n();
        &self.poly[i * n..(i + 1) * n]
    }
}

fn require_a(spec: &FamilySpec) -> Result<()> {
    if spec.family() != Family::A {
        return Err(Error::WrongFamily {
            expected: "A",
            found: spec.family(),
        });
    }
    Ok(())
}

fn require_adagger(spec: &FamilySpec) -> Result<()> {
    if spec.family() == Family::A {
        return Err(Error::WrongFamily {
            expected: "ADagger or AntiADagger",
            found: spec.family(),
        });
    }
    Ok(())
}

/// `δ_k = 2 cos((k-1)π/(n-1))`, from the cosines directly.
pub fn nodes_a(n: usize) -> Vec<f64> {
    a_family_nodes(n).values.iter().map(|c| 2.0 * c).collect()
}

/// `ψ_k = -2 cos(kπ/(n+1))`.
pub fn nodes_adagger(n: usize) -> Vec<f64> {
    cheb_u_roots(n).values.iter().map(|c| -2.0 * c).collect()
}

fn eigen_from_nodes(spec: &FamilySpec, nodes: &[f64]) -> Vec<ComplexScalar> {
    nodes.iter().map(|&d| spec.a() + spec.b() * d).collect()
}

/// `λ_k = a + 2b cos((k-1)π/(n-1))`, k = 1..n.
pub fn eigenvalues_a(spec: &FamilySpec) -> Result<Vec<ComplexScalar>> {
    require_a(spec)?;
    Ok(eigen_from_nodes(spec, &nodes_a(spec.n())))
}

/// `λ_k† = a - 2b cos(kπ/(n+1))`, k = 1..n. Accepts `A†` and `Ã†` specs;
/// for `Ã†` these are the eigenvalues of the underlying `A†`.
pub fn eigenvalues_adagger(spec: &FamilySpec) -> Result<Vec<ComplexScalar>> {
    require_adagger(spec)?;
    Ok(eigen_from_nodes(spec, &nodes_adagger(spec.n())))
}

/// `+1` when `index mod 4` is 0 or 1, `-1` when it is 2 or 3.
pub fn sign_r(index: usize) -> i32 {
    if index % 4 < 2 {
        1
    } else {
        -1
    }
}

/// `β_k = 1/(2n-2)` at the two ends, `2/(2n-2)` inside.
pub fn beta_coefficients(n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let base = 1.0 / (2.0 * n as f64 - 2.0);
    (0..n)
        .map(|k| if k == 0 || k == n - 1 { base } else { 2.0 * base })
        .collect()
}

/// `γ_j`: 1 for the first column, 2 otherwise (0-based `j`).
pub fn gamma(j: usize) -> f64 {
    if j == 0 {
        1.0
    } else {
        2.0
    }
}

/// Odd-`n` inverse coefficients, three-branch indexing over 1-based k:
/// `ψ²_{(n+1)/2+k}/(2n+2)` below the middle, `2/(n+1)` at the middle,
/// `ψ²_{3(n+1)/2-k}/(2n+2)` above it.
pub fn mu_coefficients(n: usize) -> Vec<f64> {
    assert!(n % 2 == 1, "μ coefficients are defined for odd n");
    let psi = nodes_adagger(n);
    let m = n.div_ceil(2);
    let denom = 2.0 * n as f64 + 2.0;
    let psi_at = |one_based: usize| psi[one_based - 1];
    (1..=n)
        .map(|k| {
            if k < m {
                psi_at(m + k).powi(2) / denom
            } else if k == m {
                2.0 / (n as f64 + 1.0)
            } else {
                psi_at(3 * m - k).powi(2) / denom
            }
        })
        .collect()
}

/// Even-`n` inverse coefficients `η_k = (4 - ψ_k²)/(2n+2)`.
pub fn eta_coefficients(n: usize) -> Vec<f64> {
    assert!(n.is_multiple_of(2), "η coefficients are defined for even n");
    let denom = 2.0 * n as f64 + 2.0;
    nodes_adagger(n)
        .iter()
        .map(|p| (4.0 - p * p) / denom)
        .collect()
}

fn adagger_weights(n: usize) -> Vec<f64> {
    if n % 2 == 1 {
        mu_coefficients(n)
    } else {
        eta_coefficients(n)
    }
}

// Row-major poly table: entry (i, k) = T_i(δ_k/2).
fn t_poly_table(nodes: &[f64]) -> Vec<f64> {
    let n = nodes.len();
    let cols: Vec<Vec<f64>> = nodes.iter().map(|d| cheb_t_table(n, d / 2.0)).collect();
    (0..n * n).map(|idx| cols[idx % n][idx / n]).collect()
}

// Row-major poly table: entry (i, k) = r_i U_i(ψ_k/2).
fn u_poly_table(nodes: &[f64]) -> Vec<f64> {
    let n = nodes.len();
    let cols: Vec<Vec<f64>> = nodes.iter().map(|p| cheb_u_table(n, p / 2.0)).collect();
    (0..n * n)
        .map(|idx| {
            let (i, k) = (idx / n, idx % n);
            sign_r(i) as f64 * cols[k][i]
        })
        .collect()
}

fn k_row_factor(i: usize, n: usize) -> f64 {
    if i == n - 1 {
        0.5
    } else {
        1.0
    }
}

fn real(x: f64) -> ComplexScalar {
    c64(x, 0.0)
}

/// Eigenvector matrix `K` of family `A`.
pub fn transform_k(spec: &FamilySpec) -> Result<DenseMatrix> {
    require_a(spec)?;
    let n = spec.n();
    let poly = t_poly_table(&nodes_a(n));
    Ok(DenseMatrix::from_fn(n, |i, k| {
        real(k_row_factor(i, n) * poly[i * n + k])
    }))
}

/// Closed-form `K⁻¹[k][j] = γ_j β_k T_j(δ_k/2)`.
pub fn inv_transform_k(spec: &FamilySpec) -> Result<DenseMatrix> {
    require_a(spec)?;
    let n = spec.n();
    let poly = t_poly_table(&nodes_a(n));
    let beta = beta_coefficients(n);
    Ok(DenseMatrix::from_fn(n, |k, j| {
        real(gamma(j) * beta[k] * poly[j * n + k])
    }))
}

/// Eigenvector matrix `T` of `A†` (also of `Ã†`).
pub fn transform_t(spec: &FamilySpec) -> Result<DenseMatrix> {
    require_adagger(spec)?;
    let n = spec.n();
    let poly = u_poly_table(&nodes_adagger(n));
    Ok(DenseMatrix::from_fn(n, |i, k| real(poly[i * n + k])))
}

/// Closed-form `T⁻¹[k][j] = c_k r_j U_j(ψ_k/2)` with `c = μ` or `η` by parity of `n`.
pub fn inv_transform_t(spec: &FamilySpec) -> Result<DenseMatrix> {
    require_adagger(spec)?;
    let n = spec.n();
    let poly = u_poly_table(&nodes_adagger(n));
    let c = adagger_weights(n);
    Ok(DenseMatrix::from_fn(n, |k, j| real(c[k] * poly[j * n + k])))
}

/// `ε_k = r_{n-1} U_{n-1}(ψ_k/2)`: the last component of the k-th `T`
/// column, which for even `n` is exactly `±1`, so `J·v_k = ε_k v_k`.
fn exchange_parity(n: usize, poly: &[f64]) -> Vec<f64> {
    (0..n)
        .map(|k| poly[(n - 1) * n + k].signum())
        .collect()
}

/// Full closed-form decomposition, checked for closure.
pub fn decompose(spec: &FamilySpec) -> Result<SpectralData> {
    let n = spec.n();
    let data = match spec.family() {
        Family::A => {
            let nodes = nodes_a(n);
            let poly = t_poly_table(&nodes);
            let weights = beta_coefficients(n);
            let vec_matrix =
                DenseMatrix::from_fn(n, |i, k| real(k_row_factor(i, n) * poly[i * n + k]));
            let inv_matrix = DenseMatrix::from_fn(n, |k, j| {
                real(gamma(j) * weights[k] * poly[j * n + k])
            });
            SpectralData {
                spec: *spec,
                eigenvalues: eigen_from_nodes(spec, &nodes),
                nodes,
                vec_matrix,
                inv_matrix,
                poly,
                weights,
                exchange_parity: None,
            }
        }
        Family::ADagger | Family::AntiADagger => {
            let nodes = nodes_adagger(n);
            let poly = u_poly_table(&nodes);
            let weights = adagger_weights(n);
            let vec_matrix = DenseMatrix::from_fn(n, |i, k| real(poly[i * n + k]));
            let inv_matrix =
                DenseMatrix::from_fn(n, |k, j| real(weights[k] * poly[j * n + k]));
            let exchange_parity =
                (spec.family() == Family::AntiADagger).then(|| exchange_parity(n, &poly));
            SpectralData {
                spec: *spec,
                eigenvalues: eigen_from_nodes(spec, &nodes),
                nodes,
                vec_matrix,
                inv_matrix,
                poly,
                weights,
                exchange_parity,
            }
        }
    };

    let residual = max_abs_diff(
        &mat_mul(&data.vec_matrix, &data.inv_matrix)?,
        &DenseMatrix::identity(n),
    )?;
    if !(residual < CLOSURE_TOL) {
        return Err(Error::ClosureFailure { residual });
    }
    Ok(data)
}

/// Eigenvector residual `max_j ‖M v_j - μ_j v_j‖_max` against the dense matrix.
pub fn eigen_residual(data: &SpectralData) -> f64 {
    let m = build_matrix(data.spec());
    let mu = data.matrix_eigenvalues();
    (0..data.n())
        .map(|j| {
            let v = data.vec_matrix().column(j);
            m.mul_vec(&v)
                .iter()
                .zip(&v)
                .map(|(mv, vi)| (mv - mu[j] * vi).norm())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}
