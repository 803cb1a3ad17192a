//! Integer powers of three structured complex matrix families by closed-form
//! spectral formulas, with a dense brute-force oracle to check them against.
//!
//! The families, for `b != 0`:
//!
//! * `A`: tridiagonal `(b, a, b)` with `2b` in the two boundary
//!   superdiagonal slots; eigenvalues `a + 2b cos((k-1)π/(n-1))`.
//! * `A†`: tridiagonal with alternating `±b` couplings; eigenvalues
//!   `a - 2b cos(kπ/(n+1))`.
//! * `Ã†`: the anti-tridiagonal row reversal `J·A†` (even `n`).
//!
//! Eigenvectors are Chebyshev polynomials evaluated at the cosine nodes, and
//! the inverse eigenvector matrices have closed forms too, so `M^s` reduces to
//! one spectral sum per entry.
//!
//! ```
//! use tridiag_pow::{c64, power_matrix, Family, FamilySpec};
//!
//! let spec = FamilySpec::new(Family::A, 3, c64(1.0, 0.0), c64(1.0, 0.0)).unwrap();
//! let cube = power_matrix(&spec, 3).unwrap();
//! assert!((cube.matrix[(0, 1)] - c64(14.0, 0.0)).norm() < 1e-12);
//! ```

pub mod chebyshev;
pub mod error;
pub mod families;
pub mod fibpoly;
pub mod numerics;
pub mod powers;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{build_exchange, build_matrix, Family, FamilySpec};
pub use fibpoly::{fib_det_check, fib_factor_eval, fib_poly_eval, FibEval};
pub use numerics::{
    c64, mat_approx_eq, mat_det, mat_inverse, mat_mul, mat_norm_maxabs, mat_pow_binary,
    max_abs_diff, ComplexScalar, DenseMatrix,
};
pub use powers::{
    oracle_power, power_entry_a, power_entry_adagger, power_entry_anti, power_from_spectral,
    power_matrix, power_verify, PowerPath, PowerResult,
};
pub use spectral::{decompose, SpectralData};
