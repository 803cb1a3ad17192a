//! The three structured families and the exchange matrix.
//!
//! * `A`: tridiagonal, diagonal `a`, sub/superdiagonal `b`, except the
//!   superdiagonal entries `(1,2)` and `(n-1,n)` which are `2b`.
//! * `A†`: tridiagonal and symmetric, diagonal `a`, the pair coupling rows
//!   `k, k+1` (1-based) carries `(-1)^(k+1) b`.
//! * `Ã†`: the row-reversal of `A†`, i.e. `J·A†` with `J` the exchange
//!   matrix. Defined for even `n` only.

use std::fmt;

use crate::chebyshev::{cheb_u, p_value};
use crate::error::{Error, Result};
use crate::numerics::{c64, is_finite, ComplexScalar, DenseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    ADagger,
    AntiADagger,
}

impl Family {
    /// Short lowercase name used on the command line and in JSON output.
    pub fn short_name(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::ADagger => "adagger",
            Family::AntiADagger => "anti",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Self> {
        match name {
            "a" => Some(Family::A),
            "adagger" => Some(Family::ADagger),
            "anti" => Some(Family::AntiADagger),
            _ => None,
        }
    }

    pub const ALL: [Family; 3] = [Family::A, Family::ADagger, Family::AntiADagger];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::ADagger => "ADagger",
            Family::AntiADagger => "AntiADagger",
        };
        f.write_str(s)
    }
}

/// Which family, its dimension and the two complex parameters.
///
/// Construct through [`FamilySpec::new`], which enforces the invariants
/// (`b != 0`, `n >= 2` for `A`, even `n` for `Ã†`, finite parameters).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    family: Family,
    n: usize,
    a: ComplexScalar,
    b: ComplexScalar,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, a: ComplexScalar, b: ComplexScalar) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("dimension n must be at least 1".into()));
        }
        if !is_finite(a) || !is_finite(b) {
            return Err(Error::InvalidSpec("parameters a and b must be finite".into()));
        }
        if b.norm() == 0.0 {
            return Err(Error::InvalidSpec("parameter b must be nonzero".into()));
        }
        match family {
            Family::A if n < 2 => {
                return Err(Error::InvalidSpec("family A requires n >= 2".into()));
            }
            Family::AntiADagger if !n.is_multiple_of(2) => {
                return Err(Error::InvalidSpec("anti-tridiagonal requires even n".into()));
            }
            _ => {}
        }
        Ok(Self { family, n, a, b })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }

    pub fn b(&self) -> ComplexScalar {
        self.b
    }

    /// Same `n`, `a`, `b` under a different family, re-validated.
    pub fn with_family(&self, family: Family) -> Result<Self> {
        Self::new(family, self.n, self.a, self.b)
    }
}

/// Sign `(-1)^(k+1)` of the `A†` coupling between 0-based rows `k` and `k+1`.
fn adagger_coupling_sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

pub fn build_matrix(spec: &FamilySpec) -> DenseMatrix {
    let n = spec.n;
    let (a, b) = (spec.a, spec.b);
    match spec.family {
        Family::A => {
            let mut m = DenseMatrix::zeros(n);
            for i in 0..n {
                m[(i, i)] = a;
            }
            for i in 0..n - 1 {
                m[(i + 1, i)] = b;
                m[(i, i + 1)] = b;
            }
            // Boundary doubling. At n = 2 both rules hit entry (1,2) and compound.
            m[(0, 1)] *= 2.0;
            m[(n - 2, n - 1)] *= 2.0;
            m
        }
        Family::ADagger => {
            let mut m = DenseMatrix::zeros(n);
            for i in 0..n {
                m[(i, i)] = a;
            }
            for k in 0..n.saturating_sub(1) {
                let v = b * adagger_coupling_sign(k);
                m[(k, k + 1)] = v;
                m[(k + 1, k)] = v;
            }
            m
        }
        Family::AntiADagger => {
            let base = build_matrix(&FamilySpec {
                family: Family::ADagger,
                ..*spec
            });
            DenseMatrix::from_fn(n, |i, j| base[(n - 1 - i, j)])
        }
    }
}

/// Anti-identity: ones on the anti-diagonal.
pub fn build_exchange(n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, |i, j| {
        if i + j == n - 1 {
            c64(1.0, 0.0)
        } else {
            c64(0.0, 0.0)
        }
    })
}

/// Characteristic determinant `(α² - 4) P_{n-2}(α)` of the normalised
/// family-A matrix. Requires `n >= 3`.
pub fn char_value_a(n: usize, alpha: f64) -> f64 {
    assert!(n >= 3, "char_value_a requires n >= 3");
    (alpha * alpha - 4.0) * p_value(n - 2, alpha)
}

/// Characteristic determinant of the normalised `A†` band, `U_n(θ/2)`.
pub fn char_value_adagger(n: usize, theta: f64) -> f64 {
    assert!(n >= 1, "char_value_adagger requires n >= 1");
    cheb_u(n, theta / 2.0)
}
