//! Fibonacci polynomials and their link to family `A` at `a = x`, `b = i`:
//! `det A = (x² + 4) F_{n-1}(x)`, and `F_{n-1}(x)` as a product over the
//! eigenvalues.

use crate::chebyshev::cos_pi_ratio;

use crate::families::{build_matrix, Family, FamilySpec};
use crate::numerics::{c64, mat_det, ComplexScalar};

/// One evaluation `F_order(argument) = value`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FibEval {
    pub order: usize,
    pub argument: ComplexScalar,
    pub value: ComplexScalar,
}

impl FibEval {
    pub fn new(order: usize, argument: ComplexScalar) -> Self {
        Self {
            order,
            argument,
            value: fib_poly_eval(order, argument),
        }
    }
}

/// `F_n(x)` by `F_n = x F_{n-1} + F_{n-2}`, `F_0 = 0`, `F_1 = 1`.
pub fn fib_poly_eval(n: usize, x: ComplexScalar) -> ComplexScalar {
    let (mut prev, mut cur) = (c64(0.0, 0.0), c64(1.0, 0.0));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x * cur + prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(det A, (x² + 4) F_{n-1}(x))` for family `A` with `a = x`, `b = i`.
/// The determinant comes from the LU oracle.
pub fn fib_det_check(n: usize, x: ComplexScalar) -> (ComplexScalar, ComplexScalar) {
    assert!(n >= 3, "determinant identity needs n >= 3");
    let spec = FamilySpec::new(Family::A, n, x, c64(0.0, 1.0)).expect("b = i is nonzero");
    let det = mat_det(&build_matrix(&spec));
    let rhs = (x * x + 4.0) * fib_poly_eval(n - 1, x);
    (det, rhs)
}

/// `F_{n-1}(x) = Π_{k=2}^{n-1} (x + 2i cos((k-1)π/(n-1)))`.
///
/// The `k = 1` and `k = n` factors are `(x + 2i)(x - 2i) = x² + 4` and are
/// left out rather than divided by, so `x = ±2i` is fine.
pub fn fib_factor_eval(n: usize, x: ComplexScalar) -> ComplexScalar {
    assert!(n >= 3, "factorisation needs n >= 3");
    (1..n - 1)
        .map(|k| x + c64(0.0, 2.0 * cos_pi_ratio(k, n - 1)))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::eigenvalues_a;

    fn real(x: f64) -> ComplexScalar {
        c64(x, 0.0)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(fib_poly_eval(5, real(1.0)), real(5.0));
        assert_eq!(fib_poly_eval(3, real(2.0)), real(5.0));
        assert_eq!(fib_poly_eval(0, c64(3.0, -2.0)), real(0.0));
        assert_eq!(fib_poly_eval(1, c64(3.0, -2.0)), real(1.0));
        let e = FibEval::new(4, real(1.0));
        assert_eq!(e.value, real(3.0));
    }

    #[test]
    fn integer_fibonacci_exact() {
        let (mut a, mut b) = (0u64, 1u64);
        for n in 0..=40 {
            assert_eq!(fib_poly_eval(n, real(1.0)), real(a as f64), "n={n}");
            (a, b) = (b, a + b);
        }
    }

    #[test]
    fn determinant_examples() {
        let (lhs, rhs) = fib_det_check(3, real(2.0));
        assert!((lhs - real(16.0)).norm() < 1e-12);
        assert_eq!(rhs, real(16.0));

        let (lhs, rhs) = fib_det_check(3, real(0.0));
        assert!(lhs.norm() < 1e-12);
        assert_eq!(rhs, real(0.0));

        let (lhs, rhs) = fib_det_check(6, real(1.0));
        assert_eq!(rhs, real(25.0));
        assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn factor_examples() {
        assert!((fib_factor_eval(3, real(1.0)) - real(1.0)).norm() < 1e-15);
        assert!((fib_factor_eval(5, real(1.0)) - real(3.0)).norm() < 1e-12);
        let x = c64(0.0, 2.0);
        assert!((fib_factor_eval(6, x) - fib_poly_eval(5, x)).norm() < 1e-9);
    }

    #[test]
    fn eigenvalue_product_is_determinant() {
        for n in 3..=12 {
            for &x in &[c64(0.5, -1.2), real(-2.0), c64(1.1, 0.7)] {
                let spec = FamilySpec::new(Family::A, n, x, c64(0.0, 1.0)).unwrap();
                let prod: ComplexScalar = eigenvalues_a(&spec).unwrap().into_iter().product();
                let (det, _) = fib_det_check(n, x);
                assert!((prod - det).norm() < 1e-8 * (1.0 + det.norm()), "n={n}");
            }
        }
    }
}
