//! Chebyshev polynomials of the first and second kind, evaluated by the
//! three-term recurrence so they are valid for any real argument, plus the
//! cosine node sets that drive the eigenvalue formulas.

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// `cos((k-1)π/(n-1))`, k = 1..n: the spectrum nodes of family A.
    FirstKindANodes,
    /// `cos(kπ/(n+1))`, k = 1..n: the roots of `U_n`.
    SecondKindRoots,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChebNodeSet {
    pub kind: NodeKind,
    pub n: usize,
    pub values: Vec<f64>,
}

/// `T_k(x)` via `T_k = 2x T_{k-1} - T_{k-2}`, `T_0 = 1`, `T_1 = x`.
pub fn cheb_t(k: usize, x: f64) -> f64 {
    match k {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 2..=k {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `U_k(x)` via the same recurrence with `U_0 = 1`, `U_1 = 2x`.
pub fn cheb_u(k: usize, x: f64) -> f64 {
    match k {
        0 => 1.0,
        1 => 2.0 * x,
        _ => {
            let (mut prev, mut cur) = (1.0, 2.0 * x);
            for _ in 2..=k {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `T_0(x), ..., T_{count-1}(x)` in one pass.
pub fn cheb_t_table(count: usize, x: f64) -> Vec<f64> {
    recurrence_table(count, 1.0, x, x)
}

/// `U_0(x), ..., U_{count-1}(x)` in one pass.
pub fn cheb_u_table(count: usize, x: f64) -> Vec<f64> {
    recurrence_table(count, 1.0, 2.0 * x, x)
}

fn recurrence_table(count: usize, p0: f64, p1: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    if count > 0 {
        out.push(p0);
    }
    if count > 1 {
        out.push(p1);
    }
    for k in 2..count {
        let next = 2.0 * x * out[k - 1] - out[k - 2];
        out.push(next);
    }
    out
}

/// `cos(pπ/q)` evaluated as `sin((q-2p)π/(2q))`, so that the midpoint node is
/// exactly zero and mirrored nodes are exact negatives of each other.
pub fn cos_pi_ratio(p: usize, q: usize) -> f64 {
    let (p, q) = (p as f64, q as f64);
    ((q - 2.0 * p) * PI / (2.0 * q)).sin()
}

/// The `n` roots of `U_n`, `cos(kπ/(n+1))` for k = 1..n, strictly decreasing.
pub fn cheb_u_roots(n: usize) -> ChebNodeSet {
    assert!(n >= 1, "U_n roots need n >= 1");
    let values = (1..=n)
        .map(|k| cos_pi_ratio(k, n + 1))
        .collect();
    ChebNodeSet {
        kind: NodeKind::SecondKindRoots,
        n,
        values,
    }
}

/// `cos((k-1)π/(n-1))` for k = 1..n, running from 1 down to -1.
pub fn a_family_nodes(n: usize) -> ChebNodeSet {
    assert!(n >= 2, "family A nodes need n >= 2");
    let values = (0..n)
        .map(|k| cos_pi_ratio(k, n - 1))
        .collect();
    ChebNodeSet {
        kind: NodeKind::FirstKindANodes,
        n,
        values,
    }
}

/// `P_n(α)` from `P_n = α P_{n-1} - P_{n-2}`, `P_0 = 1`, `P_1 = α`.
/// Equal to `U_n(α/2)`.
pub fn p_value(n: usize, alpha: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => alpha,
        _ => {
            let (mut prev, mut cur) = (1.0, alpha);
            for _ in 2..=n {
                let next = alpha * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn first_kind_examples() {
        assert_eq!(cheb_t(0, 123.0), 1.0);
        assert_eq!(cheb_t(3, 1.0), 1.0);
        assert_abs_diff_eq!(cheb_t(2, 0.5), -0.5, epsilon = 1e-15);
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(cheb_u(0, -7.0), 1.0);
        assert_abs_diff_eq!(cheb_u(2, 0.5), 0.0, epsilon = 1e-15);
        assert_eq!(cheb_u(3, 1.0), 4.0);
    }

    #[test]
    fn outside_unit_interval() {
        // T_2(2) = 7, U_2(2) = 15
        assert_eq!(cheb_t(2, 2.0), 7.0);
        assert_eq!(cheb_u(2, 2.0), 15.0);
    }

    #[test]
    fn root_sets() {
        let r1 = cheb_u_roots(1);
        assert_eq!(r1.kind, NodeKind::SecondKindRoots);
        assert_abs_diff_eq!(r1.values[0], 0.0, epsilon = 1e-15);

        let r2 = cheb_u_roots(2).values;
        assert_abs_diff_eq!(r2[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(r2[1], -0.5, epsilon = 1e-15);

        let r3 = cheb_u_roots(3).values;
        let h = 2f64.sqrt() / 2.0;
        for (got, want) in r3.iter().zip([h, 0.0, -h]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
            assert!(cheb_u(3, *got).abs() < 1e-12);
        }
    }

    #[test]
    fn roots_are_decreasing_inside_interval() {
        for n in 1..=20 {
            let v = cheb_u_roots(n).values;
            assert!(v.iter().all(|x| x.abs() < 1.0));
            assert!(v.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn a_nodes_span_unit_interval() {
        let v = a_family_nodes(4).values;
        assert_eq!(v[0], 1.0);
        assert_abs_diff_eq!(v[1], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(v[3], -1.0, epsilon = 1e-15);
    }

    #[test]
    fn p_value_examples() {
        assert_eq!(p_value(2, 3.0), 8.0);
        assert_eq!(p_value(0, 42.0), 1.0);
        assert_abs_diff_eq!(p_value(5, 1.2), cheb_u(5, 0.6), epsilon = 1e-12);
    }

    #[test]
    fn tables_match_scalar_evaluation() {
        for &x in &[-1.7, -0.3, 0.0, 0.9, 2.2] {
            let t = cheb_t_table(9, x);
            let u = cheb_u_table(9, x);
            for k in 0..9 {
                assert_eq!(t[k], cheb_t(k, x));
                assert_eq!(u[k], cheb_u(k, x));
            }
        }
        assert!(cheb_t_table(0, 0.5).is_empty());
        assert_eq!(cheb_u_table(1, 0.5), vec![1.0]);
    }

    // Trigonometric definitions as independent oracles.
    #[test]
    fn node_midpoints_and_mirrors_are_exact() {
        assert_eq!(cheb_u_roots(1).values, vec![0.0]);
        assert_eq!(a_family_nodes(3).values[1], 0.0);
        for n in 2..30 {
            let v = cheb_u_roots(n).values;
            for k in 0..n {
                assert_eq!(v[k], -v[n - 1 - k]);
                assert!((v[k] - ((k + 1) as f64 * PI / (n + 1) as f64).cos()).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn first_kind_matches_cosine_definition() {
        for k in 0..=12 {
            for step in 0..200 {
                let theta = PI * step as f64 / 199.0;
                let err = (cheb_t(k, theta.cos()) - (k as f64 * theta).cos()).abs();
                assert!(err < 1e-10, "k={k} theta={theta} err={err}");
            }
        }
    }

    #[test]
    fn second_kind_matches_sine_ratio() {
        for k in 0..=12 {
            for step in 1..200 {
                let theta = PI * step as f64 / 200.0;
                let want = ((k as f64 + 1.0) * theta).sin() / theta.sin();
                let err = (cheb_u(k, theta.cos()) - want).abs();
                assert!(err < 1e-9, "k={k} theta={theta} err={err}");
            }
        }
    }

    #[test]
    fn roots_vanish() {
        for n in 1..=12 {
            for x in cheb_u_roots(n).values {
                assert!((-1.0..=1.0).contains(&x));
                assert!(cheb_u(n, x).abs() < 1e-10, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn p_value_is_scaled_u() {
        for n in 0..=12 {
            for step in 0..=80 {
                let alpha = -4.0 + 0.1 * step as f64;
                let err = (p_value(n, alpha) - cheb_u(n, alpha / 2.0)).abs();
                assert!(err < 1e-10, "n={n} alpha={alpha}");
            }
        }
    }
}
