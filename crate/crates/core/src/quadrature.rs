//! Adaptive Gauss–Kronrod quadrature (7–15 point pair).
//!
//! Actions enter semiclassical phases divided by ħ, so the integrator runs at
//! a tight default relative tolerance of 1e−10. Square-root turning-point
//! singularities are removed by the substitutions in [`crate::potentials`]
//! before the integrand reaches this module.

use crate::error::{CoreError, Result};
use alloc::vec::Vec;
use num_traits::Float;

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights on the shared nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut result_k = WGK[7] * fc;
    let mut result_g = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let fa = f(c - x);
        let fb = f(c + x);
        result_k += WGK[j] * (fa + fb);
        if j % 2 == 1 {
            result_g += WG[j / 2] * (fa + fb);
        }
    }
    (result_k * h, (result_k - result_g).abs() * h.abs())
}

/// Integrate f over [a, b] to relative tolerance `rel_tol` (with a small
/// absolute floor), by adaptive bisection on the Kronrod error estimate.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (total0, err0) = gk15(&f, a, b);
    if err0 <= rel_tol * total0.abs().max(1e-300) {
        return Ok(total0);
    }
    // worklist of (a, b, value, error) intervals, splitting the worst one;
    // convergence is relative to the result with an L1-scale fallback for
    // integrals that cancel
    let mut intervals: Vec<(f64, f64, f64, f64)> = Vec::with_capacity(64);
    intervals.push((a, b, total0, err0));
    for _ in 0..2000 {
        let total: f64 = intervals.iter().map(|iv| iv.2).fold(0.0, |s, v| s + v);
        let err: f64 = intervals.iter().map(|iv| iv.3).fold(0.0, |s, v| s + v);
        let l1: f64 = intervals.iter().map(|iv| iv.2.abs()).fold(0.0, |s, v| s + v);
        if err <= rel_tol * total.abs().max(0.01 * l1).max(1e-300) {
            return Ok(total);
        }
        let (worst, _) = intervals
            .iter()
            .enumerate()
            .fold((0usize, -1.0f64), |acc, (i, iv)| {
                if iv.3 > acc.1 {
                    (i, iv.3)
                } else {
                    acc
                }
            });
        let (ia, ib, _, _) = intervals.swap_remove(worst);
        let m = 0.5 * (ia + ib);
        if m == ia || m == ib {
            return Err(CoreError::QuadratureFailure);
        }
        let (v1, e1) = gk15(&f, ia, m);
        let (v2, e2) = gk15(&f, m, ib);
        intervals.push((ia, m, v1, e1));
        intervals.push((m, ib, v2, e2));
    }
    Err(CoreError::QuadratureFailure)
}

/// Root of a bracketed function by bisection refined with secant steps;
/// f(a) and f(b) must have opposite signs.
pub fn bracket_root<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> Result<f64> {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(CoreError::RootNotBracketed);
    }
    for _ in 0..300 {
        let m = 0.5 * (a + b);
        // try a half-secant step, fall back to the midpoint outside [a, b]
        let s = b - fb * (b - a) / (fb - fa);
        let x = if s.is_finite() && s > a.min(b) && s < a.max(b) {
            0.5 * (s + m)
        } else {
            m
        };
        let fx = f(x);
        if fx == 0.0 || (b - a).abs() < tol {
            return Ok(x);
        }
        if fa * fx < 0.0 {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::PI;
    use num_traits::Float;

    #[test]
    fn polynomial_exact() {
        let v = integrate(|x| 3.0 * x * x, 0.0, 2.0, 1e-12).unwrap();
        assert_relative_eq!(v, 8.0, max_relative = 1e-13);
    }

    #[test]
    fn oscillatory() {
        let v = integrate(|x| (10.5 * x).sin(), 0.0, PI, 1e-12).unwrap();
        assert_relative_eq!(v, (1.0 - (10.5 * PI).cos()) / 10.5, max_relative = 1e-10);
        // fully cancelling case resolves against the L1 scale
        let z = integrate(|x| (10.0 * x).sin(), 0.0, PI, 1e-10).unwrap();
        assert!(z.abs() < 1e-10);
    }

    #[test]
    fn near_singular_converges() {
        let raw = integrate(|x: f64| 1.0 / (1.0 - x).sqrt(), 0.0, 1.0 - 1e-12, 1e-8).unwrap();
        assert!((raw - 2.0).abs() < 1e-5);
    }

    #[test]
    fn root_finding() {
        let r = bracket_root(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert_relative_eq!(r, 2.0f64.sqrt(), max_relative = 1e-12);
        assert!(bracket_root(|x| x * x + 1.0, 0.0, 1.0, 1e-12).is_err());
    }
}
