//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! implicit-shift QL, with accumulated eigenvectors.
//!
//! Sizes here are a few hundred to ~1500 (oscillator-basis Hamiltonian
//! blocks), where the O(n³) cost is a second or two at most.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Eigen decomposition of a real symmetric matrix, eigenvalues ascending.
pub struct SymmetricEigen {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    /// Row-major n×n; eigenvector k sits in column k.
    pub eigenvectors: Vec<f64>,
}

impl SymmetricEigen {
    pub fn eigenvector(&self, k: usize) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.eigenvectors[i * self.n + k])
    }
}

/// Decompose the row-major symmetric matrix `a` (n×n).
pub fn symmetric_eigen(a: &[f64], n: usize) -> SymmetricEigen {
    assert_eq!(a.len(), n * n);
    let mut z = a.to_vec();
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    tred2(&mut z, n, &mut d, &mut e);
    tqli(&mut d, &mut e, n, &mut z);
    // sort ascending, permuting eigenvector columns alongside
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = vec![0.0f64; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        eigenvalues.push(d[old_col]);
        for i in 0..n {
            eigenvectors[i * n + new_col] = z[i * n + old_col];
        }
    }
    SymmetricEigen { n, eigenvalues, eigenvectors }
}

/// Householder reduction to tridiagonal form; `z` accumulates the transform.
fn tred2(z: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += z[i * n + k].abs();
            }
            if scale == 0.0 {
                e[i] = z[i * n + l];
            } else {
                for k in 0..=l {
                    z[i * n + k] /= scale;
                    h += z[i * n + k] * z[i * n + k];
                }
                let mut f = z[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                z[i * n + l] = f - g;
                let mut ff = 0.0;
                for j in 0..=l {
                    z[j * n + i] = z[i * n + j] / h;
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += z[j * n + k] * z[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g += z[k * n + j] * z[i * n + k];
                    }
                    e[j] = g / h;
                    ff += e[j] * z[i * n + j];
                }
                let hh = ff / (h + h);
                for j in 0..=l {
                    f = z[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        z[j * n + k] -= f * e[k] + g * z[i * n + k];
                    }
                }
            }
        } else {
            e[i] = z[i * n + l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += z[i * n + k] * z[k * n + j];
                }
                for k in 0..i {
                    z[k * n + j] -= g * z[k * n + i];
                }
            }
        }
        d[i] = z[i * n + i];
        z[i * n + i] = 1.0;
        for j in 0..i {
            z[j * n + i] = 0.0;
            z[i * n + j] = 0.0;
        }
    }
}

/// Implicit-shift QL on the tridiagonal (d, e), rotations applied to `z`.
fn tqli(d: &mut [f64], e: &mut [f64], n: usize, z: &mut [f64]) {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "QL did not converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_analytic() {
        // eigenvalues of [[2,1],[1,2]] are 1 and 3
        let a = [2.0, 1.0, 1.0, 2.0];
        let eig = symmetric_eigen(&a, 2);
        assert_relative_eq!(eig.eigenvalues[0], 1.0, max_relative = 1e-13);
        assert_relative_eq!(eig.eigenvalues[1], 3.0, max_relative = 1e-13);
    }

    #[test]
    fn tridiagonal_toeplitz() {
        // -1/2/-1 Toeplitz: λ_k = 2 − 2 cos(kπ/(n+1))
        let n = 60;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 2.0;
            if i + 1 < n {
                a[i * n + i + 1] = -1.0;
                a[(i + 1) * n + i] = -1.0;
            }
        }
        let eig = symmetric_eigen(&a, n);
        for k in 0..n {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * core::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert_relative_eq!(eig.eigenvalues[k], want, max_relative = 1e-10, epsilon = 1e-12);
        }
    }

    #[test]
    fn residuals_and_orthonormality() {
        // pseudo-random symmetric matrix via an LCG
        let n = 40;
        let mut state = 0x2545f4914f6cdd1du64;
        let mut rnd = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = rnd();
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let eig = symmetric_eigen(&a, n);
        for k in 0..n {
            let v: Vec<f64> = eig.eigenvector(k).collect();
            // ||A v − λ v||
            let mut resid: f64 = 0.0;
            for i in 0..n {
                let mut av = 0.0;
                for j in 0..n {
                    av += a[i * n + j] * v[j];
                }
                resid += (av - eig.eigenvalues[k] * v[i]).powi(2);
            }
            assert!(resid.sqrt() < 1e-11, "residual {} at k={k}", resid.sqrt());
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert_relative_eq!(norm, 1.0, max_relative = 1e-12);
        }
    }
}
