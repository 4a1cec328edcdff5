//! Self-contained special functions: Bessel J_ν (real ν ≥ −1/2), spherical
//! Bessel j_l, Airy Ai and Ai′, and the Gamma function.
//!
//! Everything here is pure f64 arithmetic with no external dependencies, so
//! the whole density machinery stays portable. Accuracy targets: ~1e−13
//! relative over the argument ranges the physics uses (|z| up to ~10³),
//! tracked by the `est_error` field where the caller may care.

use crate::error::{CoreError, Result};
use core::f64::consts::PI;
use num_traits::Float;

/// Value plus a crude relative-error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult {
    pub value: f64,
    pub est_error: f64,
}

const EPS: f64 = f64::EPSILON;

// ---------------------------------------------------------------------------
// Gamma function
// ---------------------------------------------------------------------------

// Lanczos g = 7, n = 9 coefficient set.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for x > 0.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(CoreError::DomainError);
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // reflection keeps the Lanczos argument comfortably away from 0
        PI / ((PI * x).sin() * gamma_unchecked(1.0 - x))
    } else {
        let xm1 = x - 1.0;
        let mut acc = LANCZOS_COEF[0];
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            acc += c / (xm1 + i as f64);
        }
        let t = xm1 + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(xm1 + 0.5) * (-t).exp() * acc
    }
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(CoreError::DomainError);
    }
    if x < 0.5 {
        let g = gamma_unchecked(x);
        return Ok(g.ln());
    }
    let xm1 = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (xm1 + i as f64);
    }
    let t = xm1 + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (xm1 + 0.5) * t.ln() - t + acc.ln())
}

// ---------------------------------------------------------------------------
// Bessel J of real order
// ---------------------------------------------------------------------------

/// J_ν(z) for real ν ≥ −1/2 and z ≥ 0.
///
/// Dispatch: power series below z = 8; Miller downward recurrence with the
/// Neumann normalization for integer orders; the spherical-Bessel route for
/// half-integer orders; Hankel's asymptotic expansion (self-validated) or
/// Steed's continued fractions for generic real orders. Integer and
/// half-integer orders — the only ones the physics evaluates — stay at
/// machine accuracy for all arguments up to ~10³.
pub fn bessel_j(nu: f64, z: f64) -> Result<SpecFunResult> {
    if nu < -0.5 || !nu.is_finite() || z < 0.0 || !z.is_finite() {
        return Err(CoreError::DomainError);
    }
    if z == 0.0 {
        let value = if nu == 0.0 { 1.0 } else { 0.0 };
        return Ok(SpecFunResult { value, est_error: EPS });
    }
    if nu == -0.5 {
        let value = (2.0 / (PI * z)).sqrt() * z.cos();
        return Ok(SpecFunResult { value, est_error: 4.0 * EPS });
    }
    if z <= 8.0 {
        return Ok(bessel_j_series(nu, z));
    }
    let nu_round = nu.round();
    if nu == nu_round && nu >= 0.0 {
        return Ok(bessel_j_int_miller(nu as usize, z));
    }
    let twice = (2.0 * nu).round();
    if 2.0 * nu == twice && nu > 0.0 {
        // J_{l+1/2}(z) = sqrt(2z/π) j_l(z)
        let l = (nu - 0.5) as usize;
        let value = (2.0 * z / PI).sqrt() * sph_bessel_j(l, z);
        return Ok(SpecFunResult { value, est_error: 8.0 * EPS });
    }
    if nu >= 0.0 {
        if let Some(res) = bessel_j_hankel_asym(nu, z) {
            return Ok(res);
        }
        let (j, _y, _jp, _yp, err) = bessel_jy_steed(nu, z)?;
        Ok(SpecFunResult { value: j, est_error: err })
    } else {
        // J_{-a}(z) = J_a(z) cos(aπ) - Y_a(z) sin(aπ),  a = -ν ∈ (0, 1/2)
        let a = -nu;
        let (j, y, _jp, _yp, err) = bessel_jy_steed(a, z)?;
        let value = j * (a * PI).cos() - y * (a * PI).sin();
        Ok(SpecFunResult { value, est_error: err * (j.abs() + y.abs()) / value.abs().max(1e-300) })
    }
}

/// Integer-order J_n by Miller's downward recurrence, normalized with
/// J_0 + 2 Σ_k J_{2k} = 1. Stable at machine accuracy for any z.
fn bessel_j_int_miller(n: usize, z: f64) -> SpecFunResult {
    let start = n + 18 + (1.25 * z) as usize + ((40.0 * z).sqrt() as usize);
    let mut fp = 0.0f64; // J_{m+1} (scaled)
    let mut fc = 1e-30f64; // J_m
    let mut norm = 0.0f64; // J_0 + 2 Σ J_{2k}
    let mut fn_scaled = if n == start { fc } else { 0.0 };
    let mut m = start;
    while m > 0 {
        let fm = (2.0 * m as f64 / z) * fc - fp;
        fp = fc;
        fc = fm;
        m -= 1;
        if m == n {
            fn_scaled = fc;
        }
        if m % 2 == 0 {
            norm += if m == 0 { fc } else { 2.0 * fc };
        }
        if fc.abs() > 1e270 {
            let s = 1e-270;
            fc *= s;
            fp *= s;
            fn_scaled *= s;
            norm *= s;
        }
    }
    SpecFunResult { value: fn_scaled / norm, est_error: 8.0 * EPS }
}

/// Hankel's large-argument expansion; returns None when the asymptotic
/// series cannot reach ~1e-13.
fn bessel_j_hankel_asym(nu: f64, z: f64) -> Option<SpecFunResult> {
    let a = 4.0 * nu * nu;
    let zi8 = 1.0 / (8.0 * z);
    let mut p = 1.0f64; // sum of even terms with alternating signs
    let mut q = 0.0f64;
    let mut term = 1.0f64;
    let mut min_term = 1.0f64;
    let mut ok = false;
    for k in 0..40 {
        let kf = k as f64;
        // u_{k+1} = u_k (4ν² − (2k+1)²)/(8z (k+1))
        term *= (a - (2.0 * kf + 1.0) * (2.0 * kf + 1.0)) * zi8 / (kf + 1.0);
        if term.abs() >= min_term {
            break; // series started to diverge
        }
        min_term = term.abs();
        let j = k + 1;
        let sign = if (j / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if j % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if min_term < 1e-17 {
            ok = true;
            break;
        }
    }
    if !ok {
        return None;
    }
    let omega = z - (0.5 * nu + 0.25) * PI;
    let (s, c) = omega.sin_cos();
    let value = (2.0 / (PI * z)).sqrt() * (p * c - q * s);
    Some(SpecFunResult { value, est_error: 8.0 * EPS + min_term })
}

/// J_ν(z)/z^ν, finite at z = 0 (value 2^{-ν}/Γ(ν+1) there).
pub fn bessel_j_scaled(nu: f64, z: f64) -> Result<f64> {
    if nu < -0.5 || z < 0.0 {
        return Err(CoreError::DomainError);
    }
    if z < 1e-6 {
        // series limit: (1/2)^ν [1/Γ(ν+1) - (z/2)² /Γ(ν+2) + ...]
        let half = 0.5f64.powf(nu);
        let q = 0.25 * z * z;
        return Ok(half * (1.0 / gamma_unchecked(nu + 1.0) - q / gamma_unchecked(nu + 2.0)
            + q * q / (2.0 * gamma_unchecked(nu + 3.0))));
    }
    Ok(bessel_j(nu, z)?.value / z.powf(nu))
}

fn bessel_j_series(nu: f64, z: f64) -> SpecFunResult {
    let q = -0.25 * z * z;
    let mut term = (0.5 * z).powf(nu) / gamma_unchecked(nu + 1.0);
    let mut sum = term;
    let mut max_abs = term.abs();
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        max_abs = max_abs.max(term.abs());
        if term.abs() < EPS * sum.abs().max(max_abs * EPS) {
            break;
        }
    }
    let est_error = EPS * (max_abs / sum.abs().max(1e-300)).max(4.0);
    SpecFunResult { value: sum, est_error }
}

/// Steed's method: J_ν, Y_ν and derivatives for ν ≥ 0, z > 2.
///
/// CF1 gives J'/J at order ν; the order is walked down to μ ≲ z where the
/// complex CF2 converges; the Wronskian J_μ Y'_μ − Y_μ J'_μ = 2/(πz) then
/// fixes the normalization.
fn bessel_jy_steed(nu: f64, z: f64) -> Result<(f64, f64, f64, f64, f64)> {
    const MAXIT: usize = 20000;
    const FPMIN: f64 = 1e-290;

    let nl = (nu - z + 1.5).floor().max(0.0) as i64;
    let mu = nu - nl as f64;
    let ziv = 1.0 / z;

    // CF1 for J'_ν/J_ν
    let mut isign = 1.0f64;
    let mut h = nu * ziv;
    if h.abs() < FPMIN {
        h = FPMIN;
    }
    let mut b = 2.0 * nu * ziv;
    let mut c = h;
    let mut d = 0.0f64;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += 2.0 * ziv;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < 2.0 * EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(CoreError::DomainError);
    }

    // walk J and J' down from order ν to μ
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl; // remember the (scaled) value at order ν
    let rjp1 = rjpl;
    let mut fact = nu * ziv;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= ziv;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl; // J'_μ/J_μ

    // CF2 for (J' + iY')/(J + iY) at order μ
    let mut a = 0.25 - mu * mu;
    let mut p = -0.5 * ziv;
    let mut q = 1.0;
    let br = 2.0 * z;
    let mut bi = 2.0;
    let mut fct = a * ziv / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged2 = false;
    for i in 2..MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < 2.0 * EPS {
            converged2 = true;
            break;
        }
    }
    if !converged2 {
        return Err(CoreError::DomainError);
    }

    let gam = (p - f) / q;
    let w = 2.0 / (PI * z); // Wronskian
    let mut rjmu = (w / (q + gam * (p - f))).sqrt();
    rjmu = rjmu.copysign(rjl);
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);

    // rescale the ν-order values
    let scale = rjmu / rjl;
    let jnu = rjl1 * scale;
    let jpnu = rjp1 * scale;

    // walk Y up from μ to ν (only needed when nl > 0)
    let mut ry = rymu;
    let mut ryp = rymup;
    let mut xmu = mu;
    for _ in 0..nl {
        // Y_{μ+1} = (μ/z) Y_μ − Y'_μ;  Y'_{μ+1} = Y_μ − ((μ+1)/z) Y_{μ+1}
        let ynext = xmu * ziv * ry - ryp;
        ryp = ry - (xmu + 1.0) * ziv * ynext;
        ry = ynext;
        xmu += 1.0;
    }

    // CF1 roundoff grows superlinearly with the iteration count ~ max(z, ν)
    let it = z.max(nu);
    let err = EPS * (8.0 + 1.3e-4 * it * it);
    Ok((jnu, ry, jpnu, ryp, err))
}

// ---------------------------------------------------------------------------
// Spherical Bessel j_l
// ---------------------------------------------------------------------------

/// Spherical Bessel j_l(x) for l ≥ 0, x > 0, by downward recurrence with the
/// closure Σ (2n+1) j_n²(x) = 1 fixing the scale.
pub fn sph_bessel_j(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    if l == 0 {
        return x.sin() / x;
    }
    let j0 = x.sin() / x;
    let j1 = x.sin() / (x * x) - x.cos() / x;
    if l == 1 {
        return j1;
    }
    // start the downward recurrence well above both l and x
    let lstart = l + 18 + (1.25 * x) as usize + ((40.0 * x).sqrt() as usize);
    let mut fp = 0.0f64; // j_{n+1} (scaled)
    let mut fc = 1e-30f64; // j_n
    let mut fl = if l == lstart { fc } else { 0.0 };
    let mut norm = (2 * lstart + 1) as f64 * fc * fc; // Σ (2n+1) j_n² = 1
    let mut n = lstart;
    while n > 0 {
        // j_{n-1} = ((2n+1)/x) j_n − j_{n+1}
        let fm = ((2 * n + 1) as f64 / x) * fc - fp;
        fp = fc;
        fc = fm;
        n -= 1;
        if n == l {
            fl = fc;
        }
        norm += (2 * n + 1) as f64 * fc * fc;
        if fc.abs() > 1e250 {
            let s = 1e-250;
            fc *= s;
            fp *= s;
            fl *= s;
            norm *= s * s;
        }
    }
    // fc, fp now hold scaled j_0, j_1; fix magnitude by the closure relation
    // and the sign against whichever analytic low-order value is larger
    let scale_mag = 1.0 / norm.sqrt();
    let sign = if j0.abs() > j1.abs() {
        (j0 * fc).signum()
    } else {
        (j1 * fp).signum()
    };
    fl * scale_mag * sign
}

/// d/dx j_l(x) via j_l'(x) = j_{l-1}(x) − (l+1)/x · j_l(x).
pub fn sph_bessel_j_deriv(l: usize, x: f64) -> f64 {
    if l == 0 {
        return -sph_bessel_j(1, x);
    }
    sph_bessel_j(l - 1, x) - (l as f64 + 1.0) / x * sph_bessel_j(l, x)
}

// ---------------------------------------------------------------------------
// Airy functions
// ---------------------------------------------------------------------------

/// Ai(z) and Ai′(z).
///
/// Maclaurin series (exact rational coefficient recurrences) around zero,
/// Taylor-stepping of the Airy ODE y'' = z y between anchors on the mid
/// ranges, asymptotic expansions for |z| ≥ 12. The positive-side Maclaurin
/// window stops at z = 2 where the f/g cancellation starts to eat digits.
pub fn airy(z: f64) -> Result<(f64, f64)> {
    if !z.is_finite() || z.abs() > 1.0e6 {
        return Err(CoreError::DomainError);
    }
    if z >= -4.5 && z <= 2.0 {
        return Ok(airy_maclaurin(z));
    }
    if z >= 12.0 {
        return Ok(airy_asym_pos(z));
    }
    if z > 2.0 {
        // step inward from the asymptotic anchor; contamination by the
        // growing solution decays in this direction
        let (mut a, mut ap) = airy_asym_pos(12.0);
        let mut z0 = 12.0;
        loop {
            let step = (z - z0).max(-1.0);
            let (na, nap) = airy_taylor_step(z0, a, ap, step);
            a = na;
            ap = nap;
            z0 += step;
            if (z0 - z).abs() < 1e-14 {
                return Ok((a, ap));
            }
        }
    }
    if z <= -12.0 {
        return Ok(airy_asym_neg(z));
    }
    // -12 < z < -4.5: step outward from the Maclaurin anchor (oscillatory
    // region, both solutions bounded)
    let (mut a, mut ap) = airy_maclaurin(-4.5);
    let mut z0 = -4.5;
    loop {
        let step = (z - z0).max(-1.0);
        let (na, nap) = airy_taylor_step(z0, a, ap, step);
        a = na;
        ap = nap;
        z0 += step;
        if (z0 - z).abs() < 1e-14 {
            return Ok((a, ap));
        }
    }
}

fn airy_maclaurin(z: f64) -> (f64, f64) {
    // Ai(z) = c1 f(z) − c2 g(z);  f'' = z f type solutions
    let c1 = 0.355_028_053_887_817_24; // Ai(0) = 3^{-2/3}/Γ(2/3)
    let c2 = 0.258_819_403_792_806_8; // -Ai'(0) = 3^{-1/3}/Γ(1/3)
    let z3 = z * z * z;
    let mut tf = 1.0f64;
    let mut tg = z;
    let mut f = tf;
    let mut g = tg;
    let mut fp = 0.0f64; // f'
    let mut gp = 1.0f64; // g'
    for k in 1..60 {
        let kf = k as f64;
        tf *= z3 / ((3.0 * kf) * (3.0 * kf - 1.0));
        tg *= z3 / ((3.0 * kf + 1.0) * (3.0 * kf));
        f += tf;
        g += tg;
        if z != 0.0 {
            fp += tf * 3.0 * kf / z;
            gp += tg * (3.0 * kf + 1.0) / z;
        }
        if tf.abs() < EPS * f.abs() && tg.abs() < EPS * g.abs().max(1e-300) {
            break;
        }
    }
    (c1 * f - c2 * g, c1 * fp - c2 * gp)
}

/// One Taylor step of the Airy ODE: given y(z0), y'(z0), return y, y' at z0+h.
fn airy_taylor_step(z0: f64, y: f64, yp: f64, h: f64) -> (f64, f64) {
    const NT: usize = 34;
    let mut c = [0.0f64; NT];
    c[0] = y;
    c[1] = yp;
    c[2] = 0.5 * z0 * y;
    for k in 1..NT - 2 {
        c[k + 2] = (z0 * c[k] + c[k - 1]) / (((k + 2) * (k + 1)) as f64);
    }
    let mut val = 0.0;
    let mut der = 0.0;
    for k in (0..NT).rev() {
        val = val * h + c[k];
        if k >= 1 {
            der = der * h + c[k] * k as f64;
        }
    }
    (val, der)
}

fn airy_uv_terms(zeta: f64, nmax: usize) -> ([f64; 24], [f64; 24]) {
    // u_k/ζ^k and v_k/ζ^k
    let mut u = [0.0f64; 24];
    let mut v = [0.0f64; 24];
    u[0] = 1.0;
    v[0] = 1.0;
    let mut uk = 1.0f64;
    for k in 1..nmax.min(24) {
        let kf = k as f64;
        uk *= (6.0 * kf - 1.0) * (6.0 * kf - 3.0) * (6.0 * kf - 5.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        u[k] = uk / zeta.powi(k as i32);
        v[k] = u[k] * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
    }
    (u, v)
}

fn airy_asym_pos(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let (u, v) = airy_uv_terms(zeta, 24);
    let mut su = 0.0;
    let mut sv = 0.0;
    let mut sign = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..24 {
        if u[k].abs() > prev {
            break; // asymptotic series started diverging
        }
        su += sign * u[k];
        sv += sign * v[k];
        prev = u[k].abs();
        sign = -sign;
    }
    let pref = (-zeta).exp() / (2.0 * PI.sqrt() * z.powf(0.25));
    (pref * su, -z.powf(0.25) * (-zeta).exp() / (2.0 * PI.sqrt()) * sv)
}

fn airy_asym_neg(z: f64) -> (f64, f64) {
    let w = -z;
    let zeta = 2.0 / 3.0 * w.powf(1.5);
    let (u, v) = airy_uv_terms(zeta, 24);
    let (mut ue, mut uo, mut ve, mut vo) = (0.0, 0.0, 0.0, 0.0);
    let mut sign = 1.0;
    for k in 0..12 {
        if u[2 * k].abs() > 1.0 && k > 0 {
            break;
        }
        ue += sign * u[2 * k];
        ve += sign * v[2 * k];
        uo += sign * u[2 * k + 1];
        vo += sign * v[2 * k + 1];
        sign = -sign;
    }
    let (s, c) = (zeta - 0.25 * PI).sin_cos();
    let ai = (c * ue + s * uo) / (PI.sqrt() * w.powf(0.25));
    let aip = w.powf(0.25) / PI.sqrt() * (s * ve - c * vo);
    (ai, aip)
}
