//! Model-potential catalog and classical-mechanics primitives: V(r), the
//! classical momentum p(λ,r) = sqrt(2m[λ−V]), turning points, and the actions,
//! periods and Morse indices of the radial "+" and "−" closed orbits.
//!
//! Unit conventions follow the figures they reproduce: ħ = m = 1 for smooth
//! potentials, ħ² = 2m = 1 for billiards. Units are plain scalars; nothing is
//! checked at runtime.

use crate::error::{CoreError, Result};
use crate::quadrature;
use num_traits::Float;

/// Which supported system a model describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    /// Infinite well on [0, L].
    Box1D { l: f64 },
    /// V(x) = x⁴/4.
    Quartic1D,
    /// V(x) = a·x (unbound; only the primitive "+" orbit exists).
    Linear1D { slope: f64 },
    /// Isotropic harmonic oscillator in D dimensions, V = mω²r²/2.
    Iho { d: u32, omega: f64 },
    /// Rectangular billiard with sides Qx, Qy.
    RectBilliard { qx: f64, qy: f64 },
    /// Spherical billiard in D dimensions with radius R.
    SphereBilliard { d: u32, radius: f64 },
    /// Circular (disk) billiard with radius R.
    CircleBilliard { radius: f64 },
    /// V(x,y) = (x⁴ + y⁴)/2 − κ x²y², bound for κ < 1.
    CoupledQuartic2D { kappa: f64 },
}

/// A catalog entry plus its mass and ħ convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialModel {
    pub kind: Kind,
    pub mass: f64,
    pub hbar: f64,
}

/// Reflection off the nearest ("+") or farthest ("−") turning point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSign {
    Plus,
    Minus,
}

/// One radial closed orbit: action, running time, Morse index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialOrbitSpec {
    pub sign: OrbitSign,
    pub repetitions: u32,
    pub action: f64,
    pub period: f64,
    pub morse: i32,
}

/// Relative tolerance for action quadratures; phases carry S/ħ so action
/// errors must stay far below ħ.
pub const ACTION_REL_TOL: f64 = 1e-10;

impl PotentialModel {
    fn validated(kind: Kind, mass: f64, hbar: f64) -> Result<Self> {
        let ok = match kind {
            Kind::Box1D { l } => l > 0.0,
            Kind::Quartic1D => true,
            Kind::Linear1D { slope } => slope > 0.0,
            Kind::Iho { d, omega } => d >= 1 && omega > 0.0,
            Kind::RectBilliard { qx, qy } => qx > 0.0 && qy > 0.0,
            Kind::SphereBilliard { d, radius } => d >= 1 && radius > 0.0,
            Kind::CircleBilliard { radius } => radius > 0.0,
            Kind::CoupledQuartic2D { kappa } => kappa < 1.0,
        };
        if !ok || mass <= 0.0 || hbar <= 0.0 {
            return Err(CoreError::DomainError);
        }
        Ok(Self { kind, mass, hbar })
    }

    /// ħ = m = 1 convention.
    pub fn box1d(l: f64) -> Result<Self> {
        Self::validated(Kind::Box1D { l }, 1.0, 1.0)
    }

    pub fn quartic1d() -> Self {
        Self { kind: Kind::Quartic1D, mass: 1.0, hbar: 1.0 }
    }

    pub fn linear1d(slope: f64) -> Result<Self> {
        Self::validated(Kind::Linear1D { slope }, 1.0, 1.0)
    }

    pub fn iho(d: u32, omega: f64) -> Result<Self> {
        Self::validated(Kind::Iho { d, omega }, 1.0, 1.0)
    }

    /// ħ² = 2m = 1 convention (billiard figures).
    pub fn rect_billiard(qx: f64, qy: f64) -> Result<Self> {
        Self::validated(Kind::RectBilliard { qx, qy }, 0.5, 1.0)
    }

    pub fn sphere_billiard(d: u32, radius: f64) -> Result<Self> {
        Self::validated(Kind::SphereBilliard { d, radius }, 0.5, 1.0)
    }

    pub fn circle_billiard(radius: f64) -> Result<Self> {
        Self::validated(Kind::CircleBilliard { radius }, 0.5, 1.0)
    }

    pub fn coupled_quartic2d(kappa: f64) -> Result<Self> {
        Self::validated(Kind::CoupledQuartic2D { kappa }, 1.0, 1.0)
    }

    pub fn with_units(mut self, mass: f64, hbar: f64) -> Result<Self> {
        self.mass = mass;
        self.hbar = hbar;
        Self::validated(self.kind, mass, hbar)
    }

    pub fn dim(&self) -> u32 {
        match self.kind {
            Kind::Box1D { .. } | Kind::Quartic1D | Kind::Linear1D { .. } => 1,
            Kind::Iho { d, .. } | Kind::SphereBilliard { d, .. } => d,
            Kind::RectBilliard { .. }
            | Kind::CircleBilliard { .. }
            | Kind::CoupledQuartic2D { .. } => 2,
        }
    }

    pub fn is_billiard(&self) -> bool {
        matches!(
            self.kind,
            Kind::Box1D { .. }
                | Kind::RectBilliard { .. }
                | Kind::SphereBilliard { .. }
                | Kind::CircleBilliard { .. }
        )
    }

    /// True when V depends only on |r| (1D models count as radial).
    pub fn is_radial(&self) -> bool {
        !matches!(self.kind, Kind::RectBilliard { .. } | Kind::CoupledQuartic2D { .. })
    }

    /// V at a Cartesian point. Billiards return 0 inside and error outside.
    pub fn evaluate(&self, r: &[f64]) -> Result<f64> {
        match self.kind {
            Kind::Box1D { l } => {
                let x = r[0];
                if x < 0.0 || x > l {
                    return Err(CoreError::PointOutsideBilliard);
                }
                Ok(0.0)
            }
            Kind::Quartic1D => Ok(0.25 * r[0].powi(4)),
            Kind::Linear1D { slope } => Ok(slope * r[0]),
            Kind::Iho { omega, .. } => {
                let r2: f64 = r.iter().map(|x| x * x).sum();
                Ok(0.5 * self.mass * omega * omega * r2)
            }
            Kind::RectBilliard { qx, qy } => {
                let (x, y) = (r[0], r[1]);
                if x < 0.0 || x > qx || y < 0.0 || y > qy {
                    return Err(CoreError::PointOutsideBilliard);
                }
                Ok(0.0)
            }
            Kind::SphereBilliard { radius, .. } | Kind::CircleBilliard { radius } => {
                let rr: f64 = r.iter().map(|x| x * x).sum::<f64>().sqrt();
                if rr > radius {
                    return Err(CoreError::PointOutsideBilliard);
                }
                Ok(0.0)
            }
            Kind::CoupledQuartic2D { kappa } => {
                let (x, y) = (r[0], r[1]);
                Ok(0.5 * (x.powi(4) + y.powi(4)) - kappa * x * x * y * y)
            }
        }
    }

    /// V(r) for radial/1D kinds; 1D potentials take the signed coordinate.
    pub fn evaluate_radial(&self, r: f64) -> Result<f64> {
        match self.kind {
            Kind::RectBilliard { .. } | Kind::CoupledQuartic2D { .. } => {
                Err(CoreError::DomainError)
            }
            _ => self.evaluate(&[r, 0.0, 0.0, 0.0][..self.dim().max(1) as usize].as_ref()),
        }
    }

    /// dV/dr for smooth radial/1D kinds (turning-point linearization).
    pub fn vprime_radial(&self, r: f64) -> Result<f64> {
        match self.kind {
            Kind::Quartic1D => Ok(r.powi(3)),
            Kind::Linear1D { slope } => Ok(slope),
            Kind::Iho { omega, .. } => Ok(self.mass * omega * omega * r),
            _ => Err(CoreError::SlopeNonpositive),
        }
    }

    /// |p|(λ, r) = sqrt(2m[λ − V(r)]) at a Cartesian point.
    pub fn classical_momentum(&self, lambda: f64, r: &[f64]) -> Result<f64> {
        let v = self.evaluate(r)?;
        let gap = lambda - v;
        if gap < 0.0 {
            return Err(CoreError::ClassicallyForbidden);
        }
        Ok((2.0 * self.mass * gap).sqrt())
    }

    pub fn momentum_radial(&self, lambda: f64, r: f64) -> Result<f64> {
        let v = self.evaluate_radial(r)?;
        let gap = lambda - v;
        if gap < 0.0 {
            return Err(CoreError::ClassicallyForbidden);
        }
        Ok((2.0 * self.mass * gap).sqrt())
    }

    /// Fermi momentum sqrt(2mλ).
    pub fn fermi_momentum(&self, lambda: f64) -> f64 {
        (2.0 * self.mass * lambda).sqrt()
    }

    /// Radial/1D turning point r_λ with V(r_λ) = λ; billiards return the wall.
    pub fn turning_point(&self, lambda: f64) -> Result<f64> {
        if lambda <= 0.0 && !matches!(self.kind, Kind::Linear1D { .. }) {
            return Err(CoreError::NoTurningPoint);
        }
        match self.kind {
            Kind::Box1D { l } => Ok(l),
            Kind::SphereBilliard { radius, .. } | Kind::CircleBilliard { radius } => Ok(radius),
            Kind::Quartic1D => Ok((4.0 * lambda).powf(0.25)),
            Kind::Linear1D { slope } => Ok(lambda / slope),
            Kind::Iho { omega, .. } => Ok((2.0 * lambda / self.mass).sqrt() / omega),
            Kind::RectBilliard { .. } | Kind::CoupledQuartic2D { .. } => {
                Err(CoreError::DomainError)
            }
        }
    }

    /// Left and right turning points of the 1D motion at energy λ.
    pub fn turning_points_1d(&self, lambda: f64) -> Result<(f64, f64)> {
        match self.kind {
            Kind::Box1D { l } => Ok((0.0, l)),
            Kind::Quartic1D | Kind::Iho { d: 1, .. } => {
                let xr = self.turning_point(lambda)?;
                Ok((-xr, xr))
            }
            Kind::Linear1D { slope } => Ok((f64::NEG_INFINITY, lambda / slope)),
            _ => Err(CoreError::DomainError),
        }
    }

    /// 2 ∫_x^{x_r} p dx' with the sqrt singularity at x_r removed by the
    /// substitution x' = x_r − t².
    fn action_to_right(&self, lambda: f64, x: f64, xr: f64) -> Result<f64> {
        let tmax = (xr - x).sqrt();
        let m2 = 2.0 * self.mass;
        let f = |t: f64| {
            let xp = xr - t * t;
            let gap = (lambda - self.evaluate_radial(xp).unwrap_or(f64::INFINITY)).max(0.0);
            2.0 * t * (m2 * gap).sqrt()
        };
        quadrature::integrate(f, 0.0, tmax, ACTION_REL_TOL).map(|v| 2.0 * v)
    }

    fn action_to_left(&self, lambda: f64, x: f64, xl: f64) -> Result<f64> {
        let tmax = (x - xl).sqrt();
        let m2 = 2.0 * self.mass;
        let f = |t: f64| {
            let xp = xl + t * t;
            let gap = (lambda - self.evaluate_radial(xp).unwrap_or(f64::INFINITY)).max(0.0);
            2.0 * t * (m2 * gap).sqrt()
        };
        quadrature::integrate(f, 0.0, tmax, ACTION_REL_TOL).map(|v| 2.0 * v)
    }

    /// 2 ∫_x^{x_r} m/p dx' (running time of the "+" leg), same substitution.
    fn time_to_right(&self, lambda: f64, x: f64, xr: f64) -> Result<f64> {
        let tmax = (xr - x).sqrt();
        let m2 = 2.0 * self.mass;
        let f = |t: f64| {
            let xp = xr - t * t;
            let gap = lambda - self.evaluate_radial(xp).unwrap_or(f64::INFINITY);
            if gap <= 0.0 {
                return 0.0;
            }
            2.0 * t * self.mass / (m2 * gap).sqrt()
        };
        quadrature::integrate(f, 0.0, tmax, ACTION_REL_TOL).map(|v| 2.0 * v)
    }

    fn time_to_left(&self, lambda: f64, x: f64, xl: f64) -> Result<f64> {
        let tmax = (x - xl).sqrt();
        let m2 = 2.0 * self.mass;
        let f = |t: f64| {
            let xp = xl + t * t;
            let gap = lambda - self.evaluate_radial(xp).unwrap_or(f64::INFINITY);
            if gap <= 0.0 {
                return 0.0;
            }
            2.0 * t * self.mass / (m2 * gap).sqrt()
        };
        quadrature::integrate(f, 0.0, tmax, ACTION_REL_TOL).map(|v| 2.0 * v)
    }

    /// Action and period (S₁, T₁) of the primitive full oscillation.
    pub fn primitive_cycle(&self, lambda: f64) -> Result<(f64, f64)> {
        match self.kind {
            Kind::Box1D { l } => {
                let p = self.fermi_momentum(lambda);
                Ok((2.0 * l * p, 2.0 * l * self.mass / p))
            }
            Kind::Iho { omega, .. } => Ok((
                2.0 * core::f64::consts::PI * lambda / omega,
                2.0 * core::f64::consts::PI / omega,
            )),
            Kind::Quartic1D => {
                let (xl, xr) = self.turning_points_1d(lambda)?;
                let xm = 0.5 * (xl + xr);
                let s =
                    self.action_to_right(lambda, xm, xr)? + self.action_to_left(lambda, xm, xl)?;
                let t = self.time_to_right(lambda, xm, xr)? + self.time_to_left(lambda, xm, xl)?;
                Ok((s, t))
            }
            _ => Err(CoreError::DomainError),
        }
    }

    /// Radial/1D closed orbit "±" with k full repetitions, evaluated at the
    /// starting point r (1D: signed coordinate) and energy λ̃.
    ///
    /// IHO uses the closed forms; smooth 1D potentials are integrated by
    /// adaptive quadrature; hard walls add 2 Morse units per reflection.
    pub fn radial_orbit(
        &self,
        lambda: f64,
        r: f64,
        sign: OrbitSign,
        k: u32,
    ) -> Result<RadialOrbitSpec> {
        let kf = k as f64;
        match self.kind {
            Kind::Iho { d, omega } => {
                let p = self.momentum_radial(lambda, r)?;
                let plam = self.fermi_momentum(lambda);
                let asin = (self.mass * omega * r.abs() / plam).min(1.0).asin();
                let (s, t, mu) = match sign {
                    OrbitSign::Plus => (
                        (2.0 * kf + 1.0) * core::f64::consts::PI * lambda / omega
                            - r.abs() * p
                            - 2.0 * lambda / omega * asin,
                        (2.0 * kf + 1.0) * core::f64::consts::PI / omega - 2.0 / omega * asin,
                        (2 * k * d + 1) as i32,
                    ),
                    OrbitSign::Minus => (
                        (2.0 * kf + 1.0) * core::f64::consts::PI * lambda / omega
                            + r.abs() * p
                            + 2.0 * lambda / omega * asin,
                        (2.0 * kf + 1.0) * core::f64::consts::PI / omega + 2.0 / omega * asin,
                        (2 * k * d + d) as i32,
                    ),
                };
                Ok(RadialOrbitSpec { sign, repetitions: k, action: s, period: t, morse: mu })
            }
            Kind::Box1D { l } => {
                if r < 0.0 || r > l {
                    return Err(CoreError::PointOutsideBilliard);
                }
                let p = self.fermi_momentum(lambda);
                let d_near = r.min(l - r);
                let d_far = l - d_near;
                let dist = match sign {
                    OrbitSign::Plus => d_near,
                    OrbitSign::Minus => d_far,
                };
                let path = 2.0 * dist + 2.0 * kf * l;
                Ok(RadialOrbitSpec {
                    sign,
                    repetitions: k,
                    action: p * path,
                    period: self.mass * path / p,
                    morse: (2 * (2 * k + 1)) as i32,
                })
            }
            Kind::Linear1D { slope } => {
                if sign == OrbitSign::Minus || k > 0 {
                    return Err(CoreError::NoTurningPoint);
                }
                let gap = lambda - slope * r;
                if gap < 0.0 {
                    return Err(CoreError::ClassicallyForbidden);
                }
                let m2 = 2.0 * self.mass;
                let s = 4.0 * m2.sqrt() / (3.0 * slope) * gap.powf(1.5);
                let t = 2.0 * (m2 * gap).sqrt() / slope;
                Ok(RadialOrbitSpec { sign, repetitions: k, action: s, period: t, morse: 1 })
            }
            Kind::Quartic1D => {
                let (xl, xr) = self.turning_points_1d(lambda)?;
                if r < xl || r > xr {
                    return Err(CoreError::ClassicallyForbidden);
                }
                let near_is_right = (xr - r) <= (r - xl);
                let go_right = match sign {
                    OrbitSign::Plus => near_is_right,
                    OrbitSign::Minus => !near_is_right,
                };
                let (s0, t0) = if go_right {
                    (self.action_to_right(lambda, r, xr)?, self.time_to_right(lambda, r, xr)?)
                } else {
                    (self.action_to_left(lambda, r, xl)?, self.time_to_left(lambda, r, xl)?)
                };
                let (s1, t1) = self.primitive_cycle(lambda)?;
                Ok(RadialOrbitSpec {
                    sign,
                    repetitions: k,
                    action: s0 + kf * s1,
                    period: t0 + kf * t1,
                    morse: (2 * k + 1) as i32,
                })
            }
            _ => Err(CoreError::DomainError),
        }
    }

    /// Action of the primitive "+" orbit for the uniform turning-point
    /// argument: inside returns (2∫_r^{r_λ} p, true); outside returns the
    /// barrier integral (2∫_{r_λ}^r |p̄|, false).
    pub fn plus_action_uniform(&self, lambda: f64, r: f64) -> Result<(f64, bool)> {
        let rlam = self.turning_point(lambda)?;
        let m2 = 2.0 * self.mass;
        if r <= rlam {
            match self.kind {
                Kind::Iho { .. } | Kind::Linear1D { .. } => {
                    let orb = self.radial_orbit(lambda, r, OrbitSign::Plus, 0)?;
                    Ok((orb.action, true))
                }
                Kind::Quartic1D => Ok((self.action_to_right(lambda, r, rlam)?, true)),
                _ => Err(CoreError::DomainError),
            }
        } else {
            // forbidden side: 2 ∫_{r_λ}^{r} sqrt(2m[V−λ]), substitution
            // x = r_λ + t² removes the sqrt zero at r_λ
            let tmax = (r - rlam).sqrt();
            let f = |t: f64| {
                let xp = rlam + t * t;
                let gap = (self.evaluate_radial(xp).unwrap_or(f64::INFINITY) - lambda).max(0.0);
                2.0 * t * (m2 * gap).sqrt()
            };
            let s = quadrature::integrate(f, 0.0, tmax, ACTION_REL_TOL)? * 2.0;
            Ok((s, false))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use core::f64::consts::PI;

    #[test]
    fn evaluate_catalog() {
        let iho = PotentialModel::iho(3, 1.0).unwrap();
        assert_eq!(iho.evaluate(&[0.0, 0.0, 0.0]).unwrap(), 0.0);
        let quartic = PotentialModel::quartic1d();
        assert_relative_eq!(quartic.evaluate(&[2.0]).unwrap(), 4.0);
        let cq = PotentialModel::coupled_quartic2d(0.6).unwrap();
        assert_relative_eq!(cq.evaluate(&[1.0, 1.0]).unwrap(), 0.4, max_relative = 1e-14);
        let sphere = PotentialModel::sphere_billiard(3, 1.0).unwrap();
        assert!(sphere.evaluate(&[1.2, 0.0, 0.0]).is_err());
    }

    #[test]
    fn momentum_basics() {
        let boxm = PotentialModel::box1d(2.0).unwrap();
        assert_relative_eq!(boxm.classical_momentum(2.0, &[1.0]).unwrap(), 2.0);
        let iho = PotentialModel::iho(1, 1.0).unwrap();
        assert_relative_eq!(iho.classical_momentum(2.0, &[2.0]).unwrap(), 0.0, epsilon = 1e-12);
        let quartic = PotentialModel::quartic1d();
        assert_relative_eq!(quartic.classical_momentum(1.0, &[0.0]).unwrap(), 2.0f64.sqrt());
        assert!(quartic.classical_momentum(1.0, &[5.0]).is_err());
    }

    #[test]
    fn turning_points() {
        let iho = PotentialModel::iho(1, 1.0).unwrap();
        assert_relative_eq!(iho.turning_point(8.0).unwrap(), 4.0, max_relative = 1e-13);
        let sphere = PotentialModel::sphere_billiard(3, 1.0).unwrap();
        assert_relative_eq!(sphere.turning_point(17.0).unwrap(), 1.0);
        let quartic = PotentialModel::quartic1d();
        assert_relative_eq!(quartic.turning_point(4.0).unwrap(), 2.0, max_relative = 1e-13);
        // momentum vanishes at the turning point
        let xl = quartic.turning_point(3.3).unwrap();
        assert!(quartic.momentum_radial(3.3, xl).unwrap().abs() < 1e-10);
        assert!(iho.turning_point(-1.0).is_err());
    }

    #[test]
    fn iho_orbit_closed_forms() {
        let iho = PotentialModel::iho(3, 1.0).unwrap();
        let lam = 21.0;
        // r → 0: S → (2k+1)πλ̃/ω, T → (2k+1)π/ω for both signs
        let o = iho.radial_orbit(lam, 1e-12, OrbitSign::Plus, 0).unwrap();
        assert_relative_eq!(o.action, PI * lam, max_relative = 1e-9);
        assert_relative_eq!(o.period, PI, max_relative = 1e-9);
        assert_eq!(o.morse, 1);
        let om = iho.radial_orbit(lam, 1e-12, OrbitSign::Minus, 0).unwrap();
        assert_eq!(om.morse, 3);
        // Morse index pattern μ₊ = 2kD+1, μ₋ = 2kD+D
        let o2 = iho.radial_orbit(lam, 1.0, OrbitSign::Plus, 2).unwrap();
        assert_eq!(o2.morse, 13);
        let om2 = iho.radial_orbit(lam, 1.0, OrbitSign::Minus, 2).unwrap();
        assert_eq!(om2.morse, 15);
    }

    #[test]
    fn linear_plus_orbit_closed_form() {
        let lin = PotentialModel::linear1d(1.5).unwrap();
        let (lam, x) = (3.0, 0.7);
        let o = lin.radial_orbit(lam, x, OrbitSign::Plus, 0).unwrap();
        let want = 4.0 * 2.0f64.sqrt() / (3.0 * 1.5) * (lam - 1.5 * x).powf(1.5);
        assert_relative_eq!(o.action, want, max_relative = 1e-13);
        assert!(lin.radial_orbit(lam, x, OrbitSign::Minus, 0).is_err());
        assert!(lin.radial_orbit(lam, x, OrbitSign::Plus, 1).is_err());
    }

    #[test]
    fn quartic_action_closure_and_period() {
        let q = PotentialModel::quartic1d();
        let lam = 12.0;
        for &x in &[0.0, 0.3, 1.1] {
            let sp = q.radial_orbit(lam, x, OrbitSign::Plus, 0).unwrap();
            let sm = q.radial_orbit(lam, x, OrbitSign::Minus, 0).unwrap();
            let (s1, t1) = q.primitive_cycle(lam).unwrap();
            // S₊⁽⁰⁾ + S₋⁽⁰⁾ = S₁ at quadrature tolerance
            assert_relative_eq!(sp.action + sm.action, s1, max_relative = 1e-8);
            assert_relative_eq!(sp.period + sm.period, t1, max_relative = 1e-8);
        }
    }

    #[test]
    fn period_is_action_derivative() {
        // T = dS/dλ by central differences, 1e−6 relative
        let q = PotentialModel::quartic1d();
        let (lam, x) = (9.0, 0.8);
        let h = 1e-5 * lam;
        for sign in [OrbitSign::Plus, OrbitSign::Minus] {
            let s_hi = q.radial_orbit(lam + h, x, sign, 1).unwrap().action;
            let s_lo = q.radial_orbit(lam - h, x, sign, 1).unwrap().action;
            let t = q.radial_orbit(lam, x, sign, 1).unwrap().period;
            assert_relative_eq!((s_hi - s_lo) / (2.0 * h), t, max_relative = 1e-6);
        }
        // and for the IHO closed forms
        let iho = PotentialModel::iho(4, 1.0).unwrap();
        let s_hi = iho.radial_orbit(10.0 + 1e-5, 1.7, OrbitSign::Minus, 0).unwrap().action;
        let s_lo = iho.radial_orbit(10.0 - 1e-5, 1.7, OrbitSign::Minus, 0).unwrap().action;
        let t = iho.radial_orbit(10.0, 1.7, OrbitSign::Minus, 0).unwrap().period;
        assert_relative_eq!((s_hi - s_lo) / 2e-5, t, max_relative = 1e-6);
    }

    #[test]
    fn quartic_action_quadrature_cross_check() {
        // independent oracle: trapezoid sums in the substituted variable at
        // two resolutions, Richardson-extrapolated
        let q = PotentialModel::quartic1d();
        let lam = 8.0;
        let x = 0.5;
        let xr = q.turning_point(lam).unwrap();
        let tmax = (xr - x).sqrt();
        let integrand = |t: f64| {
            let xp = xr - t * t;
            2.0 * t * (2.0 * (lam - 0.25 * xp.powi(4))).max(0.0).sqrt()
        };
        let trap = |n: usize| {
            let h = tmax / n as f64;
            let mut s = 0.5 * (integrand(0.0) + integrand(tmax));
            for i in 1..n {
                s += integrand(i as f64 * h);
            }
            s * h
        };
        let t1 = trap(4000);
        let t2 = trap(8000);
        let oracle = 2.0 * (4.0 * t2 - t1) / 3.0;
        let got = q.radial_orbit(lam, x, OrbitSign::Plus, 0).unwrap().action;
        assert_relative_eq!(got, oracle, max_relative = 1e-8);
    }

    #[test]
    fn box_orbits() {
        let b = PotentialModel::box1d(3.0).unwrap();
        let lam = 2.0;
        let p = b.fermi_momentum(lam);
        let o = b.radial_orbit(lam, 1.0, OrbitSign::Plus, 0).unwrap();
        assert_relative_eq!(o.action, 2.0 * p, max_relative = 1e-14);
        assert_eq!(o.morse, 2);
        let o1 = b.radial_orbit(lam, 1.0, OrbitSign::Minus, 1).unwrap();
        assert_relative_eq!(o1.action, (4.0 + 6.0) * p, max_relative = 1e-14);
        assert_eq!(o1.morse, 6);
    }

    #[test]
    fn uniform_action_both_sides() {
        let q = PotentialModel::quartic1d();
        let lam = 5.0;
        let xr = q.turning_point(lam).unwrap();
        let (si, inside) = q.plus_action_uniform(lam, 0.9 * xr).unwrap();
        assert!(inside && si > 0.0);
        let (so, outside_flag) = q.plus_action_uniform(lam, 1.1 * xr).unwrap();
        assert!(!outside_flag && so > 0.0);
        // both vanish at the turning point
        let (s0, _) = q.plus_action_uniform(lam, xr).unwrap();
        assert!(s0.abs() < 1e-8);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(PotentialModel::box1d(-1.0).is_err());
        assert!(PotentialModel::coupled_quartic2d(1.0).is_err());
        assert!(PotentialModel::iho(0, 1.0).is_err());
    }
}
