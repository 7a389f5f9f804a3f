//! Coordinate charts on the hyperbolic space H₃ of curvature radius 1.
//!
//! Three charts are connected here:
//! * horospheric coordinates (x, y, z), in which the spatial metric reads
//!   dl² = e^{2z}(dx² + dy²) + dz² and the wave equations separate;
//! * the embedding (u₀, u₁, u₂, u₃) into the upper sheet of the unit
//!   hyperboloid u₀² − u₁² − u₂² − u₃² = 1 in Minkowski 4-space;
//! * the Poincaré ball qᵢ = uᵢ/u₀ with q₁² + q₂² + q₃² < 1.

use crate::error::{Error, Result};
use crate::real::{r, Real};

/// Horospheric coordinates (x, y, z); x and y are Euclidean on each
/// horosphere z = const, z is the coordinate along the symmetry axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Horospheric<T: Real> {
    pub x: T,
    pub y: T,
    pub z: T,
}

/// A point of the unit hyperboloid u₀² − u₁² − u₂² − u₃² = 1, u₀ > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Embedding<T: Real> {
    pub u0: T,
    pub u1: T,
    pub u2: T,
    pub u3: T,
}

/// A point of the open Poincaré unit ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball<T: Real> {
    pub q1: T,
    pub q2: T,
    pub q3: T,
}

impl<T: Real> Horospheric<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Horospheric { x, y, z }
    }

    /// Embedding map:
    /// u₁ = x e^{−z}, u₂ = y e^{−z},
    /// u₃ = ½[(e^z − e^{−z}) + (x² + y²) e^{−z}],
    /// u₀ = ½[(e^z + e^{−z}) + (x² + y²) e^{−z}].
    pub fn embed(&self) -> Embedding<T> {
        let half = r::<T>(0.5);
        let ez = self.z.exp();
        let emz = (-self.z).exp();
        let rho2 = self.x * self.x + self.y * self.y;
        Embedding {
            u0: half * ((ez + emz) + rho2 * emz),
            u1: self.x * emz,
            u2: self.y * emz,
            u3: half * ((ez - emz) + rho2 * emz),
        }
    }

    /// Direct map to the Poincaré ball:
    /// q₁ = 2x/D, q₂ = 2y/D, q₃ = (x² + y² + e^{2z} − 1)/D
    /// with D = x² + y² + e^{2z} + 1.
    pub fn to_ball(&self) -> Ball<T> {
        let two = r::<T>(2.0);
        let e2z = (self.z + self.z).exp();
        let rho2 = self.x * self.x + self.y * self.y;
        let den = rho2 + e2z + T::one();
        Ball {
            q1: two * self.x / den,
            q2: two * self.y / den,
            q3: (rho2 + e2z - T::one()) / den,
        }
    }
}

impl<T: Real> Embedding<T> {
    /// u₀² − u₁² − u₂² − u₃², identically 1 on the hyperboloid.
    pub fn minkowski_invariant(&self) -> T {
        self.u0 * self.u0 - self.u1 * self.u1 - self.u2 * self.u2 - self.u3 * self.u3
    }

    /// Central projection to the Poincaré ball, qᵢ = uᵢ/u₀.
    pub fn to_ball(&self) -> Ball<T> {
        Ball {
            q1: self.u1 / self.u0,
            q2: self.u2 / self.u0,
            q3: self.u3 / self.u0,
        }
    }
}

impl<T: Real> Ball<T> {
    pub fn radius_squared(&self) -> T {
        self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    /// Inverse map to horospheric coordinates:
    /// x = q₁/(1 − q₃), y = q₂/(1 − q₃),
    /// e^z = √(1 − q₁² − q₂² − q₃²)/(1 − q₃).
    ///
    /// Defined on the open ball minus the boundary point q₃ → 1 (the
    /// horospheric chart's point at infinity). The z component is computed
    /// through the algebraically equivalent
    /// e^{2z} = (1 + q₃)/(1 − q₃) − x² − y², which avoids squaring the
    /// boundary distance 1 − |q|² and so halves the cancellation incurred
    /// near the boundary.
    pub fn to_horospheric(&self) -> Result<Horospheric<T>> {
        if self.radius_squared() >= T::one() {
            return Err(Error::Boundary(format!(
                "point at squared radius {} is not inside the unit ball",
                self.radius_squared()
            )));
        }
        let den = T::one() - self.q3;
        if den <= T::zero() {
            return Err(Error::Boundary(
                "horospheric chart is singular as q3 -> 1".into(),
            ));
        }
        let x = self.q1 / den;
        let y = self.q2 / den;
        let e2z = (T::one() + self.q3) / den - x * x - y * y;
        if e2z <= T::zero() {
            return Err(Error::Boundary(
                "point rounds onto the ball boundary; z is not recoverable".into(),
            ));
        }
        Ok(Horospheric {
            x,
            y,
            z: e2z.ln() * r::<T>(0.5),
        })
    }
}

/// Closed forms on the symmetry axis x = y = 0:
/// u₀ = cosh z, u₃ = sinh z, q₃ = tanh z; z → ±∞ approaches the ball
/// boundary points q₃ = ±1.
pub fn axis_embedding<T: Real>(z: T) -> Embedding<T> {
    Embedding {
        u0: z.cosh(),
        u1: T::zero(),
        u2: T::zero(),
        u3: z.sinh(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn invariant_holds_on_random_points() {
        let mut rng = StdRng::seed_from_u64(0x5EED_21);
        for _ in 0..1000 {
            let h = Horospheric::new(
                rng.random_range(-5.0..5.0),
                rng.random_range(-5.0..5.0),
                rng.random_range(-4.0..4.0f64),
            );
            let u = h.embed();
            // the invariant is a difference of u0^2-sized terms
            let d = (u.minkowski_invariant() - 1.0).abs() / (u.u0 * u.u0);
            assert!(d < crate::tol::GEOMETRY_ROUNDTRIP, "{h:?}: {d:e}");
        }
    }

    #[test]
    fn ball_routes_agree_and_stay_inside() {
        let mut rng = StdRng::seed_from_u64(0x5EED_22);
        for _ in 0..1000 {
            let h = Horospheric::new(
                rng.random_range(-5.0..5.0),
                rng.random_range(-5.0..5.0),
                rng.random_range(-4.0..4.0f64),
            );
            let via_embedding = h.embed().to_ball();
            let direct = h.to_ball();
            assert!((via_embedding.q1 - direct.q1).abs() < crate::tol::GEOMETRY_ROUNDTRIP);
            assert!((via_embedding.q2 - direct.q2).abs() < crate::tol::GEOMETRY_ROUNDTRIP);
            assert!((via_embedding.q3 - direct.q3).abs() < crate::tol::GEOMETRY_ROUNDTRIP);
            assert!(direct.radius_squared() < 1.0);
        }
    }

    #[test]
    fn roundtrip_through_the_ball() {
        // The inverse chart's condition number grows like 1 + rho^2 e^{-2z}
        // (the ball point approaches the boundary exponentially), so the
        // roundtrip tolerance is checked over a domain where that
        // amplification times roundoff stays well below the budget.
        let mut rng = StdRng::seed_from_u64(0x5EED_23);
        for _ in 0..1000 {
            let h = Horospheric::new(
                rng.random_range(-3.0..3.0),
                rng.random_range(-3.0..3.0),
                rng.random_range(-2.5..2.5f64),
            );
            let back = h.to_ball().to_horospheric().unwrap();
            let scale = 1.0 + h.x.abs().max(h.y.abs()).max(h.z.abs());
            assert!((back.x - h.x).abs() / scale < crate::tol::GEOMETRY_ROUNDTRIP, "{h:?}");
            assert!((back.y - h.y).abs() / scale < crate::tol::GEOMETRY_ROUNDTRIP, "{h:?}");
            assert!((back.z - h.z).abs() / scale < crate::tol::GEOMETRY_ROUNDTRIP, "{h:?}");
        }
    }

    #[test]
    fn axis_closed_forms_and_limits() {
        for &z in &[-3.0, -0.4, 0.0, 1.2, 4.0f64] {
            let h = Horospheric::new(0.0, 0.0, z);
            let u = h.embed();
            let axis = axis_embedding(z);
            assert!((u.u0 - axis.u0).abs() < 1e-14 * axis.u0);
            assert!((u.u3 - axis.u3).abs() < 1e-14 * axis.u0);
            assert!(u.u1 == 0.0 && u.u2 == 0.0);
            assert!((h.to_ball().q3 - z.tanh()).abs() < 1e-14);
        }
        // the axis reaches the ball poles as z -> +-infinity
        let far = Horospheric::new(0.0, 0.0, 10.0f64).to_ball();
        assert!((far.q3 - 1.0).abs() < crate::tol::AXIS_LIMIT);
        let near = Horospheric::new(0.0, 0.0, -10.0f64).to_ball();
        assert!((near.q3 + 1.0).abs() < crate::tol::AXIS_LIMIT);
    }

    #[test]
    fn boundary_points_are_rejected() {
        let on_sphere = Ball { q1: 0.6f64, q2: 0.8, q3: 0.0 };
        assert!(matches!(
            on_sphere.to_horospheric(),
            Err(Error::Boundary(_))
        ));
        let pole = Ball { q1: 0.0f64, q2: 0.0, q3: 0.9999 };
        // inside the ball but close to the singular pole: still valid
        assert!(pole.to_horospheric().is_ok());
    }
}
