//! Shared assembly of radial profiles of the confluent form
//! C · y^s · e^{−y/2} · Y(a, c; y) with y = 2 k⊥ e^z, where Y is either the
//! regular Kummer function Φ or the irregular companion Ψ.
//!
//! Every scalar and spinor radial component in this crate is of this shape;
//! the jet (value, d/dz, d²/dz²) is produced analytically through the
//! contiguous-derivative identities of the kernel and the defining equation
//! y Y'' = (y − c) Y' + a Y, never by finite differences.

use crate::error::Result;
use crate::real::{c, r, Real};
use crate::special::kummer::{phi, phi_prime, psi, psi_prime};
use num_complex::Complex;

/// Which confluent solution the profile is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ConfluentKind {
    /// Φ(a, c, y), regular at y = 0.
    Regular,
    /// Ψ(a, c, y), power-decaying as y → +∞.
    Irregular,
}

/// [f, f', f''] (derivatives in z) of f = y^s e^{−y/2} Y(a, c, y) at
/// y = 2 k⊥ e^z. The z-derivative acts as y·d/dy on functions of y.
pub(crate) fn confluent_profile_jet<T: Real>(
    k_perp: T,
    z: T,
    s: Complex<T>,
    a: Complex<T>,
    c_par: Complex<T>,
    kind: ConfluentKind,
) -> Result<[Complex<T>; 3]> {
    let yv = r::<T>(2.0) * k_perp * z.exp();
    let y = Complex::new(yv, T::zero());
    let (big_y, big_yp) = match kind {
        ConfluentKind::Regular => (phi(a, c_par, y)?, phi_prime(a, c_par, y)?),
        ConfluentKind::Irregular => (psi(a, c_par, y)?.value, psi_prime(a, c_par, y)?.value),
    };
    // Y'' from the defining equation y Y'' = (y − c) Y' + a Y
    let big_ypp = ((y - c_par) * big_yp + a * big_y) / y;
    let one = Complex::new(T::one(), T::zero());
    let half = c::<T>(0.5, 0.0);
    // prefactor y^s e^{−y/2}; with D := y d/dy,
    //   D f = y^s e^{−y/2} [(s − y/2) Y + y Y']                    =: pref · P
    //   D²f = y^s e^{−y/2} [(s − y/2) P + y(−Y/2 + (s+1−y/2) Y' + y Y'')]
    let pref = y.powc(s) * Complex::new((-yv * r::<T>(0.5)).exp(), T::zero());
    let sm = s - half * y;
    let p = sm * big_y + y * big_yp;
    let pp = -half * big_y + (sm + one) * big_yp + y * big_ypp;
    Ok([pref * big_y, pref * p, pref * (sm * p + y * pp)])
}
