//! Quasi-plane-wave solutions of the scalar wave equation in horospheric
//! coordinates.
//!
//! With the ansatz Ψ = e^{−iεt} e^{i(k₁x + k₂y)} f(z) (curvature radius and
//! ħ, c scaled out), the radial factor obeys
//!
//! f'' − 2f' + (ε − k⊥² e^{2z}) f = 0,          k⊥² = k₁² + k₂²,
//!
//! and the substitution f = e^z φ turns it into a one-dimensional barrier
//! problem φ'' + (ε − U(z))φ = 0 with U = 1 + k⊥² e^{2z}. In the variable
//! y = 2k⊥ e^z the equation becomes confluent hypergeometric: with
//! q = √(ε − 1) and a = 1/2 − iq, every solution is y^{a+1/2} e^{−y/2} Y(y)
//! with Y a solution of the (a, 2a) equation.
//!
//! Four radial families are built here:
//! * [`ScalarKind::Regular`]    f₁ = y^{a+1/2} e^{−y/2} Φ(a, 2a, y),
//! * [`ScalarKind::Companion`]  f₂ = y^{3/2−a} e^{−y/2} Φ(1−a, 2−2a, y),
//! * [`ScalarKind::Decaying`]   f₅ = y^{a+1/2} e^{−y/2} Ψ(a, 2a, y),
//! * [`ScalarKind::Growing`]    f₇ = [Γ(1−2a)/Γ(1−a)] f₁ − [Γ(2a−1)/Γ(a)] f₂.
//!
//! As z → −∞ the Growing solution carries the running-wave mix
//! M₋ e^{(1−iq)z} − M₊ e^{(1+iq)z} with
//! M₋ = Γ(1−2a)/Γ(1−a) (2k⊥)^{1−iq}, M₊ = Γ(2a−1)/Γ(a) (2k⊥)^{1+iq},
//! and the reflection coefficient R = |Γ(1−2a)Γ(a) / (Γ(2a−1)Γ(1−a))|²
//! is identically 1: the exponential barrier reflects completely at every
//! energy.

use crate::error::{Error, Result};
use crate::profile::{confluent_profile_jet, ConfluentKind};
use crate::real::{c, r, to_f64, Real};
use crate::special::gamma::{gamma, ln_abs_gamma};
use num_complex::Complex;

/// The four radial solution families of the scalar equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    /// f₁: pure y^{a+1/2} power law as z → −∞ (phase e^{−iqz}).
    Regular,
    /// f₂: pure y^{3/2−a} power law as z → −∞ (phase e^{+iqz}).
    Companion,
    /// f₅: decays like √y e^{−y/2} under the barrier as z → +∞.
    Decaying,
    /// f₇: grows like √y e^{+y/2} under the barrier as z → +∞.
    Growing,
}

/// Scalar quasi-plane wave with energy ε and transverse wave numbers
/// (k₁, k₂); propagating modes require ε > 1 and k⊥ > 0.
#[derive(Clone, Copy, Debug)]
pub struct ScalarWave<T: Real> {
    pub epsilon: T,
    pub k1: T,
    pub k2: T,
}

impl<T: Real> ScalarWave<T> {
    pub fn new(epsilon: T, k1: T, k2: T) -> Result<Self> {
        if !(epsilon > T::one()) {
            return Err(Error::Evanescent {
                k3_sq: to_f64(epsilon - T::one()),
            });
        }
        if k1 * k1 + k2 * k2 <= T::zero() {
            return Err(Error::Config(
                "transverse wave number must be nonzero; use the axial forms for k-perp = 0"
                    .into(),
            ));
        }
        Ok(ScalarWave { epsilon, k1, k2 })
    }

    /// q = √(ε − 1), the asymptotic wave number along z.
    pub fn q(&self) -> T {
        (self.epsilon - T::one()).sqrt()
    }

    /// a = 1/2 − iq, the confluent upper parameter.
    pub fn a(&self) -> Complex<T> {
        Complex::new(r(0.5), -self.q())
    }

    pub fn k_perp(&self) -> T {
        (self.k1 * self.k1 + self.k2 * self.k2).sqrt()
    }

    /// The confluent variable y = 2 k⊥ e^z.
    pub fn y(&self, z: T) -> T {
        r::<T>(2.0) * self.k_perp() * z.exp()
    }

    /// Effective barrier U(z) = 1 + k⊥² e^{2z} of the φ form.
    pub fn potential(&self, z: T) -> T {
        T::one() + self.k_perp() * self.k_perp() * (z + z).exp()
    }

    /// Classical turning point z₀ = ln √((ε − 1)/k⊥²), where U(z₀) = ε.
    pub fn turning_z(&self) -> T {
        ((self.epsilon - T::one()) / (self.k_perp() * self.k_perp()))
            .sqrt()
            .ln()
    }

    /// Radial value f(z) of the requested family.
    pub fn value(&self, kind: ScalarKind, z: T) -> Result<Complex<T>> {
        Ok(self.jet(kind, z)?[0])
    }

    /// [f, f', f''] of the requested family at z, with derivatives taken
    /// analytically through the confluent contiguous relations.
    pub fn jet(&self, kind: ScalarKind, z: T) -> Result<[Complex<T>; 3]> {
        let a = self.a();
        let one = Complex::new(T::one(), T::zero());
        let two = c::<T>(2.0, 0.0);
        let half = c::<T>(0.5, 0.0);
        let kp = self.k_perp();
        match kind {
            ScalarKind::Regular => {
                let s = a + half;
                confluent_profile_jet(kp, z, s, a, two * a, ConfluentKind::Regular)
            }
            ScalarKind::Companion => {
                let s = c::<T>(1.5, 0.0) - a;
                confluent_profile_jet(kp, z, s, one - a, two - two * a, ConfluentKind::Regular)
            }
            ScalarKind::Decaying => {
                let s = a + half;
                confluent_profile_jet(kp, z, s, a, two * a, ConfluentKind::Irregular)
            }
            ScalarKind::Growing => {
                let (m_reg, m_comp) = self.growing_weights()?;
                let jr = self.jet(ScalarKind::Regular, z)?;
                let jc = self.jet(ScalarKind::Companion, z)?;
                Ok([
                    m_reg * jr[0] - m_comp * jc[0],
                    m_reg * jr[1] - m_comp * jc[1],
                    m_reg * jr[2] - m_comp * jc[2],
                ])
            }
        }
    }

    /// φ = e^{−z} f and its first two z-derivatives; φ solves the barrier
    /// form φ'' + (ε − U)φ = 0.
    pub fn phi_jet(&self, kind: ScalarKind, z: T) -> Result<[Complex<T>; 3]> {
        let [f, fp, fpp] = self.jet(kind, z)?;
        let emz = Complex::new((-z).exp(), T::zero());
        let two = c::<T>(2.0, 0.0);
        Ok([emz * f, emz * (fp - f), emz * (fpp - two * fp + f)])
    }

    /// Gamma weights (Γ(1−2a)/Γ(1−a), Γ(2a−1)/Γ(a)) of the Growing family.
    pub fn growing_weights(&self) -> Result<(Complex<T>, Complex<T>)> {
        let a = self.a();
        let one = Complex::new(T::one(), T::zero());
        let two = c::<T>(2.0, 0.0);
        let m_reg = gamma(one - two * a)? / gamma(one - a)?;
        let m_comp = gamma(two * a - one)? / gamma(a)?;
        Ok((m_reg, m_comp))
    }

    /// Running-wave amplitudes of the Growing family as z → −∞:
    /// M₋ = Γ(1−2a)/Γ(1−a) (2k⊥)^{1−iq} multiplies e^{(1−iq)z} and
    /// M₊ = Γ(2a−1)/Γ(a) (2k⊥)^{1+iq} multiplies e^{(1+iq)z}
    /// (the latter with a relative minus sign in f₇).
    pub fn amplitudes(&self) -> Result<(Complex<T>, Complex<T>)> {
        let (m_reg, m_comp) = self.growing_weights()?;
        let two_kp = Complex::new(r::<T>(2.0) * self.k_perp(), T::zero());
        let iq = Complex::new(T::zero(), self.q());
        let one = Complex::new(T::one(), T::zero());
        Ok((
            m_reg * two_kp.powc(one - iq),
            m_comp * two_kp.powc(one + iq),
        ))
    }

    /// Reflection coefficient R = |Γ(1−2a)Γ(a) / (Γ(2a−1)Γ(1−a))|² of the
    /// barrier, evaluated through log-moduli so that it stays finite at
    /// arbitrarily large ε. Identically 1 for every propagating energy.
    pub fn reflection_coefficient(&self) -> Result<T> {
        let a = self.a();
        let one = Complex::new(T::one(), T::zero());
        let two = c::<T>(2.0, 0.0);
        let ln_r = ln_abs_gamma(one - two * a)? + ln_abs_gamma(a)?
            - ln_abs_gamma(two * a - one)?
            - ln_abs_gamma(one - a)?;
        Ok((ln_r + ln_r).exp())
    }

}

/// Axial solution f = e^{(1 ± i√(ε−1)) z} of the k⊥ = 0 equation
/// f'' − 2f' + εf = 0, together with its first two derivatives.
pub fn axial_jet<T: Real>(epsilon: T, sign: f64, z: T) -> Result<[Complex<T>; 3]> {
    if !(epsilon > T::one()) {
        return Err(Error::Evanescent {
            k3_sq: to_f64(epsilon - T::one()),
        });
    }
    let q = (epsilon - T::one()).sqrt();
    let lambda = Complex::new(T::one(), r::<T>(sign.signum()) * q);
    let f = (lambda * Complex::new(z, T::zero())).exp();
    Ok([f, lambda * f, lambda * lambda * f])
}
