//! Two-component massless (Weyl) quasi-plane waves in horospheric
//! coordinates.
//!
//! The massless two-component equation separates into exactly the massive
//! upper-pair system with the eigenvalue substitution p → −ε (written with
//! D := d/dz − 1):
//!
//! ```text
//! (D + iε) h₁ + e^z (ik₁ + k₂) h₂ = 0,
//! (D − iε) h₂ − e^z (ik₁ − k₂) h₁ = 0,
//! ```
//!
//! so the wave carries only the three quantum numbers (ε, k₁, k₂) and the
//! solutions are the same Kummer pairs with a = −iε, c = 2a. This module
//! deliberately delegates to the shared pair assembly used by the massive
//! builder rather than duplicating it — one code path, one set of bugs —
//! and keeps its own independent transcription of the equation lines for
//! residual checks.

use crate::dirac::{self, DiracType, FlatLimitRow, PairSpec};
use crate::error::{Error, Result};
use crate::oracle::{LineValue, ResidualReport};
use crate::real::{c, r, Real};
use num_complex::Complex;

/// Quantum numbers of a massless wave: energy ε > 0 and nonzero transverse
/// wave numbers (k₁, k₂). Derived: a = −iε, c = 2a.
#[derive(Clone, Copy, Debug)]
pub struct WeylParams<T: Real> {
    pub epsilon: T,
    pub k1: T,
    pub k2: T,
}

impl<T: Real> WeylParams<T> {
    pub fn new(epsilon: T, k1: T, k2: T) -> Result<Self> {
        if !(epsilon > T::zero()) {
            return Err(Error::Config("the massless wave needs epsilon > 0".into()));
        }
        if k1 == T::zero() && k2 == T::zero() {
            return Err(Error::Config(
                "the axial massless wave is the elementary plane pair e^{(1 \u{2213} i\u{03b5})z}; \
                 this builder requires a transverse wave number"
                    .into(),
            ));
        }
        Ok(WeylParams { epsilon, k1, k2 })
    }

    /// Confluent upper parameter a = −iε (the substitution p → −ε).
    pub fn a(&self) -> Complex<T> {
        Complex::new(T::zero(), -self.epsilon)
    }

    pub fn k_perp(&self) -> T {
        (self.k1 * self.k1 + self.k2 * self.k2).sqrt()
    }

    /// Unit phase e^{iα} = √((k₂ + ik₁)/(k₂ − ik₁)), principal branch.
    pub fn alpha_phase(&self) -> Complex<T> {
        let num = Complex::new(self.k2, self.k1);
        let den = Complex::new(self.k2, -self.k1);
        (num / den).sqrt()
    }

    /// The confluent variable y = 2 k⊥ e^z.
    pub fn y(&self, z: T) -> T {
        r::<T>(2.0) * self.k_perp() * z.exp()
    }

    /// Turning point |p| = ε = k⊥ e^{z_turn}.
    pub fn turning_z(&self) -> T {
        (self.epsilon / self.k_perp()).ln()
    }

    fn spec(&self, factor_scale: T) -> PairSpec<T> {
        PairSpec {
            a: self.a(),
            alpha: self.alpha_phase(),
            k_perp: self.k_perp(),
            factor_scale,
        }
    }
}

/// A built massless solution of type I or II.
#[derive(Clone, Copy, Debug)]
pub struct WeylWave<T: Real> {
    pub params: WeylParams<T>,
    pub wtype: DiracType,
    factor_scale: T,
}

impl<T: Real> WeylWave<T> {
    pub fn new(params: WeylParams<T>, wtype: DiracType) -> Self {
        WeylWave { params, wtype, factor_scale: T::one() }
    }

    /// A deliberately wrong solution with the relative factor scaled; see
    /// the massive module's counterpart.
    pub fn with_scaled_factor(params: WeylParams<T>, wtype: DiracType, scale: T) -> Self {
        WeylWave { params, wtype, factor_scale: scale }
    }

    /// Analytic jets ([h₁, h₁′, h₁″], [h₂, h₂′, h₂″]) at z.
    pub fn pair_jets(&self, z: T) -> Result<([Complex<T>; 3], [Complex<T>; 3])> {
        self.params.spec(self.factor_scale).jets(self.wtype, z)
    }

    /// (h₁, h₂) at z.
    pub fn sample(&self, z: T) -> Result<(Complex<T>, Complex<T>)> {
        let (j1, j2) = self.pair_jets(z)?;
        Ok((j1[0], j2[0]))
    }
}

/// The two massless lines, transcribed directly (not shared with the
/// massive module, so the two transcriptions can be checked against each
/// other): (D + iε) h₁ + e^z(ik₁ + k₂) h₂ and (D − iε) h₂ − e^z(ik₁ − k₂) h₁.
pub fn weyl_lines<T: Real>(
    params: &WeylParams<T>,
    z: T,
    h1: &[Complex<T>; 3],
    h2: &[Complex<T>; 3],
) -> [LineValue<T>; 2] {
    let i = c::<T>(0.0, 1.0);
    let ez = z.exp();
    let ie = i * Complex::new(params.epsilon, T::zero());
    let coup1 = Complex::new(params.k2 * ez, params.k1 * ez); // e^z (ik₁ + k₂)
    let coup2 = Complex::new(-(params.k2 * ez), params.k1 * ez); // e^z (ik₁ − k₂)
    [
        LineValue::from_terms(&[h1[1], -h1[0], ie * h1[0], coup1 * h2[0]]),
        LineValue::from_terms(&[h2[1], -h2[0], -(ie * h2[0]), -(coup2 * h1[0])]),
    ]
}

/// Worst relative residual of both massless lines over the grid.
pub fn weyl_system_residual<T: Real>(wave: &WeylWave<T>, zs: &[T]) -> Result<ResidualReport<T>> {
    let mut report = ResidualReport::new();
    for &z in zs {
        let (j1, j2) = wave.pair_jets(z)?;
        let lines = weyl_lines(&wave.params, z, &j1, &j2);
        report.absorb(z, lines[0].relative().max(lines[1].relative()));
    }
    Ok(report)
}

/// The massless flat-space contraction: the shared study with M = 0, where
/// type I's wavenumber tends to −p₀ = −E and type II's to +p₀.
pub fn flat_limit_study<T: Real>(
    e_phys: T,
    p1_phys: T,
    p2_phys: T,
    radii: &[T],
) -> Result<Vec<FlatLimitRow<T>>> {
    dirac::flat_limit_study(e_phys, T::zero(), p1_phys, p2_phys, radii)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{first_order_lines, DiracWave, Helicity, WaveParams};
    use crate::oracle::OdeSystem;
    use num_complex::Complex64;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn params() -> WeylParams<f64> {
        WeylParams::new(3.0, 1.0, 2.0).unwrap()
    }

    fn grid() -> Vec<f64> {
        let mut zs = Vec::new();
        let mut z = -6.0;
        while z <= 1.0 {
            zs.push(z);
            z += 0.5;
        }
        zs
    }

    #[test]
    fn both_types_satisfy_the_massless_system() {
        for (eps, k1, k2) in [(3.0, 1.0, 2.0), (5.0, 3.0, 4.0)] {
            let p = WeylParams::new(eps, k1, k2).unwrap();
            for wtype in [DiracType::I, DiracType::II] {
                let wave = WeylWave::new(p, wtype);
                let rep = weyl_system_residual(&wave, &grid()).unwrap();
                assert!(
                    rep.max_rel < 1e-8,
                    "{wtype:?} eps={eps}: {:e} at z={}",
                    rep.max_rel,
                    rep.argmax_z
                );
            }
        }
    }

    #[test]
    fn the_three_line_transcriptions_agree() {
        // this module's lines, the massive module's lines at p = −ε, and
        // the integrator catalogue's lines are three independent
        // transcriptions of one system
        let p = params();
        let system = OdeSystem::Weyl { epsilon: p.epsilon, k1: p.k1, k2: p.k2 };
        let mut rng = StdRng::seed_from_u64(0x5EED_51);
        for _ in 0..50 {
            let z: f64 = rng.random_range(-4.0..2.0);
            let randc = |rng: &mut StdRng| {
                Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
            };
            let (h1, h2, d1, d2) = (randc(&mut rng), randc(&mut rng), randc(&mut rng), randc(&mut rng));
            let j1 = [h1, d1, Complex64::new(0.0, 0.0)];
            let j2 = [h2, d2, Complex64::new(0.0, 0.0)];
            let ours = weyl_lines(&p, z, &j1, &j2);
            let massive = first_order_lines(-p.epsilon, p.k1, p.k2, z, &j1, &j2);
            let oracle = system.lines(z, &[h1, h2], &[d1, d2]);
            for k in 0..2 {
                let scale = ours[k].scale;
                assert!((ours[k].residual - massive[k].residual).norm() <= 1e-12 * scale);
                assert!((ours[k].residual - oracle[k].residual).norm() <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn matches_the_massive_assembly_under_the_substitution() {
        // criterion: component-wise agreement with the shared pair assembly
        // evaluated at a = ip with p = −ε
        let p = params();
        let spec = PairSpec {
            a: Complex64::new(0.0, -p.epsilon),
            alpha: p.alpha_phase(),
            k_perp: p.k_perp(),
            factor_scale: 1.0,
        };
        for wtype in [DiracType::I, DiracType::II] {
            let wave = WeylWave::new(p, wtype);
            for &z in &[-5.0, -2.0, 0.0, 1.0] {
                let (a1, a2) = wave.pair_jets(z).unwrap();
                let (b1, b2) = spec.jets(wtype, z).unwrap();
                for k in 0..3 {
                    assert!((a1[k] - b1[k]).norm() <= 1e-10 * b1[k].norm().max(1.0));
                    assert!((a2[k] - b2[k]).norm() <= 1e-10 * b2[k].norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn massless_limit_of_the_massive_wave_lands_on_the_weyl_pair() {
        // at helicity −, p = −√(ε² − m²) → −ε, so the massive pair assembly
        // converges to the massless one at rate m²; physically the limit
        // lives in the lower doublet (f₃, f₄) = A(f₁, f₂), which is the same
        // pair up to the diverging lock A = m/(ε+p)
        let p = params();
        let weyl_i = WeylWave::new(p, DiracType::I);
        let mut gaps = Vec::new();
        for &m in &[1e-2, 1e-3] {
            let massive =
                WaveParams::new(p.epsilon, m, p.k1, p.k2, Helicity::Minus).unwrap();
            let wave = DiracWave::new(massive, DiracType::I);
            let mut worst: f64 = 0.0;
            for &z in &[-3.0, -1.0, 0.5] {
                let (f1, f2) = wave.pair_jets(z).unwrap();
                let (h1, h2) = weyl_i.pair_jets(z).unwrap();
                // compare the upper pair shapes; A cancels in f₃/f₁
                let scale = h1[0].norm().max(h2[0].norm());
                worst = worst
                    .max((f1[0] - h1[0]).norm() / scale)
                    .max((f2[0] - h2[0]).norm() / scale);
            }
            gaps.push(worst);
        }
        // quadratic in m: two decades of m² between m = 1e−2 and 1e−3
        assert!(gaps[0] < 1e-3, "gap at m=1e-2: {:e}", gaps[0]);
        assert!(gaps[1] < 1e-5, "gap at m=1e-3: {:e}", gaps[1]);
        let shrink = gaps[0] / gaps[1];
        assert!(
            (30.0..300.0).contains(&shrink),
            "expected ~100x quadratic shrink, got {shrink:.1}x"
        );
    }

    #[test]
    fn only_three_quantum_numbers_enter() {
        // two independently constructed parameter sets with the same
        // (ε, k₁, k₂) — regardless of any surrounding massive context —
        // produce bit-identical samples
        let p1 = WeylParams::new(3.0f64, 1.0, 2.0).unwrap();
        let _unrelated_massive_context =
            WaveParams::new(3.0f64, 1.5, 1.0, 2.0, Helicity::Minus).unwrap();
        let p2 = WeylParams::new(3.0f64, 1.0, 2.0).unwrap();
        for wtype in [DiracType::I, DiracType::II] {
            for &z in &[-4.0, 0.0, 1.0] {
                let (a1, a2) = WeylWave::new(p1, wtype).sample(z).unwrap();
                let (b1, b2) = WeylWave::new(p2, wtype).sample(z).unwrap();
                assert_eq!(a1.re.to_bits(), b1.re.to_bits());
                assert_eq!(a1.im.to_bits(), b1.im.to_bits());
                assert_eq!(a2.re.to_bits(), b2.re.to_bits());
                assert_eq!(a2.im.to_bits(), b2.im.to_bits());
            }
        }
    }

    #[test]
    fn a_percent_off_factor_is_loudly_visible() {
        let p = params();
        let wrong = WeylWave::with_scaled_factor(p, DiracType::I, 1.01);
        let rep = weyl_system_residual(&wrong, &grid()).unwrap();
        assert!(rep.max_rel > 1e-3, "perturbed factor only reached {:e}", rep.max_rel);
    }

    #[test]
    fn types_are_independent_with_the_exact_wronskian_growth() {
        // same trace-2 argument as the massive module: det = 4k⊥²M₊ᵂ e^{2z}
        let p = params();
        let wave_i = WeylWave::new(p, DiracType::I);
        let wave_ii = WeylWave::new(p, DiracType::II);
        let m_plus = p.spec(1.0).relative_factor(DiracType::I);
        let c_expected = Complex64::new(4.0 * p.k_perp() * p.k_perp(), 0.0) * m_plus;
        for &z in &[-4.0, -2.0, 0.0] {
            let (a1, a2) = wave_i.pair_jets(z).unwrap();
            let (b1, b2) = wave_ii.pair_jets(z).unwrap();
            let grow = Complex64::new((-2.0 * z).exp(), 0.0);
            let det = (a1[0] * b2[0] - b1[0] * a2[0]) * grow;
            let amp =
                ((a1[0] * b2[0]).norm() + (b1[0] * a2[0]).norm()) * grow.re / c_expected.norm();
            assert!(amp < 1e8);
            let drift = (det / c_expected - Complex64::new(1.0, 0.0)).norm();
            assert!(drift < 1e-9 + 200.0 * f64::EPSILON * amp, "z={z}: {drift:e}");
        }
    }

    #[test]
    fn flat_limit_matches_the_shared_massless_study() {
        let ours = flat_limit_study(1.25f64, 0.3, 0.4, &[10.0, 50.0]).unwrap();
        let shared = crate::dirac::flat_limit_study(1.25f64, 0.0, 0.3, 0.4, &[10.0, 50.0]).unwrap();
        for (a, b) in ours.iter().zip(shared.iter()) {
            assert_eq!(a.err_type_i.to_bits(), b.err_type_i.to_bits());
            assert_eq!(a.err_type_ii.to_bits(), b.err_type_ii.to_bits());
        }
        assert!(ours[1].err_type_i < ours[0].err_type_i);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(WeylParams::new(-1.0f64, 1.0, 1.0), Err(Error::Config(_))));
        assert!(matches!(WeylParams::new(3.0f64, 0.0, 0.0), Err(Error::Config(_))));
    }
}
