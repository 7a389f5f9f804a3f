//! Complex gamma function in working precision (Lanczos approximation).
//!
//! The g = 7, n = 9 Lanczos coefficient set gives ~13 correct significant
//! digits over the complex plane away from the poles; reflection handles
//! Re z < 1/2. This is the gamma used by the solution builders and the
//! connection formulas; the extended-precision gamma lives in
//! [`crate::extended`].

use crate::error::{Error, Result};
use crate::real::{c, r, Real};
use num_complex::Complex;

/// Lanczos coefficients for g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// How close to a non-positive integer the argument may come before the
/// evaluation is rejected as effectively at a pole.
const POLE_TOL: f64 = 1e-12;

/// Γ(z) for complex z, with an explicit error at the poles.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let re = crate::real::to_f64(z.re);
    let im = crate::real::to_f64(z.im);
    if re <= POLE_TOL && im.abs() < POLE_TOL && (re - re.round()).abs() < POLE_TOL {
        return Err(Error::GammaPole {
            re,
            im,
            tol: POLE_TOL,
        });
    }
    if re < 0.5 {
        // Γ(z) = π / (sin(πz) Γ(1−z))
        let pi: Complex<T> = c(std::f64::consts::PI, 0.0);
        let s = (pi * z).sin();
        let g = gamma(Complex::new(T::one() - z.re, -z.im))?;
        return Ok(pi / (s * g));
    }
    let zm1 = z - Complex::new(T::one(), T::zero());
    let mut sum: Complex<T> = c(LANCZOS[0], 0.0);
    for (i, &ci) in LANCZOS.iter().enumerate().skip(1) {
        sum = sum + c::<T>(ci, 0.0) / (zm1 + c(i as f64, 0.0));
    }
    let t = zm1 + c(LANCZOS_G + 0.5, 0.0);
    let sqrt_two_pi: Complex<T> = c((2.0 * std::f64::consts::PI).sqrt(), 0.0);
    Ok(sqrt_two_pi * t.powc(zm1 + c(0.5, 0.0)) * (-t).exp() * sum)
}

/// Natural logarithm of |Γ(z)| computed without over/underflow of the
/// gamma value itself; used where only magnitudes matter and arguments may
/// make Γ itself denormal or huge.
pub fn ln_abs_gamma<T: Real>(z: Complex<T>) -> Result<T> {
    let re = crate::real::to_f64(z.re);
    let im = crate::real::to_f64(z.im);
    if re <= POLE_TOL && im.abs() < POLE_TOL && (re - re.round()).abs() < POLE_TOL {
        return Err(Error::GammaPole {
            re,
            im,
            tol: POLE_TOL,
        });
    }
    if re < 0.5 {
        // ln|Γ(z)| = ln π − ln|sin πz| − ln|Γ(1−z)|
        let pi: Complex<T> = c(std::f64::consts::PI, 0.0);
        let s = (pi * z).sin();
        let rest = ln_abs_gamma(Complex::new(T::one() - z.re, -z.im))?;
        return Ok(r::<T>(std::f64::consts::PI.ln()) - s.norm().ln() - rest);
    }
    let zm1 = z - Complex::new(T::one(), T::zero());
    let mut sum: Complex<T> = c(LANCZOS[0], 0.0);
    for (i, &ci) in LANCZOS.iter().enumerate().skip(1) {
        sum = sum + c::<T>(ci, 0.0) / (zm1 + c(i as f64, 0.0));
    }
    let t = zm1 + c(LANCZOS_G + 0.5, 0.0);
    let half_ln_two_pi = r::<T>(0.5 * (2.0 * std::f64::consts::PI).ln());
    // ln|t^{z−1/2}| = Re((z−1/2) ln t)
    let w = (zm1 + c(0.5, 0.0)) * t.ln();
    Ok(half_ln_two_pi + w.re - t.re + sum.norm().ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{c, to_c64};
    use crate::tol;
    use hspinor_refcheck::{gamma_ref, Cdd as RefCdd};
    use num_complex::Complex64;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn classical_values() {
        let g = gamma(c::<f64>(0.5, 0.0)).unwrap();
        assert!(rel(g, Complex64::new(std::f64::consts::PI.sqrt(), 0.0)) < 1e-14);
        let g = gamma(c::<f64>(5.0, 0.0)).unwrap();
        assert!(rel(g, Complex64::new(24.0, 0.0)) < 1e-14);
        let g = gamma(c::<f64>(-0.5, 0.0)).unwrap();
        assert!(rel(g, Complex64::new(-2.0 * std::f64::consts::PI.sqrt(), 0.0)) < 1e-13);
    }

    #[test]
    fn recursion_on_random_box() {
        // z Γ(z) = Γ(z+1) on 1000 seeded-random points in [−5,5]×[−5,5],
        // excluding pole neighborhoods.
        let mut rng = StdRng::seed_from_u64(0x5EED_01);
        let mut tested = 0;
        while tested < 1000 {
            let re: f64 = rng.random_range(-5.0..5.0);
            let im: f64 = rng.random_range(-5.0..5.0);
            // stay away from the poles of Γ(z) and Γ(z+1)
            if im.abs() < 1e-2 && (re - re.round()).abs() < 1e-2 && re < 0.6 {
                continue;
            }
            let z = c::<f64>(re, im);
            let lhs = z * gamma(z).unwrap();
            let rhs = gamma(z + c(1.0, 0.0)).unwrap();
            let d = rel(to_c64(lhs), to_c64(rhs));
            assert!(
                d < tol::GAMMA_RECURSION_REL,
                "recursion off by {d:e} at ({re},{im})"
            );
            tested += 1;
        }
    }

    #[test]
    fn conjugate_symmetry() {
        for &(re, im) in &[(0.5, 2.0), (3.0, -4.0), (-1.3, 0.7), (0.5, 31.6)] {
            let z = c::<f64>(re, im);
            let a = gamma(z).unwrap();
            let b = gamma(z.conj()).unwrap().conj();
            assert!(rel(to_c64(a), to_c64(b)) < 1e-13);
        }
    }

    #[test]
    fn agrees_with_extended_reference() {
        // Lanczos (binary64) vs Spouge (double-double): the difference
        // measures the Lanczos error.
        let mut rng = StdRng::seed_from_u64(0x5EED_02);
        for _ in 0..200 {
            let re: f64 = rng.random_range(-4.0..8.0);
            let im: f64 = rng.random_range(-12.0..12.0);
            if im.abs() < 5e-2 && (re - re.round()).abs() < 5e-2 && re < 0.6 {
                continue;
            }
            let g = to_c64(gamma(c::<f64>(re, im)).unwrap());
            let reference = gamma_ref(RefCdd::from_f64(re, im)).to_c64();
            let d = rel(g, reference);
            assert!(
                d < tol::GAMMA_REL,
                "gamma off by {d:e} at ({re},{im})"
            );
        }
    }

    #[test]
    fn moduli_on_special_lines() {
        // |Γ(iy)|² = π/(y sinh πy), |Γ(1/2+iy)|² = π/cosh πy,
        // |Γ(1+iy)|² = πy/sinh πy — closed forms independent of Lanczos.
        let pi = std::f64::consts::PI;
        for &y in &[0.5, 1.0, 2.0, 4.358898943540674, 8.0] {
            let g0 = to_c64(gamma(c::<f64>(0.0, y)).unwrap()).norm_sqr();
            assert!((g0 - pi / (y * (pi * y).sinh())).abs() / g0 < 1e-12);
            let gh = to_c64(gamma(c::<f64>(0.5, y)).unwrap()).norm_sqr();
            assert!((gh - pi / (pi * y).cosh()).abs() / gh < 1e-12);
            let g1 = to_c64(gamma(c::<f64>(1.0, y)).unwrap()).norm_sqr();
            assert!((g1 - pi * y / (pi * y).sinh()).abs() / g1 < 1e-12);
        }
    }

    #[test]
    fn duplication_formula() {
        // Γ(2z) = 2^{2z−1} Γ(z) Γ(z+1/2) / √π
        for &(re, im) in &[(0.75, 0.0), (1.2, 2.5), (0.5, -4.0)] {
            let z = c::<f64>(re, im);
            let lhs = to_c64(gamma(z + z).unwrap());
            let two: Complex64 = Complex64::new(2.0, 0.0);
            let pow = two.powc(to_c64(z + z) - Complex64::new(1.0, 0.0));
            let rhs = pow * to_c64(gamma(z).unwrap()) * to_c64(gamma(z + c(0.5, 0.0)).unwrap())
                / std::f64::consts::PI.sqrt();
            assert!(rel(lhs, rhs) < 1e-12);
        }
    }

    #[test]
    fn pole_rejection() {
        for &re in &[0.0, -1.0, -7.0] {
            assert!(matches!(
                gamma(c::<f64>(re, 0.0)),
                Err(Error::GammaPole { .. })
            ));
        }
        // nearby but not at a pole: fine
        assert!(gamma(c::<f64>(-1.0, 1e-6)).is_ok());
        assert!(gamma(c::<f64>(-0.999999, 0.0)).is_ok());
    }

    #[test]
    fn log_modulus_matches_gamma_where_both_work() {
        for &(re, im) in &[(0.5, 2.0), (2.0, -3.0), (-1.2, 0.7), (0.0, 8.7)] {
            let z = c::<f64>(re, im);
            let direct = to_c64(gamma(z).unwrap()).norm().ln();
            let viailn = ln_abs_gamma(z).unwrap();
            assert!(
                (direct - viailn).abs() < 1e-11 * direct.abs().max(1.0),
                "at ({re},{im}): {direct} vs {viailn}"
            );
        }
    }

    #[test]
    fn log_modulus_beyond_overflow() {
        // At z = 0.5 + 1000i, |Γ| ~ e^{−π·500}: far below the smallest
        // normal binary64, but the log-magnitude form still works.
        let z = c::<f64>(0.5, 1000.0);
        let lg = ln_abs_gamma(z).unwrap();
        // closed form: ln|Γ(1/2+iy)| = (ln π − ln cosh πy)/2
        let pi = std::f64::consts::PI;
        let y = 1000.0f64;
        // ln cosh x = x − ln 2 + ln(1+e^{−2x})
        let ln_cosh = pi * y - (2.0f64).ln();
        let expect = 0.5 * (pi.ln() - ln_cosh);
        assert!(
            (lg - expect).abs() < 1e-9 * expect.abs(),
            "{lg} vs {expect}"
        );
    }
}
