//! Cylinder functions J, H¹, H², N of complex order, tuned for the rays the
//! spinor wave builders use: order ν = −ip − 1/2 with real p and argument on
//! the positive imaginary axis x = iX (though the entry points accept general
//! complex values).
//!
//! On the imaginary axis the ascending J series has terms of a single
//! rotating phase (no cancellation), so J is summed directly inside the
//! radius [`J_SWITCH_RADIUS`] and assembled as (H¹ + H²)/2 outside it.
//! H¹ and H² — exponentially small, respectively large, combinations of
//! J_{±ν} there — are evaluated by competing routes returning [`Certified`]
//! values: the working-precision connection formula through J_{±ν}, the
//! large-argument expansion summed to its smallest term, and the
//! double-double connection formula. N uses its own connection formula
//! (benign for this family: |sin νπ| = cosh pπ ≥ 1) in competition with
//! (H¹ − H²)/2i.

use crate::error::{Error, Result};
use crate::extended::{gamma_cdd, Cdd, Dd};
use crate::real::{c, from_c64, r, to_c64, to_f64, Real};
use crate::special::gamma::gamma;
use crate::special::Certified;
use num_complex::Complex;

/// Argument magnitude beyond which J is assembled from H¹ and H².
pub const J_SWITCH_RADIUS: f64 = 25.0;

/// A route is accepted outright once its relative error estimate is at or
/// below this (scaled up for scalars wider than their roundoff allows).
pub const ACCEPT_EST: f64 = 1e-13;

/// Relative roundoff charged per unit of cancellation to the double-double
/// connection route.
const DD_CONNECTION_EPS: f64 = 1e-28;

/// Hard cap on ascending-series terms before reporting non-convergence.
const MAX_SERIES_TERMS: usize = 2_000;

fn accept_threshold<T: Real>() -> f64 {
    ACCEPT_EST.max(to_f64(T::epsilon()) * 100.0)
}

// ---------------------------------------------------------------------------
// J
// ---------------------------------------------------------------------------

/// J_ν(x): cylinder function of the first kind.
pub fn bessel_j<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Certified<T>> {
    if x.norm() < r(J_SWITCH_RADIUS) {
        let (value, amp) = j_series_with_amp(nu, x)?;
        return Ok(Certified::new(value, r(to_f64(T::epsilon()) * 4.0 * amp)));
    }
    let h1 = hankel1(nu, x)?;
    let h2 = hankel2(nu, x)?;
    let value = (h1.value + h2.value) * c::<T>(0.5, 0.0);
    let norm = to_f64(value.norm()).max(1e-300);
    let est = 0.5
        * (to_f64(h1.est) * to_f64(h1.value.norm()) + to_f64(h2.est) * to_f64(h2.value.norm()))
        / norm
        + to_f64(T::epsilon());
    Ok(Certified::new(value, r(est)))
}

/// The ascending series Σ_n (−)ⁿ (x/2)^{ν+2n} / (n! Γ(ν+n+1)), convergent
/// everywhere; this is the reference path the switched evaluation falls
/// back on, and the substrate of the connection routes.
pub fn bessel_j_series<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Complex<T>> {
    Ok(j_series_with_amp(nu, x)?.0)
}

/// Series value together with the cancellation it incurred
/// (largest |term| over |sum|, at least 1).
fn j_series_with_amp<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<(Complex<T>, f64)> {
    let half_x = x * c::<T>(0.5, 0.0);
    let mut term = half_x.powc(nu) / gamma(nu + Complex::new(T::one(), T::zero()))?;
    if !(term.re.is_finite() && term.im.is_finite()) {
        return Err(Error::Overflow(format!(
            "leading cylinder-series term not finite at order {nu}, argument {x}"
        )));
    }
    let mut sum = term;
    let mut max_norm = to_f64(term.norm());
    let neg_quarter_x2 = -(half_x * half_x);
    let thresh = T::epsilon() * r::<T>(0.5);
    let mut small_run = 0u32;
    let mut last_rel = 1.0f64;
    for n in 0..MAX_SERIES_TERMS {
        let nf = r::<T>(n as f64);
        term = term * neg_quarter_x2
            / (Complex::new(nf + T::one(), T::zero())
                * (nu + Complex::new(nf + T::one(), T::zero())));
        sum = sum + term;
        let tn = to_f64(term.norm());
        max_norm = max_norm.max(tn);
        last_rel = tn / to_f64(sum.norm()).max(1e-300);
        if term.norm() < thresh * sum.norm() {
            small_run += 1;
            if small_run >= 3 {
                let amp = (max_norm / to_f64(sum.norm()).max(1e-300)).max(1.0);
                return Ok((sum, amp));
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::SeriesNonConvergence {
        max_terms: MAX_SERIES_TERMS,
        last_rel,
    })
}

// ---------------------------------------------------------------------------
// H¹, H²
// ---------------------------------------------------------------------------

/// H¹_ν(x): cylinder function of the third kind, first variant.
pub fn hankel1<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Certified<T>> {
    hankel(nu, x, 1.0)
}

/// H²_ν(x): cylinder function of the third kind, second variant.
pub fn hankel2<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Certified<T>> {
    hankel(nu, x, -1.0)
}

fn hankel<T: Real>(nu: Complex<T>, x: Complex<T>, sign: f64) -> Result<Certified<T>> {
    let native = hankel_connection_native(nu, x, sign);
    if let Ok(cert) = &native {
        if to_f64(cert.est) <= accept_threshold::<T>() {
            return native;
        }
    }
    let asym = hankel_large_argument(nu, x, sign);
    let best = merge(native, asym)?;
    if to_f64(best.est) <= accept_threshold::<T>() {
        return Ok(best);
    }
    merge(Ok(best), hankel_connection_dd(nu, x, sign))
}

fn merge<T: Real>(a: Result<Certified<T>>, b: Result<Certified<T>>) -> Result<Certified<T>> {
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(x.better(y)),
        (Ok(x), Err(_)) => Ok(x),
        (Err(_), Ok(y)) => Ok(y),
        (Err(e), Err(_)) => Err(e),
    }
}

/// H^{1,2} through J_{±ν} in working precision:
/// H¹ = +i/sin νπ (e^{−iνπ} J_ν − J_{−ν}),
/// H² = −i/sin νπ (e^{+iνπ} J_ν − J_{−ν}).
fn hankel_connection_native<T: Real>(
    nu: Complex<T>,
    x: Complex<T>,
    sign: f64,
) -> Result<Certified<T>> {
    let nu_pi = nu * Complex::new(T::PI(), T::zero());
    let sin_nu_pi = nu_pi.sin();
    if to_f64(sin_nu_pi.norm()) < 1e-8 {
        return Err(Error::Degenerate(
            "cylinder connection formula at near-integer order".into(),
        ));
    }
    let i = Complex::new(T::zero(), T::one());
    let phase = (-i * nu_pi * c::<T>(sign, 0.0)).exp();
    let (j_pos, amp_pos) = j_series_with_amp(nu, x)?;
    let (j_neg, amp_neg) = j_series_with_amp(-nu, x)?;
    let t1 = phase * j_pos;
    let t2 = j_neg;
    let front = i * c::<T>(sign, 0.0) / sin_nu_pi;
    let value = front * (t1 - t2);
    let small = to_f64(value.norm());
    if small == 0.0 {
        return Err(Error::IllConditioned(
            "cylinder connection cancelled to zero".into(),
        ));
    }
    let big = to_f64(front.norm())
        * (to_f64(t1.norm()) * amp_pos + to_f64(t2.norm()) * amp_neg);
    let est = to_f64(T::epsilon()) * 4.0 * (big / small).max(1.0);
    Ok(Certified::new(value, r(est)))
}

/// The same connection formula in double-double arithmetic.
fn hankel_connection_dd<T: Real>(
    nu: Complex<T>,
    x: Complex<T>,
    sign: f64,
) -> Result<Certified<T>> {
    let nu = Cdd::from_c64(to_c64(nu));
    let x = Cdd::from_c64(to_c64(x));
    let pi = Cdd::new(Dd::PI, Dd::ZERO);
    let nu_pi = nu.mul(pi);
    let sin_nu_pi = nu_pi.sin();
    if sin_nu_pi.abs().to_f64() < 1e-8 {
        return Err(Error::Degenerate(
            "cylinder connection formula at near-integer order".into(),
        ));
    }
    let sgn = Cdd::from_f64(sign, 0.0);
    let phase = Cdd::I.neg().mul(nu_pi).mul(sgn).exp();
    let t1 = phase.mul(j_series_cdd(nu, x)?);
    let t2 = j_series_cdd(nu.neg(), x)?;
    let front = Cdd::I.mul(sgn).div(sin_nu_pi);
    let value = front.mul(t1.sub(t2));
    let small = value.abs().to_f64();
    if small == 0.0 || !value.is_finite() {
        return Err(Error::IllConditioned(
            "extended cylinder connection cancelled to zero".into(),
        ));
    }
    let big = front.abs().to_f64() * (t1.abs().to_f64() + t2.abs().to_f64());
    let est = DD_CONNECTION_EPS * (big / small).max(1.0);
    Ok(Certified::new(from_c64(value.to_c64()), r(est)))
}

/// Large-argument expansion
/// H^{1,2} ≈ √(2/(πx)) e^{±iω} Σ_n (±i)ⁿ aₙ(ν)/xⁿ, ω = x − νπ/2 − π/4,
/// aₙ = aₙ₋₁ (4ν² − (2n−1)²)/(8n), summed to its smallest term.
pub fn hankel_large_argument<T: Real>(
    nu: Complex<T>,
    x: Complex<T>,
    sign: f64,
) -> Result<Certified<T>> {
    let i = Complex::new(T::zero(), T::one());
    let quarter_pi = c::<T>(std::f64::consts::FRAC_PI_4, 0.0);
    let omega = x - nu * c::<T>(std::f64::consts::FRAC_PI_2, 0.0) - quarter_pi;
    let two_over_pi_x = c::<T>(2.0 / std::f64::consts::PI, 0.0) / x;
    let prefactor = two_over_pi_x.sqrt() * (i * c::<T>(sign, 0.0) * omega).exp();
    if !(prefactor.re.is_finite() && prefactor.im.is_finite()) {
        return Err(Error::Overflow(format!(
            "cylinder large-argument prefactor not finite at argument {x}"
        )));
    }
    let four_nu2 = nu * nu * c::<T>(4.0, 0.0);
    let mut term = Complex::new(T::one(), T::zero());
    let mut sum = term;
    let mut min_rel = 1.0f64;
    for n in 1..200usize {
        let m = r::<T>((2 * n - 1) as f64);
        term = term * (four_nu2 - Complex::new(m * m, T::zero()))
            / (x * c::<T>(8.0 * n as f64, 0.0))
            * i
            * c::<T>(sign, 0.0);
        let rel = to_f64(term.norm()) / to_f64(sum.norm()).max(1e-300);
        if rel >= min_rel {
            break;
        }
        sum = sum + term;
        min_rel = rel;
        if rel < 1e-17 {
            break;
        }
    }
    Ok(Certified::new(
        prefactor * sum,
        r::<T>(min_rel + 1e-15),
    ))
}

/// Ascending J series in double-double arithmetic.
fn j_series_cdd(nu: Cdd, x: Cdd) -> Result<Cdd> {
    let half_x = x.mul_dd(Dd::from_f64(0.5));
    let g = gamma_cdd(nu.add(Cdd::ONE));
    let mut term = half_x.powc(nu).div(g);
    if !term.is_finite() {
        return Err(Error::Overflow(
            "leading extended cylinder-series term not finite".into(),
        ));
    }
    let mut sum = term;
    let neg_quarter_x2 = half_x.mul(half_x).neg();
    let mut small_run = 0u32;
    for n in 0..MAX_SERIES_TERMS {
        let nf = n as f64;
        term = term
            .mul(neg_quarter_x2)
            .div(Cdd::from_f64(nf + 1.0, 0.0).mul(nu.add(Cdd::from_f64(nf + 1.0, 0.0))));
        sum = sum.add(term);
        if term.abs().to_f64() < 1e-33 * sum.abs().to_f64() {
            small_run += 1;
            if small_run >= 3 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::SeriesNonConvergence {
        max_terms: MAX_SERIES_TERMS,
        last_rel: term.abs().to_f64() / sum.abs().to_f64().max(1e-300),
    })
}

// ---------------------------------------------------------------------------
// N
// ---------------------------------------------------------------------------

/// N_ν(x): cylinder function of the second kind, by its own connection
/// formula (cos νπ J_ν − J_{−ν})/sin νπ in competition with (H¹ − H²)/2i.
pub fn neumann<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Certified<T>> {
    let direct = neumann_direct(nu, x);
    if let Ok(cert) = &direct {
        if to_f64(cert.est) <= accept_threshold::<T>() {
            return direct;
        }
    }
    let via_h = neumann_via_hankel(nu, x);
    merge(direct, via_h)
}

fn neumann_direct<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Certified<T>> {
    let nu_pi = nu * Complex::new(T::PI(), T::zero());
    let sin_nu_pi = nu_pi.sin();
    if to_f64(sin_nu_pi.norm()) < 1e-8 {
        return Err(Error::Degenerate(
            "cylinder connection formula at near-integer order".into(),
        ));
    }
    let (j_pos, amp_pos) = j_series_with_amp(nu, x)?;
    let (j_neg, amp_neg) = j_series_with_amp(-nu, x)?;
    let t1 = nu_pi.cos() * j_pos;
    let t2 = j_neg;
    let value = (t1 - t2) / sin_nu_pi;
    let small = to_f64(value.norm());
    if small == 0.0 {
        return Err(Error::IllConditioned(
            "cylinder connection cancelled to zero".into(),
        ));
    }
    let big = (to_f64(t1.norm()) * amp_pos + to_f64(t2.norm()) * amp_neg)
        / to_f64(sin_nu_pi.norm());
    let est = to_f64(T::epsilon()) * 4.0 * (big / small).max(1.0);
    Ok(Certified::new(value, r(est)))
}

fn neumann_via_hankel<T: Real>(nu: Complex<T>, x: Complex<T>) -> Result<Certified<T>> {
    let h1 = hankel1(nu, x)?;
    let h2 = hankel2(nu, x)?;
    let two_i = c::<T>(0.0, 2.0);
    let value = (h1.value - h2.value) / two_i;
    let norm = to_f64(value.norm()).max(1e-300);
    let est = 0.5
        * (to_f64(h1.est) * to_f64(h1.value.norm()) + to_f64(h2.est) * to_f64(h2.value.norm()))
        / norm
        + to_f64(T::epsilon());
    Ok(Certified::new(value, r(est)))
}

// ---------------------------------------------------------------------------
// derivatives
// ---------------------------------------------------------------------------

/// d/dx F_ν(x) = (ν/x) F_ν(x) − F_{ν+1}(x), valid for J, H¹, H², N alike.
pub fn cylinder_prime<T: Real>(
    nu: Complex<T>,
    x: Complex<T>,
    f_nu: Complex<T>,
    f_nu_plus_1: Complex<T>,
) -> Complex<T> {
    nu / x * f_nu - f_nu_plus_1
}

/// d²/dx² F_ν(x) = ν(ν−1)/x² F_ν − (2ν+1)/x F_{ν+1} + F_{ν+2}.
pub fn cylinder_second<T: Real>(
    nu: Complex<T>,
    x: Complex<T>,
    f_nu: Complex<T>,
    f_nu_plus_1: Complex<T>,
    f_nu_plus_2: Complex<T>,
) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let two = c::<T>(2.0, 0.0);
    nu * (nu - one) / (x * x) * f_nu - (two * nu + one) / x * f_nu_plus_1 + f_nu_plus_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use hspinor_refcheck::{bessel_j_ref, hankel1_ref, hankel2_ref, neumann_ref, Cdd as RefCdd};
    use num_complex::Complex64;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    fn order(p: f64) -> Complex64 {
        Complex64::new(-0.5, -p)
    }

    fn ix(big_x: f64) -> Complex64 {
        Complex64::new(0.0, big_x)
    }

    fn ref_j(nu: Complex64, x: Complex64) -> Complex64 {
        bessel_j_ref(RefCdd::from_f64(nu.re, nu.im), RefCdd::from_f64(x.re, x.im)).to_c64()
    }

    #[test]
    fn half_order_closed_forms() {
        // J_{1/2}(x) = √(2/(πx)) sin x and J_{−1/2}(x) = √(2/(πx)) cos x,
        // checked on the real axis and the imaginary axis
        for &x in &[
            Complex64::new(2.0, 0.0),
            Complex64::new(0.7, 0.0),
            Complex64::new(0.0, 1.7),
            Complex64::new(0.0, 9.0),
        ] {
            let pref = (Complex64::new(2.0 / std::f64::consts::PI, 0.0) / x).sqrt();
            let jp = bessel_j(Complex64::new(0.5, 0.0), x).unwrap().value;
            let jm = bessel_j(Complex64::new(-0.5, 0.0), x).unwrap().value;
            assert!(rel(jp, pref * x.sin()) < 1e-13, "J_1/2 at {x}");
            assert!(rel(jm, pref * x.cos()) < 1e-13, "J_-1/2 at {x}");
        }
    }

    #[test]
    fn j_agrees_with_extended_reference() {
        for &p in &[1.0, 3.0, 6.0] {
            let nu = order(p);
            for &big_x in &[0.3, 2.0, 8.0, 20.0, 24.9, 25.1, 40.0, 60.0] {
                let x = ix(big_x);
                let cert = bessel_j(nu, x).unwrap();
                let d = rel(cert.value, ref_j(nu, x));
                assert!(d < 1e-11, "p={p}, X={big_x}: {d:e}");
                assert!(cert.est < 1e-11, "p={p}, X={big_x}: est {:e}", cert.est);
            }
        }
    }

    #[test]
    fn hankels_agree_with_extended_reference() {
        for &p in &[1.0, 1.5, 4.0] {
            let nu = order(p);
            for &big_x in &[0.5, 3.0, 7.0, 12.0, 15.5, 19.0, 25.0, 40.0] {
                let x = ix(big_x);
                let h1 = hankel1(nu, x).unwrap();
                let h2 = hankel2(nu, x).unwrap();
                let r1 = hankel1_ref(RefCdd::from_f64(nu.re, nu.im), RefCdd::from_f64(0.0, big_x));
                let r2 = hankel2_ref(RefCdd::from_f64(nu.re, nu.im), RefCdd::from_f64(0.0, big_x));
                let d1 = rel(h1.value, r1.to_c64());
                let d2 = rel(h2.value, r2.to_c64());
                let b1 = (10.0 * (h1.est + r1.est)).max(1e-12);
                let b2 = (10.0 * (h2.est + r2.est)).max(1e-12);
                assert!(d1 < b1, "H1 p={p}, X={big_x}: {d1:e} vs {b1:e}");
                assert!(d2 < b2, "H2 p={p}, X={big_x}: {d2:e} vs {b2:e}");
                assert!(h1.est < 1e-12, "H1 est p={p}, X={big_x}: {:e}", h1.est);
                assert!(h2.est < 1e-12, "H2 est p={p}, X={big_x}: {:e}", h2.est);
            }
        }
    }

    #[test]
    fn hankel_sum_is_twice_bessel() {
        for &p in &[1.0, 2.5] {
            let nu = order(p);
            for &big_x in &[1.0, 10.0, 30.0] {
                let x = ix(big_x);
                let h1 = hankel1(nu, x).unwrap().value;
                let h2 = hankel2(nu, x).unwrap().value;
                let j = bessel_j(nu, x).unwrap().value;
                let d = rel(h1 + h2, 2.0 * j);
                assert!(d < 1e-9, "p={p}, X={big_x}: {d:e}");
            }
        }
    }

    #[test]
    fn hankel_routes_agree_at_crossover() {
        // where the expansion and the extended connection hand over, both
        // must agree within their own certifications
        let nu = order(1.5);
        for &big_x in &[14.0, 15.5, 17.0] {
            let x = ix(big_x);
            for sign in [1.0, -1.0] {
                let a = hankel_large_argument(nu, x, sign).unwrap();
                let d = hankel_connection_dd(nu, x, sign).unwrap();
                let diff = rel(a.value, d.value);
                let budget = 10.0 * (a.est + d.est);
                assert!(diff < budget, "sign={sign}, X={big_x}: {diff:e} vs {budget:e}");
            }
        }
    }

    #[test]
    fn neumann_agrees_with_extended_reference() {
        for &p in &[0.1, 1.0, 4.0] {
            let nu = order(p);
            for &big_x in &[0.5, 4.0, 11.0, 26.0, 45.0] {
                let x = ix(big_x);
                let n = neumann(nu, x).unwrap();
                let reference = neumann_ref(RefCdd::from_f64(nu.re, nu.im), RefCdd::from_f64(0.0, big_x));
                let d = rel(n.value, reference.to_c64());
                let budget = (10.0 * (n.est + reference.est)).max(1e-12);
                assert!(d < budget, "p={p}, X={big_x}: {d:e} vs {budget:e}");
            }
        }
    }

    #[test]
    fn neumann_consistent_with_hankel_difference() {
        let nu = order(2.0);
        for &big_x in &[1.5, 9.0, 33.0] {
            let x = ix(big_x);
            let n = neumann(nu, x).unwrap().value;
            let h1 = hankel1(nu, x).unwrap().value;
            let h2 = hankel2(nu, x).unwrap().value;
            let d = rel(n, (h1 - h2) / Complex64::new(0.0, 2.0));
            assert!(d < 1e-9, "X={big_x}: {d:e}");
        }
    }

    #[test]
    fn wronskian_of_j_and_n() {
        // J_ν N'_ν − J'_ν N_ν = 2/(πx). Both products grow like e^{2X} while
        // the Wronskian stays O(1/x), so the check carries an
        // amplification-scaled budget measured from the actual magnitudes.
        let nu = order(1.5);
        for &big_x in &[0.7, 2.0, 4.0, 6.0] {
            let x = ix(big_x);
            let one = Complex64::new(1.0, 0.0);
            let j0 = bessel_j(nu, x).unwrap().value;
            let j1 = bessel_j(nu + one, x).unwrap().value;
            let n0 = neumann(nu, x).unwrap().value;
            let n1 = neumann(nu + one, x).unwrap().value;
            let jp = cylinder_prime(nu, x, j0, j1);
            let np = cylinder_prime(nu, x, n0, n1);
            let w = j0 * np - jp * n0;
            let expected = Complex64::new(2.0 / std::f64::consts::PI, 0.0) / x;
            let d = rel(w, expected);
            let amp = ((j0 * np).norm() + (jp * n0).norm()) / expected.norm();
            let budget = (8.0 * f64::EPSILON * amp).max(1e-12);
            assert!(d < budget, "X={big_x}: {d:e} vs {budget:e}");
        }
    }

    #[test]
    fn wronskian_of_hankels() {
        // H¹_ν H²'_ν − H¹'_ν H²_ν = −4i/(πx); cancellation-free at any
        // argument since the exponential factors multiply out
        let nu = order(1.5);
        for &big_x in &[1.0, 5.0, 15.0, 30.0, 60.0] {
            let x = ix(big_x);
            let one = Complex64::new(1.0, 0.0);
            let h10 = hankel1(nu, x).unwrap().value;
            let h11 = hankel1(nu + one, x).unwrap().value;
            let h20 = hankel2(nu, x).unwrap().value;
            let h21 = hankel2(nu + one, x).unwrap().value;
            let h1p = cylinder_prime(nu, x, h10, h11);
            let h2p = cylinder_prime(nu, x, h20, h21);
            let w = h10 * h2p - h1p * h20;
            let expected = Complex64::new(0.0, -4.0 / std::f64::consts::PI) / x;
            let d = rel(w, expected);
            assert!(d < 1e-11, "X={big_x}: {d:e}");
        }
    }

    #[test]
    fn seam_consistency_series_vs_hankel_assembly() {
        // at the switch radius the two J evaluations must agree far inside
        // the pinned seam tolerance
        for &p in &[1.0, 5.0] {
            let nu = order(p);
            let x = ix(J_SWITCH_RADIUS);
            let series = bessel_j_series(nu, x).unwrap();
            let h1 = hankel1(nu, x).unwrap().value;
            let h2 = hankel2(nu, x).unwrap().value;
            let d = rel(series, (h1 + h2) / 2.0);
            assert!(d < crate::tol::SEAM_MISMATCH, "p={p}: {d:e}");
        }
    }

    #[test]
    fn three_term_recurrence() {
        // J_{ν−1} + J_{ν+1} = (2ν/x) J_ν, and the same for N
        let one = Complex64::new(1.0, 0.0);
        for &p in &[1.0, 3.5] {
            let nu = order(p);
            for &big_x in &[0.8, 6.0, 18.0, 42.0] {
                let x = ix(big_x);
                let jm = bessel_j(nu - one, x).unwrap().value;
                let j0 = bessel_j(nu, x).unwrap().value;
                let jp = bessel_j(nu + one, x).unwrap().value;
                let d = rel(jm + jp, 2.0 * nu / x * j0);
                assert!(d < crate::tol::RECURRENCE_REL, "J p={p}, X={big_x}: {d:e}");
                let nm = neumann(nu - one, x).unwrap().value;
                let n0 = neumann(nu, x).unwrap().value;
                let np = neumann(nu + one, x).unwrap().value;
                let d = rel(nm + np, 2.0 * nu / x * n0);
                assert!(d < crate::tol::RECURRENCE_REL, "N p={p}, X={big_x}: {d:e}");
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let nu = order(2.0);
        let one = Complex64::new(1.0, 0.0);
        for &big_x in &[1.2f64, 5.0, 14.0] {
            let h = 1e-5 * big_x.max(1.0);
            let x = ix(big_x);
            let j0 = bessel_j(nu, x).unwrap().value;
            let j1 = bessel_j(nu + one, x).unwrap().value;
            let analytic = cylinder_prime(nu, x, j0, j1);
            let fd = (bessel_j(nu, ix(big_x + h)).unwrap().value
                - bessel_j(nu, ix(big_x - h)).unwrap().value)
                / Complex64::new(0.0, 2.0 * h);
            let d = rel(analytic, fd);
            assert!(d < 1e-6, "X={big_x}: {d:e}");
        }
    }

    #[test]
    fn negative_integer_order_is_rejected() {
        let out = bessel_j(Complex64::new(-3.0, 0.0), Complex64::new(1.0, 0.0));
        assert!(matches!(out, Err(Error::GammaPole { .. })));
    }
}
