//! Regular (Φ) and irregular (Ψ) confluent hypergeometric functions for
//! complex parameters, tuned for the rays the wave builders evaluate on
//! (y real positive, a on the lines Re a = 0 and Re a = 1/2, c = 2a —
//! though the entry points accept general complex parameters).
//!
//! Φ is entire and is summed by its ascending series inside the radius
//! [`PHI_SWITCH_RADIUS`], by the dominant-branch large-argument expansion
//! outside it (with the omitted subdominant branch charged to the error
//! estimate, and an automatic fall-back to the convergent series whenever
//! the expansion cannot certify [`ACCEPT_EST`]).
//!
//! Ψ and the related two-term gamma-weighted combinations of Φ solutions
//! are exponentially cancellation-prone, so they are evaluated by competing
//! routes returning [`Certified`] values: the working-precision connection
//! formula, the divergent large-argument expansion summed to its smallest
//! term, and the double-double connection formula.

use crate::error::{Error, Result};
use crate::extended::{gamma_cdd, Cdd};
use crate::real::{c, from_c64, r, to_c64, to_f64, Real};
use crate::special::gamma::{gamma, ln_abs_gamma};
use crate::special::Certified;
use num_complex::Complex;

/// Argument magnitude beyond which Φ prefers its large-argument expansion.
pub const PHI_SWITCH_RADIUS: f64 = 40.0;

/// An evaluation route is accepted outright once its a-posteriori relative
/// error estimate is at or below this; otherwise alternatives compete.
pub const ACCEPT_EST: f64 = 1e-13;

/// Relative roundoff charged per unit of cancellation to the double-double
/// connection routes (the extended gamma's measured accuracy dominates it).
const DD_CONNECTION_EPS: f64 = 1e-28;

/// Hard cap on ascending-series terms before reporting non-convergence.
const MAX_SERIES_TERMS: usize = 10_000;

// ---------------------------------------------------------------------------
// Φ
// ---------------------------------------------------------------------------

/// Φ(a, c, y): regular confluent hypergeometric function.
pub fn phi<T: Real>(a: Complex<T>, c_par: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    if y.re < T::zero() {
        // Φ(a,c,y) = e^y Φ(c−a, c, −y): sum the cancellation-free side.
        return Ok(y.exp() * phi(c_par - a, c_par, -y)?);
    }
    if y.norm() < r(PHI_SWITCH_RADIUS) {
        return phi_series(a, c_par, y);
    }
    match phi_large_argument(a, c_par, y) {
        Ok(cert) if to_f64(cert.est) <= accept_threshold::<T>() => Ok(cert.value),
        _ => phi_series(a, c_par, y),
    }
}

/// Acceptance threshold for a route's error estimate, scaled so that wider
/// scalars use [`ACCEPT_EST`] and narrower ones a commensurate multiple of
/// their own roundoff.
fn accept_threshold<T: Real>() -> f64 {
    ACCEPT_EST.max(to_f64(T::epsilon()) * 100.0)
}

/// dΦ/dy = (a/c) Φ(a+1, c+1, y).
pub fn phi_prime<T: Real>(a: Complex<T>, c_par: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    Ok(a / c_par * phi(a + one, c_par + one, y)?)
}

/// d²Φ/dy² = a(a+1)/(c(c+1)) Φ(a+2, c+2, y).
pub fn phi_second<T: Real>(a: Complex<T>, c_par: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    let two = Complex::new(r::<T>(2.0), T::zero());
    Ok(a * (a + one) / (c_par * (c_par + one)) * phi(a + two, c_par + two, y)?)
}

/// The ascending series Σ_n (a)_n/(c)_n y^n/n!, convergent everywhere; this
/// is the reference path the switched evaluations fall back to.
pub fn phi_series<T: Real>(a: Complex<T>, c_par: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    degenerate_check(c_par)?;
    let thresh = T::epsilon() * r::<T>(0.5);
    let mut term = Complex::new(T::one(), T::zero());
    let mut sum = term;
    let mut small_run = 0u32;
    let mut last_rel = 1.0f64;
    for n in 0..MAX_SERIES_TERMS {
        let nf = r::<T>(n as f64);
        let one = T::one();
        term = term * (a + Complex::new(nf, T::zero())) / (c_par + Complex::new(nf, T::zero()))
            * y
            / Complex::new(nf + one, T::zero());
        sum = sum + term;
        last_rel = to_f64(term.norm()) / to_f64(sum.norm()).max(1e-300);
        if term.norm() < thresh * sum.norm() {
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
        last_rel,
    })
}

/// Dominant branch of the large-argument expansion,
/// Φ ≈ Γ(c)/Γ(a) e^y y^{a−c} Σ_n (c−a)_n (1−a)_n / (n! yⁿ),
/// summed to its smallest term. The estimate charges both that term and
/// the omitted subdominant branch (relative size
/// |Γ(a)/Γ(c−a)| y^{Re(c−2a)} e^{π|Im a|− Re y}); callers fall back to the
/// convergent series when the estimate cannot reach their target.
pub fn phi_large_argument<T: Real>(
    a: Complex<T>,
    c_par: Complex<T>,
    y: Complex<T>,
) -> Result<Certified<T>> {
    let one = Complex::new(T::one(), T::zero());
    let ga = gamma(a)?;
    let prefactor = gamma(c_par)? / ga * y.exp() * y.powc(a - c_par);
    let b1 = c_par - a;
    let b2 = one - a;
    let mut term = one;
    let mut sum = one;
    let mut min_rel = 1.0f64;
    for n in 0..400 {
        let nf = r::<T>(n as f64);
        term = term * (b1 + Complex::new(nf, T::zero())) * (b2 + Complex::new(nf, T::zero()))
            / (y * Complex::new(nf + T::one(), T::zero()));
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
    // subdominant-branch magnitude relative to the dominant branch
    let sub_rel = match (ln_abs_gamma(a), ln_abs_gamma(c_par - a)) {
        (Ok(la), Ok(lca)) => {
            let ln_ratio = to_f64(la) - to_f64(lca)
                + to_f64((c_par - a - a).re) * to_f64(y.norm()).ln()
                + std::f64::consts::PI * to_f64(a.im).abs()
                - to_f64(y.re);
            ln_ratio.exp()
        }
        // 1/Γ at a pole: that branch is absent
        (_, Err(Error::GammaPole { .. })) => 0.0,
        (Err(e), _) => return Err(e),
        (_, Err(e)) => return Err(e),
    };
    Ok(Certified::new(
        prefactor * sum,
        r::<T>(min_rel + sub_rel + 1e-15),
    ))
}

// ---------------------------------------------------------------------------
// two-term connection combinations and Ψ
// ---------------------------------------------------------------------------

/// sign = +1 gives Ψ(a, c, y); −1 gives the companion combination
/// Γ(1−c)/Γ(a+1−c) Φ(a,c,y) − Γ(c−1)/Γ(a) y^{1−c} Φ(a+1−c, 2−c, y).
pub fn connection_combination<T: Real>(
    a: Complex<T>,
    c_par: Complex<T>,
    y: Complex<T>,
    sign: f64,
) -> Result<Certified<T>> {
    let native = combination_native(a, c_par, y, sign);
    match &native {
        Ok(cert) if to_f64(cert.est) <= accept_threshold::<T>() => return native,
        _ => {}
    }
    let dd = combination_dd(a, c_par, y, sign);
    match (native, dd) {
        (Ok(n), Ok(d)) => Ok(n.better(d)),
        (Ok(n), Err(_)) => Ok(n),
        (Err(_), Ok(d)) => Ok(d),
        (Err(e), Err(_)) => Err(e),
    }
}

fn combination_native<T: Real>(
    a: Complex<T>,
    c_par: Complex<T>,
    y: Complex<T>,
    sign: f64,
) -> Result<Certified<T>> {
    let one = Complex::new(T::one(), T::zero());
    let two = Complex::new(r::<T>(2.0), T::zero());
    let t1 = gamma(one - c_par)? / gamma(a + one - c_par)? * phi(a, c_par, y)?;
    let t2 = gamma(c_par - one)? / gamma(a)?
        * y.powc(one - c_par)
        * phi(a + one - c_par, two - c_par, y)?;
    let value = t1 + c::<T>(sign, 0.0) * t2;
    let big = to_f64(t1.norm()) + to_f64(t2.norm());
    let small = to_f64(value.norm());
    if small == 0.0 {
        return Err(Error::IllConditioned(
            "connection combination cancelled to zero".into(),
        ));
    }
    let est = to_f64(T::epsilon()) * 4.0 * (big / small).max(1.0);
    Ok(Certified::new(value, r(est)))
}

fn combination_dd<T: Real>(
    a: Complex<T>,
    c_par: Complex<T>,
    y: Complex<T>,
    sign: f64,
) -> Result<Certified<T>> {
    degenerate_check(c_par)?;
    let a = Cdd::from_c64(to_c64(a));
    let cc = Cdd::from_c64(to_c64(c_par));
    let y = Cdd::from_c64(to_c64(y));
    let one = Cdd::ONE;
    let two = Cdd::from_f64(2.0, 0.0);
    let t1 = gamma_cdd(one.sub(cc))
        .div(gamma_cdd(a.add(one).sub(cc)))
        .mul(phi_series_cdd(a, cc, y));
    let t2 = gamma_cdd(cc.sub(one))
        .div(gamma_cdd(a))
        .mul(y.powc(one.sub(cc)))
        .mul(phi_series_cdd(a.add(one).sub(cc), two.sub(cc), y));
    let value = if sign >= 0.0 { t1.add(t2) } else { t1.sub(t2) };
    let big = t1.abs().to_f64() + t2.abs().to_f64();
    let small = value.abs().to_f64();
    if small == 0.0 || !value.is_finite() {
        return Err(Error::IllConditioned(
            "extended connection combination cancelled to zero".into(),
        ));
    }
    let est = DD_CONNECTION_EPS * (big / small).max(1.0);
    Ok(Certified::new(from_c64(value.to_c64()), r(est)))
}

/// Ψ(a, c, y): irregular confluent hypergeometric function, Re y > 0.
/// Competing routes (connection in working precision, large-argument
/// expansion, connection in double-double) with the best certification.
pub fn psi<T: Real>(a: Complex<T>, c_par: Complex<T>, y: Complex<T>) -> Result<Certified<T>> {
    if y.re <= T::zero() {
        return Err(Error::Domain(
            "irregular confluent function evaluated at Re y <= 0".into(),
        ));
    }
    let conn = connection_combination(a, c_par, y, 1.0);
    if let Ok(cert) = &conn {
        if to_f64(cert.est) <= accept_threshold::<T>() {
            return conn;
        }
    }
    let asym = psi_large_argument(a, c_par, y);
    match (conn, asym) {
        (Ok(x), Ok(z)) => Ok(x.better(z)),
        (Ok(x), Err(_)) => Ok(x),
        (Err(_), Ok(z)) => Ok(z),
        (Err(e), Err(_)) => Err(e),
    }
}

/// dΨ/dy = −a Ψ(a+1, c+1, y).
pub fn psi_prime<T: Real>(a: Complex<T>, c_par: Complex<T>, y: Complex<T>) -> Result<Certified<T>> {
    let one = Complex::new(T::one(), T::zero());
    let inner = psi(a + one, c_par + one, y)?;
    Ok(Certified::new(-a * inner.value, inner.est))
}

/// Large-argument expansion Ψ ≈ y^{−a} Σ_n (a)_n (a−c+1)_n / (n! (−y)ⁿ),
/// summed to its smallest term.
pub fn psi_large_argument<T: Real>(
    a: Complex<T>,
    c_par: Complex<T>,
    y: Complex<T>,
) -> Result<Certified<T>> {
    let one = Complex::new(T::one(), T::zero());
    let b2 = a - c_par + one;
    let mut term = one;
    let mut sum = one;
    let mut min_rel = 1.0f64;
    for n in 0..400 {
        let nf = r::<T>(n as f64);
        term = term * (a + Complex::new(nf, T::zero())) * (b2 + Complex::new(nf, T::zero()))
            / (-y * Complex::new(nf + T::one(), T::zero()));
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
        y.powc(-a) * sum,
        r::<T>(min_rel + 1e-15),
    ))
}

/// Ascending Φ series in double-double arithmetic (kernel-internal; the
/// reference evaluations in the test tree have their own, separately coded).
fn phi_series_cdd(a: Cdd, c_par: Cdd, y: Cdd) -> Cdd {
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    let mut small_run = 0u32;
    for n in 0..MAX_SERIES_TERMS {
        let nf = n as f64;
        term = term
            .mul(a.add(Cdd::from_f64(nf, 0.0)))
            .div(c_par.add(Cdd::from_f64(nf, 0.0)))
            .mul(y)
            .div(Cdd::from_f64(nf + 1.0, 0.0));
        sum = sum.add(term);
        if term.abs().to_f64() < 1e-33 * sum.abs().to_f64() {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    sum
}

/// The series in 1/(c)_n breaks down when c sits at a non-positive integer.
fn degenerate_check<T: Real>(c_par: Complex<T>) -> Result<()> {
    let re = to_f64(c_par.re);
    let im = to_f64(c_par.im);
    if re <= 1e-12 && im.abs() < 1e-12 && (re - re.round()).abs() < 1e-12 {
        return Err(Error::Degenerate(format!(
            "lower parameter c = {re}+{im}i is a non-positive integer"
        )));
    }
    Ok(())
}
