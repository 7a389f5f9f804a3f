//! The special-function kernel: complex gamma, confluent hypergeometric
//! functions Φ and Ψ, and cylinder functions J, H¹, H², N of complex order,
//! evaluated on the parameter rays the wave-equation builders use
//! (real argument for Φ/Ψ, imaginary argument and order ν = −ip − 1/2 for
//! the cylinder functions).
//!
//! The irregular solutions (Ψ, H¹, H², N) are linear combinations of
//! regular ones with exponentially lopsided coefficients, so no single
//! formula is accurate everywhere. Every such evaluation therefore runs a
//! small set of routes — a working-precision connection formula, a
//! divergent large-argument expansion summed to its smallest term, and a
//! double-double connection formula — each carrying an a-posteriori
//! relative error estimate, and returns the best-certified result as a
//! [`Certified`] value.

pub mod bessel;
pub mod gamma;
pub mod kummer;

use crate::real::Real;
use num_complex::Complex;

/// A kernel value bundled with a conservative relative error estimate.
///
/// The estimate is a-posteriori: connection routes report the cancellation
/// they actually incurred times the arithmetic's unit roundoff, divergent
/// expansions report their smallest retained term, and double-double routes
/// scale the same cancellation by the extended arithmetic's roundoff.
#[derive(Clone, Copy, Debug)]
pub struct Certified<T: Real> {
    pub value: Complex<T>,
    /// Upper bound on the relative error of `value`.
    pub est: T,
}

impl<T: Real> Certified<T> {
    pub fn new(value: Complex<T>, est: T) -> Self {
        Certified { value, est }
    }

    /// The better-certified of two candidates.
    pub fn better(self, other: Certified<T>) -> Certified<T> {
        if self.est <= other.est {
            self
        } else {
            other
        }
    }
}
