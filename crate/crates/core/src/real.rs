//! Scalar abstraction for the numerical kernel.
//!
//! Everything downstream (special functions, solution builders, the ODE
//! oracle) is generic over a floating scalar `T: Real`, so the same code
//! instantiates at `f32` and `f64`. Concrete `f64` aliases live at the crate
//! root. The extended-precision fallback routes convert through `f64`
//! internally; that conversion is lossless for every type implementing this
//! trait.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating scalar usable by the kernel: IEEE float semantics, the usual
/// mathematical constants, and lossless round-trips through `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` literal/value into the working scalar.
///
/// Panics only if the conversion is unrepresentable, which cannot happen for
/// finite literals and the supported types (`f32` saturates through
/// `FromPrimitive` rounding, which is the intended meaning for literals).
#[inline]
pub fn r<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 value must convert into the working scalar")
}

/// Converts the working scalar back to `f64` (exact for `f32`/`f64`).
#[inline]
pub fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().expect("working scalar must convert to f64")
}

/// Builds a complex number of the working scalar from `f64` parts.
#[inline]
pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(r(re), r(im))
}

/// Imaginary unit in the working scalar.
#[inline]
pub fn i_unit<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

/// Converts a complex value of the working scalar to `Complex<f64>`.
#[inline]
pub fn to_c64<T: Real>(z: Complex<T>) -> Complex<f64> {
    Complex::new(to_f64(z.re), to_f64(z.im))
}

/// Converts a `Complex<f64>` into the working scalar's complex type.
#[inline]
pub fn from_c64<T: Real>(z: Complex<f64>) -> Complex<T> {
    Complex::new(r(z.re), r(z.im))
}
