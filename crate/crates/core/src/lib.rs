//! Closed-form quasi-plane-wave solutions of the Schrödinger, Dirac, Weyl
//! and Pauli equations in the hyperbolic space H³ of constant negative
//! curvature, in horospherical coordinates.
//!
//! In the coordinates `(x, y, z)` used throughout, the metric is
//! `ds² = dt² − e^{2z}(dx² + dy²) − dz²` (curvature radius scaled to 1), and
//! separable solutions of the form `e^{ik₁x + ik₂y} f(z)` exist for every
//! wave equation treated here. Along the special axis `x = y = 0` such
//! solutions reduce to genuine plane waves; away from it they are their
//! curved-space analogues and are built from confluent hypergeometric and
//! cylinder functions of imaginary argument and complex order.
//!
//! The crate provides:
//!
//! * [`special`] — the function kernel: complex gamma, the regular and
//!   irregular confluent hypergeometric functions, and Bessel/Hankel/Neumann
//!   functions of complex order on the imaginary axis, each with explicitly
//!   switched evaluation routes and a-posteriori accuracy estimates;
//! * [`geometry`] — the embedding of the coordinates into the hyperboloid
//!   model and Poincaré-type quasi-Cartesian coordinates, with exact
//!   round-trip maps;
//! * [`schrodinger`] — scalar radial solutions, the barrier/reflection
//!   analysis and the connection identities between solution bases;
//! * [`dirac`] — the four-component spinor solutions with explicitly
//!   verified relative factors, the axial (plane-wave) special case, and
//!   the flat-space contraction;
//! * [`weyl`] — the two-component massless solutions;
//! * [`pauli`] — the non-relativistic two-component reduction and the
//!   operator identities it rests on;
//! * [`bessel_rep`] — the equivalent representation of the spinor radial
//!   system in terms of cylinder functions, with the asymptotic
//!   classification of all six solution pairs;
//! * [`oracle`] — an adaptive Runge–Kutta integrator and finite-difference
//!   residual machinery used to verify every closed form independently;
//! * [`extended`] — double-double arithmetic backing the few
//!   cancellation-prone connection formulas and the reference evaluations.
//!
//! Everything numeric is generic over the scalar type through [`real::Real`]
//! (implemented for `f32` and `f64`); the type aliases at the crate root fix
//! the common binary64 instantiation.

pub mod error;
pub mod extended;
pub mod real;
pub mod tol;

pub mod special;

mod profile;

pub mod geometry;

pub mod oracle;

pub mod schrodinger;

pub mod dirac;

pub mod weyl;

pub mod pauli;

pub mod bessel_rep;

pub use error::{Error, Result};

/// Binary64 complex scalar, the default instantiation everywhere.
pub type C64 = num_complex::Complex<f64>;

/// Binary32 complex scalar (supported by the generic core, rarely useful).
pub type C32 = num_complex::Complex<f32>;
