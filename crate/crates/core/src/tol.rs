//! Pinned numerical tolerances.
//!
//! Every assertion threshold used by the verification suites is declared here
//! once, with its justification, instead of appearing as an ad-hoc magic
//! number at the assertion site. Tolerances fall into three families:
//!
//! | family                | driver                                           |
//! |-----------------------|--------------------------------------------------|
//! | identity checks       | rounding of a handful of f64 ops (~1e-13..1e-8)  |
//! | discretization checks | truncation order of the scheme (h^4 central FD,  |
//! |                       | embedded RK local error)                          |
//! | asymptotic checks     | first omitted term of the expansion in play       |
//!
//! The `f32` instantiation of the kernel is tested with thresholds scaled by
//! `T::epsilon()`; the constants below are the binary64 contract.

/// |Γ(z+1) − zΓ(z)|/|Γ(z+1)|: a few rounding errors of the rational
/// approximation plus one multiply.
pub const GAMMA_RECURSION_REL: f64 = 1e-11;

/// Relative accuracy of the gamma kernel away from poles.
pub const GAMMA_REL: f64 = 1e-13;

/// |R − 1| on the reflection-coefficient scan (gamma moduli in f64).
pub const REFLECTION_UNITY: f64 = 1e-8;

/// Connection-identity residual (both lines, extended-precision assembly).
pub const KUMMER_CONNECTION_REL: f64 = 1e-9;

/// First/second-order system residuals via analytic derivatives.
pub const ODE_RESIDUAL_ANALYTIC: f64 = 1e-8;

/// Same residuals via 4th-order central finite differences on the
/// acceptance grid (truncation-limited).
pub const ODE_RESIDUAL_FD: f64 = 1e-6;

/// Cylinder-function recurrence residual (analytic identities in f64).
pub const RECURRENCE_REL: f64 = 1e-9;

/// A 1% perturbation of a relative factor must push the first-order residual
/// above this floor (sensitivity proof that the residual test is decisive).
pub const FACTOR_SENSITIVITY_FLOOR: f64 = 1e-3;

/// Closed form vs adaptive integration seeded 6 units left of the turning
/// point (integration drift dominates).
pub const ORACLE_AGREEMENT: f64 = 1e-6;

/// Flat-limit wavenumber error required at curvature radius R = 250.
pub const FLAT_LIMIT_AT_R250: f64 = 1e-2;

/// The nonrelativistic 0 = 0 operator identity, analytic derivatives.
pub const PAULI_IDENTITY: f64 = 1e-10;

/// Component-wise match of the massless two-component build against the
/// four-component builder under the p → −ε substitution.
pub const WEYL_DIRAC_MATCH: f64 = 1e-10;

/// Agreement of the two residual-operator encodings (delegating module vs
/// owning module) on shared inputs.
pub const OPERATOR_AGREEMENT: f64 = 1e-12;

/// Coordinate-map roundtrips and the hyperboloid invariant.
pub const GEOMETRY_ROUNDTRIP: f64 = 1e-12;

/// Axis limits q3 → ±1 at z = ±10 (e^{-2|z|} ≈ 2e-9 sets the scale).
pub const AXIS_LIMIT: f64 = 1e-8;

/// Kernel vs extended-precision reference on builder parameter paths.
pub const KERNEL_VS_EXTENDED: f64 = 1e-10;

/// Series vs asymptotic evaluation at the switch radius.
pub const SEAM_MISMATCH: f64 = 1e-8;

/// Least-squares fit residual when expressing one representation in the
/// span of another (constancy of coefficients across sub-grids: 1e-6).
pub const CROSS_REPRESENTATION: f64 = 1e-7;
pub const CROSS_REPRESENTATION_CONSTANCY: f64 = 1e-6;

/// Anti-drift: the ODE right-hand sides must reproduce the owning module's
/// equation lines exactly up to a few roundings.
pub const COEFFICIENT_AGREEMENT: f64 = 1e-14;

/// Default tolerance for the CLI `verify` command (overridable by
/// `HSPINOR_TOL`); the per-check tolerances above still apply — this caps
/// reported residuals that have no tighter contract.
pub const VERIFY_DEFAULT: f64 = 1e-8;
