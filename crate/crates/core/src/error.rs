//! Error type shared by the kernel and the solver modules.

/// Everything that can go numerically or structurally wrong in the library.
///
/// Variants carry `f64` diagnostics regardless of the working scalar so that
/// error values are printable and comparable without generics.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Gamma evaluated at (or within `tol` of) a non-positive integer.
    #[error("gamma pole: {re}{im:+}i is within {tol:e} of a non-positive integer")]
    GammaPole { re: f64, im: f64, tol: f64 },

    /// A series failed its truncation criterion within the iteration cap.
    #[error("series did not converge within {max_terms} terms (last relative term {last_rel:e})")]
    SeriesNonConvergence { max_terms: usize, last_rel: f64 },

    /// A connection formula or parameter combination is singular.
    #[error("degenerate parameter: {0}")]
    Degenerate(String),

    /// Input outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity left the representable range of the working scalar.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Flat-space wave with k3^2 < 0 (no propagating mode).
    #[error("evanescent mode: k3^2 = {k3_sq} < 0")]
    Evanescent { k3_sq: f64 },

    /// A map was evaluated at/over its boundary of validity.
    #[error("boundary error: {0}")]
    Boundary(String),

    /// Sampling grid too coarse for the requested analysis.
    #[error("under-resolved grid: {0}")]
    UnderResolved(String),

    /// Asymptotic classification did not reach the required fit quality.
    #[error("inconclusive classification: {0}")]
    Inconclusive(String),

    /// Adaptive integration failed (step underflow / stiffness).
    #[error("integration failure at t = {t}: {what}")]
    Integration { t: f64, what: String },

    /// Linear-algebra subproblem too ill-conditioned to trust.
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),

    /// Configuration rejected before any numerics ran.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
