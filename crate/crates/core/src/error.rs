use alloc::string::String;
use core::fmt;

/// Errors produced by material validation and the numerical evaluators.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A material record violates a physical invariant.
    InvalidMaterial { name: String, reason: String },
    /// The `c11` speed convention was requested for a material without C11.
    MissingC11 { name: String },
    /// ω = 0 together with k∥ = 0, or ω = 0 for the full scattering problem;
    /// use the static-limit operations instead.
    DegeneratePoint,
    /// A frequency that is neither real positive nor imaginary positive.
    InvalidFrequency,
    /// The Knott common denominator Δ underflowed relative to its largest
    /// term; the evaluation point sits on (or numerically near) a surface-mode
    /// pole such as the Rayleigh or Stoneley condition.
    SingularDenominator { delta: f64, largest_term: f64 },
    /// A quantity that should be real at imaginary frequency came out with a
    /// relative imaginary part above tolerance.
    ImaginaryResidue { relative: f64 },
    /// Argument outside a special function's supported domain.
    Domain(&'static str),
    /// Invalid quadrature or summation specification.
    InvalidSpec(&'static str),
    /// Adaptive quadrature exhausted its subdivisions; carries the best
    /// estimate and the error bound attached to it.
    QuadratureNonConvergence { best: f64, error: f64 },
    /// The Matsubara sum hit its term cap before the tail fell below
    /// tolerance; carries the running value.
    SumNonConvergence { best: f64, terms: u32 },
    /// An operation that needs T > 0 was called with T = 0.
    TemperatureRequired,
    /// A stack or request parameter is out of range.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMaterial { name, reason } => {
                write!(f, "invalid material '{name}': {reason}")
            }
            Error::MissingC11 { name } => {
                write!(f, "material '{name}' has no C11 but the c11 speed convention was requested")
            }
            Error::DegeneratePoint => write!(f, "degenerate spectral point (ω = 0)"),
            Error::InvalidFrequency => {
                write!(f, "frequency must be real positive or imaginary positive")
            }
            Error::SingularDenominator { delta, largest_term } => write!(
                f,
                "singular Knott denominator (|Δ| = {delta:.3e} against largest term {largest_term:.3e}); surface-mode pole"
            ),
            Error::ImaginaryResidue { relative } => write!(
                f,
                "imaginary residue {relative:.3e} above tolerance on a quantity that must be real"
            ),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InvalidSpec(what) => write!(f, "invalid spec: {what}"),
            Error::QuadratureNonConvergence { best, error } => write!(
                f,
                "quadrature failed to converge (best estimate {best:.6e} ± {error:.1e})"
            ),
            Error::SumNonConvergence { best, terms } => write!(
                f,
                "Matsubara sum failed to converge after {terms} terms (running value {best:.6e})"
            ),
            Error::TemperatureRequired => write!(f, "operation requires T > 0"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
