//! Special functions and generic numerical engines.

mod det;
mod polylog;
mod quad;
mod sum;

pub use det::{det2, det3};
pub use polylog::polylog;
pub use quad::{integrate, Domain, Quadrature, QuadratureSpec, Transform};
pub use sum::{matsubara_sum, MatsubaraSum, SumSpec, ZeroModeWeight};
