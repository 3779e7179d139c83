//! Matsubara summation with a geometric tail estimate.

use crate::{Error, Result};

/// Weight applied to the n = 0 term of a Matsubara sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroModeWeight {
    /// n = 0 is not evaluated at all (the sum starts at n = 1).
    Excluded,
    /// The primed sum: n = 0 enters with weight 1/2.
    Half,
    /// Full weight.
    Full,
}

/// Tolerances and limits for [`matsubara_sum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumSpec {
    /// Relative tolerance of the estimated tail against the accumulated sum.
    pub rel_tol: f64,
    /// Terms that are always evaluated before convergence may be declared
    /// (counting from n = 1).
    pub min_terms: u32,
    pub max_terms: u32,
    /// When set, the estimated geometric tail is folded into the result
    /// instead of merely bounding the truncation error.
    pub tail_acceleration: bool,
}

impl Default for SumSpec {
    fn default() -> Self {
        SumSpec {
            rel_tol: 1e-10,
            min_terms: 4,
            max_terms: 3_000_000,
            tail_acceleration: false,
        }
    }
}

impl SumSpec {
    fn validate(&self) -> Result<()> {
        if self.min_terms < 2 {
            return Err(Error::InvalidSpec("min_terms must be >= 2"));
        }
        if self.max_terms < self.min_terms {
            return Err(Error::InvalidSpec("max_terms must be >= min_terms"));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidSpec("rel_tol must be positive"));
        }
        Ok(())
    }
}

/// Result of a truncated Matsubara sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraSum {
    pub value: f64,
    /// Number of term evaluations (including n = 0 when it is weighted).
    pub terms_used: u32,
}

/// Sums `weight0 · term(0) + Σ_{n≥1} term(n)`, truncating once the estimated
/// geometric tail drops below `rel_tol` of the accumulated magnitude.
///
/// Terms must eventually decay in magnitude (the e^{−2dκ} translation factor
/// guarantees this for every integrand in this crate). Convergence is only
/// declared on monotonically shrinking terms past `min_terms`.
pub fn matsubara_sum<F>(
    mut term: F,
    weight0: ZeroModeWeight,
    spec: &SumSpec,
) -> Result<MatsubaraSum>
where
    F: FnMut(u32) -> Result<f64>,
{
    spec.validate()?;
    let mut evaluations = 0u32;
    let mut acc = match weight0 {
        ZeroModeWeight::Excluded => 0.0,
        ZeroModeWeight::Half => {
            evaluations += 1;
            0.5 * term(0)?
        }
        ZeroModeWeight::Full => {
            evaluations += 1;
            term(0)?
        }
    };
    let mut prev_mag = f64::INFINITY;
    let mut shrinking = 0u32;
    for n in 1..=spec.max_terms {
        let t = term(n)?;
        evaluations += 1;
        acc += t;
        let mag = t.abs();
        if mag == 0.0 && prev_mag == 0.0 && n >= spec.min_terms {
            return Ok(MatsubaraSum {
                value: acc,
                terms_used: evaluations,
            });
        }
        shrinking = if mag < prev_mag { shrinking + 1 } else { 0 };
        if n >= spec.min_terms && shrinking >= 2 {
            let ratio = mag / prev_mag;
            let tail = mag * ratio / (1.0 - ratio);
            if tail <= spec.rel_tol * acc.abs() {
                if spec.tail_acceleration {
                    acc += t.signum() * tail;
                }
                return Ok(MatsubaraSum {
                    value: acc,
                    terms_used: evaluations,
                });
            }
        }
        prev_mag = mag;
    }
    Err(Error::SumNonConvergence {
        best: acc,
        terms: evaluations,
    })
}
