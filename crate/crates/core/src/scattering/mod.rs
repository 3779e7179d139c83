//! Elastodynamic scattering at a planar interface between two isotropic
//! solids.
//!
//! Plane waves are decomposed into the three polarizations L (compressional,
//! P), M (horizontally polarized shear, SH) and N (vertically polarized
//! shear, SV), generated from the scalar plane wave φ = e^{i(k·x − ωt)} as
//!
//! ```text
//! L = ∇φ / |k|,   M = ∇×(φ ẑ) / k∥,   N = ∇×M / |k|,
//! ```
//!
//! so all three carry unit-magnitude polarization vectors. Medium α occupies
//! z < 0 and hosts the incident (+k_P) and reflected (−k_P) waves; medium β
//! occupies z > 0 and hosts the transmitted wave (+q_P). The no-slip and
//! stress-continuity conditions at z = 0 close the system and yield the 3×3
//! reflection and transmission matrices with the block structure
//!
//! ```text
//!     ( R_LL  0     R_LN )
//! R = ( 0     R_MM  0    )
//!     ( R_NL  0     R_NN )
//! ```
//!
//! (M decouples; L and N mix). The closed-form coefficients live in
//! [`mod@self`] as rational-algebraic functions of the axial wavenumbers,
//! sound speeds and Lamé parameters — consistent with the classical Knott
//! equations — and are verified against the boundary conditions by
//! [`boundary_residual`].

mod knott;
mod residual;
mod statics;

pub use knott::{r_mm_imaginary, reflection_transmission, ScatteringMatrices};
pub use residual::{boundary_residual, IncidentWave};
pub use statics::{bound_state, static_mode_limits, BoundState, Side};

use num_complex::Complex64;

use crate::constants::matsubara_spacing;
use crate::materials::{sound_speeds, ElasticMaterial, SoundSpeeds, SpeedConvention};
use crate::{Error, Result};

/// One (frequency, transverse wavenumber) evaluation point with the axial
/// wavenumbers of all three polarizations in both media.
///
/// The frequency is either real positive (propagating problems) or purely
/// imaginary positive ω = iξ (Matsubara evaluation). Axial wavenumbers take
/// the branch with Im k ≥ 0, i.e. outgoing/decaying waves; at imaginary
/// frequency every axial wavenumber is exactly iκ with κ = √(ξ²/c² + k∥²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    /// Angular frequency ω, rad/s (possibly imaginary).
    pub freq: Complex64,
    /// Matsubara index when the point was built from one.
    pub n: Option<u32>,
    /// Transverse wavenumber magnitude, 1/m.
    pub k_par: f64,
    /// Axial wavenumbers (k_L, k_M, k_N) in medium α, 1/m.
    pub k_alpha: [Complex64; 3],
    /// Axial wavenumbers (q_L, q_M, q_N) in medium β, 1/m.
    pub k_beta: [Complex64; 3],
    pub speeds_alpha: SoundSpeeds,
    pub speeds_beta: SoundSpeeds,
}

impl SpectralPoint {
    /// True when the point sits at imaginary frequency ω = iξ, ξ ≥ 0.
    pub fn is_imaginary_frequency(&self) -> bool {
        self.freq.re == 0.0
    }

    /// ξ for an imaginary-frequency point.
    pub fn xi(&self) -> f64 {
        self.freq.im
    }

    /// Builds the point for Matsubara index `n` at temperature `t`.
    pub fn matsubara(
        n: u32,
        t: f64,
        k_par: f64,
        alpha: &ElasticMaterial,
        beta: &ElasticMaterial,
        mode: SpeedConvention,
    ) -> Result<Self> {
        let xi = matsubara_spacing(t) * n as f64;
        let mut point = axial_wavenumbers(Complex64::new(0.0, xi), k_par, alpha, beta, mode)?;
        point.n = Some(n);
        Ok(point)
    }
}

/// Axial wavenumber k_z = √(ω²/c² − k∥²) on the Im ≥ 0 branch.
fn axial(freq: Complex64, k_par: f64, c: f64) -> Complex64 {
    let z = freq * freq / (c * c) - k_par * k_par;
    let mut s = z.sqrt();
    if s.im < 0.0 || (s.im == 0.0 && s.re < 0.0) {
        s = -s;
    }
    // normalise -0.0 parts so that comparisons and exact-zero tests behave
    Complex64::new(s.re + 0.0, s.im + 0.0)
}

/// Populates a [`SpectralPoint`] for the interface pair (α, β).
///
/// `freq` must be real positive or purely imaginary positive; ω = 0 together
/// with k∥ = 0 is degenerate. At real frequency the branch gives real
/// non-negative axial wavenumbers below the critical angle and decaying
/// evanescent ones (positive imaginary) beyond it.
pub fn axial_wavenumbers(
    freq: Complex64,
    k_par: f64,
    alpha: &ElasticMaterial,
    beta: &ElasticMaterial,
    mode: SpeedConvention,
) -> Result<SpectralPoint> {
    if !(k_par >= 0.0) || !k_par.is_finite() {
        return Err(Error::InvalidParameter("k_par must be finite and >= 0"));
    }
    let real = freq.im == 0.0 && freq.re >= 0.0;
    let imaginary = freq.re == 0.0 && freq.im >= 0.0;
    if !(real || imaginary) || !freq.re.is_finite() || !freq.im.is_finite() {
        return Err(Error::InvalidFrequency);
    }
    if freq.norm_sqr() == 0.0 && k_par == 0.0 {
        return Err(Error::DegeneratePoint);
    }
    let sa = sound_speeds(alpha, mode)?;
    let sb = sound_speeds(beta, mode)?;
    let k_l = axial(freq, k_par, sa.c_l);
    let k_t = axial(freq, k_par, sa.c_t);
    let q_l = axial(freq, k_par, sb.c_l);
    let q_t = axial(freq, k_par, sb.c_t);
    Ok(SpectralPoint {
        freq,
        n: None,
        k_par,
        k_alpha: [k_l, k_t, k_t],
        k_beta: [q_l, q_t, q_t],
        speeds_alpha: sa,
        speeds_beta: sb,
    })
}
