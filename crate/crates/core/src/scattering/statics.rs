//! The ω → 0 limit of the interface problem: finite SH reflection, the
//! divergent L/N prefactor and the interface-localised bound state.

use num_complex::Complex64;

use crate::materials::{sound_speeds, ElasticMaterial, SoundSpeeds, SpeedConvention};
use crate::{Error, Result};

/// Static (ω → 0) limits of the reflection matrix for the pair (α, β):
///
/// * `r_mm0` — the finite SH limit (μ_α − μ_β)/(μ_α + μ_β);
/// * `b_prefactor` — the scalar in the divergent L/N block,
///   R_LN(ω) → (c_{L,α} k∥/ω)² · b · [[1, −c_N/c_L], [−c_L/c_N, 1]], with
///   b = 4μ_α(μ_α − μ_β) / (λ_α(μ_α + μ_β) + μ_α(μ_α + 3μ_β)).
///
/// The divergence prefactor assumes the self-consistent isotropic speeds
/// (c_ℓ² = (λ+2μ)/ρ); with measured C11 speeds the [[…]] structure persists
/// but the scalar picks up the C11/(λ+2μ) mismatch.
pub fn static_mode_limits(alpha: &ElasticMaterial, beta: &ElasticMaterial) -> (f64, f64) {
    let r_mm0 = (alpha.mu - beta.mu) / (alpha.mu + beta.mu);
    let b = 4.0 * alpha.mu * (alpha.mu - beta.mu)
        / (alpha.lambda * (alpha.mu + beta.mu) + alpha.mu * (alpha.mu + 3.0 * beta.mu));
    (r_mm0, b)
}

/// Which half-space a profile point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// z < 0
    Alpha,
    /// z > 0
    Beta,
}

impl Side {
    pub fn of(z: f64) -> Side {
        if z < 0.0 {
            Side::Alpha
        } else {
            Side::Beta
        }
    }
}

/// The ω = 0 interface bound state at transverse wavenumber k∥.
///
/// Each half-space carries a one-sided profile ψ decaying as e^{−k∥|z|}
/// times a polynomial; the physical state is the combination
/// (C_α ψ_α − C_β ψ_β)/(C_α² + C_β²) whose traction is continuous across the
/// interface. The velocity field ∂_t u vanishes identically at ω = 0, so the
/// no-slip condition holds for any combination; stress continuity is what
/// selects the mixing coefficients.
#[derive(Debug, Clone, Copy)]
pub struct BoundState {
    pub k_par: f64,
    /// Mixing coefficient of the α-side profile,
    /// C = √(c_L⁴ + c_N⁴)/(μ (c_L² − c_N²)).
    pub c_alpha: f64,
    /// Mixing coefficient of the β-side profile.
    pub c_beta: f64,
    pub speeds_alpha: SoundSpeeds,
    pub speeds_beta: SoundSpeeds,
}

fn mixing(speeds: &SoundSpeeds, mu: f64) -> f64 {
    let cl2 = speeds.c_l * speeds.c_l;
    let cn2 = speeds.c_t * speeds.c_t;
    libm::sqrt(cl2 * cl2 + cn2 * cn2) / (mu * (cl2 - cn2))
}

/// Builds the normalised ω = 0 interface state for the pair (α, β).
pub fn bound_state(
    alpha: &ElasticMaterial,
    beta: &ElasticMaterial,
    k_par: f64,
    mode: SpeedConvention,
) -> Result<BoundState> {
    if !(k_par > 0.0) || !k_par.is_finite() {
        return Err(Error::InvalidParameter("bound state requires k_par > 0"));
    }
    let sa = sound_speeds(alpha, mode)?;
    let sb = sound_speeds(beta, mode)?;
    if sa.c_l <= sa.c_t || sb.c_l <= sb.c_t {
        return Err(Error::InvalidParameter(
            "bound state requires c_l > c_t on both sides",
        ));
    }
    Ok(BoundState {
        k_par,
        c_alpha: mixing(&sa, alpha.mu),
        c_beta: mixing(&sb, beta.mu),
        speeds_alpha: sa,
        speeds_beta: sb,
    })
}

impl BoundState {
    /// Ratio A_{N,r}/A_{L,r} = −c_L/c_N of the one-sided α state.
    pub fn one_sided_amplitude_ratio(&self) -> f64 {
        -self.speeds_alpha.c_l / self.speeds_alpha.c_t
    }

    /// One-sided α profile (z ≤ 0 support), with k∥ at `azimuth` in the
    /// transverse plane and the transverse phase factor dropped.
    pub fn psi_alpha(&self, z: f64, azimuth: f64) -> [Complex64; 3] {
        if z > 0.0 {
            return [Complex64::new(0.0, 0.0); 3];
        }
        let cl2 = self.speeds_alpha.c_l * self.speeds_alpha.c_l;
        let cn2 = self.speeds_alpha.c_t * self.speeds_alpha.c_t;
        let norm = libm::sqrt(2.0 * self.k_par / (cl2 * cl2 + cn2 * cn2));
        let envelope = norm * libm::exp(self.k_par * z);
        let (s, c) = libm::sincos(azimuth);
        let i = Complex64::I;
        let lead = [i * c * cl2, i * s * cl2, Complex64::new(-cn2, 0.0)];
        let sub = [i * c, i * s, Complex64::new(1.0, 0.0)];
        let grow = self.k_par * z * (cl2 - cn2);
        [
            envelope * (lead[0] + grow * sub[0]),
            envelope * (lead[1] + grow * sub[1]),
            envelope * (lead[2] + grow * sub[2]),
        ]
    }

    /// One-sided β profile (z ≥ 0 support).
    pub fn psi_beta(&self, z: f64, azimuth: f64) -> [Complex64; 3] {
        if z < 0.0 {
            return [Complex64::new(0.0, 0.0); 3];
        }
        let cl2 = self.speeds_beta.c_l * self.speeds_beta.c_l;
        let cn2 = self.speeds_beta.c_t * self.speeds_beta.c_t;
        let norm = libm::sqrt(2.0 * self.k_par / (cl2 * cl2 + cn2 * cn2));
        let envelope = norm * libm::exp(-self.k_par * z);
        let (s, c) = libm::sincos(azimuth);
        let i = Complex64::I;
        let lead = [i * c * cl2, i * s * cl2, Complex64::new(cn2, 0.0)];
        let sub = [i * c, i * s, Complex64::new(-1.0, 0.0)];
        let grow = self.k_par * z * (cn2 - cl2);
        [
            envelope * (lead[0] + grow * sub[0]),
            envelope * (lead[1] + grow * sub[1]),
            envelope * (lead[2] + grow * sub[2]),
        ]
    }

    /// The combined stress-continuous displacement profile at height z.
    pub fn profile(&self, z: f64, azimuth: f64) -> [Complex64; 3] {
        let scale = 1.0 / (self.c_alpha * self.c_alpha + self.c_beta * self.c_beta);
        let a = self.psi_alpha(z, azimuth);
        let b = self.psi_beta(z, azimuth);
        [
            scale * (self.c_alpha * a[0] - self.c_beta * b[0]),
            scale * (self.c_alpha * a[1] - self.c_beta * b[1]),
            scale * (self.c_alpha * a[2] - self.c_beta * b[2]),
        ]
    }
}
