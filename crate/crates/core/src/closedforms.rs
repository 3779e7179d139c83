//! Closed-form asymptotics of the phononic energy, the electromagnetic
//! Lifshitz comparison energies, the phononic/electromagnetic ratio estimate
//! and the mechanics corollaries (interface Casimir pressure, apparent
//! Young's modulus of a thin film).
//!
//! Throughout, material 0 is the gap and material 1 the plates. For the two
//! identical-plate energies the only material inputs are the shear moduli,
//! the gap sound speeds and the static permittivities.

use core::f64::consts::PI;

use crate::constants::{C_LIGHT, HBAR, K_BOLTZMANN, ZETA_4};
use crate::lifshitz::LayerStack;
use crate::materials::{sound_speeds, ElasticMaterial, Permittivity, SoundSpeeds, SpeedConvention};
use crate::numerics::{integrate, polylog, Domain, QuadratureSpec};
use crate::{Error, Result};

/// Shear-modulus contrast (μ₀ − μ₁)/(μ₀ + μ₁).
fn mu_contrast(gap: &ElasticMaterial, plate: &ElasticMaterial) -> f64 {
    (gap.mu - plate.mu) / (gap.mu + plate.mu)
}

/// Perfect-reflector energy −π²ħ(c_ℓ + 2c_t)/(1440 d³), J/m².
pub fn e_perfect(gap_speeds: &SoundSpeeds, d: f64) -> f64 {
    -(PI * PI / 1440.0) * HBAR * (gap_speeds.c_l + 2.0 * gap_speeds.c_t) / (d * d * d)
}

/// The dimensionless constant of the L/N quantum asymptotics,
/// B = |8μ₀(μ₀ − μ₁) / (λ₀(μ₀ + μ₁) + μ₀(μ₀ + 3μ₁))|.
pub fn b_constant(gap: &ElasticMaterial, plate: &ElasticMaterial) -> f64 {
    let num = 8.0 * gap.mu * (gap.mu - plate.mu);
    let den = gap.lambda * (gap.mu + plate.mu) + gap.mu * (gap.mu + 3.0 * plate.mu);
    (num / den).abs()
}

/// Quantum-limit L/N energy +4ħc_{ℓ,0}√B/(πd³), J/m².
///
/// Repulsive; diagnostic only. The ω → 0 sector it derives from is the
/// distance-independent interface bound state, so this value never enters an
/// energy total.
pub fn e_ln_quantum(
    gap: &ElasticMaterial,
    plate: &ElasticMaterial,
    d: f64,
    mode: SpeedConvention,
) -> Result<f64> {
    let speeds = sound_speeds(gap, mode)?;
    let b = b_constant(gap, plate);
    Ok(4.0 * HBAR * speeds.c_l * libm::sqrt(b) / (PI * d * d * d))
}

/// High-temperature L/N energy
/// −16ħc_{ℓ,0}B²(c_{ℓ,0}/c_{t,0})³ e^{−4πk_BTd/(ħc_{t,0})} / (π²d³), J/m².
pub fn e_ln_thermal(
    gap: &ElasticMaterial,
    plate: &ElasticMaterial,
    d: f64,
    t: f64,
    mode: SpeedConvention,
) -> Result<f64> {
    let speeds = sound_speeds(gap, mode)?;
    let b = b_constant(gap, plate);
    let ratio = speeds.c_l / speeds.c_t;
    let exponent = -4.0 * PI * K_BOLTZMANN * t * d / (HBAR * speeds.c_t);
    Ok(
        -16.0 * HBAR * speeds.c_l * b * b / (PI * PI * d * d * d)
            * ratio
            * ratio
            * ratio
            * libm::exp(exponent),
    )
}

/// Quantum-limit SH energy (J/m²):
/// −(ħc_{t,0}/16π²d³) ∫₀¹ Li₄([(μ₀ − μ₁γ(x))/(μ₀ + μ₁γ(x))]²) dx with
/// γ(x) = √((c_{t,0}²/c_{t,1}² − 1)x² + 1).
pub fn e_m_quantum(gap: &ElasticMaterial, plate: &ElasticMaterial, d: f64) -> Result<f64> {
    let ct0 = libm::sqrt(gap.mu / gap.rho);
    let ct1 = libm::sqrt(plate.mu / plate.rho);
    let slope = ct0 * ct0 / (ct1 * ct1) - 1.0;
    let spec = QuadratureSpec {
        rel_tol: 1e-12,
        ..Default::default()
    };
    let q = integrate(
        |x| {
            let gamma = libm::sqrt(slope * x * x + 1.0);
            let r = (gap.mu - plate.mu * gamma) / (gap.mu + plate.mu * gamma);
            polylog(4, r * r).unwrap_or(f64::NAN)
        },
        Domain::Finite(0.0, 1.0),
        &spec,
    )?;
    if !q.value.is_finite() {
        return Err(Error::Domain("polylog argument escaped [0, 1]"));
    }
    Ok(-HBAR * ct0 / (16.0 * PI * PI * d * d * d) * q.value)
}

/// High-temperature SH energy −(k_BT/16πd²) Li₃(r_μ²), J/m².
pub fn e_m_thermal(gap: &ElasticMaterial, plate: &ElasticMaterial, d: f64, t: f64) -> f64 {
    let r = mu_contrast(gap, plate);
    let li3 = polylog(3, r * r).expect("r_mu^2 lies in [0, 1)");
    -K_BOLTZMANN * t / (16.0 * PI * d * d) * li3
}

/// The two squared polarization brackets of the electromagnetic quantum
/// integrand at abscissa x, honouring conductor limits.
fn em_brackets(gap: Permittivity, plate: Permittivity, x: f64) -> (f64, f64) {
    match (gap, plate) {
        (Permittivity::Dielectric(e0), Permittivity::Dielectric(e1)) => {
            let gamma = libm::sqrt(1.0 + (e1 / e0 - 1.0) * x * x);
            let bp = (e0 - e1 * gamma) / (e0 + e1 * gamma);
            let bs = (1.0 - gamma) / (1.0 + gamma);
            (bp * bp, bs * bs)
        }
        // conducting plates: both brackets saturate at (±1)²
        (Permittivity::Dielectric(_), Permittivity::Conductor) => (1.0, 1.0),
        // conducting gap: the p bracket saturates, γ → √(1 − x²)
        (Permittivity::Conductor, Permittivity::Dielectric(_)) => {
            let gamma = libm::sqrt((1.0 - x * x).max(0.0));
            let bs = (1.0 - gamma) / (1.0 + gamma);
            (1.0, bs * bs)
        }
        (Permittivity::Conductor, Permittivity::Conductor) => (0.0, 0.0),
    }
}

/// Electromagnetic quantum-limit energy (static-ε Lifshitz approximation),
/// −(ħc/16π²d³) ∫₀¹ [Li₄(bp²) + Li₄(bs²)] dx, J/m².
///
/// Conducting plates drive both brackets to 1, so the integral tends to
/// 2ζ(4) (the exact perfect-metal −π²ħc/720d³ is not reproduced by this
/// static-ε form).
pub fn e_em_quantum(gap: Permittivity, plate: Permittivity, d: f64) -> Result<f64> {
    let prefactor = -HBAR * C_LIGHT / (16.0 * PI * PI * d * d * d);
    if let (Permittivity::Conductor, Permittivity::Conductor) = (gap, plate) {
        return Ok(0.0);
    }
    if let (Permittivity::Dielectric(_), Permittivity::Conductor) = (gap, plate) {
        return Ok(prefactor * 2.0 * ZETA_4);
    }
    let spec = QuadratureSpec {
        rel_tol: 1e-12,
        ..Default::default()
    };
    let q = integrate(
        |x| {
            let (bp2, bs2) = em_brackets(gap, plate, x);
            polylog(4, bp2).unwrap_or(f64::NAN) + polylog(4, bs2).unwrap_or(f64::NAN)
        },
        Domain::Finite(0.0, 1.0),
        &spec,
    )?;
    if !q.value.is_finite() {
        return Err(Error::Domain("polylog argument escaped [0, 1]"));
    }
    Ok(prefactor * q.value)
}

/// Electromagnetic high-temperature energy −(k_BT/16πd²) Li₃(r_ε²), J/m².
pub fn e_em_thermal(gap: Permittivity, plate: Permittivity, d: f64, t: f64) -> f64 {
    let r = Permittivity::contrast(gap, plate);
    let li3 = polylog(3, r * r).expect("contrast^2 lies in [0, 1]");
    -K_BOLTZMANN * t / (16.0 * PI * d * d) * li3
}

/// The ratio Γ = [((μ₀ − μ₁)/(ε₀ − ε₁)) / ((μ₀ + μ₁)/(ε₀ + ε₁))]².
///
/// Vanishing shear contrast gives 0; vanishing permittivity contrast with a
/// finite shear contrast diverges, reported as `f64::INFINITY`.
pub fn gamma_ratio(
    gap: &ElasticMaterial,
    plate: &ElasticMaterial,
    gap_eps: Permittivity,
    plate_eps: Permittivity,
) -> f64 {
    let r_mu = mu_contrast(gap, plate);
    if r_mu == 0.0 {
        return 0.0;
    }
    let r_eps = Permittivity::contrast(gap_eps, plate_eps);
    if r_eps == 0.0 {
        return f64::INFINITY;
    }
    let ratio = r_mu / r_eps;
    ratio * ratio
}

/// Small-separation estimate of the phononic/electromagnetic energy ratio,
/// (πk_BTd/ħc)·Γ.
pub fn ratio_estimate(gamma: f64, d: f64, t: f64) -> f64 {
    PI * K_BOLTZMANN * t * d / (HBAR * C_LIGHT) * gamma
}

/// Interface Casimir pressure −(k_BT/8πd³) Li₃(r_μ²), Pa. Equals −∂/∂d of
/// [`e_m_thermal`] analytically; always ≤ 0 (attractive).
pub fn casimir_pressure(gap: &ElasticMaterial, plate: &ElasticMaterial, d: f64, t: f64) -> f64 {
    let r = mu_contrast(gap, plate);
    let li3 = polylog(3, r * r).expect("r_mu^2 lies in [0, 1)");
    -K_BOLTZMANN * t / (8.0 * PI * d * d * d) * li3
}

/// Apparent Young's modulus of a thin film of thickness `d`:
/// E_exp = E_bulk − 3 p_C(d) ≥ E_bulk, Pa.
pub fn apparent_young_modulus(
    e_bulk: f64,
    gap: &ElasticMaterial,
    plate: &ElasticMaterial,
    d: f64,
    t: f64,
) -> f64 {
    e_bulk - 3.0 * casimir_pressure(gap, plate, d, t)
}

/// Every closed-form value at one (d, T), as embedded in an energy
/// breakdown. Electromagnetic quantities are `None` when a permittivity is
/// missing from either material record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormSet {
    /// Perfect-reflector energy, J/m².
    pub e_pr: f64,
    /// Dimensionless L/N constant B.
    pub b: f64,
    /// Quantum L/N closed form, J/m² (repulsive; diagnostic only, never
    /// summed into totals).
    pub e_ln_qm: f64,
    /// Thermal L/N closed form, J/m².
    pub e_ln_t: f64,
    /// Quantum SH closed form, J/m².
    pub e_m_qm: f64,
    /// Thermal SH closed form, J/m².
    pub e_m_t: f64,
    /// Electromagnetic quantum energy, J/m².
    pub e_em_qm: Option<f64>,
    /// Electromagnetic thermal energy, J/m².
    pub e_em_t: Option<f64>,
    /// The contrast ratio Γ.
    pub gamma: Option<f64>,
    /// (πk_BTd/ħc)·Γ.
    pub ratio_estimate: Option<f64>,
}

/// Assembles the complete closed-form set for a stack.
pub fn closed_form_set(stack: &LayerStack) -> Result<ClosedFormSet> {
    let gap_speeds = sound_speeds(&stack.gap, stack.mode)?;
    let b = b_constant(&stack.gap, &stack.plate);
    let eps = match (stack.gap.eps0, stack.plate.eps0) {
        (Some(g), Some(p)) => Some((g, p)),
        _ => None,
    };
    let (e_em_qm, e_em_t, gamma, ratio) = match eps {
        Some((g, p)) => {
            let gamma = gamma_ratio(&stack.gap, &stack.plate, g, p);
            (
                Some(e_em_quantum(g, p, stack.d)?),
                Some(e_em_thermal(g, p, stack.d, stack.temperature)),
                Some(gamma),
                Some(ratio_estimate(gamma, stack.d, stack.temperature)),
            )
        }
        None => (None, None, None, None),
    };
    Ok(ClosedFormSet {
        e_pr: e_perfect(&gap_speeds, stack.d),
        b,
        e_ln_qm: e_ln_quantum(&stack.gap, &stack.plate, stack.d, stack.mode)?,
        e_ln_t: e_ln_thermal(&stack.gap, &stack.plate, stack.d, stack.temperature, stack.mode)?,
        e_m_qm: e_m_quantum(&stack.gap, &stack.plate, stack.d)?,
        e_m_t: e_m_thermal(&stack.gap, &stack.plate, stack.d, stack.temperature),
        e_em_qm,
        e_em_t,
        gamma,
        ratio_estimate: ratio,
    })
}
