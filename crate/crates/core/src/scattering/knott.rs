//! Closed-form reflection and transmission coefficients (Knott equations)
//! for two isotropic elastic half-spaces in welded contact.
//!
//! The L/N sector shares one denominator Δ; numerators and Δ are polynomials
//! in the axial wavenumbers, k∥ and the Lamé parameters. Two of the
//! published forms of these polynomials circulate with a dropped monomial
//! each (they violate the trivial-interface limit R(α = α) = 0); the forms
//! here were re-derived from the boundary conditions and satisfy the no-slip
//! and stress-continuity residuals to machine precision, which is enforced
//! by the tests in [`super::residual`].
//!
//! All inputs are nondimensionalised before evaluation: wavenumbers by their
//! largest magnitude and moduli by the larger shear modulus. The monomials
//! of Δ span eight powers of wavenumber, so this rescaling keeps every
//! intermediate within a few orders of unity at any (ξ, k∥).

use num_complex::Complex64;

use crate::materials::ElasticMaterial;
use crate::{Error, Result};

use super::SpectralPoint;

/// |Δ| below this fraction of its largest term group flags a surface-mode
/// pole (Rayleigh/Stoneley condition).
const SINGULAR_REL: f64 = 1e-12;

/// The 3×3 reflection and transmission matrices at one spectral point,
/// ordered (L, M, N).
#[derive(Debug, Clone, Copy)]
pub struct ScatteringMatrices<'m> {
    pub r: [[Complex64; 3]; 3],
    pub t: [[Complex64; 3]; 3],
    pub point: SpectralPoint,
    pub media: (&'m ElasticMaterial, &'m ElasticMaterial),
}

impl ScatteringMatrices<'_> {
    /// The coupled 2×2 L/N block of the reflection matrix.
    pub fn r_ln_block(&self) -> [[Complex64; 2]; 2] {
        [
            [self.r[0][0], self.r[0][2]],
            [self.r[2][0], self.r[2][2]],
        ]
    }
}

struct LnSector {
    delta: Complex64,
    largest_group: f64,
    s_rll: Complex64,
    s_rln: Complex64,
    s_rnl: Complex64,
    s_rnn: Complex64,
    s_tll: Complex64,
    s_tln: Complex64,
    s_tnl: Complex64,
    s_tnn: Complex64,
}

/// Evaluates the shared denominator and the eight L/N-sector numerators on
/// already-rescaled inputs.
#[allow(clippy::too_many_arguments)]
fn ln_sector(
    p: f64,
    k_l: Complex64,
    k_n: Complex64,
    q_l: Complex64,
    q_n: Complex64,
    lam_a: f64,
    mu_a: f64,
    lam_b: f64,
    mu_b: f64,
) -> LnSector {
    let p2 = p * p;
    let kl2 = k_l * k_l;
    let kn2 = k_n * k_n;
    let ql2 = q_l * q_l;
    let qn2 = q_n * q_n;
    // squared wavenumber magnitudes ω²/c² per mode and medium
    let m_la2 = p2 + kl2;
    let m_na2 = p2 + kn2;
    let m_lb2 = p2 + ql2;
    let m_nb2 = p2 + qn2;

    // Δ, grouped by modulus structure so a surface-mode pole can be detected
    // as cancellation between groups.
    let d_mumu = 2.0
        * mu_a
        * mu_b
        * ((m_lb2 * m_na2 * k_l * q_n + m_la2 * m_nb2 * k_n * q_l)
            + p2 * (kl2 * (p2 - qn2 + 2.0 * q_l * q_n)
                + k_l * k_n * (2.0 * ql2 + qn2 - p2 - 4.0 * q_l * q_n)
                + q_l * (p2 - kn2) * (q_l - q_n)));
    let d_mua2 = 2.0 * mu_a * mu_a * (k_l * (k_l * (kn2 - p2) + 2.0 * k_n * p2) * (p2 + q_l * q_n));
    let d_mub2 = 2.0 * mu_b * mu_b * (q_l * (q_l * (qn2 - p2) + 2.0 * p2 * q_n) * (p2 + k_l * k_n));
    let d_lamb = lam_b
        * (mu_a * (k_l * q_n * m_na2 + p2 * (p2 + 2.0 * k_l * k_n - kn2))
            + mu_b * (qn2 - p2) * (p2 + k_l * k_n))
        * m_lb2;
    let d_lama = lam_a
        * (mu_b * (k_n * q_l * m_nb2 + p2 * (p2 + 2.0 * q_l * q_n - qn2))
            + mu_a * (kn2 - p2) * (p2 + q_l * q_n))
        * m_la2;
    let delta = d_mumu + d_mua2 + d_mub2 + d_lamb + d_lama;
    let largest_group = [d_mumu, d_mua2, d_mub2, d_lamb, d_lama]
        .iter()
        .map(|g| g.norm())
        .fold(0.0, f64::max);

    let s_rll = -2.0
        * (mu_a
            * mu_b
            * ((m_la2 * m_nb2 * k_n * q_l - m_lb2 * m_na2 * k_l * q_n)
                + p2 * (kl2 * (p2 + 2.0 * q_l * q_n)
                    + k_l * k_n * (p2 + 3.0 * q_l * q_n)
                    - (k_l + k_n) * (k_l * qn2 + k_n * ql2)
                    + q_l * q_n * (kn2 - p2)
                    + p2 * ql2
                    - k_l * k_n * q_l * (q_l - q_n)))
            - mu_a * mu_a * (k_l * (p2 * (k_l + 2.0 * k_n) - k_l * kn2) * (p2 + q_l * q_n))
            + mu_b * mu_b * (q_l * (k_l * k_n - p2) * (p2 * (q_l - 2.0 * q_n) - q_l * qn2)))
        + lam_b
            * (mu_a * (k_l * q_n * m_na2 + p2 * (2.0 * k_l * k_n + kn2 - p2))
                + mu_b * (qn2 - p2) * (k_l * k_n - p2))
            * m_lb2
        - lam_a
            * (mu_b * (k_n * q_l * m_nb2 + p2 * (2.0 * q_l * q_n - qn2 + p2))
                + mu_a * (kn2 - p2) * (q_l * q_n + p2))
            * m_la2;

    let s_rln = (p2 - kn2) * mu_a * (lam_b * m_lb2 + 2.0 * mu_a * (p2 + q_l * q_n))
        + mu_b
            * ((qn2 - p2) * lam_b * m_lb2
                - 2.0 * mu_b * (ql2 * (p2 - qn2) - 2.0 * p2 * q_l * q_n))
        - 2.0 * mu_a * mu_b * (kn2 * q_l * (q_l - q_n) - p2 * (-p2 + ql2 - 3.0 * q_l * q_n + qn2));

    let s_rnl = lam_a * (2.0 * mu_a * (p2 + q_l * q_n) + mu_b * (-p2 - 2.0 * q_l * q_n + qn2))
        * m_la2
        - lam_b * (2.0 * p2 * mu_a + (qn2 - p2) * mu_b) * m_lb2
        + 2.0 * mu_a * mu_b * (2.0 * q_l * q_n * (p2 - kl2) + kl2 * (qn2 - p2) - 2.0 * p2 * ql2)
        + 4.0 * mu_a * mu_a * (kl2 * (p2 + q_l * q_n))
        + 2.0 * mu_b * mu_b * (q_l * (q_l * (p2 - qn2) - 2.0 * p2 * q_n));

    let s_rnn = -2.0
        * (mu_a
            * mu_b
            * ((m_lb2 * m_na2 * k_l * q_n - m_la2 * m_nb2 * k_n * q_l)
                + p2 * (kl2 * (p2 + 2.0 * q_l * q_n - qn2)
                    + k_l * k_n * (p2 - 2.0 * ql2 + 4.0 * q_l * q_n - qn2)
                    + q_l * (p2 - kn2) * (q_l - q_n)))
            + mu_a * mu_a * (k_l * (q_l * q_n + p2) * (k_l * (kn2 - p2) - 2.0 * k_n * p2))
            + mu_b * mu_b * (q_l * (k_l * k_n - p2) * (q_l * (p2 - qn2) - 2.0 * p2 * q_n)))
        - lam_b
            * (mu_a * (k_l * (q_n * m_na2 - 2.0 * k_n * p2) + p2 * (p2 - kn2))
                + mu_b * (p2 - qn2) * (k_l * k_n - p2))
            * m_lb2
        + lam_a
            * (mu_b * (k_n * q_l * m_nb2 + p2 * (qn2 - p2 - 2.0 * q_l * q_n))
                + mu_a * (p2 - kn2) * (q_l * q_n + p2))
            * m_la2;

    let s_tll = 2.0
        * mu_a
        * (k_n * (2.0 * p2 * mu_a + (qn2 - p2) * mu_b) * m_la2
            + q_n * (kl2 * mu_a + p2 * mu_b) * m_na2)
        + lam_a
            * (mu_a * (q_n * m_na2 + 2.0 * k_n * p2) + k_n * (qn2 - p2) * mu_b)
            * m_la2;

    let s_tln = (lam_a + 2.0 * mu_a) * ((kn2 - p2) * mu_a + (p2 - qn2) * mu_b) * m_la2
        + 2.0 * k_l * q_n * mu_a * (mu_b - mu_a) * m_na2;

    let s_tnl = 2.0
        * (k_n * q_l * (lam_a + 2.0 * mu_a) * (mu_b - mu_a) * m_la2
            + mu_a * (kl2 * mu_a - ql2 * mu_b) * m_na2)
        + mu_a * (lam_a * m_la2 - lam_b * m_lb2) * m_na2;

    let s_tnn = q_l * (lam_a + 2.0 * mu_a) * ((kn2 - p2) * mu_a + 2.0 * p2 * mu_b) * m_la2
        + k_l * mu_a * lam_b * m_lb2 * m_na2
        + 2.0 * k_l * mu_a * (p2 * mu_a + ql2 * mu_b) * m_na2;

    LnSector {
        delta,
        largest_group,
        s_rll,
        s_rln,
        s_rnl,
        s_rnn,
        s_tll,
        s_tln,
        s_tnl,
        s_tnn,
    }
}

/// Builds the full 3×3 reflection and transmission matrices at `point`.
///
/// The matrices act on incident amplitude column vectors ordered (L, M, N).
/// ω = 0 is refused: the L/N block has a genuine double pole there (the
/// interface bound state); use [`super::static_mode_limits`] or
/// [`super::bound_state`] instead.
pub fn reflection_transmission<'m>(
    alpha: &'m ElasticMaterial,
    beta: &'m ElasticMaterial,
    point: &SpectralPoint,
) -> Result<ScatteringMatrices<'m>> {
    if point.freq.norm_sqr() == 0.0 {
        return Err(Error::DegeneratePoint);
    }
    // a fictitious interface between elastically identical media scatters
    // nothing; return the exact zeros instead of their rounded cancellation
    if alpha.rho == beta.rho
        && alpha.lambda == beta.lambda
        && alpha.mu == beta.mu
        && point.speeds_alpha.c_l == point.speeds_beta.c_l
        && point.speeds_alpha.c_t == point.speeds_beta.c_t
    {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        return Ok(ScatteringMatrices {
            r: [[zero; 3]; 3],
            t: [[one, zero, zero], [zero, one, zero], [zero, zero, one]],
            point: *point,
            media: (alpha, beta),
        });
    }
    let scale = point
        .k_alpha
        .iter()
        .chain(point.k_beta.iter())
        .map(|k| k.norm())
        .fold(point.k_par, f64::max);
    let mu_scale = alpha.mu.max(beta.mu);
    let p = point.k_par / scale;
    let k_l = point.k_alpha[0] / scale;
    let k_n = point.k_alpha[2] / scale;
    let q_l = point.k_beta[0] / scale;
    let q_n = point.k_beta[2] / scale;
    let lam_a = alpha.lambda / mu_scale;
    let mu_a = alpha.mu / mu_scale;
    let lam_b = beta.lambda / mu_scale;
    let mu_b = beta.mu / mu_scale;

    let s = ln_sector(p, k_l, k_n, q_l, q_n, lam_a, mu_a, lam_b, mu_b);
    if s.delta.norm() < SINGULAR_REL * s.largest_group {
        return Err(Error::SingularDenominator {
            delta: s.delta.norm(),
            largest_term: s.largest_group,
        });
    }

    let ca = point.speeds_alpha;
    let cb = point.speeds_beta;
    let i = Complex64::I;
    let r_ll = s.s_rll / s.delta;
    let r_ln = -(2.0 * i * ca.c_t * k_n * p / ca.c_l) * s.s_rln / s.delta;
    let r_nl = (2.0 * i * ca.c_l * k_l * p / ca.c_t) * s.s_rnl / s.delta;
    let r_nn = s.s_rnn / s.delta;
    let t_ll = (2.0 * ca.c_l / cb.c_l) * k_l * s.s_tll / s.delta;
    let t_ln = (2.0 * i * ca.c_t * k_n * p / cb.c_l) * s.s_tln / s.delta;
    let t_nl = (2.0 * i * ca.c_l * k_l * p / cb.c_t) * s.s_tnl / s.delta;
    let t_nn = (2.0 * ca.c_t / cb.c_t) * k_n * s.s_tnn / s.delta;

    // decoupled SH channel
    let k_m = k_n;
    let q_m = q_n;
    let denom_m = mu_a * k_m + mu_b * q_m;
    let r_mm = (mu_a * k_m - mu_b * q_m) / denom_m;
    let t_mm = 2.0 * mu_a * k_m / denom_m;

    let zero = Complex64::new(0.0, 0.0);
    Ok(ScatteringMatrices {
        r: [[r_ll, zero, r_ln], [zero, r_mm, zero], [r_nl, zero, r_nn]],
        t: [[t_ll, zero, t_ln], [zero, t_mm, zero], [t_nl, zero, t_nn]],
        point: *point,
        media: (alpha, beta),
    })
}

/// SH reflection coefficient at imaginary frequency ω = iξ, evaluated in
/// real arithmetic: R_MM = (μ_α κ_α − μ_β κ_β)/(μ_α κ_α + μ_β κ_β) with
/// κ = √(ξ²/c_t² + k∥²).
///
/// This is the algebraic specialisation of the full matrix entry and is used
/// on the hot paths of the M-channel energies; equality with the complex
/// route is pinned by tests.
pub fn r_mm_imaginary(
    xi: f64,
    k_par: f64,
    mu_alpha: f64,
    c_t_alpha: f64,
    mu_beta: f64,
    c_t_beta: f64,
) -> f64 {
    let ka = libm::sqrt(xi * xi / (c_t_alpha * c_t_alpha) + k_par * k_par);
    let kb = libm::sqrt(xi * xi / (c_t_beta * c_t_beta) + k_par * k_par);
    (mu_alpha * ka - mu_beta * kb) / (mu_alpha * ka + mu_beta * kb)
}
