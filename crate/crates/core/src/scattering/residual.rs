//! Boundary-condition residuals: the independent correctness oracle for the
//! closed-form scattering coefficients.
//!
//! Given an incident wave and the matrices produced by
//! [`super::reflection_transmission`], the full displacement and traction
//! fields of both media are reconstructed from the explicit polarization
//! vectors and compared at the interface. The no-slip condition equates the
//! velocity (∂_t u, i.e. −iωu) on both sides; stress continuity equates the
//! traction σ·ẑ. Nothing in this reconstruction reuses the coefficient
//! algebra, so agreement pins the coefficients themselves.

use num_complex::Complex64;

use crate::{Error, Result};

use super::{ScatteringMatrices, SpectralPoint};

/// An incident wave with amplitudes on the (L, M, N) polarizations.
#[derive(Debug, Clone, Copy)]
pub struct IncidentWave {
    pub amplitudes: [Complex64; 3],
    pub point: SpectralPoint,
}

impl IncidentWave {
    pub fn new(amplitudes: [Complex64; 3], point: SpectralPoint) -> Self {
        IncidentWave { amplitudes, point }
    }
}

/// Polarization vector of one plane-wave mode at the interface, with k∥
/// taken along x. `m` is the wavenumber magnitude ω/c of the mode.
fn polarization(mode: usize, k_par: f64, kz: Complex64, m: f64) -> [Complex64; 3] {
    let i = Complex64::I;
    match mode {
        // L = (i/m)(k∥, 0, kz)
        0 => [i * k_par / m, Complex64::new(0.0, 0.0), i * kz / m],
        // M = (0, -i, 0)
        1 => [Complex64::new(0.0, 0.0), -i, Complex64::new(0.0, 0.0)],
        // N = (-kz/m, 0, k∥/m)
        _ => [-kz / m, Complex64::new(0.0, 0.0), Complex64::new(k_par / m, 0.0)],
    }
}

/// Traction vector σ·ẑ of one mode: iλ(k·V)ẑ + iμ(k_z V + V_z k).
fn traction(lambda: f64, mu: f64, k_par: f64, kz: Complex64, v: &[Complex64; 3]) -> [Complex64; 3] {
    let i = Complex64::I;
    let k_dot_v = k_par * v[0] + kz * v[2];
    [
        i * mu * (k_par * v[2] + kz * v[0]),
        i * mu * (kz * v[1]),
        i * lambda * k_dot_v + 2.0 * i * mu * kz * v[2],
    ]
}

fn norm3(v: &[Complex64; 3]) -> f64 {
    libm::sqrt(v.iter().map(|c| c.norm_sqr()).sum())
}

/// Evaluates the no-slip and stress-continuity residuals at the interface
/// for `inc` scattered by `sm`, as relative norms
/// ‖LHS − RHS‖ / max(‖LHS‖, ‖RHS‖, floor).
///
/// The point must sit at real frequency (the residual is the propagating-wave
/// oracle; evanescent beyond-critical-angle points are fine). Residuals above
/// tolerance indicate a defective coefficient, not an operation error.
pub fn boundary_residual(inc: &IncidentWave, sm: &ScatteringMatrices) -> Result<(f64, f64)> {
    let point = &inc.point;
    if point.freq.im != 0.0 || !(point.freq.re > 0.0) {
        return Err(Error::InvalidParameter(
            "boundary_residual requires a real positive frequency",
        ));
    }
    let w = point.freq.re;
    let (alpha, beta) = sm.media;
    let sa = point.speeds_alpha;
    let sb = point.speeds_beta;
    let p = point.k_par;

    let mut refl = [Complex64::new(0.0, 0.0); 3];
    let mut trans = [Complex64::new(0.0, 0.0); 3];
    for row in 0..3 {
        for col in 0..3 {
            refl[row] += sm.r[row][col] * inc.amplitudes[col];
            trans[row] += sm.t[row][col] * inc.amplitudes[col];
        }
    }

    let m_of = |speeds: crate::materials::SoundSpeeds, mode: usize| match mode {
        0 => w / speeds.c_l,
        _ => w / speeds.c_t,
    };

    let mut u_alpha = [Complex64::new(0.0, 0.0); 3];
    let mut t_alpha = [Complex64::new(0.0, 0.0); 3];
    for mode in 0..3 {
        let m = m_of(sa, mode);
        // incident: +k_z, reflected: -k_z
        for (amp, kz) in [
            (inc.amplitudes[mode], point.k_alpha[mode]),
            (refl[mode], -point.k_alpha[mode]),
        ] {
            let v = polarization(mode, p, kz, m);
            let t = traction(alpha.lambda, alpha.mu, p, kz, &v);
            for j in 0..3 {
                u_alpha[j] += amp * v[j];
                t_alpha[j] += amp * t[j];
            }
        }
    }

    let mut u_beta = [Complex64::new(0.0, 0.0); 3];
    let mut t_beta = [Complex64::new(0.0, 0.0); 3];
    for mode in 0..3 {
        let m = m_of(sb, mode);
        let kz = point.k_beta[mode];
        let v = polarization(mode, p, kz, m);
        let t = traction(beta.lambda, beta.mu, p, kz, &v);
        for j in 0..3 {
            u_beta[j] += trans[mode] * v[j];
            t_beta[j] += trans[mode] * t[j];
        }
    }

    let rel = |lhs: &[Complex64; 3], rhs: &[Complex64; 3]| {
        let mut diff = [Complex64::new(0.0, 0.0); 3];
        for j in 0..3 {
            diff[j] = lhs[j] - rhs[j];
        }
        norm3(&diff) / norm3(lhs).max(norm3(rhs)).max(f64::MIN_POSITIVE)
    };
    Ok((rel(&u_alpha, &u_beta), rel(&t_alpha, &t_beta)))
}
