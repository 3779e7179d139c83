//! Lifshitz-type evaluators for the phonon-mediated free energy per unit
//! area of two identical plates separated by an elastic gap layer.
//!
//! The reflection matrix block structure factorises the energy into a
//! decoupled SH channel and a coupled L/N channel,
//! `E_total = E_M + E_LN`. The M channel carries the n = 0 Matsubara mode at
//! half weight; the L/N sum starts at n = 1 because its ω → 0 limit is the
//! distance-independent interface bound state, which is removed by the
//! energy regularization. At T = 0 (or whenever the Matsubara spacing is so
//! fine that the sum would need more than [`TERM_GUARD`] terms) the sum is
//! replaced by the corresponding frequency integral.

use num_complex::Complex64;

use crate::closedforms::{self, ClosedFormSet};
use crate::constants::{matsubara_spacing, HBAR, K_BOLTZMANN};
use crate::materials::{sound_speeds, ElasticMaterial, SoundSpeeds, SpeedConvention};
use crate::numerics::{
    det2, det3, integrate, matsubara_sum, Domain, QuadratureSpec, SumSpec, ZeroModeWeight,
};
use crate::scattering::{axial_wavenumbers, reflection_transmission, SpectralPoint};
use crate::{Error, Result};

use core::cell::RefCell;
use core::f64::consts::PI;

/// Predicted Matsubara term count beyond which evaluators switch to the
/// T = 0 integral form.
pub const TERM_GUARD: u32 = 2_000_000;

/// Relative imaginary part allowed on quantities that are analytically real
/// at imaginary frequency.
const IMAG_TOL: f64 = 1e-10;

/// Absolute quadrature floor for the nondimensionalised integrands (all of
/// order unity near the origin). Without it, the far translation-suppressed
/// tail — where 1 − r²e^{−2κd} rounds to exactly 1 and the integrand value
/// sits below machine precision — can never meet a purely relative
/// tolerance.
const ABS_FLOOR: f64 = 1e-16;

/// A full problem instance: two identical plates (material 1) separated by a
/// gap layer (material 0) of thickness `d` at temperature `t`.
#[derive(Debug, Clone)]
pub struct LayerStack {
    pub plate: ElasticMaterial,
    pub gap: ElasticMaterial,
    /// Separation, m.
    pub d: f64,
    /// Temperature, K.
    pub temperature: f64,
    pub mode: SpeedConvention,
}

impl LayerStack {
    pub fn new(
        plate: ElasticMaterial,
        gap: ElasticMaterial,
        d: f64,
        temperature: f64,
        mode: SpeedConvention,
    ) -> Result<Self> {
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::InvalidParameter("separation d must be positive"));
        }
        if !(temperature >= 0.0) || !temperature.is_finite() {
            return Err(Error::InvalidParameter("temperature must be >= 0"));
        }
        plate.validate()?;
        gap.validate()?;
        // fail early when the c11 convention lacks data
        sound_speeds(&plate, mode)?;
        sound_speeds(&gap, mode)?;
        Ok(LayerStack {
            plate,
            gap,
            d,
            temperature,
            mode,
        })
    }

    pub fn gap_speeds(&self) -> SoundSpeeds {
        sound_speeds(&self.gap, self.mode).expect("validated at construction")
    }

    pub fn plate_speeds(&self) -> SoundSpeeds {
        sound_speeds(&self.plate, self.mode).expect("validated at construction")
    }
}

/// Diagonal translation factors e^{−dκ_P} transporting imaginary-frequency
/// modes across the gap, ordered (L, M, N).
#[derive(Debug, Clone, Copy)]
pub struct TranslationMatrix {
    pub entries: [f64; 3],
    pub point: SpectralPoint,
}

/// Builds the translation matrix for `point` across a gap of width `d`.
///
/// Entries are e^{−d √(ξ²/c_P² + k∥²)} ∈ (0, 1]; the M and N entries are
/// equal in an isotropic gap.
pub fn translation(
    point: &SpectralPoint,
    gap: &ElasticMaterial,
    d: f64,
) -> Result<TranslationMatrix> {
    if !point.is_imaginary_frequency() {
        return Err(Error::InvalidParameter(
            "translation requires an imaginary-frequency point",
        ));
    }
    if !(d >= 0.0) {
        return Err(Error::InvalidParameter("translation requires d >= 0"));
    }
    let speeds = sound_speeds(gap, point.speeds_alpha.mode)?;
    let xi = point.xi();
    let kappa = |c: f64| libm::sqrt(xi * xi / (c * c) + point.k_par * point.k_par);
    let kl = kappa(speeds.c_l);
    let kt = kappa(speeds.c_t);
    Ok(TranslationMatrix {
        entries: [libm::exp(-d * kl), libm::exp(-d * kt), libm::exp(-d * kt)],
        point: *point,
    })
}

fn real_checked(z: Complex64, scale: f64) -> Result<f64> {
    if z.im.abs() > IMAG_TOL * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::ImaginaryResidue {
            relative: z.im.abs() / scale.max(f64::MIN_POSITIVE),
        });
    }
    Ok(z.re)
}

/// One round trip inside the gap: N = (R·U)² with R the gap→plate reflection
/// matrix and U the translation matrix, as a real 3×3 matrix.
pub fn round_trip(stack: &LayerStack, point: &SpectralPoint) -> Result<[[f64; 3]; 3]> {
    let sm = reflection_transmission(&stack.gap, &stack.plate, point)?;
    let u = translation(point, &stack.gap, stack.d)?;
    let scale = sm
        .r
        .iter()
        .flatten()
        .map(|e| e.norm())
        .fold(0.0, f64::max);
    let mut r = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] = real_checked(sm.r[i][j], scale)?;
        }
    }
    // B = R·U, N = B²
    let mut b = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            b[i][j] = r[i][j] * u.entries[j];
        }
    }
    let mut n = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            n[i][j] = (0..3).map(|k| b[i][k] * b[k][j]).sum();
        }
    }
    Ok(n)
}

/// Scaled integrand shared by every M-channel integral:
/// u · ln(1 − r² e^{−2√(u² + v²)}) with u = k∥ d and v = ξ d / c_{t,gap}.
fn m_integrand(u: f64, v: f64, mu0: f64, mu1: f64, ct_ratio2: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    let kappa0 = libm::sqrt(u * u + v * v);
    let kappa1 = libm::sqrt(u * u + v * v * ct_ratio2);
    let r = (mu0 * kappa0 - mu1 * kappa1) / (mu0 * kappa0 + mu1 * kappa1);
    let ring = r * r * libm::exp(-2.0 * kappa0);
    // log1p keeps full relative precision deep in the suppressed tail
    u * libm::log1p(-ring)
}

struct ChannelDetail {
    value: f64,
    terms: u32,
    error: f64,
    quantum_path: bool,
}

fn predicted_terms(stack: &LayerStack, rel_tol: f64) -> u64 {
    if stack.temperature == 0.0 {
        return u64::MAX;
    }
    let ct = stack.gap_speeds().c_t;
    let n = libm::log(1.0 / rel_tol) * ct * HBAR
        / (4.0 * PI * K_BOLTZMANN * stack.temperature * stack.d);
    if n >= u64::MAX as f64 {
        u64::MAX
    } else {
        n as u64 + 1
    }
}

fn energy_m_detail(stack: &LayerStack) -> Result<ChannelDetail> {
    let sum_spec = SumSpec::default();
    if predicted_terms(stack, sum_spec.rel_tol) > TERM_GUARD as u64 {
        return energy_m_quantum_detail(stack);
    }
    let s0 = stack.gap_speeds();
    let s1 = stack.plate_speeds();
    let ct_ratio2 = (s0.c_t / s1.c_t) * (s0.c_t / s1.c_t);
    let mu0 = stack.gap.mu;
    let mu1 = stack.plate.mu;
    let spacing = matsubara_spacing(stack.temperature);
    let d = stack.d;
    let quad_spec = QuadratureSpec {
        rel_tol: 1e-10,
        abs_floor: ABS_FLOOR,
        ..Default::default()
    };
    let quad_error = RefCell::new(0.0f64);
    let term = |n: u32| -> Result<f64> {
        let v = spacing * n as f64 * d / s0.c_t;
        let q = integrate(
            |u| m_integrand(u, v, mu0, mu1, ct_ratio2),
            Domain::SemiInfinite,
            &quad_spec,
        )?;
        *quad_error.borrow_mut() += q.error;
        Ok(q.value / (2.0 * PI * d * d))
    };
    let sum = matsubara_sum(term, ZeroModeWeight::Half, &sum_spec)?;
    let kt = K_BOLTZMANN * stack.temperature;
    let error = kt * quad_error.into_inner();
    Ok(ChannelDetail {
        value: kt * sum.value,
        terms: sum.terms_used,
        error,
        quantum_path: false,
    })
}

fn energy_m_quantum_detail(stack: &LayerStack) -> Result<ChannelDetail> {
    let s0 = stack.gap_speeds();
    let s1 = stack.plate_speeds();
    let ct_ratio2 = (s0.c_t / s1.c_t) * (s0.c_t / s1.c_t);
    let mu0 = stack.gap.mu;
    let mu1 = stack.plate.mu;
    let inner_spec = QuadratureSpec {
        rel_tol: 1e-11,
        abs_floor: ABS_FLOOR,
        ..Default::default()
    };
    let outer_spec = QuadratureSpec {
        rel_tol: 1e-9,
        abs_floor: ABS_FLOOR,
        ..Default::default()
    };
    let inner_failure = RefCell::new(None::<Error>);
    let outer = integrate(
        |v| {
            match integrate(
                |u| m_integrand(u, v, mu0, mu1, ct_ratio2),
                Domain::SemiInfinite,
                &inner_spec,
            ) {
                Ok(q) => q.value,
                Err(e) => {
                    *inner_failure.borrow_mut() = Some(e);
                    0.0
                }
            }
        },
        Domain::SemiInfinite,
        &outer_spec,
    )?;
    if let Some(e) = inner_failure.into_inner() {
        return Err(e);
    }
    let prefactor = HBAR * s0.c_t / (4.0 * PI * PI * stack.d * stack.d * stack.d);
    Ok(ChannelDetail {
        value: prefactor * outer.value,
        terms: 0,
        error: prefactor * outer.error,
        quantum_path: true,
    })
}

/// SH-channel free energy per unit area, J/m².
///
/// `k_B T Σ'_n (1/2π) ∫ k∥ ln(1 − R_MM² e^{−2dκ_M}) dk∥`, with the n = 0
/// mode at half weight. Always ≤ 0. Dispatches to the quantum integral at
/// T = 0 and under the low-temperature term guard.
pub fn energy_m(stack: &LayerStack) -> Result<f64> {
    energy_m_detail(stack).map(|d| d.value)
}

/// SH-channel energy in the quantum (T = 0) limit: the Matsubara sum becomes
/// `(ħ/2π) ∫ dξ`. Ignores `stack.temperature`.
pub fn energy_m_quantum(stack: &LayerStack) -> Result<f64> {
    energy_m_quantum_detail(stack).map(|d| d.value)
}

/// `(det(1 − N_LN), s)` with det = 1 + s at one evaluation point; the split
/// form keeps full precision deep in the translation-suppressed tail.
fn ln_block_det(stack: &LayerStack, xi: f64, k_par: f64) -> Result<(f64, f64)> {
    let point = axial_wavenumbers(
        Complex64::new(0.0, xi),
        k_par,
        &stack.gap,
        &stack.plate,
        stack.mode,
    )?;
    let sm = reflection_transmission(&stack.gap, &stack.plate, &point)?;
    let block = sm.r_ln_block();
    let scale = block.iter().flatten().map(|e| e.norm()).fold(0.0, f64::max);
    let r11 = real_checked(block[0][0], scale)?;
    let r12 = real_checked(block[0][1], scale)?;
    let r21 = real_checked(block[1][0], scale)?;
    let r22 = real_checked(block[1][1], scale)?;
    let u_l = libm::exp(-stack.d * point.k_alpha[0].im);
    let u_n = libm::exp(-stack.d * point.k_alpha[2].im);
    // B = R_LN · diag(u_L, u_N); N = B²
    let b = [[r11 * u_l, r12 * u_n], [r21 * u_l, r22 * u_n]];
    let n11 = b[0][0] * b[0][0] + b[0][1] * b[1][0];
    let n12 = b[0][0] * b[0][1] + b[0][1] * b[1][1];
    let n21 = b[1][0] * b[0][0] + b[1][1] * b[1][0];
    let n22 = b[1][0] * b[0][1] + b[1][1] * b[1][1];
    let s = (n11 * n22 - n12 * n21) - (n11 + n22);
    Ok((1.0 + s, s))
}

/// Re ln det(1 − N_LN): ln of the determinant magnitude (the determinant
/// turns negative where the bound-state pole dominates the round trip).
fn ln_det_ln_block(stack: &LayerStack, xi: f64, k_par: f64) -> Result<f64> {
    let (det, s) = ln_block_det(stack, xi, k_par)?;
    if det == 0.0 {
        return Err(Error::SingularDenominator {
            delta: 0.0,
            largest_term: 1.0,
        });
    }
    Ok(if det > 0.0 {
        libm::log1p(s)
    } else {
        libm::log(-det)
    })
}

/// Below ξ d / c_t = V_SWITCH the L/N round trip is evaluated through its
/// bound-state pole form. In that regime the shared denominator Δ ~ ξ²
/// cancels to rounding noise in f64 and the full coefficients lose the
/// determinant entirely, while the pole form is exact up to relative
/// corrections of order (ξ/c k∥)².
const LN_POLE_SWITCH: f64 = 0.05;

/// Zeros of `f` along the scaled transverse coordinate u. Where the
/// round-trip determinant dips negative, ln|det| has integrable logarithmic
/// spikes; the quadrature is split at these points.
fn sign_crossings<F>(mut f: F) -> Result<alloc::vec::Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut crossings = alloc::vec::Vec::new();
    // geometric scan; beyond u ≈ 2000 the translation factor has long since
    // crushed the round trip for any representable ξ
    let mut u_prev = 1.0e-6;
    let mut f_prev = f(u_prev)?;
    let step = libm::exp(0.2);
    let mut u = u_prev * step;
    while u < 2.0e3 {
        let fu = f(u)?;
        if (f_prev < 0.0) != (fu < 0.0) {
            // bisect the bracket to machine resolution
            let (mut lo, mut hi, mut f_lo) = (u_prev, u, f_prev);
            for _ in 0..90 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let f_mid = f(mid)?;
                if (f_lo < 0.0) != (f_mid < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            crossings.push(0.5 * (lo + hi));
        }
        u_prev = u;
        f_prev = fu;
        u *= step;
    }
    Ok(crossings)
}

/// Integrates u·lndet(u) over [0, ∞) split at the determinant zeros.
fn split_integrate<G, F>(det_sign: G, lndet: F, spec: &QuadratureSpec) -> Result<(f64, f64)>
where
    G: FnMut(f64) -> Result<f64>,
    F: Fn(f64) -> Result<f64>,
{
    let crossings = sign_crossings(det_sign)?;
    let failure = RefCell::new(None::<Error>);
    let integrand = |u: f64| {
        if u <= 0.0 || failure.borrow().is_some() {
            return 0.0;
        }
        match lndet(u) {
            Ok(v) => u * v,
            Err(e) => {
                *failure.borrow_mut() = Some(e);
                0.0
            }
        }
    };
    let mut value = 0.0;
    let mut error = 0.0;
    let mut lo = 0.0;
    for &c in &crossings {
        let q = integrate(integrand, Domain::Finite(lo, c), spec)?;
        value += q.value;
        error += q.error;
        lo = c;
    }
    // remaining tail [lo, ∞), mapped back onto the half line
    let q = integrate(|w| integrand(lo + w), Domain::SemiInfinite, spec)?;
    value += q.value;
    error += q.error;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok((value, error))
}

/// Per-stack context for the L/N channel integrals: gap speeds and the
/// extracted bound-state pole scalar.
struct LnChannel<'a> {
    stack: &'a LayerStack,
    c_l0: f64,
    c_t0: f64,
    /// b_eff in R_LN(ω) → (c_{L,0}k∥/ω)² b_eff [[1, −c_t/c_l], [−c_l/c_t, 1]],
    /// Richardson-extrapolated from the full coefficients at the active
    /// speed convention.
    b_eff: f64,
}

impl<'a> LnChannel<'a> {
    fn new(stack: &'a LayerStack) -> Result<Self> {
        let s0 = stack.gap_speeds();
        let k_probe = 1.0 / stack.d;
        let b_at = |v: f64| -> Result<f64> {
            let xi = v * s0.c_l * k_probe;
            let point = axial_wavenumbers(
                Complex64::new(0.0, xi),
                k_probe,
                &stack.gap,
                &stack.plate,
                stack.mode,
            )?;
            let sm = reflection_transmission(&stack.gap, &stack.plate, &point)?;
            // R_LL ≈ −(c_L k∥/ξ)² b_eff at small ξ
            let ratio = xi / (s0.c_l * k_probe);
            Ok(-sm.r[0][0].re * ratio * ratio)
        };
        let coarse = b_at(0.05)?;
        let fine = b_at(0.025)?;
        Ok(LnChannel {
            stack,
            c_l0: s0.c_l,
            c_t0: s0.c_t,
            // O(ξ²) Richardson step
            b_eff: (4.0 * fine - coarse) / 3.0,
        })
    }

    /// det(1 − N_LN) in the pole form, as a function of u = k∥ d at fixed
    /// v = ξ d / c_t0. The rank-1 pole matrix makes det N vanish, leaving
    /// det = 1 − b_eff² (c_l u / (c_t v))⁴ (e^{−dκ_L} + e^{−dκ_N})².
    fn pole_det(&self, v: f64, u: f64) -> f64 {
        let ratio = self.c_l0 / self.c_t0 * u / v;
        let beta2 = self.b_eff * self.b_eff * ratio * ratio * ratio * ratio;
        let kappa_l = libm::sqrt(u * u + v * v * (self.c_t0 / self.c_l0) * (self.c_t0 / self.c_l0));
        let kappa_n = libm::sqrt(u * u + v * v);
        let envelope = libm::exp(-kappa_l) + libm::exp(-kappa_n);
        -beta2 * envelope * envelope
        // returned as s with det = 1 + s
    }

    fn pole_lndet(&self, v: f64, u: f64) -> f64 {
        let s = self.pole_det(v, u);
        let det = 1.0 + s;
        if det > 0.0 {
            libm::log1p(s)
        } else {
            libm::log(-det)
        }
    }

    /// (1/2π)∫ k∥ Re ln det(1 − N_LN) dk∥ at one ξ, with its error estimate.
    fn inner_integral(&self, xi: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
        let d = self.stack.d;
        let v = xi * d / self.c_t0;
        let (value, error) = if v < LN_POLE_SWITCH {
            split_integrate(
                |u| Ok(1.0 + self.pole_det(v, u)),
                |u| Ok(self.pole_lndet(v, u)),
                spec,
            )?
        } else {
            split_integrate(
                |u| Ok(ln_block_det(self.stack, xi, u / d)?.0),
                |u| ln_det_ln_block(self.stack, xi, u / d),
                spec,
            )?
        };
        let norm = 2.0 * PI * d * d;
        Ok((value / norm, error / norm))
    }
}

fn energy_ln_quantum_detail(stack: &LayerStack) -> Result<ChannelDetail> {
    let channel = LnChannel::new(stack)?;
    // the ξ integrand carries integrable log spikes at the round-trip
    // determinant zeros and a (ln ξ)² growth towards ξ → 0; this is a
    // diagnostic limit, evaluated to a few digits rather than the thermal
    // path's full precision
    let inner_spec = QuadratureSpec {
        rel_tol: 1e-6,
        abs_floor: 1e-10,
        ..Default::default()
    };
    let outer_spec = QuadratureSpec {
        rel_tol: 1e-5,
        abs_floor: 1e-10,
        ..Default::default()
    };
    let failure = RefCell::new(None::<Error>);
    let d = stack.d;
    let outer = integrate(
        |v| {
            // the remaining measure below v = 1e-30 contributes O(v ln²v)
            if v < 1.0e-30 {
                return 0.0;
            }
            if failure.borrow().is_some() {
                return 0.0;
            }
            let xi = v * channel.c_t0 / d;
            match channel.inner_integral(xi, &inner_spec) {
                Ok((val, _)) => val,
                Err(e) => {
                    *failure.borrow_mut() = Some(e);
                    0.0
                }
            }
        },
        Domain::SemiInfinite,
        &outer_spec,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let prefactor = HBAR * channel.c_t0 / (2.0 * PI * d);
    Ok(ChannelDetail {
        value: prefactor * outer.value,
        terms: 0,
        error: prefactor * outer.error,
        quantum_path: true,
    })
}

fn energy_ln_detail(stack: &LayerStack) -> Result<ChannelDetail> {
    if stack.temperature == 0.0 {
        return Err(Error::TemperatureRequired);
    }
    let sum_spec = SumSpec::default();
    if predicted_terms(stack, sum_spec.rel_tol) > TERM_GUARD as u64 {
        return energy_ln_quantum_detail(stack);
    }
    let channel = LnChannel::new(stack)?;
    let spacing = matsubara_spacing(stack.temperature);
    // the attainable relative precision of the L/N integrand is capped near
    // the determinant zeros by (k∥/ξ)⁴-amplified rounding of the shared
    // denominator; 1e-6 sits above that floor across the full (ξ, k∥) range
    let quad_spec = QuadratureSpec {
        rel_tol: 1e-6,
        abs_floor: 1e-10,
        ..Default::default()
    };
    let quad_error = RefCell::new(0.0f64);
    let term = |n: u32| {
        let (value, error) = channel.inner_integral(spacing * n as f64, &quad_spec)?;
        *quad_error.borrow_mut() += error;
        Ok(value)
    };
    let sum = matsubara_sum(term, ZeroModeWeight::Excluded, &sum_spec)?;
    let kt = K_BOLTZMANN * stack.temperature;
    let error = kt * quad_error.into_inner();
    Ok(ChannelDetail {
        value: kt * sum.value,
        terms: sum.terms_used,
        error,
        quantum_path: false,
    })
}

/// Coupled L/N-channel free energy per unit area, J/m².
///
/// `k_B T Σ_{n≥1} (1/2π) ∫ k∥ Re ln det(1 − N_LN) dk∥` with
/// N_LN = (R_LN U_LN)², U_LN = diag(e^{−dκ_L}, e^{−dκ_N}). The n = 0 mode is
/// excluded (interface bound state). Requires T > 0; under the
/// low-temperature guard the sum becomes the ξ integral.
pub fn energy_ln(stack: &LayerStack) -> Result<f64> {
    energy_ln_detail(stack).map(|d| d.value)
}

/// Phonon energy between perfect reflectors (R = 1) across a gap of the
/// given material, evaluated numerically channel by channel; equals
/// −π²ħ(c_ℓ + 2c_t)/(1440 d³).
pub fn energy_perfect_reflector(gap: &ElasticMaterial, d: f64, mode: SpeedConvention) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::InvalidParameter("d must be positive"));
    }
    let speeds = sound_speeds(gap, mode)?;
    let channel = |c: f64| -> Result<f64> {
        let inner_spec = QuadratureSpec {
            rel_tol: 1e-11,
            abs_floor: ABS_FLOOR,
            ..Default::default()
        };
        let outer_spec = QuadratureSpec {
            rel_tol: 1e-9,
            abs_floor: ABS_FLOOR,
            ..Default::default()
        };
        let failure = RefCell::new(None::<Error>);
        let outer = integrate(
            |v: f64| {
                match integrate(
                    |u: f64| {
                        if u <= 0.0 {
                            return 0.0;
                        }
                        let kappa = libm::sqrt(u * u + v * v);
                        let ring = libm::exp(-2.0 * kappa);
                        if ring >= 1.0 {
                            return 0.0;
                        }
                        u * libm::log1p(-ring)
                    },
                    Domain::SemiInfinite,
                    &inner_spec,
                ) {
                    Ok(q) => q.value,
                    Err(e) => {
                        *failure.borrow_mut() = Some(e);
                        0.0
                    }
                }
            },
            Domain::SemiInfinite,
            &outer_spec,
        )?;
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        Ok(HBAR * c / (4.0 * PI * PI * d * d * d) * outer.value)
    };
    Ok(channel(speeds.c_l)? + 2.0 * channel(speeds.c_t)?)
}

/// The assembled energies of one stack together with the closed-form
/// asymptotics evaluated at the same (d, T).
#[derive(Debug, Clone)]
pub struct EnergyBreakdown {
    /// SH-channel energy, J/m².
    pub e_m: f64,
    /// Coupled L/N-channel energy, J/m². Zero at exactly T = 0 where the
    /// channel is removed by the regularization.
    pub e_ln: f64,
    /// e_m + e_ln, exactly as summed.
    pub e_total: f64,
    /// Matsubara terms evaluated per channel (0 on the integral path).
    pub m_terms: u32,
    pub ln_terms: u32,
    /// Accumulated quadrature error estimates, J/m².
    pub m_error: f64,
    pub ln_error: f64,
    /// Whether the channel took the T = 0 integral form.
    pub m_quantum_path: bool,
    pub ln_quantum_path: bool,
    pub asymptotics: ClosedFormSet,
}

/// Evaluates both channels and the full closed-form set for `stack`.
pub fn energy_total(stack: &LayerStack) -> Result<EnergyBreakdown> {
    let m = energy_m_detail(stack)?;
    let ln = if stack.temperature == 0.0 {
        ChannelDetail {
            value: 0.0,
            terms: 0,
            error: 0.0,
            quantum_path: false,
        }
    } else {
        energy_ln_detail(stack)?
    };
    let asymptotics = closedforms::closed_form_set(stack)?;
    Ok(EnergyBreakdown {
        e_m: m.value,
        e_ln: ln.value,
        e_total: m.value + ln.value,
        m_terms: m.terms,
        ln_terms: ln.terms,
        m_error: m.error,
        ln_error: ln.error,
        m_quantum_path: m.quantum_path,
        ln_quantum_path: ln.quantum_path,
        asymptotics,
    })
}

/// det(1 − N) of the full 3×3 round trip, both directly and through the
/// block factorisation (1 − N_MM)·det(1 − N_LN); exposed for consistency
/// tests and the `--check` pipeline.
pub fn round_trip_det_routes(stack: &LayerStack, point: &SpectralPoint) -> Result<(f64, f64)> {
    let n = round_trip(stack, point)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let full = det3(&[
        [c(1.0 - n[0][0]), c(-n[0][1]), c(-n[0][2])],
        [c(-n[1][0]), c(1.0 - n[1][1]), c(-n[1][2])],
        [c(-n[2][0]), c(-n[2][1]), c(1.0 - n[2][2])],
    ])
    .re;
    let block = (1.0 - n[1][1])
        * det2(&[
            [c(1.0 - n[0][0]), c(-n[0][2])],
            [c(-n[2][0]), c(1.0 - n[2][2])],
        ])
        .re;
    Ok((full, block))
}
