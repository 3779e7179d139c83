//! Physical constants (CODATA 2018) used throughout the crate.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K.
pub const K_BOLTZMANN: f64 = 1.380_649e-23;

/// Speed of light in vacuum, m/s.
pub const C_LIGHT: f64 = 2.997_924_58e8;

/// Riemann ζ(3).
pub const ZETA_3: f64 = 1.202_056_903_159_594_3;

/// Riemann ζ(4) = π⁴/90.
pub const ZETA_4: f64 = 1.082_323_233_711_138_2;

/// Matsubara angular-frequency spacing 2π k_B T / ħ at temperature `t`, rad/s.
pub fn matsubara_spacing(t: f64) -> f64 {
    2.0 * core::f64::consts::PI * K_BOLTZMANN * t / HBAR
}
