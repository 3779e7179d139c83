//! Phonon-mediated Casimir interactions between planar elastic substrates.
//!
//! Two thick plates (material 1) separated by an elastic gap layer
//! (material 0) of thickness `d` exchange acoustic phonons. The resulting
//! fluctuation-induced free energy per unit area is evaluated with a
//! Lifshitz-type formula: a Matsubara sum and transverse-wavenumber integral
//! of `ln det(1 - N)`, where `N` is the round-trip matrix built from
//! elastodynamic reflection matrices and exponential translation factors.
//!
//! The crate is organised around that pipeline:
//!
//! * [`materials`] — isotropic elastic/dielectric material records, derived
//!   sound speeds and the built-in reference table.
//! * [`scattering`] — 3×3 reflection/transmission matrices at a planar
//!   interface between two isotropic solids (Knott coefficients), their
//!   static limits and the ω = 0 interface bound state.
//! * [`numerics`] — polylogarithms, adaptive quadrature, Matsubara
//!   summation and small determinants.
//! * [`lifshitz`] — the energy evaluators (M channel, coupled L/N channel,
//!   perfect reflector reference, totals).
//! * [`closedforms`] — every closed-form asymptotic limit, the
//!   electromagnetic comparison energies, interface Casimir pressure and the
//!   apparent Young's modulus of a thin film.
//!
//! All quantities are SI: energies in J/m², pressures in Pa, lengths in m,
//! temperatures in K. The crate is `no_std` (with `alloc`); IO, file formats
//! and the command line live in the companion `phonon-casimir-cli` crate.

#![cfg_attr(not(test), no_std)]
// `!(x > 0.0)` guards deliberately treat NaN as out of range
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// index loops mirror the matrix algebra they implement
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod closedforms;
pub mod constants;
mod error;
pub mod lifshitz;
pub mod materials;
pub mod numerics;
pub mod scattering;

pub use error::Error;

/// Complex scalar used throughout the public API.
pub use num_complex::Complex64;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
