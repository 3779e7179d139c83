//! Isotropic elastic (and optionally dielectric) material records.
//!
//! A material is characterised by its mass density and the two Lamé
//! parameters; an optional longitudinal stiffness C11 supports the measured
//! cubic-crystal longitudinal speed convention, and an optional static
//! permittivity feeds the electromagnetic comparison energies. Records are
//! immutable after construction and are freely shared across workers.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Static relative permittivity, with a distinguished conductor value for
/// metals (ε → ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Permittivity {
    Dielectric(f64),
    Conductor,
}

impl Permittivity {
    /// Contrast ratio (ε₀ − ε₁)/(ε₀ + ε₁) for a gap/plate pair.
    ///
    /// Exactly one conductor saturates the ratio at ±1; two conductors are
    /// treated as equal permittivities (ratio 0).
    pub fn contrast(gap: Permittivity, plate: Permittivity) -> f64 {
        match (gap, plate) {
            (Permittivity::Dielectric(e0), Permittivity::Dielectric(e1)) => {
                (e0 - e1) / (e0 + e1)
            }
            (Permittivity::Conductor, Permittivity::Dielectric(_)) => 1.0,
            (Permittivity::Dielectric(_), Permittivity::Conductor) => -1.0,
            (Permittivity::Conductor, Permittivity::Conductor) => 0.0,
        }
    }
}

/// An isotropic elastic material.
#[derive(Debug, Clone, PartialEq)]
pub struct ElasticMaterial {
    pub name: String,
    /// Mass density, kg/m³.
    pub rho: f64,
    /// First Lamé parameter λ, Pa.
    pub lambda: f64,
    /// Second Lamé parameter (shear modulus) μ, Pa.
    pub mu: f64,
    /// Longitudinal stiffness C11, Pa, when a measured value is available.
    pub c11: Option<f64>,
    /// Static relative permittivity, when known.
    pub eps0: Option<Permittivity>,
}

impl ElasticMaterial {
    /// Builds a validated material record.
    pub fn new(
        name: &str,
        rho: f64,
        lambda: f64,
        mu: f64,
        c11: Option<f64>,
        eps0: Option<Permittivity>,
    ) -> Result<Self> {
        let mat = ElasticMaterial {
            name: name.to_owned(),
            rho,
            lambda,
            mu,
            c11,
            eps0,
        };
        mat.validate()?;
        Ok(mat)
    }

    /// Checks the physical invariants: ρ > 0, μ > 0 (fluids are not
    /// supported), λ + 2μ > 0, C11 > 0 when present, ε ≥ 1 when present.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::InvalidMaterial {
                name: self.name.clone(),
                reason: reason.to_owned(),
            })
        };
        if !(self.rho > 0.0) || !self.rho.is_finite() {
            return fail("rho must be positive and finite");
        }
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return fail("mu must be positive (fluids are unsupported)");
        }
        if !(self.lambda + 2.0 * self.mu > 0.0) || !self.lambda.is_finite() {
            return fail("lambda + 2*mu must be positive");
        }
        if let Some(c11) = self.c11 {
            if !(c11 > 0.0) || !c11.is_finite() {
                return fail("c11 must be positive when present");
            }
        }
        if let Some(Permittivity::Dielectric(e)) = self.eps0 {
            if !(e >= 1.0) || !e.is_finite() {
                return fail("eps0 must be >= 1 or the conductor marker");
            }
        }
        Ok(())
    }

    /// Bulk Young's modulus E = μ(3λ + 2μ)/(λ + μ), Pa.
    pub fn young_modulus(&self) -> f64 {
        self.mu * (3.0 * self.lambda + 2.0 * self.mu) / (self.lambda + self.mu)
    }
}

/// Which longitudinal-speed convention produced a [`SoundSpeeds`] value.
///
/// `Lame` uses c_ℓ = sqrt((λ + 2μ)/ρ), the self-consistent isotropic
/// relation; `C11` uses c_ℓ = sqrt(C11/ρ), matching measured cubic-crystal
/// longitudinal speeds. The transverse speed is sqrt(μ/ρ) in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpeedConvention {
    Lame,
    #[default]
    C11,
}

/// Longitudinal and transverse sound speeds of a material, m/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SoundSpeeds {
    pub c_l: f64,
    pub c_t: f64,
    pub mode: SpeedConvention,
}

/// Derives the sound speeds of `mat` under the chosen convention.
pub fn sound_speeds(mat: &ElasticMaterial, mode: SpeedConvention) -> Result<SoundSpeeds> {
    mat.validate()?;
    let stiffness = match mode {
        SpeedConvention::Lame => mat.lambda + 2.0 * mat.mu,
        SpeedConvention::C11 => mat.c11.ok_or_else(|| Error::MissingC11 {
            name: mat.name.clone(),
        })?,
    };
    Ok(SoundSpeeds {
        c_l: libm::sqrt(stiffness / mat.rho),
        c_t: libm::sqrt(mat.mu / mat.rho),
        mode,
    })
}

/// The built-in reference table of seven materials.
///
/// BN_hex and BN_w carry a decimal-point slip in some printed data sheets
/// (GPa columns ten times too small for the quoted sound speeds); the values
/// here are the ones consistent with the quoted speeds and with the
/// literature stiffness constants (e.g. wurtzite BN C11 = 982 GPa,
/// C44 = 388 GPa).
pub fn builtin_table() -> Vec<ElasticMaterial> {
    let gpa = 1.0e9;
    let d = |e: f64| Some(Permittivity::Dielectric(e));
    let rec = |name: &str, rho: f64, lambda: f64, mu: f64, c11: f64, eps0| ElasticMaterial {
        name: name.to_owned(),
        rho,
        lambda: lambda * gpa,
        mu: mu * gpa,
        c11: Some(c11 * gpa),
        eps0,
    };
    alloc::vec![
        rec("Ge", 5323.0, 44.0, 66.7, 126.0, d(16.2)),
        rec("Si", 2329.0, 64.0, 79.6, 166.0, d(11.7)),
        rec("Diamond", 3514.0, 124.0, 578.0, 1070.0, d(5.7)),
        rec("BN_cub", 3487.0, 190.0, 480.0, 820.0, d(7.1)),
        rec("BN_hex", 2180.0, 300.0, 150.0, 750.0, d(5.9)),
        rec("BN_w", 3487.0, 134.0, 388.0, 982.0, d(5.9)),
        rec("In", 7300.0, 39.5, 6.55, 44.5, Some(Permittivity::Conductor)),
    ]
}

/// Looks a material up in the built-in table by exact name.
pub fn builtin(name: &str) -> Option<ElasticMaterial> {
    builtin_table().into_iter().find(|m| m.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sound-speed columns as printed alongside the reference data, m/s.
    const TABLE_SPEEDS: [(&str, f64, f64); 7] = [
        ("Ge", 4865.27, 3539.85),
        ("Si", 8442.47, 5846.17),
        ("Diamond", 17447.3, 12823.0),
        ("BN_cub", 15334.9, 11732.6),
        ("BN_hex", 18548.2, 8295.0),
        ("BN_w", 16781.5, 10548.5),
        ("In", 2467.30, 946.59),
    ];

    #[test]
    fn builtin_table_has_seven_materials_in_order() {
        let table = builtin_table();
        assert_eq!(table.len(), 7);
        let names: Vec<&str> = table.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(
            names,
            ["Ge", "Si", "Diamond", "BN_cub", "BN_hex", "BN_w", "In"]
        );
    }

    #[test]
    fn diamond_record_matches_reference() {
        let d = builtin("Diamond").unwrap();
        assert_eq!(d.rho, 3514.0);
        assert_eq!(d.lambda, 124.0e9);
        assert_eq!(d.mu, 578.0e9);
        assert_eq!(d.c11, Some(1070.0e9));
        assert_eq!(d.eps0, Some(Permittivity::Dielectric(5.7)));
    }

    #[test]
    fn indium_is_a_conductor() {
        assert_eq!(builtin("In").unwrap().eps0, Some(Permittivity::Conductor));
    }

    #[test]
    fn c11_speeds_reproduce_table_columns_within_0p1_percent() {
        for (name, cl_ref, ct_ref) in TABLE_SPEEDS {
            let m = builtin(name).unwrap();
            let s = sound_speeds(&m, SpeedConvention::C11).unwrap();
            assert!(
                (s.c_l / cl_ref - 1.0).abs() < 1e-3,
                "{name}: c_l {} vs table {cl_ref}",
                s.c_l
            );
            assert!(
                (s.c_t / ct_ref - 1.0).abs() < 1e-3,
                "{name}: c_t {} vs table {ct_ref}",
                s.c_t
            );
        }
    }

    #[test]
    fn ge_c11_speeds_match_quoted_values() {
        let ge = builtin("Ge").unwrap();
        let s = sound_speeds(&ge, SpeedConvention::C11).unwrap();
        assert!((s.c_l / 4865.27 - 1.0).abs() < 1e-4);
        assert!((s.c_t / 3539.85 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn lame_mode_with_equal_lame_parameters_gives_sqrt3_ratio() {
        let m = ElasticMaterial::new("equal", 1000.0, 5.0e9, 5.0e9, None, None).unwrap();
        let s = sound_speeds(&m, SpeedConvention::Lame).unwrap();
        assert!((s.c_l / s.c_t - 3.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn si_lame_longitudinal_speed_differs_from_c11_column() {
        let si = builtin("Si").unwrap();
        let s = sound_speeds(&si, SpeedConvention::Lame).unwrap();
        let direct = (223.2e9_f64 / 2329.0).sqrt();
        assert!((s.c_l - direct).abs() < 1e-9 * direct);
        assert!((s.c_l - 9789.5).abs() < 0.1);
    }

    #[test]
    fn c11_mode_without_c11_is_an_error() {
        let m = ElasticMaterial::new("bare", 1000.0, 5.0e9, 5.0e9, None, None).unwrap();
        assert!(matches!(
            sound_speeds(&m, SpeedConvention::C11),
            Err(Error::MissingC11 { .. })
        ));
    }

    #[test]
    fn zero_shear_modulus_is_rejected() {
        assert!(ElasticMaterial::new("fluid", 1000.0, 2.0e9, 0.0, None, None).is_err());
    }

    #[test]
    fn eps_contrast_limits() {
        use Permittivity::*;
        assert_eq!(Permittivity::contrast(Dielectric(5.0), Conductor), -1.0);
        assert_eq!(Permittivity::contrast(Conductor, Dielectric(5.0)), 1.0);
        assert_eq!(Permittivity::contrast(Conductor, Conductor), 0.0);
        let r = Permittivity::contrast(Dielectric(11.7), Dielectric(16.2));
        assert!((r + 4.5 / 27.9).abs() < 1e-15);
    }

    #[test]
    fn sound_speeds_is_deterministic() {
        let ge = builtin("Ge").unwrap();
        let a = sound_speeds(&ge, SpeedConvention::C11).unwrap();
        let b = sound_speeds(&ge, SpeedConvention::C11).unwrap();
        assert_eq!(a.c_l.to_bits(), b.c_l.to_bits());
        assert_eq!(a.c_t.to_bits(), b.c_t.to_bits());
    }
}
