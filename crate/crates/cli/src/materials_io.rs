//! Materials file ingestion.
//!
//! A materials file is UTF-8 JSON: a top-level array of records with fields
//! `name`, `rho_kg_m3`, `lambda_GPa`, `mu_GPa`, optional `c11_GPa` and
//! optional `eps0` (a number, or the string "inf" for a conductor). GPa
//! fields are converted to Pa on load. Records loaded from a file shadow
//! built-in materials of the same name when merged.

use std::fmt;
use std::path::Path;

use phonon_casimir::materials::{builtin_table, ElasticMaterial, Permittivity};
use serde::Deserialize;

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Parse(serde_json::Error),
    /// Record index (0-based), offending field or invariant.
    Invalid { record: usize, name: String, reason: String },
    Duplicate { record: usize, name: String },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read materials file: {e}"),
            LoadError::Parse(e) => write!(f, "materials file is not valid JSON: {e}"),
            LoadError::Invalid { record, name, reason } => {
                write!(f, "record {record} ('{name}'): {reason}")
            }
            LoadError::Duplicate { record, name } => {
                write!(f, "record {record}: duplicate material name '{name}'")
            }
        }
    }
}

impl std::error::Error for LoadError {}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum EpsField {
    Number(f64),
    Marker(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    name: String,
    rho_kg_m3: f64,
    #[serde(rename = "lambda_GPa")]
    lambda_gpa: f64,
    #[serde(rename = "mu_GPa")]
    mu_gpa: f64,
    #[serde(rename = "c11_GPa")]
    c11_gpa: Option<f64>,
    eps0: Option<EpsField>,
}

fn convert(idx: usize, raw: RawRecord) -> Result<ElasticMaterial, LoadError> {
    let eps0 = match raw.eps0 {
        None => None,
        Some(EpsField::Number(e)) => Some(Permittivity::Dielectric(e)),
        Some(EpsField::Marker(s)) if s == "inf" => Some(Permittivity::Conductor),
        Some(EpsField::Marker(s)) => {
            return Err(LoadError::Invalid {
                record: idx,
                name: raw.name,
                reason: format!("eps0 must be a number or \"inf\", got \"{s}\""),
            })
        }
    };
    let gpa = 1.0e9;
    ElasticMaterial::new(
        &raw.name,
        raw.rho_kg_m3,
        raw.lambda_gpa * gpa,
        raw.mu_gpa * gpa,
        raw.c11_gpa.map(|c| c * gpa),
        eps0,
    )
    .map_err(|e| LoadError::Invalid {
        record: idx,
        name: raw.name.clone(),
        reason: e.to_string(),
    })
}

/// Parses and validates a materials file.
pub fn load_materials(path: &Path) -> Result<Vec<ElasticMaterial>, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    let raw: Vec<RawRecord> = serde_json::from_str(&text).map_err(LoadError::Parse)?;
    let mut out: Vec<ElasticMaterial> = Vec::with_capacity(raw.len());
    for (idx, record) in raw.into_iter().enumerate() {
        let mat = convert(idx, record)?;
        if out.iter().any(|m| m.name == mat.name) {
            return Err(LoadError::Duplicate {
                record: idx,
                name: mat.name,
            });
        }
        out.push(mat);
    }
    Ok(out)
}

/// The built-in table with `extra` records merged over it (file records
/// shadow built-ins of the same name).
pub fn merged_database(extra: &[ElasticMaterial]) -> Vec<ElasticMaterial> {
    let mut db: Vec<ElasticMaterial> = builtin_table()
        .into_iter()
        .filter(|b| !extra.iter().any(|e| e.name == b.name))
        .collect();
    db.extend(extra.iter().cloned());
    db
}

/// Looks `name` up in the merged database.
pub fn resolve(name: &str, extra: &[ElasticMaterial]) -> Option<ElasticMaterial> {
    merged_database(extra).into_iter().find(|m| m.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str) -> std::path::PathBuf {
        let mut path = std::env::temp_dir();
        path.push(format!(
            "phonon-casimir-test-{}-{}.json",
            std::process::id(),
            content.len()
        ));
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(content.as_bytes()).unwrap();
        path
    }

    #[test]
    fn loads_a_copy_of_ge_under_a_new_name() {
        let path = write_temp(
            r#"[{"name":"MyGe","rho_kg_m3":5323,"lambda_GPa":44,"mu_GPa":66.7,"c11_GPa":126,"eps0":16.2}]"#,
        );
        let mats = load_materials(&path).unwrap();
        assert_eq!(mats.len(), 1);
        let ge = phonon_casimir::materials::builtin("Ge").unwrap();
        assert_eq!(mats[0].rho, ge.rho);
        assert_eq!(mats[0].mu, ge.mu);
        let sp = phonon_casimir::materials::sound_speeds(
            &mats[0],
            phonon_casimir::materials::SpeedConvention::C11,
        )
        .unwrap();
        let sp_ge = phonon_casimir::materials::sound_speeds(
            &ge,
            phonon_casimir::materials::SpeedConvention::C11,
        )
        .unwrap();
        assert_eq!(sp.c_l.to_bits(), sp_ge.c_l.to_bits());
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn zero_shear_modulus_is_a_validation_error() {
        let path = write_temp(
            r#"[{"name":"fluid","rho_kg_m3":1000,"lambda_GPa":2,"mu_GPa":0}]"#,
        );
        match load_materials(&path) {
            Err(LoadError::Invalid { record: 0, .. }) => {}
            other => panic!("expected validation error, got {other:?}"),
        }
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn missing_c11_loads_but_blocks_the_c11_convention() {
        let path = write_temp(
            r#"[{"name":"bare","rho_kg_m3":1000,"lambda_GPa":2,"mu_GPa":3}]"#,
        );
        let mats = load_materials(&path).unwrap();
        assert!(phonon_casimir::materials::sound_speeds(
            &mats[0],
            phonon_casimir::materials::SpeedConvention::C11
        )
        .is_err());
        assert!(phonon_casimir::materials::sound_speeds(
            &mats[0],
            phonon_casimir::materials::SpeedConvention::Lame
        )
        .is_ok());
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let path = write_temp(
            r#"[{"name":"x","rho_kg_m3":1000,"lambda_GPa":2,"mu_GPa":3},
                {"name":"x","rho_kg_m3":1200,"lambda_GPa":2,"mu_GPa":4}]"#,
        );
        assert!(matches!(
            load_materials(&path),
            Err(LoadError::Duplicate { record: 1, .. })
        ));
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn conductor_marker_parses() {
        let path = write_temp(
            r#"[{"name":"metal","rho_kg_m3":7300,"lambda_GPa":39.5,"mu_GPa":6.55,"eps0":"inf"}]"#,
        );
        let mats = load_materials(&path).unwrap();
        assert_eq!(mats[0].eps0, Some(Permittivity::Conductor));
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn file_records_shadow_builtins() {
        let custom = ElasticMaterial::new("Ge", 5000.0, 40.0e9, 60.0e9, None, None).unwrap();
        let db = merged_database(std::slice::from_ref(&custom));
        assert_eq!(db.iter().filter(|m| m.name == "Ge").count(), 1);
        assert_eq!(resolve("Ge", &[custom]).unwrap().rho, 5000.0);
    }
}
