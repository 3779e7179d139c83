//! The quantities a sweep can emit.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    EM,
    ELn,
    ETotal,
    EPr,
    ELnQm,
    ELnT,
    EMQm,
    EMT,
    EEmQm,
    EEmT,
    Ratio,
    Gamma,
    Pressure,
    Young,
}

pub const ALL: [Quantity; 14] = [
    Quantity::EM,
    Quantity::ELn,
    Quantity::ETotal,
    Quantity::EPr,
    Quantity::ELnQm,
    Quantity::ELnT,
    Quantity::EMQm,
    Quantity::EMT,
    Quantity::EEmQm,
    Quantity::EEmT,
    Quantity::Ratio,
    Quantity::Gamma,
    Quantity::Pressure,
    Quantity::Young,
];

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::EM => "e_m",
            Quantity::ELn => "e_ln",
            Quantity::ETotal => "e_total",
            Quantity::EPr => "e_pr",
            Quantity::ELnQm => "e_ln_qm",
            Quantity::ELnT => "e_ln_T",
            Quantity::EMQm => "e_m_qm",
            Quantity::EMT => "e_m_T",
            Quantity::EEmQm => "e_em_qm",
            Quantity::EEmT => "e_em_T",
            Quantity::Ratio => "ratio",
            Quantity::Gamma => "gamma",
            Quantity::Pressure => "pressure",
            Quantity::Young => "young",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            Quantity::Ratio | Quantity::Gamma => "dimensionless",
            Quantity::Pressure | Quantity::Young => "Pa",
            _ => "J/m^2",
        }
    }

    /// True when the quantity needs the numeric Lifshitz machinery rather
    /// than a closed form alone.
    pub fn needs_numeric(self) -> bool {
        matches!(self, Quantity::EM | Quantity::ELn | Quantity::ETotal)
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL.iter()
            .copied()
            .find(|q| q.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ALL.iter().map(|q| q.name()).collect();
                format!("unknown quantity '{s}'; expected one of {}", names.join(", "))
            })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated quantity list, preserving the request order.
pub fn parse_list(spec: &str) -> Result<Vec<Quantity>, String> {
    let mut out = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if token == "all" {
            out.extend(ALL);
            continue;
        }
        out.push(token.parse()?);
    }
    if out.is_empty() {
        return Err("no quantities requested".into());
    }
    Ok(out)
}
