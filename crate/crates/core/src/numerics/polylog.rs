//! Real polylogarithms Li₃ and Li₄ on [0, 1].
//!
//! For z ≤ 0.6 the defining power series Σ_{k≥1} z^k/k^s converges
//! geometrically and is summed with an explicit tail bound. Near z = 1 the
//! series degrades, so the expansion of Li_n(e^μ) in powers of μ = ln z is
//! used instead (it converges for |μ| < 2π and is exact at z = 1 where it
//! reduces to ζ(n)).

use crate::constants::{ZETA_3, ZETA_4};
use crate::{Error, Result};

const ZETA_2: f64 = core::f64::consts::PI * core::f64::consts::PI / 6.0;
const SERIES_CUTOFF: f64 = 0.6;

/// Li_s(z) for s ∈ {3, 4} and z ∈ [0, 1], accurate to better than 1e-13
/// relative.
pub fn polylog(s: u32, z: f64) -> Result<f64> {
    if s != 3 && s != 4 {
        return Err(Error::Domain("polylog order must be 3 or 4"));
    }
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain("polylog argument must lie in [0, 1]"));
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    if z == 1.0 {
        return Ok(if s == 3 { ZETA_3 } else { ZETA_4 });
    }
    if z <= SERIES_CUTOFF {
        Ok(series(s, z))
    } else if s == 3 {
        Ok(li3_log_expansion(libm::log(z)))
    } else {
        Ok(li4_log_expansion(libm::log(z)))
    }
}

/// Direct power series with remainder bound z^{K+1}/((K+1)^s (1-z)).
fn series(s: u32, z: f64) -> f64 {
    let mut acc = 0.0;
    let mut zk = 1.0;
    for k in 1..10_000u32 {
        zk *= z;
        let term = zk / libm::pow(k as f64, s as f64);
        acc += term;
        if term * z / (1.0 - z) < 1e-17 * acc {
            break;
        }
    }
    acc
}

// ζ(0), ζ(-1), ζ(-3), ζ(-5), ζ(-7), ζ(-9), ζ(-11), ζ(-13); even negative
// arguments vanish.
const ZETA_NEG: [(u32, f64); 8] = [
    (0, -0.5),
    (1, -1.0 / 12.0),
    (3, 1.0 / 120.0),
    (5, -1.0 / 252.0),
    (7, 1.0 / 240.0),
    (9, -1.0 / 132.0),
    (11, 691.0 / 32760.0),
    (13, -1.0 / 12.0),
];

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Li₃(e^μ) = ζ(3) + ζ(2)μ + (3/2 − ln(−μ)) μ²/2 + Σ_{k≥3} ζ(3−k) μ^k/k!.
fn li3_log_expansion(mu: f64) -> f64 {
    let mut acc = ZETA_3 + ZETA_2 * mu + (1.5 - libm::log(-mu)) * mu * mu / 2.0;
    for (j, zeta) in ZETA_NEG {
        let k = j + 3;
        acc += zeta * libm::pow(mu, k as f64) / factorial(k);
    }
    acc
}

/// Li₄(e^μ) = ζ(4) + ζ(3)μ + ζ(2)μ²/2 + (11/6 − ln(−μ)) μ³/6
///            + Σ_{k≥4} ζ(4−k) μ^k/k!.
fn li4_log_expansion(mu: f64) -> f64 {
    let mut acc = ZETA_4
        + ZETA_3 * mu
        + ZETA_2 * mu * mu / 2.0
        + (11.0 / 6.0 - libm::log(-mu)) * mu * mu * mu / 6.0;
    for (j, zeta) in ZETA_NEG {
        let k = j + 4;
        acc += zeta * libm::pow(mu, k as f64) / factorial(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li3_at_one_is_zeta3() {
        assert_eq!(polylog(3, 1.0).unwrap(), 1.2020569031595943);
    }

    #[test]
    fn li4_at_zero_is_zero() {
        assert_eq!(polylog(4, 0.0).unwrap(), 0.0);
    }

    // High-precision reference values (50-digit series sums, remainder
    // bound < 1e-15).
    #[test]
    fn li4_at_half_matches_high_precision_series() {
        let v = polylog(4, 0.5).unwrap();
        assert!((v - 0.5174790616738994).abs() < 1e-14, "{v}");
    }

    #[test]
    fn li3_at_half_matches_closed_form() {
        // Li3(1/2) = 7 zeta(3)/8 - pi^2 ln2 / 12 + ln^3 2 / 6
        let ln2 = core::f64::consts::LN_2;
        let reference = 7.0 * 1.2020569031595943 / 8.0
            - core::f64::consts::PI.powi(2) * ln2 / 12.0
            + ln2.powi(3) / 6.0;
        let v = polylog(3, 0.5).unwrap();
        assert!((v - reference).abs() < 1e-14);
        assert!((v - 0.5372131936080402).abs() < 1e-14);
    }

    #[test]
    fn series_and_log_expansion_agree_across_the_cutoff() {
        // both branches are accurate near z = 0.6; they must agree
        for &z in &[0.59, 0.599, 0.6] {
            let a = series(3, z);
            let b = li3_log_expansion(z.ln());
            assert!((a - b).abs() < 1e-13 * a, "s=3 z={z}: {a} vs {b}");
            let a = series(4, z);
            let b = li4_log_expansion(z.ln());
            assert!((a - b).abs() < 1e-13 * a, "s=4 z={z}: {a} vs {b}");
        }
    }

    #[test]
    fn near_one_stays_accurate() {
        // Li3(1-1e-9) and Li4 likewise sit just below zeta(s)
        let v3 = polylog(3, 1.0 - 1e-9).unwrap();
        assert!(v3 < 1.2020569031595943 && v3 > 1.2020569 - 2e-8);
        let v4 = polylog(4, 1.0 - 1e-9).unwrap();
        assert!(v4 < 1.0823232337111382 && v4 > 1.0823232 - 2e-8);
    }

    #[test]
    fn monotone_in_z_and_order() {
        let mut prev3 = 0.0;
        let mut prev4 = 0.0;
        for i in 1..=100 {
            let z = i as f64 / 100.0;
            let v3 = polylog(3, z).unwrap();
            let v4 = polylog(4, z).unwrap();
            assert!(v3 > prev3 && v4 > prev4, "monotone at z={z}");
            assert!(v3 >= v4, "Li3 >= Li4 at z={z}");
            prev3 = v3;
            prev4 = v4;
        }
    }

    #[test]
    fn domain_errors() {
        assert!(polylog(3, -0.1).is_err());
        assert!(polylog(4, 1.1).is_err());
        assert!(polylog(5, 0.5).is_err());
    }
}
