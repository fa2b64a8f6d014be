//! Physical constants in SI units.
//!
//! Values follow CODATA 2018 / the 2019 SI redefinition: `h`, `e`, `c`, `k_B`
//! are exact; `eps0`, `Z0`, and `alpha` are independently pinned measured
//! values so that the cross-identities below act as genuine consistency
//! checks rather than tautologies.

use serde::Serialize;

/// The full constant set shared by every module.
///
/// All internal computation is in SI (J, Wb, F, H, m, s, A); display units
/// exist only at the CLI and file boundaries.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PhysConstants {
    /// Planck constant (J·s), exact.
    pub h: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Elementary charge (C), exact.
    pub e: f64,
    /// Speed of light (m/s), exact.
    pub c: f64,
    /// Boltzmann constant (J/K), exact.
    pub k_b: f64,
    /// Magnetic flux quantum h/2e (Wb).
    pub phi0: f64,
    /// von Klitzing resistance h/e² (Ω).
    pub r_k: f64,
    /// Vacuum impedance (Ω), independently pinned.
    pub z0: f64,
    /// Fine-structure constant, independently pinned.
    pub alpha: f64,
    /// Vacuum permittivity (F/m).
    pub eps0: f64,
    /// Stefan–Boltzmann constant (W·m⁻²·K⁻⁴).
    pub sigma_sb: f64,
    /// Electron rest energy (J).
    pub m_e_c2: f64,
    /// Superconducting gap energy of aluminum, ≈170 μeV (J).
    pub delta_al: f64,
    /// Wien displacement constant (m·K).
    pub b_wien: f64,
}

/// Identifier recorded in every output manifest alongside results.
pub const CONSTANTS_VERSION: &str = "codata-2018";

const H: f64 = 6.626_070_15e-34;
const E: f64 = 1.602_176_634e-19;
const C: f64 = 299_792_458.0;
const K_B: f64 = 1.380_649e-23;
const EPS0: f64 = 8.854_187_812_8e-12;
const Z0: f64 = 376.730_313_668;
const ALPHA: f64 = 7.297_352_569_3e-3;
const SIGMA_SB: f64 = 5.670_374_419e-8;
const M_E: f64 = 9.109_383_701_5e-31;
const B_WIEN: f64 = 2.897_771_955e-3;

/// Aluminum gap, 170 μeV expressed in joules.
const DELTA_AL: f64 = 170e-6 * E;

/// The one shared constant set.
pub const CONSTANTS: PhysConstants = PhysConstants {
    h: H,
    hbar: H / (2.0 * std::f64::consts::PI),
    e: E,
    c: C,
    k_b: K_B,
    phi0: H / (2.0 * E),
    r_k: H / (E * E),
    z0: Z0,
    alpha: ALPHA,
    eps0: EPS0,
    sigma_sb: SIGMA_SB,
    m_e_c2: M_E * C * C,
    delta_al: DELTA_AL,
    b_wien: B_WIEN,
};

/// Error raised when a constant identity fails its consistency bound.
#[derive(Debug, thiserror::Error)]
#[error("constant identity violated: {0}")]
pub struct ConstantsError(pub String);

impl PhysConstants {
    /// Check the defining identities. Intended to run once at startup and
    /// in tests; failure indicates a corrupted build, not bad user input.
    pub fn verify(&self) -> Result<(), ConstantsError> {
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        if rel(self.phi0, self.h / (2.0 * self.e)) > 1e-12 {
            return Err(ConstantsError("phi0 != h/2e".into()));
        }
        if rel(self.r_k, self.h / (self.e * self.e)) > 1e-12 {
            return Err(ConstantsError("R_K != h/e^2".into()));
        }
        // Z0 and alpha come from independent pins; this ties them together.
        if rel(2.0 * self.r_k / self.z0, 1.0 / self.alpha) > 1e-3 {
            return Err(ConstantsError("2 R_K / Z0 != 1/alpha".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        CONSTANTS.verify().unwrap();
    }

    #[test]
    fn matches_rounded_literature_values() {
        assert!((CONSTANTS.phi0 - 2.068e-15).abs() / 2.068e-15 < 1e-3);
        assert!((CONSTANTS.r_k - 25.8e3).abs() / 25.8e3 < 1e-3);
        assert!((CONSTANTS.z0 - 377.0).abs() < 0.5);
        assert!((1.0 / CONSTANTS.alpha - 137.0).abs() < 0.1);
        // 2 R_K / Z0 reproduces 1/alpha far better than the 1e-3 gate.
        let lhs = 2.0 * CONSTANTS.r_k / CONSTANTS.z0;
        assert!((lhs - 1.0 / CONSTANTS.alpha).abs() / lhs < 1e-9);
    }

    #[test]
    fn aluminum_gap_in_microelectronvolts() {
        assert!((CONSTANTS.delta_al / CONSTANTS.e * 1e6 - 170.0).abs() < 1e-9);
    }
}
