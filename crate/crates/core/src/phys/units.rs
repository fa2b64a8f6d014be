//! Unit tags and conversions used at CLI and file boundaries.
//!
//! Internally everything is SI. Energy-equivalent tags (GHz as E/h, K as
//! E/k_B) convert through [`CONSTANTS`], so a round trip is exact to float
//! rounding.

use serde::{Deserialize, Serialize};

use super::consts::CONSTANTS;

/// Dimension groups; conversion is only defined within a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dimension {
    Energy,
    Flux,
    Length,
    Capacitance,
    Inductance,
    Resistance,
    Current,
    Charge,
    Angle,
    Temperature,
    Frequency,
    Time,
    Area,
    Dimensionless,
}

/// Supported unit tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Unit {
    Joule,
    ElectronVolt,
    MicroElectronVolt,
    /// Energy stated as a frequency through E = h·f.
    GigahertzEnergy,
    /// Energy stated as a temperature through E = k_B·T.
    KelvinEnergy,
    Weber,
    /// Flux in units of phi0 = h/2e.
    FluxQuantum,
    Meter,
    Angstrom,
    Micrometer,
    Farad,
    Henry,
    Ohm,
    Ampere,
    Radian,
}

#[derive(Debug, thiserror::Error)]
pub enum UnitError {
    #[error("unknown unit tag `{0}`")]
    UnknownUnit(String),
    #[error("cannot convert {from:?} to {to:?}: incompatible dimensions")]
    Incompatible { from: Unit, to: Unit },
    #[error("`{0}` is not a number with an optional unit suffix")]
    Malformed(String),
    #[error("`{input}` has dimension {got:?}, expected {want:?}")]
    WrongDimension {
        input: String,
        got: Dimension,
        want: Dimension,
    },
    #[error("`{0}` needs an explicit unit suffix (bare numbers are rejected for dimensional parameters)")]
    MissingUnit(String),
}

impl Unit {
    pub fn dimension(self) -> Dimension {
        use Unit::*;
        match self {
            Joule | ElectronVolt | MicroElectronVolt | GigahertzEnergy | KelvinEnergy => {
                Dimension::Energy
            }
            Weber | FluxQuantum => Dimension::Flux,
            Meter | Angstrom | Micrometer => Dimension::Length,
            Farad => Dimension::Capacitance,
            Henry => Dimension::Inductance,
            Ohm => Dimension::Resistance,
            Ampere => Dimension::Current,
            Radian => Dimension::Angle,
        }
    }

    /// Multiplicative factor taking one of this unit to the group's SI base.
    fn to_si(self) -> f64 {
        use Unit::*;
        match self {
            Joule | Weber | Meter | Farad | Henry | Ohm | Ampere | Radian => 1.0,
            ElectronVolt => CONSTANTS.e,
            MicroElectronVolt => 1e-6 * CONSTANTS.e,
            GigahertzEnergy => CONSTANTS.h * 1e9,
            KelvinEnergy => CONSTANTS.k_b,
            FluxQuantum => CONSTANTS.phi0,
            Angstrom => 1e-10,
            Micrometer => 1e-6,
        }
    }

    pub fn parse_tag(tag: &str) -> Result<Unit, UnitError> {
        use Unit::*;
        Ok(match tag {
            "J" => Joule,
            "eV" => ElectronVolt,
            "ueV" | "μeV" => MicroElectronVolt,
            "GHz" => GigahertzEnergy,
            "K" => KelvinEnergy,
            "Wb" => Weber,
            "phi0" | "φ0" => FluxQuantum,
            "m" => Meter,
            "A" | "Å" | "angstrom" => Angstrom,
            "um" | "μm" => Micrometer,
            "F" => Farad,
            "H" => Henry,
            "Ohm" | "ohm" | "Ω" => Ohm,
            "amp" => Ampere,
            "rad" => Radian,
            other => return Err(UnitError::UnknownUnit(other.into())),
        })
    }
}

/// Exact conversion between two tags of the same dimension group.
pub fn unit_convert(value: f64, from: Unit, to: Unit) -> Result<f64, UnitError> {
    if from.dimension() != to.dimension() {
        return Err(UnitError::Incompatible { from, to });
    }
    Ok(value * from.to_si() / to.to_si())
}

/// A parsed numeric value normalized to SI, together with its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quantity {
    pub si_value: f64,
    pub dimension: Dimension,
}

/// Suffix table for quantity strings. Longest-match wins, so `mm` is
/// milli-meter while a trailing `m` alone is meter.
fn suffix_table() -> &'static [(&'static str, f64, Dimension)] {
    use Dimension::*;
    const E_CHARGE: f64 = CONSTANTS.e;
    const H_PLANCK: f64 = CONSTANTS.h;
    &[
        // energy
        ("meV", 1e-3 * E_CHARGE, Energy),
        ("ueV", 1e-6 * E_CHARGE, Energy),
        ("keV", 1e3 * E_CHARGE, Energy),
        ("MeV", 1e6 * E_CHARGE, Energy),
        ("eV", E_CHARGE, Energy),
        ("mJ", 1e-3, Energy),
        ("J", 1.0, Energy),
        // energy through h·f
        ("GHzE", H_PLANCK * 1e9, Energy),
        // frequency proper
        ("THz", 1e12, Frequency),
        ("GHz", 1e9, Frequency),
        ("MHz", 1e6, Frequency),
        ("kHz", 1e3, Frequency),
        ("Hz", 1.0, Frequency),
        // temperature
        ("mK", 1e-3, Temperature),
        ("uK", 1e-6, Temperature),
        ("K", 1.0, Temperature),
        // magnetic flux
        ("phi0", CONSTANTS.phi0, Flux),
        ("uWb", 1e-6, Flux),
        ("nWb", 1e-9, Flux),
        ("pWb", 1e-12, Flux),
        ("fWb", 1e-15, Flux),
        ("Wb", 1.0, Flux),
        // length
        ("Ang", 1e-10, Length),
        ("nm", 1e-9, Length),
        ("um", 1e-6, Length),
        ("mm", 1e-3, Length),
        ("cm", 1e-2, Length),
        ("km", 1e3, Length),
        ("m", 1.0, Length),
        // capacitance
        ("fF", 1e-15, Capacitance),
        ("pF", 1e-12, Capacitance),
        ("nF", 1e-9, Capacitance),
        ("uF", 1e-6, Capacitance),
        ("F", 1.0, Capacitance),
        // inductance
        ("fH", 1e-15, Inductance),
        ("pH", 1e-12, Inductance),
        ("nH", 1e-9, Inductance),
        ("uH", 1e-6, Inductance),
        ("mH", 1e-3, Inductance),
        ("H", 1.0, Inductance),
        // resistance
        ("kOhm", 1e3, Resistance),
        ("mOhm", 1e-3, Resistance),
        ("Ohm", 1.0, Resistance),
        ("ohm", 1.0, Resistance),
        // current
        ("fA", 1e-15, Current),
        ("pA", 1e-12, Current),
        ("nA", 1e-9, Current),
        ("uA", 1e-6, Current),
        ("mA", 1e-3, Current),
        ("A", 1.0, Current),
        // charge: elementary charges or coulombs
        ("e", E_CHARGE, Charge),
        ("fC", 1e-15, Charge),
        ("pC", 1e-12, Charge),
        ("nC", 1e-9, Charge),
        ("C", 1.0, Charge),
        // time
        ("fs", 1e-15, Time),
        ("ps", 1e-12, Time),
        ("ns", 1e-9, Time),
        ("us", 1e-6, Time),
        ("ms", 1e-3, Time),
        ("s", 1.0, Time),
        // angle
        ("mrad", 1e-3, Angle),
        ("urad", 1e-6, Angle),
        ("rad", 1.0, Angle),
        // area
        ("um2", 1e-12, Area),
        ("mm2", 1e-6, Area),
        ("m2", 1.0, Area),
    ]
}

/// Parse `"100eV"`, `"1.5phi0"`, `"1e-13"` (dimensionless), `"10um"`, ...
///
/// The numeric part is the longest leading substring that parses as `f64`,
/// so exponent notation like `1e-13` never collides with the `e` charge
/// suffix.
pub fn parse_quantity(s: &str) -> Result<Quantity, UnitError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(UnitError::Malformed(s.into()));
    }
    let bytes = s.as_bytes();
    let mut split = 0usize;
    let mut value = f64::NAN;
    for i in (1..=bytes.len()).rev() {
        if !s.is_char_boundary(i) {
            continue;
        }
        if let Ok(v) = s[..i].parse::<f64>() {
            split = i;
            value = v;
            break;
        }
    }
    if split == 0 {
        return Err(UnitError::Malformed(s.into()));
    }
    let suffix = &s[split..];
    if suffix.is_empty() {
        return Ok(Quantity {
            si_value: value,
            dimension: Dimension::Dimensionless,
        });
    }
    for (tag, factor, dim) in suffix_table() {
        if suffix == *tag {
            return Ok(Quantity {
                si_value: value * factor,
                dimension: *dim,
            });
        }
    }
    Err(UnitError::UnknownUnit(suffix.into()))
}

/// Parse a quantity and require a specific dimension. Bare numbers are
/// accepted only when `want` is `Dimensionless` or `Angle` (a radian phase
/// reads naturally as a bare number).
pub fn parse_with_dimension(s: &str, want: Dimension) -> Result<f64, UnitError> {
    let q = parse_quantity(s)?;
    if q.dimension == want {
        return Ok(q.si_value);
    }
    if q.dimension == Dimension::Dimensionless {
        if matches!(want, Dimension::Dimensionless | Dimension::Angle) {
            return Ok(q.si_value);
        }
        return Err(UnitError::MissingUnit(s.into()));
    }
    Err(UnitError::WrongDimension {
        input: s.into(),
        got: q.dimension,
        want,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn one_flux_quantum_to_weber() {
        let wb = unit_convert(1.0, Unit::FluxQuantum, Unit::Weber).unwrap();
        assert_relative_eq!(wb, 2.068e-15, max_relative = 1e-3);
    }

    #[test]
    fn zero_converts_to_zero() {
        assert_eq!(unit_convert(0.0, Unit::Joule, Unit::ElectronVolt).unwrap(), 0.0);
    }

    #[test]
    fn five_gigahertz_in_microelectronvolts() {
        let uev = unit_convert(5.0, Unit::GigahertzEnergy, Unit::MicroElectronVolt).unwrap();
        // E = h·f with CODATA h.
        assert_relative_eq!(uev, 20.68, max_relative = 1e-3);
    }

    #[test]
    fn incompatible_dimensions_rejected() {
        assert!(unit_convert(1.0, Unit::Joule, Unit::Meter).is_err());
        assert!(Unit::parse_tag("parsec").is_err());
    }

    #[test]
    fn quantity_suffixes() {
        assert_relative_eq!(parse_quantity("100fF").unwrap().si_value, 1e-13);
        assert_relative_eq!(parse_quantity("1nH").unwrap().si_value, 1e-9);
        assert_relative_eq!(
            parse_quantity("1phi0").unwrap().si_value,
            crate::phys::CONSTANTS.phi0,
            max_relative = 1e-12
        );
        assert_relative_eq!(parse_quantity("100mm").unwrap().si_value, 0.1);
        assert_relative_eq!(parse_quantity("20mK").unwrap().si_value, 0.02);
        // `1e-13` stays exponent notation, `55e` is a charge.
        assert_eq!(parse_quantity("1e-13").unwrap().dimension, Dimension::Dimensionless);
        assert_eq!(parse_quantity("55e").unwrap().dimension, Dimension::Charge);
    }

    #[test]
    fn dimensional_parameters_reject_bare_numbers() {
        assert!(parse_with_dimension("1e-6", Dimension::Length).is_err());
        assert!(parse_with_dimension("1um", Dimension::Length).is_ok());
        // phases may be bare
        assert_eq!(parse_with_dimension("0.01", Dimension::Angle).unwrap(), 0.01);
    }

    proptest::proptest! {
        /// convert(convert(x, A→B), B→A) = x within 1e-14 for every pair in
        /// each dimension group.
        #[test]
        fn round_trip_identity(x in 1e-20_f64..1e20) {
            use Unit::*;
            let groups: [&[Unit]; 3] = [
                &[Joule, ElectronVolt, MicroElectronVolt, GigahertzEnergy, KelvinEnergy],
                &[Weber, FluxQuantum],
                &[Meter, Angstrom, Micrometer],
            ];
            for group in groups {
                for &a in group {
                    for &b in group {
                        let there = unit_convert(x, a, b).unwrap();
                        let back = unit_convert(there, b, a).unwrap();
                        proptest::prop_assert!(((back - x) / x).abs() < 1e-14);
                    }
                }
            }
        }
    }
}
