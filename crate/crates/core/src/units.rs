//! Physical quantities, unit systems and the constant table.
//!
//! Every [`Quantity`] stores its value in Planck units (`G = c = ħ = k_B = 1`)
//! together with a [`Dimension`] over length, time, mass and temperature.
//! Conversions to and from SI go through the Planck scales derived from the
//! CODATA 2018 defining constants below, so the derived scales are mutually
//! consistent to rounding.
//!
//! The geometrized system sets `G = c = 1` and measures everything in metres,
//! keeping `ħ` explicit (`ħ = l_P²`). It has no temperature scale, so any
//! dimension with a temperature exponent is rejected there.

use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{finite, Error, Result};

/// CODATA 2018 values in SI units.
pub mod codata {
    /// Table revision; bump when any value below changes.
    pub const TABLE_VERSION: &str = "CODATA-2018";

    pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
    pub const GRAVITATIONAL_CONSTANT: f64 = 6.674_30e-11;
    pub const REDUCED_PLANCK: f64 = 1.054_571_817e-34;
    pub const BOLTZMANN: f64 = 1.380_649e-23;
    /// Nominal solar mass in kg.
    pub const SOLAR_MASS: f64 = 1.988_47e30;
}

/// Planck length in metres, `√(ħG/c³)`.
pub fn planck_length() -> f64 {
    (codata::REDUCED_PLANCK * codata::GRAVITATIONAL_CONSTANT / codata::SPEED_OF_LIGHT.powi(3)).sqrt()
}

/// Planck time in seconds, `l_P / c`.
pub fn planck_time() -> f64 {
    planck_length() / codata::SPEED_OF_LIGHT
}

/// Planck mass in kilograms, `√(ħc/G)`.
pub fn planck_mass() -> f64 {
    (codata::REDUCED_PLANCK * codata::SPEED_OF_LIGHT / codata::GRAVITATIONAL_CONSTANT).sqrt()
}

/// Planck temperature in kelvin, `m_P c² / k_B`.
pub fn planck_temperature() -> f64 {
    planck_mass() * codata::SPEED_OF_LIGHT.powi(2) / codata::BOLTZMANN
}

/// Exponents over (length, time, mass, temperature).
///
/// Exponents are stored doubled so that half-integer powers (square roots of
/// powers, for instance) stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    halves: [i8; 4],
}

impl Dimension {
    pub const fn new(length: i8, time: i8, mass: i8, temperature: i8) -> Self {
        Dimension {
            halves: [2 * length, 2 * time, 2 * mass, 2 * temperature],
        }
    }

    pub const DIMENSIONLESS: Dimension = Dimension::new(0, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::new(1, 0, 0, 0);
    pub const AREA: Dimension = Dimension::new(2, 0, 0, 0);
    pub const TIME: Dimension = Dimension::new(0, 1, 0, 0);
    pub const MASS: Dimension = Dimension::new(0, 0, 1, 0);
    pub const TEMPERATURE: Dimension = Dimension::new(0, 0, 0, 1);
    pub const VELOCITY: Dimension = Dimension::new(1, -1, 0, 0);
    pub const ENERGY: Dimension = Dimension::new(2, -2, 1, 0);
    pub const POWER: Dimension = Dimension::new(2, -3, 1, 0);
    pub const ENERGY_FLUX: Dimension = Dimension::new(0, -3, 1, 0);
    pub const ACTION: Dimension = Dimension::new(2, -1, 1, 0);
    /// Entropy or information per unit time.
    pub const RATE: Dimension = Dimension::new(0, -1, 0, 0);
    pub const WAVENUMBER: Dimension = Dimension::new(-1, 0, 0, 0);
    pub const GRAVITATIONAL: Dimension = Dimension::new(3, -2, -1, 0);
    pub const HEAT_CAPACITY: Dimension = Dimension::new(2, -2, 1, -1);

    /// Exponents as reals, in (length, time, mass, temperature) order.
    pub fn exponents(&self) -> [f64; 4] {
        self.halves.map(|h| f64::from(h) / 2.0)
    }

    pub fn is_dimensionless(&self) -> bool {
        self.halves == [0; 4]
    }

    pub fn powi(self, n: i32) -> Dimension {
        Dimension {
            halves: self.halves.map(|h| (i32::from(h) * n) as i8),
        }
    }

    /// `k`-th root; fails when an exponent would leave the half-integer lattice.
    pub fn root(self, k: i32) -> Result<Dimension> {
        if k <= 0 {
            return Err(Error::range("root order", format!("must be ≥ 1, got {k}")));
        }
        let mut halves = [0i8; 4];
        for (out, h) in halves.iter_mut().zip(self.halves) {
            let h = i32::from(h);
            if h % k != 0 {
                return Err(Error::range(
                    "dimension root",
                    format!("{self} has no exact root of order {k}"),
                ));
            }
            *out = (h / k) as i8;
        }
        Ok(Dimension { halves })
    }

    /// Combined length exponent once `c` and `G` are set to one.
    fn geometrized_length_power(&self) -> f64 {
        let [l, t, m, _] = self.exponents();
        l + t + m
    }

    /// Equivalent under `c = k_B = 1`: mass, energy and temperature collapse
    /// into one class, and so do length and time.
    fn equivalent(self, other: Dimension) -> bool {
        self == other || self.natural_class() == other.natural_class()
    }

    fn natural_class(self) -> Option<u8> {
        match self {
            d if d == Self::MASS || d == Self::ENERGY || d == Self::TEMPERATURE => Some(0),
            d if d == Self::LENGTH || d == Self::TIME => Some(1),
            _ => None,
        }
    }
}

impl Mul for Dimension {
    type Output = Dimension;
    // Exponents add under multiplication.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Dimension) -> Dimension {
        let mut halves = self.halves;
        for (h, r) in halves.iter_mut().zip(rhs.halves) {
            *h += r;
        }
        Dimension { halves }
    }
}

impl Div for Dimension {
    type Output = Dimension;
    fn div(self, rhs: Dimension) -> Dimension {
        self * rhs.powi(-1)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("dimensionless");
        }
        let mut first = true;
        for (sym, e) in ["L", "T", "M", "Θ"].iter().zip(self.exponents()) {
            if e == 0.0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1.0 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    Si,
    #[serde(rename = "geo")]
    Geometrized,
    Planck,
}

impl fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitSystem::Si => "si",
            UnitSystem::Geometrized => "geo",
            UnitSystem::Planck => "planck",
        })
    }
}

impl FromStr for UnitSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "si" => Ok(UnitSystem::Si),
            "geo" | "geometrized" => Ok(UnitSystem::Geometrized),
            "planck" => Ok(UnitSystem::Planck),
            other => Err(Error::Parse(format!("unknown unit system `{other}`"))),
        }
    }
}

impl UnitSystem {
    /// Size of one internal (Planck) unit of `dim`, expressed in this system.
    fn scale(self, dim: Dimension) -> Result<f64> {
        let [l, t, m, th] = dim.exponents();
        match self {
            UnitSystem::Planck => Ok(1.0),
            UnitSystem::Si => Ok(planck_length().powf(l)
                * planck_time().powf(t)
                * planck_mass().powf(m)
                * planck_temperature().powf(th)),
            UnitSystem::Geometrized => {
                if th != 0.0 {
                    return Err(Error::NotExpressible {
                        dimension: dim,
                        system: self,
                    });
                }
                Ok(planck_length().powf(dim.geometrized_length_power()))
            }
        }
    }
}

/// A value in Planck units tagged with its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quantity {
    value: f64,
    dimension: Dimension,
}

impl Quantity {
    /// Builds a quantity directly from a Planck-unit value.
    ///
    /// # Panics
    /// If `value` is not finite.
    pub fn planck(value: f64, dimension: Dimension) -> Self {
        assert!(value.is_finite(), "Quantity value must be finite, got {value}");
        Quantity { value, dimension }
    }

    pub fn dimensionless(value: f64) -> Self {
        Quantity::planck(value, Dimension::DIMENSIONLESS)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    /// The Planck-unit value, provided the dimension matches `expected`.
    ///
    /// Mass, energy and temperature are interchangeable here, as are length
    /// and time, since `c = k_B = 1` makes them numerically identical.
    pub fn expect(&self, expected: Dimension) -> Result<f64> {
        if self.dimension.equivalent(expected) {
            Ok(self.value)
        } else {
            Err(Error::DimensionMismatch {
                expected,
                found: self.dimension,
            })
        }
    }

    /// Relabels the dimension within its `c = k_B = 1` equivalence class.
    pub fn reinterpret(self, target: Dimension) -> Result<Quantity> {
        let value = self.expect(target)?;
        Ok(Quantity {
            value,
            dimension: target,
        })
    }

    pub fn checked_add(self, rhs: Quantity) -> Result<Quantity> {
        if self.dimension != rhs.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: rhs.dimension,
            });
        }
        Ok(Quantity {
            value: self.value + rhs.value,
            dimension: self.dimension,
        })
    }

    pub fn checked_sub(self, rhs: Quantity) -> Result<Quantity> {
        self.checked_add(rhs * -1.0)
    }

    pub fn powi(self, n: i32) -> Quantity {
        Quantity {
            value: self.value.powi(n),
            dimension: self.dimension.powi(n),
        }
    }

    pub fn sqrt(self) -> Result<Quantity> {
        self.root(2)
    }

    pub fn root(self, k: i32) -> Result<Quantity> {
        let dimension = self.dimension.root(k)?;
        Ok(Quantity {
            value: self.value.powf(1.0 / f64::from(k)),
            dimension,
        })
    }
}

impl Mul for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity {
            value: self.value * rhs.value,
            dimension: self.dimension * rhs.dimension,
        }
    }
}

impl Div for Quantity {
    type Output = Quantity;
    fn div(self, rhs: Quantity) -> Quantity {
        Quantity {
            value: self.value / rhs.value,
            dimension: self.dimension / rhs.dimension,
        }
    }
}

impl Mul<f64> for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: f64) -> Quantity {
        Quantity {
            value: self.value * rhs,
            dimension: self.dimension,
        }
    }
}

impl Mul<Quantity> for f64 {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        rhs * self
    }
}

impl Div<f64> for Quantity {
    type Output = Quantity;
    fn div(self, rhs: f64) -> Quantity {
        Quantity {
            value: self.value / rhs,
            dimension: self.dimension,
        }
    }
}

/// Converts an external value into an internal [`Quantity`].
pub fn to_internal(value: f64, dimension: Dimension, system: UnitSystem) -> Result<Quantity> {
    finite("value", value)?;
    let internal = value / system.scale(dimension)?;
    finite("converted value", internal)?;
    Ok(Quantity {
        value: internal,
        dimension,
    })
}

/// Expresses `q` in `system`.
pub fn from_internal(q: Quantity, system: UnitSystem) -> Result<f64> {
    Ok(q.value * system.scale(q.dimension)?)
}

/// Looks up a constant by name. Dimensionful constants come back in Planck
/// units, where `ħ`, `c`, `G` and `k_B` are all one.
pub fn constant(name: &str) -> Result<Quantity> {
    let q = match name {
        "hbar" | "ħ" => Quantity::planck(1.0, Dimension::ACTION),
        "c" => Quantity::planck(1.0, Dimension::VELOCITY),
        "G" => Quantity::planck(1.0, Dimension::GRAVITATIONAL),
        "k_B" | "kB" => Quantity::planck(1.0, Dimension::HEAT_CAPACITY),
        "log2e" | "log₂e" => Quantity::dimensionless(std::f64::consts::LOG2_E),
        "planck_length" => Quantity::planck(1.0, Dimension::LENGTH),
        "planck_time" => Quantity::planck(1.0, Dimension::TIME),
        "planck_mass" => Quantity::planck(1.0, Dimension::MASS),
        "planck_temperature" => Quantity::planck(1.0, Dimension::TEMPERATURE),
        "solar_mass" => to_internal(codata::SOLAR_MASS, Dimension::MASS, UnitSystem::Si)?,
        other => return Err(Error::UnknownConstant(other.to_string())),
    };
    Ok(q)
}

/// Human-readable unit for `dim` in `system`, e.g. `W` or `m^2`.
pub fn unit_label(dim: Dimension, system: UnitSystem) -> String {
    if dim.is_dimensionless() {
        return String::new();
    }
    match system {
        UnitSystem::Si => {
            let named = [
                (Dimension::LENGTH, "m"),
                (Dimension::AREA, "m^2"),
                (Dimension::TIME, "s"),
                (Dimension::MASS, "kg"),
                (Dimension::TEMPERATURE, "K"),
                (Dimension::ENERGY, "J"),
                (Dimension::POWER, "W"),
                (Dimension::RATE, "s^-1"),
                (Dimension::VELOCITY, "m/s"),
                (Dimension::ACTION, "J s"),
                (Dimension::ENERGY_FLUX, "W/m^2"),
                (Dimension::WAVENUMBER, "m^-1"),
            ];
            if let Some((_, label)) = named.iter().find(|(d, _)| *d == dim) {
                return (*label).to_string();
            }
            compose(dim, ["m", "s", "kg", "K"])
        }
        UnitSystem::Geometrized => {
            let p = dim.geometrized_length_power();
            if p == 1.0 {
                "m".into()
            } else if p == 0.0 {
                String::new()
            } else {
                format!("m^{p}")
            }
        }
        UnitSystem::Planck => compose(dim, ["l_P", "t_P", "m_P", "T_P"]),
    }
}

fn compose(dim: Dimension, symbols: [&str; 4]) -> String {
    symbols
        .iter()
        .zip(dim.exponents())
        .filter(|(_, e)| *e != 0.0)
        .map(|(s, e)| if e == 1.0 { (*s).to_string() } else { format!("{s}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn planck_scales_match_codata() {
        assert!(rel(planck_length(), 1.616_255e-35) < 1e-6);
        assert!(rel(planck_time(), 5.391_247e-44) < 1e-6);
        assert!(rel(planck_mass(), 2.176_434e-8) < 1e-6);
        assert!(rel(planck_temperature(), 1.416_784e32) < 1e-6);
    }

    #[test]
    fn identity_in_planck_units() {
        let q = to_internal(1.0, Dimension::LENGTH, UnitSystem::Planck).unwrap();
        assert_eq!(q, Quantity::planck(1.0, Dimension::LENGTH));
    }

    #[test]
    fn centimetre_and_kilogram() {
        let cm = to_internal(0.01, Dimension::LENGTH, UnitSystem::Si).unwrap();
        assert!(rel(cm.value(), 0.01 / 1.616_255e-35) < 1e-6);
        assert!(rel(cm.value(), 6.19e32) < 1e-3);
        let kg = to_internal(1.0, Dimension::MASS, UnitSystem::Si).unwrap();
        assert!(rel(kg.value(), 1.0 / 2.176_434e-8) < 1e-6);
        assert!(rel(kg.value(), 4.595e7) < 1e-3);
    }

    #[test]
    fn planck_length_back_to_si() {
        let si = from_internal(Quantity::planck(1.0, Dimension::LENGTH), UnitSystem::Si).unwrap();
        assert!(rel(si, 1.616e-35) < 1e-3);
    }

    #[test]
    fn geometrized_mass_equals_length() {
        let m = from_internal(Quantity::planck(2.0, Dimension::MASS), UnitSystem::Geometrized).unwrap();
        let l = from_internal(Quantity::planck(2.0, Dimension::LENGTH), UnitSystem::Geometrized).unwrap();
        assert_eq!(m, l);
        assert!(rel(m / planck_length(), 2.0) < 1e-15);
        // One kilogram is G/c² metres.
        let kg = to_internal(1.0, Dimension::MASS, UnitSystem::Si).unwrap();
        let metres = from_internal(kg, UnitSystem::Geometrized).unwrap();
        let expected = codata::GRAVITATIONAL_CONSTANT / codata::SPEED_OF_LIGHT.powi(2);
        assert!(rel(metres, expected) < 1e-12);
    }

    #[test]
    fn geometrized_rejects_temperature() {
        let t = Quantity::planck(1.0, Dimension::TEMPERATURE);
        assert!(matches!(
            from_internal(t, UnitSystem::Geometrized),
            Err(Error::NotExpressible { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(
            to_internal(f64::NAN, Dimension::LENGTH, UnitSystem::Si),
            Err(Error::NonFinite("value"))
        );
        assert!(to_internal(f64::INFINITY, Dimension::MASS, UnitSystem::Planck).is_err());
    }

    #[test]
    fn constants() {
        assert_eq!(constant("hbar").unwrap().value(), 1.0);
        assert_eq!(constant("c").unwrap().value(), 1.0);
        assert!((constant("log2e").unwrap().value() - 1.0 / std::f64::consts::LN_2).abs() < 1e-15);
        assert!(matches!(constant("planck_charge"), Err(Error::UnknownConstant(_))));
        let hbar_si = from_internal(constant("hbar").unwrap(), UnitSystem::Si).unwrap();
        assert!(rel(hbar_si, codata::REDUCED_PLANCK) < 1e-14);
        let g_si = from_internal(constant("G").unwrap(), UnitSystem::Si).unwrap();
        assert!(rel(g_si, codata::GRAVITATIONAL_CONSTANT) < 1e-14);
        let kb_si = from_internal(constant("k_B").unwrap(), UnitSystem::Si).unwrap();
        assert!(rel(kb_si, codata::BOLTZMANN) < 1e-14);
    }

    #[test]
    fn dimensional_algebra() {
        let e = Quantity::planck(2.0, Dimension::ENERGY);
        let t = Quantity::planck(3.0, Dimension::TIME);
        assert_eq!((e / t).dimension(), Dimension::POWER);
        assert_eq!((e * t).dimension(), Dimension::ACTION);
        assert!(e.checked_add(t).is_err());
        assert_eq!(e.checked_add(e).unwrap().value(), 4.0);
        let p = Quantity::planck(4.0, Dimension::POWER);
        let root = p.sqrt().unwrap();
        assert_eq!(root.value(), 2.0);
        assert_eq!(root.dimension().exponents(), [1.0, -1.5, 0.5, 0.0]);
        assert!(root.root(2).is_err());
        assert_eq!(root.powi(2).dimension(), Dimension::POWER);
    }

    #[test]
    fn expect_allows_natural_equivalences() {
        let m = Quantity::planck(1.5, Dimension::MASS);
        assert_eq!(m.expect(Dimension::ENERGY).unwrap(), 1.5);
        assert_eq!(m.expect(Dimension::TEMPERATURE).unwrap(), 1.5);
        assert!(m.expect(Dimension::LENGTH).is_err());
        let l = Quantity::planck(1.0, Dimension::LENGTH);
        assert!(l.expect(Dimension::TIME).is_ok());
    }

    #[test]
    fn labels() {
        assert_eq!(unit_label(Dimension::POWER, UnitSystem::Si), "W");
        assert_eq!(unit_label(Dimension::AREA, UnitSystem::Geometrized), "m^2");
        assert_eq!(unit_label(Dimension::ENERGY, UnitSystem::Planck), "l_P^2 t_P^-2 m_P");
        assert_eq!(unit_label(Dimension::DIMENSIONLESS, UnitSystem::Si), "");
        assert_eq!("GEO".parse::<UnitSystem>().unwrap(), UnitSystem::Geometrized);
    }
}
