//! Schwarzschild hole emission: Hawking temperature and entropy, far-field
//! flux, species-weighted power and entropy rates, channel counting and the
//! information-dumping law.

use std::f64::consts::{LOG2_E, PI};

use serde::Serialize;

use crate::bounds::{BoundKind, BoundResult};
use crate::channel::{blackbody_rate, pendry_rate, EmitterSpec, Statistics};
use crate::error::{positive, Error, Result};
use crate::units::{Dimension, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlackHole {
    mass: f64,
}

impl BlackHole {
    pub fn new(mass: Quantity) -> Result<Self> {
        Self::planck(mass.expect(Dimension::MASS)?)
    }

    pub fn planck(mass: f64) -> Result<Self> {
        positive("mass", mass)?;
        Ok(BlackHole { mass })
    }

    pub fn mass(&self) -> Quantity {
        Quantity::planck(self.mass, Dimension::MASS)
    }

    pub fn horizon_radius(&self) -> Quantity {
        Quantity::planck(2.0 * self.mass, Dimension::LENGTH)
    }

    pub fn horizon_area(&self) -> Quantity {
        let r = 2.0 * self.mass;
        Quantity::planck(4.0 * PI * r * r, Dimension::AREA)
    }
}

/// Irreversibility factor for a species with no tabulated value.
pub const DEFAULT_NU: f64 = 1.5;
/// Range of `ν` spanned by the tabulated species.
pub const NU_ENVELOPE: (f64, f64) = (1.35, 1.64);

/// Emission parameters of one massless species.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeciesEmission {
    pub name: String,
    pub statistics: Statistics,
    /// Emitted entropy over the reversible value `E/T_H`.
    pub nu: f64,
    /// Greybody correction to the black-body power.
    pub gamma_bar: f64,
    /// Contribution to the effective species count `𝒩`.
    pub n_weight: f64,
}

impl SpeciesEmission {
    pub fn new(
        name: impl Into<String>,
        statistics: Statistics,
        nu: f64,
        gamma_bar: f64,
        n_weight: f64,
    ) -> Result<Self> {
        if !(1.0..=2.0).contains(&nu) {
            return Err(Error::range("nu", format!("must lie in [1, 2], got {nu}")));
        }
        positive("gamma_bar", gamma_bar)?;
        positive("n_weight", n_weight)?;
        Ok(SpeciesEmission {
            name: name.into(),
            statistics,
            nu,
            gamma_bar,
            n_weight,
        })
    }

    /// One photon polarization.
    pub fn photon() -> Self {
        Self::new("photon", Statistics::Boson, 1.5003, 1.6267, 1.0).expect("tabulated")
    }

    /// One two-component neutrino species.
    pub fn neutrino() -> Self {
        Self::new("neutrino", Statistics::Fermion, 1.6391, 18.045, 7.0 / 16.0).expect("tabulated")
    }

    /// A species with given greybody factor and the default `ν`.
    pub fn generic(statistics: Statistics, gamma_bar: f64) -> Result<Self> {
        Self::new("generic", statistics, DEFAULT_NU, gamma_bar, 1.0)
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "photon" | "gamma" => Some(Self::photon()),
            "neutrino" | "nu" => Some(Self::neutrino()),
            _ => None,
        }
    }

    fn statistics_factor(&self) -> f64 {
        self.statistics.power_factor(3)
    }
}

/// `T_H = 1/(8πM)`.
pub fn hawking_temperature(bh: &BlackHole) -> Quantity {
    Quantity::planck(1.0 / (8.0 * PI * bh.mass), Dimension::TEMPERATURE)
}

/// Horizon entropy `A/4 = 4πM²`, written as `2πM · 2M` so it coincides
/// bit-for-bit with the universal bound at `E = M`, `R = 2M`.
pub fn bh_entropy(bh: &BlackHole) -> BoundResult {
    let m = bh.mass;
    let nats = 2.0 * PI * m * (2.0 * m);
    BoundResult {
        kind: BoundKind::BlackHole,
        nats,
        bits: nats * LOG2_E,
        saturated: None,
        warnings: Vec::new(),
    }
}

/// Far-field energy flux `𝒩/(61440π²M²r²)` at Schwarzschild radius `r`.
pub fn hawking_flux(r: Quantity, bh: &BlackHole, species_count: f64) -> Result<Quantity> {
    let r = positive("r", r.expect(Dimension::LENGTH)?)?;
    if r <= 2.0 * bh.mass {
        return Err(Error::range(
            "r",
            format!("must lie outside the horizon r > 2M = {:e}, got {r:e}", 2.0 * bh.mass),
        ));
    }
    positive("species count", species_count)?;
    Ok(flux_unchecked(r, bh.mass, species_count))
}

pub(crate) fn flux_unchecked(r: f64, m: f64, n: f64) -> Quantity {
    Quantity::planck(n / (61440.0 * (PI * m * r).powi(2)), Dimension::ENERGY_FLUX)
}

/// Total luminosity `4πr²F = 𝒩/(15360πM²)`.
pub fn luminosity(bh: &BlackHole, species_count: f64) -> Result<Quantity> {
    positive("species count", species_count)?;
    Ok(Quantity::planck(
        species_count / (15360.0 * PI * bh.mass * bh.mass),
        Dimension::POWER,
    ))
}

/// Greybody-corrected Stefan-Boltzmann power emitted in one species,
/// `Γ̄ f /(30720πM²)` with `f = 7/8` for fermions.
pub fn emission_power(bh: &BlackHole, species: &SpeciesEmission) -> Result<Quantity> {
    let t = hawking_temperature(bh).value();
    let e = EmitterSpec::planck(3, bh.horizon_area().value(), t)?;
    let bb = blackbody_rate(&e, species.statistics)?;
    Ok(bb.power * species.gamma_bar)
}

/// `ν P / T_H = 8πMνP`.
pub fn emission_entropy_rate(bh: &BlackHole, species: &SpeciesEmission) -> Result<Quantity> {
    let p = emission_power(bh, species)?.value();
    let t = hawking_temperature(bh).value();
    Ok(Quantity::planck(species.nu * p / t, Dimension::RATE))
}

/// Entropy rate of a hole emitting power `P` in one species, with the mass
/// eliminated: `(ν²Γ̄fπP/480)^{1/2}`.
pub fn bh_rate_vs_power(power: Quantity, species: &SpeciesEmission) -> Result<Quantity> {
    let p = positive("power", power.expect(Dimension::POWER)?)?;
    let nu = species.nu;
    let s = (nu * nu * species.gamma_bar * species.statistics_factor() * PI * p / 480.0).sqrt();
    Ok(Quantity::planck(s, Dimension::RATE))
}

/// Coefficient of `√P` in [`bh_rate_vs_power`] over the one-channel
/// coefficient of the same statistics.
pub fn coefficient_ratio(species: &SpeciesEmission) -> f64 {
    let unit = Quantity::planck(1.0, Dimension::POWER);
    let hole = bh_rate_vs_power(unit, species).expect("unit power").value();
    let channel = pendry_rate(unit, species.statistics).expect("unit power").entropy_rate.value();
    hole / channel
}

/// Transmitter area, wave number and solid angle of a beam.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelCountSpec {
    area: f64,
    wavenumber: f64,
    solid_angle: f64,
}

impl ChannelCountSpec {
    pub fn new(area: Quantity, wavenumber: Quantity, solid_angle: f64) -> Result<Self> {
        Self::planck(area.expect(Dimension::AREA)?, wavenumber.expect(Dimension::WAVENUMBER)?, solid_angle)
    }

    pub fn planck(area: f64, wavenumber: f64, solid_angle: f64) -> Result<Self> {
        positive("area", area)?;
        positive("wave number", wavenumber)?;
        positive("solid angle", solid_angle)?;
        if solid_angle > 4.0 * PI {
            return Err(Error::range("solid angle", format!("must be ≤ 4π, got {solid_angle}")));
        }
        Ok(ChannelCountSpec {
            area,
            wavenumber,
            solid_angle,
        })
    }

    pub fn wavenumber(&self) -> f64 {
        self.wavenumber
    }
}

/// Number of active channels `𝒜k²ΔΩ/(2π)²`.
pub fn channel_count(c: &ChannelCountSpec) -> f64 {
    c.area * c.wavenumber * c.wavenumber * c.solid_angle / (4.0 * PI * PI)
}

/// Wave number below which quanta scatter off the hole instead of entering:
/// `2π/(2M)`.
pub fn borderline_wavenumber(bh: &BlackHole) -> f64 {
    2.0 * PI / (2.0 * bh.mass)
}

pub fn is_scattering_dominated(c: &ChannelCountSpec, bh: &BlackHole) -> bool {
    c.wavenumber < borderline_wavenumber(bh)
}

/// Smallest admissible transmitter distance, in units of `M`.
pub const MIN_DISTANCE_OVER_M: f64 = 20.0;

/// Channels into the hole from a transmitter of area `area` at distance `d`,
/// at the borderline wave number and the solid angle the hole subtends.
pub fn bh_channel_count(bh: &BlackHole, distance: Quantity, area: Quantity) -> Result<f64> {
    let d = positive("distance", distance.expect(Dimension::LENGTH)?)?;
    if d <= MIN_DISTANCE_OVER_M * bh.mass {
        return Err(Error::range(
            "distance",
            format!("must exceed {MIN_DISTANCE_OVER_M}M = {:e}, got {d:e}", MIN_DISTANCE_OVER_M * bh.mass),
        ));
    }
    let a = positive("area", area.expect(Dimension::AREA)?)?;
    if a > 4.0 * PI * d * d * (1.0 + 1e-15) {
        return Err(Error::range("area", "cannot exceed the sphere 4πd² around the hole"));
    }
    let r_h = 2.0 * bh.mass;
    let spec = ChannelCountSpec::planck(a, borderline_wavenumber(bh), PI * r_h * r_h / (d * d))?;
    Ok(channel_count(&spec))
}

/// Supremum of [`bh_channel_count`] over transmitter areas: `4π²`.
pub fn bh_channel_bound(bh: &BlackHole, distance: Quantity) -> Result<f64> {
    let d = distance.expect(Dimension::LENGTH)?;
    bh_channel_count(bh, distance, Quantity::planck(4.0 * PI * d * d, Dimension::AREA))
}

/// Information rate, in bits per unit time, of `channels` parallel channels
/// sharing power `P` each.
pub fn dump_rate(power: Quantity, channels: f64) -> Result<Quantity> {
    check_channels(channels)?;
    let one = pendry_rate(power, Statistics::Boson)?.info_rate;
    Ok(one * channels)
}

/// Inverse of [`dump_rate`]: the power needed per channel for rate `İ`.
pub fn power_for_rate(info_rate: Quantity, channels: f64) -> Result<Quantity> {
    check_channels(channels)?;
    let i = positive("information rate", info_rate.expect(Dimension::RATE)?)?;
    let per = i / (channels * LOG2_E);
    Ok(Quantity::planck(3.0 / PI * per * per, Dimension::POWER))
}

fn check_channels(channels: f64) -> Result<()> {
    if !channels.is_finite() || channels < 1.0 {
        return Err(Error::range("channels", format!("must be ≥ 1, got {channels}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{universal_bound, SystemSpec};
    use crate::units::{codata, from_internal, to_internal, UnitSystem};

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn bh(m: f64) -> BlackHole {
        BlackHole::planck(m).unwrap()
    }

    fn len(x: f64) -> Quantity {
        Quantity::planck(x, Dimension::LENGTH)
    }

    fn power(p: f64) -> Quantity {
        Quantity::planck(p, Dimension::POWER)
    }

    #[test]
    fn temperature_examples() {
        assert!(rel(hawking_temperature(&bh(1.0 / (8.0 * PI))).value(), 1.0) < 1e-15);
        assert!((hawking_temperature(&bh(1.0)).value() - 0.039_789).abs() < 1e-6);
        let sun = BlackHole::new(to_internal(codata::SOLAR_MASS, Dimension::MASS, UnitSystem::Si).unwrap()).unwrap();
        let kelvin = from_internal(hawking_temperature(&sun), UnitSystem::Si).unwrap();
        // ħc³/(8πGMk_B) evaluated directly in SI.
        let oracle = codata::REDUCED_PLANCK * codata::SPEED_OF_LIGHT.powi(3)
            / (8.0 * PI * codata::GRAVITATIONAL_CONSTANT * codata::SOLAR_MASS * codata::BOLTZMANN);
        assert!(rel(kelvin, oracle) < 1e-12);
        assert!((kelvin - 6.17e-8).abs() < 0.01e-8);
        assert!(BlackHole::planck(0.0).is_err());
        assert!(BlackHole::new(len(1.0)).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert!(rel(bh_entropy(&bh(1.0)).nats, 4.0 * PI) < 1e-15);
        assert!(rel(bh_entropy(&bh(2.0)).nats, 4.0 * bh_entropy(&bh(1.0)).nats) < 1e-15);
        assert!(rel(bh_entropy(&bh(3.0)).nats, bh(3.0).horizon_area().value() / 4.0) < 1e-15);
        for m in [1e-3, 0.7, 1.0, 42.0, 1e38] {
            let s = universal_bound(&SystemSpec::planck(m, 2.0 * m, 3).unwrap());
            assert_eq!(bh_entropy(&bh(m)).nats, s.nats);
        }
    }

    #[test]
    fn flux_examples() {
        let f = flux_unchecked(1.0, 1.0, 1.0);
        assert!(rel(f.value(), 1.0 / (61440.0 * PI * PI)) < 1e-15);
        assert_eq!(f.dimension(), Dimension::ENERGY_FLUX);
        assert!(hawking_flux(len(1.0), &bh(1.0), 1.0).is_err());
        assert!(hawking_flux(len(2.0), &bh(1.0), 1.0).is_err());
        assert!(hawking_flux(len(3.0), &bh(1.0), 0.0).is_err());
        let b = bh(3.0);
        let l = luminosity(&b, 2.5).unwrap().value();
        for r in crate::numerics::logspace(6.01, 1e9, 40) {
            let f = hawking_flux(len(r), &b, 2.5).unwrap().value();
            assert!(rel(4.0 * PI * r * r * f, l) < 1e-13);
        }
        // Radiating energy E at this luminosity takes 15360πEM²/𝒩.
        let t = 1.0 / luminosity(&bh(1.0), 1.0).unwrap().value();
        assert!(rel(t, 15360.0 * PI) < 1e-15);
    }

    #[test]
    fn emission_power_examples() {
        let photon = SpeciesEmission::photon();
        let p = emission_power(&bh(1.0), &photon).unwrap();
        assert!(rel(p.value(), 1.6267 / (30720.0 * PI)) < 1e-13);
        assert_eq!(p.dimension(), Dimension::POWER);
        let unit_b = SpeciesEmission::new("b", Statistics::Boson, 1.0, 1.0, 1.0).unwrap();
        assert!(rel(emission_power(&bh(1.0), &unit_b).unwrap().value(), 1.0 / (30720.0 * PI)) < 1e-13);
        let unit_f = SpeciesEmission::new("f", Statistics::Fermion, 1.0, 1.0, 1.0).unwrap();
        assert!(rel(emission_power(&bh(1.0), &unit_f).unwrap().value(), 0.875 / (30720.0 * PI)) < 1e-13);
        for m in [1e-2, 3.0, 1e5] {
            let p = emission_power(&bh(m), &photon).unwrap().value();
            assert!(rel(p, 1.6267 / (30720.0 * PI * m * m)) < 1e-13);
        }
    }

    #[test]
    fn entropy_rate_examples() {
        let photon = SpeciesEmission::photon();
        let s = emission_entropy_rate(&bh(1.0), &photon).unwrap().value();
        assert!(rel(s, 1.5003 * 1.6267 / 3840.0) < 1e-13);
        let rev = SpeciesEmission::new("r", Statistics::Boson, 1.0, 1.0, 1.0).unwrap();
        let b = bh(2.0);
        let p = emission_power(&b, &rev).unwrap().value();
        let t = hawking_temperature(&b).value();
        assert!(rel(emission_entropy_rate(&b, &rev).unwrap().value(), p / t) < 1e-15);
        let s10 = emission_entropy_rate(&bh(10.0), &photon).unwrap().value();
        assert!(rel(s10 * 10.0, s) < 1e-13);
    }

    #[test]
    fn rate_vs_power_examples() {
        let unit = SpeciesEmission::new("u", Statistics::Boson, 1.0, 1.0, 1.0).unwrap();
        assert!(rel(bh_rate_vs_power(power(480.0 / PI), &unit).unwrap().value(), 1.0) < 1e-15);
        let photon = SpeciesEmission::photon();
        let coeff = bh_rate_vs_power(power(1.0), &photon).unwrap().value();
        assert!((coeff - 0.1548).abs() < 5e-5);
        for m in crate::numerics::logspace(1e-2, 1e4, 30) {
            for sp in [SpeciesEmission::photon(), SpeciesEmission::neutrino()] {
                let p = emission_power(&bh(m), &sp).unwrap();
                let via = bh_rate_vs_power(p, &sp).unwrap().value();
                let direct = emission_entropy_rate(&bh(m), &sp).unwrap().value();
                assert!(rel(via, direct) < 1e-10);
            }
        }
        assert!(bh_rate_vs_power(power(0.0), &photon).is_err());
    }

    #[test]
    fn coefficient_ratio_examples() {
        let photon = coefficient_ratio(&SpeciesEmission::photon());
        assert!(rel(photon, (1.5003f64.powi(2) * 1.6267 / 160.0).sqrt()) < 1e-14);
        assert!((photon - 0.1513).abs() < 5e-5);
        let nu = coefficient_ratio(&SpeciesEmission::neutrino());
        assert!(rel(nu, (6.0 * 1.6391f64.powi(2) * 18.045 * 0.875 / 480.0).sqrt()) < 1e-14);
        assert!((nu - 0.728).abs() < 5e-4);
        let norm = SpeciesEmission::new("n", Statistics::Boson, 1.0, 160.0, 1.0).unwrap();
        assert!(rel(coefficient_ratio(&norm), 1.0) < 1e-14);
    }

    #[test]
    fn species_validation() {
        assert!(SpeciesEmission::new("x", Statistics::Boson, 0.9, 1.0, 1.0).is_err());
        assert!(SpeciesEmission::new("x", Statistics::Boson, 1.5, 0.0, 1.0).is_err());
        assert!(SpeciesEmission::new("x", Statistics::Boson, 1.5, 1.0, -1.0).is_err());
        let (lo, hi) = NU_ENVELOPE;
        assert!((lo..=hi).contains(&DEFAULT_NU));
        for s in [SpeciesEmission::photon(), SpeciesEmission::neutrino()] {
            assert!((lo..=hi).contains(&s.nu));
        }
        assert_eq!(SpeciesEmission::neutrino().n_weight, 7.0 / 16.0);
        assert!(SpeciesEmission::by_name("Photon").is_some());
        assert!(SpeciesEmission::by_name("graviton").is_none());
    }

    #[test]
    fn channel_count_examples() {
        let unit = ChannelCountSpec::planck(4.0 * PI * PI, 1.0, 1.0).unwrap();
        assert!(rel(channel_count(&unit), 1.0) < 1e-15);
        for (m, d) in [(1.0, 50.0), (7.0, 3e4)] {
            let c = ChannelCountSpec::planck(4.0 * PI * d * d, PI / m, 4.0 * PI * m * m / (d * d)).unwrap();
            assert!(rel(channel_count(&c), 4.0 * PI * PI) < 1e-13);
        }
        let full = ChannelCountSpec::planck(10.0, 2.0, 0.5).unwrap();
        let half = ChannelCountSpec::planck(5.0, 2.0, 0.5).unwrap();
        assert!(rel(channel_count(&half), channel_count(&full) / 2.0) < 1e-15);
        assert!(ChannelCountSpec::planck(1.0, 1.0, 4.0 * PI + 1e-9).is_err());
        assert!(ChannelCountSpec::planck(1.0, 0.0, 1.0).is_err());
        assert!(is_scattering_dominated(&ChannelCountSpec::planck(1.0, 1.0, 1.0).unwrap(), &bh(1.0)));
        assert!(!is_scattering_dominated(&ChannelCountSpec::planck(1.0, 4.0, 1.0).unwrap(), &bh(1.0)));
    }

    #[test]
    fn channel_bound_examples() {
        let cap = 4.0 * PI * PI;
        assert!(rel(bh_channel_bound(&bh(1.0), len(100.0)).unwrap(), cap) < 1e-12);
        assert!((bh_channel_bound(&bh(1.0), len(100.0)).unwrap() - 39.48).abs() < 5e-3);
        assert!(rel(bh_channel_bound(&bh(1e3), len(1e5)).unwrap(), cap) < 1e-12);
        let half = bh_channel_count(&bh(1.0), len(100.0), Quantity::planck(2.0 * PI * 1e4, Dimension::AREA)).unwrap();
        assert!(rel(half, 2.0 * PI * PI) < 1e-12);
        assert!(bh_channel_bound(&bh(1.0), len(20.0)).is_err());
        assert!(bh_channel_count(&bh(1.0), len(100.0), Quantity::planck(1e6, Dimension::AREA)).is_err());
    }

    #[test]
    fn dump_examples() {
        let one = dump_rate(power(3.0 / PI), 1.0).unwrap();
        assert!(rel(one.value(), LOG2_E) < 1e-15);
        let p = power_for_rate(Quantity::planck(2.0, Dimension::RATE), 3.0).unwrap();
        let p2 = power_for_rate(Quantity::planck(4.0, Dimension::RATE), 3.0).unwrap();
        assert!(rel(p2.value(), 4.0 * p.value()) < 1e-15);
        assert!(rel(dump_rate(p, 3.0).unwrap().value(), 2.0) < 1e-14);
        let cap = 4.0 * PI * PI;
        assert!(rel(dump_rate(power(1.0), cap).unwrap().value(), cap * dump_rate(power(1.0), 1.0).unwrap().value()) < 1e-15);
        assert!(dump_rate(power(1.0), 0.5).is_err());
        assert!(dump_rate(power(0.0), 1.0).is_err());
    }
}
