//! The drop-into-a-hole thought experiment behind the poor-man's bound.
//!
//! A system of energy `E` and radius `R` is lowered from far away into a hole
//! of mass `M = ζR`. The audit checks that the hole's Hawking radiation cannot
//! carry the system's energy off before it falls in, and that radiation
//! pressure is negligible against gravity along the way.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bounds::POOR_MAN_NU_RANGE;
use crate::error::{positive, Error, Result};
use crate::units::{Dimension, Quantity};

pub const DEFAULT_ZETA: f64 = 5.0;
pub const ZETA_RANGE: (f64, f64) = (1.0, 10.0);
pub const MAX_SPECIES: f64 = 100.0;
pub const MIN_DISTANCE_OVER_M: f64 = 57.0;
pub const MAX_FORCE_RATIO: f64 = 1e-2;

/// Time for luminosity `𝒩/(15360πM²)` to radiate energy `E`.
pub fn radiation_time(energy: Quantity, mass: Quantity, species_count: f64) -> Result<Quantity> {
    let e = positive("energy", energy.expect(Dimension::ENERGY)?)?;
    let m = positive("mass", mass.expect(Dimension::MASS)?)?;
    let n = positive("species count", species_count)?;
    Ok(Quantity::planck(15360.0 * PI * e * m * m / n, Dimension::TIME))
}

/// Distance from which Newtonian free fall from rest reaches `r = 0` in time `t`:
/// `2(t²M/π²)^{1/3}`.
pub fn infall_distance(time: Quantity, mass: Quantity) -> Result<Quantity> {
    let t = positive("time", time.expect(Dimension::TIME)?)?;
    let m = positive("mass", mass.expect(Dimension::MASS)?)?;
    Ok(Quantity::planck(2.0 * (t * t * m / (PI * PI)).cbrt(), Dimension::LENGTH))
}

/// Radiation-pressure force over gravity on the falling system,
/// `N_eff R²/(61440π²M³E)`.
pub fn force_ratio(mass: Quantity, energy: Quantity, radius: Quantity, n_eff: f64) -> Result<f64> {
    let m = positive("mass", mass.expect(Dimension::MASS)?)?;
    let e = positive("energy", energy.expect(Dimension::ENERGY)?)?;
    let r = positive("radius", radius.expect(Dimension::LENGTH)?)?;
    let n = positive("N_eff", n_eff)?;
    Ok(n * r * r / (61440.0 * PI * PI * m.powi(3) * e))
}

/// Largest effective species count, `8πME`, a system can present to the flux.
pub fn n_eff_cap(mass: f64, energy: f64) -> f64 {
    8.0 * PI * mass * energy
}

/// Entropy change outside the hole when the system of entropy `S` falls in
/// and the added mass `E` is re-emitted: `νE/T_H − S = 8πνME − S`.
pub fn net_entropy_change(s_system: f64, energy: Quantity, mass: Quantity, nu: f64) -> Result<f64> {
    let e = positive("energy", energy.expect(Dimension::ENERGY)?)?;
    let m = positive("mass", mass.expect(Dimension::MASS)?)?;
    let (lo, hi) = POOR_MAN_NU_RANGE;
    if !(lo..=hi).contains(&nu) {
        return Err(Error::range("nu", format!("must lie in [{lo}, {hi}], got {nu}")));
    }
    crate::error::finite("system entropy", s_system)?;
    Ok(8.0 * PI * nu * m * e - s_system)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GedankenConfig {
    energy: f64,
    radius: f64,
    zeta: f64,
    species_count: f64,
    n_eff: Option<f64>,
}

impl GedankenConfig {
    pub fn new(energy: Quantity, radius: Quantity, zeta: f64, species_count: f64) -> Result<Self> {
        Self::planck(
            energy.expect(Dimension::ENERGY)?,
            radius.expect(Dimension::LENGTH)?,
            zeta,
            species_count,
        )
    }

    pub fn planck(energy: f64, radius: f64, zeta: f64, species_count: f64) -> Result<Self> {
        positive("energy", energy)?;
        positive("radius", radius)?;
        let (lo, hi) = ZETA_RANGE;
        if !(lo..=hi).contains(&zeta) {
            return Err(Error::range("zeta", format!("must lie in [{lo}, {hi}], got {zeta}")));
        }
        positive("species count", species_count)?;
        Ok(GedankenConfig {
            energy,
            radius,
            zeta,
            species_count,
            n_eff: None,
        })
    }

    /// Uses an explicit effective species count for the pressure estimate
    /// instead of its cap.
    pub fn with_n_eff(mut self, n_eff: f64) -> Result<Self> {
        self.n_eff = Some(positive("N_eff", n_eff)?);
        Ok(self)
    }

    pub fn mass(&self) -> f64 {
        self.zeta * self.radius
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Flag {
    pub name: &'static str,
    pub condition: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub mass: f64,
    pub hawking_temperature: f64,
    pub radiation_time: f64,
    pub distance: f64,
    pub distance_over_mass: f64,
    /// Pressure ratio with `N_eff` at its cap `8πME`.
    pub force_ratio_at_cap: f64,
    /// Pressure ratio for the configured `N_eff`, if one was given.
    pub force_ratio: Option<f64>,
    pub n_eff_cap: f64,
    pub flags: Vec<Flag>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.flags.iter().all(|f| f.satisfied)
    }

    pub fn flag(&self, name: &str) -> Option<&Flag> {
        self.flags.iter().find(|f| f.name == name)
    }
}

pub fn audit(cfg: &GedankenConfig) -> Result<AuditReport> {
    let m = cfg.mass();
    let mass = Quantity::planck(m, Dimension::MASS);
    let energy = Quantity::planck(cfg.energy, Dimension::ENERGY);
    let radius = Quantity::planck(cfg.radius, Dimension::LENGTH);

    let t = radiation_time(energy, mass, cfg.species_count)?;
    let d = infall_distance(t, mass)?.value();
    let cap = n_eff_cap(m, cfg.energy);
    let at_cap = force_ratio(mass, energy, radius, cap)?;
    let given = cfg.n_eff.map(|n| force_ratio(mass, energy, radius, n)).transpose()?;
    let worst_force = given.map_or(at_cap, |g| g.max(at_cap));

    let er = cfg.energy * cfg.radius;
    let mut flags = vec![
        Flag {
            name: "compton",
            condition: "ER ≥ ħ",
            value: er,
            threshold: 1.0,
            satisfied: er >= 1.0,
        },
        Flag {
            name: "species-count",
            condition: "𝒩 ≤ 100",
            value: cfg.species_count,
            threshold: MAX_SPECIES,
            satisfied: cfg.species_count <= MAX_SPECIES,
        },
        Flag {
            name: "drop-distance",
            condition: "d/M ≥ 57",
            value: d / m,
            threshold: MIN_DISTANCE_OVER_M,
            satisfied: d / m >= MIN_DISTANCE_OVER_M,
        },
        Flag {
            name: "radiation-pressure",
            condition: "f_rad/f_grav < 1e-2",
            value: worst_force,
            threshold: MAX_FORCE_RATIO,
            satisfied: worst_force < MAX_FORCE_RATIO,
        },
    ];
    if let Some(n) = cfg.n_eff {
        flags.push(Flag {
            name: "n-eff-cap",
            condition: "N_eff ≤ 8πME",
            value: n,
            threshold: cap,
            satisfied: n <= cap,
        });
    }

    Ok(AuditReport {
        mass: m,
        hawking_temperature: 1.0 / (8.0 * PI * m),
        radiation_time: t.value(),
        distance: d,
        distance_over_mass: d / m,
        force_ratio_at_cap: at_cap,
        force_ratio: given,
        n_eff_cap: cap,
        flags,
    })
}

/// `d/M` in the least favourable admissible case `ζ = 1`, `ER = ħ`, `𝒩 = 100`.
pub fn worst_case_distance_over_mass() -> f64 {
    2.0 * 15360f64.powf(2.0 / 3.0) / MAX_SPECIES.powf(2.0 / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{poor_man_bound, SystemSpec};
    use crate::numerics::integrate;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn e(x: f64) -> Quantity {
        Quantity::planck(x, Dimension::ENERGY)
    }
    fn m(x: f64) -> Quantity {
        Quantity::planck(x, Dimension::MASS)
    }
    fn r(x: f64) -> Quantity {
        Quantity::planck(x, Dimension::LENGTH)
    }
    fn t(x: f64) -> Quantity {
        Quantity::planck(x, Dimension::TIME)
    }

    #[test]
    fn radiation_time_examples() {
        let t1 = radiation_time(e(1.0), m(1.0), 1.0).unwrap().value();
        assert!(rel(t1, 15360.0 * PI) < 1e-15);
        assert!(rel(t1, 4.826e4) < 1e-3);
        let ratio = 15360.0 * PI / 5e4;
        assert!((0.96..=1.0).contains(&ratio));
        let t3 = radiation_time(e(1.0), m(3.0), 1.0).unwrap().value();
        assert!(rel(t3, 9.0 * t1) < 1e-15);
        assert!(radiation_time(e(0.0), m(1.0), 1.0).is_err());
        assert!(radiation_time(e(1.0), m(1.0), -1.0).is_err());
    }

    /// Newtonian fall time from rest at `d`, by quadrature of
    /// `dr/√(2M(1/r − 1/d))` after `r = d sin²θ`.
    fn fall_time(d: f64, mass: f64) -> f64 {
        let q = integrate(|th: f64| 2.0 * th.sin().powi(2), 0.0, PI / 2.0, 1e-14).unwrap();
        (d.powi(3) / (2.0 * mass)).sqrt() * q.value
    }

    #[test]
    fn infall_round_trip() {
        let d = infall_distance(t(PI / 2.0 * 2f64.sqrt()), m(1.0)).unwrap().value();
        assert!(rel(fall_time(d, 1.0), PI / 2.0 * 2f64.sqrt()) < 1e-9);
        for (tt, mm) in [(1e3, 2.0), (5e7, 1e3), (0.3, 1e-2)] {
            let d = infall_distance(t(tt), m(mm)).unwrap().value();
            assert!(rel(fall_time(d, mm), tt) < 1e-9);
        }
        let d1 = infall_distance(t(10.0), m(1.0)).unwrap().value();
        let d8 = infall_distance(t(80.0), m(1.0)).unwrap().value();
        assert!(rel(d8, 4.0 * d1) < 1e-14);
    }

    #[test]
    fn chain_formula() {
        let (energy, radius, zeta, n): (f64, f64, f64, f64) = (3.0, 7.0, 2.0, 5.0);
        let mass = zeta * radius;
        let tt = radiation_time(e(energy), m(mass), n).unwrap();
        let d = infall_distance(tt, m(mass)).unwrap().value();
        let chain = 2.0 * 15360f64.powf(2.0 / 3.0) * (zeta * energy * radius / n).powf(2.0 / 3.0) * mass;
        assert!(rel(d, chain) < 1e-12);
        assert!((2.0 * 15360f64.powf(2.0 / 3.0) - 1.236e3).abs() < 1.0);
    }

    #[test]
    fn force_ratio_examples() {
        let (mm, ee, rr) = (4.0, 0.3, 2.0);
        let cap = n_eff_cap(mm, ee);
        let at_cap = force_ratio(m(mm), e(ee), r(rr), cap).unwrap();
        assert!(rel(at_cap, rr * rr / (7680.0 * PI * mm * mm)) < 1e-14);
        let z3 = force_ratio(m(3.0 * rr), e(ee), r(rr), n_eff_cap(3.0 * rr, ee)).unwrap();
        assert!(z3 < 1.0 / (7680.0 * PI * 9.0) * (1.0 + 1e-12));
        let one = force_ratio(m(mm), e(ee), r(rr), 1.0).unwrap();
        assert!(rel(force_ratio(m(mm), e(ee), r(rr), 6.0).unwrap(), 6.0 * one) < 1e-15);
        assert!(force_ratio(m(mm), e(ee), r(rr), 0.0).is_err());
    }

    #[test]
    fn audit_worst_case() {
        let rep = audit(&GedankenConfig::planck(1.0, 1.0, 1.0, 100.0).unwrap()).unwrap();
        assert!(rel(rep.distance_over_mass, worst_case_distance_over_mass()) < 1e-12);
        assert!((rep.distance_over_mass - 57.4).abs() < 0.1);
        assert!(rep.all_pass(), "{:?}", rep.flags);
    }

    #[test]
    fn audit_comfortable_case() {
        let rep = audit(&GedankenConfig::planck(1e3, 1.0, 5.0, 10.0).unwrap()).unwrap();
        assert!(rep.all_pass());
        let chain = 2.0 * 15360f64.powf(2.0 / 3.0) * 500f64.powf(2.0 / 3.0);
        assert!(rel(rep.distance_over_mass, chain) < 1e-12);
    }

    #[test]
    fn audit_flags_violations() {
        let rep = audit(&GedankenConfig::planck(0.5, 1.0, 1.0, 10.0).unwrap()).unwrap();
        assert!(!rep.flag("compton").unwrap().satisfied);
        let many = audit(&GedankenConfig::planck(1.0, 1.0, 1.0, 1e3).unwrap()).unwrap();
        assert!(!many.flag("species-count").unwrap().satisfied);
        assert!(!many.flag("drop-distance").unwrap().satisfied);
        let over = GedankenConfig::planck(1.0, 1.0, 1.0, 10.0).unwrap().with_n_eff(1e9).unwrap();
        let rep = audit(&over).unwrap();
        assert!(!rep.flag("n-eff-cap").unwrap().satisfied);
        assert!(!rep.flag("radiation-pressure").unwrap().satisfied);
        assert!(GedankenConfig::planck(1.0, 1.0, 0.5, 10.0).is_err());
        assert!(GedankenConfig::planck(1.0, 1.0, 11.0, 10.0).is_err());
        assert!(GedankenConfig::planck(1.0, -1.0, 2.0, 10.0).is_err());
        assert!(GedankenConfig::planck(1.0, 1.0, 2.0, 0.0).is_err());
    }

    #[test]
    fn net_entropy_examples() {
        let (nu, zeta, rr, ee) = (1.5, 5.0, 1.0, 1.0);
        let s = 8.0 * PI * nu * zeta * rr * ee;
        assert_eq!(net_entropy_change(s, e(ee), m(zeta * rr), nu).unwrap(), 0.0);
        assert!(rel(net_entropy_change(0.0, e(1.0), m(5.0), 1.5).unwrap(), 60.0 * PI) < 1e-15);
        let spec = SystemSpec::planck(ee, rr, 3).unwrap();
        let bound = poor_man_bound(&spec, nu, zeta).unwrap().nats;
        for s in [0.5 * bound, 0.999 * bound, 1.001 * bound, 3.0 * bound] {
            let change = net_entropy_change(s, e(ee), m(zeta * rr), nu).unwrap();
            assert_eq!(change < 0.0, s > bound);
        }
        assert!(net_entropy_change(0.0, e(1.0), m(1.0), 3.0).is_err());
    }
}
