//! Entropy bounds for bounded systems and closed universes.
//!
//! Bounds are assembled from dimensional [`Quantity`] arithmetic including
//! the factors of `ħ`, `c` and `G`, and every result is checked to be
//! dimensionless before it is handed out. Entropies are in nats.

use std::f64::consts::{LOG2_E, PI};

use serde::Serialize;

use crate::error::{positive, Error, Result};
use crate::numerics::gamma_half;
use crate::units::{constant, Dimension, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Holographic,
    Universal,
    PoorMan,
    Bousso,
    Verlinde,
    VerlindeMax,
    BlackHole,
    KerrNewman,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Warning {
    /// `R < 2E`: the system is inside its own gravitational radius scale,
    /// where the weak-gravity derivation no longer applies.
    StrongGravity,
    /// The expression involves `D ≠ 4` constants with no SI counterpart.
    PlanckUnitsOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub kind: BoundKind,
    pub nats: f64,
    pub bits: f64,
    /// Set by [`BoundResult::with_input_entropy`].
    pub saturated: Option<bool>,
    pub warnings: Vec<Warning>,
}

impl BoundResult {
    fn from_quantity(kind: BoundKind, q: Quantity) -> Self {
        assert!(
            q.dimension().is_dimensionless(),
            "{kind:?} bound came out with dimension {}",
            q.dimension()
        );
        Self::from_nats(kind, q.value())
    }

    fn from_nats(kind: BoundKind, nats: f64) -> Self {
        BoundResult {
            kind,
            nats,
            bits: nats * LOG2_E,
            saturated: None,
            warnings: Vec::new(),
        }
    }

    fn warn(mut self, w: Warning) -> Self {
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
        self
    }

    /// Flags saturation when `|s − bound| ≤ rel_tol · bound`.
    pub fn with_input_entropy(mut self, s_nats: f64, rel_tol: f64) -> Self {
        self.saturated = Some((s_nats - self.nats).abs() <= rel_tol * self.nats);
        self
    }
}

/// A bounded system: energy `E`, circumscribing radius `R`, `n` space dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemSpec {
    energy: f64,
    radius: f64,
    spatial_dims: u32,
}

impl SystemSpec {
    pub fn new(energy: Quantity, radius: Quantity, spatial_dims: u32) -> Result<Self> {
        Self::planck(
            energy.expect(Dimension::ENERGY)?,
            radius.expect(Dimension::LENGTH)?,
            spatial_dims,
        )
    }

    pub fn planck(energy: f64, radius: f64, spatial_dims: u32) -> Result<Self> {
        positive("energy", energy)?;
        positive("radius", radius)?;
        check_dims(spatial_dims)?;
        Ok(SystemSpec {
            energy,
            radius,
            spatial_dims,
        })
    }

    pub fn energy(&self) -> Quantity {
        Quantity::planck(self.energy, Dimension::ENERGY)
    }

    pub fn radius(&self) -> Quantity {
        Quantity::planck(self.radius, Dimension::LENGTH)
    }

    pub fn spatial_dims(&self) -> u32 {
        self.spatial_dims
    }

    pub fn is_strongly_gravitating(&self) -> bool {
        self.radius < 2.0 * self.energy
    }
}

fn check_dims(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::range("spatial dimension", format!("need n ≥ 3, got {n}")));
    }
    Ok(())
}

fn hbar_c() -> Quantity {
    constant("hbar").expect("hbar") * constant("c").expect("c")
}

/// `ħG/c³`, the Planck area.
fn planck_area() -> Quantity {
    constant("hbar").expect("hbar") * constant("G").expect("G") / constant("c").expect("c").powi(3)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HolographicInput {
    Area(Quantity),
    /// Radius of a round sphere; the area follows from the dimension.
    Radius(Quantity),
}

/// `S ≤ A / 4` in Planck units.
pub fn holographic_bound(input: HolographicInput, spatial_dims: u32) -> Result<BoundResult> {
    check_dims(spatial_dims)?;
    let area = match input {
        HolographicInput::Area(a) => {
            positive("area", a.expect(Dimension::AREA)?)?;
            a
        }
        HolographicInput::Radius(r) => {
            let r = positive("radius", r.expect(Dimension::LENGTH)?)?;
            Quantity::planck(sphere_area(r, spatial_dims)?, Dimension::AREA)
        }
    };
    if spatial_dims == 3 {
        Ok(BoundResult::from_quantity(BoundKind::Holographic, area / (4.0 * planck_area())))
    } else {
        // The (n−1)-area is not an AREA dimension for n ≠ 3.
        Ok(BoundResult::from_nats(BoundKind::Holographic, area.value() / 4.0).warn(Warning::PlanckUnitsOnly))
    }
}

/// Area of the `(n−1)`-sphere of radius `r`: `2π^{n/2} r^{n−1} / Γ(n/2)`.
fn sphere_area(r: f64, n: u32) -> Result<f64> {
    if n == 3 {
        return Ok(4.0 * PI * r * r);
    }
    let g = gamma_half(n)?;
    Ok(2.0 * PI.powf(f64::from(n) / 2.0) * r.powi(n as i32 - 1) / g.value())
}

/// `S ≤ 2πER/ħc`.
pub fn universal_bound(s: &SystemSpec) -> BoundResult {
    let q = 2.0 * PI * s.energy() * s.radius() / hbar_c();
    let mut out = BoundResult::from_quantity(BoundKind::Universal, q);
    if s.is_strongly_gravitating() {
        out = out.warn(Warning::StrongGravity);
    }
    if s.spatial_dims != 3 {
        out = out.warn(Warning::PlanckUnitsOnly);
    }
    out
}

pub const POOR_MAN_NU_RANGE: (f64, f64) = (1.0, 2.0);

/// `S < 8πνζRE/ħc`: the cruder bound from dropping the system into a hole
/// of mass `ζR` whose emission is irreversible by the factor `ν`.
pub fn poor_man_bound(s: &SystemSpec, nu: f64, zeta: f64) -> Result<BoundResult> {
    let (lo, hi) = POOR_MAN_NU_RANGE;
    if !(lo..=hi).contains(&nu) {
        return Err(Error::range("nu", format!("must lie in [{lo}, {hi}], got {nu}")));
    }
    if !(zeta >= 1.0) || !zeta.is_finite() {
        return Err(Error::range("zeta", format!("must be ≥ 1, got {zeta}")));
    }
    Ok(poor_man_unchecked(s, nu, zeta))
}

fn poor_man_unchecked(s: &SystemSpec, nu: f64, zeta: f64) -> BoundResult {
    let q = 8.0 * PI * nu * zeta * s.radius() * s.energy() / hbar_c();
    BoundResult::from_quantity(BoundKind::PoorMan, q)
}

/// `8Γ(n/2) / ((n−1) π^{n/2−1})` with the `√π` of odd `n` cancelled exactly.
fn gravitational_radius_coefficient(n: u32) -> Result<f64> {
    let g = gamma_half(n)?;
    let pi_power = if g.has_sqrt_pi {
        PI.powi((n as i32 - 3) / 2)
    } else {
        PI.powi(n as i32 / 2 - 1)
    };
    Ok(8.0 * g.rational / (f64::from(n - 1) * pi_power))
}

/// Gravitational radius of energy `E` from the `(n+1)`-dimensional
/// Schwarzschild solution: `r_g^{n−2} = 8Γ(n/2)E / ((n−1)π^{n/2−1})`.
pub fn gravitational_radius(energy: Quantity, spatial_dims: u32) -> Result<Quantity> {
    check_dims(spatial_dims)?;
    let e = positive("energy", energy.expect(Dimension::ENERGY)?)?;
    let power = gravitational_radius_coefficient(spatial_dims)? * e;
    let r = if spatial_dims == 3 {
        power
    } else {
        power.powf(1.0 / f64::from(spatial_dims - 2))
    };
    Ok(Quantity::planck(r, Dimension::LENGTH))
}

/// `S ≤ (n−1)π^{n/2} r_g^{n−2} R / (4Γ(n/2))`.
pub fn bousso_bound(s: &SystemSpec) -> Result<BoundResult> {
    let n = s.spatial_dims;
    let rg = gravitational_radius(s.energy(), n)?.value();
    let g = gamma_half(n)?;
    let prefactor = if g.has_sqrt_pi {
        f64::from(n - 1) * PI.powi((n as i32 - 1) / 2) / (4.0 * g.rational)
    } else {
        f64::from(n - 1) * PI.powi(n as i32 / 2) / (4.0 * g.rational)
    };
    let nats = prefactor * rg.powi(n as i32 - 2) * s.radius;
    let mut out = BoundResult::from_nats(BoundKind::Bousso, nats);
    if n != 3 {
        out = out.warn(Warning::PlanckUnitsOnly);
    }
    Ok(out)
}

/// Inputs of the closed-universe bound: total energy, Casimir energy, radius
/// of the spatial `S^n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerlindeInput {
    energy: f64,
    casimir: f64,
    radius: f64,
    spatial_dims: u32,
}

impl VerlindeInput {
    pub fn new(energy: Quantity, casimir: Quantity, radius: Quantity, spatial_dims: u32) -> Result<Self> {
        Self::planck(
            energy.expect(Dimension::ENERGY)?,
            casimir.expect(Dimension::ENERGY)?,
            radius.expect(Dimension::LENGTH)?,
            spatial_dims,
        )
    }

    pub fn planck(energy: f64, casimir: f64, radius: f64, spatial_dims: u32) -> Result<Self> {
        positive("energy", energy)?;
        positive("radius", radius)?;
        check_dims(spatial_dims)?;
        if !casimir.is_finite() {
            return Err(Error::NonFinite("casimir energy"));
        }
        if !(0.0..=2.0 * energy).contains(&casimir) {
            return Err(Error::range(
                "casimir energy",
                format!("must lie in [0, 2E] = [0, {}], got {casimir}", 2.0 * energy),
            ));
        }
        Ok(VerlindeInput {
            energy,
            casimir,
            radius,
            spatial_dims,
        })
    }
}

/// `S ≤ (2πR/nħ) [E_C (2E − E_C)]^{1/2}`.
pub fn verlinde_bound(v: &VerlindeInput) -> BoundResult {
    let e = Quantity::planck(v.energy, Dimension::ENERGY);
    let ec = Quantity::planck(v.casimir, Dimension::ENERGY);
    let r = Quantity::planck(v.radius, Dimension::LENGTH);
    let bracket = (ec * (2.0 * e).checked_sub(ec).expect("same dimension"))
        .sqrt()
        .expect("energy squared has an exact root");
    let q = 2.0 * PI * r / (f64::from(v.spatial_dims) * hbar_c()) * bracket;
    let mut out = BoundResult::from_quantity(BoundKind::Verlinde, q);
    if v.spatial_dims != 3 {
        out = out.warn(Warning::PlanckUnitsOnly);
    }
    out
}

/// The maximum over `E_C` of [`verlinde_bound`], `2πRE/(nħ)`, reached at `E_C = E`.
pub fn verlinde_max(energy: Quantity, radius: Quantity, spatial_dims: u32) -> Result<BoundResult> {
    let s = SystemSpec::new(energy, radius, spatial_dims)?;
    let q = 2.0 * PI * s.radius() * s.energy() / (f64::from(spatial_dims) * hbar_c());
    let mut out = BoundResult::from_quantity(BoundKind::VerlindeMax, q);
    if spatial_dims != 3 {
        out = out.warn(Warning::PlanckUnitsOnly);
    }
    Ok(out)
}

/// A four-dimensional Kerr-Newman hole in geometrized units: mass `M`,
/// specific angular momentum `a = J/M` and charge `Q`, the latter two as
/// lengths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KerrNewmanSpec {
    mass: f64,
    spin: f64,
    charge: f64,
}

impl KerrNewmanSpec {
    pub fn new(mass: Quantity, spin: Quantity, charge: Quantity) -> Result<Self> {
        Self::planck(
            mass.expect(Dimension::MASS)?,
            spin.expect(Dimension::LENGTH)?,
            charge.expect(Dimension::LENGTH)?,
        )
    }

    pub fn planck(mass: f64, spin: f64, charge: f64) -> Result<Self> {
        positive("mass", mass)?;
        if !spin.is_finite() {
            return Err(Error::NonFinite("spin"));
        }
        if !charge.is_finite() {
            return Err(Error::NonFinite("charge"));
        }
        let mass_sq = mass * mass;
        let spin_charge_sq = spin * spin + charge * charge;
        if mass_sq < spin_charge_sq {
            return Err(Error::NakedSingularity {
                mass_sq,
                spin_charge_sq,
            });
        }
        Ok(KerrNewmanSpec { mass, spin, charge })
    }

    /// Boyer-Lindquist horizon radius `r₊ = M + √(M² − a² − Q²)`.
    pub fn horizon_radius(&self) -> f64 {
        let disc = (self.mass * self.mass - self.spin * self.spin - self.charge * self.charge).max(0.0);
        self.mass + disc.sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KerrNewmanCheck {
    pub horizon_radius: f64,
    /// Horizon entropy `π(r₊² + a²)`.
    pub entropy: f64,
    /// Universal bound with `E = M`, `R = r₊`.
    pub bound: f64,
    pub saturated: bool,
}

pub const KERR_SATURATION_TOL: f64 = 1e-9;

/// Compares the horizon entropy with `2πM r₊`.
pub fn kerr_newman_check(k: &KerrNewmanSpec) -> KerrNewmanCheck {
    let r_plus = k.horizon_radius();
    let entropy = PI * (r_plus * r_plus + k.spin * k.spin);
    let spec = SystemSpec {
        energy: k.mass,
        radius: r_plus,
        spatial_dims: 3,
    };
    let bound = universal_bound(&spec).nats;
    KerrNewmanCheck {
        horizon_radius: r_plus,
        entropy,
        bound,
        saturated: (entropy - bound).abs() <= KERR_SATURATION_TOL * bound,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tighter {
    Universal,
    Holographic,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundComparison {
    pub universal: BoundResult,
    pub holographic: BoundResult,
    /// Holographic over universal.
    pub ratio: f64,
    pub tighter: Tighter,
    pub note: Option<&'static str>,
}

const EQUAL_TOL: f64 = 1e-12;

/// Universal against holographic bound for a round system of radius `R`.
///
/// In three space dimensions the universal bound is the tighter one exactly
/// when `E < R/2`.
pub fn tightest_bound(s: &SystemSpec) -> Result<BoundComparison> {
    let universal = universal_bound(s);
    let holographic = holographic_bound(HolographicInput::Radius(s.radius()), s.spatial_dims)?;
    let ratio = holographic.nats / universal.nats;
    let tighter = if (ratio - 1.0).abs() <= EQUAL_TOL {
        Tighter::Equal
    } else if ratio > 1.0 {
        Tighter::Universal
    } else {
        Tighter::Holographic
    };
    let note = (s.spatial_dims > 3).then_some(
        "above four spacetime dimensions the holographic bound is the tighter one for \
         strongly gravitating systems; values are indicative only",
    );
    Ok(BoundComparison {
        universal,
        holographic,
        ratio,
        tighter,
        note,
    })
}
