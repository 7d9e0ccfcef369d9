//! One-channel capacity, black-body emission laws and the information
//! envelope of signal pulses.
//!
//! A channel is a complete set of unidirectional modes labelled by momentum
//! `p` with energy `ε(p)`. Its one-way power and entropy current are computed
//! by quadrature over the momentum, using the group velocity `dε/dp`, and
//! compared with the closed forms `P = πT²/12` and `Ṡ = 2P/T`.

use std::f64::consts::{LOG2_E, PI};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{positive, Error, Result};
use crate::numerics::{integrate_semi_infinite, QuadratureResult};
use crate::units::{Dimension, Quantity};

/// Riemann ζ(3).
#[allow(clippy::excessive_precision)]
const APERY: f64 = 1.202_056_903_159_594_285_4;

/// Tolerance handed to the quadrature for channel integrals.
pub const CHANNEL_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    /// Ratio of the fermion to boson black-body integral in `n` dimensions,
    /// `1 − 2^{−n}`; one for bosons.
    pub fn power_factor(self, n: u32) -> f64 {
        match self {
            Statistics::Boson => 1.0,
            Statistics::Fermion => 1.0 - 0.5f64.powi(n as i32),
        }
    }

    /// Mean occupation `1/(eˣ ∓ 1)`.
    fn occupation(self, x: f64) -> f64 {
        match self {
            Statistics::Boson => 1.0 / x.exp_m1(),
            Statistics::Fermion => 1.0 / (x.exp() + 1.0),
        }
    }

    /// `x / (eˣ ∓ 1)`, finite at `x → 0` for bosons.
    fn energy_kernel(self, x: f64) -> f64 {
        match self {
            Statistics::Boson if x == 0.0 => 1.0,
            _ => x * self.occupation(x),
        }
    }

    /// Entropy of one thermal mode at `x = ε/T`.
    fn mode_entropy(self, x: f64) -> f64 {
        match self {
            Statistics::Boson => {
                if x == 0.0 {
                    f64::INFINITY
                } else {
                    x / x.exp_m1() - (-(-x).exp()).ln_1p()
                }
            }
            Statistics::Fermion => x / (x.exp() + 1.0) + (-x).exp().ln_1p(),
        }
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Boson => "boson",
            Statistics::Fermion => "fermion",
        })
    }
}

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A monotone energy-momentum relation `ε(p)` on `[0, ∞)` with `ε(0) = 0`.
#[derive(Clone)]
pub struct Dispersion {
    label: String,
    energy: RealFn,
    velocity: Option<RealFn>,
}

impl fmt::Debug for Dispersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dispersion")
            .field("label", &self.label)
            .field("analytic_velocity", &self.velocity.is_some())
            .finish()
    }
}

const MONOTONE_SAMPLES: usize = 1000;

impl Dispersion {
    /// Wraps `energy`; the group velocity is taken by finite differences.
    pub fn new(label: impl Into<String>, energy: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Result<Self> {
        let d = Dispersion {
            label: label.into(),
            energy: Arc::new(energy),
            velocity: None,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn with_velocity(
        label: impl Into<String>,
        energy: impl Fn(f64) -> f64 + Send + Sync + 'static,
        velocity: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let d = Dispersion {
            label: label.into(),
            energy: Arc::new(energy),
            velocity: Some(Arc::new(velocity)),
        };
        d.validate()?;
        Ok(d)
    }

    /// `ε = c_s p`.
    pub fn linear(speed: f64) -> Result<Self> {
        positive("signal speed", speed)?;
        Dispersion::new(format!("linear(c_s={speed})"), move |p| speed * p)
    }

    /// `ε = a p^k`.
    pub fn power_law(coefficient: f64, exponent: f64) -> Result<Self> {
        positive("coefficient", coefficient)?;
        positive("exponent", exponent)?;
        Dispersion::new(format!("power({coefficient}·p^{exponent})"), move |p: f64| {
            coefficient * p.powf(exponent)
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn energy(&self, p: f64) -> f64 {
        (self.energy)(p)
    }

    /// Group velocity `dε/dp`.
    pub fn group_velocity(&self, p: f64) -> f64 {
        if let Some(v) = &self.velocity {
            return v(p);
        }
        // Five-point stencil with a step relative to p, keeping p − 2h > 0.
        let h = if p > 0.0 { 1e-3 * p } else { 1e-12 };
        let f = |x| self.energy(x);
        (f(p - 2.0 * h) - 8.0 * f(p - h) + 8.0 * f(p + h) - f(p + 2.0 * h)) / (12.0 * h)
    }

    fn validate(&self) -> Result<()> {
        let e0 = self.energy(0.0);
        if e0 != 0.0 {
            return Err(Error::InvalidDispersion(format!(
                "{}: ε(0) = {e0}, expected 0",
                self.label
            )));
        }
        let grid = crate::numerics::logspace(1e-8, 1e8, MONOTONE_SAMPLES);
        let mut prev = 0.0;
        for p in grid {
            let e = self.energy(p);
            if !e.is_finite() || e <= prev {
                return Err(Error::InvalidDispersion(format!(
                    "{}: not strictly increasing near p = {p:e}",
                    self.label
                )));
            }
            prev = e;
        }
        Ok(())
    }

    /// Momentum with `ε(p) = energy`, by bracketing and bisection.
    pub fn momentum_at(&self, energy: f64) -> Result<f64> {
        positive("energy", energy)?;
        let fail = || Error::InvalidDispersion(format!("{}: cannot invert at ε = {energy:e}", self.label));
        let mut lo = 1.0;
        let mut hi = 1.0;
        if self.energy(1.0) < energy {
            while self.energy(hi) < energy {
                lo = hi;
                hi *= 2.0;
                if !hi.is_finite() {
                    return Err(fail());
                }
            }
        } else {
            while self.energy(lo) >= energy {
                hi = lo;
                lo *= 0.5;
                if lo == 0.0 {
                    return Err(fail());
                }
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.energy(mid) < energy {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

#[derive(Debug, Clone)]
pub struct ChannelSpec {
    pub statistics: Statistics,
    pub dispersion: Dispersion,
}

impl ChannelSpec {
    pub fn new(statistics: Statistics, dispersion: Dispersion) -> Self {
        ChannelSpec {
            statistics,
            dispersion,
        }
    }

    /// Photon-like: `ε = p`.
    pub fn vacuum(statistics: Statistics) -> Self {
        ChannelSpec::new(statistics, Dispersion::linear(1.0).expect("unit speed"))
    }
}

/// Entropy of one thermal mode of energy `ε` at temperature `T`.
pub fn mode_entropy(energy: Quantity, temperature: Quantity, statistics: Statistics) -> Result<f64> {
    let t = positive("temperature", temperature.expect(Dimension::TEMPERATURE)?)?;
    let e = energy.expect(Dimension::ENERGY)?;
    if !(e >= 0.0) {
        return Err(Error::range("energy", format!("must be ≥ 0, got {e}")));
    }
    Ok(statistics.mode_entropy(e / t))
}

/// Integrates `g(x(u)) · dx/du` over the rescaled momentum `u = p/p_T`, where
/// `ε(p_T) = T` and `x = ε/T`.
fn channel_integral(c: &ChannelSpec, t: f64, g: impl Fn(f64) -> f64) -> Result<QuadratureResult> {
    let p_t = c.dispersion.momentum_at(t)?;
    let d = &c.dispersion;
    integrate_semi_infinite(
        |u| {
            let p = p_t * u;
            let x = d.energy(p) / t;
            g(x) * d.group_velocity(p) * p_t / t
        },
        CHANNEL_REL_TOL,
    )
}

/// One-way power by quadrature, `∫ ε n(ε/T) υ(p) dp/2π`, with its quadrature record.
pub fn one_way_power_quadrature(c: &ChannelSpec, temperature: Quantity) -> Result<(Quantity, QuadratureResult)> {
    let t = positive("temperature", temperature.expect(Dimension::TEMPERATURE)?)?;
    let stats = c.statistics;
    let q = channel_integral(c, t, |x| stats.energy_kernel(x))?;
    Ok((Quantity::planck(t * t * q.value / (2.0 * PI), Dimension::POWER), q))
}

pub fn one_way_power(c: &ChannelSpec, temperature: Quantity) -> Result<Quantity> {
    one_way_power_quadrature(c, temperature).map(|r| r.0)
}

/// One-way entropy current by quadrature, `∫ s(p) υ(p) dp/2π`.
pub fn one_way_entropy_rate_quadrature(
    c: &ChannelSpec,
    temperature: Quantity,
) -> Result<(Quantity, QuadratureResult)> {
    let t = positive("temperature", temperature.expect(Dimension::TEMPERATURE)?)?;
    let stats = c.statistics;
    let q = channel_integral(c, t, |x| stats.mode_entropy(x))?;
    Ok((Quantity::planck(t * q.value / (2.0 * PI), Dimension::RATE), q))
}

pub fn one_way_entropy_rate(c: &ChannelSpec, temperature: Quantity) -> Result<Quantity> {
    one_way_entropy_rate_quadrature(c, temperature).map(|r| r.0)
}

/// Closed-form one-way power `πT²/12`, halved for fermions.
pub fn thermal_power(temperature: Quantity, statistics: Statistics) -> Result<Quantity> {
    let t = positive("temperature", temperature.expect(Dimension::TEMPERATURE)?)?;
    Ok(Quantity::planck(
        statistics.power_factor(1) * PI * t * t / 12.0,
        Dimension::POWER,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PendryRate {
    /// Nats per unit time.
    pub entropy_rate: Quantity,
    /// Bits per unit time.
    pub info_rate: Quantity,
}

/// Maximum one-channel entropy rate at power `P`: `Ṡ = (πP/3ħ)^{1/2}`,
/// reduced by `√2` for fermions.
pub fn pendry_rate(power: Quantity, statistics: Statistics) -> Result<PendryRate> {
    let p = positive("power", power.expect(Dimension::POWER)?)?;
    let boson = (PI * p / 3.0).sqrt();
    let s = match statistics {
        Statistics::Boson => boson,
        Statistics::Fermion => boson / std::f64::consts::SQRT_2,
    };
    Ok(PendryRate {
        entropy_rate: Quantity::planck(s, Dimension::RATE),
        info_rate: Quantity::planck(s * LOG2_E, Dimension::RATE),
    })
}

/// A closed emitting surface (`n = 3`, area) or curve (`n = 2`, length).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmitterSpec {
    spatial_dims: u32,
    measure: f64,
    temperature: f64,
}

impl EmitterSpec {
    pub fn new(spatial_dims: u32, measure: Quantity, temperature: Quantity) -> Result<Self> {
        let measure = match spatial_dims {
            3 => measure.expect(Dimension::AREA)?,
            2 => measure.expect(Dimension::LENGTH)?,
            n => return Err(unsupported_dims(n)),
        };
        Self::planck(spatial_dims, measure, temperature.expect(Dimension::TEMPERATURE)?)
    }

    pub fn planck(spatial_dims: u32, measure: f64, temperature: f64) -> Result<Self> {
        if !(2..=3).contains(&spatial_dims) {
            return Err(unsupported_dims(spatial_dims));
        }
        positive("measure", measure)?;
        positive("temperature", temperature)?;
        Ok(EmitterSpec {
            spatial_dims,
            measure,
            temperature,
        })
    }

    pub fn spatial_dims(&self) -> u32 {
        self.spatial_dims
    }
}

fn unsupported_dims(n: u32) -> Error {
    Error::range("spatial dimension", format!("black-body laws support n = 2 or 3, got {n}"))
}

/// Boson power per unit measure per `T^{n+1}` for one polarization.
fn blackbody_coefficient(n: u32) -> f64 {
    match n {
        3 => PI * PI / 120.0,
        2 => APERY / (PI * PI),
        _ => unreachable!("dimension validated by EmitterSpec"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlackbodyRate {
    pub power: Quantity,
    /// `(n+1)/n · P/T`.
    pub entropy_rate: Quantity,
    /// Entropy rate recomputed from `P` alone with `T` eliminated.
    pub entropy_rate_from_power: Quantity,
}

/// Stefan-Boltzmann emission of one polarization from the emitter.
pub fn blackbody_rate(e: &EmitterSpec, statistics: Statistics) -> Result<BlackbodyRate> {
    let n = e.spatial_dims;
    let nf = f64::from(n);
    let c = blackbody_coefficient(n) * statistics.power_factor(n) * e.measure;
    let power = c * e.temperature.powi(n as i32 + 1);
    let entropy_rate = (nf + 1.0) / nf * power / e.temperature;
    let from_power = blackbody_entropy_rate_from_power(n, e.measure, power, statistics)?;
    Ok(BlackbodyRate {
        power: Quantity::planck(power, Dimension::POWER),
        entropy_rate: Quantity::planck(entropy_rate, Dimension::RATE),
        entropy_rate_from_power: Quantity::planck(from_power, Dimension::RATE),
    })
}

/// `Ṡ(P) = (n+1)/n · P^{n/(n+1)} (C·measure)^{1/(n+1)}`; for `n = 3` bosons
/// this is `(2/3)(2π²AP³/15)^{1/4}`.
pub fn blackbody_entropy_rate_from_power(n: u32, measure: f64, power: f64, statistics: Statistics) -> Result<f64> {
    if !(2..=3).contains(&n) {
        return Err(unsupported_dims(n));
    }
    positive("measure", measure)?;
    positive("power", power)?;
    let nf = f64::from(n);
    let c = blackbody_coefficient(n) * statistics.power_factor(n) * measure;
    Ok((nf + 1.0) / nf * power.powf(nf / (nf + 1.0)) * c.powf(1.0 / (nf + 1.0)))
}

/// A signal pulse of energy `E` and duration `τ` in one local frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseSpec {
    energy: f64,
    duration: f64,
}

impl PulseSpec {
    pub fn new(energy: Quantity, duration: Quantity) -> Result<Self> {
        Self::planck(energy.expect(Dimension::ENERGY)?, duration.expect(Dimension::TIME)?)
    }

    pub fn planck(energy: f64, duration: f64) -> Result<Self> {
        positive("pulse energy", energy)?;
        positive("pulse duration", duration)?;
        positive("Eτ", energy * duration)?;
        Ok(PulseSpec { energy, duration })
    }

    pub fn energy(&self) -> Quantity {
        Quantity::planck(self.energy, Dimension::ENERGY)
    }

    pub fn duration(&self) -> Quantity {
        Quantity::planck(self.duration, Dimension::TIME)
    }

    /// `ξ = Eτ/ħ`.
    pub fn xi(&self) -> f64 {
        self.energy * self.duration
    }

    /// `ϖ = GE/(c⁵τ)`. Reported only; the capacity depends on `ξ` alone.
    pub fn self_gravity(&self) -> f64 {
        self.energy / self.duration
    }
}

/// `ξ` at which the linear and steady-state pulse bounds coincide.
pub const PULSE_CROSSOVER_XI: f64 = 1.0 / (3.0 * PI);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PulseBound {
    /// `π ξ log₂e`, valid for brief pulses.
    pub linear: f64,
    /// `(πξ/3)^{1/2} log₂e`, the one-channel rate integrated over the pulse.
    pub steady: f64,
    /// The smaller of the two.
    pub envelope: f64,
}

/// Upper bounds, in bits, on the information carried by the pulse.
pub fn pulse_info_bound(p: &PulseSpec) -> Result<PulseBound> {
    let xi = positive("xi", p.xi())?;
    let linear = PI * xi * LOG2_E;
    let steady = (PI * xi / 3.0).sqrt() * LOG2_E;
    Ok(PulseBound {
        linear,
        steady,
        envelope: linear.min(steady),
    })
}

/// Carries a pulse between two static observers whose redshift factors
/// differ by `α`: energy scales by `α`, duration by `1/α`.
pub fn redshift_transform(p: &PulseSpec, alpha: f64) -> Result<PulseSpec> {
    positive("redshift ratio", alpha)?;
    PulseSpec::planck(alpha * p.energy, p.duration / alpha)
}
