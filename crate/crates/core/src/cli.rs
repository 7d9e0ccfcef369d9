//! Command-line front end. [`run`] parses an argument vector, dispatches to
//! the library and renders the result; the `holobound` binary is a thin
//! wrapper around it.
//!
//! Bare numbers are read in the `--units` system. A unit suffix (`1cm`,
//! `2kg`, `1Msun`, `300K`, ...) overrides that for one flag. Thermodynamic
//! entropies are reported in nats unless `--bits` is given, bounds are
//! printed in both units, and information quantities (accessible information,
//! information rates, pulse capacities) are always in bits.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::blackhole::{
    bh_channel_bound, bh_channel_count, bh_entropy, bh_rate_vs_power, channel_count, coefficient_ratio,
    dump_rate, emission_entropy_rate, emission_power, hawking_flux, hawking_temperature,
    luminosity, power_for_rate, BlackHole, ChannelCountSpec, SpeciesEmission,
};
use crate::bounds::{
    bousso_bound, holographic_bound, kerr_newman_check, poor_man_bound, tightest_bound, universal_bound,
    verlinde_bound, verlinde_max, BoundResult, HolographicInput, KerrNewmanSpec, SystemSpec, VerlindeInput,
    Warning,
};
use crate::channel::{
    blackbody_entropy_rate_from_power, blackbody_rate, mode_entropy, one_way_entropy_rate_quadrature,
    one_way_power_quadrature, pendry_rate, pulse_info_bound, redshift_transform, thermal_power, ChannelSpec,
    Dispersion, EmitterSpec, PulseSpec, Statistics,
};
use crate::gedanken::{audit, GedankenConfig, DEFAULT_ZETA};
use crate::numerics::logspace;
use crate::qinfo::{
    accessible_info_bound, mix_ensemble, purity, shannon_entropy, spin_half_ensemble, von_neumann_entropy,
    DensityMatrix, EntropyUnit, Ensemble,
};
use crate::units::{codata, from_internal, to_internal, unit_label, Dimension, Quantity, UnitSystem};
use crate::Error;

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "holobound", version, about = "Entropy bounds, channel capacities and black-hole emission")]
#[command(propagate_version = true, subcommand_required = true, arg_required_else_help = true)]
struct Cli {
    /// System for bare numbers on input and for all output.
    #[arg(long, global = true, value_enum, default_value_t = UnitsArg::Planck)]
    units: UnitsArg,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Report entropies in bits.
    #[arg(long, global = true, conflicts_with = "nats")]
    bits: bool,

    /// Report entropies in nats (default).
    #[arg(long, global = true)]
    nats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum UnitsArg {
    Si,
    Geo,
    Planck,
}

impl From<UnitsArg> for UnitSystem {
    fn from(u: UnitsArg) -> Self {
        match u {
            UnitsArg::Si => UnitSystem::Si,
            UnitsArg::Geo => UnitSystem::Geometrized,
            UnitsArg::Planck => UnitSystem::Planck,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Table,
    JsonLines,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
enum StatsArg {
    #[default]
    Boson,
    Fermion,
}

impl From<StatsArg> for Statistics {
    fn from(s: StatsArg) -> Self {
        match s {
            StatsArg::Boson => Statistics::Boson,
            StatsArg::Fermion => Statistics::Fermion,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
enum SpeciesArg {
    #[default]
    Photon,
    Neutrino,
}

impl SpeciesArg {
    fn emission(self) -> SpeciesEmission {
        match self {
            SpeciesArg::Photon => SpeciesEmission::photon(),
            SpeciesArg::Neutrino => SpeciesEmission::neutrino(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shannon and von Neumann entropies, ensembles, accessible information.
    Qinfo {
        #[command(subcommand)]
        op: QinfoCmd,
    },
    /// Entropy bounds for a bounded system.
    Bound {
        #[command(subcommand)]
        op: BoundCmd,
    },
    /// One-channel capacity, black-body emission and signal pulses.
    Channel {
        #[command(subcommand)]
        op: ChannelCmd,
    },
    /// Schwarzschild hole temperature, entropy and emission.
    Bh {
        #[command(subcommand)]
        op: BhCmd,
    },
    /// Audit of the drop-into-a-hole thought experiment.
    Gedanken {
        #[command(subcommand)]
        op: GedankenCmd,
    },
    /// Log-spaced (P, Ṡ) rows for plotting.
    Curve(CurveArgs),
}

#[derive(Subcommand, Debug)]
enum QinfoCmd {
    /// Entropy of a density matrix or a probability vector.
    #[command(group(ArgGroup::new("input").required(true).args(["matrix", "probs"])))]
    Entropy {
        #[arg(long)]
        matrix: Option<String>,
        /// Comma-separated probabilities.
        #[arg(long, value_delimiter = ',')]
        probs: Option<Vec<f64>>,
    },
    /// Mixes an ensemble; defaults to the four spin-½ states with equal weights.
    Mix(EnsembleArgs),
    /// Cap on the information accessible from one copy of the state.
    Holevo(EnsembleArgs),
}

#[derive(Args, Debug)]
struct EnsembleArgs {
    /// Density-matrix file; repeat for several members.
    #[arg(long)]
    matrix: Vec<String>,
    /// Comma-separated member weights (default: uniform).
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
struct SystemArgs {
    #[arg(long, value_parser = parse_value)]
    energy: Value,
    #[arg(long, value_parser = parse_value)]
    radius: Value,
    #[arg(long, default_value_t = 3)]
    dims: u32,
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// A/4 for a sphere of given radius or a surface of given area.
    #[command(group(ArgGroup::new("size").required(true).args(["radius", "area"])))]
    Holographic {
        #[arg(long, value_parser = parse_value)]
        radius: Option<Value>,
        #[arg(long, value_parser = parse_value)]
        area: Option<Value>,
        #[arg(long, default_value_t = 3)]
        dims: u32,
    },
    /// 2πER.
    Universal(SystemArgs),
    /// 8πνζER.
    Poorman {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = crate::blackhole::DEFAULT_NU)]
        nu: f64,
        #[arg(long, default_value_t = DEFAULT_ZETA)]
        zeta: f64,
    },
    /// Area of the gravitational-radius sphere over four.
    Bousso(SystemArgs),
    /// Cosmological bound; maximised over the Casimir energy if none is given.
    Verlinde {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_parser = parse_value)]
        casimir: Option<Value>,
    },
    /// Horizon entropy against 2πMr₊.
    KerrNewman {
        #[arg(long, value_parser = parse_value)]
        mass: Value,
        /// a = J/M, as a length.
        #[arg(long, value_parser = parse_value)]
        spin: Option<Value>,
        /// Charge as a length.
        #[arg(long, value_parser = parse_value)]
        charge: Option<Value>,
    },
    /// Universal against holographic.
    Compare(SystemArgs),
}

#[derive(Subcommand, Debug)]
enum ChannelCmd {
    /// Largest entropy rate of one channel at given power.
    Pendry {
        #[arg(long, value_parser = parse_value)]
        power: Value,
        #[arg(long, value_enum, default_value_t)]
        statistics: StatsArg,
    },
    /// Stefan-Boltzmann emission from a surface (n = 3) or curve (n = 2).
    Blackbody {
        #[arg(long, default_value_t = 3)]
        dims: u32,
        /// Area for n = 3, length for n = 2.
        #[arg(long, value_parser = parse_value)]
        measure: Value,
        #[arg(long, value_parser = parse_value)]
        temperature: Value,
        #[arg(long, value_enum, default_value_t)]
        statistics: StatsArg,
    },
    /// Information envelope of a pulse, optionally after a redshift.
    Pulse {
        #[arg(long, value_parser = parse_value)]
        energy: Value,
        #[arg(long, value_parser = parse_value)]
        duration: Value,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Thermal one-way power and entropy current by quadrature.
    Modes {
        #[arg(long, value_parser = parse_value)]
        temperature: Value,
        #[arg(long, value_enum, default_value_t)]
        statistics: StatsArg,
        /// `linear`, `linear:<c_s>` or `power:<a>,<k>`.
        #[arg(long, default_value = "linear", value_parser = parse_dispersion)]
        dispersion: DispersionArg,
        /// Also report the entropy of one mode of this energy.
        #[arg(long, value_parser = parse_value)]
        energy: Option<Value>,
    },
}

#[derive(Subcommand, Debug)]
enum BhCmd {
    /// Hawking temperature.
    Temperature {
        #[arg(long, value_parser = parse_value)]
        mass: Value,
    },
    /// Horizon entropy, also as the saturated universal bound.
    Entropy {
        #[arg(long, value_parser = parse_value)]
        mass: Value,
    },
    /// Far-field energy flux at radius r, and the luminosity.
    Flux {
        #[arg(long, value_parser = parse_value)]
        mass: Value,
        #[arg(long, value_parser = parse_value)]
        r: Value,
        #[arg(long, default_value_t = 1.0)]
        species_count: f64,
    },
    /// Power and entropy rate in one species.
    Emission {
        #[arg(long, value_parser = parse_value)]
        mass: Value,
        #[arg(long, value_enum, default_value_t)]
        species: SpeciesArg,
    },
    /// Black-hole Ṡ(P) coefficient over the one-channel coefficient.
    Ratio {
        #[arg(long, value_enum, default_value_t)]
        species: SpeciesArg,
    },
    /// Active channels, either into a hole from distance d or for a free beam.
    Channels {
        #[arg(long, value_parser = parse_value, requires = "distance")]
        mass: Option<Value>,
        #[arg(long, value_parser = parse_value, requires = "mass")]
        distance: Option<Value>,
        #[arg(long, value_parser = parse_value)]
        area: Option<Value>,
        #[arg(long, value_parser = parse_value, conflicts_with = "distance")]
        wavenumber: Option<Value>,
        #[arg(long, conflicts_with = "distance")]
        solid_angle: Option<f64>,
    },
    /// Information rate through parallel channels, or the power a rate needs.
    #[command(group(ArgGroup::new("what").required(true).args(["power", "rate"])))]
    Dump {
        #[arg(long, value_parser = parse_value)]
        power: Option<Value>,
        /// Target rate in bits per unit time.
        #[arg(long, value_parser = parse_value)]
        rate: Option<Value>,
        #[arg(long, default_value_t = 1.0)]
        channels: f64,
    },
}

#[derive(Subcommand, Debug)]
enum GedankenCmd {
    #[command(group(ArgGroup::new("size").required(true).args(["energy", "energy_radius_product"])))]
    Audit {
        #[arg(long, value_parser = parse_value, requires = "radius")]
        energy: Option<Value>,
        /// Radius; defaults to one unit when only the product ER is given.
        #[arg(long, value_parser = parse_value)]
        radius: Option<Value>,
        #[arg(long, conflicts_with = "energy")]
        energy_radius_product: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_ZETA)]
        zeta: f64,
        #[arg(long, default_value_t = 1.0)]
        species_count: f64,
        #[arg(long)]
        n_eff: Option<f64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CurveKind {
    Pendry,
    Blackbody3d,
    Blackbody2d,
    Blackhole,
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[arg(value_enum)]
    quantity: CurveKind,
    #[arg(long, value_parser = parse_value, default_value = "1")]
    p_min: Value,
    #[arg(long, value_parser = parse_value, default_value = "1e4")]
    p_max: Value,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, value_enum, default_value_t)]
    statistics: StatsArg,
    #[arg(long, value_enum, default_value_t)]
    species: SpeciesArg,
    /// Emitter area (3-D) or length (2-D).
    #[arg(long, value_parser = parse_value, default_value = "1")]
    measure: Value,
}

struct Suffix {
    text: &'static str,
    dimension: Dimension,
    si: f64,
}

const SUFFIXES: &[Suffix] = &[
    Suffix { text: "solar-mass", dimension: Dimension::MASS, si: codata::SOLAR_MASS },
    Suffix { text: "Msun", dimension: Dimension::MASS, si: codata::SOLAR_MASS },
    Suffix { text: "cm2", dimension: Dimension::AREA, si: 1e-4 },
    Suffix { text: "m2", dimension: Dimension::AREA, si: 1.0 },
    Suffix { text: "km", dimension: Dimension::LENGTH, si: 1e3 },
    Suffix { text: "cm", dimension: Dimension::LENGTH, si: 1e-2 },
    Suffix { text: "kg", dimension: Dimension::MASS, si: 1.0 },
    Suffix { text: "m", dimension: Dimension::LENGTH, si: 1.0 },
    Suffix { text: "g", dimension: Dimension::MASS, si: 1e-3 },
    Suffix { text: "J", dimension: Dimension::ENERGY, si: 1.0 },
    Suffix { text: "W", dimension: Dimension::POWER, si: 1.0 },
    Suffix { text: "K", dimension: Dimension::TEMPERATURE, si: 1.0 },
    Suffix { text: "s", dimension: Dimension::TIME, si: 1.0 },
];

#[derive(Clone, Copy)]
struct Value {
    number: f64,
    suffix: Option<&'static Suffix>,
}

impl std::fmt::Debug for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.number, self.suffix.map_or("", |s| s.text))
    }
}

fn parse_value(s: &str) -> std::result::Result<Value, String> {
    let s = s.trim();
    let bare = |t: &str| t.trim().parse::<f64>().ok().filter(|v| v.is_finite());
    if let Some(number) = bare(s) {
        return Ok(Value { number, suffix: None });
    }
    for suffix in SUFFIXES {
        if let Some(head) = s.strip_suffix(suffix.text) {
            if let Some(number) = bare(head) {
                return Ok(Value {
                    number,
                    suffix: Some(suffix),
                });
            }
        }
    }
    let known: Vec<_> = SUFFIXES.iter().map(|s| s.text).collect();
    Err(format!("expected a number with an optional unit ({}), got `{s}`", known.join(", ")))
}

#[derive(Clone, Debug)]
enum DispersionArg {
    Linear(f64),
    Power(f64, f64),
}

fn parse_dispersion(s: &str) -> std::result::Result<DispersionArg, String> {
    let bad = || format!("expected `linear`, `linear:<c_s>` or `power:<a>,<k>`, got `{s}`");
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    match s.split_once(':') {
        None if s == "linear" => Ok(DispersionArg::Linear(1.0)),
        Some(("linear", c)) => Ok(DispersionArg::Linear(num(c)?)),
        Some(("power", rest)) => {
            let (a, k) = rest.split_once(',').ok_or_else(bad)?;
            Ok(DispersionArg::Power(num(a)?, num(k)?))
        }
        _ => Err(bad()),
    }
}

enum CliError {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonFinite(_) => "non-finite",
        Error::OutOfRange { .. } => "out-of-range",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::NotExpressible { .. } => "not-expressible",
        Error::UnknownConstant(_) => "unknown-constant",
        Error::NanIntegrand(_) => "nan-integrand",
        Error::NonConvergence { .. } => "non-convergence",
        Error::NotHermitian(_) => "not-hermitian",
        Error::InvalidDensityMatrix(_) => "invalid-density-matrix",
        Error::InvalidDistribution(_) => "invalid-distribution",
        Error::InvalidDispersion(_) => "invalid-dispersion",
        Error::NakedSingularity { .. } => "naked-singularity",
        Error::Parse(_) => "parse",
    }
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    error: &'static str,
    kind: &'a str,
    message: String,
}

fn error_line(error: &'static str, kind: &str, message: String) -> String {
    let rec = ErrorRecord { error, kind, message };
    let mut line = serde_json::to_string(&rec).expect("error record serializes");
    line.push('\n');
    line
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            let message = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .collect::<Vec<_>>()
                .join(" ");
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: error_line("usage", &format!("{:?}", e.kind()), message),
            };
        }
    };
    let ctx = Ctx {
        system: cli.units.into(),
        entropy: if cli.bits { EntropyUnit::Bits } else { EntropyUnit::Nats },
        format: cli.format,
    };
    match dispatch(&ctx, cli.command) {
        Ok(out) => Outcome {
            code: EXIT_OK,
            stdout: ctx.render(&out),
            stderr: String::new(),
        },
        Err(CliError::Usage(m)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: error_line("usage", "invalid-value", m),
        },
        Err(CliError::Domain(e)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: error_line("domain", error_kind(&e), e.to_string()),
        },
        Err(CliError::Io(m)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: error_line("domain", "io", m),
        },
    }
}

struct Ctx {
    system: UnitSystem,
    entropy: EntropyUnit,
    format: Format,
}

#[derive(Debug, Clone, Serialize)]
struct Record {
    quantity: String,
    value: f64,
    unit: String,
    system: String,
    entropy_unit: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
struct CurveRow {
    power: f64,
    entropy_rate: f64,
    power_unit: String,
    rate_unit: String,
    system: String,
    entropy_unit: &'static str,
}

enum Output {
    Records(Vec<Record>),
    Curve(Vec<CurveRow>),
}

fn no_entropy() -> &'static str {
    "none"
}

impl Ctx {
    fn resolve(&self, flag: &str, v: Value, dim: Dimension) -> CliResult<Quantity> {
        match v.suffix {
            None => Ok(to_internal(v.number, dim, self.system)?),
            Some(s) => {
                let q = to_internal(v.number * s.si, s.dimension, UnitSystem::Si)?;
                let x = q.expect(dim).map_err(|_| {
                    CliError::Usage(format!("--{flag} expects {dim}, but `{}` is {}", s.text, s.dimension))
                })?;
                Ok(Quantity::planck(x, dim))
            }
        }
    }

    fn unit(&self, dim: Dimension) -> String {
        let label = unit_label(dim, self.system);
        if label.is_empty() {
            "1".into()
        } else {
            label
        }
    }

    fn record(&self, name: &str, value: f64, unit: String, entropic: bool) -> Record {
        Record {
            quantity: name.into(),
            value,
            unit,
            system: self.system.to_string(),
            entropy_unit: if entropic { self.entropy.label() } else { no_entropy() },
            note: None,
        }
    }

    fn qty(&self, name: &str, q: Quantity) -> CliResult<Record> {
        Ok(self.record(name, from_internal(q, self.system)?, self.unit(q.dimension()), false))
    }

    fn pure(&self, name: &str, v: f64) -> Record {
        self.record(name, v, "1".into(), false)
    }

    fn entropy(&self, name: &str, nats: f64) -> Record {
        self.record(name, self.entropy.from_nats(nats), self.entropy.label().into(), true)
    }

    fn info(&self, name: &str, bits: f64) -> Record {
        let mut r = self.record(name, bits, "bits".into(), true);
        r.entropy_unit = EntropyUnit::Bits.label();
        r
    }

    /// `q` is a rate in bits per unit time.
    fn info_rate(&self, name: &str, q: Quantity) -> CliResult<Record> {
        let unit = format!("bits {}", self.unit(q.dimension()));
        let mut r = self.record(name, from_internal(q, self.system)?, unit, true);
        r.entropy_unit = EntropyUnit::Bits.label();
        Ok(r)
    }

    /// `q` is a rate in nats per unit time.
    fn entropy_rate(&self, name: &str, q: Quantity) -> CliResult<Record> {
        let per_time = from_internal(q, self.system)?;
        let unit = format!("{} {}", self.entropy.label(), self.unit(q.dimension()));
        Ok(self.record(name, self.entropy.from_nats(per_time), unit, true))
    }

    /// Prints a bound in the selected entropy unit, then in the other one.
    fn bound(&self, out: &mut Vec<Record>, name: &str, b: &BoundResult) {
        let note = if b.warnings.is_empty() {
            None
        } else {
            Some(
                b.warnings
                    .iter()
                    .map(|w| match w {
                        Warning::StrongGravity => "strong-gravity",
                        Warning::PlanckUnitsOnly => "planck-units-only",
                    })
                    .collect::<Vec<_>>()
                    .join(";"),
            )
        };
        let order = match self.entropy {
            EntropyUnit::Nats => [EntropyUnit::Nats, EntropyUnit::Bits],
            EntropyUnit::Bits => [EntropyUnit::Bits, EntropyUnit::Nats],
        };
        for unit in order {
            out.push(Record {
                quantity: name.into(),
                value: unit.from_nats(b.nats),
                unit: unit.label().into(),
                system: self.system.to_string(),
                entropy_unit: unit.label(),
                note: note.clone(),
            });
        }
    }

    fn render(&self, out: &Output) -> String {
        match out {
            Output::Records(r) => self.render_records(r),
            Output::Curve(rows) => self.render_curve(rows),
        }
    }

    fn render_records(&self, records: &[Record]) -> String {
        match self.format {
            Format::JsonLines => records
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.value = sig10(r.value);
                    serde_json::to_string(&r).expect("record serializes") + "\n"
                })
                .collect(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["quantity", "value", "unit", "system", "entropy_unit", "note"])
                    .expect("in-memory write");
                for r in records {
                    w.write_record([
                        r.quantity.as_str(),
                        &machine(r.value),
                        &r.unit,
                        &r.system,
                        r.entropy_unit,
                        r.note.as_deref().unwrap_or(""),
                    ])
                    .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Table => {
                let width = records.iter().map(|r| r.quantity.chars().count()).max().unwrap_or(0).max(8);
                let mut s = format!("# units: {}, entropy: {}\n", self.system, self.entropy.label());
                for r in records {
                    let _ = write!(s, "{:<width$}  {:>11}  {}", r.quantity, human(r.value), r.unit);
                    if let Some(n) = &r.note {
                        let _ = write!(s, "  [{n}]");
                    }
                    s.push('\n');
                }
                s
            }
        }
    }

    fn render_curve(&self, rows: &[CurveRow]) -> String {
        match self.format {
            Format::JsonLines => rows
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.power = sig10(r.power);
                    r.entropy_rate = sig10(r.entropy_rate);
                    serde_json::to_string(&r).expect("row serializes") + "\n"
                })
                .collect(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["power", "entropy_rate", "power_unit", "rate_unit", "system", "entropy_unit"])
                    .expect("in-memory write");
                for r in rows {
                    w.write_record([
                        machine(r.power).as_str(),
                        &machine(r.entropy_rate),
                        &r.power_unit,
                        &r.rate_unit,
                        &r.system,
                        r.entropy_unit,
                    ])
                    .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Table => {
                let mut s = String::new();
                if let Some(r) = rows.first() {
                    let _ = writeln!(s, "# units: {}, entropy: {}", r.system, r.entropy_unit);
                    let _ = writeln!(s, "{:>11}  {:>11}", format!("P [{}]", r.power_unit), format!("Ṡ [{}]", r.rate_unit));
                }
                for r in rows {
                    let _ = writeln!(s, "{:>11}  {:>11}", human(r.power), human(r.entropy_rate));
                }
                s
            }
        }
    }
}

/// Rounds to ten significant digits.
fn sig10(v: f64) -> f64 {
    if v.is_finite() {
        format!("{v:.9e}").parse().expect("round trip")
    } else {
        v
    }
}

fn machine(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.9e}")
    } else {
        format!("{v}")
    }
}

fn human(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.3e}")
    } else {
        format!("{v}")
    }
}

fn dispatch(ctx: &Ctx, cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Qinfo { op } => qinfo(ctx, op).map(Output::Records),
        Command::Bound { op } => bound(ctx, op).map(Output::Records),
        Command::Channel { op } => channel(ctx, op).map(Output::Records),
        Command::Bh { op } => bh(ctx, op).map(Output::Records),
        Command::Gedanken { op } => gedanken(ctx, op).map(Output::Records),
        Command::Curve(args) => curve(ctx, args).map(Output::Curve),
    }
}

fn read_matrix(path: &str) -> CliResult<DensityMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    Ok(DensityMatrix::parse(&text)?)
}

fn ensemble(args: &EnsembleArgs) -> CliResult<Ensemble> {
    if args.matrix.is_empty() {
        if args.weights.is_some() {
            return Err(CliError::Usage("--weights needs at least one --matrix".into()));
        }
        return Ok(spin_half_ensemble());
    }
    let members = args.matrix.iter().map(|p| read_matrix(p)).collect::<CliResult<Vec<_>>>()?;
    let n = members.len();
    let weights = match &args.weights {
        Some(w) if w.len() != n => {
            return Err(CliError::Usage(format!("{} weights for {n} matrices", w.len())));
        }
        Some(w) => w.clone(),
        None => vec![1.0 / n as f64; n],
    };
    Ok(Ensemble::new(weights.into_iter().zip(members).collect())?)
}

fn qinfo(ctx: &Ctx, op: QinfoCmd) -> CliResult<Vec<Record>> {
    let nats = EntropyUnit::Nats;
    match op {
        QinfoCmd::Entropy { matrix, probs } => {
            if let Some(path) = matrix {
                let rho = read_matrix(&path)?;
                let mut out = vec![ctx.entropy("von_neumann_entropy", von_neumann_entropy(&rho, nats))];
                out.push(ctx.pure("purity", purity(&rho)));
                Ok(out)
            } else {
                let p = probs.unwrap_or_default();
                Ok(vec![ctx.entropy("shannon_entropy", shannon_entropy(&p, nats)?)])
            }
        }
        QinfoCmd::Mix(args) => {
            let e = ensemble(&args)?;
            let rho = mix_ensemble(&e)?;
            let mut out: Vec<Record> = rho
                .eigenvalues()
                .iter()
                .enumerate()
                .map(|(i, l)| ctx.pure(&format!("eigenvalue_{}", i + 1), *l))
                .collect();
            out.push(ctx.entropy("von_neumann_entropy", von_neumann_entropy(&rho, nats)));
            out.push(ctx.entropy("shannon_entropy_of_preparation", shannon_entropy(&e.probabilities(), nats)?));
            out.push(ctx.info("holevo_cap", accessible_info_bound(&rho)));
            out.push(ctx.pure("purity", purity(&rho)));
            Ok(out)
        }
        QinfoCmd::Holevo(args) => {
            let rho = mix_ensemble(&ensemble(&args)?)?;
            Ok(vec![ctx.info("holevo_cap", accessible_info_bound(&rho))])
        }
    }
}

fn system_spec(ctx: &Ctx, a: &SystemArgs) -> CliResult<SystemSpec> {
    let e = ctx.resolve("energy", a.energy, Dimension::ENERGY)?;
    let r = ctx.resolve("radius", a.radius, Dimension::LENGTH)?;
    Ok(SystemSpec::new(e, r, a.dims)?)
}

fn bound(ctx: &Ctx, op: BoundCmd) -> CliResult<Vec<Record>> {
    let mut out = Vec::new();
    match op {
        BoundCmd::Holographic { radius, area, dims } => {
            let input = match (radius, area) {
                (Some(r), _) => HolographicInput::Radius(ctx.resolve("radius", r, Dimension::LENGTH)?),
                (None, Some(a)) => {
                    // In n ≠ 3 the boundary measure has no SI form; take bare numbers as Planck.
                    HolographicInput::Area(ctx.resolve("area", a, Dimension::AREA)?)
                }
                (None, None) => unreachable!("clap group requires one"),
            };
            let b = holographic_bound(input, dims)?;
            ctx.bound(&mut out, "holographic", &b);
        }
        BoundCmd::Universal(a) => {
            let s = system_spec(ctx, &a)?;
            ctx.bound(&mut out, "universal", &universal_bound(&s));
        }
        BoundCmd::Poorman { system, nu, zeta } => {
            let s = system_spec(ctx, &system)?;
            ctx.bound(&mut out, "poor-man", &poor_man_bound(&s, nu, zeta)?);
        }
        BoundCmd::Bousso(a) => {
            let s = system_spec(ctx, &a)?;
            ctx.bound(&mut out, "bousso", &bousso_bound(&s)?);
        }
        BoundCmd::Verlinde { system, casimir } => {
            let e = ctx.resolve("energy", system.energy, Dimension::ENERGY)?;
            let r = ctx.resolve("radius", system.radius, Dimension::LENGTH)?;
            match casimir {
                Some(c) => {
                    let c = ctx.resolve("casimir", c, Dimension::ENERGY)?;
                    let v = VerlindeInput::new(e, c, r, system.dims)?;
                    ctx.bound(&mut out, "verlinde", &verlinde_bound(&v));
                }
                None => ctx.bound(&mut out, "verlinde-max", &verlinde_max(e, r, system.dims)?),
            }
        }
        BoundCmd::KerrNewman { mass, spin, charge } => {
            let zero = Value { number: 0.0, suffix: None };
            let m = ctx.resolve("mass", mass, Dimension::MASS)?;
            let a = ctx.resolve("spin", spin.unwrap_or(zero), Dimension::LENGTH)?;
            let q = ctx.resolve("charge", charge.unwrap_or(zero), Dimension::LENGTH)?;
            let k = kerr_newman_check(&KerrNewmanSpec::new(m, a, q)?);
            out.push(ctx.qty("horizon_radius", Quantity::planck(k.horizon_radius, Dimension::LENGTH))?);
            out.push(ctx.entropy("horizon_entropy", k.entropy));
            out.push(ctx.entropy("bound_2pi_m_r", k.bound));
            let mut sat = ctx.pure("saturated", if k.saturated { 1.0 } else { 0.0 });
            sat.note = Some(if k.saturated { "S = 2πMr₊" } else { "S < 2πMr₊" }.into());
            out.push(sat);
        }
        BoundCmd::Compare(a) => {
            let s = system_spec(ctx, &a)?;
            let c = tightest_bound(&s)?;
            ctx.bound(&mut out, "universal", &c.universal);
            ctx.bound(&mut out, "holographic", &c.holographic);
            let mut ratio = ctx.pure("holographic_over_universal", c.ratio);
            ratio.note = Some(format!("tighter: {:?}", c.tighter).to_lowercase());
            if let Some(n) = &c.note {
                ratio.note = ratio.note.map(|t| format!("{t}; {n}"));
            }
            out.push(ratio);
        }
    }
    Ok(out)
}

fn channel(ctx: &Ctx, op: ChannelCmd) -> CliResult<Vec<Record>> {
    let mut out = Vec::new();
    match op {
        ChannelCmd::Pendry { power, statistics } => {
            let p = ctx.resolve("power", power, Dimension::POWER)?;
            let r = pendry_rate(p, statistics.into())?;
            out.push(ctx.entropy_rate("entropy_rate", r.entropy_rate)?);
            let mut info = ctx.info_rate("info_rate", r.info_rate)?;
            info.note = Some("one-channel cap on information flow".into());
            out.push(info);
        }
        ChannelCmd::Blackbody { dims, measure, temperature, statistics } => {
            let dim = match dims {
                2 => Dimension::LENGTH,
                _ => Dimension::AREA,
            };
            let m = ctx.resolve("measure", measure, dim)?;
            let t = ctx.resolve("temperature", temperature, Dimension::TEMPERATURE)?;
            let r = blackbody_rate(&EmitterSpec::new(dims, m, t)?, statistics.into())?;
            out.push(ctx.qty("power", r.power)?);
            out.push(ctx.entropy_rate("entropy_rate", r.entropy_rate)?);
            out.push(ctx.entropy_rate("entropy_rate_from_power", r.entropy_rate_from_power)?);
        }
        ChannelCmd::Pulse { energy, duration, alpha } => {
            let e = ctx.resolve("energy", energy, Dimension::ENERGY)?;
            let tau = ctx.resolve("duration", duration, Dimension::TIME)?;
            let mut p = PulseSpec::new(e, tau)?;
            if let Some(a) = alpha {
                p = redshift_transform(&p, a)?;
                out.push(ctx.qty("energy", p.energy())?);
                out.push(ctx.qty("duration", p.duration())?);
            }
            let b = pulse_info_bound(&p)?;
            out.push(ctx.pure("xi", p.xi()));
            out.push(ctx.pure("self_gravity", p.self_gravity()));
            out.push(ctx.info("linear", b.linear));
            out.push(ctx.info("steady", b.steady));
            let mut env = ctx.info("envelope", b.envelope);
            env.note = Some(if b.linear <= b.steady { "linear regime" } else { "steady regime" }.into());
            out.push(env);
        }
        ChannelCmd::Modes { temperature, statistics, dispersion, energy } => {
            let t = ctx.resolve("temperature", temperature, Dimension::TEMPERATURE)?;
            let stats: Statistics = statistics.into();
            let d = match dispersion {
                DispersionArg::Linear(c) => Dispersion::linear(c)?,
                DispersionArg::Power(a, k) => Dispersion::power_law(a, k)?,
            };
            let c = ChannelSpec::new(stats, d);
            let (p, qp) = one_way_power_quadrature(&c, t)?;
            let (s, qs) = one_way_entropy_rate_quadrature(&c, t)?;
            let mut pr = ctx.qty("one_way_power", p)?;
            pr.note = Some(format!("quadrature: {} evaluations, rel. error ≤ {:.1e}", qp.evaluations, qp.error_estimate / qp.value));
            out.push(pr);
            out.push(ctx.qty("closed_form_power", thermal_power(t, stats)?)?);
            let mut sr = ctx.entropy_rate("one_way_entropy_rate", s)?;
            sr.note = Some(format!("quadrature: {} evaluations, rel. error ≤ {:.1e}", qs.evaluations, qs.error_estimate / qs.value));
            out.push(sr);
            out.push(ctx.pure("entropy_rate_over_power_per_temperature", s.value() * t.value() / p.value()));
            if let Some(e) = energy {
                let e = ctx.resolve("energy", e, Dimension::ENERGY)?;
                out.push(ctx.entropy("mode_entropy", mode_entropy(e, t, stats)?));
            }
        }
    }
    Ok(out)
}

fn hole(ctx: &Ctx, mass: Value) -> CliResult<BlackHole> {
    Ok(BlackHole::new(ctx.resolve("mass", mass, Dimension::MASS)?)?)
}

fn bh(ctx: &Ctx, op: BhCmd) -> CliResult<Vec<Record>> {
    let mut out = Vec::new();
    match op {
        BhCmd::Temperature { mass } => {
            out.push(ctx.qty("hawking_temperature", hawking_temperature(&hole(ctx, mass)?))?);
        }
        BhCmd::Entropy { mass } => {
            let b = hole(ctx, mass)?;
            out.push(ctx.qty("horizon_area", b.horizon_area())?);
            ctx.bound(&mut out, "horizon_entropy", &bh_entropy(&b));
        }
        BhCmd::Flux { mass, r, species_count } => {
            let b = hole(ctx, mass)?;
            let r = ctx.resolve("r", r, Dimension::LENGTH)?;
            out.push(ctx.qty("flux", hawking_flux(r, &b, species_count)?)?);
            out.push(ctx.qty("luminosity", luminosity(&b, species_count)?)?);
        }
        BhCmd::Emission { mass, species } => {
            let b = hole(ctx, mass)?;
            let sp = species.emission();
            out.push(ctx.qty("hawking_temperature", hawking_temperature(&b))?);
            out.push(ctx.qty("power", emission_power(&b, &sp)?)?);
            out.push(ctx.entropy_rate("entropy_rate", emission_entropy_rate(&b, &sp)?)?);
        }
        BhCmd::Ratio { species } => {
            let sp = species.emission();
            let unit = Quantity::planck(1.0, Dimension::POWER);
            out.push(ctx.pure("hole_coefficient", bh_rate_vs_power(unit, &sp)?.value()));
            out.push(ctx.pure("channel_coefficient", pendry_rate(unit, sp.statistics)?.entropy_rate.value()));
            let mut r = ctx.pure("coefficient_ratio", coefficient_ratio(&sp));
            r.note = Some(format!("{} ({})", sp.name, sp.statistics));
            out.push(r);
        }
        BhCmd::Channels { mass, distance, area, wavenumber, solid_angle } => match (mass, distance) {
            (Some(m), Some(d)) => {
                let b = hole(ctx, m)?;
                let d = ctx.resolve("distance", d, Dimension::LENGTH)?;
                let w = match area {
                    Some(a) => bh_channel_count(&b, d, ctx.resolve("area", a, Dimension::AREA)?)?,
                    None => bh_channel_bound(&b, d)?,
                };
                out.push(ctx.pure("channels", w));
            }
            _ => {
                let (Some(a), Some(k), Some(dw)) = (area, wavenumber, solid_angle) else {
                    return Err(CliError::Usage(
                        "give --mass and --distance, or all of --area, --wavenumber and --solid-angle".into(),
                    ));
                };
                let a = ctx.resolve("area", a, Dimension::AREA)?;
                let k = ctx.resolve("wavenumber", k, Dimension::WAVENUMBER)?;
                let c = ChannelCountSpec::new(a, k, dw)?;
                out.push(ctx.pure("channels", channel_count(&c)));
            }
        },
        BhCmd::Dump { power, rate, channels } => {
            if let Some(p) = power {
                let p = ctx.resolve("power", p, Dimension::POWER)?;
                let i = dump_rate(p, channels)?;
                out.push(ctx.info_rate("dump_rate", i)?);
            } else if let Some(i) = rate {
                let i = ctx.resolve("rate", i, Dimension::RATE)?;
                out.push(ctx.qty("power_per_channel", power_for_rate(i, channels)?)?);
            }
        }
    }
    Ok(out)
}

fn gedanken(ctx: &Ctx, op: GedankenCmd) -> CliResult<Vec<Record>> {
    let GedankenCmd::Audit { energy, radius, energy_radius_product, zeta, species_count, n_eff } = op;
    let r = match radius {
        Some(r) => ctx.resolve("radius", r, Dimension::LENGTH)?,
        None => Quantity::planck(1.0, Dimension::LENGTH),
    };
    let e = match (energy, energy_radius_product) {
        (Some(e), _) => ctx.resolve("energy", e, Dimension::ENERGY)?,
        (None, Some(er)) => {
            let er = to_internal(er, Dimension::ENERGY * Dimension::LENGTH, ctx.system)?;
            Quantity::planck(er.value() / r.value(), Dimension::ENERGY)
        }
        (None, None) => unreachable!("clap group requires one"),
    };
    let mut cfg = GedankenConfig::new(e, r, zeta, species_count)?;
    if let Some(n) = n_eff {
        cfg = cfg.with_n_eff(n)?;
    }
    let rep = audit(&cfg)?;
    let mut out = vec![
        ctx.qty("mass", Quantity::planck(rep.mass, Dimension::MASS))?,
        ctx.qty("hawking_temperature", Quantity::planck(rep.hawking_temperature, Dimension::TEMPERATURE))?,
        ctx.qty("radiation_time", Quantity::planck(rep.radiation_time, Dimension::TIME))?,
        ctx.qty("drop_distance", Quantity::planck(rep.distance, Dimension::LENGTH))?,
        ctx.pure("distance_over_mass", rep.distance_over_mass),
        ctx.pure("force_ratio_at_cap", rep.force_ratio_at_cap),
        ctx.pure("n_eff_cap", rep.n_eff_cap),
    ];
    if let Some(f) = rep.force_ratio {
        out.push(ctx.pure("force_ratio", f));
    }
    for f in &rep.flags {
        let mut r = ctx.pure(&format!("flag:{}", f.name), f.value);
        r.note = Some(format!("{}: {}", if f.satisfied { "pass" } else { "fail" }, f.condition));
        out.push(r);
    }
    let mut all = ctx.pure("all_flags_pass", if rep.all_pass() { 1.0 } else { 0.0 });
    all.note = Some(if rep.all_pass() { "pass" } else { "fail" }.into());
    out.push(all);
    Ok(out)
}

fn curve(ctx: &Ctx, a: CurveArgs) -> CliResult<Vec<CurveRow>> {
    if a.samples < 2 {
        return Err(CliError::Usage(format!("--samples must be ≥ 2, got {}", a.samples)));
    }
    let lo = ctx.resolve("p-min", a.p_min, Dimension::POWER)?.value();
    let hi = ctx.resolve("p-max", a.p_max, Dimension::POWER)?.value();
    if !(lo > 0.0 && hi > lo) {
        return Err(CliError::Usage("power range must satisfy 0 < p-min < p-max".into()));
    }
    let stats: Statistics = a.statistics.into();
    let measure = match a.quantity {
        CurveKind::Blackbody3d => ctx.resolve("measure", a.measure, Dimension::AREA)?.value(),
        CurveKind::Blackbody2d => ctx.resolve("measure", a.measure, Dimension::LENGTH)?.value(),
        _ => 0.0,
    };
    let species = a.species.emission();
    let power_unit = ctx.unit(Dimension::POWER);
    let rate_unit = format!("{} {}", ctx.entropy.label(), ctx.unit(Dimension::RATE));
    logspace(lo, hi, a.samples)
        .into_iter()
        .map(|p| {
            let pq = Quantity::planck(p, Dimension::POWER);
            let s = match a.quantity {
                CurveKind::Pendry => pendry_rate(pq, stats)?.entropy_rate.value(),
                CurveKind::Blackbody3d => blackbody_entropy_rate_from_power(3, measure, p, stats)?,
                CurveKind::Blackbody2d => blackbody_entropy_rate_from_power(2, measure, p, stats)?,
                CurveKind::Blackhole => bh_rate_vs_power(pq, &species)?.value(),
            };
            let rate = from_internal(Quantity::planck(s, Dimension::RATE), ctx.system)?;
            Ok(CurveRow {
                power: from_internal(pq, ctx.system)?,
                entropy_rate: ctx.entropy.from_nats(rate),
                power_unit: power_unit.clone(),
                rate_unit: rate_unit.clone(),
                system: ctx.system.to_string(),
                entropy_unit: ctx.entropy.label(),
            })
        })
        .collect()
}
