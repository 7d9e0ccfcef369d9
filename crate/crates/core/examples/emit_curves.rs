//! Writes entropy rate against power for the one-channel limit, a hot surface,
//! a hot wire and a black hole as CSV on stdout, ready for plotting on log
//! axes.

use holobound::blackhole::{bh_rate_vs_power, SpeciesEmission};
use holobound::channel::{blackbody_entropy_rate_from_power, pendry_rate, Statistics};
use holobound::numerics::logspace;
use holobound::units::{Dimension, Quantity};

fn main() -> holobound::Result<()> {
    let mut out = csv::Writer::from_writer(std::io::stdout());
    out.write_record(["curve", "power", "entropy_rate"]).map_err(io)?;
    let photon = SpeciesEmission::photon();
    for p in logspace(1e-8, 1.0, 60) {
        let q = Quantity::planck(p, Dimension::POWER);
        let rows = [
            ("one-channel", pendry_rate(q, Statistics::Boson)?.entropy_rate.value()),
            ("surface", blackbody_entropy_rate_from_power(3, 1.0, p, Statistics::Boson)?),
            ("wire", blackbody_entropy_rate_from_power(2, 1.0, p, Statistics::Boson)?),
            ("black-hole", bh_rate_vs_power(q, &photon)?.value()),
        ];
        for (name, s) in rows {
            out.write_record([name.to_string(), format!("{p:.9e}"), format!("{s:.9e}")]).map_err(io)?;
        }
    }
    out.flush().map_err(|e| io(e.into()))?;
    Ok(())
}

fn io(e: csv::Error) -> holobound::Error {
    holobound::Error::Parse(e.to_string())
}
