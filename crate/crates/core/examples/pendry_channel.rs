//! The one-channel capacity does not depend on how energy relates to momentum.
//! The thermal power and entropy rate are integrated for several dispersion
//! laws and compared with the closed forms.

use holobound::channel::{
    one_way_entropy_rate, one_way_power, pendry_rate, thermal_power, ChannelSpec, Dispersion, Statistics,
};
use holobound::units::{Dimension, Quantity};

fn main() -> holobound::Result<()> {
    let t = Quantity::planck(0.7, Dimension::TEMPERATURE);
    let laws = [
        Dispersion::linear(1.0)?,
        Dispersion::linear(0.3)?,
        Dispersion::power_law(1.0, 2.0)?,
        Dispersion::power_law(2.5, 0.5)?,
        // Kinetic energy of a mass-½ particle, written to avoid cancellation.
        Dispersion::new("massive, kinetic", |p: f64| p * p / ((p * p + 0.25).sqrt() + 0.5))?,
    ];

    for stats in [Statistics::Boson, Statistics::Fermion] {
        let closed = thermal_power(t, stats)?.value();
        println!("{stats:?}: closed-form power {closed:.12}");
        for law in &laws {
            let channel = ChannelSpec::new(stats, law.clone());
            let p = one_way_power(&channel, t)?;
            let s = one_way_entropy_rate(&channel, t)?;
            let limit = pendry_rate(p, stats)?.entropy_rate.value();
            println!(
                "  {:<30} P={:.12} (rel {:+.1e})  Ṡ={:.12}  Ṡ/Ṡmax={:.12}",
                law.label(),
                p.value(),
                p.value() / closed - 1.0,
                s.value(),
                s.value() / limit
            );
        }
    }

    println!();
    println!("capacity at a given power (bits per Planck time):");
    for p in [1e-6, 1e-3, 1.0] {
        let r = pendry_rate(Quantity::planck(p, Dimension::POWER), Statistics::Boson)?;
        println!("  P={p:>7.0e}  {:.6e}", r.info_rate.value());
    }
    Ok(())
}
