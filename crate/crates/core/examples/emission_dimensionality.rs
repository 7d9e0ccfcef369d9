//! Black-body emission from a surface (three space dimensions) against a wire
//! (two), and from a black hole. The log-log slope of entropy rate against
//! power is fit numerically and compared with n/(n+1).

use holobound::blackhole::{bh_rate_vs_power, coefficient_ratio, emission_entropy_rate, emission_power, BlackHole, SpeciesEmission};
use holobound::channel::{blackbody_rate, EmitterSpec, Statistics};
use holobound::numerics::{fit_loglog_slope, logspace};

fn main() -> holobound::Result<()> {
    for n in [2u32, 3] {
        for stats in [Statistics::Boson, Statistics::Fermion] {
            let mut pts = Vec::new();
            for t in logspace(1e-3, 1.0, 40) {
                let r = blackbody_rate(&EmitterSpec::planck(n, 1.0, t)?, stats)?;
                pts.push((r.power.value(), r.entropy_rate.value()));
            }
            let slope = fit_loglog_slope(&pts)?;
            println!(
                "n={n} {stats:<8?} slope {:.10} (expected {:.10})",
                slope,
                f64::from(n) / f64::from(n + 1)
            );
        }
    }

    println!();
    for species in [SpeciesEmission::photon(), SpeciesEmission::neutrino()] {
        let mut pts = Vec::new();
        // Lighter holes are hotter, so walk the masses downwards.
        for m in logspace(1.0, 1e4, 40).into_iter().rev() {
            let bh = BlackHole::planck(m)?;
            pts.push((emission_power(&bh, &species)?.value(), emission_entropy_rate(&bh, &species)?.value()));
        }
        let slope = fit_loglog_slope(&pts)?;
        let at_unit = bh_rate_vs_power(holobound::units::Quantity::planck(1.0, holobound::units::Dimension::POWER), &species)?;
        println!(
            "hole, {:<9} slope {:.10}  Ṡ(P=1)={:.5}  coefficient / one-channel = {:.4}",
            species.name,
            slope,
            at_unit.value(),
            coefficient_ratio(&species)
        );
    }
    Ok(())
}
