//! How fast information can escape a black hole's neighbourhood when it is
//! dumped through the available channels at a fixed power.

use holobound::blackhole::{
    bh_channel_bound, bh_channel_count, bh_entropy, borderline_wavenumber, dump_rate, hawking_temperature, luminosity,
    power_for_rate, BlackHole,
};
use holobound::units::{codata, from_internal, to_internal, Dimension, UnitSystem};

fn main() -> holobound::Result<()> {
    let m = to_internal(codata::SOLAR_MASS, Dimension::MASS, UnitSystem::Si)?;
    let bh = BlackHole::new(m)?;
    let t = hawking_temperature(&bh);
    println!("solar-mass hole");
    println!("  T_H        {:.4e} K", from_internal(t, UnitSystem::Si)?);
    println!("  entropy    {:.4e} bits", bh_entropy(&bh).bits);
    println!("  luminosity {:.4e} W (one species)", from_internal(luminosity(&bh, 1.0)?, UnitSystem::Si)?);
    println!("  k_border   {:.4e} per Planck length", borderline_wavenumber(&bh));

    println!();
    let power = to_internal(1.0, Dimension::POWER, UnitSystem::Si)?;
    let d_si = 25.0 * from_internal(bh.horizon_radius(), UnitSystem::Si)? / 2.0;
    let d = to_internal(d_si, Dimension::LENGTH, UnitSystem::Si)?;
    println!("transmitter at d = 25M = {:.0} km, 1 W per channel", d_si / 1e3);
    for a in [1e8, 1e9, 1e10] {
        let area = to_internal(a, Dimension::AREA, UnitSystem::Si)?;
        let channels = bh_channel_count(&bh, d, area)?;
        match dump_rate(power, channels) {
            Ok(rate) => println!(
                "  area {a:<5.0e} m²  channels {channels:>9.3e}  rate {:.4e} bits/s",
                from_internal(rate, UnitSystem::Si)?
            ),
            Err(e) => println!("  area {a:<5.0e} m²  channels {channels:>9.3e}  ({e})"),
        }
    }
    let cap = bh_channel_bound(&bh, d)?;
    println!("  whole sphere     channels {cap:>9.3e}  (the 4π² ceiling, any distance)");

    let want = to_internal(1e9, Dimension::RATE, UnitSystem::Si)?;
    let need = power_for_rate(want, 1.0)?;
    println!();
    println!("one channel at 1 Gbit/s needs {:.4e} W", from_internal(need, UnitSystem::Si)?);
    Ok(())
}
