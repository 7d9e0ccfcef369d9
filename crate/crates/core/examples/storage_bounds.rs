//! Compares the entropy bounds on a handful of systems, from a hydrogen atom to
//! a solar-mass black hole.

use holobound::bounds::{
    holographic_bound, kerr_newman_check, tightest_bound, universal_bound, HolographicInput, KerrNewmanSpec,
    SystemSpec,
};
use holobound::units::{codata, to_internal, Dimension, UnitSystem};

fn main() -> holobound::Result<()> {
    let c2 = codata::SPEED_OF_LIGHT.powi(2);
    let systems = [
        ("hydrogen atom", 1.6735e-27 * c2, 5.29e-11),
        ("1 kg, 1 m", 1.0 * c2, 1.0),
        ("Earth", 5.972e24 * c2, 6.371e6),
        ("Sun", codata::SOLAR_MASS * c2, 6.957e8),
    ];

    println!("{:<16} {:>12} {:>12} {:>10}", "system", "universal", "holographic", "tighter");
    for (name, e, r) in systems {
        let e = to_internal(e, Dimension::ENERGY, UnitSystem::Si)?;
        let r = to_internal(r, Dimension::LENGTH, UnitSystem::Si)?;
        let cmp = tightest_bound(&SystemSpec::new(e, r, 3)?)?;
        println!(
            "{:<16} {:>12.3e} {:>12.3e} {:>10?}",
            name, cmp.universal.bits, cmp.holographic.bits, cmp.tighter
        );
    }

    // A Schwarzschild hole saturates both bounds at once.
    let m = to_internal(codata::SOLAR_MASS, Dimension::MASS, UnitSystem::Si)?.value();
    let spec = SystemSpec::planck(m, 2.0 * m, 3)?;
    let area = holobound::units::Quantity::planck(16.0 * std::f64::consts::PI * m * m, Dimension::AREA);
    println!();
    println!("solar-mass hole, universal   {:.4e} bits", universal_bound(&spec).bits);
    println!("solar-mass hole, holographic {:.4e} bits", holographic_bound(HolographicInput::Area(area), 3)?.bits);

    println!();
    println!("Kerr-Newman horizons against 2πM r₊ (M = 1):");
    for (a, q) in [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.6, 0.6), (1.0, 0.0)] {
        let k = kerr_newman_check(&KerrNewmanSpec::planck(1.0, a, q)?);
        println!(
            "  a={a:.1} Q={q:.1}  S={:.5}  bound={:.5}  S/bound={:.5}",
            k.entropy,
            k.bound,
            k.entropy / k.bound
        );
    }
    Ok(())
}
