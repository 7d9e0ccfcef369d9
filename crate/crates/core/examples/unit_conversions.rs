//! Moving quantities across the SI, geometrized and Planck unit systems.

use holobound::units::{codata, constant, from_internal, to_internal, unit_label, Dimension, UnitSystem};

fn main() -> holobound::Result<()> {
    println!("constants ({})", codata::TABLE_VERSION);
    for name in ["c", "G", "hbar", "k_B"] {
        let q = constant(name)?;
        println!("  {name:<5} {:.9e} {}", from_internal(q, UnitSystem::Si)?, unit_label(q.dimension(), UnitSystem::Si));
    }

    println!();
    let inputs = [
        ("solar mass", codata::SOLAR_MASS, Dimension::MASS),
        ("1 metre", 1.0, Dimension::LENGTH),
        ("1 second", 1.0, Dimension::TIME),
        ("1 joule", 1.0, Dimension::ENERGY),
        ("1 watt", 1.0, Dimension::POWER),
        ("1 kelvin", 1.0, Dimension::TEMPERATURE),
    ];
    for (name, v, dim) in inputs {
        let q = to_internal(v, dim, UnitSystem::Si)?;
        let geo = match from_internal(q, UnitSystem::Geometrized) {
            Ok(g) => match unit_label(dim, UnitSystem::Geometrized) {
                l if l.is_empty() => format!("{g:.6e} (dimensionless)"),
                l => format!("{g:.6e} {l}"),
            },
            Err(e) => format!("({e})"),
        };
        println!("  {name:<11} planck {:>12.6e}   geo {geo}", q.value());
    }

    let dim = Dimension::ENERGY / Dimension::TIME;
    println!();
    println!("energy / time = {dim}, same as power: {}", dim == Dimension::POWER);
    let err = to_internal(1.0, Dimension::LENGTH, UnitSystem::Si)?.checked_add(to_internal(1.0, Dimension::TIME, UnitSystem::Si)?);
    println!("metre + second: {}", err.unwrap_err());
    Ok(())
}
