//! Audits the lowering of a hot box into a black hole: the hole must survive
//! long enough, the box must fall from far enough away, and Hawking radiation
//! pressure must stay negligible.

use holobound::gedanken::{audit, worst_case_distance_over_mass, GedankenConfig, DEFAULT_ZETA};

fn main() -> holobound::Result<()> {
    let report = audit(&GedankenConfig::planck(1.0, 1.0, DEFAULT_ZETA, 1.0)?)?;
    println!("E=R=1, ζ={DEFAULT_ZETA}, one species");
    println!("  hole mass           {:.6}", report.mass);
    println!("  Hawking temperature {:.6e}", report.hawking_temperature);
    println!("  radiation time      {:.6e}", report.radiation_time);
    println!("  drop distance d/M   {:.4}", report.distance_over_mass);
    println!("  force ratio at cap  {:.4e}", report.force_ratio_at_cap);
    for f in &report.flags {
        println!(
            "  [{}] {:<16} {:<22} value {:.4e} threshold {:.4e}",
            if f.satisfied { "ok" } else { "!!" },
            f.name,
            f.condition,
            f.value,
            f.threshold
        );
    }

    println!();
    println!("d/M against ζ and species count:");
    for zeta in [1.0, 2.0, 5.0, 10.0] {
        let row: Vec<String> = [1.0, 10.0, 100.0]
            .iter()
            .map(|&n| {
                let r = audit(&GedankenConfig::planck(1.0, 1.0, zeta, n).unwrap()).unwrap();
                format!("{:>9.3}", r.distance_over_mass)
            })
            .collect();
        println!("  ζ={zeta:>4}  {}", row.join(" "));
    }
    println!("smallest d/M over the allowed parameter range: {:.3}", worst_case_distance_over_mass());
    Ok(())
}
