//! Information bounds on a pulse of energy E and duration τ against ξ = Eτ.
//! Brief pulses follow the linear bound, long ones the steady one-channel rate.

use holobound::channel::{pulse_info_bound, redshift_transform, PulseSpec, PULSE_CROSSOVER_XI};

fn main() -> holobound::Result<()> {
    println!("crossover ξ = 1/3π = {PULSE_CROSSOVER_XI:.6}");
    println!("{:>10} {:>12} {:>12} {:>12}", "ξ", "linear", "steady", "envelope");
    for k in -4..=4 {
        let xi = 10f64.powi(k) * PULSE_CROSSOVER_XI;
        let b = pulse_info_bound(&PulseSpec::planck(xi, 1.0)?)?;
        println!("{xi:>10.3e} {:>12.4e} {:>12.4e} {:>12.4e}", b.linear, b.steady, b.envelope);
    }

    // Sending the pulse up or down a gravitational well rescales E and τ
    // oppositely, so the bits it can carry stay the same.
    let pulse = PulseSpec::planck(3.0, 2.0)?;
    println!();
    for alpha in [0.01, 0.5, 1.0, 2.0, 100.0] {
        let shifted = redshift_transform(&pulse, alpha)?;
        let b = pulse_info_bound(&shifted)?;
        println!(
            "α={alpha:<6} E={:<10.4e} τ={:<10.4e} envelope {:.12} bits",
            shifted.energy().value(),
            shifted.duration().value(),
            b.envelope
        );
    }
    Ok(())
}
